//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use mucrit::cli::all_suites;
use mucrit::dto::{to_json, Report, SuiteDto};
use mucrit::suites::{self, DeskBounds};
use mucrit::Runner;

struct Line {
    n: u32,
    title: &'static str,
    ok: bool,
    detail: String,
}

fn failing(s: &SuiteDto) -> String {
    let bad: Vec<String> = s.checks.iter().filter(|c| !c.ok).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if bad.is_empty() {
        format!("{} checks", s.checks.len())
    } else {
        bad.join(" | ")
    }
}

/// `limit` is a hard bound where the criterion states one.
fn timed<F: FnOnce() -> SuiteDto>(n: u32, title: &'static str, limit: Option<Duration>, f: F) -> Line {
    let t = Instant::now();
    let s = f();
    let el = t.elapsed();
    let in_time = limit.is_none_or(|l| el <= l);
    let mut detail = format!("{} [{:.2?}", failing(&s), el);
    if let Some(l) = limit {
        detail.push_str(&format!(" / limit {l:?}"));
    }
    detail.push(']');
    Line { n, title, ok: s.ok && in_time, detail }
}

fn main() {
    let seed = 0;
    let runner = Runner::new(1).expect("pool");
    let mut lines = vec![
        timed(1, "F41 bundle", Some(Duration::from_secs(1)), suites::f41_bundle),
        timed(2, "Lev-Sonn scan, alpha <= 3000", None, || suites::levson(&runner, 3000).0),
        timed(3, "symbolic identities", Some(Duration::from_secs(5)), || suites::identities(&runner)),
        timed(4, "differential operator", None, || suites::operator(&runner, seed)),
        timed(5, "residue suite", Some(Duration::from_secs(30)), || suites::residues(&runner, seed)),
        timed(6, "desk-scale searches", None, || suites::desk(&runner, DeskBounds::default())),
        timed(7, "cross-implementation oracles", None, || suites::oracles(&runner, seed)),
    ];

    let t = Instant::now();
    let outputs: Vec<String> = [1usize, 4, 16]
        .iter()
        .map(|&threads| {
            let r = Runner::new(threads).expect("pool");
            let rep = Report::suites("acceptance", all_suites(&r, seed, 3000, DeskBounds::default()));
            to_json(&rep).expect("json")
        })
        .collect();
    let same = outputs.windows(2).all(|w| w[0] == w[1]);
    lines.push(Line {
        n: 8,
        title: "determinism across 1/4/16 threads",
        ok: same,
        detail: format!("{} bytes of JSON, identical: {same} [{:.2?}]", outputs[0].len(), t.elapsed()),
    });

    let mut all = true;
    for l in &lines {
        all &= l.ok;
        println!("criterion {}: {} {} -- {}", l.n, if l.ok { "PASS" } else { "FAIL" }, l.title, l.detail);
    }
    let passed = lines.iter().filter(|l| l.ok).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());
    if !all {
        std::process::exit(1);
    }
}
