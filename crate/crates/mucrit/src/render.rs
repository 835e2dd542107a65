//! Text, JSON and CSV renderings of a [`Report`].

use std::fmt::Write as _;

use clap::ValueEnum;

use crate::dto::{to_json, Report, WitnessDto};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn witness_text(w: &WitnessDto) -> String {
    let set = |v: &[String]| format!("{{{}}}", v.join(","));
    match w {
        WitnessDto::Diffset { set: s, exact } => {
            format!("{} {}", set(s), if *exact { "exact" } else { "strict" })
        }
        WitnessDto::Sumset { a, b, critical, parity_even } => {
            let parity = match parity_even {
                Some(true) => " parity=even",
                Some(false) => " parity=odd",
                None => "",
            };
            format!("A={} B={} critical={critical}{parity}", set(a), set(b))
        }
        WitnessDto::Threefold { a, b, c } => format!("A={} B={} C={}", set(a), set(b), set(c)),
        WitnessDto::Levson { p, alpha, n } => format!("p={p} alpha={alpha} n={n}"),
        WitnessDto::Set { set: s, cubic } => match cubic {
            Some(c) => format!("{} cubic={c}", set(s)),
            None => set(s),
        },
    }
}

pub fn text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mucrit {}: {}", r.command, status(r.ok));
    for s in &r.suites {
        let _ = writeln!(out, "[{}] {}", s.name, status(s.ok));
        for c in &s.checks {
            let _ = writeln!(out, "  {:<4} {:<32} {}", status(c.ok), c.name, c.detail);
        }
    }
    if let Some(s) = &r.search {
        let _ = write!(out, "search {}", s.kind);
        if let Some(p) = &s.modulus {
            let _ = write!(out, " p={p}");
        }
        for (k, v) in &s.params {
            let _ = write!(out, " {k}={v}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "verdict: {}", s.verdict);
        if let Some(reason) = &s.reason {
            let _ = writeln!(out, "reason: {reason}");
        }
        let _ = writeln!(out, "branches: {}  examined: {}  pruned: {}", s.branches, s.examined, s.pruned);
        let _ = writeln!(out, "witnesses: {}", s.witnesses.len());
        for w in &s.witnesses {
            let _ = writeln!(out, "  {}", witness_text(w));
        }
        for n in &s.notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    out
}

/// One row per check or witness: `section,name,ok,detail`.
pub fn csv(r: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["section", "name", "ok", "detail"])?;
    for s in &r.suites {
        for c in &s.checks {
            w.write_record([s.name.as_str(), c.name.as_str(), &c.ok.to_string(), c.detail.as_str()])?;
        }
    }
    if let Some(s) = &r.search {
        let summary = format!("examined={} pruned={} branches={}", s.examined, s.pruned, s.branches);
        w.write_record([s.kind.as_str(), "verdict", &r.ok.to_string(), &format!("{} {summary}", s.verdict)])?;
        for (i, wit) in s.witnesses.iter().enumerate() {
            w.write_record([s.kind.as_str(), &format!("witness-{i}"), "", &witness_text(wit)])?;
        }
        for n in &s.notes {
            w.write_record([s.kind.as_str(), "note", "", n.as_str()])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

pub fn render(r: &Report, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(text(r)),
        Format::Json => Ok(to_json(r)?),
        Format::Csv => csv(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dto::{CheckDto, SuiteDto};

    #[test]
    fn csv_quotes_commas() {
        let r = Report::suites("x", vec![SuiteDto::new("s", vec![CheckDto::new("c", true, "a, b")])]);
        let out = csv(&r).unwrap();
        assert_eq!(out, "section,name,ok,detail\ns,c,true,\"a, b\"\n");
        assert!(text(&r).starts_with("mucrit x: PASS"));
    }
}
