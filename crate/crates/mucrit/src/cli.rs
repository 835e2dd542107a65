//! Argument parsing and dispatch. Exit codes: 0 all checks passed or search
//! completed as expected, 1 a check failed or an unexpected witness turned up,
//! 2 usage or configuration error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use mucrit_core::search::{
    threefold_search, DiffsetSearch, LevSonnScan, Problem1Scan, Problem2Scan, SumsetConfig, SumsetSearch,
};
use mucrit_core::PrimeField;

use crate::dto::{Report, SearchDto, WitnessDto};
use crate::error::{CliError, Result};
use crate::render::{render, Format};
use crate::runner::Runner;
use crate::suites::{self, DeskBounds};

#[derive(Debug, Parser)]
#[command(name = "mucrit", version, about = "Critical pairs, difference sets and sumsets in prime fields")]
pub struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The {0,1,9,32,40} example in F_41.
    VerifyF41,
    /// Exact symbolic identities and the differential operator checks.
    VerifyIdentities,
    /// Sum-of-residues checks on random split forms and the named forms.
    VerifyResidues,
    /// Cross-checks between independent computations of the same quantity.
    VerifyOracles,
    /// Exhaustive small-prime searches behind the main theorems.
    VerifyDesk {
        #[arg(long, default_value_t = 61)]
        sumset_p_max: u64,
        #[arg(long, default_value_t = 200)]
        diffset_p_max: u64,
    },
    /// Every suite above plus the Lev-Sonn scan.
    VerifyAll {
        #[arg(long, default_value_t = 3000)]
        alpha_max: u64,
    },
    #[command(subcommand)]
    Search(SearchCmd),
    /// Checks for a single lemma, e.g. `check lemma13`.
    Check { lemma: String },
}

#[derive(Debug, Subcommand)]
pub enum SearchCmd {
    /// Sets A with A - A inside mu_d ∪ {0} and |A|(|A|-1) = d.
    Diffset {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Decompositions A + B = mu_d.
    Sumset {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 128)]
        max_p: u64,
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Decompositions A + B + C = mu_d.
    Threefold {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 128)]
        max_p: u64,
    },
    /// Primes 2a(a-1)+1 satisfying the binomial congruence.
    Levson {
        #[arg(long, default_value_t = 3000)]
        alpha_max: u64,
    },
    /// Sets satisfying the quadratic reciprocal relation at every point.
    Problem1 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha_max: usize,
    },
    /// Sets with prod_{a' != a} (a - a')^alpha = -1 at every point.
    Problem2 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha: usize,
    },
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn field(p: u64) -> Result<PrimeField> {
    PrimeField::new(p).map_err(usage)
}

/// Reports for all suites used by the acceptance run, in a fixed order.
pub fn all_suites(runner: &Runner, seed: u64, alpha_max: u64, bounds: DeskBounds) -> Vec<crate::SuiteDto> {
    vec![
        suites::f41_bundle(),
        suites::levson(runner, alpha_max).0,
        suites::identities(runner),
        suites::operator(runner, seed),
        suites::residues(runner, seed),
        suites::desk(runner, bounds),
        suites::oracles(runner, seed),
    ]
}

fn search_report(cmd: &SearchCmd, runner: &Runner) -> Result<Report> {
    Ok(match *cmd {
        SearchCmd::Diffset { p, d, node_budget } => {
            let mut s = DiffsetSearch::for_subgroup(field(p)?, d).map_err(usage)?;
            if let Some(b) = node_budget {
                s = s.with_node_budget(b);
            }
            let r = runner.search(&s)?;
            let ok = d == 2 || d == 6 || r.witnesses.iter().all(|w| !w.exact);
            Report::search("search diffset", SearchDto::from_result(&r, Some(p), &[("d", d.to_string())]), ok)
        }
        SearchCmd::Sumset { p, d, max_p, node_budget } => {
            let mut cfg = SumsetConfig { max_p, ..SumsetConfig::default() };
            if let Some(b) = node_budget {
                cfg.node_budget = b;
            }
            let s = SumsetSearch::for_subgroup(field(p)?, d, cfg).map_err(usage)?;
            let r = runner.search(&s)?;
            let root = (1..=d).find(|k| k * k == d).map(|k| k as usize);
            let residues = p > 3 && d == (p - 1) / 2;
            let ok = r
                .witnesses
                .iter()
                .all(|w| !residues && root == Some(w.a.len()) && root == Some(w.b.len()));
            Report::search("search sumset", SearchDto::from_result(&r, Some(p), &[("d", d.to_string())]), ok)
        }
        SearchCmd::Threefold { p, d, max_p } => {
            let cfg = SumsetConfig { max_p, ..SumsetConfig::default() };
            let s = SumsetSearch::for_subgroup(field(p)?, d, cfg).map_err(usage)?;
            let pairs = runner.search(&s)?;
            let r = threefold_search(&s, &pairs)?;
            let ok = r.witnesses.is_empty();
            Report::search("search threefold", SearchDto::from_result(&r, Some(p), &[("d", d.to_string())]), ok)
        }
        SearchCmd::Levson { alpha_max } => {
            let s = LevSonnScan::new(alpha_max).map_err(usage)?;
            let r = runner.search(&s)?;
            let mut dto = SearchDto::from_result(&r, None, &[("alpha_max", alpha_max.to_string())]);
            dto.params.push(("primes_scanned".into(), r.examined.to_string()));
            Report::search("search levson", dto, true)
        }
        SearchCmd::Problem1 { p, alpha_max } => {
            let s = Problem1Scan::new(field(p)?, alpha_max).map_err(usage)?;
            let r = runner.search(&s)?;
            let ok = r.witnesses.iter().all(|w| w.set.len() > 2);
            let dto = SearchDto::from_result(&r, Some(p), &[("alpha_max", alpha_max.to_string())]);
            Report::search("search problem1", dto, ok)
        }
        SearchCmd::Problem2 { p, alpha } => {
            let s = Problem2Scan::new(field(p)?, alpha).map_err(usage)?;
            let r = runner.search(&s)?;
            let mut dto = SearchDto::from_result(&r, Some(p), &[("alpha", alpha.to_string())]);
            if p == 41 && alpha == 5 {
                let f = field(41)?;
                let scalings: Vec<u64> = (1..41).filter(|&c| f.pow(c, 20) == 1).collect();
                let key = mucrit_core::search::canonical_affine(f, &suites::F41_SET, &scalings);
                let present = dto
                    .witnesses
                    .iter()
                    .any(|w| matches!(w, WitnessDto::Set { set, .. } if *set == crate::dto::elems(&key)));
                dto.notes.push(format!(
                    "the example is printed elsewhere as {{0,1,9,32,41}}; 41 = 0 in F_41, read as {{0,1,9,32,40}} (class present: {present})"
                ));
            }
            Report::search("search problem2", dto, true)
        }
    })
}

fn execute(cli: &Cli) -> Result<Report> {
    let runner = Runner::new(cli.threads.unwrap_or_else(default_threads))?;
    Ok(match &cli.command {
        Command::VerifyF41 => Report::suites("verify-f41", vec![suites::f41_bundle()]),
        Command::VerifyIdentities => Report::suites(
            "verify-identities",
            vec![suites::identities(&runner), suites::operator(&runner, cli.seed)],
        ),
        Command::VerifyResidues => Report::suites("verify-residues", vec![suites::residues(&runner, cli.seed)]),
        Command::VerifyOracles => Report::suites("verify-oracles", vec![suites::oracles(&runner, cli.seed)]),
        Command::VerifyDesk { sumset_p_max, diffset_p_max } => {
            if *sumset_p_max > 128 {
                return Err(usage("--sumset-p-max is limited to 128"));
            }
            let bounds = DeskBounds { sumset_p_max: *sumset_p_max, diffset_p_max: *diffset_p_max };
            Report::suites("verify-desk", vec![suites::desk(&runner, bounds)])
        }
        Command::VerifyAll { alpha_max } => {
            Report::suites("verify-all", all_suites(&runner, cli.seed, *alpha_max, DeskBounds::default()))
        }
        Command::Search(cmd) => search_report(cmd, &runner)?,
        Command::Check { lemma } => {
            let n: u32 = lemma
                .strip_prefix("lemma")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| usage(format!("expected lemma<N>, got {lemma:?}")))?;
            let suite = suites::lemma(n).ok_or_else(|| {
                usage(format!("no checks for lemma {n}; available: {:?}", suites::LEMMAS))
            })?;
            Report::suites(&format!("check lemma{n}"), vec![suite])
        }
    })
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("mucrit: {e}");
            return 2;
        }
    };
    let text = match render(&report, cli.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("mucrit: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("mucrit: cannot write report: {e}");
        return 2;
    }
    if report.ok {
        0
    } else {
        1
    }
}
