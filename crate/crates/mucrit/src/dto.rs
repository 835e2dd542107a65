//! Serialized report shapes. Field elements are decimal strings; the modulus
//! travels alongside them.

use mucrit_core::search::{
    DiffsetWitness, LevSonnHit, SearchResult, SetWitness, SumsetWitness, ThreefoldWitness, Verdict,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "mucrit/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchDto>,
}

impl Report {
    pub fn suites(command: &str, suites: Vec<SuiteDto>) -> Self {
        let ok = suites.iter().all(|s| s.ok);
        Report { schema: SCHEMA.into(), command: command.into(), ok, suites, search: None }
    }

    pub fn search(command: &str, search: SearchDto, ok: bool) -> Self {
        Report { schema: SCHEMA.into(), command: command.into(), ok, suites: Vec::new(), search: Some(search) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDto {
    pub name: String,
    pub ok: bool,
    pub checks: Vec<CheckDto>,
}

impl SuiteDto {
    pub fn new(name: &str, checks: Vec<CheckDto>) -> Self {
        let ok = !checks.is_empty() && checks.iter().all(|c| c.ok);
        SuiteDto { name: name.into(), ok, checks }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckDto {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckDto { name: name.into(), ok, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDto {
    pub kind: String,
    /// Absent for scans spanning many primes.
    pub modulus: Option<String>,
    /// Parameters as given, e.g. `d`, `alpha_max`.
    pub params: Vec<(String, String)>,
    pub verdict: String,
    pub reason: Option<String>,
    pub examined: u64,
    pub pruned: u64,
    pub branches: u64,
    pub witnesses: Vec<WitnessDto>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessDto {
    Diffset { set: Vec<String>, exact: bool },
    Sumset { a: Vec<String>, b: Vec<String>, critical: bool, parity_even: Option<bool> },
    Threefold { a: Vec<String>, b: Vec<String>, c: Vec<String> },
    Levson { p: String, alpha: u64, n: u64 },
    Set { set: Vec<String>, cubic: Option<bool> },
}

pub fn elems(v: &[u64]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl From<&DiffsetWitness> for WitnessDto {
    fn from(w: &DiffsetWitness) -> Self {
        WitnessDto::Diffset { set: elems(&w.set), exact: w.exact }
    }
}

impl From<&SumsetWitness> for WitnessDto {
    fn from(w: &SumsetWitness) -> Self {
        WitnessDto::Sumset { a: elems(&w.a), b: elems(&w.b), critical: w.critical, parity_even: w.parity_even }
    }
}

impl From<&ThreefoldWitness> for WitnessDto {
    fn from(w: &ThreefoldWitness) -> Self {
        WitnessDto::Threefold { a: elems(&w.a), b: elems(&w.b), c: elems(&w.c) }
    }
}

impl From<&LevSonnHit> for WitnessDto {
    fn from(w: &LevSonnHit) -> Self {
        WitnessDto::Levson { p: w.p.to_string(), alpha: w.alpha, n: w.n }
    }
}

impl From<&SetWitness> for WitnessDto {
    fn from(w: &SetWitness) -> Self {
        WitnessDto::Set { set: elems(&w.set), cubic: w.cubic }
    }
}

impl SearchDto {
    pub fn from_result<W>(r: &SearchResult<W>, modulus: Option<u64>, params: &[(&str, String)]) -> Self
    where
        for<'a> WitnessDto: From<&'a W>,
    {
        let reason = match &r.verdict {
            Verdict::Exhausted { reason } => Some(reason.clone()),
            _ => None,
        };
        SearchDto {
            kind: r.kind.name().into(),
            modulus: modulus.map(|p| p.to_string()),
            params: params.iter().map(|(k, v)| ((*k).into(), v.clone())).collect(),
            verdict: r.verdict.name().into(),
            reason,
            examined: r.examined,
            pruned: r.pruned,
            branches: r.branches as u64,
            witnesses: r.witnesses.iter().map(WitnessDto::from).collect(),
            notes: r.notes.clone(),
        }
    }
}

pub fn to_json(r: &Report) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(r)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = mucrit_core::search::diffset_search(13, 6).unwrap();
        let rep = Report::search("search diffset", SearchDto::from_result(&r, Some(13), &[("d", "6".into())]), true);
        let text = to_json(&rep).unwrap();
        assert!(text.contains("\"schema\": \"mucrit/1\""));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
    }
}
