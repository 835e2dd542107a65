//! Exhaustive searches, each split into independent branches.
//!
//! A search exposes its branches through [`BranchSearch`]; any executor can
//! explore them (the std crate uses a thread pool, [`run_sequential`] is the
//! reference). Outcomes are merged and sorted before witnesses are
//! canonicalized and re-verified, so the result does not depend on the order
//! in which branches finish.

pub mod diffset;
pub mod scans;
pub mod sumset;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;

pub use diffset::{diffset_search, DiffsetSearch, DiffsetWitness};
pub use scans::{
    levson_scan, problem1_scan, problem2_scan, LevSonnHit, LevSonnScan, Problem1Scan, Problem2Scan,
    SetWitness,
};
pub use sumset::{
    sumset_search, threefold_check, threefold_search, SumsetConfig, SumsetSearch, SumsetWitness,
    ThreefoldWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchKind {
    Diffset,
    Sumset,
    Threefold,
    Levson,
    Problem1,
    Problem2,
}

impl SearchKind {
    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Diffset => "diffset",
            SearchKind::Sumset => "sumset",
            SearchKind::Threefold => "threefold",
            SearchKind::Levson => "levson",
            SearchKind::Problem1 => "problem1",
            SearchKind::Problem2 => "problem2",
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Exhausted` means a budget ran out: absence of witnesses proves nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Found,
    NoneExists,
    Exhausted { reason: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Found => "found",
            Verdict::NoneExists => "none",
            Verdict::Exhausted { .. } => "exhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchOutcome<W> {
    pub witnesses: Vec<W>,
    pub examined: u64,
    pub pruned: u64,
    pub exhausted: bool,
}

impl<W> Default for BranchOutcome<W> {
    fn default() -> Self {
        BranchOutcome { witnesses: Vec::new(), examined: 0, pruned: 0, exhausted: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<W> {
    pub kind: SearchKind,
    pub witnesses: Vec<W>,
    pub examined: u64,
    pub pruned: u64,
    pub branches: usize,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

pub trait BranchSearch: Sync {
    type Branch: Send + Sync;
    type Witness: Send + Clone + Ord;

    fn kind(&self) -> SearchKind;
    fn branches(&self) -> Vec<Self::Branch>;
    fn explore(&self, branch: &Self::Branch) -> BranchOutcome<Self::Witness>;
    /// Canonicalize, deduplicate and re-verify the merged witnesses.
    fn finish(&self, merged: BranchOutcome<Self::Witness>) -> Result<SearchResult<Self::Witness>>;
}

/// Order-independent merge: counts are summed, witnesses sorted and deduplicated.
pub fn merge<W: Ord>(outcomes: impl IntoIterator<Item = BranchOutcome<W>>) -> BranchOutcome<W> {
    let mut out = BranchOutcome::default();
    for o in outcomes {
        out.witnesses.extend(o.witnesses);
        out.examined += o.examined;
        out.pruned += o.pruned;
        out.exhausted |= o.exhausted;
    }
    out.witnesses.sort();
    out.witnesses.dedup();
    out
}

pub fn run_sequential<S: BranchSearch>(s: &S) -> Result<SearchResult<S::Witness>> {
    let branches = s.branches();
    let merged = merge(branches.iter().map(|b| s.explore(b)));
    s.finish(merged)
}

/// Builds the result once witnesses are final.
pub(crate) fn conclude<W>(
    kind: SearchKind,
    witnesses: Vec<W>,
    merged_counts: (u64, u64, bool),
    branches: usize,
    notes: Vec<String>,
    budget_note: &str,
) -> SearchResult<W> {
    let (examined, pruned, exhausted) = merged_counts;
    let verdict = if !witnesses.is_empty() {
        Verdict::Found
    } else if exhausted {
        Verdict::Exhausted { reason: budget_note.into() }
    } else {
        Verdict::NoneExists
    };
    SearchResult { kind, witnesses, examined, pruned, branches, verdict, notes }
}

/// Lexicographically least sorted image of `set` under `x ↦ c(x − a)` over
/// `a ∈ set` (translations) and `c ∈ scalings`.
pub fn canonical_affine(field: crate::fp::PrimeField, set: &[u64], scalings: &[u64]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    let mut img = Vec::with_capacity(set.len());
    for &a in set {
        for &c in scalings {
            img.clear();
            img.extend(set.iter().map(|&x| field.mul(c, field.sub(x, a))));
            img.sort_unstable();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img.clone());
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::PrimeField;

    #[test]
    fn canonical_is_orbit_invariant() {
        let f = PrimeField::new(41).unwrap();
        let mu = crate::fp::roots_of_unity(f, 20).unwrap();
        let a = [0u64, 1, 9, 32, 40];
        let c0 = canonical_affine(f, &a, mu.values());
        let moved: Vec<u64> = a.iter().map(|&x| f.add(f.mul(mu.values()[3], x), 17)).collect();
        assert_eq!(canonical_affine(f, &moved, mu.values()), c0);
        assert_eq!(c0[0], 0);
    }

    #[test]
    fn merge_sorts_and_dedups() {
        let a = BranchOutcome { witnesses: alloc::vec![3, 1], examined: 2, pruned: 1, exhausted: false };
        let b = BranchOutcome { witnesses: alloc::vec![1, 2], examined: 5, pruned: 0, exhausted: true };
        let m = merge([a, b]);
        assert_eq!(m.witnesses, alloc::vec![1, 2, 3]);
        assert_eq!((m.examined, m.pruned, m.exhausted), (7, 1, true));
    }
}
