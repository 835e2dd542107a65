//! Sets whose difference set lies in a given symmetric set (normally μ_d ∪ {0}).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{canonical_affine, conclude, BranchOutcome, BranchSearch, SearchKind, SearchResult};
use crate::bitset::Bitset;
use crate::error::{invalid, Error, Result};
use crate::fp::{roots_of_unity, FpSet, PrimeField};
use crate::hp::criticality;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffsetWitness {
    /// Canonical representative (contains 0).
    pub set: Vec<u64>,
    /// The differences fill the allowed set exactly.
    pub exact: bool,
}

pub struct DiffsetSearch {
    field: PrimeField,
    d: Option<u64>,
    allowed: Bitset,
    allowed_count: usize,
    alpha: usize,
    scalings: Vec<u64>,
    /// Fixed elements every normalized solution contains.
    base: Vec<u64>,
    cands: Vec<u64>,
    adj: Vec<Bitset>,
    node_budget: u64,
}

/// Integer α with α(α−1) = d.
fn size_for(d: u64) -> Option<usize> {
    let mut a: u64 = 1;
    while a * (a - 1) < d {
        a += 1;
    }
    (a * (a - 1) == d).then_some(a as usize)
}

impl DiffsetSearch {
    /// A−A ⊆ μ_d ∪ {0}, |A|(|A|−1) = d. Solutions are normalized to contain 0 and 1.
    pub fn for_subgroup(field: PrimeField, d: u64) -> Result<Self> {
        let p = field.modulus();
        field.check_divides(d)?;
        if d <= 1 || d >= p - 1 {
            return Err(invalid!("need 1 < d < p-1, got d={d}, p={p}"));
        }
        let mu = roots_of_unity(field, d)?;
        let alpha = size_for(d).unwrap_or(0);
        let s = Self::build(field, Some(d), mu.values(), alpha, mu.values().to_vec(), vec![0, 1]);
        Ok(s)
    }

    /// A−A ⊆ allowed ∪ {0} with |A| = alpha, no scaling symmetry assumed.
    pub fn for_target(field: PrimeField, allowed: &FpSet, alpha: usize) -> Result<Self> {
        if allowed.contains(0) {
            return Err(invalid!("allowed differences must exclude 0"));
        }
        Ok(Self::build(field, None, allowed.values(), alpha, vec![1], vec![0]))
    }

    fn build(
        field: PrimeField,
        d: Option<u64>,
        allowed_vals: &[u64],
        alpha: usize,
        scalings: Vec<u64>,
        base: Vec<u64>,
    ) -> Self {
        let p = field.modulus() as usize;
        let allowed = Bitset::from_indices(p, allowed_vals.iter().map(|&x| x as usize));
        let ok_diff = |x: u64, y: u64| {
            allowed.contains(field.sub(x, y) as usize) && allowed.contains(field.sub(y, x) as usize)
        };
        let base_ok = base.iter().all(|&x| base.iter().all(|&y| x == y || ok_diff(x, y)));
        let mut cands = Vec::new();
        if alpha > 0 && base_ok && alpha >= base.len() {
            for x in 0..field.modulus() {
                if !base.contains(&x) && base.iter().all(|&b| ok_diff(x, b)) {
                    cands.push(x);
                }
            }
        }
        let n = cands.len();
        let adj = (0..n)
            .map(|i| {
                Bitset::from_indices(n, (i + 1..n).filter(|&j| ok_diff(cands[i], cands[j])))
            })
            .collect();
        let base = if base_ok { base } else { Vec::new() };
        DiffsetSearch {
            field,
            d,
            allowed_count: allowed_vals.len(),
            allowed,
            alpha,
            scalings,
            base,
            cands,
            adj,
            node_budget: 50_000_000,
        }
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    fn need(&self) -> usize {
        self.alpha.saturating_sub(self.base.len())
    }

    fn dfs(&self, clique: &mut Vec<usize>, cand: &Bitset, out: &mut BranchOutcome<DiffsetWitness>) {
        out.examined += 1;
        if out.examined > self.node_budget {
            out.exhausted = true;
            return;
        }
        if clique.len() == self.need() {
            let mut set: Vec<u64> = self.base.clone();
            set.extend(clique.iter().map(|&i| self.cands[i]));
            set.sort_unstable();
            out.witnesses.push(DiffsetWitness { set, exact: false });
            return;
        }
        if clique.len() + cand.count() < self.need() {
            out.pruned += 1;
            return;
        }
        for j in cand.iter() {
            let mut next = cand.clone();
            next.intersect_with(&self.adj[j]);
            clique.push(j);
            self.dfs(clique, &next, out);
            clique.pop();
            if out.exhausted {
                return;
            }
        }
    }

    fn verify(&self, set: &[u64]) -> Result<bool> {
        let f = self.field;
        let s = FpSet::new(f, set.iter().copied());
        if s.len() != self.alpha {
            return Err(Error::InvariantViolated(format!("witness {s} has wrong size")));
        }
        let diffs = s.difference_set();
        for &x in diffs.values() {
            if x != 0 && !self.allowed.contains(x as usize) {
                return Err(Error::InvariantViolated(format!("witness {s}: difference {x} not allowed")));
            }
        }
        if let Some(d) = self.d {
            let rep = criticality(&s, &s.negated(), d)?;
            if !rep.critical {
                return Err(Error::InvariantViolated(format!("witness {s}: (A,-A) not {d}-critical")));
            }
        }
        Ok(diffs.len() - 1 == self.allowed_count)
    }
}

impl BranchSearch for DiffsetSearch {
    type Branch = Option<usize>;
    type Witness = DiffsetWitness;

    fn kind(&self) -> SearchKind {
        SearchKind::Diffset
    }

    fn branches(&self) -> Vec<Option<usize>> {
        if self.alpha == 0 || self.base.is_empty() {
            return Vec::new();
        }
        if self.need() == 0 {
            return vec![None];
        }
        (0..self.cands.len()).map(Some).collect()
    }

    fn explore(&self, branch: &Option<usize>) -> BranchOutcome<DiffsetWitness> {
        let mut out = BranchOutcome::default();
        match *branch {
            None => self.dfs(&mut Vec::new(), &Bitset::new(0), &mut out),
            Some(i) => {
                let mut clique = vec![i];
                self.dfs(&mut clique, &self.adj[i].clone(), &mut out);
            }
        }
        out
    }

    fn finish(&self, merged: BranchOutcome<DiffsetWitness>) -> Result<SearchResult<DiffsetWitness>> {
        let mut ws = Vec::new();
        for w in &merged.witnesses {
            let set = canonical_affine(self.field, &w.set, &self.scalings);
            let exact = self.verify(&set)?;
            ws.push(DiffsetWitness { set, exact });
        }
        ws.sort();
        ws.dedup();
        let mut notes: Vec<String> = Vec::new();
        if self.alpha == 0 {
            notes.push(format!("d = {} is not of the form a(a-1)", self.d.unwrap_or(0)));
        }
        Ok(conclude(
            SearchKind::Diffset,
            ws,
            (merged.examined, merged.pruned, merged.exhausted),
            self.branches().len(),
            notes,
            "node budget exceeded",
        ))
    }
}

pub fn diffset_search(p: u64, d: u64) -> Result<SearchResult<DiffsetWitness>> {
    let field = PrimeField::new(p)?;
    super::run_sequential(&DiffsetSearch::for_subgroup(field, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::Verdict;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn f13_d6() {
        let r = diffset_search(13, 6).unwrap();
        assert_eq!(r.verdict, Verdict::Found);
        assert_eq!(r.witnesses.len(), 1);
        let w = &r.witnesses[0];
        assert!(w.exact);
        let f = PrimeField::new(13).unwrap();
        let mu = roots_of_unity(f, 6).unwrap();
        assert_eq!(w.set, canonical_affine(f, &[0, 1, 10], mu.values()));
    }

    #[test]
    fn f41_d20_strict() {
        let r = diffset_search(41, 20).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        let f = PrimeField::new(41).unwrap();
        let mu = roots_of_unity(f, 20).unwrap();
        assert_eq!(r.witnesses[0].set, canonical_affine(f, &[0, 1, 9, 32, 40], mu.values()));
        assert!(!r.witnesses[0].exact);
    }

    #[test]
    fn invalid_parameters() {
        assert!(diffset_search(31, 20).is_err());
        assert!(diffset_search(31, 30).is_err());
        assert!(diffset_search(31, 1).is_err());
    }

    #[test]
    fn non_pronic_d_has_nothing() {
        let r = diffset_search(31, 10).unwrap();
        assert_eq!(r.verdict, Verdict::NoneExists);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn d2_pairs() {
        // A = {0,1}: differences ±1 = μ_2
        let r = diffset_search(7, 2).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].exact);
    }

    #[test]
    fn planted_sets_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = [101u64, 103, 107, 109][rng.gen_range(0..4)];
            let f = PrimeField::new(p).unwrap();
            let alpha = rng.gen_range(3..6);
            let mut a: Vec<u64> = Vec::new();
            while a.len() < alpha {
                let x = rng.gen_range(0..p);
                if !a.contains(&x) {
                    a.push(x);
                }
            }
            let s = FpSet::new(f, a.iter().copied());
            let allowed = FpSet::new(f, s.difference_set().values().iter().copied().filter(|&x| x != 0));
            let search = DiffsetSearch::for_target(f, &allowed, alpha).unwrap();
            let r = crate::search::run_sequential(&search).unwrap();
            let plant = canonical_affine(f, s.values(), &[1]);
            assert!(r.witnesses.iter().any(|w| w.set == plant), "plant {s} missed");
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let f = PrimeField::new(41).unwrap();
        let s = DiffsetSearch::for_subgroup(f, 20).unwrap().with_node_budget(0);
        let r = crate::search::run_sequential(&s).unwrap();
        assert!(matches!(r.verdict, Verdict::Exhausted { .. }));
    }
}
