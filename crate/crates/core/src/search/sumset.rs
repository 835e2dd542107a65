//! Decompositions `A + B = T` (normally `T = μ_d`) and three-fold sums.
//!
//! `A + B` is unchanged by `(A, B) ↦ (A + t, B − t)`, so every solution has a
//! representative with `0 ∈ A`; for `T = μ_d` the scaling action by μ_d also
//! lets us put `1 ∈ B`. For fixed `A` the largest admissible `B` is
//! `B_max(A) = ∩_{a∈A} (T − a)`; if `(A, B)` is a solution so is
//! `(A, B_max(A))`. The search enumerates exactly the closed pairs
//! `A = A_max(B_max(A))`, and every decomposition is contained in one.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{conclude, BranchOutcome, BranchSearch, SearchKind, SearchResult, Verdict};
use crate::bitset::Bitset;
use crate::error::{invalid, Error, Result};
use crate::fp::{roots_of_unity, FpSet, PrimeField};
use crate::hp::criticality;
use crate::symm::{minimal_indices, power_sums};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SumsetWitness {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    /// `|A||B| = d + |(−A) ∩ B|` (only meaningful for subgroup targets).
    pub critical: bool,
    /// After moving both means to 0: minimal indices n (and m) are even.
    pub parity_even: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumsetConfig {
    pub max_p: u64,
    pub node_budget: u64,
}

impl Default for SumsetConfig {
    fn default() -> Self {
        SumsetConfig { max_p: 128, node_budget: 200_000_000 }
    }
}

pub struct SumsetSearch {
    field: PrimeField,
    d: Option<u64>,
    target: Bitset,
    target_set: FpSet,
    scalings: Vec<u64>,
    pool: Vec<u64>,
    /// `shifted[i] = T − pool[i]` as a bitset.
    shifted: Vec<Bitset>,
    node_budget: u64,
}

impl SumsetSearch {
    pub fn for_subgroup(field: PrimeField, d: u64, cfg: SumsetConfig) -> Result<Self> {
        let p = field.modulus();
        field.check_divides(d)?;
        if d <= 1 || d >= p - 1 {
            return Err(invalid!("need 1 < d < p-1, got d={d}, p={p}"));
        }
        if p > cfg.max_p {
            return Err(Error::ResourceLimit(format!(
                "sumset search limited to p <= {}, got {p}",
                cfg.max_p
            )));
        }
        let mu = roots_of_unity(field, d)?;
        let scalings = mu.values().to_vec();
        Ok(Self::build(field, Some(d), mu, scalings, true, cfg.node_budget))
    }

    /// Arbitrary target, no scaling symmetry.
    pub fn for_target(target: &FpSet, cfg: SumsetConfig) -> Result<Self> {
        let field = target.field();
        if field.modulus() > cfg.max_p {
            return Err(Error::ResourceLimit(format!("p > {}", cfg.max_p)));
        }
        Ok(Self::build(field, None, target.clone(), vec![1], false, cfg.node_budget))
    }

    fn build(
        field: PrimeField,
        d: Option<u64>,
        target_set: FpSet,
        scalings: Vec<u64>,
        one_in_b: bool,
        node_budget: u64,
    ) -> Self {
        let p = field.modulus();
        let target = Bitset::from_indices(p as usize, target_set.values().iter().map(|&x| x as usize));
        let shift = |x: u64| {
            Bitset::from_indices(
                p as usize,
                target_set.values().iter().map(|&t| field.sub(t, x) as usize),
            )
        };
        let mut pool = Vec::new();
        let mut shifted = Vec::new();
        for x in 1..p {
            if one_in_b && !target.contains(field.add(x, 1) as usize) {
                continue;
            }
            let mut s = shift(x);
            s.intersect_with(&target);
            // B ⊆ T (0 ∈ A) and B ⊆ T − x: need two common elements
            if s.count() >= 2 {
                pool.push(x);
                shifted.push(shift(x));
            }
        }
        SumsetSearch { field, d, target, target_set, scalings, pool, shifted, node_budget }
    }

    fn covered(&self, a: &[u64], extra: impl Iterator<Item = u64>, bcand: &Bitset) -> bool {
        let p = self.field.modulus();
        let mut cover = Bitset::new(p as usize);
        for x in a.iter().copied().chain(extra) {
            for b in bcand.iter() {
                cover.insert(self.field.add(x, b as u64) as usize);
            }
        }
        self.target.is_subset(&cover)
    }

    fn is_closed(&self, a: &[u64], bcand: &Bitset) -> bool {
        // A_max(B) = {x : x + B ⊆ T}; A ⊆ A_max always holds here
        let p = self.field.modulus();
        let count = (0..p)
            .filter(|&x| bcand.iter().all(|b| self.target.contains(self.field.add(x, b as u64) as usize)))
            .count();
        count == a.len()
    }

    fn dfs(&self, a: &mut Vec<u64>, last: usize, bcand: &Bitset, out: &mut BranchOutcome<SumsetWitness>) {
        out.examined += 1;
        if out.examined > self.node_budget {
            out.exhausted = true;
            return;
        }
        if a.len() >= 2 && self.covered(a, core::iter::empty(), bcand) && self.is_closed(a, bcand) {
            let mut sa = a.clone();
            sa.sort_unstable();
            let sb: Vec<u64> = bcand.iter().map(|b| b as u64).collect();
            out.witnesses.push(SumsetWitness { a: sa, b: sb, critical: false, parity_even: None });
        }
        let children: Vec<(usize, Bitset)> = (last + 1..self.pool.len())
            .filter_map(|j| {
                let mut nb = bcand.clone();
                nb.intersect_with(&self.shifted[j]);
                (nb.count() >= 2).then_some((j, nb))
            })
            .collect();
        if children.is_empty() {
            return;
        }
        // every target element must still be reachable from A ∪ (remaining pool) + B_max(A)
        if !self.covered(a, children.iter().map(|(j, _)| self.pool[*j]), bcand) {
            out.pruned += 1;
            return;
        }
        for (j, nb) in children {
            a.push(self.pool[j]);
            self.dfs(a, j, &nb, out);
            a.pop();
            if out.exhausted {
                return;
            }
        }
    }

    /// Least representative of the pair's orbit under opposite shifts,
    /// scalings and swapping.
    pub fn canonical_pair(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let f = self.field;
        let mut best: Option<(Vec<u64>, Vec<u64>)> = None;
        for (x, y) in [(a, b), (b, a)] {
            for &t in x {
                for &c in &self.scalings {
                    let mut xa: Vec<u64> = x.iter().map(|&v| f.mul(c, f.sub(v, t))).collect();
                    let mut yb: Vec<u64> = y.iter().map(|&v| f.mul(c, f.add(v, t))).collect();
                    xa.sort_unstable();
                    yb.sort_unstable();
                    let cand = (xa, yb);
                    if best.as_ref().is_none_or(|bst| cand < *bst) {
                        best = Some(cand);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }

    fn verify(&self, a: &[u64], b: &[u64]) -> Result<SumsetWitness> {
        let f = self.field;
        let sa = FpSet::new(f, a.iter().copied());
        let sb = FpSet::new(f, b.iter().copied());
        if sa.sumset(&sb)? != self.target_set {
            return Err(Error::InvariantViolated(format!("A + B != target for A={sa}, B={sb}")));
        }
        let critical = match self.d {
            Some(d) => criticality(&sa, &sb, d)?.critical,
            None => false,
        };
        Ok(SumsetWitness { a: a.to_vec(), b: b.to_vec(), critical, parity_even: parity(&sa, &sb) })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn target(&self) -> &FpSet {
        &self.target_set
    }
}

/// Shift `A` by `t = −p₁(A)/α` and `B` by `−t`; then check `p₁(B) = 0` and
/// that the minimal indices of both sets are even.
fn parity(a: &FpSet, b: &FpSet) -> Option<bool> {
    let f = a.field();
    if a.len() != b.len() {
        return None;
    }
    let alpha_inv = f.inv_int(a.len() as i64).ok()?;
    let t = f.neg(f.mul(power_sums(a, 1)[1], alpha_inv));
    let a2 = a.translated(t);
    let b2 = b.translated(f.neg(t));
    if power_sums(&b2, 1)[1] != 0 {
        return Some(false);
    }
    let even = |s: &FpSet| {
        let (n, m) = minimal_indices(s);
        n.is_none_or(|n| n % 2 == 0) && m.is_none_or(|m| m % 2 == 0)
    };
    Some(even(&a2) && even(&b2))
}

impl BranchSearch for SumsetSearch {
    type Branch = usize;
    type Witness = SumsetWitness;

    fn kind(&self) -> SearchKind {
        SearchKind::Sumset
    }

    fn branches(&self) -> Vec<usize> {
        (0..self.pool.len()).collect()
    }

    fn explore(&self, &i: &usize) -> BranchOutcome<SumsetWitness> {
        let mut out = BranchOutcome::default();
        let mut bcand = self.target.clone();
        bcand.intersect_with(&self.shifted[i]);
        let mut a = vec![0, self.pool[i]];
        self.dfs(&mut a, i, &bcand, &mut out);
        out
    }

    fn finish(&self, merged: BranchOutcome<SumsetWitness>) -> Result<SearchResult<SumsetWitness>> {
        let mut ws = Vec::new();
        for w in &merged.witnesses {
            let (a, b) = self.canonical_pair(&w.a, &w.b);
            ws.push(self.verify(&a, &b)?);
        }
        ws.sort();
        ws.dedup();
        let mut notes = Vec::new();
        if let Some(d) = self.d {
            let bad: Vec<String> = ws
                .iter()
                .filter(|w| w.a.len() * w.a.len() != d as usize || w.a.len() != w.b.len())
                .map(|w| format!("{:?}+{:?}", w.a, w.b))
                .collect();
            if !bad.is_empty() {
                notes.push(format!("decompositions with |A|,|B| != sqrt(d): {}", bad.join(", ")));
            }
        }
        Ok(conclude(
            SearchKind::Sumset,
            ws,
            (merged.examined, merged.pruned, merged.exhausted),
            self.pool.len(),
            notes,
            "node budget exceeded",
        ))
    }
}

pub fn sumset_search(p: u64, d: u64) -> Result<SearchResult<SumsetWitness>> {
    let field = PrimeField::new(p)?;
    super::run_sequential(&SumsetSearch::for_subgroup(field, d, SumsetConfig::default())?)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreefoldWitness {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

/// Largest summand set examined when splitting `X = A + B`.
const MAX_SPLIT: usize = 22;

/// Finds `A + B + C = T` (all sizes > 1) from the closed pairs of `search`,
/// which must already have been run to give `pairs`. See the module docs:
/// `(A + B, C)` is a decomposition, hence contained in a closed pair `(X, Y)`
/// in one of its two orientations.
pub fn threefold_search(
    search: &SumsetSearch,
    pairs: &SearchResult<SumsetWitness>,
) -> Result<SearchResult<ThreefoldWitness>> {
    let f = search.field();
    let target = search.target();
    let mut witnesses = Vec::new();
    let mut examined = 0u64;
    let mut exhausted = matches!(pairs.verdict, Verdict::Exhausted { .. });
    for w in &pairs.witnesses {
        for (x, y) in [(&w.a, &w.b), (&w.b, &w.a)] {
            if x.len() > MAX_SPLIT {
                exhausted = true;
                continue;
            }
            let sy = FpSet::new(f, y.iter().copied());
            let xs = FpSet::new(f, x.iter().copied());
            for mask in 0u64..(1u64 << x.len()) {
                if mask.count_ones() < 2 {
                    continue;
                }
                examined += 1;
                let b: Vec<u64> =
                    (0..x.len()).filter(|&i| mask >> i & 1 == 1).map(|i| x[i]).collect();
                // A = {t : t + B ⊆ X} (contains 0 since B ⊆ X)
                let a: Vec<u64> = (0..f.modulus())
                    .filter(|&t| b.iter().all(|&v| xs.contains(f.add(t, v))))
                    .collect();
                if a.len() < 2 {
                    continue;
                }
                let sa = FpSet::new(f, a.iter().copied());
                let sb = FpSet::new(f, b.iter().copied());
                let s = sa.sumset(&sb)?;
                if s.sumset(&sy)? == *target {
                    witnesses.push(ThreefoldWitness { a, b, c: y.clone() });
                }
            }
        }
    }
    witnesses.sort();
    witnesses.dedup();
    Ok(conclude(
        SearchKind::Threefold,
        witnesses,
        (examined, 0, exhausted),
        pairs.witnesses.len(),
        Vec::new(),
        "summand too large to split or pair search exhausted",
    ))
}

pub fn threefold_check(p: u64, d: u64) -> Result<SearchResult<ThreefoldWitness>> {
    let field = PrimeField::new(p)?;
    let s = SumsetSearch::for_subgroup(field, d, SumsetConfig::default())?;
    let pairs = super::run_sequential(&s)?;
    threefold_search(&s, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::run_sequential;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn mu4_in_f13() {
        let r = sumset_search(13, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Found);
        for w in &r.witnesses {
            assert_eq!((w.a.len(), w.b.len()), (2, 2));
            assert!(w.critical);
            assert_eq!(w.parity_even, Some(true));
        }
        let f = PrimeField::new(13).unwrap();
        let s = SumsetSearch::for_subgroup(f, 4, SumsetConfig::default()).unwrap();
        let known = s.canonical_pair(&[0, 4], &[1, 8]);
        assert!(r.witnesses.iter().any(|w| (w.a.clone(), w.b.clone()) == known));
    }

    #[test]
    fn quadratic_residues_small() {
        for p in [7u64, 11, 13, 17, 19, 23, 29] {
            let r = sumset_search(p, (p - 1) / 2).unwrap();
            assert_eq!(r.verdict, Verdict::NoneExists, "p={p}");
        }
    }

    #[test]
    fn rejects() {
        assert!(sumset_search(13, 5).is_err());
        assert!(matches!(sumset_search(131, 5), Err(Error::ResourceLimit(_))));
    }

    fn random_set(rng: &mut ChaCha8Rng, p: u64, n: usize) -> Vec<u64> {
        let mut v: Vec<u64> = Vec::new();
        while v.len() < n {
            let x = rng.gen_range(0..p);
            if !v.contains(&x) {
                v.push(x);
            }
        }
        v
    }

    #[test]
    fn planted_pairs_are_found() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..15 {
            let p = [53u64, 59, 61, 67][rng.gen_range(0..4)];
            let f = PrimeField::new(p).unwrap();
            let (na, nb) = (rng.gen_range(2..4), rng.gen_range(2..4));
            let a = FpSet::new(f, random_set(&mut rng, p, na));
            let b = FpSet::new(f, random_set(&mut rng, p, nb));
            let t = a.sumset(&b).unwrap();
            let s = SumsetSearch::for_target(&t, SumsetConfig::default()).unwrap();
            let r = run_sequential(&s).unwrap();
            // closure of the plant
            let bmax: Vec<u64> = (0..p)
                .filter(|&y| a.values().iter().all(|&x| t.contains(f.add(x, y))))
                .collect();
            let amax: Vec<u64> = (0..p)
                .filter(|&x| bmax.iter().all(|&y| t.contains(f.add(x, y))))
                .collect();
            let key = s.canonical_pair(&amax, &bmax);
            assert!(
                r.witnesses.iter().any(|w| (w.a.clone(), w.b.clone()) == key),
                "plant {a} + {b} missed"
            );
        }
    }

    #[test]
    fn threefold_control_and_subgroups() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = 61;
        let f = PrimeField::new(p).unwrap();
        let a = FpSet::new(f, random_set(&mut rng, p, 2));
        let b = FpSet::new(f, random_set(&mut rng, p, 2));
        let c = FpSet::new(f, random_set(&mut rng, p, 2));
        let t = a.sumset(&b).unwrap().sumset(&c).unwrap();
        let s = SumsetSearch::for_target(&t, SumsetConfig::default()).unwrap();
        let pairs = run_sequential(&s).unwrap();
        let r = threefold_search(&s, &pairs).unwrap();
        assert_eq!(r.verdict, Verdict::Found);
        for w in &r.witnesses {
            let sum = FpSet::new(f, w.a.iter().copied())
                .sumset(&FpSet::new(f, w.b.iter().copied()))
                .unwrap()
                .sumset(&FpSet::new(f, w.c.iter().copied()))
                .unwrap();
            assert_eq!(sum, t);
        }
        assert_eq!(threefold_check(13, 4).unwrap().verdict, Verdict::NoneExists);
    }
}
