//! Verification suites. Each returns a [`SuiteDto`] whose content depends
//! only on its inputs (seed, bounds), never on the thread count.

use std::collections::BTreeSet;

use mucrit_core::fp::{roots_of_unity, FpSet, PrimeField};
use mucrit_core::hp::{
    criticality, factorization_check, fractional_transform, hp_coeffs, hp_coeffs_dual_basis,
    lemma9_identity, power_sum_vanishing, relation_x, relation_y, vandermonde_solve,
};
use mucrit_core::poly::FpPoly;
use mucrit_core::residues::{
    lemma_form_identity, sum_residues_check, FormMode, NamedForm, RationalForm, ResidueCheck,
};
use mucrit_core::search::{
    threefold_search, DiffsetSearch, LevSonnHit, LevSonnScan, Problem2Scan, SearchResult,
    SumsetConfig, SumsetSearch, SumsetWitness, Verdict,
};
use mucrit_core::stepanov::{
    alpha11_obstruction, d_operator, f_a, identity_catalog_check, lemma13_symbolic,
    lemma5_lemma6_numeric, quintic_image, rat_all, CatalogId, MPoly,
};
use mucrit_core::symm::{complete_homogeneous_series, minimal_indices, power_sums};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dto::{CheckDto, SuiteDto};
use crate::runner::Runner;

pub const F41_SET: [u64; 5] = [0, 1, 9, 32, 40];

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("suite primes are prime")
}

fn err_check(name: &str, e: impl std::fmt::Display) -> CheckDto {
    CheckDto::new(name, false, format!("error: {e}"))
}

/// Distinct uniform elements of F_p, in draw order.
pub fn random_set(rng: &mut ChaCha8Rng, p: u64, n: usize) -> Vec<u64> {
    let mut v: Vec<u64> = Vec::with_capacity(n);
    while v.len() < n {
        let x = rng.gen_range(0..p);
        if !v.contains(&x) {
            v.push(x);
        }
    }
    v
}

// ---------------------------------------------------------------- F41

pub fn f41_bundle() -> SuiteDto {
    let f = field(41);
    let a = FpSet::new(f, F41_SET);
    let neg = a.negated();
    let mut checks = Vec::new();

    match criticality(&a, &neg, 20) {
        Ok(r) => checks.push(CheckDto::new(
            "critical",
            r.critical && r.overlap == 5,
            format!("|A||-A| = 25 = 20 + {}, critical: {}", r.overlap, r.critical),
        )),
        Err(e) => checks.push(err_check("critical", e)),
    }
    match factorization_check(&a, &neg, 20) {
        Ok(r) => checks.push(CheckDto::new(
            "hp-factorization",
            r.ok && r.c == r.binomial,
            format!("C = {} , C(24,20) mod 41 = {}, HP = C prod (x-b)^4: {}", r.c, r.binomial, r.ok),
        )),
        Err(e) => checks.push(err_check("hp-factorization", e)),
    }
    let ps = power_sums(&a, 3);
    checks.push(CheckDto::new(
        "power-sums",
        ps[1..=3].iter().all(|&x| x == 0),
        format!("p1, p2, p3 = {}, {}, {}", ps[1], ps[2], ps[3]),
    ));
    match rat_all(&a) {
        Ok((r2, r3)) => checks.push(CheckDto::new("rat2-rat3", r2 && r3, format!("rat2: {r2}, rat3: {r3}"))),
        Err(e) => checks.push(err_check("rat2-rat3", e)),
    }
    let p2 = Problem2Scan::new(f, 5).map(|s| s.holds(&F41_SET)).unwrap_or(false);
    checks.push(CheckDto::new("product-condition", p2, "prod_{a' != a} (a - a')^5 = -1 at every a"));
    let diffs = a.difference_set();
    let strict = match roots_of_unity(f, 20) {
        Ok(mu) => {
            let inside = diffs.values().iter().all(|&x| x == 0 || mu.contains(x));
            inside && diffs.len() < mu.len() + 1
        }
        Err(_) => false,
    };
    checks.push(CheckDto::new(
        "strict-inclusion",
        strict,
        format!("|A - A| = {} < 21 = |mu_20 ∪ {{0}}|", diffs.len()),
    ));
    SuiteDto::new("f41", checks)
}

// ---------------------------------------------------------------- Lev-Sonn

pub const LEVSON_EXPECTED: [(u64, u64, u64); 2] = [(13, 3, 3), (41, 5, 5)];

pub fn levson_checks(r: &SearchResult<LevSonnHit>) -> SuiteDto {
    let hits: Vec<(u64, u64, u64)> = r.witnesses.iter().map(|h| (h.p, h.alpha, h.n)).collect();
    let primes: BTreeSet<u64> = hits.iter().map(|h| h.0).collect();
    let checks = vec![
        CheckDto::new("primes-scanned", r.examined == 586, format!("{} primes of the form 2a(a-1)+1", r.examined)),
        CheckDto::new("hit-primes", primes == BTreeSet::from([13, 41]), format!("primes with a hit: {primes:?}")),
        CheckDto::new(
            "hits",
            hits == LEVSON_EXPECTED,
            format!("(p, alpha, n) = {hits:?}, expected {LEVSON_EXPECTED:?}"),
        ),
    ];
    SuiteDto::new("levson", checks)
}

pub fn levson(runner: &Runner, alpha_max: u64) -> (SuiteDto, Option<SearchResult<LevSonnHit>>) {
    match LevSonnScan::new(alpha_max).and_then(|s| runner.search(&s)) {
        Ok(r) => (levson_checks(&r), Some(r)),
        Err(e) => (SuiteDto::new("levson", vec![err_check("scan", e)]), None),
    }
}

// ---------------------------------------------------------------- symbolic

pub fn identities(runner: &Runner) -> SuiteDto {
    let entries = runner.map(&CatalogId::ALL, |&id| identity_catalog_check(id));
    let checks = entries.into_iter().map(|e| CheckDto::new(e.id.name(), e.ok, e.detail)).collect();
    SuiteDto::new("identities", checks)
}

pub fn operator(runner: &Runner, seed: u64) -> SuiteDto {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4f50);
    let cases: Vec<(u64, u64, u64, u64)> = (0..200)
        .map(|i| {
            let p = if i % 2 == 0 { 10007 } else { 1_000_003 };
            (p, rng.gen_range(0..p), rng.gen_range(1..p), rng.gen_range(2..=16))
        })
        .collect();
    let bad: Vec<String> = runner
        .map(&cases, |&(p, a, s, alpha)| {
            let g = f_a(field(p), a, s, alpha);
            (!d_operator(&g, alpha as i64).is_zero()).then(|| format!("p={p} a={a} s={s} alpha={alpha}"))
        })
        .into_iter()
        .flatten()
        .collect();
    let mut checks = vec![CheckDto::new(
        "kills-f-a",
        bad.is_empty(),
        if bad.is_empty() { "200 random (a, s, alpha), p in {10007, 1000003}".to_string() } else { bad.join("; ") },
    )];
    let img = quintic_image();
    let want = MPoly::monomial(vec![1, 1], mucrit_core::stepanov::q(-3600));
    checks.push(CheckDto::new("quintic", img == want, format!("D(x^5 - x + b) = {}", img.display_with(&["x", "b"]))));
    match alpha11_obstruction(1000) {
        Ok(r) => {
            checks.push(CheckDto::new(
                "x11-annihilated",
                r.d_of_displayed_is_zero,
                format!(
                    "D(x^11 + 11x^6 + x) = {}; with the x coefficient re-derived the image is zero: {}",
                    r.d_of_displayed, r.d_of_corrected_is_zero
                ),
            ));
            let (a, b) = &r.derived.derived;
            checks.push(CheckDto::new(
                "xi5-15-over-338",
                r.terminates_at_15_over_338(),
                format!(
                    "displayed chain {}xi^5 = {} reproduces; recomputed chain gives {}xi^5 + {} = 0",
                    r.displayed_relation.0, r.displayed_relation.1, a, b
                ),
            ));
        }
        Err(e) => checks.push(err_check("x11", e)),
    }
    SuiteDto::new("operator", checks)
}

// ---------------------------------------------------------------- residues

pub const RESIDUE_PRIMES: [u64; 3] = [41, 97, 10007];

fn random_split_form(rng: &mut ChaCha8Rng, p: u64) -> RationalForm {
    let f = field(p);
    let n = rng.gen_range(1..=5);
    let poles = random_set(rng, p, n);
    let mut den = FpPoly::one(f);
    for &r in &poles {
        for _ in 0..rng.gen_range(1..=3) {
            den = den.mul_linear(r);
        }
    }
    let deg = den.degree().unwrap_or(0) + 3;
    let num_deg = rng.gen_range(0..=deg);
    let mut coeffs: Vec<u64> = (0..=num_deg).map(|_| rng.gen_range(0..p)).collect();
    if coeffs.iter().all(|&c| c == 0) {
        coeffs[0] = 1;
    }
    RationalForm::new(FpPoly::from_coeffs(f, coeffs), den).expect("nonzero denominator")
}

pub fn residues(runner: &Runner, seed: u64) -> SuiteDto {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5245);
    let mut checks = Vec::new();
    for p in RESIDUE_PRIMES {
        let forms: Vec<RationalForm> = (0..1000).map(|_| random_split_form(&mut rng, p)).collect();
        let results = runner.map(&forms, |form| sum_residues_check(form));
        let bad = results.iter().filter(|r| !matches!(r, Ok(ResidueCheck::Zero))).count();
        checks.push(CheckDto::new(
            format!("sum-of-residues-p{p}"),
            bad == 0,
            format!("{} of 1000 split forms sum to zero", 1000 - bad),
        ));
    }
    for which in NamedForm::ALL {
        let cases: Vec<(u64, Vec<u64>, Vec<u64>, usize)> = (0..100)
            .map(|i| {
                let p = RESIDUE_PRIMES[i % 3];
                let na = rng.gen_range(1..=4);
                let nb = rng.gen_range(2..=5);
                let b = random_set(&mut rng, p, nb);
                // poles of g and h kept apart: a ≠ -b
                let mut a = Vec::with_capacity(na);
                while a.len() < na {
                    let x = rng.gen_range(0..p);
                    if !a.contains(&x) && !b.contains(&((p - x) % p)) {
                        a.push(x);
                    }
                }
                (p, a, b, rng.gen_range(0..=6))
            })
            .collect();
        let results = runner.map(&cases, |(p, a, b, k)| {
            let f = field(*p);
            lemma_form_identity(which, &FpSet::new(f, a.clone()), &FpSet::new(f, b.clone()), *k, FormMode::General)
                .map(|r| r.ok && r.residues_match)
        });
        let bad: Vec<String> = results
            .iter()
            .zip(&cases)
            .filter(|(r, _)| !matches!(r, Ok(true)))
            .map(|(r, (p, a, b, k))| format!("p={p} A={a:?} B={b:?} k={k}: {r:?}"))
            .collect();
        checks.push(CheckDto::new(
            format!("general-{}", which.name()),
            bad.is_empty(),
            if bad.is_empty() { "100 random (A, B, k)".to_string() } else { bad.join("; ") },
        ));
    }
    SuiteDto::new("residues", checks)
}

// ---------------------------------------------------------------- desk-scale searches

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeskBounds {
    pub sumset_p_max: u64,
    pub diffset_p_max: u64,
}

impl Default for DeskBounds {
    fn default() -> Self {
        DeskBounds { sumset_p_max: 61, diffset_p_max: 200 }
    }
}

/// `(p, d)` with `d | p − 1`, `1 < d < p − 1`, `p` prime, `p ≤ p_max`.
pub fn subgroup_jobs(p_max: u64) -> Vec<(u64, u64)> {
    (3..=p_max)
        .filter(|&p| mucrit_core::is_prime(p))
        .flat_map(|p| (2..p - 1).filter(move |d| (p - 1) % d == 0).map(move |d| (p, d)))
        .collect()
}

struct PairRun {
    p: u64,
    d: u64,
    pairs: mucrit_core::Result<SearchResult<SumsetWitness>>,
    threefold: Option<mucrit_core::Result<Verdict>>,
}

fn isqrt(d: u64) -> Option<usize> {
    let r = (d as f64).sqrt().round() as u64;
    (r * r == d).then_some(r as usize)
}

pub fn desk(runner: &Runner, bounds: DeskBounds) -> SuiteDto {
    let jobs = subgroup_jobs(bounds.sumset_p_max);
    let runs: Vec<PairRun> = runner.map(&jobs, |&(p, d)| {
        let s = SumsetSearch::for_subgroup(field(p), d, SumsetConfig::default());
        match s {
            Ok(s) => {
                let pairs = mucrit_core::search::run_sequential(&s);
                let threefold = pairs.as_ref().ok().map(|r| threefold_search(&s, r).map(|t| t.verdict));
                PairRun { p, d, pairs, threefold }
            }
            Err(e) => PairRun { p, d, pairs: Err(e), threefold: None },
        }
    });

    let mut errors = Vec::new();
    let mut thm3_bad = Vec::new();
    let mut thm2_bad = Vec::new();
    let mut cor1_bad = Vec::new();
    let mut found = Vec::new();
    for r in &runs {
        let res = match &r.pairs {
            Ok(res) => res,
            Err(e) => {
                errors.push(format!("({}, {}): {e}", r.p, r.d));
                continue;
            }
        };
        if matches!(res.verdict, Verdict::Exhausted { .. }) {
            errors.push(format!("({}, {}): budget exhausted", r.p, r.d));
        }
        if r.p >= 7 && r.d == (r.p - 1) / 2 && !res.witnesses.is_empty() {
            thm3_bad.push(format!("p={}", r.p));
        }
        for w in &res.witnesses {
            found.push(format!("p={} d={}: {:?}+{:?}", r.p, r.d, w.a, w.b));
            let root = isqrt(r.d);
            if root != Some(w.a.len()) || root != Some(w.b.len()) {
                thm2_bad.push(format!("p={} d={} |A|={} |B|={}", r.p, r.d, w.a.len(), w.b.len()));
            }
        }
        match &r.threefold {
            Some(Ok(Verdict::NoneExists)) => {}
            other => cor1_bad.push(format!("p={} d={}: {other:?}", r.p, r.d)),
        }
    }
    let thm3_count = runs.iter().filter(|r| r.p >= 7 && r.d == (r.p - 1) / 2).count();

    let djobs = subgroup_jobs(bounds.diffset_p_max);
    let dres = runner.map(&djobs, |&(p, d)| {
        DiffsetSearch::for_subgroup(field(p), d).and_then(|s| mucrit_core::search::run_sequential(&s))
    });
    let mut exact_ds = BTreeSet::new();
    let mut strict = Vec::new();
    for (&(p, d), r) in djobs.iter().zip(&dres) {
        match r {
            Ok(r) => {
                if matches!(r.verdict, Verdict::Exhausted { .. }) {
                    errors.push(format!("diffset ({p}, {d}): budget exhausted"));
                }
                for w in &r.witnesses {
                    if w.exact {
                        exact_ds.insert(d);
                    } else {
                        strict.push(format!("p={p} d={d}: {:?}", w.set));
                    }
                }
            }
            Err(e) => errors.push(format!("diffset ({p}, {d}): {e}")),
        }
    }

    let checks = vec![
        CheckDto::new(
            "complete",
            errors.is_empty(),
            if errors.is_empty() { format!("{} sumset jobs, {} diffset jobs", jobs.len(), djobs.len()) } else { errors.join("; ") },
        ),
        CheckDto::new(
            "residues-not-sumsets",
            thm3_bad.is_empty() && thm3_count > 0,
            format!("d = (p-1)/2 for {thm3_count} primes 7..={}; decomposable: {thm3_bad:?}", bounds.sumset_p_max),
        ),
        CheckDto::new(
            "equal-sizes",
            thm2_bad.is_empty(),
            format!("{} decompositions found; off-size: {thm2_bad:?}; found: {}", found.len(), found.join(", ")),
        ),
        CheckDto::new(
            "difference-sets",
            exact_ds.iter().all(|d| *d == 2 || *d == 6),
            format!(
                "exact A - A = mu_d ∪ {{0}} for d in {exact_ds:?} (p <= {}); strict inclusions: {}",
                bounds.diffset_p_max,
                strict.join(", ")
            ),
        ),
        CheckDto::new("no-threefold", cor1_bad.is_empty(), format!("{} subgroups; failures: {cor1_bad:?}", runs.len())),
    ];
    SuiteDto::new("desk", checks)
}

// ---------------------------------------------------------------- oracles

pub const ORACLE_PRIMES: [u64; 4] = [41, 97, 10007, 1_000_003];

pub fn oracles(runner: &Runner, seed: u64) -> SuiteDto {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4f52);
    let sets: Vec<(u64, Vec<u64>)> = (0..500)
        .map(|i| {
            let p = ORACLE_PRIMES[i % 4];
            let n = rng.gen_range(2..=9);
            (p, random_set(&mut rng, p, n))
        })
        .collect();
    let coeff_bad: Vec<String> = runner
        .map(&sets, |(p, v)| {
            let a = FpSet::new(field(*p), v.iter().copied());
            let ok = match (hp_coeffs(&a), vandermonde_solve(&a)) {
                (Ok(c), Ok(v)) => c.c == v && c.moments_ok(),
                _ => false,
            };
            (!ok).then(|| format!("p={p} A={v:?}"))
        })
        .into_iter()
        .flatten()
        .collect();
    let hsets = &sets[..200];
    let h_bad: Vec<String> = runner
        .map(hsets, |(p, v)| {
            let a = FpSet::new(field(*p), v.iter().copied());
            let alpha = a.len() as u64;
            let h = complete_homogeneous_series(&a, 12);
            let ok = match hp_coeffs(&a) {
                Ok(c) => (0..=12).all(|m| c.moment(m as u64 + alpha - 1) == h[m]),
                Err(_) => false,
            };
            (!ok).then(|| format!("p={p} A={v:?}"))
        })
        .into_iter()
        .flatten()
        .collect();
    let checks = vec![
        CheckDto::new(
            "coefficients-vs-vandermonde",
            coeff_bad.is_empty(),
            if coeff_bad.is_empty() { "500 random sets".to_string() } else { coeff_bad.join("; ") },
        ),
        CheckDto::new(
            "complete-homogeneous",
            h_bad.is_empty(),
            if h_bad.is_empty() { "200 random sets, m = 0..=12".to_string() } else { h_bad.join("; ") },
        ),
    ];
    SuiteDto::new("oracles", checks)
}

// ---------------------------------------------------------------- single lemmas

pub const LEMMAS: [u32; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

/// `A + B = μ_4` in F_13, recentred so that `p_1` vanishes on both sides.
fn mu4_pair() -> (FpSet, FpSet) {
    let f = field(13);
    (FpSet::new(f, [2, 11]), FpSet::new(f, [3, 10]))
}

/// Checks for one lemma on small fixed instances; `None` if the number is
/// not covered.
pub fn lemma(n: u32) -> Option<SuiteDto> {
    let f41 = FpSet::new(field(41), F41_SET);
    let f13 = FpSet::new(field(13), [0, 1, 10]);
    let mut checks = Vec::new();
    let mut push = |name: &str, r: mucrit_core::Result<(bool, String)>| match r {
        Ok((ok, detail)) => checks.push(CheckDto::new(name, ok, detail)),
        Err(e) => checks.push(err_check(name, e)),
    };
    match n {
        1 => {
            for a in [&f41, &f13] {
                push(
                    "explicit-coefficients",
                    hp_coeffs(a).and_then(|c| {
                        let dual = hp_coeffs_dual_basis(a)?;
                        Ok((c == dual && c.moments_ok(), format!("A = {a}: c = {:?}", c.c)))
                    }),
                );
            }
        }
        2 => {
            for a in [&f41, &f13] {
                push(
                    "moments-are-h",
                    hp_coeffs(a).map(|c| {
                        let h = complete_homogeneous_series(a, 10);
                        let alpha = a.len() as u64;
                        let ok = (0..=10).all(|m| c.moment(m as u64 + alpha - 1) == h[m]);
                        (ok, format!("A = {a}, m = 0..=10"))
                    }),
                );
            }
        }
        3 => {
            push("f13-diffset", power_sum_vanishing(&f13, &f13.negated(), 6).map(|ok| (ok, "A - A = mu_6 ∪ {0}".into())));
            let (a, b) = mu4_pair();
            push("mu4-sumset", power_sum_vanishing(&a, &b, 4).map(|ok| (ok, "A + B = mu_4".into())));
        }
        4 => {
            push(
                "f41-factorization",
                factorization_check(&f41, &f41.negated(), 20).map(|r| (r.ok, format!("C = {}", r.c))),
            );
            push(
                "f13-factorization",
                factorization_check(&f13, &f13.negated(), 6).map(|r| (r.ok, format!("C = {}", r.c))),
            );
        }
        5 | 6 => {
            push(
                "f41-moments",
                lemma5_lemma6_numeric(&f41, 20).map(|r| (r.ok(), format!("{r:?}"))),
            );
            push("f13-exempt", lemma5_lemma6_numeric(&f13, 6).map(|r| (r.ok() && r.exempt, format!("{r:?}"))));
        }
        7 => {
            for &c in f41.values() {
                push(
                    &format!("transform-at-{c}"),
                    fractional_transform(&f41, c, 20).map(|t| (true, format!("A^{c} = {t}"))),
                );
            }
        }
        8 => {
            let (a, b) = mu4_pair();
            let (_, ma) = minimal_indices(&a);
            let (_, mb) = minimal_indices(&b);
            let f = a.field();
            let ok = ma == mb
                && ma.is_none_or(|m| {
                    let pa = power_sums(&a, m)[m];
                    let pb = power_sums(&b, m)[m];
                    f.add(f.mul(2, pb), f.mul(2, pa)) == 0
                });
            push("mu4-pair", Ok((ok, format!("m(A) = {ma:?}, m(B) = {mb:?}"))));
        }
        9 => {
            let (a, b) = mu4_pair();
            for &y in b.values() {
                push(&format!("at-b-{y}"), lemma9_identity(&a, &b, y, 4).map(|r| (r.ok, format!("C_0 = {}", r.c0))));
            }
        }
        10 => {
            let (a, b) = mu4_pair();
            for &y in b.values() {
                push(&format!("x-at-{y}"), relation_x(&a, &b, y, 4).map(|r| (r.ok, format!("{} = {}", r.lhs, r.rhs))));
                push(&format!("y-at-{y}"), relation_y(&a, &b, y, 4).map(|r| (r.ok, format!("{} = {}", r.lhs, r.rhs))));
            }
        }
        11 => {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let ok = (0..50).all(|_| {
                matches!(sum_residues_check(&random_split_form(&mut rng, 97)), Ok(ResidueCheck::Zero))
            });
            push("split-forms-p97", Ok((ok, "50 random forms".into())));
        }
        12 | 14 => {
            let (a, b) = mu4_pair();
            for which in NamedForm::ALL {
                push(
                    which.name(),
                    lemma_form_identity(which, &a, &b, 2, FormMode::Specialized { d: 4 })
                        .map(|r| (r.ok, format!("{} = {}", r.lhs, r.rhs))),
                );
            }
        }
        13 => match lemma13_symbolic() {
            Ok(r) => {
                for (name, ok) in r.checks {
                    checks.push(CheckDto::new(name, ok, ""));
                }
            }
            Err(e) => checks.push(err_check("symbolic", e)),
        },
        _ => return None,
    }
    Some(SuiteDto::new(&format!("lemma{n}"), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f41_passes() {
        let s = f41_bundle();
        assert!(s.ok, "{s:?}");
    }

    #[test]
    fn every_listed_lemma_passes() {
        for n in LEMMAS {
            let s = lemma(n).unwrap();
            assert!(s.ok, "{s:?}");
        }
        assert!(lemma(99).is_none());
    }

    #[test]
    fn jobs() {
        assert_eq!(subgroup_jobs(13), vec![(5, 2), (7, 2), (7, 3), (11, 2), (11, 5), (13, 2), (13, 3), (13, 4), (13, 6)]);
    }
}
