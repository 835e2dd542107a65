//! Hanson–Petridis polynomials and d-critical pairs.
//!
//! For `|A| = alpha` the coefficients `c_a(A)` are the unique solution of
//! `sum_a c_a a^m = [m == alpha - 1]` for `0 <= m < alpha`, and
//! `HP(x; A, d) = sum_a c_a (x + a)^(d + alpha - 1) - 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{invalid, precondition, Error, Result};
use crate::fp::{batch_inverse_raw, roots_of_unity, FactorialTable, FpSet, PrimeField};
use crate::poly::FpPoly;
use crate::symm::complete_homogeneous_series;

/// Membership table for `mu_d`.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub d: u64,
    pub set: FpSet,
    bits: Option<Bitset>,
}

/// Above this modulus membership falls back to binary search.
const BITSET_LIMIT: u64 = 1 << 26;

impl SubgroupTable {
    pub fn new(field: PrimeField, d: u64) -> Result<Self> {
        let set = roots_of_unity(field, d)?;
        let bits = (field.modulus() <= BITSET_LIMIT).then(|| {
            Bitset::from_indices(
                field.modulus() as usize,
                set.values().iter().map(|&v| v as usize),
            )
        });
        Ok(SubgroupTable { d, set, bits })
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        match &self.bits {
            Some(b) => b.contains(x as usize),
            None => self.set.contains(x),
        }
    }
}

/// The coefficients `c_a(A)`, aligned with `set.values()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpCoeffs {
    pub set: FpSet,
    pub c: Vec<u64>,
}

impl HpCoeffs {
    pub fn get(&self, a: u64) -> Option<u64> {
        let i = self.set.values().binary_search(&a).ok()?;
        Some(self.c[i])
    }

    /// `sum_a c_a a^m`.
    pub fn moment(&self, m: u64) -> u64 {
        let f = self.set.field();
        self.set
            .values()
            .iter()
            .zip(&self.c)
            .fold(0, |acc, (&a, &c)| f.add(acc, f.mul(c, f.pow(a, m))))
    }

    /// True iff the defining moment conditions hold.
    pub fn moments_ok(&self) -> bool {
        let alpha = self.set.len() as u64;
        (0..alpha).all(|m| self.moment(m) == u64::from(m + 1 == alpha))
    }
}

fn check_set_size(a: &FpSet) -> Result<()> {
    if a.len() < 2 {
        return Err(invalid!("need |A| >= 2, got {}", a.len()));
    }
    if a.len() as u64 >= a.modulus() {
        return Err(invalid!("need |A| < p"));
    }
    Ok(())
}

/// `c_a = 1 / prod_{a' != a} (a - a')`, one batched inversion.
pub fn hp_coeffs(a: &FpSet) -> Result<HpCoeffs> {
    check_set_size(a)?;
    let f = a.field();
    let vals = a.values();
    let prods: Vec<u64> = vals
        .iter()
        .map(|&x| {
            vals.iter()
                .filter(|&&y| y != x)
                .fold(1, |acc, &y| f.mul(acc, f.sub(x, y)))
        })
        .collect();
    Ok(HpCoeffs { set: a.clone(), c: batch_inverse_raw(f, &prods)? })
}

/// Dual-basis route: `c_a = 1 / q_a(a)` with `q_a = prod(x - a') / (x - a)`.
pub fn hp_coeffs_dual_basis(a: &FpSet) -> Result<HpCoeffs> {
    check_set_size(a)?;
    let f = a.field();
    let g = FpPoly::from_roots(a, 1)?;
    let vals: Vec<u64> = a
        .values()
        .iter()
        .map(|&x| {
            let (q, _) = g.synthetic_division(x);
            q.eval(x)
        })
        .collect();
    Ok(HpCoeffs { set: a.clone(), c: batch_inverse_raw(f, &vals)? })
}

/// Reference path: Gaussian elimination on the Vandermonde moment system.
pub fn vandermonde_solve(a: &FpSet) -> Result<Vec<u64>> {
    check_set_size(a)?;
    let f = a.field();
    let n = a.len();
    // row m: sum_j a_j^m c_j = [m == n-1]
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|m| {
            let mut r: Vec<u64> = a.values().iter().map(|&x| f.pow(x, m as u64)).collect();
            r.push(u64::from(m + 1 == n));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| rows[r][col] != 0)
            .ok_or_else(|| Error::InvariantViolated("singular Vandermonde system".into()))?;
        rows.swap(col, piv);
        let inv = f.inv(rows[col][col])?;
        for v in rows[col].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for r in 0..n {
            if r != col && rows[r][col] != 0 {
                let k = rows[r][col];
                for j in col..=n {
                    let t = f.mul(k, rows[col][j]);
                    rows[r][j] = f.sub(rows[r][j], t);
                }
            }
        }
    }
    Ok(rows.into_iter().map(|r| r[n]).collect())
}

fn check_hp_domain(a: &FpSet, d: u64) -> Result<u64> {
    check_set_size(a)?;
    if d == 0 {
        return Err(invalid!("d must be positive"));
    }
    let n = a.len() as u64 + d - 1;
    if n >= a.modulus() {
        return Err(precondition!(
            "alpha + d - 1 = {n} must be below p = {}",
            a.modulus()
        ));
    }
    Ok(n)
}

/// `HP(x; A, d)`. The coefficient of `x^j` is `C(N, j) h_{d-j}(A)` with
/// `N = alpha + d - 1`, so the degree is exactly `d`.
pub fn hp_polynomial(a: &FpSet, d: u64) -> Result<FpPoly> {
    let n = check_hp_domain(a, d)?;
    let f = a.field();
    let table = FactorialTable::new(f, n)?;
    let h = complete_homogeneous_series(a, d as usize);
    let mut coeffs: Vec<u64> = (0..=d)
        .map(|j| f.mul(table.binom(n, j), h[(d - j) as usize]))
        .collect();
    coeffs[0] = f.sub(coeffs[0], 1);
    let poly = FpPoly::from_coeffs(f, coeffs);
    if poly.degree() != Some(d as usize) {
        return Err(Error::InvariantViolated(alloc::format!(
            "deg HP = {:?}, expected {d}",
            poly.degree()
        )));
    }
    Ok(poly)
}

/// Expands `sum_a c_a (x + a)^N - 1` term by term (reference path).
pub fn hp_polynomial_direct(a: &FpSet, d: u64) -> Result<FpPoly> {
    let n = check_hp_domain(a, d)?;
    let f = a.field();
    let table = FactorialTable::new(f, n)?;
    let c = hp_coeffs(a)?;
    let mut coeffs = vec![0u64; n as usize + 1];
    for (&x, &cx) in a.values().iter().zip(&c.c) {
        let mut pw = 1 % f.modulus(); // x^(N-j), j descending
        for j in (0..=n).rev() {
            let t = f.mul(cx, f.mul(table.binom(n, j), pw));
            coeffs[j as usize] = f.add(coeffs[j as usize], t);
            pw = f.mul(pw, x);
        }
    }
    coeffs[0] = f.sub(coeffs[0], 1);
    Ok(FpPoly::from_coeffs(f, coeffs))
}

/// How `A + B` sits relative to `mu_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumsetShape {
    /// `A + B = mu_d`
    Mu,
    /// `A + B = mu_d ∪ {0}`
    MuWithZero,
    /// `A + B` is a proper subset of `mu_d ∪ {0}`
    Proper,
    /// Some sum lies outside `mu_d ∪ {0}`
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub a: FpSet,
    pub b: FpSet,
    pub d: u64,
    /// `A + B ⊆ mu_d ∪ {0}`
    pub sumset_ok: bool,
    pub shape: SumsetShape,
    /// `|(-A) ∩ B|`
    pub overlap: usize,
    pub critical: bool,
    /// `(b, epsilon(b))` for every `b` in `B`.
    pub epsilon: Vec<(u64, bool)>,
    /// First pair with `a + b` outside `mu_d ∪ {0}`.
    pub witness_outside: Option<(u64, u64)>,
}

/// Checks `A + B ⊆ mu_d ∪ {0}` and `|A||B| = d + |(-A) ∩ B|`.
pub fn criticality(a: &FpSet, b: &FpSet, d: u64) -> Result<CriticalityReport> {
    a.check_same_field(b)?;
    if a.len() < 2 || b.len() < 2 {
        return Err(invalid!("criticality needs |A|, |B| > 1"));
    }
    let f = a.field();
    f.check_divides(d)?;
    let mu = SubgroupTable::new(f, d)?;
    criticality_with(a, b, &mu)
}

/// [`criticality`] against a precomputed subgroup table.
pub fn criticality_with(a: &FpSet, b: &FpSet, mu: &SubgroupTable) -> Result<CriticalityReport> {
    a.check_same_field(b)?;
    let f = a.field();
    let mut witness_outside = None;
    let mut hit_zero = false;
    'outer: for &x in a.values() {
        for &y in b.values() {
            let s = f.add(x, y);
            if s == 0 {
                hit_zero = true;
            } else if !mu.contains(s) {
                witness_outside = Some((x, y));
                break 'outer;
            }
        }
    }
    let sumset_ok = witness_outside.is_none();
    let neg_a = a.negated();
    let epsilon: Vec<(u64, bool)> = b.values().iter().map(|&y| (y, neg_a.contains(y))).collect();
    let overlap = epsilon.iter().filter(|e| e.1).count();
    let critical = sumset_ok && (a.len() * b.len()) as u64 == mu.d + overlap as u64;
    let shape = if !sumset_ok {
        SumsetShape::Outside
    } else {
        let sums = a.sumset(b)?;
        let nonzero = sums.len() - usize::from(hit_zero);
        match (nonzero as u64 == mu.d, hit_zero) {
            (true, false) => SumsetShape::Mu,
            (true, true) => SumsetShape::MuWithZero,
            _ => SumsetShape::Proper,
        }
    };
    Ok(CriticalityReport {
        a: a.clone(),
        b: b.clone(),
        d: mu.d,
        sumset_ok,
        shape,
        overlap,
        critical,
        epsilon,
        witness_outside,
    })
}

/// Checks `sum_{a,b} (a + b)^k = 0` for every `1 <= k < d`.
///
/// Requires `A + B` to be exactly `mu_d` or `mu_d ∪ {0}`.
pub fn power_sum_vanishing(a: &FpSet, b: &FpSet, d: u64) -> Result<bool> {
    let rep = criticality(a, b, d)?;
    if !matches!(rep.shape, SumsetShape::Mu | SumsetShape::MuWithZero) {
        return Err(precondition!("A + B is not mu_{d} or mu_{d} ∪ {{0}}"));
    }
    let f = a.field();
    let mut sums = vec![0u64; d as usize];
    for &x in a.values() {
        for &y in b.values() {
            let s = f.add(x, y);
            let mut pw = s;
            for slot in sums.iter_mut().skip(1) {
                *slot = f.add(*slot, pw);
                pw = f.mul(pw, s);
            }
        }
    }
    Ok(sums.iter().skip(1).all(|&v| v == 0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    /// Leading coefficient of `HP`.
    pub c: u64,
    /// `C(alpha + d - 1, d) mod p`.
    pub binomial: u64,
    pub hp: FpPoly,
    pub rhs: FpPoly,
    pub ok: bool,
}

/// Compares `HP(x; A, d)` with `C prod_b (x - b)^(alpha - epsilon(b))`.
pub fn factorization_check(a: &FpSet, b: &FpSet, d: u64) -> Result<FactorizationReport> {
    let rep = criticality(a, b, d)?;
    if !rep.critical {
        return Err(precondition!("(A, B) is not {d}-critical"));
    }
    let f = a.field();
    let hp = hp_polynomial(a, d)?;
    let c = hp.leading();
    let alpha = a.len();
    let mut rhs = FpPoly::constant(f, c);
    for &(y, eps) in &rep.epsilon {
        for _ in 0..alpha - usize::from(eps) {
            rhs = rhs.mul_linear(y);
        }
    }
    let n = alpha as u64 + d - 1;
    let binomial = FactorialTable::new(f, n)?.binom(n, d);
    let ok = hp == rhs;
    Ok(FactorizationReport { c, binomial, hp, rhs, ok })
}

/// Multiplicity of every `b` in `B` as a root of `HP(x; A, d)`.
pub fn hp_root_orders(a: &FpSet, b: &FpSet, d: u64) -> Result<Vec<(u64, usize)>> {
    let hp = hp_polynomial(a, d)?;
    Ok(b
        .values()
        .iter()
        .map(|&y| (y, hp.root_multiplicity(y).unwrap_or(0)))
        .collect())
}

fn require_antipodal_critical(a: &FpSet, d: u64) -> Result<()> {
    let rep = criticality(a, &a.negated(), d)?;
    if !rep.critical {
        return Err(precondition!("(A, -A) is not {d}-critical"));
    }
    Ok(())
}

/// `A^a = {0} ∪ {1/(a - a') : a' != a}`; re-checks criticality of the
/// result.
pub fn fractional_transform(a: &FpSet, center: u64, d: u64) -> Result<FpSet> {
    if !a.contains(center) {
        return Err(invalid!("{center} is not an element of A"));
    }
    require_antipodal_critical(a, d)?;
    let f = a.field();
    let diffs: Vec<u64> = a
        .values()
        .iter()
        .filter(|&&x| x != center)
        .map(|&x| f.sub(center, x))
        .collect();
    let inv = batch_inverse_raw(f, &diffs)?;
    let out = FpSet::new(f, core::iter::once(0).chain(inv));
    if out.len() != a.len() {
        return Err(Error::InvariantViolated("transform is not injective".into()));
    }
    let rep = criticality(&out, &out.negated(), d)?;
    if !rep.critical {
        return Err(Error::InvariantViolated(alloc::format!(
            "A^{center} lost {d}-criticality"
        )));
    }
    Ok(out)
}

/// `A_b = {1/(a + b) : a in A}`.
pub fn reciprocal_set(a: &FpSet, b: u64) -> Result<FpSet> {
    let f = a.field();
    let sums: Vec<u64> = a.values().iter().map(|&x| f.add(x, b)).collect();
    if let Some(x) = a.values().iter().find(|&&x| f.add(x, b) == 0) {
        return Err(precondition!("{x} + {b} = 0"));
    }
    Ok(FpSet::new(f, batch_inverse_raw(f, &sums)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma9Report {
    pub c0: u64,
    /// `(-1)^(alpha-1) prod (a + b)`, the constant that makes the
    /// identity hold.
    pub c_inf: u64,
    /// `prod (a + b)` without the sign; equals `c_inf` for odd `alpha`.
    pub c_inf_unsigned: u64,
    pub lhs: FpPoly,
    pub rhs: FpPoly,
    /// `c_{1/(a+b)}(A_b) = C_inf c_a(A) (a + b)^(alpha - 2)` for every `a`.
    pub coefficients_ok: bool,
    /// Whether the identity also holds with the unsigned product.
    pub unsigned_ok: bool,
    pub ok: bool,
}

fn binomial_expansion(f: PrimeField, table: &FactorialTable, n: u64, u: u64, scale: u64, acc: &mut [u64]) {
    // acc += scale * (x + u)^n
    let mut pw = 1 % f.modulus();
    for j in (0..=n).rev() {
        let t = f.mul(scale, f.mul(table.binom(n, j), pw));
        acc[j as usize] = f.add(acc[j as usize], t);
        pw = f.mul(pw, u);
    }
}

/// The polynomial identity obtained from the factorization under
/// `x -> 1/x + b`, for `A + B ⊆ mu_d` with `|A||B| = d`:
///
/// `sum_a c_{1/(a+b)}(A_b) (a+b) (x + 1/(a+b))^N
///   = C_inf x^N + C_0 x^(alpha-1) prod_{b' != b} (x + 1/(b - b'))^alpha`
///
/// with `N = alpha + d - 1`, `C_0 = C(N, alpha)` and
/// `C_inf = (-1)^(alpha-1) prod (a + b)`. The sign comes from
/// `prod_{a' != a} (a' - a) = (-1)^(alpha-1) prod_{a' != a} (a - a')`.
pub fn lemma9_identity(a: &FpSet, b_set: &FpSet, b: u64, d: u64) -> Result<Lemma9Report> {
    if !b_set.contains(b) {
        return Err(invalid!("{b} is not an element of B"));
    }
    let rep = criticality(a, b_set, d)?;
    if rep.shape != SumsetShape::Mu {
        return Err(precondition!("A + B is not mu_{d}"));
    }
    let n = check_hp_domain(a, d)?;
    let f = a.field();
    let alpha = a.len() as u64;
    let table = FactorialTable::new(f, n)?;
    let ab = reciprocal_set(a, b)?;
    let cab = hp_coeffs(&ab)?;
    let ca = hp_coeffs(a)?;
    let c_inf_unsigned = a.values().iter().fold(1, |acc, &x| f.mul(acc, f.add(x, b)));
    let c_inf = if alpha % 2 == 0 { f.neg(c_inf_unsigned) } else { c_inf_unsigned };
    let c0 = table.binom(n, alpha);

    let mut lhs = vec![0u64; n as usize + 1];
    let mut coefficients_ok = true;
    for &x in a.values() {
        let s = f.add(x, b);
        let u = f.inv(s)?;
        let cu = cab.get(u).expect("1/(a+b) is in A_b");
        let expected = f.mul(c_inf, f.mul(ca.get(x).unwrap(), f.pow(s, alpha - 2)));
        coefficients_ok &= cu == expected;
        binomial_expansion(f, &table, n, u, f.mul(cu, s), &mut lhs);
    }
    let lhs = FpPoly::from_coeffs(f, lhs);

    let mut prod = FpPoly::one(f);
    for &y in b_set.values().iter().filter(|&&y| y != b) {
        let u = f.inv(f.sub(b, y))?;
        let lin = FpPoly::from_coeffs(f, vec![u, 1]);
        prod = prod.mul(&lin.pow(alpha));
    }
    let tail = prod.shift_up(alpha as usize - 1).scale(c0);
    let rhs = FpPoly::monomial(f, c_inf, n as usize).add(&tail);
    let unsigned_ok = lhs == FpPoly::monomial(f, c_inf_unsigned, n as usize).add(&tail);
    let ok = lhs == rhs;
    Ok(Lemma9Report { c0, c_inf, c_inf_unsigned, lhs, rhs, coefficients_ok, unsigned_ok, ok })
}

/// Both sides of a scalar relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub b: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
}

struct RelationSums {
    sa: u64,
    sa2: u64,
    sb: u64,
    sb2: u64,
}

fn relation_sums(a: &FpSet, b_set: &FpSet, b: u64) -> Result<RelationSums> {
    a.check_same_field(b_set)?;
    if !b_set.contains(b) {
        return Err(invalid!("{b} is not an element of B"));
    }
    let f = a.field();
    let sums: Vec<u64> = a.values().iter().map(|&x| f.add(x, b)).collect();
    if sums.contains(&0) {
        return Err(precondition!("B meets -A at {b}"));
    }
    let inv_a = batch_inverse_raw(f, &sums)?;
    let diffs: Vec<u64> = b_set
        .values()
        .iter()
        .filter(|&&y| y != b)
        .map(|&y| f.sub(b, y))
        .collect();
    let inv_b = batch_inverse_raw(f, &diffs)?;
    let sq = |v: &[u64]| v.iter().fold(0, |acc, &x| f.add(acc, f.mul(x, x)));
    let sum = |v: &[u64]| v.iter().fold(0, |acc, &x| f.add(acc, x));
    Ok(RelationSums { sa: sum(&inv_a), sa2: sq(&inv_a), sb: sum(&inv_b), sb2: sq(&inv_b) })
}

/// `sum_a 1/(a+b) = alpha(alpha+1)/(d-1) * sum_{b' != b} 1/(b-b')`.
///
/// Only the divisions are guarded; criticality is not enforced so the
/// relation can be evaluated on arbitrary inputs.
pub fn relation_x(a: &FpSet, b_set: &FpSet, b: u64, d: u64) -> Result<RelationReport> {
    let f = a.field();
    let s = relation_sums(a, b_set, b)?;
    let alpha = a.len() as i64;
    let factor = f.mul(
        f.mul(alpha as u64 % f.modulus(), (alpha + 1) as u64 % f.modulus()),
        f.inv_int(d as i64 - 1)?,
    );
    let rhs = f.mul(factor, s.sb);
    Ok(RelationReport { b, lhs: s.sa, rhs, ok: s.sa == rhs })
}

/// `(sum 1/(a+b))^2 + sum 1/(a+b)^2 = alpha(alpha+1)(alpha+2)/((d-1)(d-2))
///   * (alpha (sum' 1/(b-b'))^2 - sum' 1/(b-b')^2)`.
pub fn relation_y(a: &FpSet, b_set: &FpSet, b: u64, d: u64) -> Result<RelationReport> {
    let f = a.field();
    let s = relation_sums(a, b_set, b)?;
    let al = a.len() as u64 % f.modulus();
    let num = f.mul(al, f.mul(f.add(al, 1), f.add(al, 2)));
    let factor = f.mul(
        num,
        f.mul(f.inv_int(d as i64 - 1)?, f.inv_int(d as i64 - 2)?),
    );
    let lhs = f.add(f.mul(s.sa, s.sa), s.sa2);
    let rhs = f.mul(factor, f.sub(f.mul(al, f.mul(s.sb, s.sb)), s.sb2));
    Ok(RelationReport { b, lhs, rhs, ok: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::is_prime;
    use crate::symm::complete_homogeneous;
    use proptest::prelude::*;

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn f41_set() -> FpSet {
        FpSet::new(fld(41), [0, 1, 9, 32, 40])
    }

    #[test]
    fn two_element_coefficients() {
        let f = fld(13);
        let c = hp_coeffs(&FpSet::new(f, [0, 1])).unwrap();
        assert_eq!(c.c, vec![12, 1]);
        assert!(c.moments_ok());
    }

    #[test]
    fn f41_coefficients_agree() {
        let a = f41_set();
        let c = hp_coeffs(&a).unwrap();
        assert!(c.moments_ok());
        assert_eq!(c, hp_coeffs_dual_basis(&a).unwrap());
        assert_eq!(c.c, vandermonde_solve(&a).unwrap());
    }

    #[test]
    fn f41_criticality_and_factorization() {
        let a = f41_set();
        let rep = criticality(&a, &a.negated(), 20).unwrap();
        assert!(rep.critical && rep.sumset_ok);
        assert_eq!(rep.overlap, 5);
        assert_eq!(rep.shape, SumsetShape::Proper);
        let fr = factorization_check(&a, &a.negated(), 20).unwrap();
        assert!(fr.ok);
        assert_eq!(fr.c, 7);
        assert_eq!(fr.binomial, 7);
        // vanishing to order 4 at each -a
        for (_, m) in hp_root_orders(&a, &a.negated(), 20).unwrap() {
            assert_eq!(m, 4);
        }
        assert_eq!(hp_polynomial(&a, 20).unwrap(), hp_polynomial_direct(&a, 20).unwrap());
    }

    #[test]
    fn f13_examples() {
        let f = fld(13);
        let a = FpSet::new(f, [0, 1, 10]);
        let rep = criticality(&a, &a.negated(), 6).unwrap();
        assert!(rep.critical);
        assert_eq!(rep.shape, SumsetShape::MuWithZero);
        assert!(factorization_check(&a, &a.negated(), 6).unwrap().ok);
        assert!(power_sum_vanishing(&a, &a.negated(), 6).unwrap());
        let two = FpSet::new(f, [0, 1]);
        let rep = criticality(&two, &two.negated(), 2).unwrap();
        assert!(rep.critical);
        let t = fractional_transform(&a, 1, 6).unwrap();
        assert_eq!(t.len(), 3);
        assert!(fractional_transform(&a, 2, 6).is_err());
    }

    #[test]
    fn f41_power_sums_of_sums_vanish_is_rejected_for_proper_sumset() {
        let a = f41_set();
        assert!(matches!(
            power_sum_vanishing(&a, &a.negated(), 20),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn non_critical_pair_is_rejected() {
        let f = fld(13);
        let a = FpSet::new(f, [0, 2]);
        assert!(matches!(
            factorization_check(&a, &a.negated(), 6),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn f41_fractional_transforms_stay_critical() {
        let a = f41_set();
        for &x in a.values() {
            let t = fractional_transform(&a, x, 20).unwrap();
            assert_eq!(t.len(), 5);
        }
    }

    fn mu4_pair() -> (FpSet, FpSet) {
        let f = fld(13);
        (FpSet::new(f, [0, 4]), FpSet::new(f, [1, 8]))
    }

    #[test]
    fn lemma9_and_relations_on_a_sumset_pair() {
        let (a, b) = mu4_pair();
        assert_eq!(a.sumset(&b).unwrap(), roots_of_unity(a.field(), 4).unwrap());
        assert!(factorization_check(&a, &b, 4).unwrap().ok);
        for &y in b.values() {
            let l9 = lemma9_identity(&a, &b, y, 4).unwrap();
            assert!(l9.ok && l9.coefficients_ok);
            // alpha = 2 is even: the unsigned constant is off by a sign
            assert!(!l9.unsigned_ok);
            assert!(relation_x(&a, &b, y, 4).unwrap().ok);
            assert!(relation_y(&a, &b, y, 4).unwrap().ok);
            assert_eq!(reciprocal_set(&a, y).unwrap().len(), 2);
        }
        // perturbed B: relation X fails somewhere
        let bad = FpSet::new(a.field(), [1, 7]);
        assert!(bad.values().iter().any(|&y| !relation_x(&a, &bad, y, 4).unwrap().ok));
        assert!(reciprocal_set(&a, 9).is_err());
    }

    #[test]
    fn relation_guards() {
        let f = fld(13);
        let a = FpSet::new(f, [0, 4]);
        let b = FpSet::new(f, [1, 8]);
        assert!(matches!(
            relation_x(&a, &b, 1, 14),
            Err(Error::DivisorVanishes { .. })
        ));
        assert!(matches!(
            relation_y(&a, &b, 1, 15),
            Err(Error::DivisorVanishes { .. })
        ));
    }

    #[test]
    fn hp_domain_checks() {
        let a = f41_set();
        assert!(hp_polynomial(&a, 40).is_err());
        assert!(hp_polynomial(&FpSet::new(a.field(), [3]), 4).is_err());
    }

    fn prime_set() -> impl Strategy<Value = (u64, Vec<u64>)> {
        prop_oneof![Just(41u64), Just(97), Just(10007)]
            .prop_flat_map(|p| (Just(p), proptest::collection::vec(0..p, 2..9)))
            .prop_filter("distinct", |(_, v)| {
                let mut w = v.clone();
                w.sort();
                w.dedup();
                w.len() >= 2
            })
    }

    proptest! {
        #[test]
        fn explicit_matches_vandermonde((p, raw) in prime_set()) {
            let a = FpSet::new(fld(p), raw);
            let c = hp_coeffs(&a).unwrap();
            prop_assert!(c.moments_ok());
            prop_assert_eq!(&c.c, &vandermonde_solve(&a).unwrap());
            prop_assert_eq!(&c, &hp_coeffs_dual_basis(&a).unwrap());
        }

        #[test]
        fn shift_invariance((p, raw) in prime_set(), t in 0u64..10007) {
            let f = fld(p);
            let a = FpSet::new(f, raw);
            let c = hp_coeffs(&a).unwrap();
            let ct = hp_coeffs(&a.translated(t)).unwrap();
            for &x in a.values() {
                prop_assert_eq!(ct.get(f.add(x, t % p)), c.get(x));
            }
        }

        #[test]
        fn complete_homogeneous_from_coefficients((p, raw) in prime_set()) {
            let a = FpSet::new(fld(p), raw);
            let c = hp_coeffs(&a).unwrap();
            let alpha = a.len() as u64;
            for m in 0..=10u64 {
                prop_assert_eq!(c.moment(m + alpha - 1), complete_homogeneous(&a, m as usize));
            }
        }

        #[test]
        fn hp_degree_and_leading((p, raw) in prime_set(), d in 1u64..30) {
            let f = fld(p);
            let a = FpSet::new(f, raw);
            prop_assume!(a.len() as u64 + d - 1 < p);
            let hp = hp_polynomial(&a, d).unwrap();
            prop_assert_eq!(hp.degree(), Some(d as usize));
            let n = a.len() as u64 + d - 1;
            prop_assert_eq!(hp.leading(), crate::fp::binom_mod(n as i64, d as i64, f).unwrap().value());
            prop_assert_eq!(hp, hp_polynomial_direct(&a, d).unwrap());
        }
    }

    #[test]
    fn f41_is_prime_guard() {
        assert!(is_prime(41));
    }
}
