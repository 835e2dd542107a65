//! Symmetric functions of a finite set of residues.
//!
//! All values are raw residues modulo the set's prime. Sign convention:
//! `from_roots(A, 1) = sum_k (-1)^k e_k x^(alpha - k)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fp::{FpSet, PrimeField};
use crate::poly::FpPoly;

/// `[p_0, ..., p_K]` with `p_0 = |A| mod p`.
pub fn power_sums(a: &FpSet, k_max: usize) -> Vec<u64> {
    let f = a.field();
    let mut out = vec![0u64; k_max + 1];
    for &x in a.values() {
        let mut pw = 1 % f.modulus();
        for slot in out.iter_mut() {
            *slot = f.add(*slot, pw);
            pw = f.mul(pw, x);
        }
    }
    out
}

/// `[e_0, ..., e_alpha]` read off the coefficients of `prod (x - a)`.
pub fn elementary(a: &FpSet) -> Vec<u64> {
    let f = a.field();
    if a.is_empty() {
        return vec![1 % f.modulus()];
    }
    let g = FpPoly::from_roots(a, 1).expect("nonempty");
    let alpha = a.len();
    (0..=alpha)
        .map(|k| {
            let c = g.coeff(alpha - k);
            if k % 2 == 1 {
                f.neg(c)
            } else {
                c
            }
        })
        .collect()
}

/// `[h_0, ..., h_K]` as the coefficients of `1 / prod (1 - a x)`.
pub fn complete_homogeneous_series(a: &FpSet, k_max: usize) -> Vec<u64> {
    let f = a.field();
    let mut h = vec![0u64; k_max + 1];
    h[0] = 1 % f.modulus();
    // multiply by 1/(1 - a x) = 1 + a x + a^2 x^2 + ... one factor at a time
    for &x in a.values() {
        for k in 1..=k_max {
            h[k] = f.add(h[k], f.mul(x, h[k - 1]));
        }
    }
    h
}

/// `h_m(A)`, the sum of all degree-`m` monomials in the elements of `A`.
pub fn complete_homogeneous(a: &FpSet, m: usize) -> u64 {
    complete_homogeneous_series(a, m)[m]
}

/// Direction for [`newton_convert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonDirection {
    /// `[p_0..p_K] -> [e_0..e_K]`
    PowerToElementary,
    /// `[p_0..p_K] -> [h_0..h_K]`
    PowerToComplete,
    /// `[e_0..e_K] -> [p_0..p_K]`; `p_0` is the number of variables.
    ElementaryToPower { variables: u64 },
}

/// Newton's identities. Indices `k` with `k = 0 mod p` that need a
/// division are rejected.
pub fn newton_convert(field: PrimeField, input: &[u64], direction: NewtonDirection) -> Result<Vec<u64>> {
    let f = field;
    let n = input.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = vec![0u64; n];
    match direction {
        NewtonDirection::PowerToElementary | NewtonDirection::PowerToComplete => {
            let alternate = direction == NewtonDirection::PowerToElementary;
            out[0] = 1 % f.modulus();
            for k in 1..n {
                // k x_k = sum_{i=1}^k (+-1)^(i-1) x_{k-i} p_i
                let mut s = 0u64;
                for i in 1..=k {
                    let t = f.mul(out[k - i], input[i]);
                    s = if alternate && i % 2 == 0 { f.sub(s, t) } else { f.add(s, t) };
                }
                out[k] = f.mul(s, f.inv_int(k as i64)?);
            }
        }
        NewtonDirection::ElementaryToPower { variables } => {
            out[0] = variables % f.modulus();
            for k in 1..n {
                // p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
                let mut s = 0u64;
                for i in 1..k {
                    let t = f.mul(input[i], out[k - i]);
                    s = if i % 2 == 0 { f.sub(s, t) } else { f.add(s, t) };
                }
                let t = f.mul(k as u64 % f.modulus(), input[k]);
                s = if k % 2 == 0 { f.sub(s, t) } else { f.add(s, t) };
                out[k] = s;
            }
        }
    }
    Ok(out)
}

/// `(n, m)`: `n` is the least `k > 0` with `p_k != 0`; `m` the least
/// `k <= alpha` with `p_k != 0` and `n` not dividing `k`.
///
/// `n` is absent only for `A` contained in `{0}`.
pub fn minimal_indices(a: &FpSet) -> (Option<usize>, Option<usize>) {
    let alpha = a.len();
    let ps = power_sums(a, alpha.max(1));
    let n = (1..=alpha).find(|&k| ps[k] != 0);
    let m = n.and_then(|n| (n + 1..=alpha).find(|&k| ps[k] != 0 && k % n != 0));
    (n, m)
}

/// `A - p_1(A)/alpha`, the translate with vanishing first power sum.
pub fn recentered(a: &FpSet) -> Result<FpSet> {
    let f = a.field();
    let p1 = power_sums(a, 1)[1];
    let shift = f.mul(p1, f.inv_int(a.len() as i64)?);
    Ok(a.translated(f.neg(shift)))
}

/// Power sums, elementary and complete homogeneous values of one set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymProfile {
    pub set: FpSet,
    pub p: Vec<u64>,
    pub e: Vec<u64>,
    pub h: Vec<u64>,
    pub n: Option<usize>,
    pub m: Option<usize>,
}

impl SymProfile {
    /// Profile with power sums and `h` up to `k_max` (at least `|A|`).
    pub fn new(a: &FpSet, k_max: usize) -> Self {
        let k = k_max.max(a.len());
        let (n, m) = minimal_indices(a);
        SymProfile {
            set: a.clone(),
            p: power_sums(a, k),
            e: elementary(a),
            h: complete_homogeneous_series(a, k),
            n,
            m,
        }
    }
}

impl From<&FpSet> for SymProfile {
    fn from(a: &FpSet) -> Self {
        SymProfile::new(a, a.len())
    }
}

/// Fails with `DivisorVanishes` if any of `1..=k` vanishes mod `p`.
pub fn require_small_divisors(field: PrimeField, k: usize) -> Result<()> {
    if k as u64 >= field.modulus() {
        return Err(Error::DivisorVanishes {
            divisor: field.modulus() as i64,
            modulus: field.modulus(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::is_prime;
    use proptest::prelude::*;

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn f41_power_sums() {
        let f = fld(41);
        let a = FpSet::new(f, [0, 1, 9, 32, 40]);
        let ps = power_sums(&a, 7);
        assert_eq!(ps, vec![5, 0, 0, 0, 4, 0, 0, 0]);
        assert_eq!(minimal_indices(&a), (Some(4), None));
    }

    #[test]
    fn simple_power_sums() {
        let f = fld(97);
        let a = FpSet::new(f, [5]);
        let ps = power_sums(&a, 6);
        for (k, &v) in ps.iter().enumerate() {
            assert_eq!(v, f.pow(5, k as u64));
        }
        let pm = FpSet::new(f, [1, 96]);
        let ps = power_sums(&pm, 9);
        for (k, &v) in ps.iter().enumerate() {
            assert_eq!(v, if k % 2 == 0 { 2 } else { 0 });
        }
        assert_eq!(minimal_indices(&pm), (Some(2), None));
        assert_eq!(minimal_indices(&FpSet::new(f, [3, 4])).0, Some(1));
    }

    #[test]
    fn complete_homogeneous_examples() {
        let f = fld(7);
        let a = FpSet::new(f, [1, 2]);
        assert_eq!(complete_homogeneous(&a, 0), 1);
        assert_eq!(complete_homogeneous(&a, 1), power_sums(&a, 1)[1]);
        assert_eq!(complete_homogeneous(&a, 2), 0);
        let ps = power_sums(&a, 2);
        let rhs = f.mul(f.add(f.mul(ps[1], ps[1]), ps[2]), f.inv(2).unwrap());
        assert_eq!(rhs, 0);
    }

    #[test]
    fn newton_examples() {
        let f = fld(97);
        // p1 = p2 = 0  =>  e3 = p3 / 3
        let e = newton_convert(f, &[4, 0, 0, 12], NewtonDirection::PowerToElementary).unwrap();
        assert_eq!(e[3], 4);
        let e = newton_convert(f, &[4, 0, 0, 0, 0], NewtonDirection::PowerToElementary).unwrap();
        assert_eq!(e, vec![1, 0, 0, 0, 0]);
        let f3 = fld(3);
        assert!(matches!(
            newton_convert(f3, &[1, 1, 1, 1], NewtonDirection::PowerToElementary),
            Err(Error::DivisorVanishes { divisor: 3, modulus: 3 })
        ));
    }

    #[test]
    fn newton_matches_from_roots_on_six_elements() {
        let f = fld(97);
        let a = FpSet::new(f, [3, 14, 15, 92, 65, 35]);
        let e = newton_convert(f, &power_sums(&a, 6), NewtonDirection::PowerToElementary).unwrap();
        assert_eq!(e, elementary(&a));
        let back =
            newton_convert(f, &e, NewtonDirection::ElementaryToPower { variables: 6 }).unwrap();
        assert_eq!(back, power_sums(&a, 6));
        let h = newton_convert(f, &power_sums(&a, 6), NewtonDirection::PowerToComplete).unwrap();
        assert_eq!(h, complete_homogeneous_series(&a, 6));
    }

    #[test]
    fn last_elementary_detects_zero() {
        let f = fld(41);
        assert_eq!(*elementary(&FpSet::new(f, [0, 1, 9, 32, 40])).last().unwrap(), 0);
        assert_ne!(*elementary(&FpSet::new(f, [1, 9, 32, 40])).last().unwrap(), 0);
    }

    fn prime_and_set() -> impl Strategy<Value = (u64, Vec<u64>)> {
        (5u64..98)
            .prop_filter("prime", |&p| is_prime(p))
            .prop_flat_map(|p| (Just(p), proptest::collection::vec(0..p, 1..(p as usize - 1).min(9))))
    }

    proptest! {
        #[test]
        fn generating_identity((p, raw) in prime_and_set()) {
            let f = fld(p);
            let a = FpSet::new(f, raw);
            let h = complete_homogeneous_series(&a, 20);
            // prod (1 - a x) from elementary values
            let e = elementary(&a);
            let recip: Vec<u64> = e.iter().enumerate()
                .map(|(k, &v)| if k % 2 == 1 { f.neg(v) } else { v }).collect();
            let prod = FpPoly::from_coeffs(f, recip).mul(&FpPoly::from_coeffs(f, h));
            for k in 0..=20 {
                prop_assert_eq!(prod.coeff(k), if k == 0 { 1 } else { 0 });
            }
        }

        #[test]
        fn last_elementary_vanishes_iff_zero_in_set((p, raw) in prime_and_set()) {
            let a = FpSet::new(fld(p), raw);
            prop_assert_eq!(*elementary(&a).last().unwrap() == 0, a.contains(0));
        }

        #[test]
        fn recentering_kills_first_power_sum((p, raw) in prime_and_set()) {
            let a = FpSet::new(fld(p), raw);
            let c = recentered(&a).unwrap();
            prop_assert_eq!(power_sums(&c, 1)[1], 0);
        }

        #[test]
        fn newton_roundtrip((p, raw) in prime_and_set()) {
            let f = fld(p);
            let a = FpSet::new(f, raw);
            let k = a.len();
            let ps = power_sums(&a, k);
            let e = newton_convert(f, &ps, NewtonDirection::PowerToElementary).unwrap();
            prop_assert_eq!(&e, &elementary(&a));
            let back = newton_convert(f, &e, NewtonDirection::ElementaryToPower { variables: k as u64 }).unwrap();
            prop_assert_eq!(back, ps);
        }
    }
}
