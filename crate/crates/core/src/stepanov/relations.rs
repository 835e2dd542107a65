//! Pointwise reciprocal-sum relations on a set, plus the low power-sum
//! consequences of criticality for `(A, −A)`.

use alloc::vec::Vec;

use crate::error::{precondition, Result};
use crate::fp::{batch_inverse_raw, FpSet};
use crate::hp::criticality;
use crate::symm::{power_sums, recentered};

/// `(S1, S2, S3)` with `S_j = Σ_{a'≠a} (a − a')^{-j}`.
fn reciprocal_sums(set: &FpSet, a: u64) -> Result<(u64, u64, u64)> {
    if !set.contains(a) {
        return Err(precondition!("{a} is not in the set"));
    }
    if set.len() < 2 {
        return Err(precondition!("need at least two elements"));
    }
    let f = set.field();
    let diffs: Vec<u64> = set.values().iter().filter(|&&x| x != a).map(|&x| f.sub(a, x)).collect();
    let inv = batch_inverse_raw(f, &diffs)?;
    let (mut s1, mut s2, mut s3) = (0, 0, 0);
    for &i in &inv {
        let i2 = f.mul(i, i);
        s1 = f.add(s1, i);
        s2 = f.add(s2, i2);
        s3 = f.add(s3, f.mul(i2, i));
    }
    Ok((s1, s2, s3))
}

/// `Σ 1/(a−a')² = (1/α)(Σ 1/(a−a'))²` at `a`.
pub fn rat2_check(set: &FpSet, a: u64) -> Result<bool> {
    let f = set.field();
    let alpha_inv = f.inv_int(set.len() as i64)?;
    let (s1, s2, _) = reciprocal_sums(set, a)?;
    Ok(s2 == f.mul(alpha_inv, f.mul(s1, s1)))
}

/// `Σ 1/(a−a')³ = (1/α²)(Σ 1/(a−a'))³` at `a`.
pub fn rat3_check(set: &FpSet, a: u64) -> Result<bool> {
    let f = set.field();
    let alpha_inv = f.inv_int(set.len() as i64)?;
    let (s1, _, s3) = reciprocal_sums(set, a)?;
    Ok(s3 == f.mul(f.mul(alpha_inv, alpha_inv), f.pow(s1, 3)))
}

/// Both relations at every element.
pub fn rat_all(set: &FpSet) -> Result<(bool, bool)> {
    let mut r2 = true;
    let mut r3 = true;
    for &a in set.values() {
        r2 &= rat2_check(set, a)?;
        r3 &= rat3_check(set, a)?;
    }
    Ok((r2, r3))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowMomentsReport {
    /// `d ∈ {2, 6}`: the vanishing statement does not apply.
    pub exempt: bool,
    /// `p_1, p_2, p_3` of the set as given.
    pub p: [u64; 3],
    /// `p_2 = p_1²/α` and `p_3 = p_1³/α²`.
    pub uncentered_ok: bool,
    /// `p_2 = p_3 = 0` after moving the mean to 0.
    pub centered_ok: bool,
}

impl LowMomentsReport {
    pub fn ok(&self) -> bool {
        self.exempt || (self.uncentered_ok && self.centered_ok)
    }
}

/// Low power sums of `A` for a d-critical pair `(A, −A)`.
pub fn lemma5_lemma6_numeric(a: &FpSet, d: u64) -> Result<LowMomentsReport> {
    let rep = criticality(a, &a.negated(), d)?;
    if !rep.critical {
        return Err(precondition!("(A, -A) is not {d}-critical"));
    }
    let f = a.field();
    let ps = power_sums(a, 3);
    let p = [ps[1], ps[2], ps[3]];
    let exempt = d == 2 || d == 6;
    let ai = f.inv_int(a.len() as i64)?;
    let uncentered_ok =
        p[1] == f.mul(ai, f.mul(p[0], p[0])) && p[2] == f.mul(f.mul(ai, ai), f.pow(p[0], 3));
    let c = recentered(a)?;
    let cp = power_sums(&c, 3);
    let centered_ok = cp[2] == 0 && cp[3] == 0;
    Ok(LowMomentsReport { exempt, p, uncentered_ok, centered_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::PrimeField;
    use crate::hp::fractional_transform;

    fn f41() -> FpSet {
        FpSet::new(PrimeField::new(41).unwrap(), [0, 1, 9, 32, 40])
    }

    #[test]
    fn f41_relations() {
        assert_eq!(rat_all(&f41()).unwrap(), (true, true));
    }

    #[test]
    fn two_points_fail() {
        let s = FpSet::new(PrimeField::new(101).unwrap(), [0, 1]);
        assert!(!rat2_check(&s, 0).unwrap());
    }

    #[test]
    fn five_point_cross() {
        // {0, ±1, ±i} whenever p ≡ 1 mod 4
        for p in [13u64, 17, 29, 37, 41, 53, 10009] {
            let f = PrimeField::new(p).unwrap();
            let i = f.element_of_order(4).unwrap();
            let s = FpSet::new(f, [0, 1, p - 1, i, f.neg(i)]);
            assert_eq!(rat_all(&s).unwrap(), (true, true), "p={p}");
            // affine images too
            let t = s.scaled(7).translated(3);
            assert_eq!(rat_all(&t).unwrap(), (true, true));
        }
    }

    #[test]
    fn preconditions() {
        let s = f41();
        assert!(rat2_check(&s, 2).is_err());
        let one = FpSet::new(PrimeField::new(41).unwrap(), [3]);
        assert!(rat2_check(&one, 3).is_err());
    }

    #[test]
    fn low_moments() {
        let r = lemma5_lemma6_numeric(&f41(), 20).unwrap();
        assert_eq!(r.p, [0, 0, 0]);
        assert!(r.ok() && !r.exempt);
        let shifted = lemma5_lemma6_numeric(&f41().translated(7), 20).unwrap();
        assert_ne!(shifted.p[0], 0);
        assert!(shifted.uncentered_ok && shifted.centered_ok);
        let f13 = FpSet::new(PrimeField::new(13).unwrap(), [0, 1, 10]);
        assert!(lemma5_lemma6_numeric(&f13, 6).unwrap().exempt);
        let bad = FpSet::new(PrimeField::new(41).unwrap(), [0, 1, 2]);
        assert!(lemma5_lemma6_numeric(&bad, 20).is_err());
    }

    #[test]
    fn transforms_keep_relations() {
        let a = f41();
        for &c in a.values() {
            let t = fractional_transform(&a, c, 20).unwrap();
            assert_eq!(rat_all(&t).unwrap(), (true, true), "center {c}");
        }
    }
}
