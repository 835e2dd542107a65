//! The ring Q(k)[α̂]/(2α̂² + 1), the γ constants, and the quadratic
//! congruence they produce.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;


use super::mpoly::{q, qf, Q};
use super::unipoly::{q_mod, QPoly, RatFunc};
use crate::error::{precondition, Result};
use crate::fp::PrimeField;

/// `u·α̂ + v` with `u, v ∈ Q(k)`; `α̂² = −1/2` is applied at every product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub u: RatFunc,
    pub v: RatFunc,
}

impl QuadElem {
    pub fn new(u: RatFunc, v: RatFunc) -> Self {
        QuadElem { u, v }
    }

    pub fn zero() -> Self {
        Self::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn from_q(v: Q) -> Self {
        Self::new(RatFunc::zero(), RatFunc::constant(v))
    }

    pub fn int(v: i64) -> Self {
        Self::from_q(q(v))
    }

    /// α̂ itself.
    pub fn alpha() -> Self {
        Self::new(RatFunc::int(1), RatFunc::zero())
    }

    /// The parameter k as a constant of the ring.
    pub fn k() -> Self {
        Self::new(RatFunc::zero(), RatFunc::var())
    }

    /// `u_poly(k)·α̂ + v_poly(k)` from coefficient lists in k.
    pub fn from_k_polys(u: QPoly, v: QPoly) -> Self {
        Self::new(RatFunc::poly(u), RatFunc::poly(v))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn add(&self, o: &QuadElem) -> QuadElem {
        Self::new(self.u.add(&o.u), self.v.add(&o.v))
    }

    pub fn sub(&self, o: &QuadElem) -> QuadElem {
        Self::new(self.u.sub(&o.u), self.v.sub(&o.v))
    }

    pub fn neg(&self) -> QuadElem {
        Self::new(self.u.neg(), self.v.neg())
    }

    pub fn scale(&self, c: &Q) -> QuadElem {
        Self::new(self.u.scale(c), self.v.scale(c))
    }

    pub fn mul(&self, o: &QuadElem) -> QuadElem {
        let uu = self.u.mul(&o.u);
        let u = self.u.mul(&o.v).add(&o.u.mul(&self.v));
        let v = self.v.mul(&o.v).sub(&uu.scale(&qf(1, 2)));
        Self::new(u, v)
    }

    pub fn pow(&self, e: u32) -> QuadElem {
        (0..e).fold(Self::int(1), |acc, _| acc.mul(self))
    }

    pub fn conjugate(&self) -> QuadElem {
        Self::new(self.u.neg(), self.v.clone())
    }

    /// `v² + u²/2`, the product with the conjugate.
    pub fn norm(&self) -> RatFunc {
        self.v.mul(&self.v).add(&self.u.mul(&self.u).scale(&qf(1, 2)))
    }

    pub fn inv(&self) -> Result<QuadElem> {
        let n = self.norm();
        if n.is_zero() {
            return Err(crate::Error::ZeroDivisor);
        }
        let ni = n.inv()?;
        let c = self.conjugate();
        Ok(Self::new(c.u.mul(&ni), c.v.mul(&ni)))
    }

    pub fn div(&self, o: &QuadElem) -> Result<QuadElem> {
        Ok(self.mul(&o.inv()?))
    }

    /// Substitutes a root `alpha` of 2x²+1 mod p and `k`.
    pub fn eval_mod(&self, field: PrimeField, alpha: u64, k: u64) -> Result<u64> {
        let u = self.u.eval_mod(field, k)?;
        let v = self.v.eval_mod(field, k)?;
        Ok(field.add(field.mul(u, alpha), v))
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·α + ({})", self.u, self.v)
    }
}

/// Evaluates a polynomial in α̂ with rational coefficients (low first).
pub fn eval_alpha_poly(coeffs: &[Q]) -> QuadElem {
    let a = QuadElem::alpha();
    coeffs
        .iter()
        .rev()
        .fold(QuadElem::zero(), |acc, c| acc.mul(&a).add(&QuadElem::from_q(c.clone())))
}

/// γ₀..γ₅ in the quotient ring (d ≡ −1/2) and optionally mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    pub symbolic: [QuadElem; 6],
    /// `(p, α, k, d, values)` when a numeric evaluation was requested.
    pub numeric: Option<NumericGammas>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericGammas {
    pub p: u64,
    pub alpha: u64,
    pub k: u64,
    pub d: u64,
    pub values: [u64; 6],
}

fn gammas_from(alpha: &QuadElem, k: &QuadElem, d: &QuadElem) -> Result<[QuadElem; 6]> {
    let one = QuadElem::int(1);
    let two = QuadElem::int(2);
    let a1 = alpha.add(&one);
    let a2 = alpha.add(&two);
    let g0 = alpha.mul(&a1).div(&d.sub(&one))?;
    let g1 = alpha.mul(&a1).mul(&a2).div(&d.sub(&one).mul(&d.sub(&two)))?;
    let k1 = k.add(&one);
    let k2 = k.add(&two);
    let g2 = alpha.mul(alpha).sub(&k2.mul(alpha)).add(&k1.mul(&k2).scale(&qf(1, 3)));
    let g3 = alpha.sub(&k1.scale(&qf(1, 2)));
    let g0g3 = g0.mul(&g3);
    let g4 = k2.mul(&g0g3).sub(&k.mul(alpha));
    let g5 = alpha.mul(alpha).sub(&k2.mul(&g0g3));
    Ok([g0, g1, g2, g3, g4, g5])
}

/// Symbolic γ's with d ≡ −1/2 in Q(k)[α̂]/(2α̂²+1).
pub fn gammas_symbolic() -> [QuadElem; 6] {
    gammas_from(&QuadElem::alpha(), &QuadElem::k(), &QuadElem::from_q(qf(-1, 2)))
        .expect("d-1 and d-2 are nonzero rationals")
}

/// γ's directly in F_p for concrete α, k, d.
pub fn gammas_numeric(field: PrimeField, alpha: u64, k: u64, d: u64) -> Result<[u64; 6]> {
    let f = field;
    let (a, k, d) = (f.elem(alpha).value(), f.elem(k).value(), f.elem(d).value());
    let dm1 = f.sub(d, 1);
    let dm2 = f.sub(d, 2);
    if dm1 == 0 || dm2 == 0 {
        return Err(precondition!("d-1 or d-2 vanishes mod {}", f.modulus()));
    }
    let a1 = f.add(a, 1);
    let a2 = f.add(a, 2);
    let g0 = f.div(f.mul(a, a1), dm1)?;
    let g1 = f.div(f.mul(f.mul(a, a1), a2), f.mul(dm1, dm2))?;
    let k1 = f.add(k, 1);
    let k2 = f.add(k, 2);
    let g2 = f.add(f.sub(f.mul(a, a), f.mul(k2, a)), f.div(f.mul(k1, k2), 3)?);
    let g3 = f.sub(a, f.div(k1, 2)?);
    let g0g3 = f.mul(g0, g3);
    let g4 = f.sub(f.mul(k2, g0g3), f.mul(k, a));
    let g5 = f.sub(f.mul(a, a), f.mul(k2, g0g3));
    Ok([g0, g1, g2, g3, g4, g5])
}

/// `gamma_values`: symbolic set always; numeric when `(p, α, k, d)` given.
/// When `2α²+1 ≡ 0` and `d ≡ −1/2 (mod p)` the two modes are checked to agree.
pub fn gamma_values(numeric: Option<(u64, u64, u64, u64)>) -> Result<GammaSet> {
    let symbolic = gammas_symbolic();
    let numeric = match numeric {
        None => None,
        Some((p, alpha, k, d)) => {
            let field = PrimeField::new(p)?;
            let values = gammas_numeric(field, alpha, k, d)?;
            let a = field.elem(alpha).value();
            let on_curve = field.add(field.mul(2, field.mul(a, a)), 1) == 0
                && field.elem(d).value() == q_mod(&qf(-1, 2), field)?;
            if on_curve {
                for (i, g) in symbolic.iter().enumerate() {
                    let s = g.eval_mod(field, a, field.elem(k).value())?;
                    if s != values[i] {
                        return Err(crate::Error::InvariantViolated(format!(
                            "gamma{i}: symbolic {s} != numeric {} mod {p}",
                            values[i]
                        )));
                    }
                }
            }
            Some(NumericGammas { p, alpha, k, d, values })
        }
    };
    Ok(GammaSet { symbolic, numeric })
}

fn kpoly(c: &[(i64, i64)]) -> QPoly {
    QPoly::new(c.iter().map(|&(n, d)| qf(n, d)).collect())
}

/// Outcome of the quotient-ring computation behind the quadratic congruence.
#[derive(Clone, Debug)]
pub struct Lemma13Report {
    pub inv_gamma0: QuadElem,
    pub inv_two_over_gamma0_minus_one: QuadElem,
    pub lhs1: QuadElem,
    pub expected1: QuadElem,
    pub lhs2: QuadElem,
    pub expected2: QuadElem,
    pub thirty_diff: QuadElem,
    pub expected_congruence: QuadElem,
    pub alpha7_factored: QuadElem,
    pub alpha7_display: QuadElem,
    pub alpha7_expansion_ok: bool,
    pub checks: Vec<(String, bool)>,
}

impl Lemma13Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// `2(3k−2)(k−1)α + (k+2)(k+3)` as a ring element.
pub fn lemma13_polynomial() -> QuadElem {
    QuadElem::from_k_polys(QPoly::from_ints(&[4, -10, 6]), QPoly::from_ints(&[6, 5, 1]))
}

pub fn lemma13_symbolic() -> Result<Lemma13Report> {
    let [g0, g1, g2, _g3, g4, g5] = gammas_symbolic();
    let one = QuadElem::int(1);
    let a = QuadElem::alpha();
    let mut checks = Vec::new();

    checks.push((
        "gamma0 = -2a(a+1)/3".into(),
        g0 == a.mul(&a.add(&one)).scale(&qf(-2, 3)),
    ));
    checks.push((
        "gamma1 = 4a(a+1)(a+2)/15".into(),
        g1 == a.mul(&a.add(&one)).mul(&a.add(&QuadElem::int(2))).scale(&qf(4, 15)),
    ));

    let inv_g0 = g0.inv()?;
    checks.push(("1/gamma0 = 2a+1".into(), inv_g0 == a.scale(&q(2)).add(&one)));
    let t = inv_g0.scale(&q(2)).sub(&one);
    let t_inv = t.inv()?;
    let expect_t_inv = eval_alpha_poly(&[qf(1, 9), qf(-4, 9)]);
    checks.push(("(2/gamma0-1)^-1 = -4a/9+1/9".into(), t_inv == expect_t_inv));

    let factor = one.sub(&g1.mul(&a.sub(&one)).mul(&inv_g0.mul(&inv_g0)));
    let lhs1 = factor.mul(&t_inv).mul(&g5.scale(&q(2)).add(&g4));
    let expected1 = QuadElem::from_k_polys(
        kpoly(&[(8, 15), (14, 15), (2, 15)]),
        kpoly(&[(8, 15), (-1, 15), (-1, 15)]),
    );
    checks.push(("first display".into(), lhs1 == expected1));

    let lhs2 = g1.mul(&g2).scale(&q(2)).sub(&g4);
    let expected2 = QuadElem::from_k_polys(
        kpoly(&[(2, 5), (19, 15), (-1, 15)]),
        kpoly(&[(1, 3), (-7, 30), (-1, 10)]),
    );
    checks.push(("second display".into(), lhs2 == expected2));

    let thirty_diff = lhs1.sub(&lhs2).scale(&q(30));
    let expected_congruence = lemma13_polynomial();
    checks.push(("30*(difference)".into(), thirty_diff == expected_congruence));

    // (1 - 4(a-1)a(a+1)(a+2)(2a+1)^2/15)(-4a/9+1/9), expanded over Q[a] then reduced
    let ap = |c: &[i64]| QPoly::from_ints(c);
    let prod = ap(&[-1, 1])
        .mul(&ap(&[0, 1]))
        .mul(&ap(&[1, 1]))
        .mul(&ap(&[2, 1]))
        .mul(&ap(&[1, 2]).pow(2))
        .scale(&qf(-4, 15))
        .add(&ap(&[1]));
    let expanded = prod.mul(&QPoly::new(alloc::vec![qf(1, 9), qf(-4, 9)]));
    let display = [
        qf(1, 9),
        qf(-52, 135),
        qf(4, 135),
        qf(-104, 135),
        qf(-4, 3),
        qf(32, 135),
        qf(176, 135),
        qf(64, 135),
    ];
    let alpha7_expansion_ok = expanded.coeffs() == display.as_slice();
    checks.push(("alpha^7 expansion".into(), alpha7_expansion_ok));
    let alpha7_display = eval_alpha_poly(&display);
    checks.push(("alpha^7 display = -2/5".into(), alpha7_display == QuadElem::from_q(qf(-2, 5))));
    let alpha7_factored = factor.mul(&t_inv);
    checks.push(("factor*(2/gamma0-1)^-1 = display".into(), alpha7_factored == alpha7_display));

    Ok(Lemma13Report {
        inv_gamma0: inv_g0,
        inv_two_over_gamma0_minus_one: t_inv,
        lhs1,
        expected1,
        lhs2,
        expected2,
        thirty_diff,
        expected_congruence,
        alpha7_factored,
        alpha7_display,
        alpha7_expansion_ok,
        checks,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lemma13_all_checks() {
        let r = lemma13_symbolic().unwrap();
        for (name, ok) in &r.checks {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn alpha_squared() {
        let a = QuadElem::alpha();
        assert_eq!(a.mul(&a), QuadElem::from_q(qf(-1, 2)));
        assert_eq!(a.inv().unwrap(), a.scale(&q(-2)));
    }

    #[test]
    fn numeric_gammas_agree_at_p19() {
        // 2·3²+1 = 19 and d = 9 ≡ −1/2 mod 19
        let g = gamma_values(Some((19, 3, 3, 9))).unwrap();
        let n = g.numeric.unwrap();
        let f = PrimeField::new(19).unwrap();
        for (s, v) in g.symbolic.iter().zip(n.values) {
            assert_eq!(s.eval_mod(f, 3, 3).unwrap(), v);
        }
        // α = 3: γ0 = 12/8 = 3/2 mod 19
        assert_eq!(n.values[0], f.div(3, 2).unwrap());
    }

    #[test]
    fn numeric_guards() {
        assert!(gammas_numeric(PrimeField::new(19).unwrap(), 3, 3, 1).is_err());
    }

    fn small_rat() -> impl Strategy<Value = RatFunc> {
        (-20i64..20, 1i64..9, -5i64..5, -5i64..5).prop_map(|(a, b, c, e)| {
            RatFunc::new(QPoly::new(alloc::vec![qf(a, b), q(c)]), QPoly::from_ints(&[e.abs() + 1, 1]))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn conjugate_product_is_norm(u in small_rat(), v in small_rat()) {
            let x = QuadElem::new(u, v);
            let prod = x.mul(&x.conjugate());
            prop_assert!(prod.u.is_zero());
            prop_assert_eq!(prod.v, x.norm());
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()), QuadElem::int(1));
            }
        }
    }
}
