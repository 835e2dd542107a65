//! Dense univariate polynomials over Q and rational functions built from them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mpoly::{q, Q};
use crate::error::{precondition, Result};
use crate::fp::PrimeField;
use crate::poly::FpPoly;

/// Univariate polynomial over Q, low degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    c: Vec<Q>,
}

impl QPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| q(v)).collect())
    }

    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn constant(v: Q) -> Self {
        Self::new(vec![v])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn leading(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly { c: self.c.iter().map(|v| -v.clone()).collect() }
    }

    pub fn scale(&self, k: &Q) -> QPoly {
        Self::new(self.c.iter().map(|v| v * k).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(Self::constant(Q::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> QPoly {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, v)| v * q(i as i64)).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.c.iter().rev().fold(Q::zero(), |acc, v| acc * x + v)
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let Some(dd) = d.degree() else {
            return Err(crate::Error::ZeroDivisor);
        };
        let lead = d.leading();
        let mut r = self.c.clone();
        let mut quo = vec![Q::zero(); self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let t = r.last().unwrap() / &lead;
            for (i, dc) in d.c.iter().enumerate() {
                r[k + i] -= &t * dc;
            }
            quo[k] = t;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Self::new(quo), Self::new(r)))
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Self::new(self.c.iter().map(|v| v / &l).collect())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant via the Sylvester matrix (exact Gaussian elimination).
    pub fn resultant(&self, o: &QPoly) -> Q {
        let (Some(m), Some(n)) = (self.degree(), o.degree()) else {
            return Q::zero();
        };
        let size = m + n;
        if size == 0 {
            return Q::one();
        }
        let mut mat = vec![vec![Q::zero(); size]; size];
        for r in 0..n {
            for (i, v) in self.c.iter().rev().enumerate() {
                mat[r][r + i] = v.clone();
            }
        }
        for r in 0..m {
            for (i, v) in o.c.iter().rev().enumerate() {
                mat[n + r][r + i] = v.clone();
            }
        }
        determinant(mat)
    }

    /// Reduces every coefficient mod p; fails if a denominator vanishes.
    pub fn to_fp(&self, field: PrimeField) -> Result<FpPoly> {
        let coeffs = self.c.iter().map(|v| q_mod(v, field)).collect::<Result<Vec<u64>>>()?;
        Ok(FpPoly::from_coeffs(field, coeffs))
    }

    /// Evaluates at `x` mod p.
    pub fn eval_mod(&self, field: PrimeField, x: u64) -> Result<u64> {
        Ok(self.to_fp(field)?.eval(x))
    }

    /// All integer coefficients?
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|v| v.is_integer())
    }
}

/// The rational `v` reduced mod p.
pub fn q_mod(v: &Q, field: PrimeField) -> Result<u64> {
    let p = field.modulus();
    let pb = num_bigint::BigInt::from(p);
    let n = v.numer().mod_floor(&pb).to_u64().expect("reduced");
    let d = v.denom().mod_floor(&pb).to_u64().expect("reduced");
    if d == 0 {
        return Err(precondition!("denominator {} vanishes mod {}", v.denom(), p));
    }
    Ok(field.mul(n, field.inv(d)?))
}

fn determinant(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_univariate(f, &self.c, "k")
    }
}

pub(crate) fn fmt_univariate(f: &mut fmt::Formatter<'_>, c: &[Q], var: &str) -> fmt::Result {
    if c.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (i, v) in c.iter().enumerate().rev() {
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let a = v.abs();
        if !a.is_one() || i == 0 {
            write!(f, "{a}")?;
        }
        match i {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{i}")?,
        }
    }
    Ok(())
}

/// Rational function `num/den` in one variable, kept reduced with monic `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(crate::Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let l = den.leading();
        let inv = Q::one() / l;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::constant(Q::one()) }
    }

    pub fn constant(v: Q) -> Self {
        RatFunc { num: QPoly::constant(v), den: QPoly::constant(Q::one()) }
    }

    pub fn int(v: i64) -> Self {
        Self::constant(q(v))
    }

    pub fn poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::constant(Q::one()) }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::poly(QPoly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
            .expect("nonzero denominators")
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn scale(&self, k: &Q) -> RatFunc {
        Self::new(self.num.scale(k), self.den.clone()).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn eval(&self, x: &Q) -> Result<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(crate::Error::ZeroDivisor);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_mod(&self, field: PrimeField, x: u64) -> Result<u64> {
        let n = self.num.eval_mod(field, x)?;
        let d = self.den.eval_mod(field, x)?;
        field.div(n, d)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_poly() {
            return write!(f, "{p}");
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stepanov::mpoly::qf;

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = QPoly::from_ints(&[-2, 1, 1]);
        let b = QPoly::from_ints(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
        let (qq, r) = a.mul(&b).add(&QPoly::from_ints(&[5])).div_rem(&b).unwrap();
        assert_eq!(qq, a);
        assert_eq!(r, QPoly::from_ints(&[5]));
    }

    #[test]
    fn resultants() {
        // res(x-a, g) = g(a) for monic linear first argument, up to sign convention
        let g = QPoly::from_ints(&[1, 0, 1]);
        assert_eq!(QPoly::from_ints(&[-2, 1]).resultant(&g), q(5));
        // shared root
        assert_eq!(QPoly::from_ints(&[-1, 1]).resultant(&QPoly::from_ints(&[-1, 0, 1])), q(0));
    }

    #[test]
    fn rational_functions_reduce() {
        let k = RatFunc::var();
        let one = RatFunc::int(1);
        let a = k.add(&one).mul(&k.sub(&one)).div(&k.sub(&one)).unwrap();
        assert_eq!(a, k.add(&one));
        let h = one.div(&k.scale(&q(2))).unwrap();
        assert_eq!(h.eval(&q(3)).unwrap(), qf(1, 6));
        let p = PrimeField::new(7).unwrap();
        assert_eq!(h.eval_mod(p, 3).unwrap(), p.inv(6).unwrap());
    }
}
