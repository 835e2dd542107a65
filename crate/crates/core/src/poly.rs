//! Dense univariate polynomials over F_p and truncated Laurent series.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::fp::{FieldElem, FpSet, PrimeField};

/// A polynomial over F_p, coefficients low degree first, no trailing zeros.
///
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero(field: PrimeField) -> Self {
        FpPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: PrimeField, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// Reduces every coefficient and strips trailing zeros.
    pub fn from_coeffs(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let p = field.modulus();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn from_i64s(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            field,
            coeffs.iter().map(|&c| field.reduce_i128(c as i128)).collect(),
        )
    }

    /// `prod_{r in roots} (x - r)^multiplicity`.
    pub fn from_roots(roots: &FpSet, multiplicity: usize) -> Result<Self> {
        if roots.is_empty() {
            return Err(invalid!("from_roots needs at least one root"));
        }
        if multiplicity == 0 {
            return Err(invalid!("multiplicity must be positive"));
        }
        let field = roots.field();
        let mut out = Self::one(field);
        for &r in roots.values() {
            for _ in 0..multiplicity {
                out = out.mul_linear(r);
            }
        }
        Ok(out)
    }

    /// `self * (x - r)`.
    pub fn mul_linear(&self, r: u64) -> Self {
        let f = self.field;
        let n = self.coeffs.len();
        let mut out = vec![0u64; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i + 1] = f.add(out[i + 1], c);
            out[i] = f.sub(out[i], f.mul(c, r));
        }
        Self::from_coeffs(f, out)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_elem(&self, i: usize) -> FieldElem {
        self.field.elem(self.coeff(i))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &FpPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        Ok(())
    }

    fn assert_same(&self, other: &FpPoly) {
        if let Err(e) = self.check(other) {
            panic!("{e}");
        }
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        self.assert_same(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(f, out)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        self.assert_same(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(f, out)
    }

    pub fn neg(&self) -> FpPoly {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        self.assert_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(f, out)
    }

    pub fn pow(&self, mut e: u64) -> FpPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `x^k * self`.
    pub fn shift_up(&self, k: usize) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![0u64; k];
        out.extend_from_slice(&self.coeffs);
        FpPoly { field: self.field, coeffs: out }
    }

    pub fn derivative(&self) -> FpPoly {
        let f = self.field;
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.modulus()))
            .collect();
        Self::from_coeffs(f, out)
    }

    pub fn nth_derivative(&self, n: usize) -> FpPoly {
        (0..n).fold(self.clone(), |g, _| g.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        let x = x % f.modulus();
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval_elem(&self, x: FieldElem) -> Result<FieldElem> {
        if x.modulus() != self.field.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.field.modulus(),
                right: x.modulus(),
            });
        }
        Ok(self.field.elem(self.eval(x.value())))
    }

    /// Divides by `x - a`: returns `(quotient, f(a))`.
    pub fn synthetic_division(&self, a: u64) -> (FpPoly, u64) {
        let f = self.field;
        if self.is_zero() {
            return (self.clone(), 0);
        }
        let n = self.coeffs.len();
        let mut q = vec![0u64; n - 1];
        let mut carry = 0u64;
        for i in (0..n).rev() {
            let v = f.add(self.coeffs[i], f.mul(carry, a));
            if i == 0 {
                return (Self::from_coeffs(f, q), v);
            }
            q[i - 1] = v;
            carry = v;
        }
        unreachable!()
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check(divisor)?;
        let f = self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroDivisor);
        };
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &FpPoly) -> Result<FpPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &FpPoly) -> Result<FpPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(invalid!("polynomial division is not exact"));
        }
        Ok(q)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> Result<FpPoly> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// `self(x + t)`.
    pub fn shifted(&self, t: u64) -> FpPoly {
        // Horner in the ring: ((c_n)(x+t) + c_{n-1})(x+t) + ...
        let f = self.field;
        let lin = Self::from_coeffs(f, vec![t, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(f), |acc, &c| acc.mul(&lin).add(&Self::constant(f, c)))
    }

    /// `x^n * self(1/x)` for `n >= deg`.
    pub fn reversed(&self, n: usize) -> FpPoly {
        debug_assert!(self.degree().map_or(true, |d| d <= n));
        let mut c = vec![0u64; n + 1];
        for (i, &v) in self.coeffs.iter().enumerate() {
            c[n - i] = v;
        }
        Self::from_coeffs(self.field, c)
    }

    /// Coefficients of `self` in powers of `(x - a)`, exponents `0..order`.
    ///
    /// Computed by repeated synthetic division, so no factorials are
    /// inverted and the result is valid for every order.
    pub fn taylor_at(&self, a: u64, order: usize) -> Result<TruncatedSeries> {
        if order == 0 {
            return Err(invalid!("taylor order must be at least 1"));
        }
        let mut coeffs = Vec::with_capacity(order);
        let mut g = self.clone();
        for _ in 0..order {
            if g.is_zero() {
                coeffs.push(0);
                continue;
            }
            let (q, r) = g.synthetic_division(a);
            coeffs.push(r);
            g = q;
        }
        Ok(TruncatedSeries::new(
            self.field,
            Center::Finite(a % self.field.modulus()),
            0,
            coeffs,
            order as i64,
        ))
    }

    /// Multiplicity of `a` as a root (0 if not a root). `None` for zero.
    pub fn root_multiplicity(&self, a: u64) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut g = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = g.synthetic_division(a);
            if r != 0 {
                return Some(m);
            }
            m += 1;
            g = q;
        }
    }

    /// The distinct roots of `self` in F_p, sorted.
    ///
    /// Takes `gcd(self, x^p - x)` and splits it deterministically with
    /// `gcd(g, (x + s)^((p-1)/2) - 1)` for `s = 0, 1, 2, ...`.
    pub fn roots(&self) -> Result<Vec<u64>> {
        let f = self.field;
        let p = f.modulus();
        if self.is_zero() {
            return Err(invalid!("the zero polynomial has every element as a root"));
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        if p <= 3 {
            return Ok((0..p).filter(|&x| self.eval(x) == 0).collect());
        }
        let m = self.monic();
        let xp = Self::x(f).pow_mod(p, &m)?;
        let g = m.gcd(&xp.sub(&Self::x(f)))?;
        let mut out = Vec::new();
        let mut stack = vec![(g, 0u64)];
        while let Some((g, start)) = stack.pop() {
            match g.degree() {
                Some(0) | None => continue,
                Some(1) => {
                    out.push(f.neg(g.coeff(0)));
                    continue;
                }
                _ => {}
            }
            let mut s = start;
            loop {
                let lin = Self::from_coeffs(f, vec![s, 1]);
                let h = lin.pow_mod((p - 1) / 2, &g)?.sub(&Self::one(f));
                let d = g.gcd(&h)?;
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && Some(dd) < g.degree() {
                    let other = g.div_exact(&d)?;
                    stack.push((d, s + 1));
                    stack.push((other, s + 1));
                    break;
                }
                s += 1;
                if s >= p {
                    return Err(Error::InvariantViolated(alloc::format!(
                        "root splitting failed mod {p}"
                    )));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Full factorization into linear factors, if it exists:
    /// `(leading coefficient, [(root, multiplicity)])`.
    pub fn split_factorization(&self) -> Result<Option<(u64, Vec<(u64, usize)>)>> {
        let roots = self.roots()?;
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(roots.len());
        for r in roots {
            let mut m = 0;
            loop {
                let (q, rem) = rest.synthetic_division(r);
                if rem != 0 {
                    break;
                }
                rest = q;
                m += 1;
            }
            out.push((r, m));
        }
        if rest.degree() != Some(0) {
            return Ok(None);
        }
        Ok(Some((rest.coeff(0), out)))
    }

    pub fn splits(&self) -> Result<bool> {
        Ok(self.split_factorization()?.is_some())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly(mod {}, {:?})", self.field.modulus(), self.coeffs)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Expansion point of a [`TruncatedSeries`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Center {
    Finite(u64),
    /// Expansion in `t = 1/x`.
    Infinity,
}

/// `sum_j c_j u^(start + j) + O(u^order)` where `u = x - center`, or
/// `u = 1/x` at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: PrimeField,
    center: Center,
    start: i64,
    coeffs: Vec<u64>,
    order: i64,
}

impl TruncatedSeries {
    /// Coefficients at exponents `>= order` are dropped.
    pub fn new(field: PrimeField, center: Center, start: i64, coeffs: Vec<u64>, order: i64) -> Self {
        let p = field.modulus();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        let keep = (order - start).max(0) as usize;
        coeffs.truncate(keep);
        TruncatedSeries { field, center, start, coeffs, order }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn center(&self) -> Center {
        self.center
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn raw_coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `u^e`; `None` when `e` is at or beyond the order.
    pub fn coeff(&self, e: i64) -> Option<u64> {
        if e >= self.order {
            return None;
        }
        if e < self.start {
            return Some(0);
        }
        Some(self.coeffs.get((e - self.start) as usize).copied().unwrap_or(0))
    }

    /// Least exponent with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|&c| c != 0)
            .map(|i| self.start + i as i64)
    }

    fn check(&self, other: &TruncatedSeries) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        if self.center != other.center {
            return Err(invalid!("series expanded at different centers"));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let f = self.field;
        let start = self.start.min(other.start);
        let order = self.order.min(other.order);
        let coeffs = (start..order)
            .map(|e| f.add(self.coeff(e).unwrap_or(0), other.coeff(e).unwrap_or(0)))
            .collect();
        Ok(Self::new(f, self.center, start, coeffs, order))
    }

    pub fn scale(&self, c: u64) -> TruncatedSeries {
        let f = self.field;
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Self::new(f, self.center, self.start, coeffs, self.order)
    }

    /// Product; the result's order is the smaller of
    /// `order_a + start_b` and `order_b + start_a`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let f = self.field;
        let start = self.start + other.start;
        let order = (self.order + other.start).min(other.order + self.start);
        let len = (order - start).max(0) as usize;
        let mut out = vec![0u64; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::new(f, self.center, start, out, order))
    }

    /// Multiplicative inverse; the series must have a known nonzero
    /// leading coefficient.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let f = self.field;
        let v = self.valuation().ok_or(Error::ZeroDivisor)?;
        let unit: Vec<u64> = self.coeffs[(v - self.start) as usize..].to_vec();
        let n = unit.len();
        let inv0 = f.inv(unit[0])?;
        let mut out = vec![0u64; n];
        out[0] = inv0;
        for k in 1..n {
            let mut s = 0u64;
            for j in 1..=k {
                s = f.add(s, f.mul(unit[j], out[k - j]));
            }
            out[k] = f.neg(f.mul(s, inv0));
        }
        // relative precision n carries over: exponents -v .. -v + n
        Ok(Self::new(f, self.center, -v, out, -v + n as i64))
    }
}

/// Laurent expansion of `num / den` at `center`, exponents below `order`.
///
/// At infinity the expansion variable is `t = 1/x`.
pub fn laurent_expand(
    num: &FpPoly,
    den: &FpPoly,
    center: Center,
    order: i64,
) -> Result<TruncatedSeries> {
    num.check(den)?;
    let field = num.field();
    let dd = den.degree().ok_or(Error::ZeroDivisor)?;
    if num.is_zero() {
        return Ok(TruncatedSeries::new(field, center, order, Vec::new(), order));
    }
    let nd = num.degree().unwrap();
    // Write num/den = u^shift * N(u)/D(u) with N, D ordinary power series.
    let (nser, dser, shift): (Vec<u64>, Vec<u64>, i64) = match center {
        Center::Finite(a) => {
            let n = num.shifted(a).coeffs().to_vec();
            let d = den.shifted(a).coeffs().to_vec();
            (n, d, 0)
        }
        Center::Infinity => {
            let n = num.reversed(nd).coeffs().to_vec();
            let d = den.reversed(dd).coeffs().to_vec();
            let mut n = n;
            n.resize(nd + 1, 0);
            let mut d = d;
            d.resize(dd + 1, 0);
            // num/den = x^(nd-dd) * rev(num)(t)/rev(den)(t)
            (n, d, dd as i64 - nd as i64)
        }
    };
    let vd = dser.iter().position(|&c| c != 0).unwrap() as i64;
    let vn = nser.iter().position(|&c| c != 0).unwrap() as i64;
    let base = shift + vn - vd;
    let terms = (order - base).max(0) as usize;
    let mk = |s: &[u64], v: i64| {
        let mut c: Vec<u64> = s[v as usize..].to_vec();
        c.resize(c.len().max(terms), 0);
        c.truncate(terms.max(1));
        // these are exact polynomials; pad so the precision is `terms`
        TruncatedSeries::new(field, center, 0, c, terms.max(1) as i64)
    };
    let n = mk(&nser, vn);
    let d = mk(&dser, vd);
    let q = n.mul(&d.inverse()?)?;
    Ok(TruncatedSeries::new(
        field,
        center,
        base,
        q.raw_coeffs().to_vec(),
        order,
    ))
}

/// Expansion of `g'/g` at `center`, exponents below `order`.
///
/// At infinity the coefficient of `t^(l+1)` is the power sum `p_l` of the
/// roots; at a simple root `b` the principal part is `1/(x - b)`.
pub fn log_derivative_series(g: &FpPoly, center: Center, order: i64) -> Result<TruncatedSeries> {
    if g.degree().is_none() {
        return Err(Error::ZeroDivisor);
    }
    if let Center::Finite(c) = center {
        if g.root_multiplicity(c).unwrap_or(0) > 1 {
            return Err(Error::MultipleRoot(c));
        }
    }
    laurent_expand(&g.derivative(), g, center, order)
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
    fn from_roots_examples() {
        let f5 = fld(5);
        let g = FpPoly::from_roots(&FpSet::new(f5, [0, 1]), 1).unwrap();
        assert_eq!(g.coeffs(), &[0, 4, 1]);
        let f13 = fld(13);
        let g = FpPoly::from_roots(&FpSet::new(f13, [0, 1, 10]), 1).unwrap();
        assert_eq!(g, FpPoly::from_i64s(f13, &[0, 10, -11, 1]));
        let g = FpPoly::from_roots(&FpSet::new(f13, [3]), 4).unwrap();
        assert_eq!(g, FpPoly::from_i64s(f13, &[81, -108, 54, -12, 1]));
        assert!(FpPoly::from_roots(&FpSet::empty(f13), 1).is_err());
    }

    #[test]
    fn taylor_examples() {
        let f = fld(7);
        let sq = FpPoly::monomial(f, 1, 2);
        let t = sq.taylor_at(1, 4).unwrap();
        assert_eq!(t.raw_coeffs(), &[1, 2, 1, 0]);
        let cube = FpPoly::from_roots(&FpSet::new(f, [2]), 3).unwrap().mul_linear(5);
        let t = cube.taylor_at(2, 5).unwrap();
        assert_eq!(&t.raw_coeffs()[..3], &[0, 0, 0]);
        assert_ne!(t.raw_coeffs()[3], 0);
    }

    #[test]
    fn taylor_of_x11_family_at_root() {
        // x^11 - x^6... over p = 131, any root: constant 0, linear f'(r).
        let f = fld(131);
        let g = FpPoly::from_i64s(f, &[0, 1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1]);
        let roots = g.roots().unwrap();
        assert!(!roots.is_empty());
        for r in roots {
            let t = g.taylor_at(r, 3).unwrap();
            assert_eq!(t.coeff(0), Some(0));
            assert_eq!(t.coeff(1), Some(g.derivative().eval(r)));
        }
    }

    #[test]
    fn division_and_gcd() {
        let f = fld(13);
        let a = FpPoly::from_roots(&FpSet::new(f, [1, 2, 3]), 1).unwrap();
        let b = FpPoly::from_roots(&FpSet::new(f, [2, 3, 4]), 1).unwrap();
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, FpPoly::from_roots(&FpSet::new(f, [2, 3]), 1).unwrap());
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(a.div_rem(&FpPoly::zero(f)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn roots_and_splitting() {
        let f = fld(10007);
        let s = FpSet::new(f, [5, 17, 9999, 1234, 0]);
        let g = FpPoly::from_roots(&s, 1).unwrap();
        assert_eq!(g.roots().unwrap(), s.values());
        // x^2 + 1 is irreducible mod 10007 (10007 = 3 mod 4)
        let q = FpPoly::from_i64s(f, &[1, 0, 1]);
        assert!(q.roots().unwrap().is_empty());
        let h = g.mul(&q).mul(&FpPoly::from_roots(&FpSet::new(f, [5]), 2).unwrap());
        assert_eq!(h.roots().unwrap(), s.values());
        assert!(!h.splits().unwrap());
        let sf = g.mul_linear(5).split_factorization().unwrap().unwrap();
        assert_eq!(sf.1[0], (0, 1));
        assert!(sf.1.contains(&(5, 2)));
    }

    #[test]
    fn log_derivative_examples() {
        let f = fld(7);
        let g = FpPoly::from_roots(&FpSet::new(f, [1, 3]), 1).unwrap();
        let s = log_derivative_series(&g, Center::Infinity, 6).unwrap();
        assert_eq!(s.coeff(0), Some(0));
        assert_eq!(s.coeff(1), Some(2));
        assert_eq!(s.coeff(2), Some(4));
        assert_eq!(s.coeff(3), Some(3));
        // at b = 1: principal part 1/(x-1), constant term 1/(1-3)
        let s = log_derivative_series(&g, Center::Finite(1), 3).unwrap();
        assert_eq!(s.coeff(-1), Some(1));
        assert_eq!(s.coeff(0), Some(f.inv(f.sub(1, 3)).unwrap()));
        let g2 = g.mul_linear(1);
        assert_eq!(
            log_derivative_series(&g2, Center::Finite(1), 3),
            Err(Error::MultipleRoot(1))
        );
    }

    #[test]
    fn laurent_at_infinity_of_geometric_series() {
        let f = fld(11);
        let c = 3;
        let g = FpPoly::from_coeffs(f, vec![f.neg(c), 1]);
        let s = log_derivative_series(&g, Center::Infinity, 8).unwrap();
        for l in 0..7u64 {
            assert_eq!(s.coeff(l as i64 + 1), Some(f.pow(c, l)));
        }
    }

    fn small_prime() -> impl Strategy<Value = u64> {
        (3u64..98).prop_filter("prime", |&p| is_prime(p))
    }

    proptest! {
        #[test]
        fn derivative_at_root_is_product_of_differences(
            p in small_prime(), raw in proptest::collection::vec(0u64..1000, 1..8)
        ) {
            let f = fld(p);
            let s = FpSet::new(f, raw);
            let g = FpPoly::from_roots(&s, 1).unwrap().derivative();
            for &a in s.values() {
                let prod = s.values().iter().filter(|&&b| b != a)
                    .fold(1, |acc, &b| f.mul(acc, f.sub(a, b)));
                prop_assert_eq!(g.eval(a), prod);
            }
        }

        #[test]
        fn taylor_reexpansion_roundtrip(
            raw in proptest::collection::vec(0u64..10007, 1..51), a in 0u64..10007
        ) {
            let f = fld(10007);
            let g = FpPoly::from_coeffs(f, raw);
            let n = g.degree().map_or(1, |d| d + 1);
            let t = g.taylor_at(a, n).unwrap();
            // sum c_j (x - a)^j, re-expanded at 0
            let back = FpPoly::from_coeffs(f, t.raw_coeffs().to_vec()).shifted(f.neg(a));
            prop_assert_eq!(back, g);
        }

        #[test]
        fn log_derivative_at_infinity_gives_power_sums(
            p in small_prime(), raw in proptest::collection::vec(0u64..1000, 1..8)
        ) {
            let f = fld(p);
            let s = FpSet::new(f, raw);
            let g = FpPoly::from_roots(&s, 1).unwrap();
            let ser = log_derivative_series(&g, Center::Infinity, 22).unwrap();
            let ps = crate::symm::power_sums(&s, 20);
            for l in 0..=20usize {
                prop_assert_eq!(ser.coeff(l as i64 + 1).unwrap(), ps[l]);
            }
        }
    }
}
