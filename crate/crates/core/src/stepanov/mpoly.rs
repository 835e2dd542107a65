//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// The integer `n` as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in `nvars` variables; monomials are exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, q(c))
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> MPoly {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(Self::int(self.nvars, 1), |acc, _| acc.mul(self))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * q(e[i] as i64));
        }
        out
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Coefficient of `v_i^k`, as a polynomial in the same variables.
    pub fn coeff_in(&self, i: usize, k: u32) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut e2 = e.clone();
                e2[i] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Substitutes `v_i = value` (a polynomial in the same variables).
    pub fn substitute(&self, i: usize, value: &MPoly) -> MPoly {
        let mut out = Self::zero(self.nvars);
        let mut powers: Vec<MPoly> = vec![Self::int(self.nvars, 1)];
        for (e, c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[i] = 0;
            let term = Self::monomial(e2, c.clone()).mul(&powers[e[i] as usize]);
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                let _ = write!(s, "{a}");
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("v");
                let _ = if k == 1 { write!(s, "{name}") } else { write!(s, "{name}^{k}") };
            }
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| alloc::format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        f.write_str(&self.display_with(&refs))
    }
}

/// Falling factorial `(x)_m = x (x-1) ... (x-m+1)`, `(x)_0 = 1`.
pub fn falling(x: &MPoly, m: u32) -> MPoly {
    let n = x.nvars();
    (0..m).fold(MPoly::int(n, 1), |acc, j| acc.mul(&x.sub(&MPoly::int(n, j as i64))))
}

/// Shorthand for building polynomials from small integer terms:
/// each `(coeff, exponents)`.
pub fn from_terms(nvars: usize, terms: &[(i64, &[u32])]) -> MPoly {
    terms.iter().fold(MPoly::zero(nvars), |acc, (c, e)| {
        acc.add(&MPoly::monomial(e.to_vec(), q(*c)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let s = x.add(&y);
        let sq = s.pow(2);
        let expect = from_terms(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(sq, expect);
        assert!(sq.sub(&expect).is_zero());
        assert_eq!(sq.derivative(0), x.scale(&q(2)).add(&y.scale(&q(2))));
        assert_eq!(sq.eval(&[q(2), q(3)]), q(25));
        assert_eq!(sq.substitute(1, &MPoly::int(2, 1)), x.add(&MPoly::int(2, 1)).pow(2));
        assert_eq!(sq.coeff_in(0, 1), y.scale(&q(2)));
    }

    #[test]
    fn falling_factorials() {
        let x = MPoly::var(1, 0);
        assert_eq!(falling(&x, 0), MPoly::int(1, 1));
        assert_eq!(falling(&x, 3).eval(&[q(5)]), q(60));
        assert_eq!(falling(&x, 4).eval(&[q(3)]), q(0));
    }

    #[test]
    fn display() {
        let p = from_terms(2, &[(-3, &[2, 0]), (1, &[0, 1]), (7, &[0, 0])]);
        assert_eq!(p.display_with(&["a", "T"]), "-3a^2 + T + 7");
    }
}
