//! Prime-field arithmetic.
//!
//! [`PrimeField`] is a validated prime modulus below 2^63 and carries the raw
//! `u64` arithmetic used by the hot loops elsewhere in the crate.
//! [`FieldElem`] is the checked public element type; [`FpSet`] is a sorted,
//! duplicate-free set of residues over one modulus.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{invalid, Error, Result};

/// Largest admissible modulus bit length; products fit in `u128`.
pub const MAX_MODULUS_BITS: u32 = 63;

#[inline]
fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for every 64-bit integer.
///
/// Miller-Rabin with the first twelve primes as witnesses, which is exact
/// below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factors of `n` (without multiplicity), by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime modulus `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >> MAX_MODULUS_BITS != 0 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn elem(self, v: u64) -> FieldElem {
        FieldElem { p: self.p, v: v % self.p }
    }

    pub fn from_i64(self, v: i64) -> FieldElem {
        FieldElem { p: self.p, v: self.reduce_i128(v as i128) }
    }

    #[inline]
    pub fn zero(self) -> FieldElem {
        FieldElem { p: self.p, v: 0 }
    }

    #[inline]
    pub fn one(self) -> FieldElem {
        FieldElem { p: self.p, v: 1 % self.p }
    }

    #[inline]
    pub fn reduce_i128(self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod_u64(a, b, self.p)
    }

    #[inline]
    pub fn pow(self, a: u64, e: u64) -> u64 {
        pow_mod_u64(a, e, self.p)
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn div(self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Inverse of a small integer, failing when it vanishes mod `p`.
    pub fn inv_int(self, n: i64) -> Result<u64> {
        let r = self.reduce_i128(n as i128);
        if r == 0 {
            return Err(Error::DivisorVanishes { divisor: n, modulus: self.p });
        }
        self.inv(r)
    }

    /// Membership in the subgroup of `d`-th roots of unity.
    #[inline]
    pub fn is_root_of_unity(self, x: u64, d: u64) -> bool {
        x != 0 && self.pow(x, d) == 1
    }

    /// Checks `d | p - 1`.
    pub fn check_divides(self, d: u64) -> Result<()> {
        if d == 0 || (self.p - 1) % d != 0 {
            return Err(Error::NotADivisor { d, p_minus_one: self.p - 1 });
        }
        Ok(())
    }

    /// An element of exact multiplicative order `d`.
    pub fn element_of_order(self, d: u64) -> Result<u64> {
        self.check_divides(d)?;
        if d == 1 {
            return Ok(1 % self.p);
        }
        let cofactor = (self.p - 1) / d;
        let primes = prime_factors(d);
        for x in 2..self.p {
            let y = self.pow(x, cofactor);
            if y == 1 {
                continue;
            }
            if primes.iter().all(|&q| self.pow(y, d / q) != 1) {
                return Ok(y);
            }
        }
        Err(Error::InvariantViolated(alloc::format!(
            "no element of order {d} mod {}",
            self.p
        )))
    }
}

/// A residue modulo a prime, always canonical in `[0, p)`.
///
/// Mixing moduli in `+`, `-`, `*` panics; use [`FieldElem::checked_add`] and
/// friends when the moduli are not known to agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    p: u64,
    v: u64,
}

impl FieldElem {
    #[inline]
    pub fn value(self) -> u64 {
        self.v
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    fn same_field(self, other: FieldElem) -> Result<PrimeField> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch { left: self.p, right: other.p });
        }
        Ok(self.field())
    }

    pub fn checked_add(self, rhs: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(rhs)?;
        Ok(FieldElem { p: self.p, v: f.add(self.v, rhs.v) })
    }

    pub fn checked_sub(self, rhs: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(rhs)?;
        Ok(FieldElem { p: self.p, v: f.sub(self.v, rhs.v) })
    }

    pub fn checked_mul(self, rhs: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(rhs)?;
        Ok(FieldElem { p: self.p, v: f.mul(self.v, rhs.v) })
    }

    pub fn checked_div(self, rhs: FieldElem) -> Result<FieldElem> {
        let f = self.same_field(rhs)?;
        Ok(FieldElem { p: self.p, v: f.div(self.v, rhs.v)? })
    }

    pub fn inv(self) -> Result<FieldElem> {
        Ok(FieldElem { p: self.p, v: self.field().inv(self.v)? })
    }

    pub fn pow(self, e: u64) -> FieldElem {
        FieldElem { p: self.p, v: self.field().pow(self.v, e) }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

macro_rules! field_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $checked:ident) => {
        impl $trait for FieldElem {
            type Output = FieldElem;
            #[inline]
            fn $method(self, rhs: FieldElem) -> FieldElem {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $assign_trait for FieldElem {
            #[inline]
            fn $assign(&mut self, rhs: FieldElem) {
                *self = $trait::$method(*self, rhs);
            }
        }
    };
}

field_binop!(Add, add, AddAssign, add_assign, checked_add);
field_binop!(Sub, sub, SubAssign, sub_assign, checked_sub);
field_binop!(Mul, mul, MulAssign, mul_assign, checked_mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { p: self.p, v: self.field().neg(self.v) }
    }
}

/// Elementwise inverses with a single field inversion (Montgomery's trick).
pub fn batch_inverse(xs: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let Some(first) = xs.first() else {
        return Ok(Vec::new());
    };
    let field = first.field();
    let mut raw = Vec::with_capacity(xs.len());
    for x in xs {
        if x.p != field.p {
            return Err(Error::ModulusMismatch { left: field.p, right: x.p });
        }
        raw.push(x.v);
    }
    Ok(batch_inverse_raw(field, &raw)?
        .into_iter()
        .map(|v| field.elem(v))
        .collect())
}

/// Raw-value variant of [`batch_inverse`].
pub fn batch_inverse_raw(field: PrimeField, xs: &[u64]) -> Result<Vec<u64>> {
    let mut prefix = Vec::with_capacity(xs.len());
    let mut acc = 1u64;
    for &x in xs {
        if x % field.p == 0 {
            return Err(Error::ZeroDivisor);
        }
        prefix.push(acc);
        acc = field.mul(acc, x);
    }
    let mut inv = field.inv(acc)?;
    let mut out = alloc::vec![0u64; xs.len()];
    for i in (0..xs.len()).rev() {
        out[i] = field.mul(inv, prefix[i]);
        inv = field.mul(inv, xs[i]);
    }
    Ok(out)
}

/// The subgroup `mu_d` of `d`-th roots of unity, `d | p - 1`.
pub fn roots_of_unity(field: PrimeField, d: u64) -> Result<FpSet> {
    let g = field.element_of_order(d)?;
    let mut elems = Vec::with_capacity(d as usize);
    let mut x = 1 % field.p;
    for _ in 0..d {
        elems.push(x);
        x = field.mul(x, g);
    }
    Ok(FpSet::new(field, elems))
}

fn small_binom(field: PrimeField, n: u64, k: u64) -> u64 {
    debug_assert!(n < field.p && k <= n);
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 0..k {
        num = field.mul(num, n - j);
        den = field.mul(den, j + 1);
    }
    field.mul(num, field.inv(den).expect("j+1 < p is invertible"))
}

/// `C(n, k) mod p`, with Lucas' digit rule once `n >= p`.
pub fn binom_mod(n: i64, k: i64, field: PrimeField) -> Result<FieldElem> {
    if n < 0 || k < 0 || k > n {
        return Err(invalid!("binomial C({n}, {k}) requires 0 <= k <= n"));
    }
    let p = field.p;
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1 % p;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(field.zero());
        }
        acc = field.mul(acc, small_binom(field, nd, kd));
        n /= p;
        k /= p;
    }
    Ok(field.elem(acc))
}

/// Factorials and inverse factorials `0..=n_max` for `n_max < p`.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    field: PrimeField,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl FactorialTable {
    pub fn new(field: PrimeField, n_max: u64) -> Result<Self> {
        if n_max >= field.p {
            return Err(invalid!(
                "factorial table up to {n_max} needs n_max < p = {}",
                field.p
            ));
        }
        let n = n_max as usize;
        let mut fact = alloc::vec![1u64; n + 1];
        for i in 1..=n {
            fact[i] = field.mul(fact[i - 1], i as u64);
        }
        let mut inv_fact = alloc::vec![1u64; n + 1];
        inv_fact[n] = field.inv(fact[n])?;
        for i in (1..=n).rev() {
            inv_fact[i - 1] = field.mul(inv_fact[i], i as u64);
        }
        Ok(FactorialTable { field, fact, inv_fact })
    }

    pub fn binom(&self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let (n, k) = (n as usize, k as usize);
        let f = self.field;
        f.mul(self.fact[n], f.mul(self.inv_fact[k], self.inv_fact[n - k]))
    }
}

/// A sorted, duplicate-free set of residues modulo one prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpSet {
    field: PrimeField,
    elems: Vec<u64>,
}

impl FpSet {
    /// Reduces, sorts and deduplicates `values`.
    pub fn new(field: PrimeField, values: impl IntoIterator<Item = u64>) -> Self {
        let mut elems: Vec<u64> = values.into_iter().map(|v| v % field.p).collect();
        elems.sort_unstable();
        elems.dedup();
        FpSet { field, elems }
    }

    pub fn from_i64s(field: PrimeField, values: &[i64]) -> Self {
        Self::new(field, values.iter().map(|&v| field.reduce_i128(v as i128)))
    }

    /// Like [`FpSet::new`] but rejects repeated residues.
    pub fn try_from_distinct(field: PrimeField, values: &[u64]) -> Result<Self> {
        let set = Self::new(field, values.iter().copied());
        if set.len() != values.len() {
            return Err(invalid!("values repeat modulo {}", field.p));
        }
        Ok(set)
    }

    pub fn empty(field: PrimeField) -> Self {
        FpSet { field, elems: Vec::new() }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.field.p
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn values(&self) -> &[u64] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let p = self.field.p;
        self.elems.iter().map(move |&v| FieldElem { p, v })
    }

    pub fn contains(&self, v: u64) -> bool {
        self.elems.binary_search(&(v % self.field.p)).is_ok()
    }

    pub fn check_same_field(&self, other: &FpSet) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(())
    }

    /// `-A`.
    pub fn negated(&self) -> FpSet {
        let f = self.field;
        Self::new(f, self.elems.iter().map(|&a| f.neg(a)))
    }

    /// `A + t`.
    pub fn translated(&self, t: u64) -> FpSet {
        let f = self.field;
        let t = t % f.p;
        Self::new(f, self.elems.iter().map(|&a| f.add(a, t)))
    }

    /// `c * A`.
    pub fn scaled(&self, c: u64) -> FpSet {
        let f = self.field;
        Self::new(f, self.elems.iter().map(|&a| f.mul(a, c % f.p)))
    }

    /// `A + B` as a set.
    pub fn sumset(&self, other: &FpSet) -> Result<FpSet> {
        self.check_same_field(other)?;
        let f = self.field;
        Ok(Self::new(
            f,
            self.elems
                .iter()
                .flat_map(|&a| other.elems.iter().map(move |&b| f.add(a, b))),
        ))
    }

    /// `A - A` as a set (contains 0 whenever `A` is nonempty).
    pub fn difference_set(&self) -> FpSet {
        let f = self.field;
        Self::new(
            f,
            self.elems
                .iter()
                .flat_map(|&a| self.elems.iter().map(move |&b| f.sub(a, b))),
        )
    }

    pub fn intersection(&self, other: &FpSet) -> Result<FpSet> {
        self.check_same_field(other)?;
        Ok(FpSet {
            field: self.field,
            elems: self
                .elems
                .iter()
                .copied()
                .filter(|v| other.elems.binary_search(v).is_ok())
                .collect(),
        })
    }

    pub fn is_subset(&self, other: &FpSet) -> bool {
        self.field == other.field && self.elems.iter().all(|&v| other.contains(v))
    }

    /// Same set with `v` added.
    pub fn with(&self, v: u64) -> FpSet {
        Self::new(self.field, self.elems.iter().copied().chain(core::iter::once(v)))
    }
}

impl fmt::Display for FpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}} mod {}", self.field.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn trial_division_is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut q = 2;
        while q * q <= n {
            if n % q == 0 {
                return false;
            }
            q += 1;
        }
        true
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(41));
        assert!(!is_prime(1025));
        // 2*3000*2999+1 = 673 * 26737
        assert!(!is_prime(17_994_001));
        assert!(!trial_division_is_prime(17_994_001));
        assert!(is_prime(1_000_003));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(0) && !is_prime(1));
        // strong pseudoprime to bases 2..=23
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial_division_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(PrimeField::new(15), Err(Error::NotPrime(15)));
        assert!(matches!(
            PrimeField::new((1u64 << 63) + 29),
            Err(Error::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn mixing_moduli_is_rejected() {
        let a = PrimeField::new(7).unwrap().elem(3);
        let b = PrimeField::new(11).unwrap().elem(3);
        assert_eq!(
            a.checked_add(b),
            Err(Error::ModulusMismatch { left: 7, right: 11 })
        );
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn mixing_moduli_panics_in_operators() {
        let a = PrimeField::new(7).unwrap().elem(3);
        let b = PrimeField::new(11).unwrap().elem(3);
        let _ = a * b;
    }

    #[test]
    fn roots_of_unity_examples() {
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(roots_of_unity(f13, 6).unwrap().values(), &[1, 3, 4, 9, 10, 12]);
        assert_eq!(roots_of_unity(f13, 1).unwrap().values(), &[1]);
        let f41 = PrimeField::new(41).unwrap();
        let squares = FpSet::new(f41, (1..41u64).map(|x| x * x));
        assert_eq!(roots_of_unity(f41, 20).unwrap(), squares);
        assert!(matches!(
            roots_of_unity(f13, 5),
            Err(Error::NotADivisor { d: 5, p_minus_one: 12 })
        ));
    }

    #[test]
    fn roots_of_unity_form_subgroups() {
        let mut p = 3;
        while p <= 1000 {
            if is_prime(p) {
                let f = PrimeField::new(p).unwrap();
                for d in 1..p {
                    if (p - 1) % d != 0 {
                        continue;
                    }
                    let mu = roots_of_unity(f, d).unwrap();
                    assert_eq!(mu.len() as u64, d);
                    let brute: Vec<u64> = (1..p).filter(|&x| f.pow(x, d) == 1).collect();
                    assert_eq!(mu.values(), &brute[..]);
                    if d <= 40 {
                        for &x in mu.values() {
                            assert!(mu.contains(f.inv(x).unwrap()));
                            for &y in mu.values() {
                                assert!(mu.contains(f.mul(x, y)));
                            }
                        }
                    }
                }
            }
            p += 2;
        }
    }

    #[test]
    fn binomial_examples() {
        let f41 = PrimeField::new(41).unwrap();
        assert_eq!(binom_mod(24, 20, f41).unwrap().value(), 7);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(binom_mod(8, 3, f3).unwrap().value(), 2);
        assert_eq!(binom_mod(17, 0, f3).unwrap().value(), 1);
        assert!(binom_mod(3, 4, f3).is_err());
        assert!(binom_mod(3, -1, f3).is_err());
    }

    #[test]
    fn binomial_matches_exact_values() {
        // Pascal's triangle over u128 is exact for n <= 60.
        let mut row: Vec<u128> = vec![1];
        let mut table = vec![row.clone()];
        for _ in 1..=60 {
            let mut next = vec![1u128; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
            table.push(row.clone());
        }
        for p in (2..=97).filter(|&p| is_prime(p)) {
            let f = PrimeField::new(p).unwrap();
            for (n, row) in table.iter().enumerate() {
                for (k, &c) in row.iter().enumerate() {
                    let expect = (c % p as u128) as u64;
                    assert_eq!(binom_mod(n as i64, k as i64, f).unwrap().value(), expect);
                }
            }
        }
    }

    #[test]
    fn factorial_table_agrees_with_binom_mod() {
        let f = PrimeField::new(101).unwrap();
        let t = FactorialTable::new(f, 100).unwrap();
        for n in 0..=100 {
            for k in 0..=n {
                assert_eq!(t.binom(n, k), binom_mod(n as i64, k as i64, f).unwrap().value());
            }
        }
        assert!(FactorialTable::new(f, 101).is_err());
    }

    #[test]
    fn batch_inverse_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let out = batch_inverse(&[f7.elem(2), f7.elem(3)]).unwrap();
        assert_eq!(out, vec![f7.elem(4), f7.elem(5)]);
        assert_eq!(batch_inverse(&[f7.one()]).unwrap(), vec![f7.one()]);
        assert_eq!(batch_inverse(&[f7.elem(2), f7.zero()]), Err(Error::ZeroDivisor));
    }

    #[test]
    fn set_operations() {
        let f = PrimeField::new(13).unwrap();
        let a = FpSet::new(f, [10, 0, 1, 14]);
        assert_eq!(a.values(), &[0, 1, 10]);
        assert_eq!(a.negated().values(), &[0, 3, 12]);
        let mut diffs = roots_of_unity(f, 6).unwrap().values().to_vec();
        diffs.push(0);
        assert_eq!(a.difference_set(), FpSet::new(f, diffs));
        assert!(FpSet::try_from_distinct(f, &[1, 14]).is_err());
    }
}
