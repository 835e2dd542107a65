//! Residues of rational differential forms `f(x) dx` on the projective
//! line over F_p, and the five named forms built from
//! `g = prod_{b in B} (x - b)` and `h = prod_{a in A} (x + a)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, precondition, Error, Result};
use crate::fp::{batch_inverse_raw, FpSet, PrimeField};
use crate::poly::{laurent_expand, Center, FpPoly};
use crate::symm::power_sums;

/// `(num / den) dx`, stored in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    num: FpPoly,
    den: FpPoly,
}

impl RationalForm {
    pub fn new(num: FpPoly, den: FpPoly) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::ModulusMismatch {
                left: num.field().modulus(),
                right: den.field().modulus(),
            });
        }
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let f = num.field();
        if num.is_zero() {
            return Ok(RationalForm { num, den: FpPoly::one(f) });
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lead = f.inv(den.leading())?;
        Ok(RationalForm { num: num.scale(lead), den: den.scale(lead) })
    }

    pub fn polynomial(p: FpPoly) -> Self {
        let one = FpPoly::one(p.field());
        RationalForm { num: p, den: one }
    }

    pub fn num(&self) -> &FpPoly {
        &self.num
    }

    pub fn den(&self) -> &FpPoly {
        &self.den
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    /// Coefficient of `1/(x - b)` in the Laurent expansion at `b`.
    pub fn residue_at(&self, b: u64) -> Result<u64> {
        if self.num.is_zero() || self.den.eval(b) != 0 {
            return Ok(0);
        }
        let s = laurent_expand(&self.num, &self.den, Center::Finite(b), 0)?;
        Ok(s.coeff(-1).unwrap_or(0))
    }

    /// `-a_1` where `f = sum a_n x^(-n)` near infinity.
    pub fn residue_at_infinity(&self) -> Result<u64> {
        if self.num.is_zero() {
            return Ok(0);
        }
        let s = laurent_expand(&self.num, &self.den, Center::Infinity, 2)?;
        Ok(self.field().neg(s.coeff(1).unwrap_or(0)))
    }

    /// Residues at every finite pole and at infinity; `None` when the
    /// denominator does not split over F_p.
    pub fn residue_table(&self) -> Result<Option<ResidueTable>> {
        let f = self.field();
        let Some((_, factors)) = self.den.split_factorization()? else {
            return Ok(None);
        };
        let mut finite = Vec::with_capacity(factors.len());
        let mut total = 0;
        for (b, _) in factors {
            let r = self.residue_at(b)?;
            total = f.add(total, r);
            finite.push((b, r));
        }
        let at_infinity = self.residue_at_infinity()?;
        total = f.add(total, at_infinity);
        Ok(Some(ResidueTable { form: self.clone(), finite, at_infinity, total }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    pub form: RationalForm,
    /// `(pole, residue)` in increasing pole order.
    pub finite: Vec<(u64, u64)>,
    pub at_infinity: u64,
    pub total: u64,
}

/// Outcome of the sum-of-residues check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueCheck {
    Zero,
    Nonzero(u64),
    /// The denominator has an irreducible factor of degree > 1.
    Inconclusive,
}

pub fn sum_residues_check(form: &RationalForm) -> Result<ResidueCheck> {
    Ok(match form.residue_table()? {
        None => ResidueCheck::Inconclusive,
        Some(t) if t.total == 0 => ResidueCheck::Zero,
        Some(t) => ResidueCheck::Nonzero(t.total),
    })
}

/// The five forms, for a fixed `k >= 0`:
///
/// | name    | form                                   |
/// |---------|----------------------------------------|
/// | `W20`   | `x^(k+1) (g'/g)^2 dx`                  |
/// | `W11`   | `x^(k+1) (g'/g)(h'/h) dx`              |
/// | `W30`   | `x^(k+2) (g'/g)^3 dx`                  |
/// | `Psi`   | `x^(k+2) (g'/g)' (h'/h) dx`            |
/// | `W21`   | `x^(k+2) (g'/g)^2 (h'/h) dx`           |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedForm {
    W20,
    W11,
    W30,
    Psi,
    W21,
}

impl NamedForm {
    pub const ALL: [NamedForm; 5] = [
        NamedForm::W20,
        NamedForm::W11,
        NamedForm::W30,
        NamedForm::Psi,
        NamedForm::W21,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedForm::W20 => "omega20",
            NamedForm::W11 => "omega11",
            NamedForm::W30 => "omega30",
            NamedForm::Psi => "psi",
            NamedForm::W21 => "omega21",
        }
    }

    /// Whether the form involves `h`, i.e. poles at `-A`.
    pub fn mixed(self) -> bool {
        !matches!(self, NamedForm::W20 | NamedForm::W30)
    }
}

impl fmt::Display for NamedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Builds the named form as an explicit rational function.
pub fn build_form(which: NamedForm, a: &FpSet, b: &FpSet, k: usize) -> Result<RationalForm> {
    a.check_same_field(b)?;
    let f = b.field();
    let g = FpPoly::from_roots(b, 1)?;
    let g1 = g.derivative();
    let x = |e: usize| FpPoly::monomial(f, 1, e);
    let h = || FpPoly::from_roots(&a.negated(), 1);
    let (num, den) = match which {
        NamedForm::W20 => (x(k + 1).mul(&g1).mul(&g1), g.mul(&g)),
        NamedForm::W30 => (x(k + 2).mul(&g1).mul(&g1).mul(&g1), g.mul(&g).mul(&g)),
        NamedForm::W11 => {
            let h = h()?;
            (x(k + 1).mul(&g1).mul(&h.derivative()), g.mul(&h))
        }
        NamedForm::Psi => {
            let h = h()?;
            // (g'/g)' = (g'' g - g'^2) / g^2
            let dlog = g.derivative().derivative().mul(&g).sub(&g1.mul(&g1));
            (x(k + 2).mul(&dlog).mul(&h.derivative()), g.mul(&g).mul(&h))
        }
        NamedForm::W21 => {
            let h = h()?;
            (x(k + 2).mul(&g1).mul(&g1).mul(&h.derivative()), g.mul(&g).mul(&h))
        }
    };
    RationalForm::new(num, den)
}

/// How much of the argument to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormMode {
    /// The raw sum-of-residues identity, valid for any admissible sets.
    General,
    /// The closed form with the power-sum hypotheses checked first. `d`
    /// enters through `gamma_0 = alpha(alpha+1)/(d-1)` for `Psi` and
    /// `W21` only.
    Specialized { d: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormIdentityReport {
    pub which: NamedForm,
    pub k: usize,
    pub mode: FormMode,
    pub lhs: u64,
    pub rhs: u64,
    /// Machine residues agree with the closed-form residue at every pole.
    pub residues_match: bool,
    /// Machine sum of all residues (zero when the denominator splits).
    pub residue_total: u64,
    pub ok: bool,
}

/// Per-point sums used by the closed forms.
struct Sums {
    f: PrimeField,
    /// `S_b = sum_{b' != b} 1/(b - b')`, `T_b` the same with squares
    s: Vec<u64>,
    t: Vec<u64>,
    /// `U_b = sum_a 1/(a + b)`, `V_b` with squares
    u: Vec<u64>,
    v: Vec<u64>,
    /// `W_a = sum_b 1/(a + b)`, `X_a` with squares
    w: Vec<u64>,
    xa: Vec<u64>,
    /// `Y = sum_{a,b} b^(k+2) / (a+b)^2`, `Z = sum_{a,b} a^(k+2)/(a+b)^2`
    inv_sq: Vec<Vec<u64>>,
}

impl Sums {
    fn new(a: &FpSet, b: &FpSet, mixed: bool) -> Result<Self> {
        let f = b.field();
        let bv = b.values();
        let beta = bv.len();
        let mut diffs = Vec::with_capacity(beta * beta);
        for &x in bv {
            for &y in bv {
                if x != y {
                    diffs.push(f.sub(x, y));
                }
            }
        }
        let inv = batch_inverse_raw(f, &diffs)?;
        let mut s = vec![0u64; beta];
        let mut t = vec![0u64; beta];
        for i in 0..beta {
            for j in 0..beta - 1 {
                let z = inv[i * (beta - 1) + j];
                s[i] = f.add(s[i], z);
                t[i] = f.add(t[i], f.mul(z, z));
            }
        }
        let av = a.values();
        let (mut u, mut v) = (vec![0u64; beta], vec![0u64; beta]);
        let (mut w, mut xa) = (vec![0u64; av.len()], vec![0u64; av.len()]);
        let mut inv_sq = Vec::new();
        if mixed {
            let sums: Vec<u64> = av
                .iter()
                .flat_map(|&x| bv.iter().map(move |&y| f.add(x, y)))
                .collect();
            if sums.contains(&0) {
                return Err(precondition!("B meets -A; poles of g and h collide"));
            }
            let inv = batch_inverse_raw(f, &sums)?;
            for (i, row) in inv.chunks(beta).enumerate() {
                let mut sq_row = Vec::with_capacity(beta);
                for (j, &z) in row.iter().enumerate() {
                    let z2 = f.mul(z, z);
                    u[j] = f.add(u[j], z);
                    v[j] = f.add(v[j], z2);
                    w[i] = f.add(w[i], z);
                    xa[i] = f.add(xa[i], z2);
                    sq_row.push(z2);
                }
                inv_sq.push(sq_row);
            }
        }
        Ok(Sums { f, s, t, u, v, w, xa, inv_sq })
    }

    fn sum(&self, it: impl Iterator<Item = u64>) -> u64 {
        it.fold(0, |acc, x| self.f.add(acc, x))
    }
}

/// `sum over r + s = k` of `x_r y_s` (or of `(s+1) x_r y_s` when `weighted`).
fn convolve2(f: PrimeField, x: &[u64], y: &[u64], k: usize, weighted: bool) -> u64 {
    (0..=k).fold(0, |acc, r| {
        let mut t = f.mul(x[r], y[k - r]);
        if weighted {
            t = f.mul(t, (k - r + 1) as u64 % f.modulus());
        }
        f.add(acc, t)
    })
}

fn convolve3(f: PrimeField, x: &[u64], y: &[u64], z: &[u64], k: usize) -> u64 {
    let mut acc = 0;
    for r in 0..=k {
        for s in 0..=k - r {
            acc = f.add(acc, f.mul(x[r], f.mul(y[s], z[k - r - s])));
        }
    }
    acc
}

fn signed(f: PrimeField, ps: &[u64]) -> Vec<u64> {
    ps.iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 1 { f.neg(v) } else { v })
        .collect()
}

fn int(f: PrimeField, n: i64) -> u64 {
    f.reduce_i128(n as i128)
}

/// Closed-form residue of the named form at each finite pole, in the
/// order `B` then `-A`.
fn closed_form_residues(which: NamedForm, a: &FpSet, b: &FpSet, k: usize, s: &Sums) -> Vec<(u64, u64)> {
    let f = s.f;
    let k64 = k as u64;
    let kk = |e: u64| e % f.modulus();
    let mut out = Vec::new();
    for (j, &y) in b.values().iter().enumerate() {
        let bk = f.pow(y, k64);
        let bk1 = f.mul(bk, y);
        let bk2 = f.mul(bk1, y);
        let r = match which {
            NamedForm::W20 => f.add(f.mul(kk(k64 + 1), bk), f.mul(2, f.mul(bk1, s.s[j]))),
            NamedForm::W11 => f.mul(bk1, s.u[j]),
            NamedForm::W30 => {
                let c0 = kk((k64 + 2) * (k64 + 1) / 2);
                let t1 = f.mul(c0, bk);
                let t2 = f.mul(kk(3 * (k64 + 2)), f.mul(bk1, s.s[j]));
                let t3 = f.mul(3, f.mul(bk2, f.sub(f.mul(s.s[j], s.s[j]), s.t[j])));
                f.add(t1, f.add(t2, t3))
            }
            NamedForm::Psi => f.sub(
                f.mul(bk2, s.v[j]),
                f.mul(kk(k64 + 2), f.mul(bk1, s.u[j])),
            ),
            NamedForm::W21 => {
                let t1 = f.mul(2, f.mul(bk2, f.mul(s.s[j], s.u[j])));
                let t2 = f.mul(kk(k64 + 2), f.mul(bk1, s.u[j]));
                f.sub(f.add(t1, t2), f.mul(bk2, s.v[j]))
            }
        };
        out.push((y, r));
    }
    if which.mixed() {
        let sign = |v: u64| if k % 2 == 1 { f.neg(v) } else { v };
        for (i, &x) in a.values().iter().enumerate() {
            let ak1 = f.pow(x, k64 + 1);
            let ak2 = f.mul(ak1, x);
            let r = match which {
                NamedForm::W11 => sign(f.mul(ak1, s.w[i])),
                NamedForm::Psi => f.neg(sign(f.mul(ak2, s.xa[i]))),
                NamedForm::W21 => sign(f.mul(ak2, f.mul(s.w[i], s.w[i]))),
                _ => unreachable!(),
            };
            out.push((f.neg(x), r));
        }
    }
    out
}

/// Minus the residue at infinity, as a power-sum convolution.
fn infinity_side(which: NamedForm, pa: &[u64], pb: &[u64], k: usize, f: PrimeField) -> u64 {
    let sa = signed(f, pa);
    match which {
        NamedForm::W20 => convolve2(f, pb, pb, k, false),
        NamedForm::W11 => convolve2(f, &sa, pb, k, false),
        NamedForm::W30 => convolve3(f, pb, pb, pb, k),
        // Res_inf psi = + sum (-1)^r (s+1) p_r(A) p_s(B)
        NamedForm::Psi => f.neg(convolve2(f, &sa, pb, k, true)),
        NamedForm::W21 => convolve3(f, pb, pb, &sa, k),
    }
}

/// First interior term of the convolution that is nonzero, if any.
fn interior_violation(which: NamedForm, pa: &[u64], pb: &[u64], k: usize) -> Option<(usize, usize, usize)> {
    let nz = |v: u64| v != 0;
    match which {
        NamedForm::W20 => (1..k).find(|&r| nz(pb[r]) && nz(pb[k - r])).map(|r| (r, k - r, 0)),
        NamedForm::W11 | NamedForm::Psi => {
            (1..k).find(|&r| nz(pa[r]) && nz(pb[k - r])).map(|r| (r, k - r, 0))
        }
        NamedForm::W30 | NamedForm::W21 => {
            let third = if which == NamedForm::W30 { pb } else { pa };
            for r in 0..=k {
                for s in 0..=k - r {
                    let t = k - r - s;
                    let boundary = [r, s, t].iter().filter(|&&e| e == 0).count() >= 2;
                    if !boundary && nz(pb[r]) && nz(pb[s]) && nz(third[t]) {
                        return Some((r, s, t));
                    }
                }
            }
            None
        }
    }
}

/// Verifies one named-form identity; see [`FormMode`].
///
/// General mode compares the sum of closed-form finite residues with the
/// power-sum convolution from infinity. Specialized mode checks the
/// hypotheses (interior convolution terms vanish; for `Psi`/`W21` also
/// `|A| = |B|`, `p_k(A) = -p_k(B)`, `k` even and the first
/// `1/(a+b)` relation at every `b`) and compares the final closed form.
/// Both modes also recompute every residue from the rational function.
pub fn lemma_form_identity(
    which: NamedForm,
    a: &FpSet,
    b: &FpSet,
    k: usize,
    mode: FormMode,
) -> Result<FormIdentityReport> {
    a.check_same_field(b)?;
    if b.len() < 2 || (which.mixed() && a.is_empty()) {
        return Err(invalid!("need |B| >= 2 and A nonempty"));
    }
    let f = b.field();
    let sums = Sums::new(a, b, which.mixed())?;
    let pa = power_sums(a, k);
    let pb = power_sums(b, k);

    let form = build_form(which, a, b, k)?;
    let closed = closed_form_residues(which, a, b, k, &sums);
    let mut residues_match = true;
    let mut finite_total = 0;
    for &(pole, r) in &closed {
        residues_match &= form.residue_at(pole)? == r;
        finite_total = f.add(finite_total, r);
    }
    let machine_inf = form.residue_at_infinity()?;
    let machine_finite = closed
        .iter()
        .map(|&(pole, _)| form.residue_at(pole))
        .collect::<Result<Vec<_>>>()?;
    let residue_total = f.add(sums.sum(machine_finite.into_iter()), machine_inf);
    residues_match &= machine_inf == f.neg(infinity_side(which, &pa, &pb, k, f));

    let (lhs, rhs) = match mode {
        FormMode::General => (finite_total, infinity_side(which, &pa, &pb, k, f)),
        FormMode::Specialized { d } => specialized(which, a, b, k, d, &sums, &pa, &pb)?,
    };
    let ok = lhs == rhs && residues_match && residue_total == 0;
    Ok(FormIdentityReport { which, k, mode, lhs, rhs, residues_match, residue_total, ok })
}

#[allow(clippy::too_many_arguments)]
fn specialized(
    which: NamedForm,
    a: &FpSet,
    b: &FpSet,
    k: usize,
    d: u64,
    s: &Sums,
    pa: &[u64],
    pb: &[u64],
) -> Result<(u64, u64)> {
    let f = s.f;
    if let Some((r, t, u)) = interior_violation(which, pa, pb, k) {
        return Err(precondition!(
            "interior power-sum term ({r}, {t}, {u}) is nonzero for k = {k}"
        ));
    }
    let alpha = a.len() as i64;
    let beta = b.len() as i64;
    let k64 = k as u64;
    let bv = b.values();
    let av = a.values();
    let half = f.inv_int(2)?;
    // gamma_3 with |B| in place of alpha
    let gamma3 = |size: i64| f.sub(int(f, size), f.mul(int(f, k as i64 + 1), half));

    match which {
        NamedForm::W20 => {
            let lhs = s.sum(bv.iter().enumerate().map(|(j, &y)| f.mul(f.pow(y, k64 + 1), s.s[j])));
            Ok((lhs, f.mul(pb[k], gamma3(beta))))
        }
        NamedForm::W11 => {
            let lb = s.sum(bv.iter().enumerate().map(|(j, &y)| f.mul(f.pow(y, k64 + 1), s.u[j])));
            let la = s.sum(av.iter().enumerate().map(|(i, &x)| f.mul(f.pow(x, k64 + 1), s.w[i])));
            let sign = |v: u64| if k % 2 == 1 { f.neg(v) } else { v };
            let lhs = f.add(lb, sign(la));
            let rhs = f.add(f.mul(int(f, alpha), pb[k]), sign(f.mul(int(f, beta), pa[k])));
            Ok((lhs, rhs))
        }
        NamedForm::W30 => {
            let lhs = s.sum(bv.iter().enumerate().map(|(j, &y)| {
                f.mul(f.pow(y, k64 + 2), f.sub(f.mul(s.s[j], s.s[j]), s.t[j]))
            }));
            // gamma_2 = beta^2 - (k+2) beta + (k+1)(k+2)/3
            let third = f.mul(int(f, (k as i64 + 1) * (k as i64 + 2)), f.inv_int(3)?);
            let g2 = f.add(f.sub(int(f, beta * beta), int(f, (k as i64 + 2) * beta)), third);
            Ok((lhs, f.mul(g2, pb[k])))
        }
        NamedForm::Psi | NamedForm::W21 => {
            if alpha != beta {
                return Err(precondition!("|A| = {alpha} differs from |B| = {beta}"));
            }
            if k % 2 == 1 {
                return Err(precondition!("k = {k} is odd"));
            }
            if f.add(pa[k], pb[k]) != 0 {
                return Err(precondition!("p_{k}(A) != -p_{k}(B)"));
            }
            let gamma0 = f.mul(
                f.mul(int(f, alpha), int(f, alpha + 1)),
                f.inv_int(d as i64 - 1)?,
            );
            for (j, &y) in bv.iter().enumerate() {
                if s.u[j] != f.mul(gamma0, s.s[j]) {
                    return Err(precondition!("the 1/(a+b) relation fails at b = {y}"));
                }
            }
            let g03 = f.mul(gamma0, gamma3(alpha));
            let kp2 = int(f, k as i64 + 2);
            let mut ysum = 0; // sum b^(k+2)/(a+b)^2
            let mut zsum = 0; // sum a^(k+2)/(a+b)^2
            for (i, &x) in av.iter().enumerate() {
                let ak2 = f.pow(x, k64 + 2);
                for (j, &y) in bv.iter().enumerate() {
                    let z2 = s.inv_sq[i][j];
                    ysum = f.add(ysum, f.mul(f.pow(y, k64 + 2), z2));
                    zsum = f.add(zsum, f.mul(ak2, z2));
                }
            }
            if which == NamedForm::Psi {
                let gamma4 = f.sub(f.mul(kp2, g03), int(f, k as i64 * alpha));
                Ok((f.sub(ysum, zsum), f.mul(gamma4, pb[k])))
            } else {
                let inv_g0 = f.inv(gamma0)?;
                let t1 = s.sum(av.iter().enumerate().map(|(i, &x)| {
                    f.mul(f.pow(x, k64 + 2), f.mul(s.w[i], s.w[i]))
                }));
                let t2 = s.sum(bv.iter().enumerate().map(|(j, &y)| {
                    f.mul(f.pow(y, k64 + 2), f.mul(s.u[j], s.u[j]))
                }));
                let lhs = f.sub(f.add(t1, f.mul(f.mul(2, inv_g0), t2)), ysum);
                let gamma5 = f.sub(int(f, alpha * alpha), f.mul(kp2, g03));
                Ok((lhs, f.mul(gamma5, pb[k])))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::roots_of_unity;

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn simple_residues() {
        let f = fld(41);
        let dx_over_x = RationalForm::new(FpPoly::one(f), FpPoly::x(f)).unwrap();
        assert_eq!(dx_over_x.residue_at(0).unwrap(), 1);
        assert_eq!(dx_over_x.residue_at_infinity().unwrap(), 40);
        assert_eq!(dx_over_x.residue_at(3).unwrap(), 0);
        let sq = FpPoly::from_roots(&FpSet::new(f, [5]), 2).unwrap();
        let double = RationalForm::new(FpPoly::one(f), sq).unwrap();
        assert_eq!(double.residue_at(5).unwrap(), 0);
        let poly = RationalForm::polynomial(FpPoly::from_i64s(f, &[1, 2, 3]));
        assert_eq!(poly.residue_at_infinity().unwrap(), 0);
        assert_eq!(sum_residues_check(&poly).unwrap(), ResidueCheck::Zero);
    }

    #[test]
    fn partial_fractions_sum_to_zero() {
        let f = fld(41);
        let den = FpPoly::from_roots(&FpSet::new(f, [0, 1]), 1).unwrap();
        let form = RationalForm::new(FpPoly::one(f), den).unwrap();
        let t = form.residue_table().unwrap().unwrap();
        assert_eq!(t.finite, vec![(0, 40), (1, 1)]);
        assert_eq!(t.total, 0);
    }

    #[test]
    fn irreducible_denominator_is_inconclusive() {
        let f = fld(43); // -1 is a non-residue mod 43
        let den = FpPoly::from_i64s(f, &[1, 0, 1]).mul_linear(2);
        let form = RationalForm::new(FpPoly::one(f), den).unwrap();
        assert_eq!(sum_residues_check(&form).unwrap(), ResidueCheck::Inconclusive);
    }

    #[test]
    fn omega20_residue_at_b_matches_closed_form() {
        let f = fld(97);
        let b = FpSet::new(f, [3, 10, 20, 50]);
        let a = FpSet::new(f, [1]);
        for k in 0..7 {
            let rep = lemma_form_identity(NamedForm::W20, &a, &b, k, FormMode::General).unwrap();
            assert!(rep.ok, "k = {k}: {rep:?}");
        }
    }

    #[test]
    fn general_mode_holds_for_all_forms() {
        let f = fld(97);
        let a = FpSet::new(f, [2, 7, 30]);
        let b = FpSet::new(f, [1, 4, 11, 60]);
        for which in NamedForm::ALL {
            for k in 0..6 {
                let rep = lemma_form_identity(which, &a, &b, k, FormMode::General).unwrap();
                assert!(rep.ok, "{which} k = {k}: {rep:?}");
            }
        }
    }

    #[test]
    fn mixed_forms_need_disjoint_poles() {
        let f = fld(97);
        let a = FpSet::new(f, [2, 7]);
        let b = FpSet::new(f, [95, 4]);
        assert!(matches!(
            lemma_form_identity(NamedForm::W11, &a, &b, 1, FormMode::General),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn specialized_omega20_on_vanishing_power_sums() {
        // B = mu_6 in F_97: p_1 = ... = p_5 = 0, so k = 6 qualifies
        let f = fld(97);
        let b = roots_of_unity(f, 6).unwrap();
        let a = FpSet::new(f, [1]);
        let rep = lemma_form_identity(NamedForm::W20, &a, &b, 6, FormMode::Specialized { d: 0 }).unwrap();
        assert!(rep.ok);
        let rep = lemma_form_identity(NamedForm::W30, &a, &b, 6, FormMode::Specialized { d: 0 }).unwrap();
        assert!(rep.ok);
        // a set with p_1 != 0 cannot be used with k = 2
        let bad = FpSet::new(f, [1, 2, 5]);
        assert!(matches!(
            lemma_form_identity(NamedForm::W20, &a, &bad, 2, FormMode::Specialized { d: 0 }),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn specialized_forms_on_a_sumset_pair() {
        // A + B = mu_4 in F_13 with A = {0, 4}, B = {1, 8}, recentered so
        // that p_1 vanishes: A' = {11, 2}, B' = {3, 10}.
        let f = fld(13);
        let a = FpSet::new(f, [2, 11]);
        let b = FpSet::new(f, [3, 10]);
        assert_eq!(a.sumset(&b).unwrap(), roots_of_unity(f, 4).unwrap());
        let (n, _) = crate::symm::minimal_indices(&a);
        assert_eq!(n, Some(2));
        for which in NamedForm::ALL {
            let rep = lemma_form_identity(which, &a, &b, 2, FormMode::Specialized { d: 4 }).unwrap();
            assert!(rep.ok, "{which}: {rep:?}");
        }
    }
}
