//! Local permutation polynomials of degree n(q−2).

use super::{sum_vars, unsupported};
use crate::combinat::factorial_mod;
use crate::error::{Error, Result};
use crate::gf::{gcd, Elem, FieldSpec};
use crate::mvpoly::{unrank, FuncTable, MultiPoly};
use crate::univ;
use crate::verify::Verifier;

/// For q = 2^r > 2: the sum of all monomials with every exponent in
/// `1..=q−2`, plus `x_1 + … + x_n`.
pub fn lpp_beta(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.p() != 2 || field.q() <= 2 {
        return Err(unsupported("lpp_beta", field, "needs q = 2^r > 2"));
    }
    let q = field.q();
    let span = q as usize - 2;
    let mut terms: Vec<(Vec<u64>, Elem)> = (0..span.pow(n as u32))
        .map(|idx| {
            let exps = unrank(idx, span as u32, n).into_iter().map(|d| d as u64 + 1).collect();
            (exps, Elem::ONE)
        })
        .collect();
    for i in 0..n {
        let mut e = vec![0u64; n];
        e[i] = 1;
        terms.push((e, Elem::ONE));
    }
    MultiPoly::build(field, n, &terms)
}

fn check_power_b(field: &FieldSpec, b: u64) -> Result<()> {
    let (p, q) = (field.p() as u64, field.q() as u64);
    if !(b > 1 && b + 1 < p) {
        return Err(Error::NoValidB(format!("need 1 < b < p - 1, got b = {b}, p = {p}")));
    }
    if gcd(b, q - 1) != 1 {
        return Err(Error::NoValidB(format!("gcd(b, q - 1) = gcd({b}, {}) != 1", q - 1)));
    }
    Ok(())
}

/// Smallest admissible b for the power construction, if any.
pub fn smallest_power_b(field: &FieldSpec) -> Option<u64> {
    (2..field.p() as u64).find(|&b| check_power_b(field, b).is_ok())
}

/// `(y_1 + … + y_b)^b`, then `f_{i+1} = (f_i(block 0) + … + f_i(block b−1))^b`
/// on b disjoint blocks of b^i variables, computed in the reduced ring.
pub fn power_form(field: &FieldSpec, b: u64, k: u32) -> Result<MultiPoly> {
    check_power_b(field, b)?;
    if k == 0 {
        return Err(Error::InvalidParam("k must be >= 1".into()));
    }
    let b_us = b as usize;
    let mut f = sum_vars(field, b_us)?.pow(b)?;
    for level in 1..k {
        let width = b_us.pow(level);
        let total = width * b_us;
        let mut acc = MultiPoly::zero(field, total)?;
        for blk in 0..b_us {
            let map: Vec<usize> = (blk * width..(blk + 1) * width).collect();
            acc = acc.add(&f.embed(total, &map)?)?;
        }
        f = acc.pow(b)?;
    }
    Ok(f)
}

/// `F(x_1, …, x_{b^k}) = f_k(x_1^(q−2), …, x_{b^k}^(q−2))` reduced.
pub fn lpp_power(field: &FieldSpec, b: u64, k: u32) -> Result<MultiPoly> {
    let form = power_form(field, b, k)?;
    let inv = univ::power(field, field.q() as u64 - 2)?;
    form.substitute_all(&inv)
}

/// Coefficient of `Π x_i^(q−2)` in [`lpp_power`]: `b!^((b^k − 1)/(b − 1))` mod p.
pub fn lpp_power_leading_coeff(field: &FieldSpec, b: u64, k: u32) -> Elem {
    let p = field.p() as u64;
    let exp = (b.pow(k) - 1) / (b - 1);
    field.pow(field.from_int(factorial_mod(b, p) as i64), exp)
}

/// Fixes x_1 to the first element (in rank order) that keeps the degree at
/// (n−1)(q−2). The input must be an LPP of degree n(q−2).
pub fn lpp_restrict(f: &MultiPoly) -> Result<MultiPoly> {
    lpp_restrict_at(f).map(|(g, _)| g)
}

/// Like [`lpp_restrict`], also returning the value substituted for x_1.
pub fn lpp_restrict_at(f: &MultiPoly) -> Result<(MultiPoly, Elem)> {
    let n = f.n();
    let q = f.field().q() as i64;
    if n < 2 {
        return Err(Error::InvalidParam("restriction needs at least two variables".into()));
    }
    let want = n as i64 * (q - 2);
    let got = f.total_degree();
    if got != want {
        return Err(Error::NotMaxLpp(format!("degree {got}, need {want}")));
    }
    let report = Verifier::default().is_lpp(f)?;
    if !report.passed() {
        return Err(Error::NotMaxLpp("local permutation check failed".into()));
    }
    let target = (n as i64 - 1) * (q - 2);
    for a in f.field().elements() {
        let g = f.substitute_const(0, a)?;
        if g.total_degree() == target {
            return Ok((g, a));
        }
    }
    Err(Error::NotMaxLpp("no restriction keeps the maximum degree".into()))
}

/// Restricts repeatedly until `n` variables remain.
pub fn restrict_to(mut f: MultiPoly, n: usize) -> Result<MultiPoly> {
    while f.n() > n {
        f = lpp_restrict(&f)?;
    }
    Ok(f)
}

/// The element β of rank p: the smallest-rank element outside F_p.
pub fn indicator_beta(field: &FieldSpec) -> Result<Elem> {
    if field.r() < 2 {
        return Err(unsupported("lpp_indicator", field, "needs r >= 2"));
    }
    field.elem(field.p() as u64)
}

/// The indicator polynomial of Z = {0, 1, …, p−2, β}, degree q−2.
pub fn indicator_poly(field: &FieldSpec) -> Result<MultiPoly> {
    let beta = indicator_beta(field)?;
    let p = field.p();
    let vals = field
        .elements()
        .map(|x| {
            if x.rank() + 1 < p || x == beta {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        })
        .collect();
    Ok(FuncTable::from_values(field, 1, vals)?.interpolate())
}

/// For odd p and q = p^r > 3: `Π_i P(x_i) + Σ_i t_β(x_i)` with P the
/// indicator of Z and t_β the transposition of β and p−1. Prime fields are
/// served by the power construction restricted to n variables.
pub fn lpp_indicator(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    let (p, q) = (field.p(), field.q());
    if p == 2 || q <= 3 {
        return Err(unsupported("lpp_indicator", field, "needs odd p and q > 3"));
    }
    if field.r() == 1 {
        return max_lpp_via_power(field, n);
    }
    let ind = indicator_poly(field)?;
    let tb = univ::transposition(field, indicator_beta(field)?, field.from_int(p as i64 - 1))?;
    let mut prod = MultiPoly::one(field, n)?;
    let mut sum = MultiPoly::zero(field, n)?;
    for i in 0..n {
        prod = prod.mul(&ind.embed(n, &[i])?)?;
        sum = sum.add(&tb.embed(n, &[i])?)?;
    }
    prod.add(&sum)
}

fn max_lpp_via_power(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    let b = field.p() as u64 - 2;
    let mut k = 1u32;
    while (b as usize).pow(k) < n {
        k += 1;
    }
    restrict_to(lpp_power(field, b, k)?, n)
}

/// `f_1 = x_1`, `f_i = t(f_{i−1}^(q−2) + x_i^(q−2))`.
pub fn lpp_chain(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.q() <= 3 {
        return Err(unsupported("lpp_chain", field, "needs q > 3"));
    }
    let q = field.q() as u64;
    let t = univ::t_poly(field)?;
    let inv = univ::power(field, q - 2)?;
    let mut f = MultiPoly::var(field, 1, 0)?;
    for i in 2..=n {
        let prev = f.embed(i, &(0..i - 1).collect::<Vec<_>>())?;
        let inner = MultiPoly::compose_univariate(&inv, &prev)?.add(&inv.embed(i, &[i - 1])?)?;
        f = MultiPoly::compose_univariate(&t, &inner)?;
    }
    Ok(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreeVarVariant {
    /// `t(f_2 + x_3^(q−2))`, p ≥ 5.
    A,
    /// `t(f̄_2 + x_3^(q−2))` with `f̄_2 = t(x_1^(q−4) + x_2^(q−2))`, q = 3^r > 3.
    B,
    /// `(h_2 + x_3^s)^(q−2)` with `h_2 = t(x_1^(q−2) + x_2^s)`, s = (q−2)/2, q = 2^r > 2.
    C,
}

pub(super) fn check_three(field: &FieldSpec, variant: ThreeVarVariant) -> Result<()> {
    let (p, q) = (field.p(), field.q());
    match variant {
        ThreeVarVariant::A if p < 5 => Err(unsupported("lpp_3var_a", field, "needs p >= 5")),
        ThreeVarVariant::B if p != 3 || q <= 3 => Err(unsupported("lpp_3var_b", field, "needs q = 3^r > 3")),
        ThreeVarVariant::C if p != 2 || q <= 2 => Err(unsupported("lpp_3var_c", field, "needs q = 2^r > 2")),
        _ => Ok(()),
    }
}

pub fn lpp_three(field: &FieldSpec, variant: ThreeVarVariant) -> Result<MultiPoly> {
    check_three(field, variant)?;
    let q = field.q() as u64;
    let t = univ::t_poly(field)?;
    let pw = |e: u64, i: usize| -> Result<MultiPoly> { univ::power(field, e)?.embed(3, &[i]) };
    match variant {
        ThreeVarVariant::A => {
            let f2 = lpp_chain(field, 2)?.embed(3, &[0, 1])?;
            MultiPoly::compose_univariate(&t, &f2.add(&pw(q - 2, 2)?)?)
        }
        ThreeVarVariant::B => {
            let inner = pw(q - 4, 0)?.add(&pw(q - 2, 1)?)?;
            let f2 = MultiPoly::compose_univariate(&t, &inner)?;
            MultiPoly::compose_univariate(&t, &f2.add(&pw(q - 2, 2)?)?)
        }
        ThreeVarVariant::C => {
            let s = (q - 2) / 2;
            let h2 = MultiPoly::compose_univariate(&t, &pw(q - 2, 0)?.add(&pw(s, 1)?)?)?;
            let inv = univ::power(field, q - 2)?;
            MultiPoly::compose_univariate(&inv, &h2.add(&pw(s, 2)?)?)
        }
    }
}

/// `x_1 + … + x_n` for q ∈ {2, 3}, where every LPP is linear.
pub fn lpp_linear(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.q() > 3 {
        return Err(unsupported("lpp_linear", field, "needs q in {2, 3}"));
    }
    sum_vars(field, n)
}

/// A maximum-degree LPP for any field and n:
///
/// | field                 | construction                          |
/// |-----------------------|---------------------------------------|
/// | q ∈ {2, 3}            | `x_1 + … + x_n`                       |
/// | q = 2^r > 2           | [`lpp_beta`]                          |
/// | q = p > 3 prime       | [`lpp_power`] with b = p−2, restricted |
/// | q = p^r, p odd, r ≥ 2 | [`lpp_indicator`]                     |
pub fn max_lpp(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.q() <= 3 {
        lpp_linear(field, n)
    } else if field.p() == 2 {
        lpp_beta(field, n)
    } else {
        lpp_indicator(field, n)
    }
}

/// Degree n(q−2) every LPP family above targets (q > 3).
pub fn max_lpp_degree(q: u32, n: usize) -> i64 {
    n as i64 * (q as i64 - 2)
}
