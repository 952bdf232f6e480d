//! Univariate building blocks: the 0↔1 transposition t(x), the h / h̄ pair,
//! general transpositions, Dickson polynomials, and the bijection test.

use crate::combinat::binom_mod;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::mvpoly::{FuncTable, MultiPoly};

/// `c · x^k` in one variable.
pub fn monomial(field: &FieldSpec, k: u64, c: Elem) -> Result<MultiPoly> {
    MultiPoly::monomial(field, 1, &[k], c)
}

/// `x^k` in one variable.
pub fn power(field: &FieldSpec, k: u64) -> Result<MultiPoly> {
    monomial(field, k, Elem::ONE)
}

/// `t(x) = x + Σ_{k=0}^{q−2} x^k`, which swaps 0 and 1 and fixes the rest.
pub fn t_poly(field: &FieldSpec) -> Result<MultiPoly> {
    let q = field.q() as u64;
    let mut terms = vec![(vec![1u64], Elem::ONE)];
    terms.extend((0..=q - 2).map(|k| (vec![k], Elem::ONE)));
    MultiPoly::build(field, 1, &terms)
}

/// `h(x) = Σ_{k=0}^{q−3} (k+1) x^k` and `h̄(x) = 1 + x − Σ_{k=0}^{q−2} k x^k`,
/// integer coefficients reduced mod p.
pub fn h_polys(field: &FieldSpec) -> Result<(MultiPoly, MultiPoly)> {
    let q = field.q() as u64;
    if q < 3 {
        return Err(Error::UnsupportedField {
            family: "h",
            q,
            reason: "needs q >= 3".into(),
        });
    }
    let h_terms: Vec<(Vec<u64>, Elem)> = (0..=q - 3).map(|k| (vec![k], field.from_int(k as i64 + 1))).collect();
    let mut hbar_terms = vec![(vec![0u64], Elem::ONE), (vec![1u64], Elem::ONE)];
    hbar_terms.extend((0..=q - 2).map(|k| (vec![k], field.from_int(-(k as i64)))));
    Ok((
        MultiPoly::build(field, 1, &h_terms)?,
        MultiPoly::build(field, 1, &hbar_terms)?,
    ))
}

/// Interpolated polynomial exchanging `a` and `b` and fixing everything else.
pub fn transposition(field: &FieldSpec, a: Elem, b: Elem) -> Result<MultiPoly> {
    let (a, b) = (field.check(a)?, field.check(b)?);
    if a == b {
        return Err(Error::EqualPoints);
    }
    let values = field
        .elements()
        .map(|x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
        .collect();
    Ok(FuncTable::from_values(field, 1, values)?.interpolate())
}

/// Integer Dickson coefficient `k/(k−j) · C(k−j, j)` mod p, computed as
/// `C(k−j, j) + C(k−j−1, j−1)` so nothing overflows.
pub fn dickson_coeff_mod(k: u64, j: u64, p: u64) -> u64 {
    if j == 0 {
        return 1 % p;
    }
    if 2 * j > k {
        return 0;
    }
    (binom_mod(k - j, j, p) + binom_mod(k - j - 1, j - 1, p)) % p
}

/// Dickson polynomial of the first kind
/// `g_k(x, a) = Σ_{j=0}^{⌊k/2⌋} k/(k−j) C(k−j, j) (−a)^j x^(k−2j)`.
pub fn dickson(field: &FieldSpec, k: u64, a: Elem) -> Result<MultiPoly> {
    if k == 0 {
        return Err(Error::InvalidParam("Dickson index must be >= 1".into()));
    }
    let a = field.check(a)?;
    let neg_a = field.neg(a);
    let p = field.p() as u64;
    let terms: Vec<(Vec<u64>, Elem)> = (0..=k / 2)
        .map(|j| {
            let c = field.from_int(dickson_coeff_mod(k, j, p) as i64);
            (vec![k - 2 * j], field.mul(c, field.pow(neg_a, j)))
        })
        .collect();
    MultiPoly::build(field, 1, &terms)
}

/// True iff `f` (univariate) permutes F_q.
pub fn is_univariate_pp(f: &MultiPoly) -> Result<bool> {
    if f.n() != 1 {
        return Err(Error::VariableCountMismatch {
            expected: 1,
            got: f.n(),
        });
    }
    Ok(is_bijective_table(f.to_table().values(), f.field().q()))
}

pub(crate) fn is_bijective_table(values: &[Elem], q: u32) -> bool {
    let mut seen = vec![false; q as usize];
    values
        .iter()
        .all(|v| !std::mem::replace(&mut seen[v.rank() as usize], true))
}
