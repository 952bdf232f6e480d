//! Permutation polynomials of degree n(q−1)−1.

use super::{applies, prod_powers, unsupported};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::mvpoly::MultiPoly;
use crate::univ;

/// `x_1^(q−1) ⋯ x_{n−1}^(q−1) (t(x_n) − x_n) + x_n`.
pub fn pp_hn(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    let q = field.q() as u64;
    let xn = MultiPoly::var(field, n, n - 1)?;
    let t = univ::t_poly(field)?.embed(n, &[n - 1])?;
    let gate = prod_powers(field, n, 0..n - 1, q - 1)?;
    gate.mul(&t.sub(&xn)?)?.add(&xn)
}

/// `x_1^(q−1) ⋯ x_{n−1}^(q−1) x_n^(q−2) + x_n^(q−2)` for odd p.
pub fn pp_monomial(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.p() == 2 {
        return Err(unsupported("pp_monomial", field, "needs odd characteristic"));
    }
    let q = field.q() as u64;
    let inv = MultiPoly::monomial(field, n, &unit_exps(n, n - 1, q - 2), Elem::ONE)?;
    let gate = prod_powers(field, n, 0..n - 1, q - 1)?;
    gate.mul(&inv)?.add(&inv)
}

fn unit_exps(n: usize, i: usize, e: u64) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = e;
    v
}

/// True when q = 4^s for some s ≥ 2.
pub fn is_even_extension_of_f2(field: &FieldSpec) -> bool {
    field.p() == 2 && field.r().is_multiple_of(2) && field.r() >= 4
}

/// The part `m(x)` of `g_{q−2}(x, 1) = x^(q−2) + m(x) + x^2`.
pub fn dickson_middle(field: &FieldSpec) -> Result<MultiPoly> {
    let q = field.q() as u64;
    let g = univ::dickson(field, q - 2, Elem::ONE)?;
    g.sub(&univ::power(field, q - 2)?)?.sub(&univ::power(field, 2)?)
}

/// `x_1^(q−1) ⋯ x_{n−1}^(q−1) (x_n^(q−2) + m(x_n)) + x_n^2` over q = 4^s > 4.
pub fn pp_dickson(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if !is_even_extension_of_f2(field) {
        return Err(unsupported("pp_dickson", field, "needs q = 4^s > 4"));
    }
    let q = field.q() as u64;
    let tail = univ::power(field, q - 2)?
        .add(&dickson_middle(field)?)?
        .embed(n, &[n - 1])?;
    let square = univ::power(field, 2)?.embed(n, &[n - 1])?;
    let gate = prod_powers(field, n, 0..n - 1, q - 1)?;
    gate.mul(&tail)?.add(&square)
}

/// Over F_4: the sum of every monomial with per-variable exponents ≤ 3 and
/// total degree ≤ 3n − 1, plus x_1.
pub fn pp_alpha4(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    if field.q() != 4 {
        return Err(unsupported("pp_alpha4", field, "defined over F_4 only"));
    }
    let mut terms: Vec<(Vec<u64>, Elem)> = Vec::new();
    for idx in 0..4usize.pow(n as u32) {
        let exps: Vec<u64> = crate::mvpoly::unrank(idx, 4, n).into_iter().map(u64::from).collect();
        if (exps.iter().sum::<u64>() as usize) < 3 * n {
            terms.push((exps, Elem::ONE));
        }
    }
    let mut x1 = vec![0u64; n];
    x1[0] = 1;
    terms.push((x1, Elem::ONE));
    MultiPoly::build(field, n, &terms)
}

/// Which nonvanishing factor the product construction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductVariant {
    /// `(g^2 − a) f(y)`, `a` a non-square, q odd.
    Qnr,
    /// `(g^3 − a) f(y)`, `a` a non-cube, q = 2^r with r even.
    NonCube,
    /// `(x_1^(q−1) ⋯ x_n^(q−1) + α) f(y)`, α ∉ {0, 1}, q = 2^r with r odd > 1.
    Mersenne,
}

impl ProductVariant {
    fn power(self) -> u64 {
        match self {
            ProductVariant::Qnr => 2,
            ProductVariant::NonCube => 3,
            ProductVariant::Mersenne => 1,
        }
    }
}

/// Optional overrides for [`pp_product`]; `None` picks the defaults.
#[derive(Debug, Clone, Default)]
pub struct ProductParams {
    /// The polynomial g in x_1..x_n (not used by the Mersenne variant).
    pub g: Option<MultiPoly>,
    /// Univariate PP of degree q−2 applied to y; defaults to t(y).
    pub fy: Option<MultiPoly>,
    /// The non-residue `a` or the constant α.
    pub constant: Option<Elem>,
}

/// Smallest-rank nonzero element that is not a d-th power.
pub fn smallest_non_residue(field: &FieldSpec, d: u64) -> Result<Elem> {
    let mut is_power = vec![false; field.q() as usize];
    for w in field.elements() {
        is_power[field.pow(w, d).rank() as usize] = true;
    }
    field
        .elements()
        .find(|a| !is_power[a.rank() as usize])
        .ok_or(Error::NoNonResidue {
            order: d,
            q: field.q() as u64,
        })
}

fn check_variant(field: &FieldSpec, variant: ProductVariant) -> Result<()> {
    let (p, r) = (field.p(), field.r());
    match variant {
        ProductVariant::Qnr if p == 2 => Err(unsupported("pp_qnr", field, "needs odd q")),
        ProductVariant::NonCube if p != 2 || r % 2 != 0 => {
            Err(unsupported("pp_noncube", field, "needs q = 2^r with r even"))
        }
        ProductVariant::Mersenne if p != 2 || r % 2 == 0 || r < 3 => {
            Err(unsupported("pp_mersenne", field, "needs q = 2^r with r odd > 1"))
        }
        _ => Ok(()),
    }
}

/// Product construction in n+1 variables `(x_1, …, x_n, y)`:
/// a nonvanishing factor in the x's times a degree-(q−2) PP in y.
pub fn pp_product(field: &FieldSpec, n: usize, variant: ProductVariant, params: &ProductParams) -> Result<MultiPoly> {
    check_variant(field, variant)?;
    let q = field.q() as u64;
    let total = n + 1;

    let fy = match &params.fy {
        Some(f) => {
            if f.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !univ::is_univariate_pp(f)? {
                return Err(Error::InvalidParam("f(y) must be a permutation polynomial".into()));
            }
            if f.total_degree() != q as i64 - 2 {
                return Err(Error::BadDegree {
                    expected: q as i64 - 2,
                    got: f.total_degree(),
                });
            }
            f.clone()
        }
        None => univ::t_poly(field)?,
    };
    let fy = fy.embed(total, &[n])?;

    let factor = match variant {
        ProductVariant::Mersenne => {
            let alpha = match params.constant {
                Some(a) => field.check(a)?,
                None => field.elem(2)?,
            };
            if alpha.rank() <= 1 {
                return Err(Error::InvalidParam("alpha must differ from 0 and 1".into()));
            }
            prod_powers(field, total, 0..n, q - 1)?.add(&MultiPoly::constant(field, total, alpha)?)?
        }
        ProductVariant::Qnr | ProductVariant::NonCube => {
            let d = variant.power();
            let want = n as i64 * (q as i64 - 1) / d as i64;
            let g = match &params.g {
                Some(g) => {
                    if g.field() != field {
                        return Err(Error::FieldMismatch);
                    }
                    if g.n() != n {
                        return Err(Error::VariableCountMismatch {
                            expected: n,
                            got: g.n(),
                        });
                    }
                    if g.total_degree() != want {
                        return Err(Error::BadDegree {
                            expected: want,
                            got: g.total_degree(),
                        });
                    }
                    g.embed(total, &(0..n).collect::<Vec<_>>())?
                }
                None => prod_powers(field, total, 0..n, (q - 1) / d)?,
            };
            let a = match params.constant {
                Some(a) => {
                    let a = field.check(a)?;
                    if field.elements().any(|w| field.pow(w, d) == a) {
                        return Err(Error::InvalidParam(format!(
                            "{} is a {}-th power",
                            field.fmt_elem(a),
                            d
                        )));
                    }
                    a
                }
                None => smallest_non_residue(field, d)?,
            };
            g.pow(d)?.sub(&MultiPoly::constant(field, total, a)?)?
        }
    };
    factor.mul(&fy)
}

/// Degree every PP family above reaches: n(q−1)−1.
pub fn max_pp_degree(q: u32, n: usize) -> i64 {
    n as i64 * (q as i64 - 1) - 1
}

pub(super) fn product_applies(field: &FieldSpec, variant: ProductVariant) -> bool {
    applies(check_variant(field, variant))
}
