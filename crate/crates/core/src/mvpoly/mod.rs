//! The reduced ring F_q[x_1, …, x_n] / (x_1^q − x_1, …, x_n^q − x_n).
//!
//! A [`MultiPoly`] stores all q^n coefficients densely. The coefficient of
//! `x_1^e_1 ⋯ x_n^e_n` (every `e_i < q`) lives at the mixed-radix rank
//! `e_1 + e_2 q + … + e_n q^(n-1)`, so `x_1` is the least significant digit.
//! Point tables ([`FuncTable`]) use the same layout with element ranks as
//! digits. Because reduced polynomials and functions F_q^n → F_q are in
//! bijection, two values compare equal exactly when they agree as functions.

mod json;
mod subst;
mod transform;

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{Elem, FieldSpec};
use crate::limits;

pub use json::{PolyJson, TermJson};
pub use transform::{eval_matrix, interpolation_matrix};

/// Maps a raw exponent to the reduced exponent with the same function:
/// `e` if `e < q`, else `((e - 1) mod (q - 1)) + 1`.
#[inline]
pub fn reduce_exp(e: u64, q: u32) -> u32 {
    let q = q as u64;
    if e < q {
        e as u32
    } else {
        (((e - 1) % (q - 1)) + 1) as u32
    }
}

/// Mixed-radix digits of `rank` in base `q`, least significant first.
pub fn unrank(mut rank: usize, q: u32, n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push((rank % q as usize) as u32);
        rank /= q as usize;
    }
    out
}

pub fn rank_of(digits: &[u32], q: u32) -> usize {
    digits
        .iter()
        .rev()
        .fold(0usize, |acc, &d| acc * q as usize + d as usize)
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: FieldSpec,
    n: usize,
    coeffs: Vec<Elem>,
}

/// Values of a map F_q^n → F_q, indexed by point rank.
#[derive(Clone, PartialEq, Eq)]
pub struct FuncTable {
    field: FieldSpec,
    n: usize,
    values: Vec<Elem>,
}

/// Total and per-variable degree. The zero polynomial has total degree −1
/// and per-variable degrees −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub total: i64,
    pub per_variable: Vec<i64>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParam("a polynomial needs at least one variable".into()));
    }
    Ok(())
}

impl MultiPoly {
    pub fn zero(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
        check_n(n)?;
        let len = limits::check_points(field.q(), n, limits::point_cap())?;
        Ok(MultiPoly {
            field: field.clone(),
            n,
            coeffs: vec![Elem::ZERO; len],
        })
    }

    pub fn constant(field: &FieldSpec, n: usize, c: Elem) -> Result<MultiPoly> {
        let mut f = MultiPoly::zero(field, n)?;
        f.coeffs[0] = field.check(c)?;
        Ok(f)
    }

    pub fn one(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
        MultiPoly::constant(field, n, Elem::ONE)
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(field: &FieldSpec, n: usize, i: usize) -> Result<MultiPoly> {
        let mut exps = vec![0u64; n];
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        exps[i] = 1;
        MultiPoly::monomial(field, n, &exps, Elem::ONE)
    }

    pub fn monomial(field: &FieldSpec, n: usize, exps: &[u64], c: Elem) -> Result<MultiPoly> {
        MultiPoly::build(field, n, &[(exps.to_vec(), c)])
    }

    /// Builds from arbitrary (possibly unreduced) terms; like terms are summed.
    pub fn build(field: &FieldSpec, n: usize, terms: &[(Vec<u64>, Elem)]) -> Result<MultiPoly> {
        let mut f = MultiPoly::zero(field, n)?;
        let q = field.q();
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::VariableCountMismatch {
                    expected: n,
                    got: exps.len(),
                });
            }
            let c = field.check(*c)?;
            let digits: Vec<u32> = exps.iter().map(|&e| reduce_exp(e, q)).collect();
            let idx = rank_of(&digits, q);
            f.coeffs[idx] = field.add(f.coeffs[idx], c);
        }
        Ok(f)
    }

    /// Wraps a dense coefficient array laid out by exponent rank.
    pub fn from_coeffs(field: &FieldSpec, n: usize, coeffs: Vec<Elem>) -> Result<MultiPoly> {
        check_n(n)?;
        let len = limits::check_points(field.q(), n, limits::point_cap())?;
        if coeffs.len() != len {
            return Err(Error::InvalidParam(format!(
                "expected {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(MultiPoly {
            field: field.clone(),
            n,
            coeffs,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of the monomial with the given reduced exponents.
    pub fn coeff(&self, exps: &[u32]) -> Elem {
        debug_assert_eq!(exps.len(), self.n);
        self.coeffs[rank_of(exps, self.field.q())]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms in increasing exponent rank.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, Elem)> + '_ {
        let q = self.field.q();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, &c)| (unrank(i, q, self.n), c))
    }

    fn compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &MultiPoly, op: impl Fn(Elem, Elem) -> Elem) -> Result<MultiPoly> {
        self.compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| op(a, b)).collect();
        Ok(MultiPoly {
            field: self.field.clone(),
            n: self.n,
            coeffs,
        })
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn neg(&self) -> MultiPoly {
        self.map_coeffs(|c| self.field.neg(c))
    }

    pub fn scalar_mul(&self, c: Elem) -> Result<MultiPoly> {
        let c = self.field.check(c)?;
        Ok(self.map_coeffs(|x| self.field.mul(x, c)))
    }

    fn map_coeffs(&self, op: impl Fn(Elem) -> Elem) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| op(c)).collect(),
        }
    }

    /// Product in the reduced ring. Sparse operands are multiplied term by
    /// term with exponent reduction; dense ones go through the value domain,
    /// which gives the same reduced polynomial.
    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.compatible(other)?;
        let work = self.num_terms() as u128 * other.num_terms() as u128;
        let transform_cost = 3 * (self.n as u128 + 1) * (self.coeffs.len() as u128) * self.field.q() as u128;
        if work <= transform_cost {
            self.mul_schoolbook(other)
        } else {
            self.mul_pointwise(other, Exec::default())
        }
    }

    /// Term-by-term product, reducing each exponent sum with
    /// `x^e = x^(e - (q - 1))` for `e ≥ q`.
    pub fn mul_schoolbook(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.compatible(other)?;
        let q = self.field.q();
        let mut out = vec![Elem::ZERO; self.coeffs.len()];
        let lhs: Vec<(Vec<u32>, Elem)> = self.terms().collect();
        let rhs: Vec<(Vec<u32>, Elem)> = other.terms().collect();
        let mut exps = vec![0u32; self.n];
        for (ea, a) in &lhs {
            for (eb, b) in &rhs {
                for (slot, (&x, &y)) in exps.iter_mut().zip(ea.iter().zip(eb)) {
                    let e = x + y;
                    *slot = if e >= q { e - (q - 1) } else { e };
                }
                let idx = rank_of(&exps, q);
                out[idx] = self.field.add(out[idx], self.field.mul(*a, *b));
            }
        }
        Ok(MultiPoly {
            field: self.field.clone(),
            n: self.n,
            coeffs: out,
        })
    }

    /// Product computed as interpolate(table(f) · table(g)).
    pub fn mul_pointwise(&self, other: &MultiPoly, exec: Exec) -> Result<MultiPoly> {
        self.compatible(other)?;
        let a = self.to_table_with(exec);
        let b = other.to_table_with(exec);
        let vals = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(&x, &y)| self.field.mul(x, y))
            .collect();
        let t = FuncTable {
            field: self.field.clone(),
            n: self.n,
            values: vals,
        };
        Ok(t.interpolate_with(exec))
    }

    /// `f^k` by square-and-multiply, reducing at every step.
    pub fn pow(&self, mut k: u64) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(&self.field, self.n)?;
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn degrees(&self) -> Degrees {
        let mut total = -1i64;
        let mut per = vec![-1i64; self.n];
        for (exps, _) in self.terms() {
            let s: i64 = exps.iter().map(|&e| e as i64).sum();
            total = total.max(s);
            for (d, &e) in per.iter_mut().zip(&exps) {
                *d = (*d).max(e as i64);
            }
        }
        Degrees {
            total,
            per_variable: per,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees().total
    }

    /// All terms whose exponent sum equals the total degree.
    pub fn leading_terms(&self) -> Vec<(Vec<u32>, Elem)> {
        let d = self.total_degree();
        self.terms()
            .filter(|(e, _)| e.iter().map(|&x| x as i64).sum::<i64>() == d)
            .collect()
    }

    /// Reinterprets `self` inside `n_total` variables, sending variable `j`
    /// to variable `map[j]`. The targets must be distinct.
    pub fn embed(&self, n_total: usize, map: &[usize]) -> Result<MultiPoly> {
        if map.len() != self.n {
            return Err(Error::VariableCountMismatch {
                expected: self.n,
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= n_total) {
            return Err(Error::IndexOutOfRange { index: bad, n: n_total });
        }
        let mut seen = vec![false; n_total];
        for &t in map {
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidParam(format!("variable {t} targeted twice")));
            }
        }
        let mut out = MultiPoly::zero(&self.field, n_total)?;
        let q = self.field.q();
        let mut target = vec![0u32; n_total];
        for (exps, c) in self.terms() {
            target.iter_mut().for_each(|x| *x = 0);
            for (j, &e) in exps.iter().enumerate() {
                target[map[j]] = e;
            }
            out.coeffs[rank_of(&target, q)] = c;
        }
        Ok(out)
    }

    /// Human-readable form, terms in descending exponent rank, e.g.
    /// `x1^2*x2 + (z+1)*x1 + 2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(Vec<u32>, Elem)> = self.terms().collect();
        terms.reverse();
        let parts: Vec<String> = terms
            .iter()
            .map(|(exps, c)| {
                let mono: Vec<String> = exps
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect();
                let cs = self.field.fmt_elem(*c);
                let cs = if cs.contains('+') { format!("({cs})") } else { cs };
                match (mono.is_empty(), c.rank() == 1) {
                    (true, _) => cs,
                    (false, true) => mono.join("*"),
                    (false, false) => format!("{cs}*{}", mono.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{:?}, n={}]({})", self.field, self.n, self.to_text())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FuncTable {
    pub fn from_values(field: &FieldSpec, n: usize, values: Vec<Elem>) -> Result<FuncTable> {
        check_n(n)?;
        let len = limits::check_points(field.q(), n, limits::point_cap())?;
        if values.len() != len {
            return Err(Error::InvalidParam(format!(
                "table needs {len} values, got {}",
                values.len()
            )));
        }
        for &v in &values {
            field.check(v)?;
        }
        Ok(FuncTable {
            field: field.clone(),
            n,
            values,
        })
    }

    /// Tabulates `f` at every point in rank order.
    pub fn from_fn(field: &FieldSpec, n: usize, f: impl Fn(&[Elem]) -> Elem) -> Result<FuncTable> {
        check_n(n)?;
        let len = limits::check_points(field.q(), n, limits::point_cap())?;
        let q = field.q();
        let values = (0..len)
            .map(|i| {
                let pt: Vec<Elem> = unrank(i, q, n).into_iter().map(Elem::from_rank_unchecked).collect();
                f(&pt)
            })
            .collect();
        FuncTable::from_values(field, n, values)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn get(&self, point: &[Elem]) -> Elem {
        let digits: Vec<u32> = point.iter().map(|e| e.rank()).collect();
        self.values[rank_of(&digits, self.field.q())]
    }

    /// The point with the given rank.
    pub fn point(&self, rank: usize) -> Vec<Elem> {
        point_of(rank, self.field.q(), self.n)
    }
}

pub fn point_of(rank: usize, q: u32, n: usize) -> Vec<Elem> {
    unrank(rank, q, n).into_iter().map(Elem::from_rank_unchecked).collect()
}

impl fmt::Debug for FuncTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<u32> = self.values.iter().map(|e| e.rank()).collect();
        write!(f, "FuncTable[{:?}, n={}]{:?}", self.field, self.n, ranks)
    }
}
