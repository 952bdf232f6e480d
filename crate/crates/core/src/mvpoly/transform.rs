//! Evaluation and Lagrange interpolation as per-axis linear maps.
//!
//! Both the monomial basis and the Lagrange basis
//! `Π_i (1 − (x_i − c_i)^(q−1))` are tensor products of univariate bases,
//! so each direction of the change of basis is n applications of one q×q
//! matrix, one variable at a time.

use super::{point_of, rank_of, FuncTable, MultiPoly};
use crate::combinat::binom_mod;
use crate::exec::Exec;
use crate::gf::{Elem, FieldSpec};

/// `m[c * q + e] = c^e`, with `0^0 = 1`.
pub fn eval_matrix(field: &FieldSpec) -> Vec<Elem> {
    let q = field.q() as usize;
    let mut m = Vec::with_capacity(q * q);
    for c in field.elements() {
        for e in 0..q {
            m.push(field.pow(c, e as u64));
        }
    }
    m
}

/// `m[e * q + c]` is the coefficient of `x^e` in `1 − (x − c)^(q−1)`.
pub fn interpolation_matrix(field: &FieldSpec) -> Vec<Elem> {
    let q = field.q() as usize;
    let p = field.p() as u64;
    let mut m = vec![Elem::ZERO; q * q];
    for c in field.elements() {
        let neg_c = field.neg(c);
        // (x − c)^(q−1) = Σ_j C(q−1, j) (−c)^j x^(q−1−j)
        for j in 0..q {
            let binom = field.from_int(binom_mod((q - 1) as u64, j as u64, p) as i64);
            let coeff = field.mul(binom, field.pow(neg_c, j as u64));
            let e = q - 1 - j;
            let slot = &mut m[e * q + c.rank() as usize];
            *slot = field.sub(*slot, coeff);
        }
        let slot = &mut m[c.rank() as usize];
        *slot = field.add(*slot, Elem::ONE);
    }
    m
}

/// Applies `mat` (q×q, row = output digit) along every axis of `data`.
fn apply_all_axes(field: &FieldSpec, n: usize, data: &[Elem], mat: &[Elem], exec: Exec) -> Vec<Elem> {
    let q = field.q() as usize;
    let mut cur = data.to_vec();
    let mut next = vec![Elem::ZERO; cur.len()];
    let mut stride = 1usize;
    for _ in 0..n {
        let src = &cur;
        let chunk = (stride * q).max(4096);
        exec.for_each_chunk_mut(&mut next, chunk, |ci, out| {
            let start = ci * chunk;
            for (off, slot) in out.iter_mut().enumerate() {
                let idx = start + off;
                let d = (idx / stride) % q;
                let base = idx - d * stride;
                let row = &mat[d * q..(d + 1) * q];
                let mut acc = Elem::ZERO;
                for (k, &m) in row.iter().enumerate() {
                    if m.is_zero() {
                        continue;
                    }
                    let x = src[base + k * stride];
                    if !x.is_zero() {
                        acc = field.add(acc, field.mul(m, x));
                    }
                }
                *slot = acc;
            }
        });
        std::mem::swap(&mut cur, &mut next);
        stride *= q;
    }
    cur
}

impl MultiPoly {
    /// Value at a single point.
    pub fn eval(&self, point: &[Elem]) -> crate::error::Result<Elem> {
        if point.len() != self.n {
            return Err(crate::error::Error::VariableCountMismatch {
                expected: self.n,
                got: point.len(),
            });
        }
        let f = &self.field;
        let q = f.q() as usize;
        let mut powers = Vec::with_capacity(self.n);
        for &a in point {
            let a = f.check(a)?;
            powers.push((0..q).map(|e| f.pow(a, e as u64)).collect::<Vec<_>>());
        }
        let mut acc = Elem::ZERO;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c;
            let mut rest = idx;
            for pw in &powers {
                term = f.mul(term, pw[rest % q]);
                rest /= q;
            }
            acc = f.add(acc, term);
        }
        Ok(acc)
    }

    pub fn to_table(&self) -> FuncTable {
        self.to_table_with(Exec::default())
    }

    /// Values at all q^n points in rank order.
    pub fn to_table_with(&self, exec: Exec) -> FuncTable {
        let mat = eval_matrix(&self.field);
        FuncTable {
            field: self.field.clone(),
            n: self.n,
            values: apply_all_axes(&self.field, self.n, &self.coeffs, &mat, exec),
        }
    }
}

impl FuncTable {
    pub fn interpolate(&self) -> MultiPoly {
        self.interpolate_with(Exec::default())
    }

    /// The unique reduced polynomial with this value table, via
    /// `f = Σ_c f(c) Π_i (1 − (x_i − c_i)^(q−1))`.
    pub fn interpolate_with(&self, exec: Exec) -> MultiPoly {
        let mat = interpolation_matrix(&self.field);
        MultiPoly {
            field: self.field.clone(),
            n: self.n,
            coeffs: apply_all_axes(&self.field, self.n, &self.values, &mat, exec),
        }
    }

    /// Pointwise `g ∘ self` for a univariate value map `g` (q entries).
    pub(crate) fn map_values(&self, g: &[Elem]) -> FuncTable {
        FuncTable {
            field: self.field.clone(),
            n: self.n,
            values: self.values.iter().map(|v| g[v.rank() as usize]).collect(),
        }
    }

    /// Value at the point whose coordinates have the given ranks.
    pub fn at_ranks(&self, digits: &[u32]) -> Elem {
        self.values[rank_of(digits, self.field.q())]
    }

    /// Iterates `(point, value)` in rank order.
    pub fn iter_points(&self) -> impl Iterator<Item = (Vec<Elem>, Elem)> + '_ {
        let q = self.field.q();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (point_of(i, q, self.n), v))
    }
}
