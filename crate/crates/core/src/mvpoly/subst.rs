use super::{rank_of, unrank, MultiPoly};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::Elem;

impl MultiPoly {
    /// Fixes variable `i` to the constant `c`, returning a polynomial in the
    /// remaining n−1 variables (order preserved).
    pub fn substitute_const(&self, i: usize, c: Elem) -> Result<MultiPoly> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::InvalidParam(
                "fixing the only variable leaves a constant; use eval".into(),
            ));
        }
        let f = &self.field;
        let c = f.check(c)?;
        let q = f.q();
        let pw: Vec<Elem> = (0..q).map(|e| f.pow(c, e as u64)).collect();
        let mut out = MultiPoly::zero(f, self.n - 1)?;
        for (idx, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut exps = unrank(idx, q, self.n);
            let e = exps.remove(i);
            let t = rank_of(&exps, q);
            out.coeffs[t] = f.add(out.coeffs[t], f.mul(a, pw[e as usize]));
        }
        Ok(out)
    }

    /// Replaces variable `i` by the univariate polynomial `s(x_i)`.
    pub fn substitute_poly(&self, i: usize, s: &MultiPoly) -> Result<MultiPoly> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if s.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if s.n != 1 {
            return Err(Error::VariableCountMismatch { expected: 1, got: s.n });
        }
        let f = &self.field;
        let q = f.q() as usize;
        let mut powers = Vec::with_capacity(q);
        let mut cur = MultiPoly::one(f, 1)?;
        for _ in 0..q {
            powers.push(cur.clone());
            cur = cur.mul(s)?;
        }
        let stride = q.pow(i as u32);
        let mut out = MultiPoly::zero(f, self.n)?;
        for (idx, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = (idx / stride) % q;
            let base = idx - e * stride;
            for (j, &sj) in powers[e].coeffs.iter().enumerate() {
                if !sj.is_zero() {
                    let t = base + j * stride;
                    out.coeffs[t] = f.add(out.coeffs[t], f.mul(a, sj));
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `s` into every variable: `f(s(x_1), …, s(x_n))`.
    pub fn substitute_all(&self, s: &MultiPoly) -> Result<MultiPoly> {
        (0..self.n).try_fold(self.clone(), |acc, i| acc.substitute_poly(i, s))
    }

    /// Reduced form of `g(self)` for a univariate `g`.
    pub fn compose_univariate(g: &MultiPoly, f: &MultiPoly) -> Result<MultiPoly> {
        MultiPoly::compose_univariate_with(g, f, Exec::default())
    }

    pub fn compose_univariate_with(g: &MultiPoly, f: &MultiPoly, exec: Exec) -> Result<MultiPoly> {
        if g.field != f.field {
            return Err(Error::FieldMismatch);
        }
        if g.n != 1 {
            return Err(Error::VariableCountMismatch { expected: 1, got: g.n });
        }
        let gt = g.to_table_with(exec);
        Ok(f.to_table_with(exec).map_values(gt.values()).interpolate_with(exec))
    }
}
