//! Small finite fields F_q = F_p[z]/(m(z)).
//!
//! Elements are stored by *rank*: the coefficient vector `(c_0, …, c_{r-1})`
//! of `c_0 + c_1 z + … + c_{r-1} z^{r-1}` read as a base-p integer with the
//! constant term as the least significant digit. Rank 0 is zero, rank 1 is
//! one, and ranks `0..p` are exactly the prime subfield.
//!
//! The modulus is the lexicographically smallest monic irreducible of degree
//! r under the same digit order, and the distinguished generator is the
//! smallest-rank primitive element, so a given `(p, r)` always produces the
//! same field with the same element numbering.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`make_field`].
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// Fields up to this order get a full addition table.
const ADD_TABLE_MAX_Q: u32 = 1024;

/// A field element, identified by its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn rank(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn from_rank_unchecked(rank: u32) -> Elem {
        Elem(rank)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Wire form of a field: `{"p": 3, "r": 2, "modulus": [1, 0, 1]}`.
/// `modulus` lists all r+1 coefficients, constant term first, and is empty
/// for prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub r: u32,
    #[serde(default)]
    pub modulus: Vec<u64>,
}

#[derive(Debug)]
struct Inner {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, r+1 coefficients, constant first. Empty when r = 1.
    modulus: Vec<u32>,
    generator: Elem,
    /// exp[i] = g^i for i in 0..q-1.
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    /// p^i for i in 0..r.
    place: Vec<u32>,
}

/// An immutable finite field description. Cloning is cheap.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.r > 1 {
            write!(f, " mod {:?}", self.0.modulus)?;
        }
        Ok(())
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.r == other.0.r && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Builds F_{p^r} with the canonical modulus and element order.
pub fn make_field(p: u64, r: u32) -> Result<FieldSpec> {
    make_field_capped(p, r, DEFAULT_FIELD_CAP)
}

pub fn make_field_capped(p: u64, r: u32, cap: u64) -> Result<FieldSpec> {
    check_size(p, r, cap)?;
    let p32 = p as u32;
    let modulus = if r == 1 {
        Vec::new()
    } else {
        smallest_irreducible(p32, r).ok_or(Error::NoIrreducibleFound { p, r })?
    };
    Ok(FieldSpec(Arc::new(Inner::build(p32, r, modulus))))
}

/// Builds a field from its wire form. An empty modulus selects the canonical
/// one; an explicit modulus must be monic, of degree r, and irreducible.
pub fn field_from_desc(desc: &FieldDesc) -> Result<FieldSpec> {
    if desc.modulus.is_empty() {
        return make_field(desc.p, desc.r);
    }
    check_size(desc.p, desc.r, DEFAULT_FIELD_CAP)?;
    let p = desc.p as u32;
    let r = desc.r;
    if desc.r == 1 {
        // Any monic linear modulus gives the same prime field.
        if desc.modulus.len() != 2 || desc.modulus[1] != 1 || desc.modulus[0] >= desc.p {
            return Err(Error::InvalidModulus(format!("{:?}", desc.modulus)));
        }
        return make_field(desc.p, 1);
    }
    if desc.modulus.len() != r as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients, got {}",
            r + 1,
            desc.modulus.len()
        )));
    }
    if desc.modulus.iter().any(|&c| c >= desc.p) {
        return Err(Error::InvalidModulus("coefficient not reduced mod p".into()));
    }
    if desc.modulus[r as usize] != 1 {
        return Err(Error::InvalidModulus("modulus is not monic".into()));
    }
    let modulus: Vec<u32> = desc.modulus.iter().map(|&c| c as u32).collect();
    if !is_irreducible(p, &modulus) {
        return Err(Error::InvalidModulus("modulus is reducible".into()));
    }
    Ok(FieldSpec(Arc::new(Inner::build(p, r, modulus))))
}

fn check_size(p: u64, r: u32, cap: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
    if q > cap as u128 || q > u32::MAX as u128 {
        return Err(Error::CapExceeded {
            needed: q,
            cap: cap as u128,
        });
    }
    Ok(())
}

// --- dense univariate helpers over F_p, coefficient vectors constant first ---

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn rem_monic(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut a = a.to_vec();
    trim(&mut a);
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            let sub = (lead as u64 * mc as u64 % p as u64) as u32;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(&mut a);
    }
    a
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = digits(idx, p, d);
            div.push(1);
            if rem_monic(p, m, &div).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn smallest_irreducible(p: u32, r: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(r);
    (0..count).find_map(|idx| {
        let mut m = digits(idx, p, r as usize);
        m.push(1);
        is_irreducible(p, &m).then_some(m)
    })
}

impl Inner {
    fn build(p: u32, r: u32, modulus: Vec<u32>) -> Inner {
        let q = p.pow(r);
        let place: Vec<u32> = (0..r).map(|i| p.pow(i)).collect();
        let mut inner = Inner {
            p,
            r,
            q,
            modulus,
            generator: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add: None,
            place,
        };
        inner.neg = (0..q).map(|a| inner.neg_digits(a)).collect();
        if r > 1 && q <= ADD_TABLE_MAX_Q {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = inner.add_digits(a, b);
                }
            }
            inner.add = Some(t);
        }
        inner.generator = inner.find_generator();
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..q - 1 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = inner.slow_mul(cur, inner.generator.0);
        }
        inner.exp = exp;
        inner.log = log;
        inner
    }

    fn to_digits(&self, a: u32) -> Vec<u32> {
        digits(a as u64, self.p, self.r as usize)
    }

    fn rank_from_digits(&self, d: &[u32]) -> u32 {
        d.iter().zip(&self.place).map(|(&c, &w)| c * w).sum()
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let (mut a, mut b, mut out) = (a, b, 0u32);
        for &w in &self.place {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
        }
        out
    }

    fn neg_digits(&self, a: u32) -> u32 {
        let p = self.p;
        let (mut a, mut out) = (a, 0u32);
        for &w in &self.place {
            out += ((p - a % p) % p) * w;
            a /= p;
        }
        out
    }

    /// Schoolbook product modulo the defining polynomial. Used to build the
    /// log tables and as the reference multiplication in tests.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.r == 1 {
            return (a as u64 * b as u64 % p) as u32;
        }
        let da = self.to_digits(a);
        let db = self.to_digits(b);
        let mut prod = vec![0u32; da.len() + db.len() - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut red = rem_monic(self.p, &prod, &self.modulus);
        red.resize(self.r as usize, 0);
        self.rank_from_digits(&red)
    }

    fn slow_pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> Elem {
        let order = (self.q - 1) as u64;
        if order == 1 {
            return Elem::ONE;
        }
        let factors = prime_factors(order);
        (1..self.q)
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, order / l) != 1))
            .map(Elem)
            .expect("every finite field has a primitive element")
    }
}

impl FieldSpec {
    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.0.r
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Monic modulus, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn describe(&self) -> FieldDesc {
        FieldDesc {
            p: self.0.p as u64,
            r: self.0.r,
            modulus: self.0.modulus.iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn elem(&self, rank: u64) -> Result<Elem> {
        if rank >= self.0.q as u64 {
            return Err(Error::ElementOutOfRange {
                rank,
                q: self.0.q as u64,
            });
        }
        Ok(Elem(rank as u32))
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() > self.0.r as usize {
            return Err(Error::Parse(format!(
                "element has {} coefficients, field degree is {}",
                coeffs.len(),
                self.0.r
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.0.p as u64) {
            return Err(Error::Parse(format!("coefficient {c} not reduced mod {}", self.0.p)));
        }
        let d: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
        Ok(Elem(self.0.rank_from_digits(&d)))
    }

    /// Coefficient vector of length r, constant term first.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        self.0.to_digits(a.0)
    }

    pub fn in_prime_subfield(&self, a: Elem) -> bool {
        a.0 < self.0.p
    }

    /// All q elements in rank order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let i = &*self.0;
        if i.r == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= i.p { s - i.p } else { s });
        }
        match &i.add {
            Some(t) => Elem(t[(a.0 * i.q + b.0) as usize]),
            None => Elem(i.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let i = &*self.0;
        if i.r == 1 {
            return Elem((a.0 as u64 * b.0 as u64 % i.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let s = i.log[a.0 as usize] + i.log[b.0 as usize];
        let m = i.q - 1;
        Elem(i.exp[(if s >= m { s - m } else { s }) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let i = &*self.0;
        let m = i.q - 1;
        Ok(Elem(i.exp[((m - i.log[a.0 as usize]) % m) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` with the convention `0^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let i = &*self.0;
        let m = (i.q - 1) as u64;
        let e = (i.log[a.0 as usize] as u64 * (k % m)) % m;
        Elem(i.exp[e as usize])
    }

    /// Discrete log to the distinguished generator.
    pub fn log(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.log[a.0 as usize])
    }

    /// Checks that `a` is an element of this field.
    pub fn check(&self, a: Elem) -> Result<Elem> {
        self.elem(a.0 as u64)
    }

    /// Human-readable form such as `2z^2+z+1`.
    pub fn fmt_elem(&self, a: Elem) -> String {
        if self.0.r == 1 {
            return a.0.to_string();
        }
        let d = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    #[cfg(test)]
    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.slow_mul(a.0, b.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldSpec> {
        [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (11, 1),
            (13, 1),
            (2, 4),
            (17, 1),
            (5, 2),
            (3, 3),
            (2, 5),
        ]
        .iter()
        .map(|&(p, r)| make_field(p, r).unwrap())
        .collect()
    }

    #[test]
    fn prime_fields_have_no_modulus() {
        let f = make_field(2, 1).unwrap();
        assert!(f.modulus().is_empty());
        assert_eq!(f.q(), 2);
        assert_eq!(f.generator().rank(), 1);
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(make_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // Monic quadratics over F_3 in order: z^2 (0), z^2+1 (1) ... first irreducible is z^2+1.
        let brute = (0..9u32)
            .map(|i| (i % 3, i / 3))
            .find(|&(c0, c1)| (0..3u32).all(|x| (x * x + c1 * x + c0) % 3 != 0))
            .unwrap();
        assert_eq!(brute, (1, 0));
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(make_field(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(make_field(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(make_field(3, 3).unwrap().modulus(), &[1, 2, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(make_field(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 40), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn named_arithmetic() {
        let f4 = make_field(2, 2).unwrap();
        let u = f4.elem(2).unwrap();
        assert_eq!(f4.mul(u, u), f4.add(u, Elem::ONE));
        assert_eq!(f4.fmt_elem(f4.mul(u, u)), "z+1");

        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert_eq!(f5.inv(Elem::ZERO), Err(Error::DivisionByZero));

        let f9 = make_field(3, 2).unwrap();
        let z = f9.elem(3).unwrap();
        assert_eq!(f9.mul(z, z), f9.from_int(2));
    }

    #[test]
    fn element_order() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.elements().map(Elem::rank).collect::<Vec<_>>(), vec![0, 1]);
        let f4 = make_field(2, 2).unwrap();
        let names: Vec<String> = f4.elements().map(|e| f4.fmt_elem(e)).collect();
        assert_eq!(names, vec!["0", "1", "z", "z+1"]);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.elements().count(), 3);
    }

    #[test]
    fn rank_is_a_bijection_with_coeffs() {
        for f in small_fields() {
            for a in f.elements() {
                let c: Vec<u64> = f.coeffs(a).iter().map(|&x| x as u64).collect();
                assert_eq!(f.from_coeffs(&c).unwrap(), a);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b), "{f:?}");
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_and_inversion_power() {
        // x^(q-2) is the constant 1 when q = 2.
        for f in small_fields().into_iter().filter(|f| f.q() > 2) {
            let q = f.q() as u64;
            let inv_count = f
                .elements()
                .map(|a| f.pow(a, q - 2))
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            assert_eq!(inv_count as u64, q);
            for a in f.elements() {
                assert_eq!(f.pow(a, q), a);
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q - 1), Elem::ONE);
                    assert_eq!(f.pow(a, q - 2), f.inv(a).unwrap());
                }
            }
            assert_eq!(f.pow(Elem::ZERO, q - 2), Elem::ZERO);
        }
    }

    #[test]
    fn generator_is_primitive_and_smallest() {
        for f in small_fields() {
            let g = f.generator();
            let mut seen = std::collections::BTreeSet::new();
            let mut cur = Elem::ONE;
            for _ in 0..f.q() - 1 {
                cur = f.mul(cur, g);
                seen.insert(cur);
            }
            assert_eq!(seen.len() as u32, f.q() - 1);
            assert!(!seen.contains(&Elem::ZERO));
            for smaller in 1..g.rank() {
                let s = f.elem(smaller as u64).unwrap();
                let order = (1..f.q()).find(|&k| f.pow(s, k as u64) == Elem::ONE).unwrap();
                assert!(order < f.q() - 1);
            }
        }
    }

    #[test]
    fn desc_round_trip() {
        for f in small_fields() {
            let d = f.describe();
            let json = serde_json::to_string(&d).unwrap();
            let back: FieldDesc = serde_json::from_str(&json).unwrap();
            assert_eq!(field_from_desc(&back).unwrap(), f);
        }
        let bad = FieldDesc {
            p: 2,
            r: 2,
            modulus: vec![1, 0, 1],
        };
        assert!(matches!(field_from_desc(&bad), Err(Error::InvalidModulus(_))));
        // z^3+z^2+1 is another valid model of F_8.
        let alt = FieldDesc {
            p: 2,
            r: 3,
            modulus: vec![1, 0, 1, 1],
        };
        let f = field_from_desc(&alt).unwrap();
        assert_ne!(f, make_field(2, 3).unwrap());
        assert_eq!(f.q(), 8);
    }

    #[test]
    fn large_prime_field_without_tables_for_add() {
        let f = make_field(2, 11).unwrap();
        let a = f.elem(1234).unwrap();
        let b = f.elem(777).unwrap();
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.mul(a, b), f.slow_mul(a, b));
    }
}
