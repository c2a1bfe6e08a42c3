use num_bigint::BigInt;

use super::{EuclideanDomain, Field, Ring};

/// Dense coefficient vector, lowest degree first, no trailing zeros.
pub type UPoly<E> = Vec<E>;

/// Univariate polynomial ring `R[var]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    pub base: R,
    pub var: &'static str,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: &'static str) -> Self {
        PolyRing { base, var }
    }

    pub fn trim(&self, mut p: UPoly<R::Elem>) -> UPoly<R::Elem> {
        while p.last().is_some_and(|c| self.base.is_zero(c)) {
            p.pop();
        }
        p
    }

    pub fn degree(&self, p: &[R::Elem]) -> Option<usize> {
        p.len().checked_sub(1)
    }

    pub fn lc(&self, p: &[R::Elem]) -> R::Elem {
        p.last().cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn constant(&self, c: R::Elem) -> UPoly<R::Elem> {
        self.trim(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, deg: usize) -> UPoly<R::Elem> {
        if self.base.is_zero(&c) {
            return vec![];
        }
        let mut v = vec![self.base.zero(); deg + 1];
        v[deg] = c;
        v
    }

    /// The variable itself.
    pub fn x(&self) -> UPoly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn scale(&self, p: &[R::Elem], c: &R::Elem) -> UPoly<R::Elem> {
        self.trim(p.iter().map(|a| self.base.mul(a, c)).collect())
    }

    pub fn eval(&self, p: &[R::Elem], x: &R::Elem) -> R::Elem {
        let b = &self.base;
        p.iter()
            .rev()
            .fold(b.zero(), |acc, c| b.add(&b.mul(&acc, x), c))
    }

    pub fn derivative(&self, p: &[R::Elem]) -> UPoly<R::Elem> {
        let b = &self.base;
        self.trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| b.mul(&b.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// Composition `p(q)`.
    pub fn compose(&self, p: &[R::Elem], q: &[R::Elem]) -> UPoly<R::Elem> {
        let q = q.to_vec();
        let mut acc = vec![];
        for c in p.iter().rev() {
            acc = self.add(&self.mul(&acc, &q), &self.constant(c.clone()));
        }
        acc
    }

    /// Applies a coefficient map into another ring.
    pub fn map<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &[R::Elem],
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> UPoly<S::Elem> {
        target.trim(p.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = UPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![]
    }
    fn one(&self) -> Self::Elem {
        vec![self.base.one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o = self.base.add(o, s);
        }
        self.trim(out)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let z = self.base.zero();
        let out = (0..n)
            .map(|i| {
                self.base
                    .sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))
            })
            .collect();
        self.trim(out)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let bs = &self.base;
        let mut out = vec![bs.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if bs.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = bs.add(&out[i + j], &bs.mul(x, y));
            }
        }
        self.trim(out)
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        format_poly(&self.base, a, self.var)
    }
}

/// Prints `c_k*x^k + ... + c_0` in decreasing degree.
pub(crate) fn format_poly<R: Ring>(base: &R, p: &[R::Elem], var: &str) -> String {
    let terms = p.iter().enumerate().rev().map(|(i, c)| {
        let mon = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        (c, mon)
    });
    format_terms(base, terms)
}

/// Joins `(coefficient, monomial)` pairs in the given order, skipping zeros.
/// Unit coefficients are omitted and compound coefficients parenthesized.
pub(crate) fn format_terms<'a, R: Ring + 'a>(
    base: &R,
    terms: impl Iterator<Item = (&'a R::Elem, String)>,
) -> String {
    let mut out = String::new();
    for (c, mon) in terms {
        if base.is_zero(c) {
            continue;
        }
        let mut s = base.fmt_elem(c);
        let negative = s.starts_with('-') && !s[1..].contains([' ', '+', '-']);
        if negative {
            s.remove(0);
        }
        let term = if mon.is_empty() {
            s
        } else if s == "1" {
            mon
        } else if s.contains([' ', '+', '/']) || s[1..].contains('-') {
            format!("({s})*{mon}")
        } else {
            format!("{s}*{mon}")
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<F: Field> PolyRing<F> {
    pub fn monic(&self, p: &[F::Elem]) -> UPoly<F::Elem> {
        match p.last() {
            None => vec![],
            Some(l) => {
                let li = self.base.inv(l).expect("nonzero leading coefficient");
                self.scale(p, &li)
            }
        }
    }

    /// Extended Euclid: `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(
        &self,
        a: &[F::Elem],
        b: &[F::Elem],
    ) -> (UPoly<F::Elem>, UPoly<F::Elem>, UPoly<F::Elem>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_empty() {
            return (r0, s0, t0);
        }
        let li = self.base.inv(&self.lc(&r0)).unwrap();
        (
            self.scale(&r0, &li),
            self.scale(&s0, &li),
            self.scale(&t0, &li),
        )
    }

    pub fn rem(&self, a: &[F::Elem], m: &[F::Elem]) -> UPoly<F::Elem> {
        self.div_rem(&a.to_vec(), &m.to_vec()).1
    }

    pub fn mul_mod(&self, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> UPoly<F::Elem> {
        self.rem(&self.mul(&a.to_vec(), &b.to_vec()), m)
    }

    /// `a^e mod m` with the exponent given as little-endian bits.
    pub fn pow_mod_bits(&self, a: &[F::Elem], bits: &[bool], m: &[F::Elem]) -> UPoly<F::Elem> {
        let mut acc = self.one();
        for &bit in bits.iter().rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if bit {
                acc = self.mul_mod(&acc, a, m);
            }
        }
        self.rem(&acc, m)
    }

    pub fn pow_mod(&self, a: &[F::Elem], e: &num_bigint::BigUint, m: &[F::Elem]) -> UPoly<F::Elem> {
        let bits: Vec<bool> = (0..e.bits()).map(|i| e.bit(i)).collect();
        self.pow_mod_bits(a, &bits, m)
    }
}

impl<F: Field> EuclideanDomain for PolyRing<F> {
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (vec![], a.clone());
        }
        let bs = &self.base;
        let lead_inv = bs.inv(b.last().unwrap()).expect("field");
        let mut r = a.clone();
        let mut q = vec![bs.zero(); a.len() - b.len() + 1];
        let db = b.len() - 1;
        for i in (0..q.len()).rev() {
            let c = &r[i + db];
            if bs.is_zero(c) {
                continue;
            }
            let f = bs.mul(c, &lead_inv);
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = bs.sub(&r[i + j], &bs.mul(&f, bj));
            }
            q[i] = f;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.last() {
            None => self.one(),
            Some(l) => vec![self.base.inv(l).unwrap()],
        }
    }

    fn euclid_size(&self, a: &Self::Elem) -> u64 {
        a.len() as u64
    }
}
