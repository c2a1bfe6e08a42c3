use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{Field, Ring, UPoly};

/// Sparse multivariate polynomial: exponent vector to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<E> {
    pub terms: BTreeMap<Vec<u32>, E>,
}

impl<E> Default for MPoly<E> {
    fn default() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
}

/// `F[x_0, ..., x_{n-1}]` with printable variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MRing<F> {
    pub field: F,
    pub names: Vec<&'static str>,
}

impl<F: Field> MRing<F> {
    pub fn new(field: F, names: Vec<&'static str>) -> Self {
        MRing { field, names }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn constant(&self, c: F::Elem) -> MPoly<F::Elem> {
        self.monomial(c, vec![0; self.nvars()])
    }

    pub fn monomial(&self, c: F::Elem, exps: Vec<u32>) -> MPoly<F::Elem> {
        let mut terms = BTreeMap::new();
        if !self.field.is_zero(&c) {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    pub fn var(&self, i: usize) -> MPoly<F::Elem> {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(self.field.one(), e)
    }

    pub fn degree_in(&self, p: &MPoly<F::Elem>, i: usize) -> u32 {
        p.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn degrees(&self, p: &MPoly<F::Elem>) -> Vec<u32> {
        (0..self.nvars()).map(|i| self.degree_in(p, i)).collect()
    }

    pub fn total_degree(&self, p: &MPoly<F::Elem>) -> u32 {
        p.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn involves(&self, p: &MPoly<F::Elem>, i: usize) -> bool {
        p.terms.keys().any(|e| e[i] > 0)
    }

    pub fn is_constant(&self, p: &MPoly<F::Elem>) -> bool {
        p.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn scale(&self, p: &MPoly<F::Elem>, c: &F::Elem) -> MPoly<F::Elem> {
        let mut out = MPoly::default();
        for (e, a) in &p.terms {
            let v = self.field.mul(a, c);
            if !self.field.is_zero(&v) {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Kronecker substitution `x_i -> z^{w_i}` with `w_i = prod_{j<i} radix_j`.
    pub fn kronecker(&self, p: &MPoly<F::Elem>, radix: &[u32]) -> UPoly<F::Elem> {
        let weights = weights(radix);
        let n: u64 = radix.iter().map(|&r| r as u64).product();
        let mut out = vec![self.field.zero(); n as usize];
        for (e, c) in &p.terms {
            let idx: u64 = e.iter().zip(&weights).map(|(&a, &w)| a as u64 * w).sum();
            out[idx as usize] = self.field.add(&out[idx as usize], c);
        }
        while out.last().is_some_and(|c| self.field.is_zero(c)) {
            out.pop();
        }
        out
    }

    /// Inverse Kronecker map reading exponents as mixed-radix digits.
    pub fn unkronecker(&self, u: &[F::Elem], radix: &[u32]) -> MPoly<F::Elem> {
        let mut out = MPoly::default();
        for (i, c) in u.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let mut r = i as u64;
            let mut e = Vec::with_capacity(radix.len());
            for &d in radix {
                e.push((r % d as u64) as u32);
                r /= d as u64;
            }
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Coefficient of the largest term in Kronecker order (last variable most significant).
    pub fn kronecker_lc(&self, p: &MPoly<F::Elem>) -> F::Elem {
        p.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.iter().rev().cmp(b.iter().rev()))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Substitutes `x_i := value` (a constant).
    pub fn eval_var(&self, p: &MPoly<F::Elem>, i: usize, value: &F::Elem) -> MPoly<F::Elem> {
        let mut out = MPoly::default();
        for (e, c) in &p.terms {
            let mut e2 = e.clone();
            e2[i] = 0;
            let v = self.field.mul(c, &self.field.pow(value, e[i] as u64));
            add_term(&self.field, &mut out, e2, v);
        }
        out
    }
}

fn weights(radix: &[u32]) -> Vec<u64> {
    let mut w = Vec::with_capacity(radix.len());
    let mut acc = 1u64;
    for &r in radix {
        w.push(acc);
        acc *= r as u64;
    }
    w
}

pub(crate) fn add_term<F: Ring>(field: &F, p: &mut MPoly<F::Elem>, e: Vec<u32>, c: F::Elem) {
    if field.is_zero(&c) {
        return;
    }
    match p.terms.get_mut(&e) {
        Some(old) => {
            let s = field.add(old, &c);
            if field.is_zero(&s) {
                p.terms.remove(&e);
            } else {
                *old = s;
            }
        }
        None => {
            p.terms.insert(e, c);
        }
    }
}

impl<F: Field> Ring for MRing<F> {
    type Elem = MPoly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        MPoly::default()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.field.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            add_term(&self.field, &mut out, e.clone(), c.clone());
        }
        out
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        MPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), self.field.neg(c)))
                .collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = MPoly::default();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&self.field, &mut out, e, self.field.mul(ca, cb));
            }
        }
        out
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.field.from_bigint(n))
    }
    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        let mut parts = vec![];
        for (e, c) in a.terms.iter().rev() {
            let mon: Vec<String> = e
                .iter()
                .zip(&self.names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| {
                    if k == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            let cs = self.field.fmt_elem(c);
            parts.push(if mon.is_empty() {
                cs
            } else if cs == "1" {
                mon.join("*")
            } else {
                format!("({cs})*{}", mon.join("*"))
            });
        }
        parts.join(" + ")
    }
}
