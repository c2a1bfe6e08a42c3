//! Symmetric polynomials in the roots `y_1..y_n` and the subset resolvents
//! `R_{m,j}(Y) = prod_{|w| = m} (Y - e_j(y_i : i in w))`.

use std::collections::HashMap;

use num_traits::One;

use super::bipoly::{BiPoly, BiRing};
use super::mpoly::{MPoly, MRing};
use crate::arith::{Frac, Integers, Ring};
use crate::error::{HitError, Result};
use crate::field::{rationals, GlobalField, QElem};

/// Largest `d_Y` accepted by `subset_resolvent`.
pub const MAX_RESOLVENT_DEGREE: usize = 6;

const ROOT_NAMES: [&str; MAX_RESOLVENT_DEGREE] = ["y1", "y2", "y3", "y4", "y5", "y6"];
const ELEM_NAMES: [&str; MAX_RESOLVENT_DEGREE] = ["e1", "e2", "e3", "e4", "e5", "e6"];

/// A polynomial with rational coefficients in the root variables `y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    pub n: usize,
    pub poly: MPoly<QElem>,
}

impl SymPoly {
    pub fn ring(n: usize) -> MRing<Frac<Integers>> {
        MRing::new(rationals(), ROOT_NAMES[..n].to_vec())
    }

    /// The ring `Q[e_1..e_n]` in which reductions are expressed.
    pub fn elem_ring(n: usize) -> MRing<Frac<Integers>> {
        MRing::new(rationals(), ELEM_NAMES[..n].to_vec())
    }

    /// `e_k(y_1..y_n)`.
    pub fn elementary(n: usize, k: usize) -> MPoly<QElem> {
        let r = Self::ring(n);
        let mut out = MPoly::default();
        for s in crate::factor::Subsets::new(n, k) {
            let mut e = vec![0u32; n];
            for i in s {
                e[i] = 1;
            }
            out.terms.insert(e, r.field.one());
        }
        out
    }

    /// Exact invariance under `(1 2)` and `(1 2 ... n)`, which generate `S_n`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        if n < 2 {
            return true;
        }
        let permute = |sigma: &dyn Fn(usize) -> usize| MPoly {
            terms: self
                .poly
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = vec![0u32; n];
                    for (i, &x) in e.iter().enumerate() {
                        f[sigma(i)] = x;
                    }
                    (f, c.clone())
                })
                .collect(),
        };
        let swap = |i: usize| match i {
            0 => 1,
            1 => 0,
            _ => i,
        };
        let cycle = |i: usize| (i + 1) % n;
        permute(&swap) == self.poly && permute(&cycle) == self.poly
    }
}

/// Writes a symmetric polynomial in the elementary symmetric polynomials by
/// lexicographic descent.
pub fn symmetric_reduce(s: &SymPoly) -> Result<MPoly<QElem>> {
    let n = s.n;
    if n == 0 || n > MAX_RESOLVENT_DEGREE {
        return Err(HitError::OutOfRange(format!("{n} root variables")));
    }
    if !s.is_symmetric() {
        return Err(HitError::NotSymmetric);
    }
    let yr = SymPoly::ring(n);
    let er = SymPoly::elem_ring(n);
    let elems: Vec<MPoly<QElem>> = (1..=n).map(|k| SymPoly::elementary(n, k)).collect();
    let mut powers: HashMap<(usize, u32), MPoly<QElem>> = HashMap::new();
    let mut rest = s.poly.clone();
    let mut out = er.zero();
    while let Some((lead, c)) = rest
        .terms
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(HitError::NotSymmetric);
        }
        // e_1^{a1-a2} e_2^{a2-a3} ... e_n^{an}
        let mut exps = vec![0u32; n];
        let mut prod = yr.constant(c.clone());
        for i in 0..n {
            let k = lead[i] - lead.get(i + 1).copied().unwrap_or(0);
            exps[i] = k;
            if k > 0 {
                let pw = powers
                    .entry((i, k))
                    .or_insert_with(|| yr.pow(&elems[i], k as u64))
                    .clone();
                prod = yr.mul(&prod, &pw);
            }
        }
        rest = yr.sub(&rest, &prod);
        out = er.add(&out, &er.monomial(c, exps));
    }
    Ok(out)
}

/// `R_{m,j}` for `F` monic in `Y`, with `deg_Y R = C(d_Y, m)`.
pub fn subset_resolvent<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    m: usize,
    j: usize,
) -> Result<BiPoly<K::Elem>> {
    let n = br.d_y(f);
    if br.is_zero(f) || !br.t.is_one(&br.a0(f)) {
        return Err(HitError::NotMonic);
    }
    if n > MAX_RESOLVENT_DEGREE {
        return Err(HitError::DegreeCap(format!(
            "d_Y = {n} exceeds {MAX_RESOLVENT_DEGREE}"
        )));
    }
    if !(1 <= j && j <= m && m <= n / 2) {
        return Err(HitError::OutOfRange(format!(
            "need 1 <= j <= m <= d_Y/2, got m = {m}, j = {j}"
        )));
    }
    let yr = SymPoly::ring(n);
    let q = &yr.field;
    // the values e_j(y_w) for every m-subset w
    let values: Vec<MPoly<QElem>> = crate::factor::Subsets::new(n, m)
        .map(|w| {
            let mut v = MPoly::default();
            for s in crate::factor::Subsets::new(m, j) {
                let mut e = vec![0u32; n];
                for i in s {
                    e[w[i]] = 1;
                }
                v.terms.insert(e, q.one());
            }
            v
        })
        .collect();
    // prod (Y - v), coefficient of Y^k at index k
    let mut coeffs = vec![yr.one()];
    for v in &values {
        let mut next = vec![yr.zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = yr.add(&next[k + 1], c);
            next[k] = yr.sub(&next[k], &yr.mul(c, v));
        }
        coeffs = next;
    }
    // e_i = (-1)^i a_{n-i}(T)
    let tr = &br.t;
    let k = &br.k;
    let e_vals: Vec<_> = (1..=n)
        .map(|i| {
            let c = f[n - i].clone();
            if i % 2 == 1 {
                tr.neg(&c)
            } else {
                c
            }
        })
        .collect();
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let red = symmetric_reduce(&SymPoly { n, poly: c })?;
        let mut acc = tr.zero();
        for (exps, coef) in &red.terms {
            if !coef.den.is_one() {
                return Err(HitError::Internal(
                    "non-integral symmetric reduction".into(),
                ));
            }
            let mut term = tr.constant(k.from_bigint(&coef.num));
            for (i, &x) in exps.iter().enumerate() {
                if x > 0 {
                    term = tr.mul(&term, &tr.pow(&e_vals[i], x as u64));
                }
            }
            acc = tr.add(&acc, &term);
        }
        out.push(acc);
    }
    Ok(br.y.trim(out))
}
