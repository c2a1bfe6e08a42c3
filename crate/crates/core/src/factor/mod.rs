//! Polynomial factorization over Q, F_q and F_q(u), in one and several variables.

pub mod fq;
pub mod kronecker;
pub mod q;

mod bivariate;

use crate::arith::{Field, FqElem, FqField, FracElem, PolyRing, Ring};
use crate::error::{HitError, Result};
use crate::field::{normalize_primitive, rationals, FqU, GlobalField, QElem};
use crate::poly::{MPoly, MRing};

pub use bivariate::{
    factor_bipoly, integral_roots, is_absolutely_irreducible_mod, is_irreducible_bipoly,
    require_irreducible, AbsIrreducibility, MAX_BIPOLY_DEGREE,
};
pub use kronecker::{factor_mpoly, MAX_KRONECKER_DEGREE, MAX_RECOMBINATION_FACTORS};

/// `unit * prod f_i^{m_i}` with every `f_i` monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Vec<E>, usize)>,
    /// Some irreducible factor has zero derivative (only in characteristic p).
    pub inseparable: bool,
}

impl<E: Clone> Factorization<E> {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.len() - 1, *m))
            .collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factorization over Q.
pub fn factor_univariate_q(f: &[QElem]) -> Result<Factorization<QElem>> {
    let q = rationals();
    if f.iter().all(|c| q.is_zero(c)) {
        return Err(HitError::ZeroPolynomial("cannot factor zero".into()));
    }
    let (unit, factors) = q::factor_q(f);
    let out = Factorization {
        unit,
        factors,
        inseparable: false,
    };
    check_reassembly(&q, f, &out)?;
    Ok(out)
}

/// Factorization over a finite field; `seed` fixes the equal-degree splitting.
pub fn factor_univariate_fq(
    field: &FqField,
    f: &[FqElem],
    seed: u64,
) -> Result<Factorization<FqElem>> {
    if f.iter().all(|c| c.0 == 0) {
        return Err(HitError::ZeroPolynomial("cannot factor zero".into()));
    }
    let (unit, factors) = fq::factor_fq(field, f, seed);
    let p = field.p() as usize;
    let inseparable = factors
        .iter()
        .any(|(g, _)| g.iter().enumerate().all(|(j, c)| j % p == 0 || c.0 == 0));
    let out = Factorization {
        unit,
        factors,
        inseparable,
    };
    check_reassembly(field, f, &out)?;
    Ok(out)
}

/// `unit * prod f^m == input`, exactly.
pub(crate) fn check_reassembly<K: Field>(
    k: &K,
    f: &[K::Elem],
    fz: &Factorization<K::Elem>,
) -> Result<()> {
    let ring = PolyRing::new(k.clone(), "Y");
    let mut prod = ring.constant(fz.unit.clone());
    for (g, m) in &fz.factors {
        prod = ring.mul(&prod, &ring.pow(g, *m as u64));
    }
    if prod != ring.trim(f.to_vec()) {
        return Err(HitError::Internal(
            "factorization does not reassemble".into(),
        ));
    }
    Ok(())
}

/// Factorization over `F_q(u)` through `F_q[u, Y]`.
pub fn factor_univariate_fqu(
    k: &FqU,
    f: &[FracElem<Vec<FqElem>>],
    seed: u64,
) -> Result<Factorization<FracElem<Vec<FqElem>>>> {
    let Some(lc) = f.iter().rev().find(|c| !k.is_zero(c)).cloned() else {
        return Err(HitError::ZeroPolynomial("cannot factor zero".into()));
    };
    let (_, prim) = normalize_primitive(k, f)?;
    let fq = k.constants();
    let ring = MRing::new(fq.clone(), vec!["u", "Y"]);
    let mut m = MPoly::default();
    for (j, c) in prim.iter().enumerate() {
        for (i, a) in c.iter().enumerate() {
            crate::poly::add_term(fq, &mut m, vec![i as u32, j as u32], *a);
        }
    }
    let (_, mf) = factor_mpoly(&ring, &m, seed)?;
    let mut factors = vec![];
    for (h, mult) in mf {
        if !ring.involves(&h, 1) {
            continue;
        }
        let dy = ring.degree_in(&h, 1) as usize;
        let mut coeffs = vec![vec![]; dy + 1];
        for (e, c) in &h.terms {
            let col: &mut Vec<FqElem> = &mut coeffs[e[1] as usize];
            if col.len() <= e[0] as usize {
                col.resize(e[0] as usize + 1, fq.zero());
            }
            col[e[0] as usize] = *c;
        }
        let g: Vec<_> = coeffs
            .iter()
            .map(|c| k.embed(&k.ring.trim(c.clone())))
            .collect();
        let inv = k.inv(g.last().unwrap()).unwrap();
        factors.push((g.iter().map(|c| k.mul(c, &inv)).collect::<Vec<_>>(), mult));
    }
    factors.sort_by_key(|(g, _)| g.len());
    let p = fq.p() as usize;
    let inseparable = factors.iter().any(|(g, _)| {
        g.iter()
            .enumerate()
            .all(|(j, c)| j % p == 0 || k.is_zero(c))
    });
    let out = Factorization {
        unit: lc,
        factors,
        inseparable,
    };
    check_reassembly(k, f, &out)?;
    Ok(out)
}

/// k-subsets of 0..n in lexicographic order.
pub(crate) struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fqu;

    #[test]
    fn subset_enumeration() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn fqu_examples() {
        let k = fqu(3).unwrap();
        let p = |s: &str| k.parse_elem(s).unwrap();
        // Y^2 - u^2 = (Y - u)(Y + u)
        let f = vec![p("-u^2"), p("0"), p("1")];
        let fz = k.factor_y(&f, 0).unwrap();
        assert_eq!(fz.degrees(), vec![1, 1]);
        // Y^3 - u is irreducible and inseparable
        let g = vec![p("-u"), p("0"), p("0"), p("1")];
        let gz = k.factor_y(&g, 0).unwrap();
        assert!(gz.is_irreducible() && gz.inseparable);
        // Y^2 - u is irreducible and separable in odd characteristic
        let g2 = vec![p("-u"), p("0"), p("1")];
        let gz = k.factor_y(&g2, 0).unwrap();
        assert!(gz.is_irreducible() && !gz.inseparable);
        let k2 = fqu(2).unwrap();
        let g3 = vec![k2.parse_elem("u").unwrap(), k2.zero(), k2.one()];
        let gz = k2.factor_y(&g3, 0).unwrap();
        assert!(gz.is_irreducible() && gz.inseparable);
        // (1/u) Y^2 - u = (1/u)(Y - u)(Y + u)
        let h = vec![p("-u"), p("0"), p("1/u")];
        let hz = k.factor_y(&h, 1).unwrap();
        assert_eq!(hz.unit, p("1/u"));
        assert_eq!(hz.degrees(), vec![1, 1]);
    }
}
