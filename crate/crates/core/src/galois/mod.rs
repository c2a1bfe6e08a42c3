//! Galois groups of specializations `F(t, Y)` and of `F` over `K(T)`, for
//! `deg_Y F <= 4` and characteristic other than 2.

mod classify;
mod group;

pub use classify::{
    classify, classify_factored, discriminant, Classification, GaloisBase, RatFun, RatFunElem,
};
pub use group::{
    catalog, closure, cycle_type, delta_gamma, DeltaGamma, GroupId, Perm, PermGroup,
    SubgroupLatticeEntry,
};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{FqElem, FqField, Ring};
use crate::error::{HitError, Result};
use crate::factor::{factor_univariate_fq, require_irreducible, MAX_BIPOLY_DEGREE};
use crate::field::{rationals, GlobalField, QElem};
use crate::poly::{BiPoly, BiRing};

/// Exact group of the splitting field of a separable `f` over K.
pub fn galois_group_specialized<K: GlobalField>(k: &K, f: &[K::Elem]) -> Result<Classification> {
    classify(k, f, false)
}

/// Group of the splitting field of `f`, with repeated factors dropped.
pub fn splitting_group<K: GlobalField>(k: &K, f: &[K::Elem]) -> Result<Classification> {
    classify(k, f, true)
}

/// The group of `F` over `K(T)`; `F` must be irreducible and separable in `Y`.
pub fn galois_group_generic<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
) -> Result<Classification> {
    let d = br.d_y(f);
    if d == 0 || d > 4 {
        return Err(HitError::OutOfRange(format!(
            "unsupported degree {d} in Y (1 to 4)"
        )));
    }
    if br.k.characteristic() == 2 {
        return Err(HitError::UnsupportedCharacteristic(
            "characteristic 2".into(),
        ));
    }
    let l = RatFun::new(br.k.clone());
    let coeffs: Vec<RatFunElem<K>> = f.iter().map(|c| l.embed(c)).collect();
    let fz = l.factor_e(&coeffs)?;
    if !fz.is_irreducible() {
        let g = &fz.factors[0].0;
        return Err(HitError::Reducible {
            factor: g
                .iter()
                .map(|c| l.fmt_elem(c))
                .collect::<Vec<_>>()
                .join(", "),
        });
    }
    classify_factored(&l, &coeffs, &fz, false)
}

/// Whether `G_t` differs from the generic group `G`. Inseparable
/// specializations are exceptional; otherwise the deflated splitting group is
/// compared by order (for `Delta(t) != 0` it embeds into `G`).
pub fn is_exceptional<K: GlobalField>(k: &K, g: &GroupId, f_spec: &[K::Elem]) -> Result<bool> {
    match splitting_group(k, f_spec) {
        Ok(c) => Ok(c.group.order < g.order),
        Err(HitError::Inseparable(_)) => Ok(true),
        Err(e) => Err(e),
    }
}

/// Factorization patterns of `f mod p` for the primes not dividing the
/// leading coefficient or the discriminant; `f` must have integer coefficients.
pub fn dedekind_sample(f: &[QElem], primes: &[u64]) -> Result<Vec<(u64, Vec<usize>)>> {
    let q = rationals();
    if f.len() < 2 || f.iter().any(|c| !q.ints().is_one(&c.den)) {
        return Err(HitError::OutOfRange(
            "Dedekind sampling needs an integer polynomial of degree >= 1".into(),
        ));
    }
    let disc = discriminant(&q, f);
    if q.is_zero(&disc) {
        return Err(HitError::Inseparable("repeated roots".into()));
    }
    // disc * lc^(2n-2) is an integer
    let lc = &f.last().unwrap().num;
    let bad = &disc.num * lc;
    let mut out = vec![];
    for &p in primes {
        let pb = BigInt::from(p);
        if p < 2 || bad.is_multiple_of(&pb) || !disc.den.gcd(&pb).to_u64().is_some_and(|g| g == 1) {
            continue;
        }
        let fp = FqField::new(p)?;
        let red: Vec<FqElem> = f
            .iter()
            .map(|c| FqElem(c.num.mod_floor(&pb).to_u64().unwrap()))
            .collect();
        let fz = factor_univariate_fq(&fp, &red, 0)?;
        let mut t = fz.degrees();
        t.sort_unstable();
        out.push((p, t));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindReport {
    pub samples: usize,
    /// Every observed cycle type occurs in the claimed group.
    pub consistent: bool,
    /// The elements of the claimed group with an observed cycle type generate it.
    pub generates: bool,
}

pub fn dedekind_check(g: &GroupId, samples: &[(u64, Vec<usize>)]) -> Result<DedekindReport> {
    let pg = PermGroup::of(g)?;
    let types = pg.cycle_types();
    let seen: BTreeSet<Vec<usize>> = samples.iter().map(|(_, t)| t.clone()).collect();
    let consistent = seen.iter().all(|t| types.contains(t));
    let gens: Vec<Perm> = pg
        .elements
        .iter()
        .filter(|p| seen.contains(&cycle_type(p)))
        .cloned()
        .collect();
    let generates = closure(g.degree, &gens).len() == pg.elements.len();
    Ok(DedekindReport {
        samples: samples.len(),
        consistent,
        generates,
    })
}

/// Checks that `F` is a valid Galois census input: irreducible over K,
/// `deg_Y <= 4`, characteristic not 2; returns the generic group.
pub fn validate_generic<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
) -> Result<Classification> {
    if br.total_degree(f) <= MAX_BIPOLY_DEGREE {
        require_irreducible(br, f)?;
    }
    galois_group_generic(br, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_from;
    use crate::field::{fqu, rationals};

    fn qpoly(c: &[i64]) -> Vec<QElem> {
        let q = rationals();
        c.iter().map(|&x| q.from_i64(x)).collect()
    }

    fn label(c: &[i64]) -> String {
        galois_group_specialized(&rationals(), &qpoly(c))
            .unwrap()
            .group
            .label
    }

    #[test]
    fn small_degrees_over_q() {
        assert_eq!(label(&[1, -3, 0, 1]), "C3");
        assert_eq!(label(&[-2, 0, 0, 1]), "S3");
        assert_eq!(label(&[-5, 0, 1]), "C2");
        assert_eq!(label(&[-9, 0, 1]), "1+1:C1");
        assert_eq!(label(&[-8, 0, 0, 1]), "1+2:C2");
        let c = galois_group_specialized(&rationals(), &qpoly(&[1, -3, 0, 1])).unwrap();
        assert_eq!(c.disc, "81");
    }

    #[test]
    fn quartics_over_q() {
        // Y^4 - 2: D4; Y^4 + 1: V4; Y^4 - 4Y^2 + 2: C4; Y^4 + 8Y + 12: A4; Y^4 + Y + 1: S4
        assert_eq!(label(&[-2, 0, 0, 0, 1]), "D4");
        assert_eq!(label(&[1, 0, 0, 0, 1]), "V4");
        assert_eq!(label(&[2, 0, -4, 0, 1]), "C4");
        assert_eq!(label(&[12, 8, 0, 0, 1]), "A4");
        assert_eq!(label(&[1, 1, 0, 0, 1]), "S4");
        // (Y^2 - 2)(Y^2 - 3) and (Y^2 - 2)(Y^2 - 8)
        assert_eq!(label(&[6, 0, -5, 0, 1]), "2+2:C2×C2");
        assert_eq!(label(&[16, 0, -10, 0, 1]), "2+2:C2");
        assert!(matches!(
            galois_group_specialized(&rationals(), &qpoly(&[1, 2, 1])),
            Err(HitError::Inseparable(_))
        ));
        assert_eq!(
            splitting_group(&rationals(), &qpoly(&[1, 2, 1]))
                .unwrap()
                .group
                .order,
            1
        );
    }

    #[test]
    fn over_function_fields() {
        let k = fqu(3).unwrap();
        let f = vec![k.parse_elem("-u").unwrap(), k.zero(), k.one()];
        assert_eq!(galois_group_specialized(&k, &f).unwrap().group.label, "C2");
        let k2 = fqu(2).unwrap();
        let f = vec![k2.parse_elem("u").unwrap(), k2.zero(), k2.one()];
        assert!(matches!(
            galois_group_specialized(&k2, &f),
            Err(HitError::UnsupportedCharacteristic(_))
        ));
    }

    #[test]
    fn generic_groups() {
        let br = BiRing::new(rationals());
        let g = |s: &str| {
            galois_group_generic(&br, &br.parse(s).unwrap())
                .unwrap()
                .group
                .label
        };
        assert_eq!(g("Y^2 - T"), "C2");
        assert_eq!(g("Y^3 - T"), "S3");
        assert_eq!(g("Y^4 + T"), "D4");
        assert_eq!(g("Y^3 - 3*Y + T"), "S3");
        assert_eq!(g("Y^3 - T*Y - T"), "S3");
        assert!(matches!(
            galois_group_generic(&br, &br.parse("Y^2 - T^2").unwrap()),
            Err(HitError::Reducible { .. })
        ));
        let u = BiRing::new(fqu(5).unwrap());
        assert_eq!(
            galois_group_generic(&u, &u.parse("Y^2 - u*T").unwrap())
                .unwrap()
                .group
                .label,
            "C2"
        );
    }

    #[test]
    fn exceptional_examples() {
        let q = rationals();
        let c2 = GroupId::catalog("C2").unwrap();
        let s3 = GroupId::catalog("S3").unwrap();
        assert!(is_exceptional(&q, &c2, &qpoly(&[-9, 0, 1])).unwrap());
        assert!(!is_exceptional(&q, &c2, &qpoly(&[-5, 0, 1])).unwrap());
        assert!(is_exceptional(&q, &s3, &qpoly(&[-8, 0, 0, 1])).unwrap());
        // same group through both paths is never exceptional
        for c in [[-2i64, 0, 0, 1], [1, -3, 0, 1]] {
            let g = galois_group_specialized(&q, &qpoly(&c)).unwrap().group;
            assert!(!is_exceptional(&q, &g, &qpoly(&c)).unwrap());
        }
    }

    #[test]
    fn dedekind_examples() {
        let s = dedekind_sample(&qpoly(&[1, 0, 1]), &[3, 5, 7, 13]).unwrap();
        let types: Vec<Vec<usize>> = s.into_iter().map(|(_, t)| t).collect();
        assert_eq!(types, vec![vec![2], vec![1, 1], vec![2], vec![1, 1]]);
        // primes dividing the discriminant are skipped
        let s = dedekind_sample(&qpoly(&[-2, 0, 0, 1]), &[2, 3, 5]).unwrap();
        assert_eq!(s.iter().map(|(p, _)| *p).collect::<Vec<_>>(), vec![5]);
        let primes: Vec<u64> = primes_from(5).take(50).collect();
        let s = dedekind_sample(&qpoly(&[-2, 0, 0, 1]), &primes).unwrap();
        let seen: BTreeSet<Vec<usize>> = s.iter().map(|(_, t)| t.clone()).collect();
        assert!(seen.contains(&vec![3]) && seen.contains(&vec![1, 2]));
        let rep = dedekind_check(&GroupId::catalog("S3").unwrap(), &s).unwrap();
        assert!(rep.consistent && rep.generates);
        let rep = dedekind_check(&GroupId::catalog("C3").unwrap(), &s).unwrap();
        assert!(!rep.consistent);
    }

    #[test]
    fn resolvent_agrees_with_dedekind() {
        let primes: Vec<u64> = primes_from(3).take(80).collect();
        for c in [
            vec![-2i64, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![2, 0, -4, 0, 1],
            vec![12, 8, 0, 0, 1],
            vec![1, 1, 0, 0, 1],
            vec![1, -3, 0, 1],
        ] {
            let f = qpoly(&c);
            let g = galois_group_specialized(&rationals(), &f).unwrap().group;
            let rep = dedekind_check(&g, &dedekind_sample(&f, &primes).unwrap()).unwrap();
            assert!(rep.consistent && rep.generates, "{c:?} {}", g.label);
        }
    }
}
