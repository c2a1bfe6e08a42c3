//! Irreducibility in `K[T, Y]`, integral roots, and absolute irreducibility
//! of reductions modulo primes.

use num_integer::Integer;

use super::factor_mpoly;
use crate::arith::{FqField, Ring, MAX_EXTENSION_DEGREE};
use crate::error::{HitError, Result};
use crate::field::{liouville_root_bound, GlobalField, IntElem, Place};
use crate::poly::{BiPoly, BiRing, MPoly, MRing};

/// Total-degree cap for the irreducibility tests.
pub const MAX_BIPOLY_DEGREE: usize = 8;

/// Irreducible factors of `f` in `K[T, Y]` that are not units, each primitive.
pub fn factor_bipoly<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    seed: u64,
) -> Result<Vec<(BiPoly<K::Elem>, usize)>> {
    if br.is_zero(f) {
        return Err(HitError::ZeroPolynomial("zero polynomial in K[T,Y]".into()));
    }
    let m = br.mring();
    let n = m.nvars();
    let (_, fs) = factor_mpoly(&m, &br.to_mpoly(f), seed)?;
    fs.into_iter()
        .filter(|(h, _)| m.involves(h, n - 1) || m.involves(h, n - 2))
        .map(|(h, e)| Ok((br.primitive(&br.from_mpoly(&h))?, e)))
        .collect()
}

fn check_cap<K: GlobalField>(br: &BiRing<K>, f: &BiPoly<K::Elem>) -> Result<()> {
    let d = br.total_degree(f);
    if d > MAX_BIPOLY_DEGREE {
        return Err(HitError::DegreeCap(format!(
            "total degree {d} exceeds {MAX_BIPOLY_DEGREE}"
        )));
    }
    Ok(())
}

pub fn is_irreducible_bipoly<K: GlobalField>(br: &BiRing<K>, f: &BiPoly<K::Elem>) -> Result<bool> {
    check_cap(br, f)?;
    let fs = factor_bipoly(br, f, 0)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// `Err(Reducible)` carrying a nontrivial factor when `f` is not irreducible.
pub fn require_irreducible<K: GlobalField>(br: &BiRing<K>, f: &BiPoly<K::Elem>) -> Result<()> {
    check_cap(br, f)?;
    let fs = factor_bipoly(br, f, 0)?;
    match fs.as_slice() {
        [(_, 1)] => Ok(()),
        [] => Err(HitError::Reducible {
            factor: format!("{} is a unit", br.format(f)),
        }),
        [(g, _), ..] => Err(HitError::Reducible {
            factor: br.format(g),
        }),
    }
}

/// Roots of `f` lying in `O_K`, in factor order.
pub fn integral_roots<K: GlobalField>(k: &K, f: &[K::Elem]) -> Result<Vec<IntElem<K>>> {
    let fz = k.factor_y(f, 0)?;
    let mut roots = vec![];
    for (g, _) in &fz.factors {
        if g.len() != 2 {
            continue;
        }
        let r = k.neg(&g[0]);
        if let Some(x) = k.as_frac().as_integral(&r) {
            roots.push(x);
        }
    }
    if !roots.is_empty() {
        let q = crate::field::rationals();
        let bound = liouville_root_bound(k, f, Place::from(k))?;
        for r in &roots {
            let a = q.embed(&k.abs_inf(r));
            if &a.num * &bound.den > &bound.num * &a.den {
                return Err(HitError::Internal(
                    "root exceeds the Liouville bound".into(),
                ));
            }
        }
    }
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbsIrreducibility {
    pub value: bool,
    /// The reduction lost total degree or vanished; `value` then describes
    /// the reduced polynomial itself.
    pub degenerate: bool,
}

/// Whether `f mod prime` is irreducible over the algebraic closure of the
/// residue field. `f` must have coefficients in `O_K`.
///
/// If the reduction is irreducible over `F` but not absolutely, it is the
/// product of `r >= 2` Galois conjugates of equal bidegree, so `r` divides
/// both partial degrees, and the reduction already splits over `F_{q^l}` for
/// any prime `l | r`. Only those extensions are tried.
pub fn is_absolutely_irreducible_mod<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    prime: &IntElem<K>,
) -> Result<AbsIrreducibility> {
    check_cap(br, f)?;
    if !br.is_integral(f) {
        return Err(HitError::OutOfRange(
            "polynomial must have integral coefficients".into(),
        ));
    }
    let k = &br.k;
    let res = k.residue(prime)?;
    let field = res.field.clone();
    let ring = MRing::new(field.clone(), vec!["T", "Y"]);
    let mut red = MPoly::default();
    for ((i, j), c) in br.terms(f) {
        let x = k.reduce(&res, &c.num);
        crate::poly::add_term(&field, &mut red, vec![i as u32, j as u32], x);
    }
    let degenerate = ring.is_zero(&red) || (ring.total_degree(&red) as usize) < br.total_degree(f);
    let no = AbsIrreducibility {
        value: false,
        degenerate,
    };
    if ring.is_zero(&red) || ring.total_degree(&red) == 0 {
        return Ok(no);
    }
    if !irreducible_over(&ring, &red)? {
        return Ok(no);
    }
    let dt = ring.degree_in(&red, 0) as u64;
    let dy = ring.degree_in(&red, 1) as u64;
    let g = dt.gcd(&dy);
    for l in (2..=g).filter(|&l| g.is_multiple_of(l) && (2..l).all(|m| l % m != 0)) {
        let deg = field.k() * l as u32;
        if deg > MAX_EXTENSION_DEGREE {
            return Err(HitError::DegreeCap(format!(
                "extension of degree {deg} over F_p"
            )));
        }
        let ext = FqField::extension(field.p(), deg)?;
        let emb = field.embedding_into(&ext)?;
        let ering = MRing::new(ext.clone(), vec!["T", "Y"]);
        let lifted = MPoly {
            terms: red
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), emb.apply(c)))
                .collect(),
        };
        if !irreducible_over(&ering, &lifted)? {
            return Ok(no);
        }
    }
    Ok(AbsIrreducibility {
        value: true,
        degenerate,
    })
}

fn irreducible_over(ring: &MRing<FqField>, f: &MPoly<crate::arith::FqElem>) -> Result<bool> {
    let (_, fs) = factor_mpoly(ring, f, 0)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{fqu, rationals};
    use num_bigint::BigInt;

    #[test]
    fn irreducibility_over_q() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        assert!(is_irreducible_bipoly(&br, &p("Y^2 - T")).unwrap());
        assert!(!is_irreducible_bipoly(&br, &p("Y^2 - T^2")).unwrap());
        assert!(is_irreducible_bipoly(&br, &p("Y^2 - T^3 - T")).unwrap());
        assert!(!is_irreducible_bipoly(&br, &p("2")).unwrap());
        assert!(!is_irreducible_bipoly(&br, &p("T*Y + T")).unwrap());
        let err = require_irreducible(&br, &p("Y^2 - T^2")).unwrap_err();
        assert!(matches!(err, HitError::Reducible { .. }));
        assert!(matches!(
            is_irreducible_bipoly(&br, &p("Y^9 - T")),
            Err(HitError::DegreeCap(_))
        ));
    }

    #[test]
    fn irreducibility_over_fqu() {
        let br = BiRing::new(fqu(3).unwrap());
        let p = |s: &str| br.parse(s).unwrap();
        assert!(is_irreducible_bipoly(&br, &p("Y^2 - T")).unwrap());
        // u is a unit of K[T,Y]
        assert!(is_irreducible_bipoly(&br, &p("u*Y^2 - u*T")).unwrap());
        assert!(!is_irreducible_bipoly(&br, &p("Y^2 - u^2*T^2")).unwrap());
        assert!(is_irreducible_bipoly(&br, &p("Y^2 - u*T^2")).unwrap());
    }

    #[test]
    fn integral_root_examples() {
        let k = rationals();
        let v = |s: &[i64]| s.iter().map(|&x| k.from_i64(x)).collect::<Vec<_>>();
        let mut r = integral_roots(&k, &v(&[-4, 0, 1])).unwrap();
        r.sort();
        assert_eq!(r, vec![BigInt::from(-2), BigInt::from(2)]);
        assert!(integral_roots(&k, &v(&[-1, 2])).unwrap().is_empty());
        let u = fqu(3).unwrap();
        let f = vec![u.parse_elem("-u^2").unwrap(), u.zero(), u.one()];
        let r = integral_roots(&u, &f).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&u.parse_int("u").unwrap()));
        assert!(r.contains(&u.parse_int("-u").unwrap()));
    }

    #[test]
    fn absolute_irreducibility() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        let five = BigInt::from(5);
        assert!(
            is_absolutely_irreducible_mod(&br, &p("Y^2 - T"), &five)
                .unwrap()
                .value
        );
        assert!(
            !is_absolutely_irreducible_mod(&br, &p("Y^2 - T^2"), &five)
                .unwrap()
                .value
        );
        assert!(
            !is_absolutely_irreducible_mod(&br, &p("Y^2 + T^2"), &five)
                .unwrap()
                .value
        );
        // irreducible over F_3 but splits over F_9
        let r = is_absolutely_irreducible_mod(&br, &p("Y^2 + T^2"), &BigInt::from(3)).unwrap();
        assert!(!r.value && !r.degenerate);
        let r = is_absolutely_irreducible_mod(&br, &p("5*Y^2 + Y - T"), &five).unwrap();
        assert!(r.degenerate && r.value);
        let r = is_absolutely_irreducible_mod(&br, &p("5*Y^2 + 5*T"), &five).unwrap();
        assert!(r.degenerate && !r.value);
        let u = BiRing::new(fqu(3).unwrap());
        let pi = u.k.parse_int("u").unwrap();
        let g = u.parse("Y^2 - T - u").unwrap();
        assert!(is_absolutely_irreducible_mod(&u, &g, &pi).unwrap().value);
        let pi2 = u.k.parse_int("u^2 + 1").unwrap();
        let g = u.parse("Y^2 + T^2*u^2").unwrap();
        // mod u^2 + 1 this is Y^2 - T^2
        assert!(!is_absolutely_irreducible_mod(&u, &g, &pi2).unwrap().value);
    }
}
