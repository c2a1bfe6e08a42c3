//! Multivariate factorization over a constant field by Kronecker substitution:
//! factor the univariate image, then recombine subsets of its irreducible
//! factors and keep those whose preimage divides exactly.

use crate::arith::{ConstField, EuclideanDomain, PolyRing, Ring};
use crate::error::{HitError, Result};
use crate::poly::{MPoly, MRing};

/// Largest univariate image degree attempted.
pub const MAX_KRONECKER_DEGREE: u64 = 40_000;
/// Largest number of univariate factors recombined by subset search.
pub const MAX_RECOMBINATION_FACTORS: usize = 18;

pub type MFactors<E> = (E, Vec<(MPoly<E>, usize)>);

/// `f = unit * prod h^m` with each `h` irreducible, normalized so that its
/// leading coefficient in Kronecker order is one.
pub fn factor_mpoly<F: ConstField>(
    ring: &MRing<F>,
    f: &MPoly<F::Elem>,
    seed: u64,
) -> Result<MFactors<F::Elem>> {
    if ring.is_zero(f) {
        return Err(HitError::ZeroPolynomial("cannot factor zero".into()));
    }
    let field = &ring.field;
    let unit = ring.kronecker_lc(f);
    if ring.is_constant(f) {
        return Ok((unit, vec![]));
    }
    let radix: Vec<u32> = ring.degrees(f).iter().map(|d| d + 1).collect();
    let size: u64 = radix.iter().map(|&r| r as u64).product();
    if size > MAX_KRONECKER_DEGREE {
        return Err(HitError::DegreeCap(format!(
            "Kronecker image degree {size} exceeds {MAX_KRONECKER_DEGREE}"
        )));
    }
    let uring = PolyRing::new(field.clone(), "z");
    let image = ring.kronecker(f, &radix);
    let (_, ufactors) = field.factor_univariate(&image, seed);
    let mut list: Vec<Vec<F::Elem>> = vec![];
    for (g, m) in ufactors {
        for _ in 0..m {
            list.push(g.clone());
        }
    }
    if list.len() > MAX_RECOMBINATION_FACTORS {
        return Err(HitError::DegreeCap(format!(
            "{} univariate factors exceed the recombination cap {MAX_RECOMBINATION_FACTORS}",
            list.len()
        )));
    }

    let mut rest = ring.scale(f, &field.inv(&unit).unwrap());
    let mut found: Vec<MPoly<F::Elem>> = vec![];
    let mut k = 1;
    'outer: while !list.is_empty() {
        if 2 * k > list.len() {
            found.push(rest.clone());
            break;
        }
        let rest_image = ring.kronecker(&rest, &radix);
        let rest_deg = ring.degrees(&rest);
        for subset in super::Subsets::new(list.len(), k) {
            // repeated factors: only take the first copies of each
            if subset
                .iter()
                .any(|&j| j > 0 && list[j - 1] == list[j] && !subset.contains(&(j - 1)))
            {
                continue;
            }
            let prod = subset
                .iter()
                .fold(uring.one(), |acc, &i| uring.mul(&acc, &list[i]));
            let h = ring.unkronecker(&prod, &radix);
            if ring.degrees(&h).iter().zip(&rest_deg).any(|(a, b)| a > b) {
                continue;
            }
            let Some(qu) = uring.exact_div(&rest_image, &prod) else {
                continue;
            };
            let quot = ring.unkronecker(&qu, &radix);
            if ring.mul(&h, &quot) != rest {
                continue;
            }
            found.push(h);
            rest = quot;
            list = list
                .into_iter()
                .enumerate()
                .filter(|(i, _)| !subset.contains(i))
                .map(|(_, g)| g)
                .collect();
            continue 'outer;
        }
        k += 1;
    }

    let mut out: Vec<(MPoly<F::Elem>, usize)> = vec![];
    for h in found {
        if ring.is_constant(&h) {
            continue;
        }
        match out.iter_mut().find(|(g, _)| *g == h) {
            Some((_, m)) => *m += 1,
            None => out.push((h, 1)),
        }
    }
    Ok((unit, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FqField;
    use crate::field::rationals;

    #[test]
    fn bivariate_over_q() {
        let q = rationals();
        let r = MRing::new(q.clone(), vec!["T", "Y"]);
        let t = r.var(0);
        let y = r.var(1);
        // (Y - T)(Y + T)^2 (Y^2 - T)
        let a = r.sub(&y, &t);
        let b = r.add(&y, &t);
        let c = r.sub(&r.mul(&y, &y), &t);
        let f = r.mul(&r.mul(&a, &r.mul(&b, &b)), &c);
        let f = r.scale(&f, &q.from_i64(-3));
        let (unit, fs) = factor_mpoly(&r, &f, 0).unwrap();
        assert_eq!(unit, q.from_i64(-3));
        assert_eq!(fs.len(), 3);
        let mut prod = r.constant(unit);
        for (g, m) in &fs {
            prod = r.mul(&prod, &r.pow(g, *m as u64));
        }
        assert_eq!(prod, f);
        assert!(fs.iter().any(|(g, m)| *g == b && *m == 2));
    }

    #[test]
    fn trivariate_over_f3() {
        let f3 = FqField::new(3).unwrap();
        let r = MRing::new(f3.clone(), vec!["u", "T", "Y"]);
        let (u, t, y) = (r.var(0), r.var(1), r.var(2));
        // (Y^2 - u T)(Y + u + T)
        let a = r.sub(&r.mul(&y, &y), &r.mul(&u, &t));
        let b = r.add(&y, &r.add(&u, &t));
        let (_, fs) = factor_mpoly(&r, &r.mul(&a, &b), 3).unwrap();
        assert_eq!(fs.len(), 2);
        let (_, fs) = factor_mpoly(&r, &a, 0).unwrap();
        assert_eq!(fs, vec![(a.clone(), 1)]);
    }
}
