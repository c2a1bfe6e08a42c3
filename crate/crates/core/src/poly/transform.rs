//! Discriminant, monicization and the shift `Y -> T^E + Y`.

use super::bipoly::{BiPoly, BiRing};
use crate::arith::{det_bareiss, EuclideanDomain, Ring, UPoly};
use crate::error::{HitError, Result};
use crate::field::{height_affine, GlobalField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant<E> {
    /// `Delta(T)` as a polynomial in `T`; zero when inseparable.
    pub value: UPoly<E>,
    /// `dF/dY` vanishes identically (characteristic `p` dividing every exponent).
    pub inseparable: bool,
}

/// `Delta(T) = (-1)^{d(d-1)/2} Res_Y(F, dF/dY) / a_0(T)`, with `dF/dY` taken at
/// formal degree `d_Y - 1`.
pub fn discriminant_y<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
) -> Result<Discriminant<K::Elem>> {
    let d = br.d_y(f);
    if br.is_zero(f) || d == 0 {
        return Err(HitError::ZeroPolynomial(
            "discriminant needs deg_Y >= 1".into(),
        ));
    }
    let df = br.derivative_y(f);
    if br.is_zero(&df) {
        return Ok(Discriminant {
            value: vec![],
            inseparable: true,
        });
    }
    let tr = &br.t;
    if d == 1 {
        return Ok(Discriminant {
            value: tr.one(),
            inseparable: false,
        });
    }
    // Sylvester matrix of f (degree d) and f' (formal degree d - 1)
    let size = 2 * d - 1;
    let mut rows = vec![];
    for r in 0..d - 1 {
        let mut row = vec![tr.zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[r + d - j] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..d {
        let mut row = vec![tr.zero(); size];
        for (j, c) in df.iter().enumerate() {
            row[r + d - 1 - j] = c.clone();
        }
        rows.push(row);
    }
    let res = det_bareiss(tr, &rows);
    let a0 = br.a0(f);
    let mut disc = tr.exact_div(&res, &a0).ok_or_else(|| {
        HitError::Internal("leading coefficient does not divide the resultant".into())
    })?;
    if (d * (d - 1) / 2) % 2 == 1 {
        disc = tr.neg(&disc);
    }
    Ok(Discriminant {
        value: disc,
        inseparable: false,
    })
}

/// `G(T, Y) = a_0^{d_Y - 1} F(T, Y / a_0)`, monic in `Y`; roots map `y -> a_0(t) y`.
pub fn monicize<K: GlobalField>(br: &BiRing<K>, f: &BiPoly<K::Elem>) -> Result<BiPoly<K::Elem>> {
    let d = br.d_y(f);
    if br.is_zero(f) || d == 0 {
        return Err(HitError::ZeroPolynomial("monicize needs deg_Y >= 1".into()));
    }
    let tr = &br.t;
    let a0 = br.a0(f);
    let mut g = vec![tr.zero(); d + 1];
    g[d] = tr.one();
    let mut pw = tr.one();
    for j in (0..d).rev() {
        g[j] = tr.mul(&f[j], &pw);
        pw = tr.mul(&pw, &a0);
    }
    Ok(br.y.trim(g))
}

/// `E = floor(d_T d_Y L1 / L2) + 1` with `L1 = ln H`, `L2 = ln L1` and
/// `H = max(e^e, H_aff)` given through `ln_h_aff`.
pub fn shift_exponent_from(d_t: usize, d_y: usize, ln_h_aff: f64) -> u64 {
    let l1 = ln_h_aff.max(std::f64::consts::E);
    let l2 = l1.ln();
    ((d_t * d_y) as f64 * l1 / l2).floor() as u64 + 1
}

pub fn shift_exponent<K: GlobalField>(br: &BiRing<K>, p: &BiPoly<K::Elem>) -> Result<u64> {
    let (dt, dy) = (br.d_t(p), br.d_y(p));
    if dt == 0 || dy == 0 {
        return Err(HitError::OutOfRange(
            "shift exponent needs d_T, d_Y >= 1".into(),
        ));
    }
    let h = height_affine(&br.k, &br.coefficients(p))?;
    Ok(shift_exponent_from(dt, dy, h.ln()))
}

/// `G(T, Y) = P(T, T^E + Y)`.
pub fn shift_transform<K: GlobalField>(
    br: &BiRing<K>,
    p: &BiPoly<K::Elem>,
    e: u64,
) -> Result<BiPoly<K::Elem>> {
    if e == 0 {
        return Err(HitError::OutOfRange("shift exponent must be >= 1".into()));
    }
    let tr = &br.t;
    let s = br.add(&vec![tr.monomial(br.k.one(), e as usize)], &br.var_y());
    let mut acc = br.zero();
    for c in p.iter().rev() {
        acc = br.add(&br.mul(&acc, &s), &br.y.constant(c.clone()));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{fqu, rationals};
    use proptest::prelude::*;

    #[test]
    fn discriminants() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        let t = |s: &str| br.a0(&p(s));
        assert_eq!(discriminant_y(&br, &p("Y^2 - T")).unwrap().value, t("4*T"));
        assert_eq!(
            discriminant_y(&br, &p("Y^3 + T")).unwrap().value,
            t("-27*T^2")
        );
        // b^2 - 4ac with a = T
        assert_eq!(
            discriminant_y(&br, &p("T*Y^2 + Y + 1")).unwrap().value,
            t("1 - 4*T")
        );
        let b2 = BiRing::new(fqu(2).unwrap());
        let d = discriminant_y(&b2, &b2.parse("Y^2 - T").unwrap()).unwrap();
        assert!(d.inseparable && d.value.is_empty());
    }

    #[test]
    fn monicize_examples() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        assert_eq!(
            monicize(&br, &p("2*Y^2 + T*Y + 3")).unwrap(),
            p("Y^2 + T*Y + 6")
        );
        assert_eq!(
            monicize(&br, &p("Y^2 + T*Y + 1")).unwrap(),
            p("Y^2 + T*Y + 1")
        );
        assert_eq!(
            monicize(&br, &p("T*Y^2 + Y + 1")).unwrap(),
            p("Y^2 + Y + T")
        );
    }

    #[test]
    fn shift_exponents() {
        let e = std::f64::consts::E;
        assert_eq!(shift_exponent_from(2, 2, 3f64.ln()), 11);
        assert_eq!(shift_exponent_from(1, 1, e), 3);
        assert_eq!(shift_exponent_from(1, 1, e * e), 4);
        let br = BiRing::new(rationals());
        let f = br.parse("T*Y^2 + 3*T^2 - 1").unwrap();
        assert_eq!(shift_exponent(&br, &f).unwrap(), 11);
    }

    #[test]
    fn shift_examples() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        assert_eq!(
            shift_transform(&br, &p("Y^2 - T"), 2).unwrap(),
            p("Y^2 + 2*T^2*Y + T^4 - T")
        );
        assert_eq!(shift_transform(&br, &p("Y"), 1).unwrap(), p("T + Y"));
        let g = shift_transform(&br, &p("Y^2 - T"), 2).unwrap();
        let k = &br.k;
        for y in [-18, -14] {
            assert!(k.is_zero(&br.eval(&g, &k.from_i64(4), &k.from_i64(y))));
        }
    }

    fn arb_bipoly() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-4i64..5, 1..4), 2..5)
    }

    proptest! {
        #[test]
        fn monicize_degrees_and_roots(c in arb_bipoly(), t in -6i64..7) {
            let br = BiRing::new(rationals());
            let k = &br.k;
            let f: BiPoly<_> = br.y.trim(c.iter().map(|v| br.t.trim(v.iter().map(|&x| k.from_i64(x)).collect())).collect());
            prop_assume!(br.d_y(&f) >= 1);
            let g = monicize(&br, &f).unwrap();
            prop_assert_eq!(br.d_y(&g), br.d_y(&f));
            prop_assert!(br.d_t(&g) <= br.d_t(&f) * br.d_y(&f));
            // G(t, a0(t) y) = a0(t)^{d-1} F(t, y) at integer points
            let tt = k.from_i64(t);
            let a0 = br.t.eval(&br.a0(&f), &tt);
            for y in -3i64..4 {
                let yy = k.from_i64(y);
                let lhs = br.eval(&g, &tt, &k.mul(&a0, &yy));
                let rhs = k.mul(&k.pow(&a0, br.d_y(&f) as u64 - 1), &br.eval(&f, &tt, &yy));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn shift_zero_correspondence(c in arb_bipoly(), e in 1u64..4, t in -4i64..5, y in -20i64..20) {
            let br = BiRing::new(rationals());
            let k = &br.k;
            let p: BiPoly<_> = br.y.trim(c.iter().map(|v| br.t.trim(v.iter().map(|&x| k.from_i64(x)).collect())).collect());
            let g = shift_transform(&br, &p, e).unwrap();
            let tt = k.from_i64(t);
            let yy = k.from_i64(y);
            let shifted = k.add(&yy, &k.pow(&tt, e));
            prop_assert_eq!(br.eval(&g, &tt, &yy), br.eval(&p, &tt, &shifted));
            if br.d_y(&p) >= 1 && e > br.d_t(&p) as u64 {
                let d = br.total_degree(&g) as u64;
                let dy = br.d_y(&p) as u64;
                prop_assert!(d >= dy * e && d <= dy * e + br.d_t(&p) as u64);
            }
        }

        #[test]
        fn specialize_is_a_morphism(a in arb_bipoly(), b in arb_bipoly(), t in -5i64..6) {
            let br = BiRing::new(rationals());
            let k = &br.k;
            let mk = |c: &Vec<Vec<i64>>| br.y.trim(c.iter().map(|v| br.t.trim(v.iter().map(|&x| k.from_i64(x)).collect())).collect::<Vec<_>>());
            let (f, g) = (mk(&a), mk(&b));
            let tt = k.from_i64(t);
            let ky = crate::arith::PolyRing::new(k.clone(), "Y");
            prop_assert_eq!(
                br.specialize(&br.mul(&f, &g), &tt),
                ky.mul(&br.specialize(&f, &tt), &br.specialize(&g, &tt))
            );
        }
    }
}
