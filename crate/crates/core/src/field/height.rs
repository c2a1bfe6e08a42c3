use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rationals, GlobalField, IntElem, QElem};
use crate::arith::{ln_bigint, EuclideanDomain, Field, Ring};
use crate::error::{HitError, Result};

/// Exact positive rational height with its natural logarithm.
#[derive(Clone, Debug, PartialEq)]
pub struct Height {
    value: QElem,
    ln: f64,
}

impl Height {
    pub fn new(value: QElem) -> Self {
        let ln = ln_bigint(&value.num) - ln_bigint(&value.den);
        Height { value, ln }
    }
    pub fn value(&self) -> &QElem {
        &self.value
    }
    pub fn ln(&self) -> f64 {
        self.ln
    }
    pub fn log2(&self) -> f64 {
        self.ln / std::f64::consts::LN_2
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rationals().fmt_elem(&self.value))
    }
}

fn zero_error() -> HitError {
    HitError::ZeroPolynomial("zero polynomial has no height".into())
}

/// Normalized gcd of the coefficients of a polynomial over `O_K`.
pub fn content<K: GlobalField>(k: &K, coeffs: &[IntElem<K>]) -> Result<IntElem<K>> {
    let r = k.ints();
    let g = coeffs.iter().fold(r.zero(), |acc, c| r.gcd(&acc, c));
    if r.is_zero(&g) {
        return Err(HitError::ZeroPolynomial("zero has no content".into()));
    }
    Ok(g)
}

/// `(lambda, lambda * F)` with `lambda * F` integral of content one.
/// Zero coefficients stay in place.
pub fn normalize_primitive<K: GlobalField>(
    k: &K,
    coeffs: &[K::Elem],
) -> Result<(K::Elem, Vec<IntElem<K>>)> {
    let r = k.ints();
    let l = coeffs.iter().fold(r.one(), |acc, c| r.lcm(&acc, &c.den));
    let scaled: Vec<IntElem<K>> = coeffs
        .iter()
        .map(|c| r.mul(&c.num, &r.exact_div(&l, &c.den).expect("lcm divisible")))
        .collect();
    let g = content(k, &scaled).map_err(|_| zero_error())?;
    let prim = scaled
        .iter()
        .map(|c| r.exact_div(c, &g).expect("content divides"))
        .collect();
    let lambda = k.as_frac().make(l, g);
    Ok((lambda, prim))
}

/// `H_K(F)`: the largest infinite absolute value among the coefficients of
/// the primitive associate.
pub fn height_projective<K: GlobalField>(k: &K, coeffs: &[K::Elem]) -> Result<Height> {
    let (_, prim) = normalize_primitive(k, coeffs)?;
    let m = prim.iter().map(|c| k.abs_inf(c)).max().unwrap_or_default();
    Ok(Height::new(rationals().embed(&m)))
}

/// `H_{K,aff}(F) = prod_v max(1, |F|_v)`: the infinite place contributes
/// `max(1, max |c|)`, the finite places the norm of the common denominator.
pub fn height_affine<K: GlobalField>(k: &K, coeffs: &[K::Elem]) -> Result<Height> {
    if coeffs.iter().all(|c| k.is_zero(c)) {
        return Err(zero_error());
    }
    let r = k.ints();
    let q = rationals();
    let mut inf = q.one();
    for c in coeffs {
        let a = k.abs_k(c);
        if &a.num * &inf.den > &inf.num * &a.den {
            inf = a;
        }
    }
    let l = coeffs.iter().fold(r.one(), |acc, c| r.lcm(&acc, &c.den));
    Ok(Height::new(q.mul(&inf, &q.embed(&k.abs_inf(&l)))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Archimedean,
    NonArchimedean,
}

impl<K: GlobalField> From<&K> for Place {
    fn from(k: &K) -> Place {
        if k.inner_vars() == 0 {
            Place::Archimedean
        } else {
            Place::NonArchimedean
        }
    }
}

/// Liouville bound on `|y|` for roots `y` of `f` at the infinite place of K:
/// `1 + max|a_i| / |a_d|` (archimedean) or `max|a_i| / |a_d|` (ultrametric).
pub fn liouville_root_bound<K: GlobalField>(k: &K, f: &[K::Elem], place: Place) -> Result<QElem> {
    if place != Place::from(k) {
        return Err(HitError::OutOfRange(format!(
            "{place:?} is not the infinite place of {}",
            k.base_field()
        )));
    }
    if f.len() < 2 || k.is_zero(f.last().unwrap()) {
        return Err(HitError::OutOfRange(
            "Liouville bound needs degree >= 1".into(),
        ));
    }
    let q = rationals();
    let mut m = QElem {
        num: BigInt::zero(),
        den: BigInt::one(),
    };
    for c in f {
        let a = k.abs_k(c);
        if &a.num * &m.den > &m.num * &a.den {
            m = a;
        }
    }
    let ratio = q.div(&m, &k.abs_k(f.last().unwrap())).unwrap();
    Ok(match place {
        Place::Archimedean => q.add(&q.one(), &ratio),
        Place::NonArchimedean => ratio,
    })
}
