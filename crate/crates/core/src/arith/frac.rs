use num_bigint::BigInt;

use super::{EuclideanDomain, Field, Ring};

/// Reduced fraction `num / den` with `den` a canonical associate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracElem<E> {
    pub num: E,
    pub den: E,
}

/// Fraction field of a Euclidean domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac<R> {
    pub ring: R,
}

impl<R: EuclideanDomain> Frac<R> {
    pub fn new(ring: R) -> Self {
        Frac { ring }
    }

    /// Builds the reduced fraction `num / den`. Panics on a zero denominator.
    pub fn make(&self, num: R::Elem, den: R::Elem) -> FracElem<R::Elem> {
        let r = &self.ring;
        assert!(!r.is_zero(&den), "zero denominator");
        if r.is_zero(&num) {
            return FracElem { num, den: r.one() };
        }
        let g = r.gcd(&num, &den);
        let (mut n, mut d) = if r.is_one(&g) {
            (num, den)
        } else {
            (
                r.exact_div(&num, &g).expect("gcd divides"),
                r.exact_div(&den, &g).expect("gcd divides"),
            )
        };
        let u = r.canonical_unit(&d);
        if !r.is_one(&u) {
            n = r.mul(&n, &u);
            d = r.mul(&d, &u);
        }
        FracElem { num: n, den: d }
    }

    pub fn embed(&self, x: &R::Elem) -> FracElem<R::Elem> {
        FracElem {
            num: x.clone(),
            den: self.ring.one(),
        }
    }

    /// The element as a ring element, when its denominator is one.
    pub fn as_integral(&self, x: &FracElem<R::Elem>) -> Option<R::Elem> {
        self.ring.is_one(&x.den).then(|| x.num.clone())
    }
}

impl<R: EuclideanDomain> Ring for Frac<R> {
    type Elem = FracElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(&self.ring.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.ring.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.ring.is_zero(&a.num)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        if r.is_zero(&a.num) {
            return b.clone();
        }
        if r.is_zero(&b.num) {
            return a.clone();
        }
        if a.den == b.den {
            return self.make(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.make(num, r.mul(&a.den, &b.den))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        FracElem {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        if r.is_zero(&a.num) || r.is_zero(&b.num) {
            return self.zero();
        }
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return self.embed(&r.mul(&a.num, &b.num));
        }
        self.make(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.embed(&self.ring.from_bigint(n))
    }
    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let r = &self.ring;
        let n = r.fmt_elem(&a.num);
        if r.is_one(&a.den) {
            return n;
        }
        let d = r.fmt_elem(&a.den);
        let wrap = |s: String, den: bool| {
            if s.contains([' ', '+']) || s[1..].contains('-') || (den && s.contains(['*', '/'])) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, false), wrap(d, true))
    }
}

impl<R: EuclideanDomain> Field for Frac<R> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.make(a.den.clone(), a.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::Integers;
    use super::*;
    use proptest::prelude::*;

    fn q() -> Frac<Integers> {
        Frac::new(Integers)
    }

    #[test]
    fn reduces_and_signs() {
        let x = q().make(BigInt::from(6), BigInt::from(-4));
        assert_eq!(x.num, BigInt::from(-3));
        assert_eq!(x.den, BigInt::from(2));
        assert_eq!(q().fmt_elem(&x), "-3/2");
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent(n in -1000i64..1000, d in 1i64..1000, s in prop::bool::ANY) {
            let d = if s { -d } else { d };
            let once = q().make(BigInt::from(n), BigInt::from(d));
            let twice = q().make(once.num.clone(), once.den.clone());
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.den > BigInt::from(0));
        }
    }
}
