//! Exact arithmetic: integers, fraction fields, prime-power finite fields and
//! univariate polynomial rings over them.
//!
//! Rings are context objects. An element type carries no reference to its
//! parent, so every operation goes through the ring value (`ring.add(&a, &b)`).
//! This lets runtime-parameterized structures such as `FqField` (q chosen on
//! the command line) share code with `Integers` and the rationals.

use std::fmt::Debug;
use std::hash::Hash;

mod fq;
mod frac;
mod integer;
mod linalg;
mod squarefree;
pub mod text;
mod upoly;

pub use fq::{FqElem, FqEmbedding, FqField, MAX_EXTENSION_DEGREE};
pub use frac::{Frac, FracElem};
pub(crate) use integer::{exact_sqrt, is_probable_prime_u64, prime_power, primes_from};
pub use integer::{ln_bigint, Integers};
pub use linalg::{det_bareiss, det_field};
pub use squarefree::squarefree_decomposition;
pub(crate) use upoly::format_terms;
pub use upoly::{PolyRing, UPoly};

use num_bigint::BigInt;

/// Commutative ring with identity, accessed through a context value.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Integral domain with a Euclidean division and a canonical associate in each
/// class (positive integers, monic polynomials).
pub trait EuclideanDomain: Ring {
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Unit `u` such that `u * a` is the canonical associate of `a`.
    /// For zero returns one.
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// Size used to decide termination of Euclid's algorithm; only comparisons matter.
    fn euclid_size(&self, a: &Self::Elem) -> u64;

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.canonical_unit(a), a)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut x = a.clone();
        let mut y = b.clone();
        while !self.is_zero(&y) {
            let (_, r) = self.div_rem(&x, &y);
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    fn lcm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let q = self.exact_div(a, &g).expect("gcd divides");
        self.normalize(&self.mul(&q, b))
    }

    /// `a / b` if `b` divides `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, b).1)
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// Fields of constants over which the factorization engine works: univariate
/// factorization and square testing are available.
pub trait ConstField: Field {
    /// Complete factorization of a nonzero univariate polynomial:
    /// `(leading coefficient, [(monic irreducible, multiplicity)])`.
    fn factor_univariate(
        &self,
        f: &[Self::Elem],
        seed: u64,
    ) -> (Self::Elem, Vec<(Vec<Self::Elem>, usize)>);

    fn is_square(&self, a: &Self::Elem) -> bool;

    /// The `p`-th root of `a` in characteristic `p` (fields here are perfect).
    /// Unused in characteristic zero.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }
}
