//! Bound kernels with the implicit constant set to 1, the characteristic
//! bracket `[a_1, a_2]`, `beta` and a truncated `b(P)`. Everything is kept in
//! log space.

mod kernel;

pub use crate::galois::{delta_gamma, DeltaGamma};
pub use kernel::{
    bp_heights, kernel, BoundKernel, Hit3Count, KernelFactor, KernelParams, TheoremTag,
};

use serde::{Deserialize, Serialize};

use crate::error::{HitError, Result};
use crate::factor::{is_absolutely_irreducible_mod, is_irreducible_bipoly};
use crate::field::{BaseField, GlobalField, IntElem};
use crate::poly::{BiPoly, BiRing};

/// `[a_1, a_2]`: `a_1` in characteristic zero, `a_2` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharBracket {
    pub value_char0: f64,
    pub value_charp: f64,
}

impl CharBracket {
    pub const fn new(value_char0: f64, value_charp: f64) -> Self {
        CharBracket {
            value_char0,
            value_charp,
        }
    }

    pub fn select(&self, characteristic: u64) -> f64 {
        if characteristic == 0 {
            self.value_char0
        } else {
            self.value_charp
        }
    }
}

pub fn bracket_select(b: CharBracket, field: BaseField) -> f64 {
    b.select(field.characteristic())
}

/// `27 d^4` in characteristic 0, `d^{14/3}` for `0 < p <= max(27 d^4, c1)`, else 1.
pub fn beta(d: u32, field: BaseField, c1: f64) -> f64 {
    let d4 = 27.0 * (d as f64).powi(4);
    match field.characteristic() {
        0 => d4,
        p if p as f64 <= d4.max(c1) => (d as f64).powf(14.0 / 3.0),
        _ => 1.0,
    }
}

/// Truncated `b(P)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BOfP {
    pub value: f64,
    pub ln_value: f64,
    /// Primes with norm in `(max(beta, c1), cutoff]` where `P mod p` is not
    /// absolutely irreducible.
    pub bad_primes: Vec<String>,
    pub absolutely_irreducible: bool,
    /// The absolute irreducibility verdict rests on reductions at small
    /// primes only (set when `P` was declared not absolutely irreducible).
    pub heuristic: bool,
    /// The prime set is known to be exhausted by the cutoff.
    pub complete: bool,
}

/// Number of small primes tried when deciding absolute irreducibility.
const GOOD_PRIMES: usize = 3;

/// `b(P) = prod exp(ln N(p) / N(p))` over the bad primes up to `cutoff` (a
/// norm bound), or 0 when `P` is not absolutely irreducible. `complete` is
/// false unless the caller asserts the cutoff is sufficient.
pub fn b_of_p<K: GlobalField>(
    br: &BiRing<K>,
    p: &BiPoly<K::Elem>,
    cutoff: f64,
    assume_complete: bool,
) -> Result<BOfP> {
    let k = &br.k;
    if !br.is_integral(p) {
        return Err(HitError::OutOfRange(
            "b(P) needs integral coefficients".into(),
        ));
    }
    let d = br.total_degree(p) as u32;
    if d == 0 {
        return Err(HitError::OutOfRange(
            "b(P) needs a nonconstant polynomial".into(),
        ));
    }
    let zero = |heuristic| BOfP {
        value: 0.0,
        ln_value: f64::NEG_INFINITY,
        bad_primes: vec![],
        absolutely_irreducible: false,
        heuristic,
        complete: true,
    };
    if !is_irreducible_bipoly(br, p)? {
        return Ok(zero(false));
    }
    if !absolutely_irreducible(br, p)? {
        return Ok(zero(true));
    }
    let floor = beta(d, k.base_field(), 1.0).max(1.0);
    let mut ln_value = 0.0;
    let mut bad_primes = vec![];
    if cutoff > floor {
        for pr in k.primes_up_to(cutoff.ln() + 1e-9) {
            let ln_n = k.ln_abs_inf(&pr);
            if ln_n <= floor.ln() + 1e-12 {
                continue;
            }
            if !is_absolutely_irreducible_mod(br, p, &pr)?.value {
                ln_value += ln_n / ln_n.exp();
                bad_primes.push(k.format_int_canonical(&pr));
            }
        }
    }
    Ok(BOfP {
        value: ln_value.exp(),
        ln_value,
        bad_primes,
        absolutely_irreducible: true,
        heuristic: false,
        complete: assume_complete,
    })
}

/// Absolute irreducibility of an irreducible `P`: some reduction of the same
/// total degree among the first few such primes is absolutely irreducible.
/// A `true` answer is certain; `false` is heuristic.
pub fn absolutely_irreducible<K: GlobalField>(br: &BiRing<K>, p: &BiPoly<K::Elem>) -> Result<bool> {
    let k = &br.k;
    let mut ln_max = 4.0f64;
    let mut tried: Vec<IntElem<K>> = vec![];
    while tried.len() < GOOD_PRIMES && ln_max < 40.0 {
        for pr in k.primes_up_to(ln_max) {
            if tried.len() == GOOD_PRIMES {
                break;
            }
            if tried.contains(&pr) {
                continue;
            }
            let r = match is_absolutely_irreducible_mod(br, p, &pr) {
                Ok(r) => r,
                // residue fields too large for the extension cap are skipped
                Err(HitError::DegreeCap(_)) => continue,
                Err(e) => return Err(e),
            };
            if r.degenerate {
                continue;
            }
            if r.value {
                return Ok(true);
            }
            tried.push(pr);
        }
        ln_max *= 2.0;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{fqu, rationals};
    use proptest::prelude::*;

    #[test]
    fn brackets() {
        let q = BaseField::Q;
        let f3 = BaseField::FqU { q: 3 };
        let b = CharBracket::new(25.0 * 2.0, 36.0 * 2.0);
        assert_eq!(bracket_select(b, q), 50.0);
        assert_eq!(bracket_select(b, f3), 72.0);
        assert_eq!(bracket_select(CharBracket::new(1.0, 0.0), f3), 0.0);
    }

    #[test]
    fn beta_branches() {
        assert_eq!(beta(2, BaseField::Q, 1.0), 432.0);
        assert!((beta(2, BaseField::FqU { q: 3 }, 1.0) - 25.398).abs() < 1e-3);
        assert_eq!(beta(1, BaseField::FqU { q: 29 }, 1.0), 1.0);
        // p = 27 * 1^4 is not above the threshold
        assert_eq!(beta(1, BaseField::FqU { q: 27 }, 1.0), 1.0);
        assert_eq!(beta(1, BaseField::FqU { q: 23 }, 1.0), 1.0);
        assert_eq!(beta(1, BaseField::FqU { q: 23 }, 30.0), 1.0);
    }

    #[test]
    fn b_of_p_examples() {
        let br = BiRing::new(rationals());
        let p = |s: &str| br.parse(s).unwrap();
        let r = b_of_p(&br, &p("Y^2 - T"), 1000.0, false).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.bad_primes.is_empty() && !r.complete && r.absolutely_irreducible);
        // irreducible over Q, splits over Q(i)
        let r = b_of_p(&br, &p("Y^2 + T^2"), 1000.0, false).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.heuristic);
        assert_eq!(
            b_of_p(&br, &p("Y^2 - T^2"), 1000.0, false).unwrap().value,
            0.0
        );
        // the conic Y^2 - T^2 - 433 degenerates exactly at 433 > beta = 432
        let f = p("Y^2 - T^2 - 433");
        let r = b_of_p(&br, &f, 500.0, false).unwrap();
        assert_eq!(r.bad_primes, vec!["433".to_string()]);
        let expect = (433f64.ln() / 433.0).exp();
        assert!((r.value - expect).abs() < 1e-12);
        assert_eq!(b_of_p(&br, &f, 432.0, true).unwrap().value, 1.0);
        assert!(b_of_p(&br, &f, 100.0, true).unwrap().complete);
    }

    #[test]
    fn b_of_p_over_fqu() {
        let br = BiRing::new(fqu(3).unwrap());
        let r = b_of_p(&br, &br.parse("Y^2 - T").unwrap(), 81.0, false).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.absolutely_irreducible);
        // Y^2 - u T^2 is irreducible over F_3(u) but not over its closure
        let r = b_of_p(&br, &br.parse("Y^2 - u*T^2").unwrap(), 81.0, false).unwrap();
        assert_eq!(r.value, 0.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn b_of_p_monotone_in_cutoff(a in 1i64..40, c1 in 430f64..600.0, c2 in 0f64..200.0) {
            let br = BiRing::new(rationals());
            let f = br.parse(&format!("Y^2 - T^2 - {a}*T - 433")).unwrap();
            prop_assume!(is_irreducible_bipoly(&br, &f).unwrap());
            let lo = b_of_p(&br, &f, c1, false).unwrap();
            let hi = b_of_p(&br, &f, c1 + c2, false).unwrap();
            prop_assert!(hi.value >= lo.value);
        }
    }
}
