//! Factorization over the rationals: squarefree split, modular factorization
//! at a small good prime, Hensel lifting, and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fq::factor_fq;
use crate::arith::{
    squarefree_decomposition, ConstField, EuclideanDomain, FqElem, FqField, Frac, FracElem,
    Integers, PolyRing, Ring,
};

type ZPoly = Vec<BigInt>;
type QElem = FracElem<BigInt>;

/// Number of good primes tried; the one with fewest modular factors wins.
const PRIME_TRIALS: usize = 4;

impl ConstField for Frac<Integers> {
    fn factor_univariate(&self, f: &[QElem], _seed: u64) -> (QElem, Vec<(Vec<QElem>, usize)>) {
        factor_q(f)
    }

    fn is_square(&self, a: &QElem) -> bool {
        crate::arith::exact_sqrt(&a.num).is_some() && crate::arith::exact_sqrt(&a.den).is_some()
    }
}

/// `(lc, [(monic irreducible, multiplicity)])` over the rationals.
pub fn factor_q(f: &[QElem]) -> (QElem, Vec<(Vec<QElem>, usize)>) {
    let q = Frac::new(Integers);
    let ring = PolyRing::new(q.clone(), "Y");
    let f = ring.trim(f.to_vec());
    assert!(!f.is_empty(), "factoring the zero polynomial");
    let lc = f.last().unwrap().clone();
    let mut out = vec![];
    for (g, m) in squarefree_decomposition(&ring, &f) {
        for h in factor_squarefree_z(&primitive_z(&g)) {
            let monic = ring.monic(&h.iter().map(|c| q.embed(c)).collect::<Vec<_>>());
            out.push((monic, m));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        a.len()
            .cmp(&b.len())
            .then_with(|| cmp_q_poly(a, b))
            .then(ma.cmp(mb))
    });
    (lc, out)
}

fn cmp_q_poly(a: &[QElem], b: &[QElem]) -> std::cmp::Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        let o = (&x.num * &y.den).cmp(&(&y.num * &x.den));
        if o.is_ne() {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

/// Primitive integer associate with positive leading coefficient.
pub(crate) fn primitive_z(f: &[QElem]) -> ZPoly {
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.den));
    let mut v: ZPoly = f.iter().map(|c| &c.num * (&l / &c.den)).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division in `Z[x]`.
fn zdiv(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if a.len() < b.len() {
        return if a.iter().all(|c| c.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r[..db].iter().all(|c| c.is_zero()).then_some(q)
}

fn content_z(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part_z(f: &[BigInt]) -> ZPoly {
    let g = content_z(f);
    let s = if f.last().is_some_and(|c| c.is_negative()) {
        -g
    } else {
        g
    };
    f.iter().map(|c| c / &s).collect()
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive integer polynomial.
pub(crate) fn factor_squarefree_z(h: &[BigInt]) -> Vec<ZPoly> {
    let mut h = h.to_vec();
    let mut out = vec![];
    if h.len() <= 1 {
        return out;
    }
    if h[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        h.remove(0);
    }
    match h.len() {
        1 => return out,
        2 => {
            out.push(h);
            return out;
        }
        3 => {
            let (c, b, a) = (&h[0], &h[1], &h[2]);
            let disc = b * b - BigInt::from(4) * a * c;
            if let Some(s) = crate::arith::exact_sqrt(&disc) {
                let two_a = BigInt::from(2) * a;
                out.push(primitive_part_z(&[b - &s, two_a.clone()]));
                out.push(primitive_part_z(&[b + &s, two_a]));
            } else {
                out.push(h);
            }
            return out;
        }
        _ => {}
    }
    out.extend(zassenhaus(&h));
    out
}

fn is_good_prime(h: &[BigInt], p: u64) -> Option<(FqField, Vec<FqElem>)> {
    let f = FqField::new(p).ok()?;
    let lc = h.last().unwrap();
    if (lc % BigInt::from(p)).is_zero() {
        return None;
    }
    let ring = PolyRing::new(f.clone(), "Y");
    let hp: Vec<FqElem> = ring.trim(h.iter().map(|c| f.from_bigint(c)).collect());
    let g = ring.gcd(&hp, &ring.derivative(&hp));
    (g.len() == 1).then_some((f, hp))
}

fn zassenhaus(h: &[BigInt]) -> Vec<ZPoly> {
    let n = h.len() - 1;
    // Choose among the first few good primes >= 5 the one with fewest factors.
    let mut best: Option<(u64, FqField, Vec<Vec<FqElem>>)> = None;
    let mut tried = 0;
    for p in crate::arith::primes_from(5) {
        let Some((field, hp)) = is_good_prime(h, p) else {
            continue;
        };
        let (_, fs) = factor_fq(&field, &hp, 0);
        let fs: Vec<Vec<FqElem>> = fs.into_iter().map(|(g, _)| g).collect();
        if fs.len() == 1 {
            return vec![h.to_vec()];
        }
        if best.as_ref().is_none_or(|b| fs.len() < b.2.len()) {
            best = Some((p, field, fs));
        }
        tried += 1;
        if tried >= PRIME_TRIALS {
            break;
        }
    }
    let (p, field, modular) = best.unwrap();

    // Mignotte-style bound on coefficients of lc(h) * g for any factor g.
    let norm2: BigInt = h.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let lc = h.last().unwrap().clone();
    let bound = (BigInt::one() << n) * norm2 * lc.abs();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut a = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        a += 1;
    }
    let lifted = hensel_lift_all(&field, h, &modular, a);
    recombine(h, lifted, &modulus)
}

fn to_fp(field: &FqField, f: &[BigInt]) -> Vec<FqElem> {
    let ring = PolyRing::new(field.clone(), "Y");
    ring.trim(f.iter().map(|c| field.from_bigint(c)).collect())
}

fn from_fp(f: &[FqElem]) -> ZPoly {
    f.iter().map(|c| BigInt::from(c.0)).collect()
}

fn reduce_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = f.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Lifts monic modular factors of `f` (leading coefficient a unit mod p) to
/// monic factors modulo `p^a`.
fn hensel_lift_all(field: &FqField, f: &[BigInt], factors: &[Vec<FqElem>], a: u32) -> Vec<ZPoly> {
    let p = BigInt::from(field.p());
    let m = p.pow(a);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc
            .mod_floor(&m)
            .modpow(&(&m - BigInt::one() - (&m / &p)), &m); // unit inverse via Euler
        let v: ZPoly = f.iter().map(|c| c * &inv).collect();
        return vec![reduce_mod(&v, &m)];
    }
    let ring = PolyRing::new(field.clone(), "Y");
    let mid = factors.len() / 2;
    let g0 = factors[..mid]
        .iter()
        .fold(ring.one(), |acc, g| ring.mul(&acc, g));
    let h0 = {
        let rest = factors[mid..]
            .iter()
            .fold(ring.one(), |acc, g| ring.mul(&acc, g));
        ring.scale(&rest, &field.from_bigint(f.last().unwrap()))
    };
    let (g, h) = hensel_pair(field, f, &g0, &h0, a);
    let mut out = hensel_lift_all(field, &g, &factors[..mid], a);
    out.extend(hensel_lift_all(field, &h, &factors[mid..], a));
    out
}

/// Linear Hensel lifting of `f = g h mod p` to `p^a`, `g` monic.
fn hensel_pair(
    field: &FqField,
    f: &[BigInt],
    g0: &[FqElem],
    h0: &[FqElem],
    a: u32,
) -> (ZPoly, ZPoly) {
    let ring = PolyRing::new(field.clone(), "Y");
    let p = BigInt::from(field.p());
    let (one, s, t) = ring.ext_gcd(g0, h0);
    debug_assert_eq!(one, ring.one());
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut pk = p.clone();
    for _ in 1..a {
        let gh = zmul(&g, &h);
        let mut diff: ZPoly = (0..f.len().max(gh.len()))
            .map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default())
            .collect();
        for c in diff.iter_mut() {
            debug_assert!((&*c % &pk).is_zero());
            *c = &*c / &pk;
        }
        let e = to_fp(field, &diff);
        if !e.is_empty() {
            let te = ring.mul(&t, &e);
            let (qq, r) = ring.div_rem(&te, &g0.to_vec());
            let dh = ring.add(&ring.mul(&s, &e), &ring.mul(&qq, &h0.to_vec()));
            g = add_scaled(&g, &from_fp(&r), &pk);
            h = add_scaled(&h, &from_fp(&dh), &pk);
        }
        pk *= &p;
        g = reduce_mod(&g, &pk);
        h = reduce_mod(&h, &pk);
    }
    (g, h)
}

fn add_scaled(a: &[BigInt], b: &[BigInt], s: &BigInt) -> ZPoly {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).cloned().unwrap_or_default() + s * b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(h: &[BigInt], mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = vec![];
    let mut h = h.to_vec();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = h.last().unwrap().clone();
        let mut found = None;
        for subset in super::Subsets::new(lifted.len(), size) {
            // constant-term pretest
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(m));
            let c0 = symmetric(&c0, m);
            if c0.is_zero() || !(&lc * &h[0] % &c0).is_zero() {
                continue;
            }
            let mut cand: ZPoly = vec![lc.clone()];
            for &i in &subset {
                cand = reduce_mod(&zmul(&cand, &lifted[i]), m);
            }
            let cand: ZPoly = cand.iter().map(|c| symmetric(c, m)).collect();
            let g = primitive_part_z(&cand);
            if let Some(quot) = zdiv(&h, &g) {
                found = Some((subset, g, quot));
                break;
            }
        }
        match found {
            Some((subset, g, quot)) => {
                out.push(g);
                h = quot;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f)
                    .collect();
            }
            None => size += 1,
        }
    }
    if h.len() > 1 {
        out.push(primitive_part_z(&h));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> Vec<QElem> {
        let q = Frac::new(Integers);
        c.iter().map(|&x| q.from_i64(x)).collect()
    }

    fn degrees(f: &[i64]) -> Vec<(usize, usize)> {
        factor_q(&qp(f))
            .1
            .iter()
            .map(|(g, m)| (g.len() - 1, *m))
            .collect()
    }

    #[test]
    fn classic_examples() {
        assert_eq!(degrees(&[-1, 0, 0, 0, 1]), vec![(1, 1), (1, 1), (2, 1)]);
        assert_eq!(degrees(&[-2, 0, 1]), vec![(2, 1)]);
        let (_, fs) = factor_q(&qp(&[4, 0, 0, 0, 1]));
        assert_eq!(fs, vec![(qp(&[2, -2, 1]), 1), (qp(&[2, 2, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_style() {
        // x^4 - 10x^2 + 1 is irreducible but splits into quadratics or linears mod every prime
        assert_eq!(degrees(&[1, 0, -10, 0, 1]), vec![(4, 1)]);
        // (x^2 - 2)(x^2 - 3)(x + 1)^2
        let q = Frac::new(Integers);
        let r = PolyRing::new(q.clone(), "Y");
        let f = r.mul(
            &r.mul(&qp(&[-2, 0, 1]), &qp(&[-3, 0, 1])),
            &r.pow(&qp(&[1, 1]), 2),
        );
        let (_, fs) = factor_q(&f);
        assert_eq!(
            fs,
            vec![(qp(&[1, 1]), 2), (qp(&[-3, 0, 1]), 1), (qp(&[-2, 0, 1]), 1)]
        );
    }

    #[test]
    fn nonmonic_and_large() {
        // (6x^3 + 5x - 7)(10x^4 - 3x + 100), integers far above the prime
        let q = Frac::new(Integers);
        let r = PolyRing::new(q.clone(), "Y");
        let a = qp(&[-7, 5, 0, 6]);
        let b = qp(&[100, -3, 0, 0, 10]);
        let (lc, fs) = factor_q(&r.mul(&a, &b));
        assert_eq!(lc, q.from_i64(60));
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, r.monic(&a));
        assert_eq!(fs[1].0, r.monic(&b));
    }
}
