//! Cantor-Zassenhaus factorization over `F_q`.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    squarefree_decomposition, EuclideanDomain, FqElem, FqField, PolyRing, Ring, UPoly,
};

/// `(lc, [(monic irreducible, multiplicity)])`, factors sorted by degree then coefficients.
pub fn factor_fq(
    field: &FqField,
    f: &[FqElem],
    seed: u64,
) -> (FqElem, Vec<(UPoly<FqElem>, usize)>) {
    let ring = PolyRing::new(field.clone(), "Y");
    let f = ring.trim(f.to_vec());
    assert!(!f.is_empty(), "factoring the zero polynomial");
    let lc = *f.last().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    for (g, m) in squarefree_decomposition(&ring, &f) {
        for (part, d) in distinct_degree(field, &ring, &g) {
            for h in equal_degree(field, &ring, &part, d, &mut rng) {
                out.push((h, m));
            }
        }
    }
    sort_factors(&mut out);
    (lc, out)
}

pub(crate) fn sort_factors(v: &mut [(UPoly<FqElem>, usize)]) {
    v.sort_by(|(a, ma), (b, mb)| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
            .then(ma.cmp(mb))
    });
}

/// Distinct roots in `F_q` of a nonzero polynomial, sorted.
pub(crate) fn roots_of_split(
    field: &FqField,
    ring: &PolyRing<FqField>,
    f: &[FqElem],
    seed: u64,
) -> Vec<FqElem> {
    let f = ring.monic(f);
    if f.len() <= 1 {
        return vec![];
    }
    let x = ring.x();
    let xq = ring.pow_mod(&x, &BigUint::from(field.q()), &f);
    let g = ring.gcd(&f, &ring.sub(&xq, &x));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots: Vec<FqElem> = equal_degree(field, ring, &g, 1, &mut rng)
        .into_iter()
        .map(|h| field.neg(&h[0]))
        .collect();
    roots.sort();
    roots
}

fn distinct_degree(
    field: &FqField,
    ring: &PolyRing<FqField>,
    f: &UPoly<FqElem>,
) -> Vec<(UPoly<FqElem>, usize)> {
    let mut out = vec![];
    let mut g = f.clone();
    let x = ring.x();
    let q = BigUint::from(field.q());
    let mut h = x.clone();
    let mut d = 0;
    while g.len() > 1 {
        d += 1;
        if g.len() - 1 < 2 * d {
            let deg = g.len() - 1;
            out.push((g, deg));
            break;
        }
        h = ring.pow_mod(&h, &q, &g);
        let gd = ring.gcd(&g, &ring.sub(&h, &x));
        if gd.len() > 1 {
            g = ring.exact_div(&g, &gd).unwrap();
            h = ring.rem(&h, &g);
            out.push((gd, d));
        }
    }
    out
}

fn equal_degree(
    field: &FqField,
    ring: &PolyRing<FqField>,
    f: &UPoly<FqElem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<UPoly<FqElem>> {
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return vec![];
    }
    if n == d {
        return vec![ring.monic(f)];
    }
    let q = field.q();
    loop {
        let a: UPoly<FqElem> = ring.trim((0..n).map(|_| FqElem(rng.gen_range(0..q))).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = if field.p() == 2 {
            // trace map a + a^2 + ... + a^(2^(k d - 1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..field.k() as usize * d {
                t = ring.mul_mod(&t, &t, f);
                acc = ring.add(&acc, &t);
            }
            acc
        } else {
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            ring.sub(&ring.pow_mod(&a, &e, f), &ring.one())
        };
        let g = ring.gcd(f, &b);
        if g.len() > 1 && g.len() < f.len() {
            let other = ring.exact_div(f, &g).unwrap();
            let mut out = equal_degree(field, ring, &g, d, rng);
            out.extend(equal_degree(field, ring, &other, d, rng));
            return out;
        }
    }
}
