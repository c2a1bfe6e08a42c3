use super::{EuclideanDomain, Field};

/// Determinant over an integral domain by fraction-free (Bareiss) elimination.
pub fn det_bareiss<R: EuclideanDomain>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut a: Vec<Vec<R::Elem>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&a[i][j], &a[k][k]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = ring
                    .exact_div(&t, &prev)
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        ring.neg(&d)
    } else {
        d
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut det = field.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !field.is_zero(&a[i][k])) else {
            return field.zero();
        };
        if piv != k {
            a.swap(k, piv);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[k][k]);
        let inv = field.inv(&a[k][k]).unwrap();
        for i in k + 1..n {
            if field.is_zero(&a[i][k]) {
                continue;
            }
            let f = field.mul(&a[i][k], &inv);
            for j in k..n {
                let t = field.mul(&f, &a[k][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::super::{Frac, Integers, Ring};
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    // Leibniz expansion as an independent check.
    fn leibniz(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0i128;
        permute(&mut perm, 0, &mut |p| {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let prod: i128 = (0..n).map(|i| m[i][p[i]] as i128).product();
            total += if inv % 2 == 0 { prod } else { -prod };
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn zero_pivot() {
        let m = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det_bareiss(&Integers, &to_big(&m)), BigInt::from(-1));
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 1usize..5, seed in prop::collection::vec(-5i64..6, 16)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 4 + j]).collect()).collect();
            let expect = leibniz(&m);
            prop_assert_eq!(det_bareiss(&Integers, &to_big(&m)), BigInt::from(expect));
            let q = Frac::new(Integers);
            let mq: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
            prop_assert_eq!(det_field(&q, &mq), q.from_bigint(&BigInt::from(expect)));
        }
    }
}
