//! Galois groups of polynomials of degree at most 4 over K or K(T), from the
//! discriminant, the resolvent cubic and the Kappe-Warren test.

use serde::{Deserialize, Serialize};

use super::group::GroupId;
use crate::arith::{det_field, EuclideanDomain, Field, Frac, FracElem, PolyRing, Ring, UPoly};
use crate::error::{HitError, Result};
use crate::factor::{factor_bipoly, Factorization};
use crate::field::GlobalField;
use crate::poly::BiRing;

/// A field where squares can be recognized and polynomials factored.
pub trait GaloisBase: Field {
    fn is_square_e(&self, a: &Self::Elem) -> bool;
    fn factor_e(&self, f: &[Self::Elem]) -> Result<Factorization<Self::Elem>>;
}

impl<K: GlobalField> GaloisBase for K {
    fn is_square_e(&self, a: &K::Elem) -> bool {
        self.is_square_k(a)
    }
    fn factor_e(&self, f: &[K::Elem]) -> Result<Factorization<K::Elem>> {
        self.factor_y(f, 0)
    }
}

/// The rational function field `K(T)`.
#[derive(Clone, Debug)]
pub struct RatFun<K: GlobalField> {
    pub frac: Frac<PolyRing<K>>,
    pub br: BiRing<K>,
}

pub type RatFunElem<K> = FracElem<UPoly<<K as Ring>::Elem>>;

impl<K: GlobalField> RatFun<K> {
    pub fn new(k: K) -> Self {
        RatFun {
            frac: Frac::new(PolyRing::new(k.clone(), "T")),
            br: BiRing::new(k),
        }
    }

    pub fn embed(&self, p: &[K::Elem]) -> RatFunElem<K> {
        self.frac.embed(&self.frac.ring.trim(p.to_vec()))
    }
}

impl<K: GlobalField> Ring for RatFun<K> {
    type Elem = RatFunElem<K>;

    fn zero(&self) -> Self::Elem {
        self.frac.zero()
    }
    fn one(&self) -> Self::Elem {
        self.frac.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.frac.is_zero(a)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.frac.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.frac.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.frac.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.frac.mul(a, b)
    }
    fn from_bigint(&self, n: &num_bigint::BigInt) -> Self::Elem {
        self.frac.from_bigint(n)
    }
    fn characteristic(&self) -> u64 {
        self.frac.characteristic()
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        self.frac.fmt_elem(a)
    }
}

impl<K: GlobalField> Field for RatFun<K> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.frac.inv(a)
    }
}

impl<K: GlobalField> GaloisBase for RatFun<K> {
    fn is_square_e(&self, a: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return true;
        }
        let k = &self.br.k;
        let p = self.frac.ring.mul(&a.num, &a.den);
        match k.factor_y(&p, 0) {
            Ok(fz) => k.is_square_k(&fz.unit) && fz.factors.iter().all(|(_, m)| m % 2 == 0),
            Err(_) => false,
        }
    }

    fn factor_e(&self, f: &[Self::Elem]) -> Result<Factorization<Self::Elem>> {
        let tr = &self.frac.ring;
        let Some(unit) = f.iter().rev().find(|c| !self.is_zero(c)).cloned() else {
            return Err(HitError::ZeroPolynomial("cannot factor zero".into()));
        };
        let l = f.iter().fold(tr.one(), |acc, c| tr.lcm(&acc, &c.den));
        let bi: Vec<UPoly<K::Elem>> = self.br.y.trim(
            f.iter()
                .map(|c| tr.mul(&c.num, &tr.exact_div(&l, &c.den).expect("lcm divisible")))
                .collect(),
        );
        let mut factors = vec![];
        for (g, m) in factor_bipoly(&self.br, &bi, 0)? {
            if self.br.d_y(&g) == 0 {
                continue;
            }
            let top = self.embed(g.last().unwrap());
            let inv = self.inv(&top).unwrap();
            let monic: Vec<_> = g.iter().map(|c| self.mul(&self.embed(c), &inv)).collect();
            factors.push((monic, m));
        }
        factors.sort_by_key(|(g, _)| g.len());
        let p = self.characteristic() as usize;
        let inseparable = p > 0
            && factors.iter().any(|(g, _)| {
                g.iter()
                    .enumerate()
                    .all(|(j, c)| j % p == 0 || self.is_zero(c))
            });
        Ok(Factorization {
            unit,
            factors,
            inseparable,
        })
    }
}

/// The group together with the data it was read from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub group: GroupId,
    /// Discriminant of the (deflated) polynomial.
    pub disc: String,
    /// Degrees of the factors of the resolvent cubic, for quartics.
    pub resolvent: Option<String>,
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant<L: Field>(l: &L, f: &[L::Elem]) -> L::Elem {
    let n = f.len() - 1;
    if n <= 1 {
        return l.one();
    }
    let ring = PolyRing::new(l.clone(), "Y");
    let df = ring.derivative(f);
    let size = 2 * n - 1;
    let mut rows = vec![];
    for r in 0..n - 1 {
        let mut row = vec![l.zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[r + n - j] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..n {
        let mut row = vec![l.zero(); size];
        for (j, c) in df.iter().enumerate() {
            row[r + n - 1 - j] = c.clone();
        }
        rows.push(row);
    }
    let res = det_field(l, &rows);
    let d = l
        .div(&res, f.last().unwrap())
        .expect("nonzero leading coefficient");
    if (n * (n - 1) / 2) % 2 == 1 {
        l.neg(&d)
    } else {
        d
    }
}

fn check_characteristic<L: Field>(l: &L) -> Result<()> {
    if l.characteristic() == 2 {
        return Err(HitError::UnsupportedCharacteristic(
            "characteristic 2".into(),
        ));
    }
    Ok(())
}

/// Classifies `f` given its factorization over `L`. With `deflate`, repeated
/// factors are dropped; otherwise they are an error.
pub fn classify_factored<L: GaloisBase>(
    l: &L,
    f: &[L::Elem],
    fz: &Factorization<L::Elem>,
    deflate: bool,
) -> Result<Classification> {
    check_characteristic(l)?;
    let n = f.len().saturating_sub(1);
    if n > 4 {
        return Err(HitError::OutOfRange(format!(
            "unsupported degree {n} (at most 4)"
        )));
    }
    if fz.inseparable {
        return Err(HitError::Inseparable(
            "an irreducible factor has zero derivative".into(),
        ));
    }
    if !deflate && fz.factors.iter().any(|(_, m)| *m > 1) {
        return Err(HitError::Inseparable("repeated roots".into()));
    }
    let ring = PolyRing::new(l.clone(), "Y");
    let radical = fz
        .factors
        .iter()
        .fold(ring.one(), |acc, (g, _)| ring.mul(&acc, g));
    let disc = l.fmt_elem(&discriminant(l, &radical));
    let degree = radical.len() - 1;
    match fz.factors.as_slice() {
        [] => Ok(Classification {
            group: GroupId::new(0, "C1", 1),
            disc,
            resolvent: None,
        }),
        [(g, _)] => transitive(l, g),
        many => {
            let mut degs: Vec<usize> = many.iter().map(|(g, _)| g.len() - 1).collect();
            degs.sort_unstable();
            let pattern = degs
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("+");
            let nonlinear: Vec<&Vec<L::Elem>> = many
                .iter()
                .map(|(g, _)| g)
                .filter(|g| g.len() > 2)
                .collect();
            let (label, order) = match nonlinear.as_slice() {
                [] => ("C1".to_string(), 1),
                [h] => {
                    let c = transitive(l, h)?;
                    (c.group.label, c.group.order)
                }
                [a, b] => {
                    let prod = l.mul(&discriminant(l, a), &discriminant(l, b));
                    if l.is_square_e(&prod) {
                        ("C2".to_string(), 2)
                    } else {
                        ("C2×C2".to_string(), 4)
                    }
                }
                _ => {
                    return Err(HitError::Internal(
                        "more than two nonlinear factors in degree 4".into(),
                    ))
                }
            };
            Ok(Classification {
                group: GroupId {
                    degree,
                    label: format!("{pattern}:{label}"),
                    order,
                },
                disc,
                resolvent: None,
            })
        }
    }
}

pub fn classify<L: GaloisBase>(l: &L, f: &[L::Elem], deflate: bool) -> Result<Classification> {
    let f = PolyRing::new(l.clone(), "Y").trim(f.to_vec());
    if f.is_empty() {
        return Err(HitError::ZeroPolynomial(
            "zero polynomial has no Galois group".into(),
        ));
    }
    check_characteristic(l)?;
    if f.len() > 5 {
        return Err(HitError::OutOfRange(format!(
            "unsupported degree {} (at most 4)",
            f.len() - 1
        )));
    }
    let fz = l.factor_e(&f)?;
    classify_factored(l, &f, &fz, deflate)
}

/// Group of a monic irreducible polynomial.
fn transitive<L: GaloisBase>(l: &L, g: &[L::Elem]) -> Result<Classification> {
    let n = g.len() - 1;
    let disc = discriminant(l, g);
    let sq = l.is_square_e(&disc);
    let ds = l.fmt_elem(&disc);
    let mk = |label: &str, resolvent: Option<String>| -> Result<Classification> {
        Ok(Classification {
            group: GroupId::catalog(label)?,
            disc: ds.clone(),
            resolvent,
        })
    };
    match n {
        1 => mk("C1", None),
        2 => mk("C2", None),
        3 => mk(if sq { "C3" } else { "S3" }, None),
        4 => {
            let (b, c, d, e) = (&g[3], &g[2], &g[1], &g[0]);
            let four = l.from_i64(4);
            // z^3 - c z^2 + (bd - 4e) z - (b^2 e - 4ce + d^2)
            let r1 = l.sub(&l.mul(b, d), &l.mul(&four, e));
            let r0 = l.neg(&l.add(
                &l.sub(&l.mul(&l.mul(b, b), e), &l.mul(&four, &l.mul(c, e))),
                &l.mul(d, d),
            ));
            let cubic = vec![r0, r1, l.neg(c), l.one()];
            let rz = l.factor_e(&cubic)?;
            let mut degs: Vec<usize> = rz
                .factors
                .iter()
                .flat_map(|(h, m)| std::iter::repeat_n(h.len() - 1, *m))
                .collect();
            degs.sort_unstable();
            let pattern = Some(
                degs.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("+"),
            );
            match degs.as_slice() {
                [3] => mk(if sq { "A4" } else { "S4" }, pattern),
                [1, 1, 1] => mk("V4", pattern),
                [1, 2] => {
                    let lin = &rz.factors.iter().find(|(h, _)| h.len() == 2).unwrap().0;
                    let theta = l.neg(&lin[0]);
                    // Kappe-Warren: C4 iff x^2 - theta x + e and x^2 + b x + (c - theta)
                    // both split over K(sqrt(disc))
                    let splits = |dd: L::Elem| {
                        l.is_zero(&dd) || l.is_square_e(&dd) || l.is_square_e(&l.mul(&dd, &disc))
                    };
                    let d1 = l.sub(&l.mul(&theta, &theta), &l.mul(&four, e));
                    let d2 = l.sub(&l.mul(b, b), &l.mul(&four, &l.sub(c, &theta)));
                    mk(if splits(d1) && splits(d2) { "C4" } else { "D4" }, pattern)
                }
                _ => Err(HitError::Internal(format!(
                    "resolvent cubic pattern {degs:?}"
                ))),
            }
        }
        _ => Err(HitError::OutOfRange(format!("unsupported degree {n}"))),
    }
}
