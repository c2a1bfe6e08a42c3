use num_bigint::BigInt;

use super::mpoly::{MPoly, MRing};
use crate::arith::text::{parse_expr, Leaf};
use crate::arith::{format_terms, PolyRing, Ring, UPoly};
use crate::error::{HitError, Result};
use crate::field::{normalize_primitive, ConstElem, GlobalField};

/// `F(T, Y)`: entry `j` is the coefficient of `Y^j`, a polynomial in `T`.
pub type BiPoly<E> = Vec<Vec<E>>;

/// `K[T][Y]`.
#[derive(Clone, Debug)]
pub struct BiRing<K: Ring> {
    pub k: K,
    pub t: PolyRing<K>,
    pub y: PolyRing<PolyRing<K>>,
}

impl<K: Ring> Ring for BiRing<K> {
    type Elem = BiPoly<K::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![]
    }
    fn one(&self) -> Self::Elem {
        self.y.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.y.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.y.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.y.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.y.mul(a, b)
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.y.from_bigint(n)
    }
    fn characteristic(&self) -> u64 {
        self.k.characteristic()
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let terms = a.iter().enumerate().rev().flat_map(|(j, c)| {
            c.iter().enumerate().rev().map(move |(i, x)| {
                let mut mon = vec![];
                match i {
                    0 => {}
                    1 => mon.push("T".to_string()),
                    _ => mon.push(format!("T^{i}")),
                }
                match j {
                    0 => {}
                    1 => mon.push("Y".to_string()),
                    _ => mon.push(format!("Y^{j}")),
                }
                (x, mon.join("*"))
            })
        });
        format_terms(&self.k, terms)
    }
}

impl<K: GlobalField> BiRing<K> {
    pub fn new(k: K) -> Self {
        let t = PolyRing::new(k.clone(), "T");
        let y = PolyRing::new(t.clone(), "Y");
        BiRing { k, t, y }
    }

    pub fn var_t(&self) -> BiPoly<K::Elem> {
        vec![self.t.x()]
    }

    pub fn var_y(&self) -> BiPoly<K::Elem> {
        self.y.x()
    }

    pub fn constant(&self, c: K::Elem) -> BiPoly<K::Elem> {
        self.y.constant(self.t.constant(c))
    }

    /// Parses the polynomial text grammar in `T`, `Y` (and `u` over `F_q(u)`).
    /// Division is allowed only by nonzero constants of K.
    pub fn parse(&self, s: &str) -> Result<BiPoly<K::Elem>> {
        let e = parse_expr(s)?;
        e.eval(
            self,
            &|l| match l {
                Leaf::Var(v) if v == "T" => Ok(self.var_t()),
                Leaf::Var(v) if v == "Y" => Ok(self.var_y()),
                other => Ok(self.constant(self.k.leaf(other)?)),
            },
            &|a, b| {
                let c = self
                    .as_constant(b)
                    .ok_or_else(|| HitError::Parse("division by a non-constant".into()))?;
                let inv = self
                    .k
                    .inv(&c)
                    .ok_or_else(|| HitError::Parse("division by zero".into()))?;
                Ok(self.scale(a, &inv))
            },
        )
    }

    pub fn format(&self, f: &BiPoly<K::Elem>) -> String {
        self.fmt_elem(f)
    }

    pub fn as_constant(&self, f: &BiPoly<K::Elem>) -> Option<K::Elem> {
        match f.as_slice() {
            [] => Some(self.k.zero()),
            [c] if c.len() <= 1 => Some(c.first().cloned().unwrap_or_else(|| self.k.zero())),
            _ => None,
        }
    }

    pub fn scale(&self, f: &BiPoly<K::Elem>, c: &K::Elem) -> BiPoly<K::Elem> {
        self.y.trim(f.iter().map(|a| self.t.scale(a, c)).collect())
    }

    /// `deg_Y`; zero for the zero polynomial.
    pub fn d_y(&self, f: &BiPoly<K::Elem>) -> usize {
        f.len().saturating_sub(1)
    }

    pub fn d_t(&self, f: &BiPoly<K::Elem>) -> usize {
        f.iter()
            .map(|c| c.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self, f: &BiPoly<K::Elem>) -> usize {
        f.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(j, c)| j + c.len() - 1)
            .max()
            .unwrap_or(0)
    }

    pub fn coeff(&self, f: &BiPoly<K::Elem>, i: usize, j: usize) -> K::Elem {
        f.get(j)
            .and_then(|c| c.get(i))
            .cloned()
            .unwrap_or_else(|| self.k.zero())
    }

    /// Nonzero coefficients `((i, j), c)` of `T^i Y^j`, decreasing in `j` then `i`.
    pub fn terms(&self, f: &BiPoly<K::Elem>) -> Vec<((usize, usize), K::Elem)> {
        let mut out = vec![];
        for (j, c) in f.iter().enumerate().rev() {
            for (i, x) in c.iter().enumerate().rev() {
                if !self.k.is_zero(x) {
                    out.push(((i, j), x.clone()));
                }
            }
        }
        out
    }

    pub fn from_terms(&self, terms: &[((usize, usize), K::Elem)]) -> BiPoly<K::Elem> {
        let mut out = self.zero();
        for ((i, j), c) in terms {
            let mono = self.y.monomial(self.t.monomial(c.clone(), *i), *j);
            out = self.add(&out, &mono);
        }
        out
    }

    /// Leading coefficient in `Y`, a polynomial in `T`.
    pub fn a0(&self, f: &BiPoly<K::Elem>) -> UPoly<K::Elem> {
        f.last().cloned().unwrap_or_default()
    }

    /// `F(t, Y)`.
    pub fn specialize(&self, f: &BiPoly<K::Elem>, t: &K::Elem) -> UPoly<K::Elem> {
        let ky = PolyRing::new(self.k.clone(), "Y");
        ky.trim(f.iter().map(|c| self.t.eval(c, t)).collect())
    }

    pub fn eval(&self, f: &BiPoly<K::Elem>, t: &K::Elem, y: &K::Elem) -> K::Elem {
        let ky = PolyRing::new(self.k.clone(), "Y");
        ky.eval(&self.specialize(f, t), y)
    }

    pub fn derivative_y(&self, f: &BiPoly<K::Elem>) -> BiPoly<K::Elem> {
        self.y.derivative(f)
    }

    /// All coefficients (zeros included), flattened; for heights.
    pub fn coefficients(&self, f: &BiPoly<K::Elem>) -> Vec<K::Elem> {
        f.iter().flat_map(|c| c.iter().cloned()).collect()
    }

    pub fn is_integral(&self, f: &BiPoly<K::Elem>) -> bool {
        let r = self.k.ints();
        f.iter().flatten().all(|c| r.is_one(&c.den))
    }

    /// Integral primitive associate `lambda * F`.
    pub fn primitive(&self, f: &BiPoly<K::Elem>) -> Result<BiPoly<K::Elem>> {
        let flat = self.coefficients(f);
        let (_, prim) = normalize_primitive(&self.k, &flat)?;
        let mut it = prim.into_iter();
        Ok(self.y.trim(
            f.iter()
                .map(|c| {
                    self.t.trim(
                        c.iter()
                            .map(|_| self.k.embed_int(&it.next().unwrap()))
                            .collect(),
                    )
                })
                .collect(),
        ))
    }

    /// Ring of polynomials over the constant field in `(u, T, Y)` or `(T, Y)`.
    pub fn mring(&self) -> MRing<K::Const> {
        let names = if self.k.inner_vars() == 1 {
            vec!["u", "T", "Y"]
        } else {
            vec!["T", "Y"]
        };
        MRing::new(self.k.constants().clone(), names)
    }

    /// `F` with denominators cleared, as a polynomial over the constant field.
    pub fn to_mpoly(&self, f: &BiPoly<K::Elem>) -> MPoly<ConstElem<K>> {
        let m = self.mring();
        let n = m.nvars();
        let mut out = MPoly::default();
        if f.is_empty() {
            return out;
        }
        let prim = self.primitive(f).expect("nonzero");
        for (j, c) in prim.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                for (d, a) in self.k.int_to_upoly(&x.num).into_iter().enumerate() {
                    let mut e = vec![0u32; n];
                    if n == 3 {
                        e[0] = d as u32;
                    }
                    e[n - 2] = i as u32;
                    e[n - 1] = j as u32;
                    super::mpoly::add_term(&m.field, &mut out, e, a);
                }
            }
        }
        out
    }

    pub fn from_mpoly(&self, p: &MPoly<ConstElem<K>>) -> BiPoly<K::Elem> {
        let m = self.mring();
        let n = m.nvars();
        let mut upolys: std::collections::BTreeMap<(usize, usize), Vec<ConstElem<K>>> =
            Default::default();
        for (e, c) in &p.terms {
            let d = if n == 3 { e[0] as usize } else { 0 };
            let v = upolys
                .entry((e[n - 2] as usize, e[n - 1] as usize))
                .or_default();
            if v.len() <= d {
                v.resize(d + 1, m.field.zero());
            }
            v[d] = c.clone();
        }
        let terms: Vec<_> = upolys
            .into_iter()
            .map(|(ij, v)| (ij, self.k.upoly_to_elem(&v)))
            .collect();
        self.from_terms(&terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{fqu, rationals};

    #[test]
    fn parse_and_print() {
        let r = BiRing::new(rationals());
        let f = r.parse("Y^2 - (T^3+1)*Y + 2").unwrap();
        assert_eq!(r.format(&f), "Y^2 - T^3*Y - Y + 2");
        assert_eq!((r.d_y(&f), r.d_t(&f), r.total_degree(&f)), (2, 3, 4));
        let g = r.parse("(3/2)Y^2 + 3T").unwrap();
        assert_eq!(r.format(&g), "(3/2)*Y^2 + 3*T");
        assert_eq!(r.format(&r.primitive(&g).unwrap()), "Y^2 + 2*T");
        assert!(r.parse("Y/T").is_err());
        assert!(r.parse("u*Y").is_err());
        assert_eq!(r.format(&r.parse("-Y/2 + 1/3").unwrap()), "-(1/2)*Y + 1/3");
    }

    #[test]
    fn function_field_text() {
        let k = fqu(3).unwrap();
        let r = BiRing::new(k.clone());
        let f = r.parse("Y^2 - u*T + (u^2+1)/u").unwrap();
        let s = r.format(&f);
        assert_eq!(s, "Y^2 - u*T + (u^2 + 1)/u");
        assert_eq!(r.parse(&s).unwrap(), f);
        let g = r.parse("2Y - u").unwrap();
        assert_eq!(r.format(&g), "-Y - u");
    }

    #[test]
    fn specialization() {
        let r = BiRing::new(rationals());
        let f = r.parse("T*Y^2 + Y").unwrap();
        assert_eq!(r.specialize(&f, &r.k.from_i64(0)).len(), 2);
        let k = fqu(3).unwrap();
        let r = BiRing::new(k.clone());
        let f = r.parse("Y^2 - T").unwrap();
        let s = r.specialize(&f, &k.parse_elem("u^2").unwrap());
        assert_eq!(PolyRing::new(k, "Y").fmt_elem(&s), "Y^2 - u^2");
    }

    #[test]
    fn mpoly_round_trip() {
        let k = fqu(5).unwrap();
        let r = BiRing::new(k);
        let f = r.parse("u*T*Y^2 + (u^2 + 1)*Y - 3*T^2").unwrap();
        let m = r.to_mpoly(&f);
        assert_eq!(r.from_mpoly(&m), f);
        let rq = BiRing::new(rationals());
        let g = rq.parse("2*Y^2 - 4*T").unwrap();
        assert_eq!(rq.format(&rq.from_mpoly(&rq.to_mpoly(&g))), "Y^2 - 2*T");
    }
}
