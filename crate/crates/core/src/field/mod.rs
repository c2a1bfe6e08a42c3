//! The two supported global fields, their rings of integers, boxes and heights.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::text::Leaf;
use crate::arith::{
    ln_bigint, ConstField, EuclideanDomain, Field, FqElem, FqEmbedding, FqField, Frac, FracElem,
    Integers, PolyRing, Ring, MAX_EXTENSION_DEGREE,
};
use crate::error::{HitError, Result};
use crate::factor::Factorization;

mod height;

pub use height::{
    content, height_affine, height_projective, liouville_root_bound, normalize_primitive, Height,
    Place,
};

/// `O_K / p` as a finite field, with the reduction data for elements of `O_K`.
#[derive(Clone, Debug)]
pub struct Residue {
    pub field: FqField,
    emb: FqEmbedding,
    alpha: FqElem,
}

/// The rationals.
pub type Rationals = Frac<Integers>;
/// Rational function field `F_q(u)`.
pub type FqU = Frac<PolyRing<FqField>>;
/// An exact rational number.
pub type QElem = FracElem<BigInt>;

pub type IntElem<K> = <<K as GlobalField>::Int as Ring>::Elem;
pub type ConstElem<K> = <<K as GlobalField>::Const as Ring>::Elem;

pub fn rationals() -> Rationals {
    Frac::new(Integers)
}

pub fn fqu(q: u64) -> Result<FqU> {
    Ok(Frac::new(PolyRing::new(FqField::new(q)?, "u")))
}

/// Base field tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BaseField {
    Q,
    FqU { q: u64 },
}

impl BaseField {
    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Q => 0,
            BaseField::FqU { q } => crate::arith::prime_power(*q).map(|(p, _)| p).unwrap_or(0),
        }
    }

    /// Degree over the prime global field; always one here.
    pub fn d_k(&self) -> u32 {
        1
    }

    /// Parses `Q` or `FqU:q=<prime power>`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(BaseField::Q);
        }
        let rest = t
            .strip_prefix("FqU:q=")
            .or_else(|| t.strip_prefix("FqU:"))
            .ok_or_else(|| {
                HitError::InvalidField(format!("unknown field '{t}' (expected Q or FqU:q=<q>)"))
            })?;
        let q: u64 = rest
            .trim()
            .parse()
            .map_err(|_| HitError::InvalidField(format!("bad q in '{t}'")))?;
        let (_, k) = crate::arith::prime_power(q)
            .ok_or_else(|| HitError::InvalidField(format!("q = {q} is not a prime power")))?;
        if k > 1 {
            // Extension constant fields are supported as long as the table fits.
            FqField::new(q)?;
        }
        Ok(BaseField::FqU { q })
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Q => write!(f, "Q"),
            BaseField::FqU { q } => write!(f, "FqU:q={q}"),
        }
    }
}

/// A box bound `B`: a positive rational for Q, `q^n` for `F_q(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoxSpec {
    Real { num: BigInt, den: BigInt },
    Power { q: u64, n: u32 },
}

impl BoxSpec {
    pub fn integer(b: u64) -> Self {
        BoxSpec::Real {
            num: BigInt::from(b),
            den: BigInt::one(),
        }
    }

    /// Parses decimal/fraction text for Q, `q^n` (or an exact power of q) for `F_q(u)`.
    pub fn parse(field: BaseField, s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || HitError::Parse(format!("bad box bound '{t}'"));
        let spec = match field {
            BaseField::Q => {
                let (num, den) = parse_decimal(t).ok_or_else(bad)?;
                BoxSpec::Real { num, den }
            }
            BaseField::FqU { q } => {
                let n = if let Some((base, exp)) = t.split_once('^') {
                    let base = base.trim();
                    if base != "q" && base.parse::<u64>().ok() != Some(q) {
                        return Err(HitError::Parse(format!(
                            "box base must be q = {q}, got '{base}'"
                        )));
                    }
                    exp.trim().parse::<u32>().map_err(|_| bad())?
                } else {
                    let (num, den) = parse_decimal(t).ok_or_else(bad)?;
                    if num < den {
                        return Err(HitError::EmptyBox(format!("B = {t} < 1")));
                    }
                    let v = (num / den).to_u64().ok_or_else(bad)?;
                    let mut n = 0;
                    let mut acc = 1u64;
                    while acc < v {
                        acc = acc.checked_mul(q).ok_or_else(bad)?;
                        n += 1;
                    }
                    if acc != v {
                        return Err(HitError::Parse(format!(
                            "box bound {v} is not a power of q = {q}"
                        )));
                    }
                    n
                };
                BoxSpec::Power { q, n }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            BoxSpec::Real { num, den } if num < den || !den.is_positive() => {
                Err(HitError::EmptyBox(format!("B = {num}/{den} < 1")))
            }
            _ => Ok(()),
        }
    }

    pub fn log2(&self) -> f64 {
        match self {
            BoxSpec::Real { num, den } => {
                (ln_bigint(num) - ln_bigint(den)) / std::f64::consts::LN_2
            }
            BoxSpec::Power { q, n } => *n as f64 * (*q as f64).log2(),
        }
    }

    /// Integer part of `B` for the rationals.
    pub fn floor(&self) -> BigInt {
        match self {
            BoxSpec::Real { num, den } => num.div_floor(den),
            BoxSpec::Power { q, n } => BigInt::from(*q).pow(*n),
        }
    }
}

impl fmt::Display for BoxSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxSpec::Real { num, den } if den.is_one() => write!(f, "{num}"),
            BoxSpec::Real { num, den } => write!(f, "{num}/{den}"),
            BoxSpec::Power { q, n } => write!(f, "{q}^{n}"),
        }
    }
}

/// `"12"`, `"0.5"`, `"3/2"`, `"1e4"` as an exact fraction.
fn parse_decimal(s: &str) -> Option<(BigInt, BigInt)> {
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        return (!d.is_zero()).then(|| {
            let g = n.gcd(&d);
            let sign = if d.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            (&n / &g * &sign, &d / &g * &sign)
        });
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int}{frac}");
    let mut n: BigInt = if digits == "-" || digits == "+" {
        return None;
    } else {
        digits.parse().ok()?
    };
    let mut d = BigInt::from(10).pow(frac.len() as u32);
    if exp >= 0 {
        n *= BigInt::from(10).pow(exp as u32);
    } else {
        d *= BigInt::from(10).pow((-exp) as u32);
    }
    let g = n.gcd(&d);
    Some((n / &g, d / g))
}

/// A global field with `d_K = 1` and a principal ring of integers, viewed as
/// the fraction field of `Const[inner vars]` for the factorization engine.
pub trait GlobalField:
    Field<Elem = FracElem<<<Self as GlobalField>::Int as Ring>::Elem>> + 'static
{
    type Int: EuclideanDomain;
    type Const: ConstField;

    fn ints(&self) -> &Self::Int;
    fn constants(&self) -> &Self::Const;
    /// The field itself, as the fraction field of its ring of integers.
    fn as_frac(&self) -> &Frac<Self::Int>;
    fn base_field(&self) -> BaseField;

    /// Number of transcendental variables over the constant field (0 or 1).
    fn inner_vars(&self) -> usize;
    fn int_to_upoly(&self, a: &IntElem<Self>) -> Vec<ConstElem<Self>>;
    /// Inverse of `int_to_upoly`; `None` if the input is not integral.
    fn int_from_upoly(&self, p: &[ConstElem<Self>]) -> Option<IntElem<Self>>;

    /// `|a|` at the infinite place, as an integer (q-powers for `F_q[u]`).
    fn abs_inf(&self, a: &IntElem<Self>) -> BigInt;
    fn ln_abs_inf(&self, a: &IntElem<Self>) -> f64;

    fn box_len(&self, b: &BoxSpec) -> Result<u64>;
    /// Element `i` of the box in the fixed enumeration order.
    fn box_elem(&self, b: &BoxSpec, i: u64) -> IntElem<Self>;

    /// Resolves a field-level token while parsing (numbers, `u`, digit vectors).
    fn leaf(&self, l: &Leaf) -> Result<Self::Elem>;
    fn format_int_canonical(&self, a: &IntElem<Self>) -> String;
    fn parse_int(&self, s: &str) -> Result<IntElem<Self>>;

    /// Complete factorization of a univariate polynomial over K.
    fn factor_y(&self, f: &[Self::Elem], seed: u64) -> Result<Factorization<Self::Elem>>;
    fn is_square_k(&self, a: &Self::Elem) -> bool;

    /// The element of K given by a polynomial in the inner variables over the constants.
    fn upoly_to_elem(&self, p: &[ConstElem<Self>]) -> Self::Elem;

    /// Residue field of a prime element of `O_K`.
    fn residue(&self, prime: &IntElem<Self>) -> Result<Residue>;
    fn reduce(&self, r: &Residue, a: &IntElem<Self>) -> FqElem;
    /// Primes of `O_K` (normalized) with `ln N(p) <= ln_max`, by increasing norm.
    fn primes_up_to(&self, ln_max: f64) -> Vec<IntElem<Self>>;

    /// The element as a rational number, for K = Q.
    fn as_rational(&self, _a: &Self::Elem) -> Option<QElem> {
        None
    }

    fn embed_int(&self, a: &IntElem<Self>) -> Self::Elem {
        FracElem {
            num: a.clone(),
            den: self.ints().one(),
        }
    }

    /// Exact `|x|_inf` of a field element.
    fn abs_k(&self, x: &Self::Elem) -> QElem {
        rationals().make(self.abs_inf(&x.num), self.abs_inf(&x.den))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let e = crate::arith::text::parse_expr(s)?;
        e.eval(self, &|l| self.leaf(l), &|a, b| {
            self.div(a, b)
                .ok_or_else(|| HitError::Parse("division by zero".into()))
        })
    }
}

impl GlobalField for Rationals {
    type Int = Integers;
    type Const = Rationals;

    fn ints(&self) -> &Integers {
        &self.ring
    }
    fn as_frac(&self) -> &Frac<Integers> {
        self
    }
    fn constants(&self) -> &Rationals {
        self
    }
    fn base_field(&self) -> BaseField {
        BaseField::Q
    }
    fn inner_vars(&self) -> usize {
        0
    }
    fn int_to_upoly(&self, a: &BigInt) -> Vec<QElem> {
        if a.is_zero() {
            vec![]
        } else {
            vec![self.embed(a)]
        }
    }
    fn int_from_upoly(&self, p: &[QElem]) -> Option<BigInt> {
        match p {
            [] => Some(BigInt::zero()),
            [c] => self.as_integral(c),
            _ => None,
        }
    }
    fn abs_inf(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn ln_abs_inf(&self, a: &BigInt) -> f64 {
        ln_bigint(a)
    }
    fn box_len(&self, b: &BoxSpec) -> Result<u64> {
        b.validate()?;
        let f = b.floor();
        (f * 2u32 + 1u32)
            .to_u64()
            .ok_or_else(|| HitError::DegreeCap("box too large to enumerate".into()))
    }
    fn box_elem(&self, _b: &BoxSpec, i: u64) -> BigInt {
        // 0, 1, -1, 2, -2, ...
        if i % 2 == 1 {
            BigInt::from(i.div_ceil(2))
        } else {
            -BigInt::from(i / 2)
        }
    }
    fn leaf(&self, l: &Leaf) -> Result<QElem> {
        match l {
            Leaf::Num(n) => Ok(self.from_bigint(n)),
            Leaf::Var(v) => Err(HitError::Parse(format!("unknown variable '{v}' over Q"))),
            Leaf::Digits(_) => Err(HitError::Parse(
                "digit vectors are not elements of Q".into(),
            )),
        }
    }
    fn format_int_canonical(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_int(&self, s: &str) -> Result<BigInt> {
        let t = s.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(HitError::Parse(format!("bad integer '{t}'")));
        }
        Ok(t.parse().unwrap())
    }
    fn factor_y(&self, f: &[QElem], seed: u64) -> Result<Factorization<QElem>> {
        let _ = seed;
        crate::factor::factor_univariate_q(f)
    }
    fn is_square_k(&self, a: &QElem) -> bool {
        self.is_square(a)
    }
    fn as_rational(&self, a: &QElem) -> Option<QElem> {
        Some(a.clone())
    }
    fn upoly_to_elem(&self, p: &[QElem]) -> QElem {
        p.first().cloned().unwrap_or_else(|| self.zero())
    }
    fn residue(&self, prime: &BigInt) -> Result<Residue> {
        let p = prime
            .to_u64()
            .filter(|&p| crate::arith::is_probable_prime_u64(p) && p < 1 << 31)
            .ok_or_else(|| HitError::OutOfRange(format!("{prime} is not a supported prime")))?;
        let field = FqField::new(p)?;
        let emb = field.embedding_into(&field)?;
        Ok(Residue {
            alpha: field.zero(),
            field,
            emb,
        })
    }
    fn reduce(&self, r: &Residue, a: &BigInt) -> FqElem {
        let p = BigInt::from(r.field.p());
        FqElem(a.mod_floor(&p).to_u64().unwrap())
    }
    fn primes_up_to(&self, ln_max: f64) -> Vec<BigInt> {
        let max = ln_max.exp().floor().min(1e9) as u64;
        crate::arith::primes_from(2)
            .take_while(|&p| p <= max)
            .map(BigInt::from)
            .collect()
    }
}

impl GlobalField for FqU {
    type Int = PolyRing<FqField>;
    type Const = FqField;

    fn ints(&self) -> &PolyRing<FqField> {
        &self.ring
    }
    fn as_frac(&self) -> &Frac<PolyRing<FqField>> {
        self
    }
    fn constants(&self) -> &FqField {
        &self.ring.base
    }
    fn base_field(&self) -> BaseField {
        BaseField::FqU {
            q: self.ring.base.q(),
        }
    }
    fn inner_vars(&self) -> usize {
        1
    }
    fn int_to_upoly(&self, a: &Vec<FqElem>) -> Vec<FqElem> {
        a.clone()
    }
    fn int_from_upoly(&self, p: &[FqElem]) -> Option<Vec<FqElem>> {
        Some(self.ring.trim(p.to_vec()))
    }
    fn abs_inf(&self, a: &Vec<FqElem>) -> BigInt {
        if a.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from(self.ring.base.q()).pow(a.len() as u32 - 1)
        }
    }
    fn ln_abs_inf(&self, a: &Vec<FqElem>) -> f64 {
        if a.is_empty() {
            f64::NEG_INFINITY
        } else {
            (a.len() - 1) as f64 * (self.ring.base.q() as f64).ln()
        }
    }
    fn box_len(&self, b: &BoxSpec) -> Result<u64> {
        let q = self.ring.base.q();
        let n = match b {
            BoxSpec::Power { q: bq, n } if *bq == q => *n,
            _ => return Err(HitError::Parse(format!("box for FqU:q={q} must be q^n"))),
        };
        q.checked_pow(n + 1)
            .filter(|&l| l < 1 << 40)
            .ok_or_else(|| HitError::DegreeCap("box too large to enumerate".into()))
    }
    fn box_elem(&self, _b: &BoxSpec, i: u64) -> Vec<FqElem> {
        // base-q digits of i are the coefficients, constant term first
        let q = self.ring.base.q();
        let mut out = vec![];
        let mut r = i;
        while r > 0 {
            out.push(FqElem(r % q));
            r /= q;
        }
        out
    }
    fn leaf(&self, l: &Leaf) -> Result<FracElem<Vec<FqElem>>> {
        let fq = &self.ring.base;
        match l {
            Leaf::Num(n) => Ok(self.from_bigint(n)),
            Leaf::Var(v) if v == "u" => Ok(self.embed(&self.ring.x())),
            Leaf::Var(v) => Err(HitError::Parse(format!("unknown variable '{v}' over FqU"))),
            Leaf::Digits(d) => {
                if fq.k() == 1 || d.len() > fq.k() as usize || d.iter().any(|&c| c >= fq.p()) {
                    return Err(HitError::Parse(format!(
                        "digit vector {d:?} is not an element of F_{}",
                        fq.q()
                    )));
                }
                Ok(self.embed(&self.ring.constant(fq.from_digits(d))))
            }
        }
    }
    fn format_int_canonical(&self, a: &Vec<FqElem>) -> String {
        let fq = &self.ring.base;
        if a.is_empty() {
            return "0".into();
        }
        let mut parts = vec![];
        for (i, c) in a.iter().enumerate().rev() {
            if c.0 == 0 {
                continue;
            }
            let cs = fq.format(*c);
            parts.push(match i {
                0 => cs,
                1 => format!("{cs}*u"),
                _ => format!("{cs}*u^{i}"),
            });
        }
        parts.join(" + ")
    }
    fn parse_int(&self, s: &str) -> Result<Vec<FqElem>> {
        let x = self.parse_elem(s)?;
        self.as_integral(&x)
            .ok_or_else(|| HitError::Parse(format!("'{s}' is not in F_q[u]")))
    }
    fn factor_y(
        &self,
        f: &[FracElem<Vec<FqElem>>],
        seed: u64,
    ) -> Result<Factorization<FracElem<Vec<FqElem>>>> {
        crate::factor::factor_univariate_fqu(self, f, seed)
    }
    fn is_square_k(&self, a: &FracElem<Vec<FqElem>>) -> bool {
        if self.is_zero(a) {
            return true;
        }
        let fq = &self.ring.base;
        let prod = self.ring.mul(&a.num, &a.den);
        let (lc, fs) = fq.factor_univariate(&prod, 0);
        fq.is_square(&lc) && fs.iter().all(|(_, m)| m % 2 == 0)
    }
    fn upoly_to_elem(&self, p: &[FqElem]) -> FracElem<Vec<FqElem>> {
        self.embed(&self.ring.trim(p.to_vec()))
    }
    fn residue(&self, prime: &Vec<FqElem>) -> Result<Residue> {
        let fq = &self.ring.base;
        let pi = self.ring.monic(prime);
        let not_prime = || {
            HitError::OutOfRange(format!(
                "{} is not prime in F_q[u]",
                self.ring.fmt_elem(prime)
            ))
        };
        if pi.len() < 2 {
            return Err(not_prime());
        }
        let (_, fs) = fq.factor_univariate(&pi, 0);
        if fs.len() != 1 || fs[0].1 != 1 {
            return Err(not_prime());
        }
        let e = (pi.len() - 1) as u32;
        if fq.k() * e > MAX_EXTENSION_DEGREE {
            return Err(HitError::DegreeCap(format!(
                "residue field of degree {} over F_p",
                fq.k() * e
            )));
        }
        let field = FqField::extension(fq.p(), fq.k() * e)?;
        let emb = fq.embedding_into(&field)?;
        let rring = PolyRing::new(field.clone(), "x");
        let image: Vec<FqElem> = pi.iter().map(|&c| emb.apply(c)).collect();
        let alpha = crate::factor::fq::roots_of_split(&field, &rring, &image, 0)
            .into_iter()
            .min()
            .ok_or_else(|| HitError::Internal("prime has no root in its residue field".into()))?;
        Ok(Residue { field, emb, alpha })
    }
    fn reduce(&self, r: &Residue, a: &Vec<FqElem>) -> FqElem {
        let f = &r.field;
        a.iter().rev().fold(f.zero(), |acc, &c| {
            f.add(&f.mul(&acc, &r.alpha), &r.emb.apply(c))
        })
    }
    fn primes_up_to(&self, ln_max: f64) -> Vec<Vec<FqElem>> {
        let fq = &self.ring.base;
        let q = fq.q();
        let max_deg = (ln_max / (q as f64).ln()).floor().max(0.0) as u32;
        let mut out = vec![];
        for e in 1..=max_deg {
            let Some(count) = q.checked_pow(e).filter(|&c| c <= 1 << 20) else {
                break;
            };
            for i in 0..count {
                let mut f: Vec<FqElem> = (0..e).map(|j| FqElem(i / q.pow(j) % q)).collect();
                f.push(fq.one());
                let (_, fs) = fq.factor_univariate(&f, 0);
                if fs.len() == 1 && fs[0].1 == 1 {
                    out.push(f);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fields_and_boxes() {
        assert_eq!(BaseField::parse("Q").unwrap(), BaseField::Q);
        assert_eq!(
            BaseField::parse("FqU:q=9").unwrap(),
            BaseField::FqU { q: 9 }
        );
        assert!(BaseField::parse("FqU:q=6").is_err());
        assert_eq!(BaseField::FqU { q: 9 }.characteristic(), 3);
        let fq = BaseField::FqU { q: 3 };
        assert_eq!(
            BoxSpec::parse(fq, "q^2").unwrap(),
            BoxSpec::Power { q: 3, n: 2 }
        );
        assert_eq!(
            BoxSpec::parse(fq, "27").unwrap(),
            BoxSpec::Power { q: 3, n: 3 }
        );
        assert!(BoxSpec::parse(fq, "10").is_err());
        assert!(matches!(
            BoxSpec::parse(BaseField::Q, "0.5"),
            Err(HitError::EmptyBox(_))
        ));
        assert_eq!(
            BoxSpec::parse(BaseField::Q, "1e4").unwrap(),
            BoxSpec::integer(10000)
        );
        assert_eq!(
            BoxSpec::parse(BaseField::Q, "2.5").unwrap().floor(),
            BigInt::from(2)
        );
    }

    #[test]
    fn box_enumeration() {
        let q = rationals();
        let b = BoxSpec::integer(3);
        let n = q.box_len(&b).unwrap();
        let elems: Vec<String> = (0..n).map(|i| q.box_elem(&b, i).to_string()).collect();
        assert_eq!(elems, ["0", "1", "-1", "2", "-2", "3", "-3"]);
        assert_eq!(q.box_len(&BoxSpec::integer(1)).unwrap(), 3);

        let k = fqu(3).unwrap();
        let b = BoxSpec::Power { q: 3, n: 2 };
        let n = k.box_len(&b).unwrap();
        assert_eq!(n, 27);
        let mut seen = std::collections::HashSet::new();
        for i in 0..n {
            let e = k.box_elem(&b, i);
            assert!(e.len() <= 3);
            assert!(seen.insert(e));
        }
    }

    #[test]
    fn canonical_int_text_round_trips() {
        let k = fqu(9).unwrap();
        let fq = k.constants().clone();
        let a = vec![fq.from_digits(&[1, 2]), fq.zero(), fq.from_digits(&[0, 1])];
        let s = k.format_int_canonical(&a);
        assert_eq!(s, "[0,1]*u^2 + [1,2]");
        assert_eq!(k.parse_int(&s).unwrap(), a);
        let k3 = fqu(3).unwrap();
        let b = k3.parse_int("u^2 - 1").unwrap();
        assert_eq!(k3.format_int_canonical(&b), "1*u^2 + 2");
        assert_eq!(k3.parse_int("1*u^2 + 2").unwrap(), b);
    }

    #[test]
    fn squares_in_fqu() {
        let k = fqu(3).unwrap();
        assert!(!k.is_square_k(&k.parse_elem("u").unwrap()));
        assert!(k.is_square_k(&k.parse_elem("u^2/(u+1)^4").unwrap()));
        assert!(!k.is_square_k(&k.parse_elem("-1").unwrap()));
        assert!(rationals().is_square_k(&rationals().parse_elem("9/4").unwrap()));
        assert!(!rationals().is_square_k(&rationals().parse_elem("-4").unwrap()));
    }
}
