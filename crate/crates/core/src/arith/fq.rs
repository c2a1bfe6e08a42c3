use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::integer::{is_probable_prime_u64, prime_power};
use super::{ConstField, Field, PolyRing, Ring};
use crate::error::{HitError, Result};

/// Largest extension degree `k` supported for `F_{p^k}`.
pub const MAX_EXTENSION_DEGREE: u32 = 12;

const TABLE_LIMIT: u64 = 1 << 16;

/// Element of `F_{p^k}`: the representative polynomial of degree `< k` over
/// `F_p`, packed as base-`p` digits (digit `i` is the coefficient of `x^i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u64);

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug)]
struct FqInner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic irreducible modulus over `F_p`, `k + 1` coefficients, low first.
    modulus: Vec<u64>,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

/// The finite field `F_q`, `q = p^k`, realised as `F_p[x]/(m)`.
#[derive(Clone, Debug)]
pub struct FqField {
    inner: Arc<FqInner>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus
    }
}
impl Eq for FqField {}

impl FqField {
    /// `F_q` with the lexicographically least monic irreducible modulus.
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| HitError::InvalidField(format!("q = {q} is not a prime power")))?;
        Self::extension(p, k)
    }

    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if !is_probable_prime_u64(p) || p >= 1 << 31 {
            return Err(HitError::InvalidField(format!(
                "p = {p} is not a supported prime"
            )));
        }
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(HitError::DegreeCap(format!(
                "extension degree {k} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        let q = (p as u128).pow(k);
        if q >= 1 << 62 {
            return Err(HitError::DegreeCap(format!("field size {p}^{k} too large")));
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, k as usize)
        };
        Ok(Self::build(p, k, q as u64, modulus))
    }

    /// `F_p[x]/(modulus)` for a caller-supplied monic irreducible modulus.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let k = modulus.len().saturating_sub(1) as u32;
        if k == 1 {
            return Self::extension(p, 1);
        }
        if !is_probable_prime_u64(p)
            || k == 0
            || k > MAX_EXTENSION_DEGREE
            || modulus[k as usize] != 1
        {
            return Err(HitError::InvalidField("bad modulus".into()));
        }
        if !is_irreducible_fp(p, &modulus) {
            return Err(HitError::InvalidField("modulus is reducible".into()));
        }
        let q = (p as u128).pow(k);
        if q >= 1 << 62 {
            return Err(HitError::DegreeCap(format!("field size {p}^{k} too large")));
        }
        Ok(Self::build(p, k, q as u64, modulus))
    }

    fn build(p: u64, k: u32, q: u64, modulus: Vec<u64>) -> Self {
        let mut inner = FqInner {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if k > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        FqField {
            inner: Arc::new(inner),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }
    pub fn k(&self) -> u32 {
        self.inner.k
    }
    pub fn q(&self) -> u64 {
        self.inner.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn digits(&self, a: FqElem) -> Vec<u64> {
        digits(&self.inner, a.0)
    }

    pub fn from_digits(&self, d: &[u64]) -> FqElem {
        let p = self.inner.p;
        let mut v = 0u64;
        for &c in d.iter().take(self.inner.k as usize).rev() {
            v = v * p + c % p;
        }
        FqElem(v)
    }

    /// The element with index `i` in `0..q` (same as its packed value).
    pub fn element(&self, i: u64) -> FqElem {
        debug_assert!(i < self.inner.q);
        FqElem(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.inner.q).map(FqElem)
    }

    /// The prime-field element `n mod p`.
    pub fn from_u64(&self, n: u64) -> FqElem {
        FqElem(n % self.inner.p)
    }

    /// Canonical digit text: `c` for prime fields, `[a0,a1,...]` otherwise.
    pub fn format(&self, a: FqElem) -> String {
        if self.inner.k == 1 {
            a.0.to_string()
        } else {
            let d = self.digits(a);
            let parts: Vec<String> = d.iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    fn mul_slow(inner: &FqInner, a: u64, b: u64) -> u64 {
        let p = inner.p;
        if inner.k == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        let k = inner.k as usize;
        let da = digits(inner, a);
        let db = digits(inner, b);
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let m = &inner.modulus;
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
            }
            prod[i] = 0;
        }
        let mut v = 0u64;
        for &c in prod[..k].iter().rev() {
            v = v * p + c;
        }
        v
    }

    /// `a^(p^i)`.
    pub fn frobenius(&self, a: FqElem, i: u32) -> FqElem {
        let mut x = a;
        for _ in 0..i {
            x = self.pow(&x, self.inner.p);
        }
        x
    }

    /// Square root, when one exists (any element in characteristic two).
    pub fn sqrt(&self, a: FqElem) -> Option<FqElem> {
        if a.0 == 0 {
            return Some(a);
        }
        if self.inner.p == 2 {
            return Some(self.pow(&a, self.inner.q / 2));
        }
        if !self.is_square(&a) {
            return None;
        }
        // Small fields: search. Larger: Cantor-Zassenhaus on Y^2 - a.
        if self.inner.q <= 4096 {
            return self.elements().find(|x| self.mul(x, x) == a);
        }
        let ring = PolyRing::new(self.clone(), "Y");
        let f = vec![self.neg(&a), self.zero(), self.one()];
        let roots = crate::factor::fq::roots_of_split(self, &ring, &f, 0);
        roots.into_iter().next()
    }

    /// Embedding of `self = F_{p^a}` into `ext = F_{p^b}`, `a | b`.
    pub fn embedding_into(&self, ext: &FqField) -> Result<FqEmbedding> {
        if self.inner.p != ext.inner.p || !ext.inner.k.is_multiple_of(self.inner.k) {
            return Err(HitError::InvalidField(
                "no embedding between these fields".into(),
            ));
        }
        if self.inner.k == 1 {
            return Ok(FqEmbedding {
                source: self.clone(),
                target: ext.clone(),
                powers: vec![ext.one()],
            });
        }
        let ring = PolyRing::new(ext.clone(), "x");
        let m: Vec<FqElem> = self
            .inner
            .modulus
            .iter()
            .map(|&c| ext.from_u64(c))
            .collect();
        let roots = crate::factor::fq::roots_of_split(ext, &ring, &m, 0);
        let root = roots
            .into_iter()
            .min()
            .expect("irreducible modulus splits in extension");
        let mut powers = vec![ext.one()];
        for _ in 1..self.inner.k {
            let last = *powers.last().unwrap();
            powers.push(ext.mul(&last, &root));
        }
        Ok(FqEmbedding {
            source: self.clone(),
            target: ext.clone(),
            powers,
        })
    }
}

/// Field embedding `F_{p^a} -> F_{p^b}` determined by the image of the generator.
#[derive(Clone, Debug)]
pub struct FqEmbedding {
    source: FqField,
    target: FqField,
    powers: Vec<FqElem>,
}

impl FqEmbedding {
    pub fn apply(&self, a: FqElem) -> FqElem {
        if self.source.k() == 1 {
            return a;
        }
        let d = self.source.digits(a);
        let t = &self.target;
        d.iter().zip(&self.powers).fold(t.zero(), |acc, (&c, pw)| {
            t.add(&acc, &t.mul(&t.from_u64(c), pw))
        })
    }
    pub fn target(&self) -> &FqField {
        &self.target
    }
}

fn digits(inner: &FqInner, mut a: u64) -> Vec<u64> {
    let mut d = Vec::with_capacity(inner.k as usize);
    for _ in 0..inner.k {
        d.push(a % inner.p);
        a /= inner.p;
    }
    d
}

fn build_tables(inner: &FqInner) -> (Vec<u32>, Vec<u32>) {
    let q = inner.q;
    let order = q - 1;
    let mut factors = vec![];
    let mut r = order;
    let mut d = 2;
    while d * d <= r {
        if r.is_multiple_of(d) {
            factors.push(d);
            while r.is_multiple_of(d) {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    let pow = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = FqField::mul_slow(inner, acc, a);
            }
            a = FqField::mul_slow(inner, a, a);
            e >>= 1;
        }
        acc
    };
    let gen = (2..q)
        .find(|&g| factors.iter().all(|&f| pow(g, order / f) != 1))
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; order as usize];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u64;
    for (i, e) in exp.iter_mut().enumerate() {
        *e = x as u32;
        log[x as usize] = i as u32;
        x = FqField::mul_slow(inner, x, gen);
    }
    (exp, log)
}

// --- small prime-field polynomial helpers used for modulus selection ---

fn polymulmod_p(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    polyrem_p(prod, m, p)
}

fn polyrem_p(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let inv_lc = modinv(m[dm], p);
    while a.len() > dm {
        let c = ((*a.last().unwrap() as u128 * inv_lc as u128) % p as u128) as u64;
        let shift = a.len() - 1 - dm;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let sub = ((c as u128 * mj as u128) % p as u128) as u64;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn polygcd_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    while b.last() == Some(&0) {
        b.pop();
    }
    while !b.is_empty() {
        let r = polyrem_p(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn modinv(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.mod_floor(&(p as i128)) as u64
}

/// Ben-Or irreducibility test over `F_p`.
fn is_irreducible_fp(p: u64, m: &[u64]) -> bool {
    let n = m.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 0..n / 2 {
        // h = h^p mod m
        let mut acc = vec![1u64];
        let mut base = h.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = polymulmod_p(&acc, &base, m, p);
            }
            base = polymulmod_p(&base, &base, m, p);
            e >>= 1;
        }
        h = acc;
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = polygcd_p(m.to_vec(), diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for i in 0..count {
        let mut m = Vec::with_capacity(k + 1);
        let mut r = i;
        for _ in 0..k {
            m.push(r % p);
            r /= p;
        }
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        if is_irreducible_fp(p, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Ring for FqField {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        FqElem(0)
    }
    fn one(&self) -> FqElem {
        FqElem(1)
    }
    fn is_zero(&self, a: &FqElem) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let inner = &*self.inner;
        let p = inner.p;
        if inner.k == 1 {
            let s = a.0 + b.0;
            return FqElem(if s >= p { s - p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut v = 0u64;
        let mut place = 1u64;
        for _ in 0..inner.k {
            let d = (x % p + y % p) % p;
            v += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        FqElem(v)
    }
    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &FqElem) -> FqElem {
        let inner = &*self.inner;
        let p = inner.p;
        if inner.k == 1 {
            return FqElem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let mut v = 0u64;
        let mut place = 1u64;
        for _ in 0..inner.k {
            let d = x % p;
            v += ((p - d) % p) * place;
            place *= p;
            x /= p;
        }
        FqElem(v)
    }
    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let inner = &*self.inner;
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        if let Some((exp, log)) = &inner.tables {
            let s = (log[a.0 as usize] as u64 + log[b.0 as usize] as u64) % (inner.q - 1);
            return FqElem(exp[s as usize] as u64);
        }
        FqElem(Self::mul_slow(inner, a.0, b.0))
    }
    fn from_bigint(&self, n: &BigInt) -> FqElem {
        let p = BigInt::from(self.inner.p);
        FqElem(n.mod_floor(&p).to_u64().unwrap())
    }
    fn characteristic(&self) -> u64 {
        self.inner.p
    }
    /// Prime fields print the symmetric representative, so `2` in `F_3` reads `-1`.
    fn fmt_elem(&self, a: &FqElem) -> String {
        let p = self.inner.p;
        if self.inner.k == 1 && p > 2 && a.0 > p / 2 {
            format!("-{}", p - a.0)
        } else {
            self.format(*a)
        }
    }
}

impl Field for FqField {
    fn inv(&self, a: &FqElem) -> Option<FqElem> {
        let inner = &*self.inner;
        if a.0 == 0 {
            return None;
        }
        if inner.k == 1 {
            return Some(FqElem(modinv(a.0, inner.p)));
        }
        if let Some((exp, log)) = &inner.tables {
            let order = inner.q - 1;
            let l = log[a.0 as usize] as u64;
            return Some(FqElem(exp[((order - l) % order) as usize] as u64));
        }
        Some(self.pow(a, inner.q - 2))
    }
}

impl ConstField for FqField {
    fn factor_univariate(&self, f: &[FqElem], seed: u64) -> (FqElem, Vec<(Vec<FqElem>, usize)>) {
        crate::factor::fq::factor_fq(self, f, seed)
    }

    fn is_square(&self, a: &FqElem) -> bool {
        if a.0 == 0 || self.inner.p == 2 {
            return true;
        }
        self.pow(a, (self.inner.q - 1) / 2) == self.one()
    }

    fn pth_root(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.inner.q / self.inner.p)
    }
}
