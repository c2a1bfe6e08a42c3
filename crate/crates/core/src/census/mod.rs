//! Exhaustive specialization censuses over the box `[B]_{O_K}`.

mod report;

pub use report::{
    merge_reports, CensusKind, CensusReport, GaloisSummary, Witness, ORDER_VERSION, SCHEMA,
    WITNESS_CAP,
};

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{primes_from, Ring};
use crate::bounds::{delta_gamma, kernel, BoundKernel, Hit3Count, KernelParams, TheoremTag};
use crate::error::{HitError, Result};
use crate::factor::{integral_roots, require_irreducible, Factorization, MAX_BIPOLY_DEGREE};
use crate::field::{height_projective, rationals, BoxSpec, GlobalField, QElem};
use crate::galois::{
    classify_factored, dedekind_check, dedekind_sample, validate_generic, GroupId,
};
use crate::poly::{BiPoly, BiRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Index range `[start, end)` of the box enumeration; the whole box if `None`.
    pub range: Option<(u64, u64)>,
    /// Worker threads; the rayon default if `None`.
    pub threads: Option<usize>,
    pub seed: u64,
    pub witness_cap: usize,
    /// Record wall-clock time (makes reports non-reproducible).
    pub timing: bool,
    /// Primes used to cross-check each irreducible specialization's group by
    /// Dedekind sampling (K = Q only); 0 disables it.
    pub dedekind_primes: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            range: None,
            threads: None,
            seed: 0,
            witness_cap: WITNESS_CAP,
            timing: false,
            dedekind_primes: 0,
        }
    }
}

impl CensusOptions {
    /// Range of shard `i` out of `n` equal consecutive pieces of a box of size `len`.
    pub fn shard(len: u64, n: u64, i: u64) -> Result<(u64, u64)> {
        if n == 0 || i >= n {
            return Err(HitError::OutOfRange(format!("shard {i} of {n}")));
        }
        let lo = (len as u128 * i as u128 / n as u128) as u64;
        let hi = (len as u128 * (i + 1) as u128 / n as u128) as u64;
        Ok((lo, hi))
    }
}

/// Per-t result.
struct Outcome {
    hit: bool,
    degenerate: bool,
    class: String,
    roots: Vec<String>,
    /// Galois census only.
    group: Option<String>,
    inseparable: bool,
    reducible: bool,
    dedekind: u64,
}

impl Outcome {
    fn new(degenerate: bool) -> Self {
        Outcome {
            hit: false,
            degenerate,
            class: String::new(),
            roots: vec![],
            group: None,
            inseparable: false,
            reducible: false,
            dedekind: 0,
        }
    }
}

fn factor_class<E>(fz: &Factorization<E>) -> String {
    if fz.factors.is_empty() {
        return "const".into();
    }
    let mut parts: Vec<(usize, usize)> =
        fz.factors.iter().map(|(g, m)| (g.len() - 1, *m)).collect();
    parts.sort_unstable();
    parts
        .iter()
        .map(|&(d, m)| {
            if m == 1 {
                d.to_string()
            } else {
                format!("{d}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

struct Setup<'a, K: GlobalField> {
    br: &'a BiRing<K>,
    f: &'a BiPoly<K::Elem>,
    b: &'a BoxSpec,
    len: u64,
    range: (u64, u64),
    started: Instant,
}

fn setup<'a, K: GlobalField>(
    br: &'a BiRing<K>,
    f: &'a BiPoly<K::Elem>,
    b: &'a BoxSpec,
    opts: &CensusOptions,
) -> Result<Setup<'a, K>> {
    let started = Instant::now();
    let len = br.k.box_len(b)?;
    let range = opts.range.unwrap_or((0, len));
    if range.0 > range.1 || range.1 > len {
        return Err(HitError::OutOfRange(format!(
            "range [{}, {}) outside the box of size {len}",
            range.0, range.1
        )));
    }
    Ok(Setup {
        br,
        f,
        b,
        len,
        range,
        started,
    })
}

fn run_parallel<F>(range: (u64, u64), threads: Option<usize>, eval: F) -> Result<Vec<Outcome>>
where
    F: Fn(u64) -> Result<Outcome> + Sync + Send,
{
    let work = || {
        (range.0..range.1)
            .into_par_iter()
            .map(&eval)
            .collect::<Result<Vec<_>>>()
    };
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| HitError::Internal(e.to_string()))?
            .install(work),
        None => work(),
    }
}

fn kernel_params<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    b: &BoxSpec,
) -> Result<KernelParams> {
    let h = height_projective(&br.k, &br.coefficients(f))?;
    Ok(KernelParams::new(
        br.k.base_field(),
        br.d_y(f) as u32,
        br.d_t(f) as u32,
        h.ln(),
        b.log2(),
    ))
}

fn assemble<K: GlobalField>(
    s: &Setup<'_, K>,
    kind: CensusKind,
    outcomes: Vec<Outcome>,
    kernels: Vec<BoundKernel>,
    opts: &CensusOptions,
) -> CensusReport {
    let k = &s.br.k;
    let mut witnesses = vec![];
    let mut count = 0;
    let mut truncated = false;
    for (i, o) in (s.range.0..).zip(&outcomes) {
        if !o.hit {
            continue;
        }
        count += 1;
        if witnesses.len() < opts.witness_cap {
            witnesses.push(Witness {
                index: i,
                t: k.format_int_canonical(&k.box_elem(s.b, i)),
                class: o.class.clone(),
                degenerate: o.degenerate,
                roots: o.roots.clone(),
            });
        } else {
            truncated = true;
        }
    }
    let mut report = CensusReport {
        schema: SCHEMA.into(),
        order_version: ORDER_VERSION.into(),
        kind,
        field: k.base_field(),
        polynomial: s.br.format(s.f),
        box_bound: s.b.to_string(),
        box_size: s.len,
        range: [s.range.0, s.range.1],
        count,
        degenerate_count: outcomes.iter().filter(|o| o.degenerate).count() as u64,
        witnesses,
        witness_cap: opts.witness_cap,
        truncated,
        galois: None,
        kernels,
        log2_ratio: None,
        elapsed_ms: opts.timing.then(|| s.started.elapsed().as_millis() as u64),
    };
    report.set_ratio();
    report
}

/// `N_F(B)`: t in the box with `F(t, Y)` not irreducible over K (constants included).
pub fn census_reducible<K>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    b: &BoxSpec,
    opts: &CensusOptions,
) -> Result<CensusReport>
where
    K: GlobalField + Sync,
    K::Elem: Send + Sync,
{
    require_irreducible(br, f)?;
    let s = setup(br, f, b, opts)?;
    let k = &br.k;
    let a0 = br.a0(f);
    let outcomes = run_parallel(s.range, opts.threads, |i| {
        let t = k.embed_int(&k.box_elem(b, i));
        let mut o = Outcome::new(k.is_zero(&br.t.eval(&a0, &t)));
        let spec = br.specialize(f, &t);
        let fz = factor_spec(k, &spec, opts.seed)?;
        o.hit = !fz.is_irreducible();
        o.class = factor_class(&fz);
        Ok(o)
    })?;
    let kernels = kernel_params(br, f, b)
        .and_then(|p| kernel(TheoremTag::Hit01, &p))
        .into_iter()
        .collect();
    Ok(assemble(&s, CensusKind::Reducible, outcomes, kernels, opts))
}

fn factor_spec<K: GlobalField>(
    k: &K,
    spec: &[K::Elem],
    seed: u64,
) -> Result<Factorization<K::Elem>> {
    if spec.len() <= 1 {
        return Ok(Factorization {
            unit: spec.first().cloned().unwrap_or_else(|| k.zero()),
            factors: vec![],
            inseparable: false,
        });
    }
    k.factor_y(spec, seed)
}

/// t in the box such that `P(t, Y)` has a root in `O_K`, with the roots.
pub fn census_integral_roots<K>(
    br: &BiRing<K>,
    p: &BiPoly<K::Elem>,
    b: &BoxSpec,
    opts: &CensusOptions,
) -> Result<CensusReport>
where
    K: GlobalField + Sync,
    K::Elem: Send + Sync,
{
    if !br.is_integral(p) {
        return Err(HitError::OutOfRange(
            "P must have coefficients in O_K".into(),
        ));
    }
    require_irreducible(br, p)?;
    if br.d_y(p) == 0 {
        return Err(HitError::OutOfRange("P must involve Y".into()));
    }
    let s = setup(br, p, b, opts)?;
    let k = &br.k;
    let a0 = br.a0(p);
    let outcomes = run_parallel(s.range, opts.threads, |i| {
        let t = k.embed_int(&k.box_elem(b, i));
        let mut o = Outcome::new(k.is_zero(&br.t.eval(&a0, &t)));
        let spec = br.specialize(p, &t);
        if spec.len() >= 2 {
            let mut roots: Vec<String> = integral_roots(k, &spec)?
                .iter()
                .map(|r| k.format_int_canonical(r))
                .collect();
            roots.sort();
            roots.dedup();
            o.hit = !roots.is_empty();
            o.class = "roots".into();
            o.roots = roots;
        }
        Ok(o)
    })?;
    let kernels = kernel_params(br, p, b)
        .and_then(|kp| kernel(TheoremTag::Hilbert1, &kp))
        .into_iter()
        .collect();
    Ok(assemble(&s, CensusKind::Introots, outcomes, kernels, opts))
}

/// `E_F(B)`: t with `G_t != G`, plus the histogram of specialized groups.
///
/// Checks exactly, for every t with `a_0(t) != 0` and `F(t, Y)` separable,
/// that `|G_t|` divides `|G|` and that a reducible specialization is
/// exceptional; a failure is an `Internal` error.
pub fn census_galois<K>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    b: &BoxSpec,
    opts: &CensusOptions,
) -> Result<CensusReport>
where
    K: GlobalField + Sync,
    K::Elem: Send + Sync,
{
    let generic = validate_generic(br, f)?.group;
    let s = setup(br, f, b, opts)?;
    let k = &br.k;
    let a0 = br.a0(f);
    let d_y = br.d_y(f);
    let primes: Vec<u64> = primes_from(3).take(opts.dedekind_primes).collect();
    let outcomes = run_parallel(s.range, opts.threads, |i| {
        let t = k.embed_int(&k.box_elem(b, i));
        let mut o = Outcome::new(k.is_zero(&br.t.eval(&a0, &t)));
        let spec = br.specialize(f, &t);
        let fz = factor_spec(k, &spec, opts.seed)?;
        o.reducible = !fz.is_irreducible();
        let separable = !o.degenerate && !fz.inseparable && fz.factors.iter().all(|(_, m)| *m == 1);
        match classify_factored(k, &spec, &fz, true) {
            Ok(c) => {
                let g = c.group;
                o.hit = g.order < generic.order;
                o.class = g.label.clone();
                o.group = Some(abstract_label(&g));
                if separable && spec.len() == d_y + 1 {
                    if generic.order % g.order != 0 {
                        return Err(HitError::Internal(format!(
                            "|G_t| = {} does not divide |G| = {} at t = {}",
                            g.order,
                            generic.order,
                            k.fmt_elem(&t)
                        )));
                    }
                    if o.reducible && !o.hit {
                        return Err(HitError::Internal(format!(
                            "reducible separable specialization at t = {} is not exceptional",
                            k.fmt_elem(&t)
                        )));
                    }
                    if !primes.is_empty() && g.is_transitive() {
                        o.dedekind = dedekind_verify(k, &spec, &g, &primes)?;
                    }
                }
            }
            Err(HitError::Inseparable(_)) => {
                o.hit = true;
                o.inseparable = true;
                o.class = "inseparable".into();
            }
            Err(e) => return Err(e),
        }
        Ok(o)
    })?;
    let mut histogram: BTreeMap<String, u64> = BTreeMap::new();
    for o in &outcomes {
        if let Some(g) = &o.group {
            *histogram.entry(g.clone()).or_default() += 1;
        }
    }
    let dg = delta_gamma(&generic)?;
    let log2_b = b.log2();
    let summary = GaloisSummary {
        group: generic.clone(),
        delta_den: dg.delta_den,
        gamma_den: dg.gamma_den,
        log2_b_delta: log2_b * dg.delta(),
        log2_b_gamma: log2_b * dg.gamma(),
        histogram,
        inseparable_count: outcomes.iter().filter(|o| o.inseparable).count() as u64,
        reducible_count: outcomes.iter().filter(|o| o.reducible).count() as u64,
        dedekind_samples: outcomes.iter().map(|o| o.dedekind).sum(),
    };
    let mut kernels = vec![];
    if let Ok(mut p) = kernel_params(br, f, b) {
        p.group = Some(generic.clone());
        kernels.extend(kernel(TheoremTag::Hilbert35, &p));
        p.hit3 = Hit3Count::Exceptional;
        kernels.extend(kernel(TheoremTag::Hit3, &p));
    }
    let mut report = assemble(&s, CensusKind::Galois, outcomes, kernels, opts);
    report.galois = Some(summary);
    Ok(report)
}

/// `1+2:C2` -> `C2`.
fn abstract_label(g: &GroupId) -> String {
    g.label.rsplit(':').next().unwrap_or(&g.label).to_string()
}

/// Hard Dedekind check of an irreducible specialization over Q; returns the
/// number of primes sampled.
fn dedekind_verify<K: GlobalField>(
    k: &K,
    spec: &[K::Elem],
    g: &GroupId,
    primes: &[u64],
) -> Result<u64> {
    let Some(f) = spec
        .iter()
        .map(|c| k.as_rational(c))
        .collect::<Option<Vec<QElem>>>()
    else {
        return Ok(0);
    };
    let q = rationals();
    let den = f.iter().fold(BigInt::from(1), |acc, c| acc.lcm(&c.den));
    let scaled: Vec<QElem> = f.iter().map(|c| q.mul(c, &q.from_bigint(&den))).collect();
    let samples = dedekind_sample(&scaled, primes)?;
    let rep = dedekind_check(g, &samples)?;
    if !rep.consistent {
        return Err(HitError::Internal(format!(
            "cycle type impossible for {} observed for {}",
            g.label,
            q.fmt_elem(&scaled[0])
        )));
    }
    Ok(rep.samples as u64)
}

/// Whether the census input passes validation for `kind`, without running it.
pub fn validate<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    kind: CensusKind,
) -> Result<()> {
    if br.total_degree(f) > MAX_BIPOLY_DEGREE {
        return Err(HitError::DegreeCap(format!(
            "total degree {} exceeds {MAX_BIPOLY_DEGREE}",
            br.total_degree(f)
        )));
    }
    match kind {
        CensusKind::Galois => validate_generic(br, f).map(|_| ()),
        _ => require_irreducible(br, f),
    }
}
