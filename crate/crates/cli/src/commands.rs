use std::cmp::Ordering;
use std::fs;
use std::io::Write;
use std::path::Path;

use hit_core::arith::Ring;
use hit_core::bounds::{bp_heights, kernel, BoundKernel, Hit3Count, KernelParams, TheoremTag};
use hit_core::census::{
    census_galois, census_integral_roots, census_reducible, merge_reports, CensusKind, CensusReport,
};
use hit_core::factor::factor_bipoly;
use hit_core::field::{fqu, height_affine, height_projective, rationals, BaseField, GlobalField};
use hit_core::galois::{galois_group_generic, galois_group_specialized, is_exceptional, GroupId};
use hit_core::poly::{
    discriminant_y, monicize, shift_exponent, shift_transform, subset_resolvent, BiPoly, BiRing,
};
use hit_core::HitError;
use serde_json::{json, Value};

use crate::config::{Envelope, RunConfig};
use crate::{BoundArgs, CensusArgs, CliError, ConstructCmd, Format, Hit3Arg, OutArgs, PolyArgs};

/// Runs `$body` with `$br` bound to the bivariate ring over the parsed field.
macro_rules! with_ring {
    ($field:expr, |$br:ident| $body:expr) => {
        match BaseField::parse($field)? {
            BaseField::Q => {
                let $br = BiRing::new(rationals());
                $body
            }
            BaseField::FqU { q } => {
                let $br = BiRing::new(fqu(q)?);
                $body
            }
        }
    };
}

struct Rendered {
    text: String,
    json: String,
    csv: Option<String>,
}

impl Rendered {
    fn new(text: String, json: Value) -> Result<Self, CliError> {
        Ok(Rendered {
            text,
            json: pretty(&json)?,
            csv: None,
        })
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn emit(out: &OutArgs, default: Format, r: Rendered) -> Result<(), CliError> {
    let body = match out.format.unwrap_or(default) {
        Format::Text => {
            let mut t = r.text;
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Json => r.json,
        Format::Csv => r.csv.ok_or_else(|| {
            CliError::Usage("csv output is only available for census reports".into())
        })?,
    };
    match &out.out {
        Some(path) => fs::write(path, body).map_err(|e| io_err(path, e)),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| io_err(Path::new("<stdout>"), e)),
    }
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn upoly_t<K: GlobalField>(br: &BiRing<K>, p: &[K::Elem]) -> String {
    br.format(&br.y.trim(vec![p.to_vec()]))
}

fn upoly_y<K: GlobalField>(br: &BiRing<K>, p: &[K::Elem]) -> String {
    br.format(
        &br.y
            .trim(p.iter().map(|c| br.t.constant(c.clone())).collect()),
    )
}

pub fn parse(args: &PolyArgs, out: &OutArgs) -> Result<(), CliError> {
    with_ring!(&args.field, |br| {
        let f = br.parse(&args.poly)?;
        let s = br.format(&f);
        let json = json!({
            "field": BaseField::parse(&args.field)?.to_string(),
            "poly": s,
            "d_Y": br.d_y(&f),
            "d_T": br.d_t(&f),
            "total_degree": br.total_degree(&f),
        });
        emit(out, Format::Text, Rendered::new(s, json)?)
    })
}

pub fn height(args: &PolyArgs, out: &OutArgs) -> Result<(), CliError> {
    let q = rationals();
    with_ring!(&args.field, |br| {
        let f = br.parse(&args.poly)?;
        let c = br.coefficients(&f);
        let hp = height_projective(&br.k, &c)?;
        let ha = height_affine(&br.k, &c)?;
        let (hv, av) = (q.fmt_elem(hp.value()), q.fmt_elem(ha.value()));
        let text = format!(
            "H(F)     = {hv}  (ln {:.6})\nH_aff(F) = {av}  (ln {:.6})",
            hp.ln(),
            ha.ln()
        );
        let json = json!({
            "poly": br.format(&f),
            "height": hv,
            "ln_height": hp.ln(),
            "height_affine": av,
            "ln_height_affine": ha.ln(),
        });
        emit(out, Format::Text, Rendered::new(text, json)?)
    })
}

/// Sorts by degree, then textually with `-` before `+`.
fn factor_order(a: &(String, usize, usize), b: &(String, usize, usize)) -> Ordering {
    let key = |s: &str| s.replace(" - ", " \u{1} ");
    (a.1, key(&a.0)).cmp(&(b.1, key(&b.0)))
}

fn factored<K: GlobalField>(
    br: &BiRing<K>,
    f: &BiPoly<K::Elem>,
    seed: u64,
) -> Result<(K::Elem, Vec<(String, usize, usize)>), CliError> {
    let k = &br.k;
    let fs = factor_bipoly(br, f, seed)?;
    let prod = fs
        .iter()
        .fold(br.one(), |acc, (g, m)| br.mul(&acc, &br.pow(g, *m as u64)));
    let ((i, j), c) = br
        .terms(&prod)
        .into_iter()
        .next()
        .ok_or_else(|| HitError::Internal("empty factor product".into()))?;
    let unit = k
        .div(&br.coeff(f, i, j), &c)
        .ok_or_else(|| HitError::Internal("zero leading coefficient".into()))?;
    let mut parts: Vec<(String, usize, usize)> = fs
        .iter()
        .map(|(g, m)| (br.format(g), br.total_degree(g), *m))
        .collect();
    parts.sort_by(factor_order);
    Ok((unit, parts))
}

pub fn factor(args: &PolyArgs, seed: u64, out: &OutArgs) -> Result<(), CliError> {
    with_ring!(&args.field, |br| {
        let f = br.parse(&args.poly)?;
        let (unit, parts) = factored(&br, &f, seed)?;
        let k = &br.k;
        let mut text = String::new();
        let us = k.fmt_elem(&unit);
        if parts.is_empty() {
            text = us.clone();
        } else if k.is_one(&unit) {
        } else if k.is_one(&k.neg(&unit)) {
            text.push('-');
        } else if us.contains(' ') {
            text.push_str(&format!("({us})*"));
        } else {
            text.push_str(&format!("{us}*"));
        }
        for (g, _, m) in &parts {
            text.push_str(&format!("({g})"));
            if *m > 1 {
                text.push_str(&format!("^{m}"));
            }
        }
        let json = json!({
            "poly": br.format(&f),
            "unit": us,
            "factors": parts.iter().map(|(g, _, m)| json!({"factor": g, "multiplicity": m})).collect::<Vec<_>>(),
            "display": text,
        });
        emit(out, Format::Text, Rendered::new(text, json)?)
    })
}

pub fn galois(args: &PolyArgs, t: Option<&str>, out: &OutArgs) -> Result<(), CliError> {
    with_ring!(&args.field, |br| {
        let f = br.parse(&args.poly)?;
        let k = &br.k;
        let generic = galois_group_generic(&br, &f);
        let mut lines = vec![];
        let mut json = json!({ "poly": br.format(&f) });
        match (&generic, t) {
            (Ok(c), _) => {
                lines.push(format!(
                    "G = {} (order {}, degree {})",
                    c.group.label, c.group.order, c.group.degree
                ));
                lines.push(format!("disc = {}", c.disc));
                if let Some(r) = &c.resolvent {
                    lines.push(format!("resolvent cubic factors: {r}"));
                }
                json["generic"] = json!({
                    "group": c.group,
                    "disc": c.disc,
                    "resolvent": c.resolvent,
                });
            }
            (Err(e), None) => return Err(e.clone().into()),
            (Err(e), Some(_)) => lines.push(format!("G: {e}")),
        }
        if let Some(ts) = t {
            let tv = k.parse_elem(ts)?;
            let spec = br.specialize(&f, &tv);
            let (label, order) = match galois_group_specialized(k, &spec) {
                Ok(c) => (c.group.label, Some(c.group.order)),
                Err(HitError::Inseparable(_)) => ("inseparable".to_string(), None),
                Err(e) => return Err(e.into()),
            };
            let exceptional = match &generic {
                Ok(c) => Some(is_exceptional(k, &c.group, &spec)?),
                Err(_) => None,
            };
            lines.push(format!("F(t, Y) = {}", upoly_y(&br, &spec)));
            let mut l = format!("G_t = {label}");
            if let Some(o) = order {
                l.push_str(&format!(" (order {o})"));
            }
            if let Some(x) = exceptional {
                l.push_str(if x { ", exceptional" } else { ", G_t = G" });
            }
            lines.push(l);
            json["specialization"] = json!({
                "t": k.fmt_elem(&tv),
                "poly": upoly_y(&br, &spec),
                "group": label,
                "order": order,
                "exceptional": exceptional,
            });
        }
        emit(out, Format::Text, Rendered::new(lines.join("\n"), json)?)
    })
}

pub fn construct(cmd: &ConstructCmd, out: &OutArgs) -> Result<(), CliError> {
    let args = match cmd {
        ConstructCmd::Monicize { poly }
        | ConstructCmd::Shift { poly, .. }
        | ConstructCmd::Resolvent { poly, .. }
        | ConstructCmd::Discriminant { poly } => poly,
    };
    with_ring!(&args.field, |br| {
        let f = br.parse(&args.poly)?;
        let (name, result, extra) = match cmd {
            ConstructCmd::Monicize { .. } => {
                ("monicize", br.format(&monicize(&br, &f)?), json!({}))
            }
            ConstructCmd::Shift { e, .. } => {
                let e = match e {
                    Some(e) => *e,
                    None => shift_exponent(&br, &f)?,
                };
                (
                    "shift",
                    br.format(&shift_transform(&br, &f, e)?),
                    json!({ "E": e }),
                )
            }
            ConstructCmd::Resolvent { m, j, .. } => (
                "resolvent",
                br.format(&subset_resolvent(&br, &f, *m, *j)?),
                json!({ "m": m, "j": j }),
            ),
            ConstructCmd::Discriminant { .. } => {
                let d = discriminant_y(&br, &f)?;
                (
                    "discriminant",
                    upoly_t(&br, &d.value),
                    json!({ "inseparable": d.inseparable }),
                )
            }
        };
        let json = json!({
            "construction": name,
            "input": br.format(&f),
            "result": result,
            "parameters": extra,
        });
        emit(out, Format::Text, Rendered::new(result, json)?)
    })
}

fn config_from(args: &CensusArgs) -> Result<RunConfig, CliError> {
    let shard = match (args.shard, args.shards) {
        (Some(i), Some(n)) => Some((i, n)),
        _ => None,
    };
    let cfg = RunConfig {
        kind: args.kind.into(),
        field: BaseField::parse(&args.poly.field)?.to_string(),
        poly: args.poly.poly.clone(),
        box_bound: args.box_bound.clone(),
        seed: args.seed,
        witness_cap: args.witness_cap,
        shard,
        dedekind_primes: args.dedekind,
        timing: args.timing,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Runs the census described by `cfg`.
pub fn run_config(cfg: &RunConfig, threads: Option<usize>) -> Result<CensusReport, CliError> {
    let (_, b) = cfg.validate()?;
    with_ring!(&cfg.field, |br| {
        let f = br.parse(&cfg.poly)?;
        let opts = cfg.options(br.k.box_len(&b)?, threads)?;
        let r = match cfg.kind {
            CensusKind::Reducible => census_reducible(&br, &f, &b, &opts)?,
            CensusKind::Introots => census_integral_roots(&br, &f, &b, &opts)?,
            CensusKind::Galois => census_galois(&br, &f, &b, &opts)?,
        };
        Ok(r)
    })
}

fn census_text(r: &CensusReport) -> String {
    let mut lines = vec![
        format!(
            "{} census of {} over {} with B = {}",
            r.kind, r.polynomial, r.field, r.box_bound
        ),
        format!("range [{}, {}) of {}", r.range[0], r.range[1], r.box_size),
        format!("count = {}", r.count),
    ];
    if r.degenerate_count > 0 {
        lines.push(format!("degenerate (a_0(t) = 0) = {}", r.degenerate_count));
    }
    if let Some(g) = &r.galois {
        lines.push(format!(
            "G = {}, delta = 1/{}, gamma = 1/{}, N_F(B) = {}",
            g.group.label, g.delta_den, g.gamma_den, g.reducible_count
        ));
        for (l, c) in &g.histogram {
            lines.push(format!("  {l}: {c}"));
        }
    }
    for k in &r.kernels {
        let ratio = if r.count > 0 {
            format!("{:.3}", (r.count as f64).log2() - k.log2)
        } else {
            "-".into()
        };
        lines.push(format!(
            "kernel {}: log2 = {:.3}, log2(count/kernel) = {ratio}",
            k.theorem, k.log2
        ));
    }
    let shown: Vec<&str> = r.witnesses.iter().take(20).map(|w| w.t.as_str()).collect();
    if !shown.is_empty() {
        let more = if r.witnesses.len() > shown.len() || r.truncated {
            ", ..."
        } else {
            ""
        };
        lines.push(format!("witnesses: {}{more}", shown.join(", ")));
    }
    lines.join("\n")
}

fn render_envelope(env: &Envelope) -> Result<Rendered, CliError> {
    Ok(Rendered {
        text: census_text(&env.report),
        json: env.to_json()?,
        csv: Some(env.report.to_csv()),
    })
}

pub fn census(args: &CensusArgs, threads: Option<usize>, verify: bool) -> Result<(), CliError> {
    let cfg = config_from(args)?;
    let report = run_config(&cfg, threads)?;
    let env = Envelope::new(cfg, report);
    if !verify {
        return emit(&args.output, Format::Json, render_envelope(&env)?);
    }
    let r = &env.report;
    let k = r
        .kernels
        .first()
        .ok_or_else(|| HitError::Internal("census report without a kernel".into()))?;
    let ok = r.count == 0 || (r.count as f64).log2() <= k.log2;
    let mut rendered = render_envelope(&env)?;
    rendered.text.push_str(&format!(
        "\nverify: count {} {} kernel {} (log2 {:.3})",
        r.count,
        if ok { "<=" } else { ">" },
        k.theorem,
        k.log2
    ));
    emit(&args.output, Format::Text, rendered)?;
    if !ok {
        return Err(CliError::Violation(format!(
            "{} exceeds the {} kernel",
            r.count, k.theorem
        )));
    }
    Ok(())
}

fn needs_group(t: TheoremTag) -> bool {
    matches!(
        t,
        TheoremTag::Hilbert35 | TheoremTag::Hilbert7 | TheoremTag::Hit3
    )
}

fn kernel_params(args: &BoundArgs, tag: TheoremTag) -> Result<KernelParams, CliError> {
    let field = BaseField::parse(&args.field)?;
    if !(args.b > 0.0) {
        return Err(CliError::Usage("B must be positive".into()));
    }
    let mut p = KernelParams::new(field, 0, 0, 0.0, args.b.log2());
    let mut have = (false, false, false);
    if let Some(poly) = &args.poly {
        with_ring!(&args.field, |br| {
            let f = br.parse(poly)?;
            p.d_y = br.d_y(&f) as u32;
            p.d_t = br.d_t(&f) as u32;
            p.ln_h = height_projective(&br.k, &br.coefficients(&f))?.ln();
            have = (true, true, true);
            if tag == TheoremTag::Bp {
                let (d, ln_aff, ln_top) = bp_heights(&br, &f)?;
                p.d = Some(d);
                p.ln_h_aff = Some(ln_aff);
                p.ln_h_top = Some(ln_top);
            }
            if needs_group(tag) && args.group.is_none() {
                p.group = Some(galois_group_generic(&br, &f)?.group);
            }
        })
    }
    let ln_of = |h: f64, name: &str| -> Result<f64, CliError> {
        if h >= 1.0 {
            Ok(h.ln())
        } else {
            Err(CliError::Usage(format!("{name} must be at least 1")))
        }
    };
    if let Some(d) = args.d_y {
        p.d_y = d;
        have.0 = true;
    }
    if let Some(d) = args.d_t {
        p.d_t = d;
        have.1 = true;
    }
    if let Some(h) = args.h {
        p.ln_h = ln_of(h, "H")?;
        have.2 = true;
    }
    let missing: Vec<&str> = [(have.0, "--dY"), (have.1, "--dT"), (have.2, "--H")]
        .into_iter()
        .filter(|(h, _)| !h)
        .map(|(_, n)| n)
        .collect();
    if !missing.is_empty() {
        return Err(
            HitError::MissingParameter(format!("{} (or --poly)", missing.join(", "))).into(),
        );
    }
    if let Some(d) = args.d {
        p.d = Some(d);
    }
    if let Some(h) = args.h_aff {
        p.ln_h_aff = Some(ln_of(h, "H-aff")?);
    }
    if let Some(h) = args.h_top {
        p.ln_h_top = Some(ln_of(h, "H-top")?);
    }
    if args.b_of_p.is_some() {
        p.b_of_p = args.b_of_p;
    }
    if let Some(g) = &args.group {
        p.group = Some(GroupId::catalog(g)?);
    }
    p.subgroup = args.subgroup.clone();
    p.hit3 = match args.hit3 {
        Hit3Arg::Exceptional => Hit3Count::Exceptional,
        Hit3Arg::Reducible => Hit3Count::Reducible,
    };
    Ok(p)
}

fn kernel_text(k: &BoundKernel) -> String {
    let mut lines = vec![format!(
        "{}: log2 kernel = {:.3} (implicit constant {})",
        k.theorem, k.log2, k.constant
    )];
    for f in &k.breakdown {
        lines.push(format!("  {:<24} {:>12.3}", f.name, f.log2));
    }
    for n in &k.notes {
        lines.push(format!("note: {n}"));
    }
    lines.join("\n")
}

pub fn bound(args: &BoundArgs) -> Result<(), CliError> {
    let tag: TheoremTag = args.theorem.parse()?;
    let params = kernel_params(args, tag)?;
    let k = kernel(tag, &params)?;
    let json = json!({ "params": params, "kernel": k });
    emit(
        &args.output,
        Format::Text,
        Rendered::new(kernel_text(&k), json)?,
    )
}

pub fn merge(files: &[std::path::PathBuf], out: &OutArgs) -> Result<(), CliError> {
    let envs: Vec<Envelope> = files
        .iter()
        .map(|p| Ok(serde_json::from_str(&read(p)?)?))
        .collect::<Result<_, CliError>>()?;
    let first = &envs[0];
    let base = RunConfig {
        shard: None,
        ..first.config.clone()
    };
    for e in &envs {
        if (RunConfig {
            shard: None,
            ..e.config.clone()
        }) != base
            || e.versions != first.versions
        {
            return Err(CliError::Usage(
                "reports come from different configurations".into(),
            ));
        }
    }
    let merged = merge_reports(envs.iter().map(|e| e.report.clone()).collect())?;
    if !merged.is_complete() {
        return Err(CliError::Usage(format!(
            "shards cover [{}, {}) of a box with {} elements",
            merged.range[0], merged.range[1], merged.box_size
        )));
    }
    let env = Envelope {
        config: base,
        report: merged,
        ..first.clone()
    };
    emit(out, Format::Json, render_envelope(&env)?)
}

pub fn replay(path: &Path, threads: Option<usize>) -> Result<(), CliError> {
    let stored = read(path)?;
    let env: Envelope = serde_json::from_str(&stored)?;
    let now = crate::config::Versions::current();
    if env.versions != now {
        return Err(CliError::Mismatch(format!(
            "report written by {:?}, this is {:?}",
            env.versions, now
        )));
    }
    let report = run_config(&env.config, threads)?;
    let mut fresh = Envelope::new(env.config.clone(), report);
    let (old, new) = if env.config.timing {
        // wall-clock time is the one field allowed to differ
        let mut old = env.clone();
        old.report.elapsed_ms = None;
        fresh.report.elapsed_ms = None;
        (old.to_json()?, fresh.to_json()?)
    } else {
        (stored, fresh.to_json()?)
    };
    if old != new {
        let line = old
            .lines()
            .zip(new.lines())
            .position(|(a, b)| a != b)
            .map_or(old.lines().count().min(new.lines().count()) + 1, |i| i + 1);
        return Err(CliError::Mismatch(format!(
            "{} differs from the rerun at line {line}",
            path.display()
        )));
    }
    println!(
        "replay ok: {} ({} bytes identical)",
        path.display(),
        new.len()
    );
    Ok(())
}
