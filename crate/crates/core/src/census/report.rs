use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundKernel;
use crate::error::{HitError, Result};
use crate::field::BaseField;
use crate::galois::GroupId;

pub const SCHEMA: &str = "census-v1";
/// Q: 0, 1, -1, 2, -2, ...; F_q(u): base-q digits of the index, constant term first.
pub const ORDER_VERSION: &str = "order-v1";
pub const WITNESS_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusKind {
    /// `F(t, Y)` not irreducible over K.
    Reducible,
    /// `P(t, Y)` has a root in `O_K`.
    Introots,
    /// `G_t != G`.
    Galois,
}

impl CensusKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CensusKind::Reducible => "reducible",
            CensusKind::Introots => "introots",
            CensusKind::Galois => "galois",
        }
    }
}

impl fmt::Display for CensusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CensusKind {
    type Err = HitError;
    fn from_str(s: &str) -> Result<Self> {
        [
            CensusKind::Reducible,
            CensusKind::Introots,
            CensusKind::Galois,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| HitError::Parse(format!("unknown census kind '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Position of `t` in the box enumeration.
    pub index: u64,
    pub t: String,
    /// Factor degrees (`1+1`, `1^2`, `const`), `roots`, or the group label.
    pub class: String,
    /// `a_0(t) = 0`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub roots: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaloisSummary {
    pub group: GroupId,
    pub delta_den: u64,
    pub gamma_den: u64,
    /// `log2 B^{delta_G}` and `log2 B^{gamma_G}`.
    pub log2_b_delta: f64,
    pub log2_b_gamma: f64,
    /// t-count per group of the splitting field of `F(t, Y)` (abstract label).
    pub histogram: BTreeMap<String, u64>,
    pub inseparable_count: u64,
    /// `N_F(B)` over the same box.
    pub reducible_count: u64,
    pub dedekind_samples: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: String,
    pub order_version: String,
    pub kind: CensusKind,
    pub field: BaseField,
    pub polynomial: String,
    pub box_bound: String,
    pub box_size: u64,
    /// Enumerated index range `[start, end)`.
    pub range: [u64; 2],
    pub count: u64,
    /// Enumerated t with `a_0(t) = 0`.
    pub degenerate_count: u64,
    pub witnesses: Vec<Witness>,
    pub witness_cap: usize,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub galois: Option<GaloisSummary>,
    /// Kernels of the matching theorems, implicit constant 1; the first one
    /// defines `log2_ratio`.
    pub kernels: Vec<BoundKernel>,
    /// `log2(count / kernel)`; absent when the count is zero.
    pub log2_ratio: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CensusReport {
    pub fn is_complete(&self) -> bool {
        self.range == [0, self.box_size]
    }

    pub fn set_ratio(&mut self) {
        self.log2_ratio = match (self.count, self.kernels.first()) {
            (0, _) | (_, None) => None,
            (c, Some(k)) => Some((c as f64).log2() - k.log2),
        };
    }

    /// Flattened witness table.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,t,class,degenerate,roots\n");
        for w in &self.witnesses {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                w.index,
                csv_field(&w.t),
                csv_field(&w.class),
                w.degenerate,
                csv_field(&w.roots.join(";"))
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Combines shard reports covering disjoint consecutive ranges.
pub fn merge_reports(mut parts: Vec<CensusReport>) -> Result<CensusReport> {
    if parts.is_empty() {
        return Err(HitError::MissingParameter("no reports to merge".into()));
    }
    parts.sort_by_key(|r| r.range[0]);
    let first = parts[0].clone();
    let mut out = CensusReport {
        range: [first.range[0], first.range[0]],
        count: 0,
        degenerate_count: 0,
        witnesses: vec![],
        truncated: false,
        log2_ratio: None,
        elapsed_ms: None,
        galois: first.galois.clone().map(|g| GaloisSummary {
            histogram: BTreeMap::new(),
            inseparable_count: 0,
            reducible_count: 0,
            dedekind_samples: 0,
            ..g
        }),
        ..first.clone()
    };
    for r in &parts {
        let same = r.schema == first.schema
            && r.order_version == first.order_version
            && r.kind == first.kind
            && r.field == first.field
            && r.polynomial == first.polynomial
            && r.box_bound == first.box_bound
            && r.witness_cap == first.witness_cap;
        if !same {
            return Err(HitError::Parse(
                "reports describe different censuses".into(),
            ));
        }
        if r.range[0] != out.range[1] {
            return Err(HitError::Parse(format!(
                "shard ranges are not contiguous at index {}",
                out.range[1]
            )));
        }
        out.range[1] = r.range[1];
        out.count += r.count;
        out.degenerate_count += r.degenerate_count;
        out.truncated |= r.truncated;
        for w in &r.witnesses {
            if out.witnesses.len() < out.witness_cap {
                out.witnesses.push(w.clone());
            } else {
                out.truncated = true;
            }
        }
        if let (Some(acc), Some(g)) = (out.galois.as_mut(), r.galois.as_ref()) {
            for (k, v) in &g.histogram {
                *acc.histogram.entry(k.clone()).or_default() += v;
            }
            acc.inseparable_count += g.inseparable_count;
            acc.reducible_count += g.reducible_count;
            acc.dedekind_samples += g.dedekind_samples;
        }
    }
    if parts.iter().all(|r| r.elapsed_ms.is_some()) {
        out.elapsed_ms = parts.iter().filter_map(|r| r.elapsed_ms).max();
    }
    out.set_ratio();
    Ok(out)
}
