use hit_core::census::{CensusKind, CensusOptions, CensusReport, ORDER_VERSION, SCHEMA};
use hit_core::field::{BaseField, BoxSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Everything needed to rerun a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub kind: CensusKind,
    pub field: String,
    pub poly: String,
    #[serde(rename = "box")]
    pub box_bound: String,
    pub seed: u64,
    pub witness_cap: usize,
    /// `(shard, shards)`; absent for a whole-box run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shard: Option<(u64, u64)>,
    #[serde(default)]
    pub dedekind_primes: usize,
    #[serde(default)]
    pub timing: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(BaseField, BoxSpec), CliError> {
        let field = BaseField::parse(&self.field)?;
        let b = BoxSpec::parse(field, &self.box_bound)?;
        b.validate()?;
        if let Some((i, n)) = self.shard {
            if n == 0 || i >= n {
                return Err(CliError::Usage(format!(
                    "shard {i} is not below the shard count {n}"
                )));
            }
        }
        if self.witness_cap == 0 {
            return Err(CliError::Usage("witness cap must be positive".into()));
        }
        Ok((field, b))
    }

    /// Census options for a box of `box_size` elements; `threads` never enters the report.
    pub fn options(
        &self,
        box_size: u64,
        threads: Option<usize>,
    ) -> Result<CensusOptions, CliError> {
        let range = match self.shard {
            Some((i, n)) => Some(CensusOptions::shard(box_size, n, i)?),
            None => None,
        };
        Ok(CensusOptions {
            range,
            threads,
            seed: self.seed,
            witness_cap: self.witness_cap,
            timing: self.timing,
            dedekind_primes: self.dedekind_primes,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Versions {
    pub hit: String,
    pub schema: String,
    pub order: String,
}

impl Versions {
    pub fn current() -> Self {
        Versions {
            hit: env!("CARGO_PKG_VERSION").to_string(),
            schema: SCHEMA.to_string(),
            order: ORDER_VERSION.to_string(),
        }
    }
}

/// A census report with the configuration that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub config: RunConfig,
    pub versions: Versions,
    /// The implicit constants of every kernel are 1; ratios are not theorem checks.
    pub note: String,
    pub report: CensusReport,
}

pub const NOTE: &str = "bound kernels use implicit constant 1; log2_ratio = log2(count / kernel)";

impl Envelope {
    pub fn new(config: RunConfig, report: CensusReport) -> Self {
        Envelope {
            config,
            versions: Versions::current(),
            note: NOTE.to_string(),
            report,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
