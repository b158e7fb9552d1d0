//! Catalog-wide cross-check of the predictions against recognition.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::oracle::{corollary_probes, cross_check, CorollaryProbe, TheoremPrediction};

pub const DEFAULT_MAX_ORDER: usize = 48;
pub const MAX_CENSUS_ORDER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    Semidihedral,
    Symmetric,
    Alternating,
    Products,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Dicyclic,
        Family::Semidihedral,
        Family::Symmetric,
        Family::Alternating,
        Family::Products,
    ];

    /// Default members of the family, unfiltered by order.
    fn members(self) -> Vec<GroupSpec> {
        use GroupSpec::*;
        match self {
            Family::Cyclic => (1..=48).map(Cyclic).collect(),
            Family::Dihedral => (2..=24).map(|n| Dihedral(2 * n)).collect(),
            Family::Dicyclic => (2..=12).map(|n| Dicyclic(4 * n)).collect(),
            Family::Semidihedral => (2..=6).map(|n| Semidihedral(8 * n)).collect(),
            Family::Symmetric => (3..=4).map(Symmetric).collect(),
            Family::Alternating => (3..=5).map(Alternating).collect(),
            Family::Products => ["Z2xZ4", "Z2xZ2xZ3", "Z3xZ9", "Z2xZ2"]
                .iter()
                .map(|s| s.parse().expect("built-in product spec"))
                .collect(),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "dihedral" => Family::Dihedral,
            "dicyclic" | "quaternion" => Family::Dicyclic,
            "semidihedral" => Family::Semidihedral,
            "symmetric" => Family::Symmetric,
            "alternating" => Family::Alternating,
            "products" | "product" => Family::Products,
            _ => return Err(Error::Argument(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_order: usize,
    pub families: Vec<Family>,
    pub workers: usize,
    pub output_format: OutputFormat,
    pub fail_fast: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_order: DEFAULT_MAX_ORDER,
            families: Family::ALL.to_vec(),
            workers: 1,
            output_format: OutputFormat::Csv,
            fail_fast: false,
        }
    }
}

impl CensusConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_order > MAX_CENSUS_ORDER {
            return Err(Error::Capacity(format!(
                "max order {} exceeds recognition budget {MAX_CENSUS_ORDER}",
                self.max_order
            )));
        }
        if self.workers == 0 {
            return Err(Error::Argument("workers must be at least 1".into()));
        }
        Ok(())
    }

    /// Groups in the configured catalog, sorted by (order, family, name).
    pub fn catalog(&self) -> Vec<GroupSpec> {
        let mut specs: Vec<GroupSpec> = self
            .families
            .iter()
            .flat_map(|f| f.members())
            .filter(|s| s.expected_order().is_some_and(|n| n <= self.max_order))
            .collect();
        specs.sort_by_cached_key(|s| (s.expected_order(), s.family(), s.to_string()));
        specs.dedup();
        specs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub groups: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub hypothesis_skips: usize,
    pub inconsistencies: usize,
    pub errors: usize,
    pub flagged_probes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupError {
    pub group: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupTiming {
    pub group: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    pub rows: Vec<TheoremPrediction>,
    pub probes: Vec<CorollaryProbe>,
    pub errors: Vec<GroupError>,
    pub summary: CensusSummary,
    pub timing: Vec<GroupTiming>,
}

struct GroupOutcome {
    name: String,
    result: Result<(Vec<TheoremPrediction>, Vec<CorollaryProbe>)>,
    millis: u64,
}

fn check_group(spec: &GroupSpec) -> GroupOutcome {
    let start = Instant::now();
    let name = spec.to_string();
    let result = spec.build().and_then(|g| {
        let rows = cross_check(&name, &g)?;
        let probes = corollary_probes(spec, &g, &rows);
        Ok((rows, probes))
    });
    GroupOutcome {
        name,
        result,
        millis: start.elapsed().as_millis() as u64,
    }
}

pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    config.validate()?;
    let specs = config.catalog();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Argument(format!("cannot start worker pool: {e}")))?;
    // indexed collect keeps catalog order regardless of scheduling
    let outcomes: Vec<GroupOutcome> = pool.install(|| specs.par_iter().map(check_group).collect());

    let mut report = CensusReport {
        rows: Vec::new(),
        probes: Vec::new(),
        errors: Vec::new(),
        summary: CensusSummary {
            groups: outcomes.len(),
            ..Default::default()
        },
        timing: Vec::new(),
    };
    for o in outcomes {
        report.timing.push(GroupTiming {
            group: o.name.clone(),
            millis: o.millis,
        });
        match o.result {
            Ok((rows, probes)) => {
                report.rows.extend(rows);
                report.probes.extend(probes);
            }
            Err(e) if config.fail_fast => return Err(e),
            Err(e) => report.errors.push(GroupError {
                group: o.name,
                message: e.to_string(),
            }),
        }
    }
    let s = &mut report.summary;
    for r in &report.rows {
        match (r.is_skip(), r.agree) {
            (true, _) => s.hypothesis_skips += 1,
            (false, true) => s.agreements += 1,
            (false, false) => s.disagreements += 1,
        }
        if !r.consistent {
            s.inconsistencies += 1;
        }
    }
    s.errors = report.errors.len();
    s.flagged_probes = report.probes.iter().filter(|p| !p.is_clean()).count();
    Ok(report)
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

impl CensusReport {
    /// No disagreement, inconsistency or group failure. Flagged corollary
    /// probes are reported but do not count against this.
    pub fn is_clean(&self) -> bool {
        self.summary.disagreements == 0
            && self.summary.inconsistencies == 0
            && self.summary.errors == 0
    }

    /// One header line and one line per row:
    /// `group,order,variant,property,predicted,observed,agree,witnessIndex,millis`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "group,order,variant,property,predicted,observed,agree,witnessIndex,millis\n",
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.group,
                r.order,
                r.variant,
                r.property,
                r.predicted.map_or("-", tf),
                tf(r.observed),
                tf(r.agree),
                r.witness_index.map(|i| i.to_string()).unwrap_or_default(),
                r.millis
            );
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Copy with every timing field zeroed, for comparing runs.
    pub fn without_timing(&self) -> CensusReport {
        let mut r = self.clone();
        r.rows.iter_mut().for_each(|row| row.millis = 0);
        r.timing.iter_mut().for_each(|t| t.millis = 0);
        r
    }
}
