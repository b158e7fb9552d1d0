//! Group-level predictions for when `S(G)`, `S*(G)` and `S**(G)` are line
//! graphs or complements of line graphs, and the harness that compares them
//! with what the recognizer actually finds.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec};
use crate::recognition::{is_complement_of_line_graph, is_line_graph, witness_is_valid};
use crate::supergraph::{build_variant, is_dominatable, Variant};

/// Largest group order [`cross_check`] will run recognition on.
pub const DEFAULT_RECOGNITION_BUDGET: usize = 200;

/// The three supergraph variants the predictions cover.
pub const SUPERGRAPH_VARIANTS: [Variant; 3] = [
    Variant::Supergraph,
    Variant::ProperSupergraph,
    Variant::ReducedSupergraph,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Property {
    LineGraph,
    ComplementOfLineGraph,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::LineGraph => "line",
            Property::ComplementOfLineGraph => "complement",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" | "lineGraph" => Ok(Property::LineGraph),
            "complement" | "complementOfLineGraph" => Ok(Property::ComplementOfLineGraph),
            _ => Err(Error::Argument(format!(
                "unknown property {s:?} (expected line or complement)"
            ))),
        }
    }
}

/// `S(G)` is a line graph iff `G` is EPPO and `|G|` has at most two prime
/// divisors.
pub fn predict_line_supergraph(g: &FiniteGroup) -> bool {
    g.is_eppo() && g.prime_divisors().len() <= 2
}

/// `S*(G)` is a line graph iff `G` is `Z_6` or EPPO.
pub fn predict_line_proper_supergraph(g: &FiniteGroup) -> bool {
    g.is_cyclic_of_order_six() || g.is_eppo()
}

/// For dominatable `S(G)`: `S**(G)` is a line graph iff `G` is a p-group,
/// or `|G|` has exactly two prime divisors and every element order is
/// square-free. `None` when `S(G)` is not dominatable.
pub fn predict_line_reduced_supergraph(g: &FiniteGroup) -> Option<bool> {
    if !is_dominatable(g) {
        return None;
    }
    let square_free = g
        .order_profile()
        .order_set()
        .into_iter()
        .all(arith::is_square_free);
    Some(g.is_p_group() || (g.prime_divisors().len() == 2 && square_free))
}

/// Each of `S(G)`, `S*(G)`, `S**(G)` is the complement of a line graph iff
/// `G` is `Z_6` or a p-group.
pub fn predict_complement_line(g: &FiniteGroup) -> bool {
    g.is_cyclic_of_order_six() || g.is_p_group()
}

pub fn predict(g: &FiniteGroup, variant: Variant, property: Property) -> Option<bool> {
    match (variant, property) {
        (Variant::Supergraph, Property::LineGraph) => Some(predict_line_supergraph(g)),
        (Variant::ProperSupergraph, Property::LineGraph) => Some(predict_line_proper_supergraph(g)),
        (Variant::ReducedSupergraph, Property::LineGraph) => predict_line_reduced_supergraph(g),
        (Variant::Power, _) => None,
        (_, Property::ComplementOfLineGraph) => Some(predict_complement_line(g)),
    }
}

/// `S(D_{2n})` is a line graph iff `n` is a prime power `p^a`, `a >= 1`.
pub fn dihedral_line(n: usize) -> bool {
    n >= 2 && arith::is_prime_power_or_one(n as u64)
}

/// For nilpotent `G`, `S(G)` is a line graph iff `G` is a p-group; `None`
/// for groups that are not nilpotent.
pub fn nilpotent_line(g: &FiniteGroup) -> Option<bool> {
    g.is_nilpotent().then(|| g.is_p_group())
}

/// `S**(Q_{4n})` is a line graph iff `n = 2^k`, `k >= 1`.
pub fn quaternion_reduced_line(n: usize) -> bool {
    n >= 2 && n.is_power_of_two()
}

/// `S**(SD_{8n})` is a line graph iff `n = 2^k`. The bound is `k >= 1`:
/// `SD_16` (`n = 2`) is a 2-group, so its `S**` is the null graph.
pub fn semidihedral_reduced_line(n: usize) -> bool {
    n >= 2 && n.is_power_of_two()
}

/// One (variant, property) comparison for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremPrediction {
    pub group: String,
    pub order: usize,
    pub variant: Variant,
    pub property: Property,
    /// `None` when the theorem's hypothesis does not hold for the group.
    pub predicted: Option<bool>,
    pub observed: bool,
    pub agree: bool,
    /// 1-based catalog index of the forbidden subgraph found, if any.
    pub witness_index: Option<usize>,
    /// For complement rows: the direct search agreed with line graph
    /// recognition of the complement, and the witness re-validated.
    pub consistent: bool,
    pub millis: u64,
}

impl TheoremPrediction {
    pub fn is_skip(&self) -> bool {
        self.predicted.is_none()
    }
}

/// Builds `S`, `S*` and `S**`, runs both recognizers on each and compares
/// with the predictions. Returns six rows: variants in
/// [`SUPERGRAPH_VARIANTS`] order, line before complement.
pub fn cross_check(name: &str, g: &FiniteGroup) -> Result<Vec<TheoremPrediction>> {
    if g.order() > DEFAULT_RECOGNITION_BUDGET {
        return Err(Error::Capacity(format!(
            "{name} has order {}, recognition budget is {DEFAULT_RECOGNITION_BUDGET}",
            g.order()
        )));
    }
    let mut rows = Vec::with_capacity(6);
    for variant in SUPERGRAPH_VARIANTS {
        let graph = build_variant(g, variant).graph;
        for property in [Property::LineGraph, Property::ComplementOfLineGraph] {
            let start = Instant::now();
            let (verdict, consistent) = match property {
                Property::LineGraph => {
                    let v = is_line_graph(&graph);
                    let ok = v
                        .witness
                        .as_ref()
                        .is_none_or(|w| witness_is_valid(&graph, w, false));
                    (v, ok)
                }
                Property::ComplementOfLineGraph => {
                    let v = is_complement_of_line_graph(&graph);
                    let dual = is_line_graph(&graph.complement()).is_member;
                    let ok = v
                        .witness
                        .as_ref()
                        .is_none_or(|w| witness_is_valid(&graph, w, true));
                    let agrees = dual == v.is_member;
                    (v, ok && agrees)
                }
            };
            let predicted = predict(g, variant, property);
            rows.push(TheoremPrediction {
                group: name.to_string(),
                order: g.order(),
                variant,
                property,
                predicted,
                observed: verdict.is_member,
                agree: predicted.is_none_or(|p| p == verdict.is_member),
                witness_index: verdict.witness.map(|w| w.index),
                consistent,
                millis: start.elapsed().as_millis() as u64,
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Corollary {
    Nilpotent,
    Dihedral,
    Quaternion,
    Semidihedral,
}

/// A corollary evaluated on one family member, next to the general theorem
/// and the recognizer. Any mismatch or unmet hypothesis lands in `flags`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorollaryProbe {
    pub corollary: Corollary,
    pub group: String,
    pub parameter: usize,
    pub corollary_prediction: bool,
    pub theorem_prediction: Option<bool>,
    pub observed: bool,
    pub flags: Vec<String>,
}

impl CorollaryProbe {
    fn new(
        corollary: Corollary,
        group: &str,
        parameter: usize,
        corollary_prediction: bool,
        theorem_prediction: Option<bool>,
        observed: bool,
    ) -> Self {
        let mut flags = Vec::new();
        match theorem_prediction {
            None => flags.push("theorem hypothesis unmet: S(G) is not dominatable".to_string()),
            Some(t) if t != corollary_prediction => flags.push(format!(
                "corollary predicts {corollary_prediction}, theorem predicts {t}"
            )),
            _ => {}
        }
        if observed != corollary_prediction {
            flags.push(format!(
                "corollary predicts {corollary_prediction}, recognition observed {observed}"
            ));
        }
        CorollaryProbe {
            corollary,
            group: group.to_string(),
            parameter,
            corollary_prediction,
            theorem_prediction,
            observed,
            flags,
        }
    }

    /// Corollary, theorem and recognizer all agree with no caveats.
    pub fn is_clean(&self) -> bool {
        self.flags.is_empty()
    }
}

fn observed(rows: &[TheoremPrediction], variant: Variant) -> Option<bool> {
    rows.iter()
        .find(|r| r.variant == variant && r.property == Property::LineGraph)
        .map(|r| r.observed)
}

/// Corollary probes that apply to `spec`, using the observations already in
/// `rows` (the output of [`cross_check`] for the same group).
pub fn corollary_probes(
    spec: &GroupSpec,
    g: &FiniteGroup,
    rows: &[TheoremPrediction],
) -> Vec<CorollaryProbe> {
    let name = spec.to_string();
    let mut out = Vec::new();
    let (Some(s_line), Some(reduced_line)) = (
        observed(rows, Variant::Supergraph),
        observed(rows, Variant::ReducedSupergraph),
    ) else {
        return out;
    };
    if let Some(c) = nilpotent_line(g) {
        out.push(CorollaryProbe::new(
            Corollary::Nilpotent,
            &name,
            g.order(),
            c,
            Some(predict_line_supergraph(g)),
            s_line,
        ));
    }
    match *spec {
        GroupSpec::Dihedral(order) => out.push(CorollaryProbe::new(
            Corollary::Dihedral,
            &name,
            order / 2,
            dihedral_line(order / 2),
            Some(predict_line_supergraph(g)),
            s_line,
        )),
        GroupSpec::Dicyclic(order) => out.push(CorollaryProbe::new(
            Corollary::Quaternion,
            &name,
            order / 4,
            quaternion_reduced_line(order / 4),
            predict_line_reduced_supergraph(g),
            reduced_line,
        )),
        GroupSpec::Semidihedral(order) => {
            let n = order / 8;
            let mut probe = CorollaryProbe::new(
                Corollary::Semidihedral,
                &name,
                n,
                semidihedral_reduced_line(n),
                predict_line_reduced_supergraph(g),
                reduced_line,
            );
            if n == 2 {
                probe.flags.push(
                    "stated bound k >= 2 excludes n = 2, but SD16 is a 2-group with null S**"
                        .to_string(),
                );
            }
            out.push(probe);
        }
        _ => {}
    }
    out
}
