//! Protrusion decompositions built from the bag marking algorithm, their
//! validation, and finding/shrinking single protrusions.

mod finding;
mod marking;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::treewidth::{exact_treewidth, heuristic_decomposition, EXACT_TREEWIDTH_CAP};

pub use finding::{find_max_protrusion, shrink_protrusion, PROTRUSION_ENUMERATION_CAP};
pub use marking::{mark_bags, ComponentDecomposition, Mark, MarkReason, MarkingTrace, Witness};

/// Components of `g - s` grouped by their neighbourhood in `s`; groups are
/// ordered by smallest member.
pub fn clusters(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let rest: VertexSet = g.vertices().filter(|v| !s.contains(v)).collect();
    let mut groups: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for comp in g.components_within(&rest) {
        groups
            .entry(g.neighborhood(&comp))
            .or_default()
            .extend(comp);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|c| c.first().copied());
    out
}

/// `Y0 ⊎ Y1 ⊎ … ⊎ Yℓ` with the parameters and marking trace that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtrusionDecomposition {
    pub y0: VertexSet,
    pub clusters: Vec<VertexSet>,
    pub beta: usize,
    pub r: usize,
    pub t: usize,
    #[serde(default)]
    pub trace: MarkingTrace,
}

impl ProtrusionDecomposition {
    /// `max(ℓ, |Y0|)`.
    pub fn alpha(&self) -> usize {
        self.clusters.len().max(self.y0.len())
    }

    /// `N_{Y0}(Y_i)` for every cluster.
    pub fn cluster_boundaries(&self, g: &Graph) -> Vec<VertexSet> {
        self.clusters.iter().map(|c| g.neighborhood(c)).collect()
    }
}

/// Marks bags for `(x, r, t)` and splits `G - Y0` into clusters;
/// `β = 2t + r`.
pub fn build_protrusion_decomposition(
    g: &Graph,
    x: &VertexSet,
    r: usize,
    t: usize,
) -> Result<ProtrusionDecomposition> {
    let (y0, trace) = mark_bags(g, x, r, t)?;
    Ok(ProtrusionDecomposition {
        clusters: clusters(g, &y0),
        y0,
        beta: 2 * t + r,
        r,
        t,
        trace,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtrusionReport {
    pub violations: Vec<String>,
    /// Clusters whose width could be neither certified nor refuted.
    pub uncertified: Vec<usize>,
    pub alpha: usize,
    pub beta: usize,
}

impl ProtrusionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the partition, `N(Y_i) ⊆ Y0`, `|N(Y_i)| ≤ β` and
/// `tw(G[Y_i ∪ N(Y_i)]) ≤ β - 1`.
pub fn validate_protrusion_decomposition(
    g: &Graph,
    pd: &ProtrusionDecomposition,
) -> ProtrusionReport {
    let mut report = ProtrusionReport {
        alpha: pd.alpha(),
        beta: pd.beta,
        ..Default::default()
    };
    let v = &mut report.violations;

    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    let parts = std::iter::once(&pd.y0).chain(pd.clusters.iter());
    for (i, part) in parts.enumerate() {
        for &x in part {
            if !g.contains(x) {
                v.push(format!("part {i} contains unknown vertex {x}"));
            } else if let Some(j) = owner.insert(x, i) {
                v.push(format!("vertex {x} lies in parts {j} and {i}"));
            }
        }
    }
    for x in g.vertices() {
        if !owner.contains_key(&x) {
            v.push(format!("vertex {x} not covered"));
        }
    }
    for (i, c) in pd.clusters.iter().enumerate() {
        let i = i + 1;
        if c.is_empty() {
            v.push(format!("Y_{i} is empty"));
            continue;
        }
        let nb = g.neighborhood(c);
        if !nb.is_subset(&pd.y0) {
            v.push(format!("N(Y_{i}) ⊄ Y0"));
        }
        if nb.len() > pd.beta {
            v.push(format!(
                "boundary exceeds β for Y_{i} ({} > {})",
                nb.len(),
                pd.beta
            ));
        }
        let plus: VertexSet = c.union(&nb).copied().collect();
        let h = g.induced(&plus);
        if heuristic_decomposition(&h).width() < pd.beta {
            continue;
        }
        if plus.len() <= EXACT_TREEWIDTH_CAP {
            match exact_treewidth(&h) {
                Ok((w, _)) if w + 1 > pd.beta => {
                    v.push(format!("tw(Y_{i}⁺) = {w} exceeds β - 1"));
                }
                Ok(_) => {}
                Err(_) => report.uncertified.push(i),
            }
        } else {
            report.uncertified.push(i);
        }
    }
    report
}
