//! Tree decompositions: validation, exact treewidth for small graphs, min-fill
//! heuristic decompositions and nice decompositions.

mod elimination;
mod exact;
mod nice;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use elimination::{decomposition_from_order, elimination_width, min_fill_order};
pub use exact::{exact_treewidth, exact_treewidth_with_cap, EXACT_TREEWIDTH_CAP};
pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};

/// Bags with a parent pointer per bag; roots have no parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DecompositionJson", try_from = "DecompositionJson")]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub parent: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    bags: Vec<Vec<Vertex>>,
    parent: Vec<i64>,
    #[serde(default)]
    width: usize,
}

impl From<TreeDecomposition> for DecompositionJson {
    fn from(td: TreeDecomposition) -> Self {
        DecompositionJson {
            width: td.width(),
            parent: td
                .parent
                .iter()
                .map(|p| p.map_or(-1, |i| i as i64))
                .collect(),
            bags: td.bags,
        }
    }
}

impl TryFrom<DecompositionJson> for TreeDecomposition {
    type Error = String;

    fn try_from(j: DecompositionJson) -> std::result::Result<Self, String> {
        if j.bags.len() != j.parent.len() {
            return Err("bags and parent differ in length".into());
        }
        let parent = j
            .parent
            .iter()
            .map(|&p| match p {
                -1 => Ok(None),
                p if p >= 0 && (p as usize) < j.bags.len() => Ok(Some(p as usize)),
                p => Err(format!("parent index {p} out of range")),
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(TreeDecomposition {
            bags: j.bags,
            parent,
        })
    }
}

impl TreeDecomposition {
    /// Largest bag size minus one; 0 for decompositions without vertices.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.parent[i].is_none())
            .collect()
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                ch[p].push(i);
            }
        }
        ch
    }

    /// Depth of every bag below its root, or `None` if the parent pointers
    /// contain a cycle or an out-of-range index.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut depth: Vec<Option<usize>> = vec![None; n];
        for start in 0..n {
            let mut chain = Vec::new();
            let mut cur = start;
            let base = loop {
                if let Some(d) = depth[cur] {
                    break d + 1;
                }
                if chain.len() > n {
                    return None;
                }
                chain.push(cur);
                match self.parent[cur] {
                    None => break 0,
                    Some(p) if p < n => cur = p,
                    Some(_) => return None,
                }
            };
            // `base` is the depth of the last pushed bag.
            for (i, &b) in chain.iter().rev().enumerate() {
                depth[b] = Some(base + i);
            }
        }
        Some(depth.into_iter().map(|d| d.unwrap()).collect())
    }

    /// Bags of the subtree rooted at `root` (including it).
    pub fn subtree(&self, root: usize, children: &[Vec<usize>]) -> Vec<usize> {
        let mut out = vec![root];
        let mut i = 0;
        while i < out.len() {
            out.extend(children[out[i]].iter().copied());
            i += 1;
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        self.bags.iter().flatten().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub violations: Vec<String>,
    pub width: usize,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the forest structure and the three decomposition axioms.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> DecompositionReport {
    let mut violations = Vec::new();
    if td.parent.len() != td.bags.len() {
        violations.push("bags and parent differ in length".to_string());
        return DecompositionReport {
            violations,
            width: td.width(),
        };
    }
    if td.depths().is_none() {
        violations.push("parent pointers do not form a rooted forest".to_string());
        return DecompositionReport {
            violations,
            width: td.width(),
        };
    }
    let mut holders: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, bag) in td.bags.iter().enumerate() {
        let distinct: BTreeSet<_> = bag.iter().collect();
        if distinct.len() != bag.len() {
            violations.push(format!("bag {i} repeats a vertex"));
        }
        for &v in bag {
            if !g.contains(v) {
                violations.push(format!("bag {i} contains unknown vertex {v}"));
            }
            holders.entry(v).or_default().push(i);
        }
    }
    for v in g.vertices() {
        if !holders.contains_key(&v) {
            violations.push(format!("vertex {v} uncovered"));
        }
    }
    let bag_sets: Vec<BTreeSet<Vertex>> = td
        .bags
        .iter()
        .map(|b| b.iter().copied().collect())
        .collect();
    for (u, v) in g.edges() {
        if !bag_sets.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            violations.push(format!("edge {u}-{v} uncovered"));
        }
    }
    for (v, bags) in &holders {
        // Bags holding v are connected iff exactly one of them has a parent
        // outside the set.
        let set: BTreeSet<usize> = bags.iter().copied().collect();
        let tops = bags
            .iter()
            .filter(|&&b| td.parent[b].is_none_or(|p| !set.contains(&p)))
            .count();
        if tops != 1 {
            violations.push(format!("bags containing {v} are not connected"));
        }
    }
    DecompositionReport {
        violations,
        width: td.width(),
    }
}

/// Min-fill decomposition (ties broken by lowest vertex id).
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g, &min_fill_order(g))
}

/// Whether `tw(g) <= bound`, trying min-fill before the exact search.
pub fn treewidth_at_most(g: &Graph, bound: usize) -> Result<bool> {
    if heuristic_decomposition(g).width() <= bound {
        return Ok(true);
    }
    Ok(exact_treewidth(g)?.0 <= bound)
}

/// One decomposition of width at most `t - 1` per component of `g - x`,
/// components ordered by smallest vertex, each rooted at bag 0.
pub fn rooted_component_decompositions(
    g: &Graph,
    x: &VertexSet,
    t: usize,
) -> Result<Vec<TreeDecomposition>> {
    let rest: VertexSet = g.vertices().filter(|v| !x.contains(v)).collect();
    g.components_within(&rest)
        .into_iter()
        .map(|c| component_decomposition(&g.induced(&c), t))
        .collect()
}

/// Decomposition of a connected graph with width at most `t - 1`, trying
/// min-fill before the exact search.
pub(crate) fn component_decomposition(h: &Graph, t: usize) -> Result<TreeDecomposition> {
    if t == 0 {
        return Err(Error::ModulatorInvalid { t });
    }
    let td = heuristic_decomposition(h);
    if td.width() < t {
        return Ok(td);
    }
    let (w, td) = exact_treewidth(h)?;
    if w > t - 1 {
        return Err(Error::ModulatorInvalid { t });
    }
    Ok(td)
}
