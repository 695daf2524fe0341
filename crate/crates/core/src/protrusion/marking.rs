//! The bag marking algorithm: bottom-up over rooted decompositions of the
//! components of `G - X` that see at least `r` vertices of `X`, marking a bag
//! when it is the LCA of two marked bags or when the subgraph below it has a
//! component with at least `r` neighbours in `X`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::treewidth::{
    component_decomposition, heuristic_decomposition, treewidth_at_most, TreeDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarkReason {
    #[serde(rename = "LCA")]
    Lca,
    LargeSubgraph,
}

/// A connected subgraph below a marked bag with many neighbours in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    /// `|N_X(C_B)|`, counted up to `r`.
    pub x_neighbors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mark {
    pub component: usize,
    pub bag: usize,
    pub reason: MarkReason,
    /// Unmarked vertices of the bag at the time it was marked.
    #[serde(default, skip_serializing)]
    pub removed: Vec<Vertex>,
    #[serde(default, skip_serializing)]
    pub witness: Option<Witness>,
}

/// Rooted decomposition of one component of `G - X` (root is bag 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub component: usize,
    pub vertices: VertexSet,
    pub td: TreeDecomposition,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MarkingTrace {
    pub decompositions: Vec<ComponentDecomposition>,
    pub marks: Vec<Mark>,
    /// Number of bags processed; each bag is processed exactly once.
    pub bag_visits: usize,
}

impl Serialize for MarkingTrace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.marks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkingTrace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(MarkingTrace {
            marks: Vec::deserialize(d)?,
            ..Default::default()
        })
    }
}

impl MarkingTrace {
    pub fn marked_vertices(&self) -> VertexSet {
        self.marks
            .iter()
            .flat_map(|m| m.removed.iter().copied())
            .collect()
    }

    pub fn marked_bag_count(&self) -> usize {
        self.marks.len()
    }

    /// Per decomposition, for every maximal subtree without marked bags, the
    /// number of marked bags adjacent to it. The marked set is LCA-closed iff
    /// every entry is at most 2.
    pub fn unmarked_subtree_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for cd in &self.decompositions {
            let n = cd.td.len();
            let mut marked = vec![false; n];
            for m in self.marks.iter().filter(|m| m.component == cd.component) {
                marked[m.bag] = true;
            }
            let children = cd.td.children();
            let mut seen = vec![false; n];
            for start in 0..n {
                if marked[start] || seen[start] {
                    continue;
                }
                let mut adjacent = VertexSet::new();
                let mut queue = VecDeque::from([start]);
                seen[start] = true;
                while let Some(b) = queue.pop_front() {
                    let nbrs = children[b].iter().copied().chain(cd.td.parent[b]);
                    for c in nbrs {
                        if marked[c] {
                            adjacent.insert(c);
                        } else if !seen[c] {
                            seen[c] = true;
                            queue.push_back(c);
                        }
                    }
                }
                out.push(adjacent.len());
            }
        }
        out
    }
}

fn x_neighbors(g: &Graph, c: &VertexSet, x: &VertexSet, cap: usize) -> usize {
    let mut found = VertexSet::new();
    for &v in c {
        for u in g.neighbors(v) {
            if x.contains(u) {
                found.insert(*u);
                if found.len() >= cap {
                    return cap;
                }
            }
        }
    }
    found.len()
}

/// Checks `tw(G[C]) <= t - 1` for a component that will not be decomposed.
fn check_component(h: &Graph, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::ModulatorInvalid { t });
    }
    if heuristic_decomposition(h).width() < t || treewidth_at_most(h, t - 1)? {
        Ok(())
    } else {
        Err(Error::ModulatorInvalid { t })
    }
}

/// Runs the bag marking algorithm and returns `Y0 = X ∪ V(M)` with the trace.
pub fn mark_bags(
    g: &Graph,
    x: &VertexSet,
    r: usize,
    t: usize,
) -> Result<(VertexSet, MarkingTrace)> {
    if r == 0 {
        return Err(Error::InvalidR);
    }
    if let Some(&v) = x.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::VertexNotFound(v));
    }
    let rest: VertexSet = g.vertices().filter(|v| !x.contains(v)).collect();
    let mut trace = MarkingTrace::default();
    let mut marked = VertexSet::new();

    for (cid, comp) in g.components_within(&rest).into_iter().enumerate() {
        let h = g.induced(&comp);
        if x_neighbors(g, &comp, x, r) < r {
            check_component(&h, t)?;
            continue;
        }
        let td = component_decomposition(&h, t)?;
        mark_component(g, x, r, cid, &td, &mut marked, &mut trace);
        trace.decompositions.push(ComponentDecomposition {
            component: cid,
            vertices: comp,
            td,
        });
    }
    let y0 = x.union(&marked).copied().collect();
    Ok((y0, trace))
}

fn mark_component(
    g: &Graph,
    x: &VertexSet,
    r: usize,
    cid: usize,
    td: &TreeDecomposition,
    marked: &mut VertexSet,
    trace: &mut MarkingTrace,
) {
    let n = td.len();
    let depth = td.depths().expect("decomposition is a rooted tree");
    let children = td.children();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&b| (std::cmp::Reverse(depth[b]), b));

    let mut bag_marked = vec![false; n];
    let mut has_mark = vec![false; n];
    for b in order {
        trace.bag_visits += 1;
        let below = children[b].iter().filter(|&&c| has_mark[c]).count();
        let (reason, witness) = if below >= 2 {
            (Some(MarkReason::Lca), None)
        } else {
            match large_component(g, x, r, td, &children, b, marked) {
                Some(w) => (Some(MarkReason::LargeSubgraph), Some(w)),
                None => (None, None),
            }
        };
        if let Some(reason) = reason {
            let removed: Vec<Vertex> = td.bags[b]
                .iter()
                .copied()
                .filter(|v| !marked.contains(v))
                .collect();
            marked.extend(removed.iter().copied());
            bag_marked[b] = true;
            trace.marks.push(Mark {
                component: cid,
                bag: b,
                reason,
                removed,
                witness,
            });
        }
        has_mark[b] = bag_marked[b] || below > 0;
    }
}

/// A component of `G_B` (unmarked vertices in the subtree of `b`) meeting the
/// bag `b` with at least `r` neighbours in `X`. Components missing `b` were
/// already examined further down and can only have shrunk since.
fn large_component(
    g: &Graph,
    x: &VertexSet,
    r: usize,
    td: &TreeDecomposition,
    children: &[Vec<usize>],
    b: usize,
    marked: &VertexSet,
) -> Option<Witness> {
    let seeds: Vec<Vertex> = td.bags[b]
        .iter()
        .copied()
        .filter(|v| !marked.contains(v))
        .collect();
    if seeds.is_empty() {
        return None;
    }
    let allowed: VertexSet = td
        .subtree(b, children)
        .into_iter()
        .flat_map(|i| td.bags[i].iter().copied())
        .filter(|v| !marked.contains(v))
        .collect();
    let mut seen = VertexSet::new();
    for s in seeds {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = VertexSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(v) = queue.pop_front() {
            comp.insert(v);
            for &u in g.neighbors(v) {
                if allowed.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        let count = x_neighbors(g, &comp, x, r);
        if count >= r {
            return Some(Witness {
                vertices: comp.into_iter().collect(),
                x_neighbors: count,
            });
        }
    }
    None
}
