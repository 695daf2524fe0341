//! Linear kernel for Edge Dominating Set: matching-based modulator, bag
//! marking with `t = 1`, and twin elimination inside clusters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::protrusion::{build_protrusion_decomposition, ProtrusionDecomposition};

pub const EDS_BRUTE_FORCE_CAP: usize = 20;

/// Greedy maximal matching in lexicographic edge order. Every maximal
/// matching dominates all edges and is at most twice a minimum edge
/// dominating set.
pub fn eds_2approx(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut covered = VertexSet::new();
    let mut matching = Vec::new();
    for (u, v) in g.edges() {
        if !covered.contains(&u) && !covered.contains(&v) {
            covered.insert(u);
            covered.insert(v);
            matching.push((u, v));
        }
    }
    matching
}

/// Endpoints of the approximate solution, or `None` when the matching alone
/// proves that no solution of size `k` exists.
pub fn eds_modulator(g: &Graph, k: usize) -> Option<VertexSet> {
    let m = eds_2approx(g);
    if m.len() > 2 * k {
        return None;
    }
    Some(m.into_iter().flat_map(|(u, v)| [u, v]).collect())
}

/// Keeps the `|N(Y_i)|` lowest-id vertices of every cluster that is larger
/// than its neighbourhood. The budget is unchanged.
pub fn twin_eliminate(g: &Graph, pd: &ProtrusionDecomposition, k: usize) -> Result<(Graph, usize)> {
    let mut seen = pd.y0.clone();
    for c in &pd.clusters {
        for &v in c {
            if !g.contains(v) || !seen.insert(v) {
                return Err(Error::InvalidDecomposition(format!(
                    "vertex {v} misplaced in the partition"
                )));
            }
        }
    }
    if seen.len() != g.n() || !seen.iter().all(|&v| g.contains(v)) {
        return Err(Error::InvalidDecomposition(
            "partition does not cover V(G)".into(),
        ));
    }
    let mut drop = VertexSet::new();
    for (i, c) in pd.clusters.iter().enumerate() {
        let nb = g.neighborhood(c);
        if !nb.is_subset(&pd.y0) {
            return Err(Error::InvalidDecomposition(format!("N(Y_{}) ⊄ Y0", i + 1)));
        }
        if c.iter()
            .any(|&v| g.neighbors(v).iter().any(|u| c.contains(u)))
        {
            return Err(Error::InvalidDecomposition(format!(
                "Y_{} is not an independent set",
                i + 1
            )));
        }
        if c.len() > nb.len() {
            drop.extend(c.iter().copied().skip(nb.len()));
        }
    }
    Ok((g.without(&drop), k))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdsKernel {
    pub graph: Graph,
    pub k: usize,
    pub modulator: VertexSet,
    pub decomposition: ProtrusionDecomposition,
    pub removed: VertexSet,
}

/// Modulator, marking with threshold `r`, clustering and twin elimination.
/// Returns `None` for instances rejected by the approximation.
pub fn eds_kernelize(g: &Graph, k: usize, r: usize) -> Result<Option<EdsKernel>> {
    let Some(x) = eds_modulator(g, k) else {
        return Ok(None);
    };
    let pd = build_protrusion_decomposition(g, &x, r, 1)?;
    let (graph, k2) = twin_eliminate(g, &pd, k)?;
    let removed = g.vertices().filter(|&v| !graph.contains(v)).collect();
    Ok(Some(EdsKernel {
        graph,
        k: k2,
        modulator: x,
        decomposition: pd,
        removed,
    }))
}

/// Exhaustive search for an edge dominating set with at most `k` edges.
pub fn eds_brute_force(g: &Graph, k: usize) -> Result<bool> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    if edges.len() > EDS_BRUTE_FORCE_CAP {
        return Err(Error::EdsTooLarge {
            size: edges.len(),
            cap: EDS_BRUTE_FORCE_CAP,
        });
    }
    let m = edges.len();
    let all: u32 = if m == 0 { 0 } else { (1u32 << m) - 1 };
    let dominated: Vec<u32> = edges
        .iter()
        .map(|&(a, b)| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(c, d))| a == c || a == d || b == c || b == d)
                .fold(0, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    Ok(dominates_within(&dominated, all, 0, k))
}

/// Whether some choice of at most `left` more edges, together with `acc`,
/// dominates everything.
fn dominates_within(dominated: &[u32], all: u32, acc: u32, left: usize) -> bool {
    if acc == all {
        return true;
    }
    if left == 0 {
        return false;
    }
    // The lowest undominated edge must be dominated by one of its neighbours.
    let need = (all & !acc).trailing_zeros();
    dominated
        .iter()
        .any(|&d| d & (1 << need) != 0 && dominates_within(dominated, all, acc | d, left - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn approximation_examples() {
        assert_eq!(eds_2approx(&named::path(3)), vec![(0, 1)]);
        assert_eq!(eds_2approx(&named::complete(3)).len(), 1);
        assert!(eds_2approx(&Graph::new(4)).is_empty());
    }

    #[test]
    fn modulator_examples() {
        assert_eq!(eds_modulator(&named::complete(3), 1), Some([0, 1].into()));
        let matching = named::disjoint_copies(&named::path(2), 10);
        assert_eq!(eds_modulator(&matching, 1), None);
        assert_eq!(eds_modulator(&Graph::new(3), 0), Some(VertexSet::new()));
    }

    #[test]
    fn twin_elimination_examples() {
        // x = 0 with three pendant twins.
        let g = named::star(3);
        let pd = build_protrusion_decomposition(&g, &[0].into(), 2, 1).unwrap();
        let (h, k) = twin_eliminate(&g, &pd, 1).unwrap();
        assert_eq!(h.vertex_set(), [0, 1].into());
        assert_eq!(k, 1);
        assert_eq!(eds_brute_force(&g, 1), eds_brute_force(&h, 1));

        // Twins a, b adjacent to both x and y stay.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let pd = build_protrusion_decomposition(&g, &[0, 1].into(), 3, 1).unwrap();
        assert_eq!(twin_eliminate(&g, &pd, 1).unwrap().0, g);

        let pd = build_protrusion_decomposition(&named::complete(2), &[0, 1].into(), 1, 1).unwrap();
        assert_eq!(
            twin_eliminate(&named::complete(2), &pd, 0).unwrap().0,
            named::complete(2)
        );
    }

    #[test]
    fn kernel_examples() {
        let e = Graph::new(5);
        let kern = eds_kernelize(&e, 2, 3).unwrap().unwrap();
        assert_eq!((kern.graph.n(), kern.k), (0, 2));

        let star = named::star(20);
        let kern = eds_kernelize(&star, 1, 3).unwrap().unwrap();
        assert_eq!(kern.modulator, [0, 1].into());
        assert_eq!(kern.graph.vertex_set(), [0, 1, 2].into());
        assert!(eds_brute_force(&kern.graph, 1).unwrap());

        let matching = named::disjoint_copies(&named::path(2), 5);
        assert_eq!(eds_kernelize(&matching, 1, 3).unwrap(), None);
    }

    #[test]
    fn brute_force_examples() {
        assert!(eds_brute_force(&named::complete(3), 1).unwrap());
        assert!(!eds_brute_force(&named::disjoint_copies(&named::path(2), 2), 1).unwrap());
        assert!(eds_brute_force(&named::path(4), 1).unwrap());
        assert!(eds_brute_force(&Graph::new(2), 0).unwrap());
        assert!(matches!(
            eds_brute_force(&named::complete(7), 3),
            Err(Error::EdsTooLarge { .. })
        ));
        // the edge dominating the first undominated one may precede an earlier pick
        let g = Graph::from_edges(
            12,
            &[(1, 4), (1, 6), (2, 8), (3, 8), (4, 6), (4, 11), (6, 9)],
        )
        .unwrap();
        assert!(eds_brute_force(&g, 2).unwrap());
    }
}
