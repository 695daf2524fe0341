use std::collections::BTreeMap;

use super::{Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// A graph with an ordered boundary; position `i` carries label `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundariedGraph {
    pub graph: Graph,
    pub boundary: Vec<Vertex>,
}

impl BoundariedGraph {
    pub fn new(graph: Graph, boundary: Vec<Vertex>) -> Result<Self> {
        let distinct: VertexSet = boundary.iter().copied().collect();
        if distinct.len() != boundary.len() {
            return Err(Error::InconsistentBoundary);
        }
        if let Some(&v) = boundary.iter().find(|&&v| !graph.contains(v)) {
            return Err(Error::VertexNotFound(v));
        }
        Ok(BoundariedGraph { graph, boundary })
    }

    pub fn t(&self) -> usize {
        self.boundary.len()
    }
}

/// `G1 ⊕ G2`. Vertices of `g1` keep their ids; non-boundary vertices of `g2`
/// get fresh ids after those of `g1`, in `g2`'s order. Parallel edges created
/// at the seam are merged.
pub fn glue(g1: &BoundariedGraph, g2: &BoundariedGraph) -> Result<Graph> {
    if g1.t() != g2.t() {
        return Err(Error::BoundaryMismatch(g1.t(), g2.t()));
    }
    let mut map: BTreeMap<Vertex, Vertex> = g2
        .boundary
        .iter()
        .copied()
        .zip(g1.boundary.iter().copied())
        .collect();
    let mut out = g1.graph.clone();
    let mut next = out.fresh_vertex();
    for v in g2.graph.vertices() {
        map.entry(v).or_insert_with(|| {
            next += 1;
            next - 1
        });
        out.add_vertex(map[&v]);
    }
    for (u, v) in g2.graph.edges() {
        let (a, b) = (map[&u], map[&v]);
        if !out.has_edge(a, b) {
            out.add_edge(a, b)?;
        }
    }
    Ok(out)
}

/// `G[W]` as a boundaried graph. `boundary` must equal `∂_G(W)`; labels
/// follow the order of `g`.
pub fn unglue(g: &Graph, w: &VertexSet, boundary: &VertexSet) -> Result<BoundariedGraph> {
    if let Some(&v) = w.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::VertexNotFound(v));
    }
    if !boundary.is_subset(w) || g.boundary(w) != *boundary {
        return Err(Error::InconsistentBoundary);
    }
    Ok(BoundariedGraph {
        graph: g.induced(w),
        boundary: boundary.iter().copied().collect(),
    })
}

/// `G ⊖ G[W]`: the graph `G - (W ∖ ∂(W))` with boundary `∂(W)`, labelled in
/// the same order as [`unglue`] labels `∂(W)`, so the two halves glue back.
pub fn unglue_complement(g: &Graph, w: &VertexSet) -> Result<BoundariedGraph> {
    if let Some(&v) = w.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::VertexNotFound(v));
    }
    let b = g.boundary(w);
    let keep: VertexSet = g
        .vertices()
        .filter(|v| !w.contains(v) || b.contains(v))
        .collect();
    let graph = g.induced(&keep);
    Ok(BoundariedGraph {
        graph,
        boundary: b.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn bg(g: Graph, b: &[Vertex]) -> BoundariedGraph {
        BoundariedGraph::new(g, b.to_vec()).unwrap()
    }

    #[test]
    fn glue_examples() {
        let k1 = glue(&bg(Graph::new(1), &[0]), &bg(Graph::new(1), &[0])).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));

        let p3 = glue(&bg(named::path(2), &[0]), &bg(named::path(2), &[0])).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        assert_eq!(p3.degree(0), 2);

        let k3 = glue(&bg(named::cycle(3), &[0, 1]), &bg(named::path(2), &[0, 1])).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));

        assert_eq!(
            glue(&bg(Graph::new(1), &[0]), &bg(Graph::new(2), &[0, 1])),
            Err(Error::BoundaryMismatch(1, 2))
        );
    }

    #[test]
    fn unglue_examples() {
        let p3 = named::path(3);
        let b = unglue(&p3, &[0, 1].into(), &[1].into()).unwrap();
        assert_eq!(
            (b.graph.n(), b.graph.m(), b.boundary.clone()),
            (2, 1, vec![1])
        );

        let k4 = named::complete(4);
        let b = unglue(&k4, &k4.vertex_set(), &VertexSet::new()).unwrap();
        assert_eq!((b.graph.m(), b.t()), (6, 0));

        let star = named::star(3);
        let b = unglue(&star, &[0, 1].into(), &[0].into()).unwrap();
        assert_eq!((b.graph.m(), b.boundary.clone()), (1, vec![0]));

        assert_eq!(
            unglue(&p3, &[0, 1].into(), &[0].into()),
            Err(Error::InconsistentBoundary)
        );
    }

    #[test]
    fn unglue_and_complement_glue_back() {
        let g = named::complete(5);
        let w: VertexSet = [0, 1, 2].into();
        let left = unglue(&g, &w, &g.boundary(&w)).unwrap();
        let right = unglue_complement(&g, &w).unwrap();
        let back = glue(&left, &right).unwrap();
        assert_eq!((back.n(), back.m()), (5, 10));
    }
}
