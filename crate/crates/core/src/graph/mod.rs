//! Simple undirected graphs over totally ordered vertex ids, plus the editing
//! operations and containment tests the rest of the crate is built on.
//!
//! Vertex order is the natural order of the ids. Every operation that creates
//! a vertex (contraction, gluing) hands out ids larger than all existing ones,
//! so a new vertex is always last in the order and induced subgraphs inherit
//! the order of their parent.

mod boundaried;
mod cliques;
pub(crate) mod dense;
mod io;
mod minor;
mod ops;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub use boundaried::{glue, unglue, unglue_complement, BoundariedGraph};
pub use cliques::{count_cliques, CLIQUE_CENSUS_CAP};
pub use io::{parse_graph, parse_vertex_set, serialize_graph};
pub use minor::{
    is_family_minor_free, is_minor, is_minor_with_cap, is_topological_minor, MINOR_HOST_CAP,
    MINOR_PATTERN_CAP,
};
pub use ops::PathFamily;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    /// Multiplicities above one, keyed by `(min, max)`. Only pattern graphs
    /// carry entries here.
    mult: BTreeMap<(Vertex, Vertex), u32>,
    pattern: bool,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless host graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (v, BTreeSet::new())).collect(),
            ..Default::default()
        }
    }

    /// Edgeless pattern graph on `0..n`; patterns may carry edge multiplicities.
    pub fn new_pattern(n: usize) -> Self {
        Graph {
            pattern: true,
            ..Graph::new(n)
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
            ..Default::default()
        }
    }

    pub fn is_pattern(&self) -> bool {
        self.pattern
    }

    pub fn set_pattern(&mut self, pattern: bool) {
        self.pattern = pattern;
        if !pattern {
            self.mult.clear();
        }
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Smallest id strictly greater than every existing id.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj.contains_key(&u) {
            return Err(Error::VertexNotFound(u));
        }
        if !self.adj.contains_key(&v) {
            return Err(Error::VertexNotFound(v));
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    /// Adds `m` parallel copies of `uv`. Hosts only accept `m == 1`.
    pub fn add_edge_with_multiplicity(&mut self, u: Vertex, v: Vertex, m: u32) -> Result<()> {
        if m == 0 {
            return Ok(());
        }
        let total = self.multiplicity(u, v) + m;
        if total > 1 && !self.pattern {
            return Err(Error::MultiplicityOnHost(u, v));
        }
        self.add_edge(u, v)?;
        if total > 1 {
            self.mult.insert(key(u, v), total);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(u, v));
        }
        self.adj.get_mut(&u).unwrap().remove(&v);
        self.adj.get_mut(&v).unwrap().remove(&u);
        self.mult.remove(&key(u, v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of distinct adjacent pairs.
    pub fn m(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Number of edges counted with multiplicity.
    pub fn m_with_multiplicity(&self) -> usize {
        self.edges()
            .map(|(u, v)| self.multiplicity(u, v) as usize)
            .sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        if !self.has_edge(u, v) {
            return 0;
        }
        self.mult.get(&key(u, v)).copied().unwrap_or(1)
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    /// `N(S)`: vertices outside `s` adjacent to some vertex of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|w| !s.contains(w))
            .collect()
    }

    /// `∂(W)`: vertices of `w` with a neighbor outside `w`.
    pub fn boundary(&self, w: &VertexSet) -> VertexSet {
        w.iter()
            .copied()
            .filter(|&v| self.neighbors(v).iter().any(|u| !w.contains(u)))
            .collect()
    }

    pub fn induced(&self, s: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| s.contains(v))
            .map(|(&v, ns)| (v, ns.iter().copied().filter(|u| s.contains(u)).collect()))
            .collect();
        let mult = self
            .mult
            .iter()
            .filter(|((u, v), _)| s.contains(u) && s.contains(v))
            .map(|(&k, &m)| (k, m))
            .collect();
        Graph {
            adj,
            mult,
            pattern: self.pattern,
        }
    }

    pub fn without(&self, s: &VertexSet) -> Graph {
        let keep: VertexSet = self.vertices().filter(|v| !s.contains(v)).collect();
        self.induced(&keep)
    }

    /// Connected components of `G[allowed]`, each listed by its smallest
    /// vertex first, components ordered by smallest member.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for &s in allowed {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in self.neighbors(v) {
                    if allowed.contains(&u) && seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Copy with vertices relabelled `0..n` in order; multiplicities kept.
    pub fn relabeled(&self) -> Graph {
        let index: BTreeMap<Vertex, Vertex> =
            self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let mut g = Graph {
            pattern: self.pattern,
            ..Graph::new(self.n())
        };
        for (u, v) in self.edges() {
            let (a, b) = (index[&u], index[&v]);
            g.adj.get_mut(&a).unwrap().insert(b);
            g.adj.get_mut(&b).unwrap().insert(a);
            let m = self.multiplicity(u, v);
            if m > 1 {
                g.mult.insert(key(a, b), m);
            }
        }
        g
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n() && self.is_simple()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// Common named graphs, mostly used as patterns and in tests.
pub mod named {
    use super::{Graph, Vertex};

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).unwrap();
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Two vertices joined by `c` parallel edges.
    pub fn theta(c: u32) -> Graph {
        let mut g = Graph::new_pattern(2);
        g.add_edge_with_multiplicity(0, 1, c).unwrap();
        g
    }

    /// `copies` vertex-disjoint copies of `g`, relabelled consecutively.
    pub fn disjoint_copies(g: &Graph, copies: usize) -> Graph {
        let base = g.relabeled();
        let n = base.n();
        let mut out = Graph {
            pattern: g.is_pattern(),
            ..Graph::new(n * copies)
        };
        for c in 0..copies {
            for (u, v) in base.edges() {
                out.add_edge_with_multiplicity(c * n + u, c * n + v, base.multiplicity(u, v))
                    .unwrap();
            }
        }
        out
    }
}
