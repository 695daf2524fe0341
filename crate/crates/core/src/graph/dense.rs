//! Bitmask adjacency for graphs with at most 64 vertices. Index `i` is the
//! `i`-th vertex of the source graph in vertex order.

use super::{Graph, Vertex};

pub(crate) type Mask = u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct DenseGraph {
    pub n: usize,
    pub adj: Vec<Mask>,
    /// Multiplicities above one as `(i, j, m)` with `i < j`.
    pub mult: Vec<(usize, usize, u32)>,
}

pub(crate) fn bit(i: usize) -> Mask {
    1u64 << i
}

pub(crate) fn full(n: usize) -> Mask {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl DenseGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64);
        DenseGraph {
            n,
            adj: vec![0; n],
            mult: Vec::new(),
        }
    }

    /// Returns the dense form and the vertex list it indexes.
    pub fn from_graph(g: &Graph) -> (Self, Vec<Vertex>) {
        let order: Vec<Vertex> = g.vertices().collect();
        let index = |v: Vertex| order.binary_search(&v).unwrap();
        let mut d = DenseGraph::new(order.len());
        for (u, v) in g.edges() {
            let (i, j) = (index(u), index(v));
            d.add_edge(i, j);
            let m = g.multiplicity(u, v);
            if m > 1 {
                d.mult.push((i, j, m));
            }
        }
        (d, order)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        if !self.has_edge(i, j) {
            return 0;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.mult
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map_or(1, |&(_, _, m)| m)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn weighted_degree(&self, i: usize) -> u32 {
        iter_bits(self.adj[i])
            .map(|j| self.multiplicity(i, j))
            .sum()
    }

    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn m_with_multiplicity(&self) -> usize {
        let extra: u32 = self.mult.iter().map(|&(_, _, m)| m - 1).sum();
        self.m() + extra as usize
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach(&self, start: Mask, within: Mask) -> Mask {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for i in iter_bits(frontier) {
                next |= self.adj[i];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    #[cfg(test)]
    pub fn is_connected_set(&self, s: Mask) -> bool {
        if s == 0 {
            return true;
        }
        let start = s & s.wrapping_neg();
        self.reach(start, s) == s
    }

    /// Connected components of `within`, each as a mask.
    pub fn components(&self, within: Mask) -> Vec<Mask> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let c = self.reach(start, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    #[cfg(test)]
    pub fn to_graph(&self) -> Graph {
        let mut g = if self.mult.is_empty() {
            Graph::new(self.n)
        } else {
            Graph::new_pattern(self.n)
        };
        for i in 0..self.n {
            for j in iter_bits(self.adj[i] >> i >> 1) {
                let j = i + 1 + j;
                g.add_edge_with_multiplicity(i, j, self.multiplicity(i, j))
                    .unwrap();
            }
        }
        g
    }
}
