use serde::{Deserialize, Serialize};

use super::{key, Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// Paths in a host graph, used to constrict it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub paths: Vec<Vec<Vertex>>,
}

impl PathFamily {
    pub fn new(paths: Vec<Vec<Vertex>>) -> Self {
        PathFamily { paths }
    }

    /// Checks that every entry is a path of `g` with non-adjacent endpoints
    /// and that two paths only meet in common endpoints.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPathFamily(msg));
        for (i, p) in self.paths.iter().enumerate() {
            if p.len() < 2 {
                return bad(format!("path {i} has fewer than two vertices"));
            }
            let distinct: VertexSet = p.iter().copied().collect();
            if distinct.len() != p.len() {
                return bad(format!("path {i} repeats a vertex"));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return bad(format!("path {i} uses missing edge {}-{}", w[0], w[1]));
                }
            }
            let (a, b) = (p[0], p[p.len() - 1]);
            if g.has_edge(a, b) {
                return bad(format!("endpoints of path {i} are adjacent"));
            }
        }
        for i in 0..self.paths.len() {
            for j in i + 1..self.paths.len() {
                let (p, q) = (&self.paths[i], &self.paths[j]);
                let shared: Vec<Vertex> = p.iter().copied().filter(|v| q.contains(v)).collect();
                if shared.len() > 1 {
                    return bad(format!("paths {i} and {j} share more than one vertex"));
                }
                if let Some(&v) = shared.first() {
                    let end = |r: &Vec<Vertex>| r[0] == v || r[r.len() - 1] == v;
                    if !end(p) || !end(q) {
                        return bad(format!("paths {i} and {j} share inner vertex {v}"));
                    }
                }
            }
        }
        Ok(())
    }
}

impl Graph {
    /// `G/e`: merges the endpoints into a fresh vertex placed last in the order.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(u, v));
        }
        let z = self.fresh_vertex();
        let mut g = self.clone();
        g.add_vertex(z);
        for x in [u, v] {
            for &w in self.neighbors(x) {
                if w == u || w == v {
                    continue;
                }
                let m = self.multiplicity(x, w);
                if g.pattern {
                    g.add_edge_with_multiplicity(z, w, m)?;
                } else {
                    g.add_edge(z, w)?;
                }
            }
        }
        g.remove_vertex(u);
        g.remove_vertex(v);
        Ok(g)
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(ns) = self.adj.remove(&v) {
            for u in ns {
                self.adj.get_mut(&u).unwrap().remove(&v);
                self.mult.remove(&key(u, v));
            }
        }
    }

    /// `G|_P`: joins the endpoints of each path and deletes inner vertices.
    pub fn constrict(&self, p: &PathFamily) -> Result<Graph> {
        p.validate(self)?;
        let mut g = self.clone();
        for path in &p.paths {
            for &v in &path[1..path.len() - 1] {
                g.remove_vertex(v);
            }
        }
        for path in &p.paths {
            g.add_edge(path[0], path[path.len() - 1])?;
        }
        Ok(g)
    }
}
