//! Seeded instance generators. Equal seeds give identical graphs.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Tree,
    Cycle,
    PlanarTriangulationSample,
    BoundedDegree,
    PlantedFvs,
    SeriesParallel,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tree" => Kind::Tree,
            "cycle" => Kind::Cycle,
            "planar-triangulation-sample" => Kind::PlanarTriangulationSample,
            "bounded-degree" => Kind::BoundedDegree,
            "planted-fvs" => Kind::PlantedFvs,
            "series-parallel" => Kind::SeriesParallel,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    pub kind: Kind,
    pub n: usize,
    pub seed: u64,
    /// Planted solution size.
    pub k: usize,
    /// Degree cap for `bounded-degree`.
    pub degree: usize,
    /// Edge keep probability for sampled and series-parallel graphs.
    pub p: f64,
}

impl GenParams {
    pub fn new(kind: Kind, n: usize, seed: u64) -> Self {
        GenParams {
            kind,
            n,
            seed,
            k: 2,
            degree: 3,
            p: 1.0,
        }
    }
}

/// A graph plus, for planted instances, the planted solution and a second
/// solution disjoint from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generated {
    #[serde(skip)]
    pub graph: Graph,
    pub solution: Option<VertexSet>,
    pub modulator: Option<VertexSet>,
    pub k: Option<usize>,
    pub seed: u64,
}

pub fn generate(p: &GenParams) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut out = Generated {
        graph: Graph::new(0),
        solution: None,
        modulator: None,
        k: None,
        seed: p.seed,
    };
    out.graph = match p.kind {
        Kind::Tree => random_tree(p.n, &mut rng),
        Kind::Cycle => shuffled_cycle(p.n, &mut rng),
        Kind::PlanarTriangulationSample => stacked_triangulation(p.n, p.p, &mut rng),
        Kind::BoundedDegree => bounded_degree(p.n, p.degree, &mut rng),
        Kind::SeriesParallel => series_parallel(p.n, p.p, &mut rng),
        Kind::PlantedFvs => {
            let (g, planted, other) = planted_fvs(p.n, p.k, &mut rng);
            out.solution = Some(planted);
            out.modulator = Some(other);
            out.k = Some(p.k);
            g
        }
    };
    Ok(out)
}

pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    g
}

fn shuffled_cycle(n: usize, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    if n >= 3 {
        for i in 0..n {
            g.add_edge(order[i], order[(i + 1) % n]).unwrap();
        }
    } else if n == 2 {
        g.add_edge(0, 1).unwrap();
    }
    g
}

/// Random stacked triangulation (each new vertex lands in a random face),
/// keeping every edge with probability `keep`.
fn stacked_triangulation(n: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut full = Graph::new(n);
    let base = n.min(3);
    for u in 0..base {
        for v in u + 1..base {
            full.add_edge(u, v).unwrap();
        }
    }
    let mut faces: Vec<[Vertex; 3]> = if n >= 3 {
        vec![[0, 1, 2], [0, 1, 2]]
    } else {
        Vec::new()
    };
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        for u in [a, b, c] {
            full.add_edge(u, v).unwrap();
        }
        faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
    }
    sample_edges(&full, keep, rng)
}

fn sample_edges(g: &Graph, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut out = Graph::with_vertices(g.vertices());
    for (u, v) in g.edges() {
        if keep >= 1.0 || rng.gen_bool(keep.max(0.0)) {
            out.add_edge(u, v).unwrap();
        }
    }
    out
}

fn bounded_degree(n: usize, d: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..n * d {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < d && g.degree(v) < d {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Random 2-tree with edges kept with probability `keep`: treewidth at most
/// two, so no `K4` minor.
fn series_parallel(n: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut full = Graph::new(n);
    if n >= 2 {
        full.add_edge(0, 1).unwrap();
    }
    for v in 2..n {
        let edges: Vec<(Vertex, Vertex)> = full.edges().collect();
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        full.add_edge(a, v).unwrap();
        full.add_edge(b, v).unwrap();
    }
    sample_edges(&full, keep, rng)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    /// Joins the classes of `a` and `b`; false when they already coincide.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// A graph with two disjoint feedback vertex sets of size `k`: the planted
/// set `P` (first) and a modulator `X` (second). Vertices `0..k` form `P`,
/// `k..2k` form `X`, the rest induce a forest, and both `G - P` and `G - X`
/// are forests by construction.
pub fn planted_fvs(n: usize, k: usize, rng: &mut impl Rng) -> (Graph, VertexSet, VertexSet) {
    let k = k.min(n / 2);
    let mut g = Graph::new(n);
    let planted: VertexSet = (0..k).collect();
    let modulator: VertexSet = (k..2 * k).collect();
    let rest: Vec<Vertex> = (2 * k..n).collect();
    let mut base = UnionFind((0..n).collect());
    for (i, &v) in rest.iter().enumerate().skip(1) {
        if rng.gen_bool(0.6) {
            let u = rest[rng.gen_range(0..i)];
            g.add_edge(u, v).unwrap();
            base.union(u, v);
        }
    }
    for side in [&planted, &modulator] {
        let mut uf = UnionFind(base.0.clone());
        let mut inside: Vec<Vertex> = Vec::new();
        for &s in side {
            let mut targets: Vec<Vertex> = rest.iter().chain(inside.iter()).copied().collect();
            targets.shuffle(rng);
            let want = rng.gen_range(2..=5);
            let mut added = 0;
            for t in targets {
                if added == want {
                    break;
                }
                if uf.union(s, t) {
                    g.add_edge(s, t).unwrap();
                    added += 1;
                }
            }
            inside.push(s);
        }
    }
    for &p in &planted {
        for &x in &modulator {
            if rng.gen_bool(0.3) {
                g.add_edge(p, x).unwrap();
            }
        }
    }
    (g, planted, modulator)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
