//! Exhaustive minor and topological-minor containment for small patterns.
//!
//! Both tests first shrink the host with reductions that cannot change the
//! answer for the given pattern, then search over branch sets (minors) or
//! branch vertices plus internally disjoint paths (topological minors).

use super::dense::{bit, iter_bits, DenseGraph, Mask};
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const MINOR_PATTERN_CAP: usize = 8;
pub const MINOR_HOST_CAP: usize = 64;

struct Pattern {
    d: DenseGraph,
    /// Non-isolated vertices in search order.
    order: Vec<usize>,
    isolated: usize,
    min_weighted_degree: u32,
    min_degree: usize,
    simple: bool,
    connected: bool,
}

impl Pattern {
    fn new(h: &Graph) -> Pattern {
        let (d, _) = DenseGraph::from_graph(h);
        let n = d.n;
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        let non_isolated: Vec<usize> = (0..n).filter(|&v| d.degree(v) > 0).collect();
        while order.len() < non_isolated.len() {
            let next = non_isolated
                .iter()
                .copied()
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| {
                    (
                        (d.adj[v] & placed).count_ones(),
                        d.weighted_degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            placed |= bit(next);
            order.push(next);
        }
        let isolated = n - non_isolated.len();
        Pattern {
            min_weighted_degree: (0..n).map(|v| d.weighted_degree(v)).min().unwrap_or(0),
            min_degree: (0..n).map(|v| d.degree(v)).min().unwrap_or(0),
            simple: d.mult.is_empty(),
            connected: n > 0 && d.components(super::dense::full(n)).len() == 1,
            order,
            isolated,
            d,
        }
    }
}

fn check_pattern(h: &Graph, cap: usize) -> Result<()> {
    if h.n() > cap {
        return Err(Error::PatternTooLarge { size: h.n(), cap });
    }
    Ok(())
}

/// Converts the host to dense form, pruning degree-one vertices first when the
/// host is too large and the pattern allows it.
fn prepare_host(g: &Graph, p: &Pattern) -> Result<DenseGraph> {
    let mut owned;
    let mut g = g;
    if g.n() > MINOR_HOST_CAP && p.min_weighted_degree >= 2 {
        owned = g.clone();
        loop {
            let low: Vec<_> = owned.vertices().filter(|&v| owned.degree(v) <= 1).collect();
            if low.is_empty() {
                break;
            }
            for v in low {
                owned.remove_vertex(v);
            }
        }
        g = &owned;
    }
    if g.n() > MINOR_HOST_CAP {
        return Err(Error::HostTooLarge {
            size: g.n(),
            cap: MINOR_HOST_CAP,
        });
    }
    let mut d = DenseGraph::from_graph(g).0;
    d.mult.clear();
    Ok(d)
}

/// Deletes vertices of degree at most one while every pattern vertex has
/// (weighted) degree at least two, and suppresses degree-two vertices while
/// the pattern is simple with minimum degree at least three. Both are safe for
/// minors and topological minors alike. Returns the surviving vertices.
fn reduce(g: &mut DenseGraph, p: &Pattern) -> Mask {
    let mut alive = super::dense::full(g.n);
    let prune = p.min_weighted_degree >= 2;
    let suppress = p.simple && p.min_degree >= 3;
    if !prune {
        return alive;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for v in iter_bits(alive) {
            let nb = g.adj[v] & alive;
            match nb.count_ones() {
                0 | 1 => {
                    alive &= !bit(v);
                    changed = true;
                }
                2 if suppress => {
                    let a = nb.trailing_zeros() as usize;
                    let b = 63 - nb.leading_zeros() as usize;
                    alive &= !bit(v);
                    g.add_edge(a, b);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    alive
}

fn edge_count(g: &DenseGraph, a: Mask, b: Mask) -> u32 {
    iter_bits(a).map(|x| (g.adj[x] & b).count_ones()).sum()
}

fn neighborhood(g: &DenseGraph, s: Mask) -> Mask {
    let mut n = 0;
    for x in iter_bits(s) {
        n |= g.adj[x];
    }
    n & !s
}

struct MinorSearch<'a> {
    p: &'a Pattern,
    g: &'a DenseGraph,
    pos_of: Vec<usize>,
    branch: Vec<Mask>,
}

impl MinorSearch<'_> {
    fn assign(&mut self, pos: usize, used: Mask, alive: Mask) -> bool {
        let free = alive & !used;
        if pos == self.p.order.len() {
            return free.count_ones() as usize >= self.p.isolated;
        }
        let u = self.p.order[pos];
        let remaining = self.p.order.len() - pos - 1 + self.p.isolated;
        let available = free.count_ones() as usize;
        if available < remaining + 1 {
            return false;
        }
        let max_size = available - remaining;
        let anchor = iter_bits(self.p.d.adj[u]).find(|&w| self.pos_of[w] < pos);
        let roots = match anchor {
            Some(w) => neighborhood(self.g, self.branch[w]) & free,
            None => free,
        };
        for r in iter_bits(roots) {
            // `r` is the smallest root-eligible vertex of the branch set.
            let excl = roots & (bit(r) - 1);
            let ext = self.g.adj[r] & free & !excl;
            if self.grow(pos, u, bit(r), ext, excl, free, max_size, used, alive) {
                return true;
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        pos: usize,
        u: usize,
        b: Mask,
        ext: Mask,
        excl: Mask,
        free: Mask,
        max_size: usize,
        used: Mask,
        alive: Mask,
    ) -> bool {
        if ext == 0 || b.count_ones() as usize == max_size {
            return self.try_set(pos, u, b, used, alive);
        }
        let v = ext.trailing_zeros() as usize;
        let vb = bit(v);
        if self.grow(pos, u, b, ext & !vb, excl | vb, free, max_size, used, alive) {
            return true;
        }
        let nb = b | vb;
        let next_ext = (ext & !vb) | (self.g.adj[v] & free & !nb & !excl);
        self.grow(pos, u, nb, next_ext, excl, free, max_size, used, alive)
    }

    fn try_set(&mut self, pos: usize, u: usize, b: Mask, used: Mask, alive: Mask) -> bool {
        let nbh = neighborhood(self.g, b);
        for w in iter_bits(self.p.d.adj[u]) {
            if self.pos_of[w] >= pos {
                continue;
            }
            let m = self.p.d.multiplicity(u, w);
            let ok = if m == 1 {
                nbh & self.branch[w] != 0
            } else {
                edge_count(self.g, b, self.branch[w]) >= m
            };
            if !ok {
                return false;
            }
        }
        let free_after = alive & !used & !b;
        // Every later neighbour of `u` must still be able to touch `b`.
        if self.p.d.adj[u] != 0
            && iter_bits(self.p.d.adj[u]).any(|w| self.pos_of[w] > pos)
            && nbh & free_after == 0
        {
            return false;
        }
        self.branch[u] = b;
        let found = self.assign(pos + 1, used | b, alive);
        self.branch[u] = 0;
        found
    }
}

fn quick_reject(p: &Pattern, g: &DenseGraph, alive: Mask) -> bool {
    let n = alive.count_ones() as usize;
    if p.d.n > n {
        return true;
    }
    let m: usize = iter_bits(alive)
        .map(|v| (g.adj[v] & alive).count_ones() as usize)
        .sum::<usize>()
        / 2;
    p.d.m_with_multiplicity() > m
}

fn minor_search(p: &Pattern, g: &DenseGraph, alive: Mask) -> bool {
    if quick_reject(p, g, alive) {
        return false;
    }
    let mut pos_of = vec![usize::MAX; p.d.n];
    for (i, &v) in p.order.iter().enumerate() {
        pos_of[v] = i;
    }
    let mut search = MinorSearch {
        p,
        g,
        pos_of,
        branch: vec![0; p.d.n],
    };
    search.assign(0, 0, alive)
}

/// Pieces of the reduced host worth searching: the components when the
/// pattern is connected, otherwise the whole host.
fn search_regions(p: &Pattern, g: &DenseGraph, alive: Mask) -> Vec<Mask> {
    if p.connected {
        g.components(alive)
    } else {
        vec![alive]
    }
}

/// Whether `h` is a minor of `g`; `h` may carry edge multiplicities.
pub fn is_minor(h: &Graph, g: &Graph) -> Result<bool> {
    is_minor_with_cap(h, g, MINOR_PATTERN_CAP)
}

pub fn is_minor_with_cap(h: &Graph, g: &Graph, cap: usize) -> Result<bool> {
    check_pattern(h, cap)?;
    if h.n() == 0 {
        return Ok(true);
    }
    let p = Pattern::new(h);
    let mut d = prepare_host(g, &p)?;
    let alive = reduce(&mut d, &p);
    Ok(search_regions(&p, &d, alive)
        .into_iter()
        .any(|region| minor_search(&p, &d, region)))
}

struct TopoSearch<'a> {
    p: &'a Pattern,
    g: &'a DenseGraph,
    image: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl TopoSearch<'_> {
    fn place(&mut self, i: usize, branch: Mask, alive: Mask) -> bool {
        if i == self.p.order.len() {
            return self.route(0, branch, 0, alive);
        }
        let u = self.p.order[i];
        let need = self.p.d.degree(u);
        for x in iter_bits(alive & !branch) {
            if ((self.g.adj[x] & alive).count_ones() as usize) < need {
                continue;
            }
            self.image[u] = x;
            if self.place(i + 1, branch | bit(x), alive) {
                return true;
            }
        }
        false
    }

    fn route(&mut self, e: usize, branch: Mask, inner: Mask, alive: Mask) -> bool {
        if e == self.edges.len() {
            let rest = alive & !branch & !inner;
            return rest.count_ones() as usize >= self.p.isolated;
        }
        let (a, b) = self.edges[e];
        let (s, t) = (self.image[a], self.image[b]);
        let allowed = alive & !branch & !inner;
        self.paths(e, s, t, bit(s), allowed, branch, inner, alive)
    }

    /// Extends a path ending at `cur` towards `t` through `allowed` vertices.
    #[allow(clippy::too_many_arguments)]
    fn paths(
        &mut self,
        e: usize,
        cur: usize,
        t: usize,
        on_path: Mask,
        allowed: Mask,
        branch: Mask,
        inner: Mask,
        alive: Mask,
    ) -> bool {
        if self.g.has_edge(cur, t) {
            let internal = on_path & !bit(self.image[self.edges[e].0]);
            if self.route(e + 1, branch, inner | internal, alive) {
                return true;
            }
        }
        let next = self.g.adj[cur] & allowed & !on_path;
        // Only continue through vertices from which `t` is still reachable.
        let reach = self.g.reach(bit(t), (allowed & !on_path) | bit(t));
        for v in iter_bits(next & reach) {
            if self.paths(e, v, t, on_path | bit(v), allowed, branch, inner, alive) {
                return true;
            }
        }
        false
    }
}

/// Whether `h` is a topological minor of `g`: distinct branch vertices joined
/// by internally vertex-disjoint paths, no branch vertex inside a path.
pub fn is_topological_minor(h: &Graph, g: &Graph) -> Result<bool> {
    check_pattern(h, MINOR_PATTERN_CAP)?;
    if !h.is_simple() {
        return Err(Error::PatternNotSimple);
    }
    if h.n() == 0 {
        return Ok(true);
    }
    let p = Pattern::new(h);
    let mut d = prepare_host(g, &p)?;
    let alive = reduce(&mut d, &p);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &u in &p.order {
        for w in iter_bits(p.d.adj[u]) {
            if u < w {
                edges.push((u, w));
            }
        }
    }
    // Route edges between early-placed vertices first.
    let pos = |v: usize| p.order.iter().position(|&x| x == v).unwrap();
    edges.sort_by_key(|&(a, b)| (pos(a).max(pos(b)), pos(a).min(pos(b))));
    Ok(search_regions(&p, &d, alive).into_iter().any(|region| {
        if quick_reject(&p, &d, region) {
            return false;
        }
        let mut s = TopoSearch {
            p: &p,
            g: &d,
            image: vec![0; p.d.n],
            edges: edges.clone(),
        };
        s.place(0, 0, region)
    }))
}

/// True iff no member of `f` is a minor of `g`.
pub fn is_family_minor_free(g: &Graph, f: &[Graph]) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for h in f {
        if is_minor(h, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex set of `g` as used by reductions; exposed for tests.
#[allow(dead_code)]
pub(crate) fn reduced_vertices(h: &Graph, g: &Graph) -> Result<VertexSet> {
    let p = Pattern::new(h);
    let mut d = prepare_host(g, &p)?;
    let alive = reduce(&mut d, &p);
    let order: Vec<_> = g.vertices().collect();
    Ok(iter_bits(alive).map(|i| order[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn minor_examples() {
        assert!(is_minor(&complete(3), &cycle(5)).unwrap());
        assert!(!is_minor(&complete(3), &path(4)).unwrap());
        assert!(is_minor(&theta(3), &complete(4)).unwrap());
        assert!(!is_minor(&theta(3), &cycle(6)).unwrap());
        assert!(is_minor(&theta(2), &cycle(3)).unwrap());
        assert!(!is_minor(&complete(5), &complete(4)).unwrap());
        assert!(is_minor(&complete(4), &complete(5)).unwrap());
    }

    #[test]
    fn topological_examples() {
        assert!(is_topological_minor(&complete(4), &complete(4)).unwrap());
        assert!(is_topological_minor(&cycle(4), &complete(4)).unwrap());
        assert!(!is_topological_minor(&complete(5), &complete(4)).unwrap());
        assert_eq!(
            is_topological_minor(&theta(2), &complete(4)),
            Err(Error::PatternNotSimple)
        );
    }

    #[test]
    fn minor_but_not_topological() {
        // Contracting the middle edge of this tree creates a degree-4 vertex,
        // but no vertex has degree 4 to begin with.
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let star4 = star(4);
        assert!(is_minor(&star4, &tree).unwrap());
        assert!(!is_topological_minor(&star4, &tree).unwrap());
    }

    #[test]
    fn family_examples() {
        let two_triangles = disjoint_copies(&complete(3), 2);
        assert!(is_family_minor_free(&path(6), &[complete(3)]).unwrap());
        assert!(
            !is_family_minor_free(&two_triangles, std::slice::from_ref(&two_triangles)).unwrap()
        );
        assert!(is_family_minor_free(&complete(3), &[two_triangles]).unwrap());
        assert_eq!(is_family_minor_free(&path(2), &[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            is_minor(&complete(9), &complete(9)),
            Err(Error::PatternTooLarge { size: 9, cap: 8 })
        ));
        assert!(matches!(
            is_minor(&Graph::new(1), &Graph::new(65)),
            Err(Error::HostTooLarge { .. })
        ));
        // Long paths are pruned away for cycle-like patterns.
        assert!(!is_minor(&complete(3), &path(200)).unwrap());
    }

    #[test]
    fn isolated_pattern_vertices() {
        let mut h = complete(3);
        h.add_vertex(3);
        assert!(!is_minor(&h, &complete(3)).unwrap());
        let mut g = complete(3);
        g.add_vertex(7);
        assert!(is_minor(&h, &g).unwrap());
        assert!(is_topological_minor(&h, &g).unwrap());
    }

    #[test]
    fn reductions_strip_series_parallel_hosts() {
        let mut g = cycle(6);
        g.add_edge(0, 3).unwrap();
        assert!(reduced_vertices(&complete(4), &g).unwrap().is_empty());
        assert!(!is_minor(&complete(4), &g).unwrap());
    }

    #[test]
    fn k33_in_prism_plus() {
        let k33 = complete_bipartite(3, 3);
        assert!(is_minor(&k33, &k33).unwrap());
        // The triangular prism is planar.
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!is_minor(&k33, &prism).unwrap());
        assert!(!is_minor(&complete(5), &prism).unwrap());
    }
}
