use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::treewidth::{
    exact_treewidth, heuristic_decomposition, make_nice, treewidth_at_most, EXACT_TREEWIDTH_CAP,
};

pub const PROTRUSION_ENUMERATION_CAP: usize = 4;

/// Above this many candidate components the subset search turns greedy.
const COMPONENT_SUBSET_CAP: usize = 12;

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l: &usize| l + 1);
            for v in start..n {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn better(a: &VertexSet, b: &VertexSet) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a.iter().lt(b.iter()))
}

/// Largest `W` with `|∂(W)| ≤ t` and `tw(G[W]) ≤ t - 1`; ties go to the
/// lexicographically smallest set.
///
/// Every such `W` is its boundary `B` plus whole components of `G - B`, each
/// of which satisfies `tw(G[C ∪ B]) ≤ t - 1` on its own. So for every `B` of
/// size at most `t` the search only combines those components. Their union
/// can still exceed the width bound (two `u`-`v` paths make a cycle), in
/// which case the best admissible sub-collection is searched for.
pub fn find_max_protrusion(g: &Graph, t: usize) -> Result<VertexSet> {
    if t > PROTRUSION_ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge {
            t,
            cap: PROTRUSION_ENUMERATION_CAP,
        });
    }
    let mut best = VertexSet::new();
    if t == 0 {
        return Ok(best);
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    for pick in subsets_up_to(verts.len(), t) {
        let b: VertexSet = pick.iter().map(|&i| verts[i]).collect();
        let rest: VertexSet = g.vertices().filter(|v| !b.contains(v)).collect();
        let mut candidates = Vec::new();
        for c in g.components_within(&rest) {
            let with_b: VertexSet = c.union(&b).copied().collect();
            if treewidth_at_most(&g.induced(&with_b), t - 1)? {
                candidates.push(c);
            }
        }
        let total: usize = b.len() + candidates.iter().map(|c| c.len()).sum::<usize>();
        if total < best.len() {
            continue;
        }
        let w = best_combination(g, &b, &candidates, t)?;
        if better(&w, &best) {
            best = w;
        }
    }
    Ok(best)
}

fn union_with(b: &VertexSet, comps: &[&VertexSet]) -> VertexSet {
    let mut w = b.clone();
    for c in comps {
        w.extend(c.iter().copied());
    }
    w
}

fn best_combination(g: &Graph, b: &VertexSet, comps: &[VertexSet], t: usize) -> Result<VertexSet> {
    let all: Vec<&VertexSet> = comps.iter().collect();
    let w = union_with(b, &all);
    if treewidth_at_most(&g.induced(&w), t - 1)? {
        return Ok(w);
    }
    let mut best = b.clone();
    if comps.len() <= COMPONENT_SUBSET_CAP {
        for mask in 1u32..(1 << comps.len()) {
            let chosen: Vec<&VertexSet> = (0..comps.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| &comps[i])
                .collect();
            let w = union_with(b, &chosen);
            if better(&w, &best) && treewidth_at_most(&g.induced(&w), t - 1)? {
                best = w;
            }
        }
    } else {
        let mut order: Vec<&VertexSet> = comps.iter().collect();
        order.sort_by_key(|c| std::cmp::Reverse(c.len()));
        for c in order {
            let w: VertexSet = best.union(c).copied().collect();
            if treewidth_at_most(&g.induced(&w), t - 1)? {
                best = w;
            }
        }
    }
    Ok(best)
}

/// Descends a nice decomposition of `G[W]` to the lowest node whose subtree
/// covers more than `limit` vertices and returns those vertices: a set of
/// size in `(limit, 2·limit]` whose boundary lies in that node's bag plus
/// `∂(W)`.
pub fn shrink_protrusion(g: &Graph, w: &VertexSet, limit: usize) -> Result<VertexSet> {
    if w.len() <= limit || limit == 0 {
        return Err(Error::NothingToShrink {
            size: w.len(),
            limit,
        });
    }
    let h = g.induced(w);
    let mut td = heuristic_decomposition(&h);
    if w.len() <= EXACT_TREEWIDTH_CAP {
        if let Ok((width, exact)) = exact_treewidth(&h) {
            if width < td.width() {
                td = exact;
            }
        }
    }
    let nice = make_nice(&h, &td)?;

    // Nodes are created children-first, so index order is a post-order.
    let mut covered: Vec<VertexSet> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let mut s: VertexSet = node.bag.iter().copied().collect();
        for &c in &node.children {
            s.extend(covered[c].iter().copied());
        }
        if s.len() > limit && node.children.iter().all(|&c| covered[c].len() <= limit) {
            return Ok(s);
        }
        covered.push(s);
    }
    unreachable!("the root covers all of W")
}
