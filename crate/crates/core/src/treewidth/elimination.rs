use std::collections::{BTreeMap, BTreeSet};

use super::TreeDecomposition;
use crate::graph::{Graph, Vertex};

type Adj = BTreeMap<Vertex, BTreeSet<Vertex>>;

fn adjacency(g: &Graph) -> Adj {
    g.vertices().map(|v| (v, g.neighbors(v).clone())).collect()
}

/// Removes `v`, turning its neighbourhood into a clique; returns the
/// neighbourhood.
fn eliminate(adj: &mut Adj, v: Vertex) -> BTreeSet<Vertex> {
    let nb = adj.remove(&v).unwrap_or_default();
    for &a in &nb {
        let row = adj.get_mut(&a).unwrap();
        row.remove(&v);
        row.extend(nb.iter().copied().filter(|&b| b != a));
    }
    nb
}

fn fill_in(adj: &Adj, v: Vertex) -> usize {
    let nb: Vec<Vertex> = adj[&v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        let row = &adj[&a];
        missing += nb[i + 1..].iter().filter(|b| !row.contains(b)).count();
    }
    missing
}

/// Greedy min-fill elimination order; ties go to the lowest vertex id.
pub fn min_fill_order(g: &Graph) -> Vec<Vertex> {
    let mut adj = adjacency(g);
    let mut order = Vec::with_capacity(g.n());
    while !adj.is_empty() {
        let mut best = (usize::MAX, Vertex::MAX);
        for &v in adj.keys() {
            let f = fill_in(&adj, v);
            if f < best.0 {
                best = (f, v);
                if f == 0 {
                    break;
                }
            }
        }
        eliminate(&mut adj, best.1);
        order.push(best.1);
    }
    order
}

/// Largest neighbourhood met while eliminating `order` (the width of the
/// induced decomposition).
pub fn elimination_width(g: &Graph, order: &[Vertex]) -> usize {
    let mut adj = adjacency(g);
    order
        .iter()
        .map(|&v| eliminate(&mut adj, v).len())
        .max()
        .unwrap_or(0)
}

/// Tree decomposition induced by an elimination order covering all vertices.
/// Bags contained in a neighbouring bag are merged away, and bags are indexed
/// in preorder so that every root precedes its descendants.
pub fn decomposition_from_order(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    let n = order.len();
    let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = adjacency(g);
    let mut bags: Vec<BTreeSet<Vertex>> = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    for &v in order {
        let nb = eliminate(&mut adj, v);
        parent.push(nb.iter().map(|u| pos[u]).min());
        let mut bag = nb;
        bag.insert(v);
        bags.push(bag);
    }

    // Top-down: absorb a node into a child whose bag contains it.
    let mut alive = vec![true; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(i);
        }
    }
    for p in (0..n).rev() {
        let Some(&c) = children[p].iter().find(|&&c| bags[p].is_subset(&bags[c])) else {
            continue;
        };
        alive[p] = false;
        parent[c] = parent[p];
        if let Some(q) = parent[p] {
            for slot in children[q].iter_mut() {
                if *slot == p {
                    *slot = c;
                }
            }
        }
        let others: Vec<usize> = children[p].iter().copied().filter(|&x| x != c).collect();
        for &o in &others {
            parent[o] = Some(c);
        }
        children[c].extend(others);
        children[p].clear();
    }

    // Preorder, later-eliminated nodes first.
    let mut index = vec![usize::MAX; n];
    let mut seq = Vec::new();
    for r in (0..n).rev().filter(|&i| alive[i] && parent[i].is_none()) {
        let mut stack = vec![r];
        while let Some(x) = stack.pop() {
            index[x] = seq.len();
            seq.push(x);
            let mut ch = children[x].clone();
            ch.sort_unstable();
            stack.extend(ch);
        }
    }
    TreeDecomposition {
        bags: seq
            .iter()
            .map(|&x| bags[x].iter().copied().collect())
            .collect(),
        parent: seq.iter().map(|&x| parent[x].map(|p| index[p])).collect(),
    }
}
