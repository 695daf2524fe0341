//! Exact treewidth: safe simplicial/almost-simplicial eliminations, then a
//! subset dynamic program over elimination orders on what is left.

use std::collections::{BTreeMap, BTreeSet};

use super::elimination::{decomposition_from_order, elimination_width, min_fill_order};
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::dense::{bit, full, iter_bits, DenseGraph, Mask};
use crate::graph::{Graph, Vertex};

pub const EXACT_TREEWIDTH_CAP: usize = 20;

type Adj = BTreeMap<Vertex, BTreeSet<Vertex>>;

pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    exact_treewidth_with_cap(g, EXACT_TREEWIDTH_CAP)
}

/// `cap` bounds the size of each component left after the safe eliminations.
pub fn exact_treewidth_with_cap(g: &Graph, cap: usize) -> Result<(usize, TreeDecomposition)> {
    let mut adj: Adj = g.vertices().map(|v| (v, g.neighbors(v).clone())).collect();
    let mut order: Vec<Vertex> = Vec::with_capacity(g.n());
    let mut low = 0;
    loop {
        low = low.max(minor_min_width(&adj));
        let Some(v) = adj
            .keys()
            .copied()
            .find(|&v| safe_to_eliminate(&adj, v, low))
        else {
            break;
        };
        low = low.max(adj[&v].len());
        eliminate(&mut adj, v);
        order.push(v);
    }

    let kernel = graph_of(&adj);
    for comp in kernel.components() {
        if comp.len() > cap {
            return Err(Error::ExactTreewidthTooLarge {
                size: comp.len(),
                cap,
            });
        }
        order.extend(component_order(&kernel.induced(&comp)));
    }
    let td = decomposition_from_order(g, &order);
    Ok((td.width(), td))
}

fn graph_of(adj: &Adj) -> Graph {
    let mut g = Graph::with_vertices(adj.keys().copied());
    for (&u, ns) in adj {
        for &v in ns.range(u + 1..) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn eliminate(adj: &mut Adj, v: Vertex) {
    let nb = adj.remove(&v).unwrap_or_default();
    for &a in &nb {
        let row = adj.get_mut(&a).unwrap();
        row.remove(&v);
        row.extend(nb.iter().copied().filter(|&b| b != a));
    }
}

fn is_clique(adj: &Adj, s: &[Vertex]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, a)| s[i + 1..].iter().all(|b| adj[a].contains(b)))
}

/// Simplicial vertices, and almost-simplicial ones of degree at most the
/// current lower bound, can be eliminated first without losing optimality.
fn safe_to_eliminate(adj: &Adj, v: Vertex, low: usize) -> bool {
    let nb: Vec<Vertex> = adj[&v].iter().copied().collect();
    if is_clique(adj, &nb) {
        return true;
    }
    if nb.len() > low {
        return false;
    }
    (0..nb.len()).any(|skip| {
        let rest: Vec<Vertex> = nb
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &x)| x)
            .collect();
        is_clique(adj, &rest)
    })
}

/// Minor-min-width lower bound: repeatedly contract a minimum-degree vertex
/// into its minimum-degree neighbour.
fn minor_min_width(adj: &Adj) -> usize {
    let mut adj = adj.clone();
    let mut lb = 0;
    while let Some((&v, _)) = adj.iter().min_by_key(|(&v, ns)| (ns.len(), v)) {
        let nb = adj.remove(&v).unwrap();
        lb = lb.max(nb.len());
        let Some(&u) = nb.iter().min_by_key(|&&u| (adj[&u].len(), u)) else {
            continue;
        };
        for &a in &nb {
            adj.get_mut(&a).unwrap().remove(&v);
        }
        for &a in nb.iter().filter(|&&a| a != u) {
            adj.get_mut(&a).unwrap().insert(u);
            adj.get_mut(&u).unwrap().insert(a);
        }
    }
    lb
}

/// Optimal elimination order of a connected graph with at most 20-odd
/// vertices.
fn component_order(h: &Graph) -> Vec<Vertex> {
    let heuristic = min_fill_order(h);
    let ub = elimination_width(h, &heuristic);
    let adj: Adj = h.vertices().map(|v| (v, h.neighbors(v).clone())).collect();
    if minor_min_width(&adj) >= ub {
        return heuristic;
    }
    let (d, ids) = DenseGraph::from_graph(h);
    match best_order(&d, ub) {
        Some(order) => order.into_iter().map(|i| ids[i]).collect(),
        None => heuristic,
    }
}

/// Dynamic program over the set `S` of already eliminated vertices: the cost
/// of eliminating `v` next is the number of vertices outside `S ∪ {v}` that
/// `v` reaches through `S`. Returns an order of width below `ub` if one
/// exists.
fn best_order(d: &DenseGraph, ub: usize) -> Option<Vec<usize>> {
    let n = d.n;
    let all = full(n);
    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    tw[0] = 0;
    for s in 0..size {
        let cur = tw[s];
        if cur as usize >= ub {
            continue;
        }
        let s_mask = s as Mask;
        for v in iter_bits(all & !s_mask) {
            let region = d.reach(bit(v), s_mask | bit(v));
            let mut nb = 0;
            for x in iter_bits(region) {
                nb |= d.adj[x];
            }
            let q = (nb & !s_mask & !bit(v)).count_ones() as u8;
            let val = cur.max(q);
            let next = s | (1 << v);
            if (val as usize) < ub && val < tw[next] {
                tw[next] = val;
                choice[next] = v as u8;
            }
        }
    }
    if tw[size - 1] == u8::MAX {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Some(order)
}
