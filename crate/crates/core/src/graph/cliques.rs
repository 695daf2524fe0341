use super::dense::{bit, full, iter_bits, DenseGraph, Mask};
use super::Graph;
use crate::error::{Error, Result};

pub const CLIQUE_CENSUS_CAP: usize = 40;

/// Number of cliques of `g`, counting the empty set and single vertices.
pub fn count_cliques(g: &Graph) -> Result<u64> {
    if g.n() > CLIQUE_CENSUS_CAP {
        return Err(Error::CliqueCensusTooLarge {
            size: g.n(),
            cap: CLIQUE_CENSUS_CAP,
        });
    }
    let (d, _) = DenseGraph::from_graph(g);
    Ok(count_extensions(&d, full(d.n)))
}

/// Cliques inside the candidate set `p` (all of which extend the current one).
fn count_extensions(d: &DenseGraph, p: Mask) -> u64 {
    if iter_bits(p).all(|v| (d.adj[v] | bit(v)) & p == p) {
        return 1u64 << p.count_ones();
    }
    let mut total = 1;
    let mut rest = p;
    for v in iter_bits(p) {
        rest &= !bit(v);
        total += count_extensions(d, rest & d.adj[v]);
    }
    total
}
