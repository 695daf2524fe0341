use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_minor, named, Graph, MINOR_PATTERN_CAP};

/// A finite set of forbidden minors with at least one planar member.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Family {
    pub patterns: Vec<Graph>,
    /// Index of the planar member that drives marking and `t_F`.
    pub planar_witness: usize,
    /// `|V(H_p)|` of the witness.
    pub r: usize,
}

impl Family {
    /// Validates the patterns and picks the witness: the first planar member
    /// with a built-in treewidth bound, else the first planar member.
    pub fn new(patterns: Vec<Graph>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(p) = patterns.iter().find(|p| p.n() > MINOR_PATTERN_CAP) {
            return Err(Error::PatternTooLarge {
                size: p.n(),
                cap: MINOR_PATTERN_CAP,
            });
        }
        let mut planar = Vec::new();
        for (i, p) in patterns.iter().enumerate() {
            if is_planar_small(p)? {
                planar.push(i);
            }
        }
        let witness = planar
            .iter()
            .copied()
            .find(|&i| known_tf(&patterns[i]).is_some())
            .or_else(|| planar.first().copied())
            .ok_or(Error::NoPlanarMember)?;
        Ok(Family {
            r: patterns[witness].n(),
            planar_witness: witness,
            patterns,
        })
    }

    pub fn witness(&self) -> &Graph {
        &self.patterns[self.planar_witness]
    }

    /// Patterns whose every vertex has degree at least one.
    pub(crate) fn without_isolated_vertices(&self) -> bool {
        self.patterns
            .iter()
            .all(|p| p.vertices().all(|v| p.degree(v) > 0))
    }

    pub(crate) fn all_simple(&self) -> bool {
        self.patterns.iter().all(|p| p.is_simple())
    }

    /// Largest pattern order.
    pub(crate) fn max_order(&self) -> usize {
        self.patterns.iter().map(|p| p.n()).max().unwrap_or(0)
    }
}

/// Planarity of a pattern with at most [`MINOR_PATTERN_CAP`] vertices, by
/// excluding `K5` and `K3,3` as minors of its underlying simple graph.
pub fn is_planar_small(p: &Graph) -> Result<bool> {
    Ok(!is_minor(&named::complete(5), p)? && !is_minor(&named::complete_bipartite(3, 3), p)?)
}

fn is_clique(p: &Graph) -> bool {
    p.is_simple() && p.m() * 2 == p.n() * p.n().saturating_sub(1)
}

fn known_tf(p: &Graph) -> Option<usize> {
    if p.n() == 2 && p.m() == 1 {
        // θ_1 = K2 forces an edgeless graph, θ_2 a forest, θ_3 a cactus.
        return match p.multiplicity(0, 1) {
            c @ 1..=3 => Some(c as usize),
            _ => None,
        };
    }
    if is_clique(p) && (3..=4).contains(&p.n()) {
        return Some(p.n() - 1);
    }
    // Graphs without two disjoint cycles have treewidth at most 4.
    let comps = p.components();
    if p.is_simple()
        && comps.len() == 2
        && comps
            .iter()
            .all(|c| c.len() == 3 && is_clique(&p.induced(c)))
    {
        return Some(5);
    }
    None
}

/// `t_F` such that every graph excluding the witness as a minor has
/// treewidth at most `t_F - 1`. An override always wins.
pub fn treewidth_bound_for_family(f: &Family, over: Option<usize>) -> Result<usize> {
    match over {
        Some(t) => Ok(t),
        None => known_tf(f.witness()).ok_or(Error::SupplyTf),
    }
}
