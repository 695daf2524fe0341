//! Closed-form bounds for sparse graph classes and the sizes they imply.
//! Logarithms are base 2 throughout.

use serde::Serialize;

use crate::error::{Error, Result};

/// Average-degree constant for graphs excluding `K_r` as a topological minor.
pub const BETA: f64 = 10.0;
/// Clique-count constant for graphs excluding `K_r` as a topological minor.
pub const TAU: f64 = 4.51;
/// Edge-density constant for graphs excluding `K_r` as a minor.
pub const ALPHA: f64 = 0.320;
/// Clique-count constant for graphs excluding `K_r` as a minor.
pub const MU: f64 = 11.355;

fn require_r_above(r: usize, min: usize) -> Result<()> {
    if r <= min {
        return Err(Error::BoundDomain { r, min });
    }
    Ok(())
}

/// `½·β·r²·n`: edges of an `n`-vertex graph without a `K_r` topological minor.
pub fn topo_edge_bound(r: usize, n: usize) -> Result<f64> {
    require_r_above(r, 2)?;
    Ok(0.5 * BETA * (r * r) as f64 * n as f64)
}

/// `2^{τ·r·log r}·n`: cliques of an `n`-vertex graph without a `K_r`
/// topological minor.
pub fn topo_clique_bound(r: usize, n: usize) -> Result<f64> {
    require_r_above(r, 2)?;
    Ok(topo_clique_factor(r) * n as f64)
}

fn topo_clique_factor(r: usize) -> f64 {
    let r = r as f64;
    (TAU * r * r.log2()).exp2()
}

/// `α_r = α·r·√(log r)`.
pub fn alpha_r(r: usize) -> f64 {
    let rf = r as f64;
    ALPHA * rf * rf.log2().max(0.0).sqrt()
}

/// `μ_r = 2^{μ·r·log log r}`.
pub fn mu_r(r: usize) -> f64 {
    let rf = r as f64;
    (MU * rf * rf.log2().log2()).exp2()
}

/// `α_r·n`: edges of an `n`-vertex graph without a `K_r` minor.
pub fn minor_edge_bound(r: usize, n: usize) -> Result<f64> {
    require_r_above(r, 1)?;
    Ok(alpha_r(r) * n as f64)
}

/// `μ_r·n`: cliques of an `n`-vertex graph without a `K_r` minor.
pub fn minor_clique_bound(r: usize, n: usize) -> Result<f64> {
    require_r_above(r, 2)?;
    Ok(mu_r(r) * n as f64)
}

/// Kernel size for a treewidth-bounding modulator of size `s_k`:
/// `x + (f_#ω(x) + x + 1)·protd` with `x = s_k + 2t·f_E(s_k)`, where `f_E`
/// and `f_#ω` are the topological-minor-free edge and clique bounds and
/// `protd` stands in for the protrusion size limit.
pub fn kernel_size_bound(s_k: usize, t: usize, r: usize, protd: usize) -> f64 {
    let f_e = |n: f64| 0.5 * BETA * (r * r) as f64 * n;
    let x = s_k as f64 + 2.0 * t as f64 * f_e(s_k as f64);
    let cliques = topo_clique_factor(r) * x;
    x + (cliques + x + 1.0) * protd as f64
}

/// `4k(1 + 20r² + (20.8^{r log r + 1}·20r² + 20.8^{r log r} + 20r²)(r − 1)) + r`.
pub fn eds_kernel_bound(k: usize, r: usize) -> f64 {
    let (k, r) = (k as f64, r as f64);
    let e = r * r.log2();
    let sq = 20.0 * r * r;
    4.0 * k * (1.0 + sq + (20.8f64.powf(e + 1.0) * sq + 20.8f64.powf(e) + sq) * (r - 1.0)) + r
}

/// `k + 2·t_F·(1 + α_r)·k`: size of `Y0` on a yes-instance of the disjoint
/// problem with `|X| = k`.
pub fn marked_bags_bound(k: usize, r: usize, t_f: usize) -> f64 {
    let k = k as f64;
    k + 2.0 * t_f as f64 * (1.0 + alpha_r(r)) * k
}

/// `2·(1 + α_r)·k`: number of marked bags on such an instance.
pub fn marked_bag_count_bound(k: usize, r: usize) -> f64 {
    2.0 * (1.0 + alpha_r(r)) * k as f64
}

/// `5·t_F·α_r·μ_r·k`: number of clusters on a yes-branch.
pub fn cluster_count_bound(k: usize, r: usize, t_f: usize) -> f64 {
    5.0 * t_f as f64 * alpha_r(r) * mu_r(r) * k as f64
}

/// All bounds for one `(k, r, t_F)` triple, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTable {
    pub k: usize,
    pub r: usize,
    pub t: usize,
    pub alpha_r: f64,
    pub mu_r: Option<f64>,
    pub topo_edge_per_vertex: Option<f64>,
    pub topo_clique_per_vertex: Option<f64>,
    pub minor_edge_per_vertex: Option<f64>,
    pub minor_clique_per_vertex: Option<f64>,
    pub eds_kernel: f64,
    pub marked_vertices: f64,
    pub marked_bags: f64,
    pub clusters: f64,
}

pub fn bound_table(k: usize, r: usize, t: usize) -> BoundTable {
    BoundTable {
        k,
        r,
        t,
        alpha_r: alpha_r(r),
        mu_r: (r > 2).then(|| mu_r(r)),
        topo_edge_per_vertex: topo_edge_bound(r, 1).ok(),
        topo_clique_per_vertex: topo_clique_bound(r, 1).ok(),
        minor_edge_per_vertex: minor_edge_bound(r, 1).ok(),
        minor_clique_per_vertex: minor_clique_bound(r, 1).ok(),
        eds_kernel: eds_kernel_bound(k, r),
        marked_vertices: marked_bags_bound(k, r, t),
        marked_bags: marked_bag_count_bound(k, r),
        clusters: cluster_count_bound(k, r, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn topological_edges() {
        assert_eq!(topo_edge_bound(3, 10).unwrap(), 450.0);
        assert_eq!(topo_edge_bound(3, 0).unwrap(), 0.0);
        assert_eq!(topo_edge_bound(5, 4).unwrap(), 500.0);
        assert_eq!(
            topo_edge_bound(2, 4),
            Err(Error::BoundDomain { r: 2, min: 2 })
        );
    }

    #[test]
    fn topological_cliques() {
        let expected = 2f64.powf(4.51 * 3.0 * 3f64.log2());
        assert!(close(topo_clique_bound(3, 1).unwrap(), expected, 1e-12));
        assert!((topo_clique_bound(3, 1).unwrap().log2() - 21.44).abs() < 0.01);
        assert_eq!(topo_clique_bound(7, 0).unwrap(), 0.0);
    }

    #[test]
    fn minor_bounds() {
        assert!((alpha_r(4) - 1.810).abs() < 1e-3);
        assert!((minor_edge_bound(4, 10).unwrap() - 18.10).abs() < 1e-2);
        assert_eq!(minor_edge_bound(4, 0).unwrap(), 0.0);
        assert_eq!(minor_clique_bound(3, 0).unwrap(), 0.0);
    }

    #[test]
    fn kernel_example() {
        assert_eq!(kernel_size_bound(0, 3, 4, 7), 7.0);
        let clique = 2f64.powf(4.51 * 3.0 * 3f64.log2());
        let expected = 364.0 + (clique * 364.0 + 365.0);
        assert!(close(kernel_size_bound(4, 1, 3, 1), expected, 1e-12));
    }

    #[test]
    fn eds_example() {
        assert_eq!(eds_kernel_bound(0, 3), 3.0);
    }

    #[test]
    fn marked_example() {
        assert!((marked_bags_bound(1, 4, 2) - 12.24).abs() < 0.01);
        assert_eq!(marked_bags_bound(0, 4, 2), 0.0);
        assert_eq!(cluster_count_bound(0, 4, 2), 0.0);
    }
}
