use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_family_minor_free, Graph, Vertex, VertexSet};
use crate::protrusion::{clusters, mark_bags, MarkingTrace, ProtrusionDecomposition};

use super::brute::{brute_force_within, for_each_subset, BRUTE_FORCE_CAP};
use super::representatives::{
    classify, RepresentativeConfig, SignatureCache, DEFAULT_SIGNATURE_WORK_CAP,
};
use super::{treewidth_bound_for_family, Family};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Overrides the built-in `t_F`.
    pub tf: Option<usize>,
    /// Most vertices of a test graph; defaults to `t + 3` with `t = 2t_F + r`.
    pub test_cap: Option<usize>,
    /// Confirms NO answers by brute force when some classification was not
    /// certified.
    pub exact_fallback: bool,
    /// Per-cluster limit on signature work before exhaustive search takes over.
    pub work_cap: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tf: None,
            test_cap: None,
            exact_fallback: false,
            work_cap: DEFAULT_SIGNATURE_WORK_CAP,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub branches_explored: usize,
    pub compressions: usize,
    /// Marked bags in the last disjoint call.
    pub marked_bags: usize,
    pub max_marked_bags: usize,
    /// `|Y0|` in the last disjoint call.
    pub y0_size: usize,
    /// Clusters on the branch that produced the last solution.
    pub clusters: Option<usize>,
    pub representative_tables: usize,
    pub exhaustive_clusters: usize,
    /// Some classification ran with a test set too small to be exact.
    pub heuristic: bool,
    pub fallback_used: bool,
}

/// `(G, X)` with `G - X` family-minor-free; a solution avoids `X` and has at
/// most `budget` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct DisjointInstance {
    pub graph: Graph,
    pub x: VertexSet,
    pub budget: usize,
}

impl DisjointInstance {
    /// The compression form: strictly smaller than `X`.
    pub fn new(graph: Graph, x: VertexSet) -> Self {
        let budget = x.len().saturating_sub(1);
        DisjointInstance { graph, x, budget }
    }

    pub fn with_budget(graph: Graph, x: VertexSet, budget: usize) -> Self {
        DisjointInstance { graph, x, budget }
    }
}

/// Solver state for one family: parameters, caches and counters.
pub struct Solver<'a> {
    f: &'a Family,
    t_f: usize,
    opts: SolverOptions,
    cache: SignatureCache,
    pub stats: SolveStats,
    last_trace: Option<MarkingTrace>,
}

impl<'a> Solver<'a> {
    pub fn new(f: &'a Family, opts: SolverOptions) -> Result<Self> {
        let t_f = treewidth_bound_for_family(f, opts.tf)?;
        Ok(Solver {
            f,
            t_f,
            opts,
            cache: SignatureCache::default(),
            stats: SolveStats::default(),
            last_trace: None,
        })
    }

    pub fn t_f(&self) -> usize {
        self.t_f
    }

    /// `t = 2t_F + r`, the boundary bound of the clusters.
    pub fn t(&self) -> usize {
        2 * self.t_f + self.f.r
    }

    pub fn test_cap(&self) -> usize {
        self.opts.test_cap.unwrap_or(self.t() + 3)
    }

    /// Marking trace of the last disjoint call.
    pub fn last_trace(&self) -> Option<&MarkingTrace> {
        self.last_trace.as_ref()
    }

    fn free(&self, g: &Graph) -> Result<bool> {
        is_family_minor_free(g, &self.f.patterns)
    }

    /// Iterative compression over the vertex order of `g`.
    pub fn solve(&mut self, g: &Graph, k: usize) -> Result<Option<VertexSet>> {
        let answer = if self.free(g)? {
            Some(VertexSet::new())
        } else {
            self.compress_all(g, k)?
        };
        let answer = match answer {
            None if self.opts.exact_fallback
                && self.stats.heuristic
                && g.n() <= BRUTE_FORCE_CAP =>
            {
                self.stats.fallback_used = true;
                brute_force_within(g, self.f, k, &VertexSet::new())?
            }
            a => a,
        };
        if let Some(s) = &answer {
            if s.len() > k || !self.free(&g.without(s))? {
                return Err(Error::Invariant(format!(
                    "returned set {s:?} is not a solution"
                )));
            }
        }
        Ok(answer)
    }

    fn compress_all(&mut self, g: &Graph, k: usize) -> Result<Option<VertexSet>> {
        let mut seen = VertexSet::new();
        let mut sol = VertexSet::new();
        for v in g.vertices() {
            seen.insert(v);
            sol.insert(v);
            let h = g.induced(&seen);
            self.minimize(&h, &mut sol)?;
            if sol.len() <= k {
                continue;
            }
            self.stats.compressions += 1;
            match self.compress(&h, &sol, k)? {
                Some(s) => sol = s,
                None => return Ok(None),
            }
        }
        Ok(Some(sol))
    }

    /// Drops vertices whose removal from the solution keeps it valid.
    fn minimize(&self, h: &Graph, sol: &mut VertexSet) -> Result<()> {
        for u in sol.clone() {
            let mut smaller = sol.clone();
            smaller.remove(&u);
            if self.free(&h.without(&smaller))? {
                *sol = smaller;
            }
        }
        Ok(())
    }

    /// Replaces a solution of size `k + 1` by one of size at most `k`: every
    /// split into a discarded part `D` (kept in the solution) and a retained
    /// part `Z` (to be avoided) is handed to the disjoint solver.
    fn compress(&mut self, h: &Graph, sol: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
        let items: Vec<Vertex> = sol.iter().copied().collect();
        for d_size in 0..=k.min(items.len()) {
            let mut found = None;
            for_each_subset(&items, d_size, |d| {
                let z: VertexSet = sol.difference(d).copied().collect();
                let hd = h.without(d);
                let inst = DisjointInstance::with_budget(hd, z, k - d.len());
                if let Some(x) = self.disjoint(&inst)? {
                    found = Some(x.union(d).copied().collect());
                    return Ok(true);
                }
                Ok(false)
            })?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Marks bags, branches on the part `I` of the solution inside the marked
    /// vertices, and solves each branch over the resulting decomposition.
    pub fn disjoint(&mut self, inst: &DisjointInstance) -> Result<Option<VertexSet>> {
        let (g, x, budget) = (&inst.graph, &inst.x, inst.budget);
        if !self.free(&g.without(x))? {
            return Err(Error::NotASolution);
        }
        if !self.free(&g.induced(x))? {
            return Ok(None);
        }
        let (y0, trace) = mark_bags(g, x, self.f.r, self.t_f)?;
        self.stats.marked_bags = trace.marked_bag_count();
        self.stats.max_marked_bags = self.stats.max_marked_bags.max(self.stats.marked_bags);
        self.stats.y0_size = y0.len();
        self.last_trace = Some(trace);

        let cands: Vec<Vertex> = y0.difference(x).copied().collect();
        let mut found: Option<VertexSet> = None;
        for size in 0..=budget.min(cands.len()) {
            for_each_subset(&cands, size, |i| {
                self.stats.branches_explored += 1;
                let gi = g.without(i);
                let y0i: VertexSet = y0.difference(i).copied().collect();
                let pd = ProtrusionDecomposition {
                    clusters: clusters(&gi, &y0i),
                    y0: y0i,
                    beta: self.t(),
                    r: self.f.r,
                    t: self.t_f,
                    trace: MarkingTrace::default(),
                };
                if let Some(rest) = self.with_decomposition(&gi, &pd, budget - size)? {
                    self.stats.clusters = Some(pd.clusters.len());
                    found = Some(rest.union(i).copied().collect());
                    return Ok(true);
                }
                Ok(false)
            })?;
            if found.is_some() {
                break;
            }
        }
        if let Some(s) = &found {
            if s.len() > budget || !s.is_disjoint(x) || !self.free(&g.without(s))? {
                return Err(Error::Invariant(format!(
                    "disjoint solution {s:?} is invalid"
                )));
            }
        }
        Ok(found)
    }

    /// Searches decomposable sets, one representative per cluster, in order
    /// of total size.
    pub fn with_decomposition(
        &mut self,
        g: &Graph,
        pd: &ProtrusionDecomposition,
        k: usize,
    ) -> Result<Option<VertexSet>> {
        let mut options: Vec<Vec<VertexSet>> = Vec::with_capacity(pd.clusters.len());
        for c in &pd.clusters {
            options.push(self.cluster_options(g, c, k)?);
        }
        for total in 0..=k {
            let mut chosen = VertexSet::new();
            if let Some(s) = self.combine(g, &options, 0, total, &mut chosen)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    fn cluster_options(&mut self, g: &Graph, c: &VertexSet, k: usize) -> Result<Vec<VertexSet>> {
        let cfg = RepresentativeConfig {
            test_cap: self.test_cap(),
            max_size: k,
            work_cap: self.opts.work_cap,
        };
        match classify(g, c, self.f, &cfg, &mut self.cache) {
            Ok(table) => {
                self.stats.representative_tables += 1;
                if !table.certified {
                    self.stats.heuristic = true;
                }
                Ok(table
                    .classes
                    .into_iter()
                    .map(|c| c.representative)
                    .collect())
            }
            Err(Error::RepresentativeCap(_)) => {
                self.stats.exhaustive_clusters += 1;
                let items: Vec<Vertex> = c.iter().copied().collect();
                let mut all = Vec::new();
                for size in 0..=k.min(items.len()) {
                    for_each_subset(&items, size, |s| {
                        all.push(s.clone());
                        Ok(false)
                    })?;
                }
                Ok(all)
            }
            Err(e) => Err(e),
        }
    }

    fn combine(
        &self,
        g: &Graph,
        options: &[Vec<VertexSet>],
        i: usize,
        left: usize,
        chosen: &mut VertexSet,
    ) -> Result<Option<VertexSet>> {
        if i == options.len() {
            if left == 0 && self.free(&g.without(chosen))? {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        for q in &options[i] {
            if q.len() > left {
                continue;
            }
            chosen.extend(q.iter().copied());
            let r = self.combine(g, options, i + 1, left - q.len(), chosen)?;
            for v in q {
                chosen.remove(v);
            }
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
}

/// A set of at most `k` vertices whose removal leaves `g` free of every
/// member of `f`, or `None`.
pub fn planar_f_deletion(g: &Graph, f: &Family, k: usize) -> Result<Option<VertexSet>> {
    Solver::new(f, SolverOptions::default())?.solve(g, k)
}

/// A solution of `inst` disjoint from `inst.x`, or `None`.
pub fn disjoint_solver(inst: &DisjointInstance, f: &Family) -> Result<Option<VertexSet>> {
    Solver::new(f, SolverOptions::default())?.disjoint(inst)
}

/// A solution inside `V(g) ∖ Y0` of size at most `k` over the clusters of
/// `pd`, or `None`.
pub fn solve_with_decomposition(
    g: &Graph,
    k: usize,
    pd: &ProtrusionDecomposition,
    f: &Family,
) -> Result<Option<VertexSet>> {
    Solver::new(f, SolverOptions::default())?.with_decomposition(g, pd, k)
}
