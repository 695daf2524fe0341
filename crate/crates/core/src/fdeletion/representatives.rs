//! Minimum-size representatives of the classes of partial solutions inside a
//! cluster, classified by their behaviour against a finite set of boundaried
//! test graphs.
//!
//! Test graphs carry at most `|V(P)| - 1` non-boundary vertices for the
//! largest pattern `P`. When a glued graph contains `P` as a minor, deleting
//! unused test vertices and contracting every piece of a branch set that
//! touches the boundary into a boundary vertex leaves a boundaried minor of
//! the test graph whose remaining inner vertices are whole branch sets, and
//! one that still works. A model with all `|V(P)|` branch sets inside the
//! test graph rejects every partial solution alike, so it never separates
//! two classes. For simple patterns the classification is therefore exact
//! once the cap admits that many inner vertices.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    glue, is_family_minor_free, serialize_graph, BoundariedGraph, Graph, Vertex, VertexSet,
};

use super::brute::for_each_subset;
use super::Family;

/// Largest cluster whose subsets are classified.
pub const REPRESENTATIVE_CLUSTER_CAP: usize = 25;
/// Largest number of labelled test graphs enumerated before deduplication.
pub const TEST_ENUMERATION_CAP: usize = 1 << 16;
/// Default limit on `#subsets × #tests` freeness checks per cluster.
pub const DEFAULT_SIGNATURE_WORK_CAP: usize = 40_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentativeClass {
    pub representative: VertexSet,
    pub members: Vec<VertexSet>,
    /// Accept/reject per test graph: `true` when the gluing is family-minor-free.
    pub signature: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentativeTable {
    pub cluster: VertexSet,
    pub boundary: Vec<Vertex>,
    pub classes: Vec<RepresentativeClass>,
    pub tests: usize,
    /// The test set is provably large enough for the classes to be exact.
    pub certified: bool,
}

impl RepresentativeTable {
    pub fn representatives(&self) -> impl Iterator<Item = &VertexSet> {
        self.classes.iter().map(|c| &c.representative)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepresentativeConfig {
    /// Most vertices (boundary included) of a test graph.
    pub test_cap: usize,
    /// Only subsets of at most this size are classified.
    pub max_size: usize,
    pub work_cap: usize,
}

/// A test graph on `0..n` whose boundary is `0..b` in label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestGraph {
    pub n: usize,
    pub b: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TestGraph {
    pub fn boundaried(&self) -> BoundariedGraph {
        let g = Graph::from_edges(self.n, &self.edges).expect("test graph edges are valid");
        BoundariedGraph::new(g, (0..self.b).collect()).expect("boundary is 0..b")
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Smallest edge mask over all relabellings of the inner vertices.
fn canonical_mask(
    mask: u32,
    pairs: &[(usize, usize)],
    index: &[Vec<usize>],
    perms: &[Vec<usize>],
) -> u32 {
    perms
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(0u32, |acc, (_, &(u, v))| {
                    acc | (1 << index[perm[u]][perm[v]])
                })
        })
        .min()
        .unwrap_or(mask)
}

/// Every `b`-boundaried graph with exactly `e` inner vertices, one per
/// class of boundary-fixing isomorphism. With `skip_isolated` inner
/// vertices of degree zero are left out.
pub fn enumerate_test_graphs(b: usize, e: usize, skip_isolated: bool) -> Result<Vec<TestGraph>> {
    let n = b + e;
    let pairs = pair_list(n);
    if pairs.len() >= 31 || (1usize << pairs.len()) > TEST_ENUMERATION_CAP {
        return Err(Error::RepresentativeCap(format!(
            "{} labelled test graphs on {n} vertices",
            if pairs.len() >= 64 {
                u64::MAX
            } else {
                1u64 << pairs.len()
            }
        )));
    }
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let inner: Vec<usize> = (b..n).collect();
    let perms: Vec<Vec<usize>> = permutations(&inner)
        .into_iter()
        .map(|p| (0..b).chain(p).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        if skip_isolated
            && inner
                .iter()
                .any(|&v| edges.iter().all(|&(a, c)| a != v && c != v))
        {
            continue;
        }
        if canonical_mask(mask, &pairs, &index, &perms) == mask {
            out.push(TestGraph { n, b, edges });
        }
    }
    Ok(out)
}

type TestKey = (usize, usize, bool);

fn cached_tests(b: usize, e: usize, skip_isolated: bool) -> Result<Arc<Vec<TestGraph>>> {
    static CACHE: OnceLock<Mutex<HashMap<TestKey, Arc<Vec<TestGraph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(b, e, skip_isolated)) {
        return Ok(t.clone());
    }
    let t = Arc::new(enumerate_test_graphs(b, e, skip_isolated)?);
    cache
        .lock()
        .unwrap()
        .insert((b, e, skip_isolated), t.clone());
    Ok(t)
}

/// The test set for boundary size `b`: all test graphs with up to
/// `min(test_cap - b, max_order - 1)` inner vertices that are themselves
/// family-minor-free. Also reports whether that set is exact.
pub fn test_set(f: &Family, b: usize, test_cap: usize) -> Result<(Vec<TestGraph>, bool)> {
    let needed = f.max_order().saturating_sub(1);
    let e_max = test_cap.saturating_sub(b).min(needed);
    let certified = f.all_simple() && e_max == needed;
    let skip_isolated = f.without_isolated_vertices();
    let mut raw = 0usize;
    let mut out = Vec::new();
    for e in 0..=e_max {
        let pairs = (b + e) * (b + e).saturating_sub(1) / 2;
        raw = raw.saturating_add(if pairs >= 63 { usize::MAX } else { 1 << pairs });
        if raw > TEST_ENUMERATION_CAP {
            return Err(Error::RepresentativeCap(format!(
                "test set for boundary {b} with {e} inner vertices exceeds {TEST_ENUMERATION_CAP}"
            )));
        }
        for t in cached_tests(b, e, skip_isolated)?.iter() {
            if is_family_minor_free(&t.boundaried().graph, &f.patterns)? {
                out.push(t.clone());
            }
        }
    }
    Ok((out, certified))
}

/// `G[Y⁺]` relabelled with the boundary on `0..b` in order, then the
/// cluster in order.
pub(crate) struct ClusterView {
    pub boundary: Vec<Vertex>,
    pub local: BTreeMap<Vertex, usize>,
    pub graph: Graph,
}

impl ClusterView {
    pub fn new(g: &Graph, cluster: &VertexSet) -> Self {
        let boundary: Vec<Vertex> = g.neighborhood(cluster).into_iter().collect();
        let local: BTreeMap<Vertex, usize> = boundary
            .iter()
            .chain(cluster.iter())
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut graph = Graph::new(local.len());
        for (&v, &i) in &local {
            for u in g.neighbors(v) {
                if let Some(&j) = local.get(u) {
                    if i < j {
                        graph.add_edge(i, j).expect("distinct local ids");
                    }
                }
            }
        }
        ClusterView {
            boundary,
            local,
            graph,
        }
    }

    /// `G[Y⁺ ∖ Q]` as a boundaried graph.
    pub fn without(&self, q: &VertexSet) -> BoundariedGraph {
        let drop: VertexSet = q.iter().map(|v| self.local[v]).collect();
        BoundariedGraph {
            graph: self.graph.without(&drop),
            boundary: (0..self.boundary.len()).collect(),
        }
    }
}

/// Signature cache keyed by the relabelled graph `G[Y⁺ ∖ Q]`, so repeated
/// clusters across branches and compression steps are classified once.
type TestSet = (Arc<Vec<TestGraph>>, bool);

#[derive(Default)]
pub(crate) struct SignatureCache {
    entries: HashMap<(usize, String), Vec<bool>>,
    tests: HashMap<(usize, usize), Result<TestSet>>,
}

impl SignatureCache {
    fn tests(&mut self, f: &Family, b: usize, test_cap: usize) -> Result<TestSet> {
        self.tests
            .entry((b, test_cap))
            .or_insert_with(|| test_set(f, b, test_cap).map(|(t, c)| (Arc::new(t), c)))
            .clone()
    }

    fn signature(
        &mut self,
        a: &BoundariedGraph,
        tests: &[TestGraph],
        f: &Family,
        key_extra: usize,
    ) -> Result<Vec<bool>> {
        let key = (
            key_extra,
            format!("{}|{}", a.t(), serialize_graph(&a.graph)),
        );
        if let Some(s) = self.entries.get(&key) {
            return Ok(s.clone());
        }
        let mut sig = Vec::with_capacity(tests.len());
        for t in tests {
            let glued = glue(a, &t.boundaried())?;
            sig.push(is_family_minor_free(&glued, &f.patterns)?);
        }
        self.entries.insert(key, sig.clone());
        Ok(sig)
    }
}

pub(crate) fn classify(
    g: &Graph,
    cluster: &VertexSet,
    f: &Family,
    cfg: &RepresentativeConfig,
    cache: &mut SignatureCache,
) -> Result<RepresentativeTable> {
    if cluster.len() > REPRESENTATIVE_CLUSTER_CAP {
        return Err(Error::RepresentativeCap(format!(
            "cluster has {} > {REPRESENTATIVE_CLUSTER_CAP} vertices",
            cluster.len()
        )));
    }
    let view = ClusterView::new(g, cluster);
    let (tests, certified) = cache.tests(f, view.boundary.len(), cfg.test_cap)?;

    let items: Vec<Vertex> = cluster.iter().copied().collect();
    let max_size = cfg.max_size.min(items.len());
    let subsets: usize = (0..=max_size).map(|s| binomial(items.len(), s)).sum();
    if subsets.saturating_mul(tests.len().max(1)) > cfg.work_cap {
        return Err(Error::RepresentativeCap(format!(
            "{subsets} subsets × {} tests exceeds {}",
            tests.len(),
            cfg.work_cap
        )));
    }

    let mut classes: Vec<RepresentativeClass> = Vec::new();
    let mut by_sig: HashMap<Vec<bool>, usize> = HashMap::new();
    for size in 0..=max_size {
        for_each_subset(&items, size, |q| {
            let sig = cache.signature(&view.without(q), &tests, f, cfg.test_cap)?;
            match by_sig.get(&sig) {
                Some(&i) => classes[i].members.push(q.clone()),
                None => {
                    by_sig.insert(sig.clone(), classes.len());
                    classes.push(RepresentativeClass {
                        representative: q.clone(),
                        members: vec![q.clone()],
                        signature: sig,
                    });
                }
            }
            Ok(false)
        })?;
    }
    Ok(RepresentativeTable {
        cluster: cluster.clone(),
        boundary: view.boundary,
        classes,
        tests: tests.len(),
        certified,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Classifies every subset of `cluster` (boundary `N(cluster)`, at most `t`
/// vertices) against all test graphs with at most `test_cap` vertices and
/// keeps one minimum-size member per class.
pub fn compute_representatives(
    g: &Graph,
    cluster: &VertexSet,
    f: &Family,
    t: usize,
    test_cap: usize,
) -> Result<RepresentativeTable> {
    let b = g.neighborhood(cluster).len();
    if b > t {
        return Err(Error::RepresentativeCap(format!(
            "boundary {b} exceeds t = {t}"
        )));
    }
    let cfg = RepresentativeConfig {
        test_cap,
        max_size: cluster.len(),
        work_cap: usize::MAX,
    };
    classify(g, cluster, f, &cfg, &mut SignatureCache::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn k3() -> Family {
        Family::new(vec![named::complete(3)]).unwrap()
    }

    #[test]
    fn test_graph_counts() {
        // Two boundary vertices and no inner ones: with or without the edge.
        assert_eq!(enumerate_test_graphs(2, 0, false).unwrap().len(), 2);
        // One boundary and one inner vertex, inner not isolated.
        assert_eq!(enumerate_test_graphs(1, 1, true).unwrap().len(), 1);
        // Graphs on two unlabelled vertices.
        assert_eq!(enumerate_test_graphs(0, 2, false).unwrap().len(), 2);
        // Graphs on three unlabelled vertices.
        assert_eq!(enumerate_test_graphs(0, 3, false).unwrap().len(), 4);
        assert!(enumerate_test_graphs(6, 1, false).is_err());
    }

    #[test]
    fn triangle_cluster() {
        // Y⁺ = triangle {0, 1, 2} with boundary {0}, cluster {1, 2}.
        let g = named::complete(3);
        let table = compute_representatives(&g, &[1, 2].into(), &k3(), 7, 3).unwrap();
        assert_eq!(table.boundary, vec![0]);
        let reps: Vec<&VertexSet> = table.representatives().collect();
        assert_eq!(reps, vec![&VertexSet::new(), &VertexSet::from([1])]);
        assert_eq!(table.classes[1].members.len(), 3);
        assert!(table.classes[0].signature.iter().all(|&ok| !ok));
        assert!(table.certified);
    }

    #[test]
    fn trivial_clusters() {
        let g = named::path(3);
        let table = compute_representatives(&g, &VertexSet::new(), &k3(), 7, 5).unwrap();
        assert_eq!(table.classes.len(), 1);
        assert_eq!(table.classes[0].representative, VertexSet::new());

        let g = Graph::new(4);
        let table = compute_representatives(&g, &[1, 2, 3].into(), &k3(), 7, 5).unwrap();
        assert_eq!(table.classes.len(), 1);
        assert_eq!(table.classes[0].members.len(), 8);
    }

    #[test]
    fn boundary_cap() {
        let g = named::star(5);
        assert!(matches!(
            compute_representatives(&g, &[0].into(), &k3(), 4, 7),
            Err(Error::RepresentativeCap(_))
        ));
    }
}
