//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use protrusionkit::bounds::{
    alpha_r, cluster_count_bound, eds_kernel_bound, marked_bag_count_bound, minor_clique_bound,
    minor_edge_bound, topo_clique_bound, topo_edge_bound,
};
use protrusionkit::eds::{eds_brute_force, eds_kernelize};
use protrusionkit::fdeletion::{
    compute_representatives, f_deletion_brute_force, planar_f_deletion, DisjointInstance, Family,
    Solver, SolverOptions,
};
use protrusionkit::generate::{generate, gnp, planted_fvs, random_tree, GenParams, Kind};
use protrusionkit::graph::{
    count_cliques, glue, is_family_minor_free, is_minor, is_topological_minor, named, unglue,
    unglue_complement,
};
use protrusionkit::protrusion::{
    build_protrusion_decomposition, clusters, validate_protrusion_decomposition,
};
use protrusionkit::{Graph, Vertex, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let el = start.elapsed();
    if el > limit {
        return Err(format!(
            "took {:.1}s, limit {}s",
            el.as_secs_f64(),
            limit.as_secs()
        ));
    }
    Ok(())
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

// ---- criteria 1 and 2: decompositions ----

struct ModulatedInstance {
    g: Graph,
    x: VertexSet,
    r: usize,
    t: usize,
}

/// `G - X` is built with treewidth below `t`, then `X` is attached at random
/// and all labels are shuffled.
fn modulated_instance(seed: u64) -> ModulatedInstance {
    let mut rng = rng(seed);
    let t = 1 + (seed % 3) as usize;
    let r = 2 + (seed / 3 % 3) as usize;
    let n = rng.gen_range(4..=40);
    let xk = rng.gen_range(1..=(n / 3).clamp(1, 6));
    let base_n = n - xk;
    let base = match t {
        1 => Graph::new(base_n),
        2 => {
            let tree = random_tree(base_n, &mut rng);
            let kept: Vec<_> = tree.edges().filter(|_| rng.gen_bool(0.8)).collect();
            Graph::from_edges(base_n, &kept).unwrap()
        }
        _ => {
            let mut p = GenParams::new(Kind::SeriesParallel, base_n, rng.gen());
            p.p = 0.8;
            generate(&p).unwrap().graph
        }
    };
    let mut edges: Vec<(Vertex, Vertex)> = base.edges().collect();
    for x in base_n..n {
        for v in 0..x {
            let p = if v >= base_n { 0.3 } else { 0.15 };
            if rng.gen_bool(p) {
                edges.push((v, x));
            }
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mapped: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    ModulatedInstance {
        g: Graph::from_edges(n, &mapped).unwrap(),
        x: (base_n..n).map(|v| perm[v]).collect(),
        r,
        t,
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let (mut marks, mut clusters_seen) = (0, 0);
    for seed in 0..200 {
        let ModulatedInstance { g, x, r, t } = modulated_instance(seed);
        let pd = match build_protrusion_decomposition(&g, &x, r, t) {
            Ok(pd) => pd,
            Err(e) => {
                bad.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        marks += pd.trace.marked_bag_count();
        clusters_seen += pd.clusters.len();
        if pd.beta != 2 * t + r {
            bad.push(format!("seed {seed}: beta {} != 2t+r", pd.beta));
        }
        let report = validate_protrusion_decomposition(&g, &pd);
        if !report.violations.is_empty() || !report.uncertified.is_empty() {
            bad.push(format!(
                "seed {seed}: {:?} uncertified {:?}",
                report.violations, report.uncertified
            ));
        }
        for c in &pd.clusters {
            let nb = g.neighborhood(c);
            let nx = nb.intersection(&x).count();
            let ny = nb.intersection(&pd.y0).count();
            if nx >= r || ny >= r + 2 * t {
                bad.push(format!(
                    "seed {seed}: cluster with |N_X| = {nx}, |N_Y0| = {ny}"
                ));
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    if bad.is_empty() {
        Ok(format!(
            "200 instances ({marks} marked bags, {clusters_seen} clusters), 0 violations, {:.2}s",
            start.elapsed().as_secs_f64()
        ))
    } else {
        Err(format!("{} violations, first: {}", bad.len(), bad[0]))
    }
}

/// Marked bags adjacent to each maximal unmarked subtree, recomputed from
/// the raw trace.
fn unmarked_subtree_neighbours(parent: &[Option<usize>], marked: &BTreeSet<usize>) -> Vec<usize> {
    let n = parent.len();
    let mut dsu = Dsu::new(n);
    for (b, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            if !marked.contains(&b) && !marked.contains(&p) {
                dsu.union(b, p);
            }
        }
    }
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for b in (0..n).filter(|b| !marked.contains(b)) {
        adj.entry(dsu.find(b)).or_default();
    }
    for (b, p) in parent.iter().enumerate() {
        let Some(p) = *p else { continue };
        match (marked.contains(&b), marked.contains(&p)) {
            (false, true) => {
                adj.entry(dsu.find(b)).or_default().insert(p);
            }
            (true, false) => {
                adj.entry(dsu.find(p)).or_default().insert(b);
            }
            _ => {}
        }
    }
    adj.values().map(BTreeSet::len).collect()
}

fn criterion_2() -> Outcome {
    let mut subtrees = 0;
    let mut bad = Vec::new();
    for seed in 0..200 {
        let ModulatedInstance { g, x, r, t } = modulated_instance(seed);
        let pd = build_protrusion_decomposition(&g, &x, r, t)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        for cd in &pd.trace.decompositions {
            let marked: BTreeSet<usize> = pd
                .trace
                .marks
                .iter()
                .filter(|m| m.component == cd.component)
                .map(|m| m.bag)
                .collect();
            for d in unmarked_subtree_neighbours(&cd.td.parent, &marked) {
                subtrees += 1;
                if d > 2 {
                    bad.push(format!(
                        "seed {seed}: unmarked subtree next to {d} marked bags"
                    ));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{subtrees} unmarked subtrees, 0 exceptions"))
    } else {
        Err(format!("{} exceptions, first: {}", bad.len(), bad[0]))
    }
}

// ---- criterion 3: solver against brute force ----

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let families = [
        ("{K2}", vec![named::complete(2)]),
        ("{K3}", vec![named::complete(3)]),
        ("{K4}", vec![named::complete(4)]),
        (
            "{2K3}",
            vec![named::disjoint_copies(&named::complete(3), 2)],
        ),
    ];
    let mut checks = 0;
    let mut yes = 0;
    for (name, patterns) in families {
        let f = Family::new(patterns).map_err(|e| e.to_string())?;
        for seed in 0..500u64 {
            let mut rng = rng(seed);
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.15..0.7);
            let g = gnp(n, p, &mut rng);
            for k in 0..=3 {
                let got = planar_f_deletion(&g, &f, k)
                    .map_err(|e| format!("{name} seed {seed} k {k}: {e}"))?;
                let want = f_deletion_brute_force(&g, &f, k, &VertexSet::new())
                    .map_err(|e| e.to_string())?;
                checks += 1;
                if got.is_some() != want.is_some() {
                    return Err(format!(
                        "{name} seed {seed} k {k}: solver {got:?}, brute force {want:?}"
                    ));
                }
                if let Some(s) = got {
                    yes += 1;
                    let free = is_family_minor_free(&g.without(&s), &f.patterns)
                        .map_err(|e| e.to_string())?;
                    if s.len() > k || !free {
                        return Err(format!(
                            "{name} seed {seed} k {k}: solution {s:?} fails verification"
                        ));
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{checks} decisions agree ({yes} YES re-verified), {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

// ---- criteria 4 and 5: edge dominating set kernel ----

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for seed in 0..300u64 {
        let mut rng = rng(seed);
        let n = rng.gen_range(2..=30);
        let m = rng.gen_range(0..=20.min(n * (n - 1) / 2));
        let mut g = Graph::new(n);
        while g.m() < m {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
        for k in 0..=3 {
            checks += 1;
            let want = eds_brute_force(&g, k).map_err(|e| e.to_string())?;
            let Some(kern) =
                eds_kernelize(&g, k, 4).map_err(|e| format!("seed {seed} k {k}: {e}"))?
            else {
                if want {
                    return Err(format!("seed {seed} k {k}: rejected a YES instance"));
                }
                continue;
            };
            if kern.k > k {
                return Err(format!("seed {seed}: k grew from {k} to {}", kern.k));
            }
            let got = eds_brute_force(&kern.graph, kern.k).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!(
                    "seed {seed} k {k}: kernel answers {got}, original {want}"
                ));
            }
            let y0: VertexSet = kern
                .decomposition
                .y0
                .iter()
                .copied()
                .filter(|&v| kern.graph.contains(v))
                .collect();
            for c in clusters(&kern.graph, &y0) {
                let nb = kern.graph.neighborhood(&c);
                if c.len() > nb.len() {
                    return Err(format!(
                        "seed {seed} k {k}: cluster of {} vertices, {} neighbours",
                        c.len(),
                        nb.len()
                    ));
                }
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{checks} instances preserved, {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_5() -> Outcome {
    let mut checks = 0;
    let mut worst: f64 = 0.0;
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let mut p = GenParams::new(Kind::SeriesParallel, r.gen_range(4..=60), seed);
        p.p = r.gen_range(0.3..=1.0);
        let g = generate(&p).map_err(|e| e.to_string())?.graph;
        if is_topological_minor(&named::complete(4), &g).map_err(|e| e.to_string())? {
            return Err(format!("seed {seed}: generator produced a K4 subdivision"));
        }
        for k in 1..=5 {
            let Some(kern) = eds_kernelize(&g, k, 4).map_err(|e| e.to_string())? else {
                continue;
            };
            checks += 1;
            let bound = eds_kernel_bound(k, 4).ceil();
            let size = kern.graph.n() as f64;
            worst = worst.max(size / bound);
            if size > bound {
                return Err(format!(
                    "seed {seed} k {k}: kernel has {size} vertices, bound {bound}"
                ));
            }
        }
    }
    Ok(format!(
        "{checks} kernels within bound (largest ratio {worst:.2e})"
    ))
}

// ---- criterion 6: sparsity ----

/// All cliques, the empty one included.
fn clique_census(g: &Graph) -> u64 {
    let ids: Vec<Vertex> = g.vertices().collect();
    let adj: Vec<u32> = ids
        .iter()
        .map(|&u| {
            ids.iter()
                .enumerate()
                .filter(|(_, &v)| g.has_edge(u, v))
                .fold(0, |a, (j, _)| a | 1 << j)
        })
        .collect();
    fn count(adj: &[u32], cand: u32) -> u64 {
        let mut total = 1;
        let mut rest = cand;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += count(adj, rest & adj[i]);
        }
        total
    }
    count(
        &adj,
        if ids.is_empty() {
            0
        } else {
            (1u32 << ids.len()) - 1
        },
    )
}

fn sparse_candidate(r: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=15);
    match seed % 3 {
        0 if r == 4 => {
            let mut p = GenParams::new(Kind::SeriesParallel, n, seed);
            p.p = rng.gen_range(0.5..=1.0);
            generate(&p).unwrap().graph
        }
        0 => random_tree(n, &mut rng),
        _ => {
            let p = rng.gen_range(0.05..0.35);
            gnp(n, p, &mut rng)
        }
    }
}

fn criterion_6() -> Outcome {
    let mut verified = 0;
    for r in [3, 4] {
        let kr = named::complete(r);
        for topological in [false, true] {
            let mut found = 0;
            let mut seed = 0u64;
            while found < 100 {
                seed += 1;
                if seed > 100_000 {
                    return Err(format!("r {r}: could not find 100 excluded-minor graphs"));
                }
                let g = sparse_candidate(r, seed);
                let contains = if topological {
                    is_topological_minor(&kr, &g)
                } else {
                    is_minor(&kr, &g)
                };
                if contains.map_err(|e| e.to_string())? {
                    continue;
                }
                found += 1;
                let n = g.n();
                let (eb, cb) = if topological {
                    (topo_edge_bound(r, n), topo_clique_bound(r, n))
                } else {
                    (minor_edge_bound(r, n), minor_clique_bound(r, n))
                };
                let (eb, cb) = (
                    eb.map_err(|e| e.to_string())?,
                    cb.map_err(|e| e.to_string())?,
                );
                let cliques = clique_census(&g);
                if count_cliques(&g).map_err(|e| e.to_string())? != cliques {
                    return Err(format!(
                        "r {r} seed {seed}: clique census disagrees with the oracle"
                    ));
                }
                if g.m() as f64 > eb || cliques as f64 > cb {
                    return Err(format!(
                        "r {r} seed {seed} topological {topological}: m = {}, cliques = {cliques}, bounds {eb}, {cb}",
                        g.m()
                    ));
                }
            }
            verified += found;
        }
    }
    Ok(format!("{verified} verified graphs, 0 violations"))
}

// ---- criterion 7: marked bags and clusters ----

fn criterion_7() -> Outcome {
    let f = Family::new(vec![named::complete(3)]).map_err(|e| e.to_string())?;
    let (r, t_f) = (3, 2);
    let mut yes = 0;
    let mut worst_bags = 0.0f64;
    for seed in 0..50u64 {
        let mut rng = rng(seed);
        let k = 1 + (seed % 3) as usize;
        let n = rng.gen_range(3 * k + 4..=24);
        let (g, planted, x) = planted_fvs(n, k, &mut rng);
        let mut solver = Solver::new(&f, SolverOptions::default()).map_err(|e| e.to_string())?;
        let got = solver
            .disjoint(&DisjointInstance::with_budget(g, x, k))
            .map_err(|e| format!("seed {seed}: {e}"))?;
        let bags = solver.stats.marked_bags as f64;
        let bag_bound = marked_bag_count_bound(k, r);
        worst_bags = worst_bags.max(bags / bag_bound);
        if bags > bag_bound {
            return Err(format!(
                "seed {seed}: {bags} marked bags, bound {bag_bound:.2}"
            ));
        }
        let Some(s) = got else {
            return Err(format!(
                "seed {seed}: NO although {planted:?} is a solution"
            ));
        };
        yes += 1;
        let l = solver.stats.clusters.unwrap_or(0) as f64;
        if l > cluster_count_bound(k, r, t_f) {
            return Err(format!("seed {seed}: {l} clusters for solution {s:?}"));
        }
    }
    Ok(format!(
        "50 instances ({yes} YES), largest marked-bag ratio {worst_bags:.2} with alpha_3 = {:.3}",
        alpha_r(3)
    ))
}

// ---- criterion 8: representative soundness ----

/// Every labelled forest on `n` vertices as an edge list. Test graphs with a
/// cycle make every gluing contain a triangle minor, so they separate nothing.
fn labelled_forests(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    fn go(
        pairs: &[(usize, usize)],
        i: usize,
        dsu: &Dsu,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == pairs.len() {
            out.push(cur.clone());
            return;
        }
        go(pairs, i + 1, dsu, cur, out);
        let mut next = Dsu(dsu.0.clone());
        let (u, v) = pairs[i];
        if next.union(u, v) {
            cur.push((u, v));
            go(pairs, i + 1, &next, cur, out);
            cur.pop();
        }
    }
    go(&pairs, 0, &Dsu::new(n), &mut Vec::new(), &mut out);
    out
}

/// The triangle-minor-free gluings of `A` (boundary `0..b`, other vertices
/// after) with each test forest on `0..n`, whose first `b` vertices are the
/// boundary.
fn acceptance_vector(
    a_edges: &[(usize, usize)],
    a_n: usize,
    b: usize,
    tests: &[Vec<(usize, usize)>],
    n: usize,
) -> Vec<bool> {
    tests
        .iter()
        .map(|t| {
            let mut edges: BTreeSet<(usize, usize)> = a_edges.iter().copied().collect();
            for &(u, v) in t {
                let map = |x: usize| if x < b { x } else { a_n + x - b };
                let (p, q) = (map(u), map(v));
                edges.insert((p.min(q), p.max(q)));
            }
            let mut dsu = Dsu::new(a_n + n - b);
            edges.into_iter().all(|(u, v)| dsu.union(u, v))
        })
        .collect()
}

fn random_cluster(seed: u64) -> (Graph, VertexSet) {
    let mut rng = rng(seed);
    let c = rng.gen_range(1..=6);
    let b = rng.gen_range(1..=4);
    let mut g = Graph::new(c + b);
    for u in 0..c + b {
        for v in u + 1..c + b {
            if rng.gen_bool(0.35) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    for v in c..c + b {
        if !(0..c).any(|u| g.has_edge(u, v)) {
            g.add_edge(rng.gen_range(0..c), v).unwrap();
        }
    }
    (g, (0..c).collect())
}

fn criterion_8() -> Outcome {
    let f = Family::new(vec![named::complete(3)]).map_err(|e| e.to_string())?;
    let t = 4;
    let mut forests: BTreeMap<usize, Vec<Vec<(usize, usize)>>> = BTreeMap::new();
    let mut pairs = 0usize;
    let mut tests_run = 0usize;
    for seed in 0..50u64 {
        let (g, cluster) = random_cluster(seed);
        let boundary: Vec<Vertex> = g.neighborhood(&cluster).into_iter().collect();
        let b = boundary.len();
        let test_cap = b + 2;
        let table = compute_representatives(&g, &cluster, &f, t, test_cap)
            .map_err(|e| format!("seed {seed}: {e}"))?;

        let n = test_cap + 1;
        let tests = forests.entry(n).or_insert_with(|| labelled_forests(n));
        let mut covered = 0;
        for class in &table.classes {
            let mut vectors = Vec::new();
            for q in &class.members {
                let keep: Vec<Vertex> = boundary
                    .iter()
                    .copied()
                    .chain(cluster.iter().copied().filter(|v| !q.contains(v)))
                    .collect();
                let index: BTreeMap<Vertex, usize> =
                    keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let a_edges: Vec<(usize, usize)> = g
                    .edges()
                    .filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))
                    .map(|(p, q)| (p.min(q), p.max(q)))
                    .collect();
                vectors.push(acceptance_vector(&a_edges, keep.len(), b, tests, n));
                tests_run += tests.len();
            }
            covered += class.members.len();
            if class
                .members
                .iter()
                .any(|m| m.len() < class.representative.len())
            {
                return Err(format!(
                    "seed {seed}: representative is not of minimum size"
                ));
            }
            pairs += class.members.len() * (class.members.len() - 1) / 2;
            if let Some(i) = vectors.iter().position(|v| *v != vectors[0]) {
                return Err(format!(
                    "seed {seed}: {:?} and {:?} share a class but a test graph separates them",
                    class.members[0], class.members[i]
                ));
            }
        }
        if covered != 1 << cluster.len() {
            return Err(format!("seed {seed}: classes cover {covered} subsets"));
        }
    }
    Ok(format!(
        "50 clusters, {pairs} same-class pairs, {tests_run} gluings, 0 disagreements"
    ))
}

// ---- criterion 9: minor machinery ----

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One graph per isomorphism class on exactly `n` vertices.
fn unlabelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let ps = perms(n);
    let maps: Vec<Vec<usize>> = ps
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| index[&(p[u].min(p[v]), p[u].max(p[v]))])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = maps.iter().all(|m| {
            let image = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u32, |a, i| a | 1 << m[i]);
            image >= mask
        });
        if canonical {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            out.push(Graph::from_edges(n, &edges).unwrap());
        }
    }
    out
}

fn glue_round_trip(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=12);
    let p = rng.gen_range(0.1..0.6);
    let g = gnp(n, p, &mut rng);
    let w: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.5)).collect();
    let bd = g.boundary(&w);
    let inner = unglue(&g, &w, &bd).map_err(|e| e.to_string())?;
    let outer = unglue_complement(&g, &w).map_err(|e| e.to_string())?;
    for (first, second) in [(&inner, &outer), (&outer, &inner)] {
        let glued = glue(first, second).map_err(|e| e.to_string())?;
        // glue keeps the ids of `first` and appends the rest of `second` in order
        let mut image: BTreeMap<Vertex, Vertex> = first.graph.vertices().map(|v| (v, v)).collect();
        let fresh = first.graph.vertices().max().map_or(0, |v| v + 1)..;
        for (next, v) in fresh.zip(second.graph.vertices().filter(|v| !bd.contains(v))) {
            image.insert(v, next);
        }
        let expect: BTreeSet<(Vertex, Vertex)> = g
            .edges()
            .map(|(u, v)| (image[&u].min(image[&v]), image[&u].max(image[&v])))
            .collect();
        let got: BTreeSet<(Vertex, Vertex)> = glued.edges().collect();
        if glued.n() != g.n() || got != expect {
            return Err(format!(
                "seed {seed}: gluing the halves of W = {w:?} is not isomorphic to G"
            ));
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let hs: Vec<Graph> = (1..=4).flat_map(unlabelled_graphs).collect();
    let gs: Vec<Graph> = (1..=6).flat_map(unlabelled_graphs).collect();
    if (hs.len(), gs.len()) != (18, 208) {
        return Err(format!(
            "expected 18 and 208 graph classes, got {} and {}",
            hs.len(),
            gs.len()
        ));
    }
    let mut topological = 0;
    for h in &hs {
        for g in &gs {
            if is_topological_minor(h, g).map_err(|e| e.to_string())? {
                topological += 1;
                if !is_minor(h, g).map_err(|e| e.to_string())? {
                    return Err(format!("topological minor but not a minor: {h:?} in {g:?}"));
                }
            }
        }
    }
    for seed in 0..100 {
        glue_round_trip(seed)?;
    }
    Ok(format!(
        "{} pairs, {topological} topological minors all minors; 100 glue round trips",
        hs.len() * gs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("decomposition validity", criterion_1),
        ("LCA closure", criterion_2),
        ("solver-oracle equivalence", criterion_3),
        ("EDS kernel safety", criterion_4),
        ("EDS kernel size", criterion_5),
        ("sparsity bounds", criterion_6),
        ("marked-bag and cluster-count bounds", criterion_7),
        ("representative soundness", criterion_8),
        ("minor machinery cross-check", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
