use serde::{Deserialize, Serialize};

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "vertex")]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceNode {
    pub bag: Vec<Vertex>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition: leaves and the root have empty bags, every
/// vertex is forgotten exactly once, joins have two children with equal bags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.to_tree_decomposition().width()
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                parent[c] = Some(i);
            }
        }
        parent
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            bags: self.nodes.iter().map(|n| n.bag.clone()).collect(),
            parent: self.parents(),
        }
    }

    /// Checks the node-kind rules; decomposition axioms are checked
    /// separately through [`to_tree_decomposition`](Self::to_tree_decomposition).
    pub fn kind_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            let child_bags: Vec<&Vec<Vertex>> =
                node.children.iter().map(|&c| &self.nodes[c].bag).collect();
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    child_bags.len() == 1
                        && !child_bags[0].contains(&v)
                        && with(child_bags[0], v) == node.bag
                }
                NodeKind::Forget(v) => {
                    child_bags.len() == 1
                        && !node.bag.contains(&v)
                        && with(&node.bag, v) == *child_bags[0]
                }
                NodeKind::Join => {
                    child_bags.len() == 2 && child_bags.iter().all(|b| **b == node.bag)
                }
            };
            if !ok {
                out.push(format!("node {i} violates {:?} rules", node.kind));
            }
        }
        if !self.nodes[self.root].bag.is_empty() {
            out.push("root bag is not empty".to_string());
        }
        out
    }
}

fn with(bag: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut b = bag.to_vec();
    b.push(v);
    b.sort_unstable();
    b
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, bag: Vec<Vertex>, kind: NodeKind, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            bag,
            kind,
            children,
        });
        self.nodes.len() - 1
    }

    /// Forgets then introduces single vertices until the bag equals `target`.
    fn morph(&mut self, mut top: usize, target: &[Vertex]) -> usize {
        let current = self.nodes[top].bag.clone();
        let mut bag = current.clone();
        for &v in current.iter().filter(|v| !target.contains(v)) {
            bag.retain(|&x| x != v);
            top = self.push(bag.clone(), NodeKind::Forget(v), vec![top]);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            bag = with(&bag, v);
            top = self.push(bag.clone(), NodeKind::Introduce(v), vec![top]);
        }
        top
    }

    fn join_all(&mut self, tops: Vec<usize>, bag: &[Vertex]) -> usize {
        let mut it = tops.into_iter();
        let mut acc = it.next().expect("at least one subtree");
        for t in it {
            acc = self.push(bag.to_vec(), NodeKind::Join, vec![acc, t]);
        }
        acc
    }
}

/// Converts a valid decomposition of `g` into a nice one of the same width.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    let report = super::validate_decomposition(g, td);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(report.violations.join("; ")));
    }
    let depths = td.depths().expect("validated");
    let children = td.children();
    let mut order: Vec<usize> = (0..td.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(depths[i]), i));

    let mut b = Builder { nodes: Vec::new() };
    let mut top = vec![usize::MAX; td.len()];
    for &x in &order {
        let mut bag = td.bags[x].clone();
        bag.sort_unstable();
        let tops: Vec<usize> = if children[x].is_empty() {
            let leaf = b.push(Vec::new(), NodeKind::Leaf, Vec::new());
            vec![b.morph(leaf, &bag)]
        } else {
            children[x].iter().map(|&c| b.morph(top[c], &bag)).collect()
        };
        top[x] = b.join_all(tops, &bag);
    }
    let roots: Vec<usize> = td
        .roots()
        .into_iter()
        .map(|r| b.morph(top[r], &[]))
        .collect();
    let root = if roots.is_empty() {
        b.push(Vec::new(), NodeKind::Leaf, Vec::new())
    } else {
        b.join_all(roots, &[])
    };
    Ok(NiceTreeDecomposition {
        nodes: b.nodes,
        root,
    })
}
