use serde::Serialize;

use crate::tree::{NodeId, RootedTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub value: usize,
    /// Membership in the layered independent set.
    pub in_set: Vec<bool>,
}

impl IndependenceResult {
    fn from_flags(in_set: Vec<bool>) -> Self {
        let value = in_set.iter().filter(|&&f| f).count();
        IndependenceResult { value, in_set }
    }
}

/// A node is in the set iff none of its children is; leaves always are.
/// The resulting set is the layered independent set and is maximum.
pub fn independence(tree: &RootedTree) -> IndependenceResult {
    let parent = tree.parent_array();
    let mut in_set = vec![true; tree.n()];
    for v in (1..tree.n()).rev() {
        if in_set[v] {
            in_set[parent[v] as usize] = false;
        }
    }
    IndependenceResult::from_flags(in_set)
}

/// Literal leaf stripping: repeatedly delete every leaf of the current
/// forest together with the leaves' parents, collecting the deleted leaves.
pub fn layered_stripping(tree: &RootedTree) -> IndependenceResult {
    let n = tree.n();
    let mut alive = vec![true; n];
    let mut alive_children: Vec<u32> = tree
        .nodes()
        .map(|v| tree.children(v).len() as u32)
        .collect();
    let mut in_set = vec![false; n];

    let mut leaves: Vec<NodeId> = tree.nodes().filter(|&v| tree.is_leaf(v)).collect();
    while !leaves.is_empty() {
        let mut parents = Vec::new();
        for &leaf in &leaves {
            in_set[leaf.index()] = true;
            alive[leaf.index()] = false;
            if let Some(p) = tree.parent(leaf) {
                parents.push(p);
            }
        }
        let mut next = Vec::new();
        for &p in &parents {
            if !alive[p.index()] {
                continue;
            }
            alive[p.index()] = false;
            if let Some(q) = tree.parent(p) {
                if alive[q.index()] {
                    alive_children[q.index()] -= 1;
                    if alive_children[q.index()] == 0 {
                        next.push(q);
                    }
                }
            }
        }
        // a node whose last child was removed in this round may itself have
        // been removed as a parent of a leaf
        next.retain(|q| alive[q.index()]);
        leaves = next;
    }
    IndependenceResult::from_flags(in_set)
}
