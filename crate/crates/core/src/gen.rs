//! Generators for random recursive trees and random binary search trees.

use crate::error::{Error, Result};
use crate::rng::{Seed, TreeRng};
use crate::tree::{Model, NodeId, RootedTree, Side, MAX_NODES, NO_PARENT};

/// One realisation of a random tree plus the seed that produced it.
#[derive(Clone, Debug)]
pub struct TreeSample {
    pub tree: RootedTree,
    pub model: Model,
    pub n: usize,
    pub master_seed: u64,
    pub replica_index: u64,
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "tree size must be at least 1".into(),
        ));
    }
    if n > MAX_NODES {
        return Err(Error::InvalidArgument(format!(
            "tree size {n} is too large"
        )));
    }
    Ok(())
}

/// Dispatches to the generator for `model`.
pub fn generate(model: Model, n: usize, seed: Seed) -> Result<TreeSample> {
    match model {
        Model::Bst => gen_bst(n, seed),
        Model::Rrt => gen_recursive_tree(n, seed),
        Model::Generic => Err(Error::InvalidArgument(
            "cannot generate a generic tree".into(),
        )),
    }
}

/// Random recursive tree: node `i` attaches to a uniform node in `0..i`.
pub fn gen_recursive_tree(n: usize, seed: Seed) -> Result<TreeSample> {
    check_size(n)?;
    let mut rng = seed.rng();
    let tree = RootedTree::from_parents(Model::Rrt, recursive_parents(n, &mut rng))?;
    Ok(TreeSample {
        tree,
        model: Model::Rrt,
        n,
        master_seed: seed.master,
        replica_index: seed.replica,
    })
}

fn recursive_parents(n: usize, rng: &mut TreeRng) -> Vec<u32> {
    let mut parent = Vec::with_capacity(n);
    parent.push(NO_PARENT);
    for i in 1..n {
        parent.push(rng.below(i as u64) as u32);
    }
    parent
}

/// Random binary search tree: the search tree obtained by inserting a
/// uniformly shuffled `1..=n` one key at a time. Node `i` is the `i`-th
/// inserted key.
pub fn gen_bst(n: usize, seed: Seed) -> Result<TreeSample> {
    check_size(n)?;
    let mut rng = seed.rng();
    let keys = random_permutation(n, &mut rng);
    let (parent, sides) = insert_all(&keys);
    let tree = RootedTree::from_bst_sides(parent, sides)?;
    Ok(TreeSample {
        tree,
        model: Model::Bst,
        n,
        master_seed: seed.master,
        replica_index: seed.replica,
    })
}

/// Fisher-Yates shuffle of `1..=n`.
pub fn random_permutation(n: usize, rng: &mut TreeRng) -> Vec<u32> {
    let mut keys: Vec<u32> = (1..=n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        keys.swap(i, j);
    }
    keys
}

/// Sequential binary-search-tree insertion of `keys` (distinct).
pub fn insert_all(keys: &[u32]) -> (Vec<u32>, Vec<Side>) {
    let n = keys.len();
    let mut left = vec![NO_PARENT; n];
    let mut right = vec![NO_PARENT; n];
    let mut parent = Vec::with_capacity(n);
    let mut sides = Vec::with_capacity(n);
    if n == 0 {
        return (parent, sides);
    }
    parent.push(NO_PARENT);
    sides.push(Side::Left);
    for (i, &key) in keys.iter().enumerate().skip(1) {
        let mut cur = 0usize;
        loop {
            let (slot, side) = if key < keys[cur] {
                (&mut left[cur], Side::Left)
            } else {
                (&mut right[cur], Side::Right)
            };
            if *slot == NO_PARENT {
                *slot = i as u32;
                parent.push(cur as u32);
                sides.push(side);
                break;
            }
            cur = *slot as usize;
        }
    }
    (parent, sides)
}

/// Size of the root's left subtree (0 when absent).
pub fn left_subtree_size(sample: &TreeSample) -> Result<usize> {
    if sample.model != Model::Bst || !sample.tree.has_sides() {
        return Err(Error::WrongModel {
            expected: "binary search",
            actual: sample.model.as_str(),
        });
    }
    let tree = &sample.tree;
    Ok(match tree.child_on(tree.root(), Side::Left) {
        Some(c) => tree.fringe_sizes().size(c),
        None => 0,
    })
}

/// Size of the component containing the second node after cutting the edge
/// between the first two nodes of a recursive tree.
pub fn cut_size_at_vertex2(sample: &TreeSample) -> Result<usize> {
    if sample.model != Model::Rrt {
        return Err(Error::WrongModel {
            expected: "recursive",
            actual: sample.model.as_str(),
        });
    }
    if sample.n < 2 {
        return Err(Error::InvalidArgument(
            "the cut needs at least two nodes".into(),
        ));
    }
    // node 1 always hangs off the root, so the cut-off part is T(1)
    Ok(sample.tree.fringe_sizes().size(NodeId::new(1)))
}
