//! Additive fringe functionals `F(T; f) = Σ_v f(T(v))` with `{0, 1}`-valued
//! tolls.
//!
//! Both non-trivial tolls depend only on the fringe subtree `T(v)`, so they
//! are read off the bottom-up DP flags instead of materialising every
//! subtree. The domination toll treats the global root specially, which is
//! why evaluation carries an explicit `is_global_root` flag.

use serde::Serialize;

use crate::params::{domination, independence};
use crate::tree::{NodeId, RootedTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Toll {
    /// Root belongs to the layered independent set of `T`.
    Independence,
    /// For a non-root vertex: some root-independent dominating set of `T(v)`
    /// contains `v`. For the global root: the subtree condition deciding
    /// whether the root joins the constructed dominating set.
    Domination,
    /// `f = 1` everywhere, so `F(T) = |T|`.
    Unit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FringeSum {
    pub value: usize,
    pub per_node: Vec<bool>,
}

impl FringeSum {
    fn from_flags(per_node: Vec<bool>) -> Self {
        let value = per_node.iter().filter(|&&f| f).count();
        FringeSum { value, per_node }
    }
}

pub fn fringe_sum(tree: &RootedTree, toll: Toll) -> FringeSum {
    match toll {
        Toll::Independence => FringeSum::from_flags(independence(tree).in_set),
        Toll::Domination => {
            let dom = domination(tree);
            let mut per_node = dom.ri_contains_root.clone();
            per_node[0] = root_joins(tree, &dom.rd, &dom.ri_contains_root);
            FringeSum::from_flags(per_node)
        }
        Toll::Unit => FringeSum::from_flags(vec![true; tree.n()]),
    }
}

/// The root joins when some child subtree has a root-dependent dominating
/// set, or when every child subtree only has root-independent dominating
/// sets and none of them contains the child. A lone root satisfies the
/// second clause vacuously.
fn root_joins(tree: &RootedTree, rd: &[bool], ri_contains_root: &[bool]) -> bool {
    let kids = tree.children(tree.root());
    kids.iter().any(|c| rd[c.index()])
        || kids
            .iter()
            .all(|c| !rd[c.index()] && !ri_contains_root[c.index()])
}

/// Evaluates `f` on the root of `tree`, treating it as a fringe subtree of a
/// larger tree unless `is_global_root` is set.
pub fn toll_at_root(tree: &RootedTree, toll: Toll, is_global_root: bool) -> bool {
    match toll {
        Toll::Independence => independence(tree).in_set[0],
        Toll::Domination => {
            let dom = domination(tree);
            if is_global_root {
                root_joins(tree, &dom.rd, &dom.ri_contains_root)
            } else {
                dom.ri_contains_root[0]
            }
        }
        Toll::Unit => true,
    }
}

/// Re-evaluates the toll of every non-root vertex on its extracted fringe
/// subtree and compares with the in-place value. Quadratic; meant for tests
/// and verification runs.
pub fn toll_locality_check(tree: &RootedTree, toll: Toll) -> bool {
    let in_place = fringe_sum(tree, toll);
    tree.nodes().skip(1).all(|v: NodeId| {
        toll_at_root(&tree.fringe_subtree(v), toll, false) == in_place.per_node[v.index()]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::shapes::*;

    #[test]
    fn independence_toll_on_star() {
        let s = fringe_sum(&star(3), Toll::Independence);
        assert_eq!(s.per_node, vec![false, true, true, true]);
        assert_eq!(s.value, 3);
    }

    #[test]
    fn domination_toll_examples() {
        assert_eq!(fringe_sum(&path(1), Toll::Domination).value, 1);
        assert_eq!(fringe_sum(&path(4), Toll::Domination).value, 2);
        assert_eq!(fringe_sum(&star(4), Toll::Domination).value, 1);
    }

    #[test]
    fn unit_toll_counts_nodes() {
        assert_eq!(fringe_sum(&caterpillar(4, 2), Toll::Unit).value, 12);
    }

    #[test]
    fn locality_on_fixed_shapes() {
        for t in adversarial(12) {
            for toll in [Toll::Independence, Toll::Domination, Toll::Unit] {
                assert!(toll_locality_check(&t, toll));
            }
        }
    }

    #[test]
    fn sums_match_parameters_on_fixed_shapes() {
        for t in adversarial(20) {
            assert_eq!(
                fringe_sum(&t, Toll::Independence).value,
                independence(&t).value
            );
            assert_eq!(fringe_sum(&t, Toll::Domination).value, domination(&t).value);
        }
    }
}
