use serde::Serialize;

use crate::tree::RootedTree;

/// Three-state minimum dominating set DP over every fringe subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: usize,
    /// Minimum size of a dominating set of `T(v)` containing `v`.
    pub d0: Vec<u32>,
    /// Minimum size of a dominating set of `T(v)` not containing `v`
    /// (`infinity()` for leaves).
    pub d1: Vec<u32>,
    /// Minimum size of a dominating set of the forest `T(v) \ v`.
    pub d2: Vec<u32>,
    /// `T(v)` has a root-dependent dominating set: `D(T(v) \ v) = D(T(v)) - 1`.
    pub rd: Vec<bool>,
    /// No root-dependent set exists and some minimum dominating set of
    /// `T(v)` contains `v`.
    pub ri_contains_root: Vec<bool>,
}

impl DominationResult {
    /// Marker used for the unattainable state of a leaf.
    pub fn infinity(&self) -> u32 {
        self.d0.len() as u32 + 1
    }

    /// `D(T(v))`.
    pub fn subtree_value(&self, v: usize) -> u32 {
        self.d0[v].min(self.d1[v])
    }
}

pub fn domination(tree: &RootedTree) -> DominationResult {
    let n = tree.n();
    let inf = n as u32 + 1;
    let mut d0 = vec![0u32; n];
    let mut d1 = vec![0u32; n];
    let mut d2 = vec![0u32; n];
    let mut rd = vec![false; n];
    let mut ri = vec![false; n];

    for v in tree.nodes().rev() {
        let kids = tree.children(v);
        let i = v.index();
        if kids.is_empty() {
            d0[i] = 1;
            d1[i] = inf;
            d2[i] = 0;
        } else {
            let mut with_root = 1;
            let mut forest = 0;
            let mut child_in_set = false;
            let mut cheapest_switch = u32::MAX;
            for c in kids {
                let c = c.index();
                let dominated = d0[c].min(d1[c]);
                with_root += dominated.min(d2[c]);
                forest += dominated;
                if d0[c] <= d1[c] {
                    child_in_set = true;
                } else {
                    cheapest_switch = cheapest_switch.min(d0[c] - dominated);
                }
            }
            d0[i] = with_root;
            d2[i] = forest;
            d1[i] = if child_in_set {
                forest
            } else {
                forest + cheapest_switch
            };
        }
        let best = d0[i].min(d1[i]);
        rd[i] = d2[i] + 1 == best;
        ri[i] = !rd[i] && d0[i] == best;
    }

    DominationResult {
        value: d0[0].min(d1[0]) as usize,
        d0,
        d1,
        d2,
        rd,
        ri_contains_root: ri,
    }
}
