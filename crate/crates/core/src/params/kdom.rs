use crate::error::{Error, Result};
use crate::tree::{Model, RootedTree};

const INF: u32 = u32::MAX / 4;

/// Minimum size of a set `S` such that every vertex outside `S` has at
/// least `k` neighbours in `S`.
///
/// Per node the DP tracks whether the node is in `S` and how many of its
/// children are (saturating at `k`); only three numbers per child survive to
/// the parent: the best cost with the child in `S`, and the best cost with
/// the child outside `S` given that the parent is or is not in `S`.
pub fn k_domination(tree: &RootedTree, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if tree.model() == Model::Bst && k > 3 {
        return Err(Error::KTooLargeForBst { k });
    }
    let n = tree.n();
    let mut cost_in = vec![INF; n];
    let mut cost_out_parent_in = vec![INF; n];
    let mut cost_out_parent_out = vec![INF; n];

    // (k + 1) buckets of "children in S" for the node-in-S and node-out cases
    let mut with_v = vec![INF; k + 1];
    let mut without_v = vec![INF; k + 1];
    let mut scratch = vec![INF; k + 1];

    for v in tree.nodes().rev() {
        with_v.fill(INF);
        without_v.fill(INF);
        with_v[0] = 1;
        without_v[0] = 0;
        for c in tree.children(v) {
            let c = c.index();
            absorb_child(
                &mut with_v,
                &mut scratch,
                cost_in[c],
                cost_out_parent_in[c],
                k,
            );
            absorb_child(
                &mut without_v,
                &mut scratch,
                cost_in[c],
                cost_out_parent_out[c],
                k,
            );
        }
        let i = v.index();
        cost_in[i] = with_v.iter().copied().min().unwrap_or(INF);
        cost_out_parent_in[i] = without_v[k - 1..].iter().copied().min().unwrap_or(INF);
        cost_out_parent_out[i] = without_v[k];
    }
    let best = cost_in[0].min(cost_out_parent_out[0]);
    debug_assert!(best < INF, "S = V is always feasible");
    Ok(best as usize)
}

fn absorb_child(table: &mut [u32], scratch: &mut [u32], child_in: u32, child_out: u32, k: usize) {
    scratch.fill(INF);
    for (j, &cur) in table.iter().enumerate() {
        if cur >= INF {
            continue;
        }
        let up = (j + 1).min(k);
        scratch[up] = scratch[up].min((cur + child_in).min(INF));
        scratch[j] = scratch[j].min((cur + child_out).min(INF));
    }
    table.copy_from_slice(scratch);
}
