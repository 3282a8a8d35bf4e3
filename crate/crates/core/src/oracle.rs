//! Brute-force reference implementations and the verification harness that
//! compares the linear-time algorithms against them on small trees.
//!
//! Everything here is deliberately naive: subset enumeration and plain
//! backtracking, so that correctness is evident by inspection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fringe::{fringe_sum, Toll};
use crate::gen::generate;
use crate::params::{self, full_report};
use crate::rng::{mix, Seed, TreeRng};
use crate::tree::{shapes, Model, RootedTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub max_n_subsets: usize,
    pub max_n_coloring: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n_subsets: 20,
            max_n_coloring: 10,
        }
    }
}

fn check_budget(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::BudgetExceeded { n, max })
    } else {
        Ok(())
    }
}

fn neighbour_masks(tree: &RootedTree) -> Vec<u32> {
    let mut nb = vec![0u32; tree.n()];
    for v in tree.nodes().skip(1) {
        let p = tree.parent(v).expect("non-root").index();
        nb[v.index()] |= 1 << p;
        nb[p] |= 1 << v.index();
    }
    nb
}

/// Largest vertex subset containing no tree edge, over all `2^n` subsets.
pub fn brute_max_independent(tree: &RootedTree) -> Result<usize> {
    check_budget(tree.n(), OracleBudget::default().max_n_subsets)?;
    let nb = neighbour_masks(tree);
    let mut best = 0;
    for set in 0u32..(1 << tree.n()) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = (0..tree.n()).all(|v| set & (1 << v) == 0 || set & nb[v] == 0);
        if independent {
            best = size;
        }
    }
    Ok(best)
}

/// Smallest `S` such that every vertex outside `S` has at least `k`
/// neighbours in `S`; `k = 1` is ordinary domination.
pub fn brute_min_dominating(tree: &RootedTree, k: usize) -> Result<usize> {
    check_budget(tree.n(), OracleBudget::default().max_n_subsets)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let nb = neighbour_masks(tree);
    let mut best = tree.n(); // S = V always works
    for set in 0u32..(1 << tree.n()) {
        let size = set.count_ones() as usize;
        if size >= best {
            continue;
        }
        let ok =
            (0..tree.n()).all(|v| set & (1 << v) != 0 || (set & nb[v]).count_ones() as usize >= k);
        if ok {
            best = size;
        }
    }
    Ok(best)
}

/// Chromatic number of the complement graph, i.e. the minimum number of
/// cliques of the tree covering its vertices.
pub fn brute_clique_cover(tree: &RootedTree) -> Result<usize> {
    let n = tree.n();
    check_budget(n, OracleBudget::default().max_n_coloring)?;
    let nb = neighbour_masks(tree);
    // u and v clash (same colour forbidden) iff they are distinct and not
    // adjacent in the tree
    let clash = |u: usize, v: usize| u != v && nb[u] & (1 << v) == 0;
    (1..=n)
        .find(|&colours| {
            let mut colour = vec![usize::MAX; n];
            colourable(0, 0, colours, &mut colour, &clash)
        })
        .ok_or_else(|| Error::InvalidArgument("no colouring found".into()))
}

fn colourable(
    v: usize,
    used: usize,
    colours: usize,
    colour: &mut [usize],
    clash: &impl Fn(usize, usize) -> bool,
) -> bool {
    if v == colour.len() {
        return true;
    }
    // a fresh colour only needs to be tried once (colour symmetry)
    for c in 0..colours.min(used + 1) {
        if (0..v).all(|u| colour[u] != c || !clash(u, v)) {
            colour[v] = c;
            if colourable(v + 1, used.max(c + 1), colours, colour, clash) {
                return true;
            }
        }
    }
    colour[v] = usize::MAX;
    false
}

/// The fast algorithms under test. Swappable so the harness itself can be
/// checked against deliberately broken implementations.
#[derive(Clone, Copy)]
pub struct Algorithms {
    pub independence: fn(&RootedTree) -> usize,
    pub domination: fn(&RootedTree) -> usize,
    pub k_domination: fn(&RootedTree, usize) -> Result<usize>,
}

impl Default for Algorithms {
    fn default() -> Self {
        Algorithms {
            independence: |t| params::independence(t).value,
            domination: |t| params::domination(t).value,
            k_domination: params::k_domination,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tree_json: String,
    pub fast: usize,
    pub reference: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub parameter: String,
    pub trees: usize,
    pub mismatches: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CheckRow::passed)
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<14} {:>7} {:>10}  status\n",
            "parameter", "trees", "mismatches"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<14} {:>7} {:>10}  {}\n",
                r.parameter,
                r.trees,
                r.mismatches,
                if r.passed() { "PASS" } else { "FAIL" }
            ));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Random trees per model.
    pub trees: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trees: 500,
            max_n: 14,
            seed: 7,
        }
    }
}

/// Random trees of both models with sizes uniform in `1..=max_n`, followed by
/// paths, stars and caterpillars up to `max_n` nodes.
pub fn verification_corpus(config: &VerifyConfig) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    for (tag, model) in [(0u64, Model::Bst), (1, Model::Rrt)] {
        let master = mix(config.seed, tag);
        let mut sizes = TreeRng::from_seed(mix(master, u64::MAX));
        for i in 0..config.trees {
            let n = 1 + sizes.below(config.max_n as u64) as usize;
            out.push(generate(model, n, Seed::new(master, i as u64))?.tree);
        }
    }
    out.extend(shapes::adversarial(config.max_n));
    Ok(out)
}

struct RowBuilder {
    row: CheckRow,
}

impl RowBuilder {
    fn new(parameter: impl Into<String>) -> Self {
        RowBuilder {
            row: CheckRow {
                parameter: parameter.into(),
                trees: 0,
                mismatches: 0,
                counterexample: None,
            },
        }
    }

    fn record(&mut self, tree: &RootedTree, fast: usize, reference: usize) {
        self.row.trees += 1;
        if fast != reference {
            self.row.mismatches += 1;
            self.row
                .counterexample
                .get_or_insert_with(|| Counterexample {
                    tree_json: tree.to_json(),
                    fast,
                    reference,
                });
        }
    }
}

/// Runs every oracle comparison on the verification corpus.
pub fn verify(config: &VerifyConfig, algorithms: Algorithms) -> Result<VerifyReport> {
    check_budget(config.max_n, OracleBudget::default().max_n_subsets)?;
    let budget = OracleBudget::default();
    let corpus = verification_corpus(config)?;

    let mut ind = RowBuilder::new("I");
    let mut layered = RowBuilder::new("I-layered");
    let mut dom = RowBuilder::new("D");
    let mut dk: Vec<RowBuilder> = (1..=3).map(|k| RowBuilder::new(format!("D{k}"))).collect();
    let mut cc = RowBuilder::new("CC");
    let mut f_ind = RowBuilder::new("F-independence");
    let mut f_dom = RowBuilder::new("F-domination");
    let mut affine = RowBuilder::new("affine");

    for tree in &corpus {
        let i_ref = brute_max_independent(tree)?;
        let d_ref = brute_min_dominating(tree, 1)?;
        ind.record(tree, (algorithms.independence)(tree), i_ref);
        layered.record(tree, params::layered_stripping(tree).value, i_ref);
        dom.record(tree, (algorithms.domination)(tree), d_ref);
        for (k, row) in (1..=3).zip(dk.iter_mut()) {
            let reference = if k == 1 {
                d_ref
            } else {
                brute_min_dominating(tree, k)?
            };
            row.record(tree, (algorithms.k_domination)(tree, k)?, reference);
        }
        if tree.n() <= budget.max_n_coloring {
            let report = full_report(tree, &[])?;
            cc.record(tree, report.clique_cover, brute_clique_cover(tree)?);
        }
        f_ind.record(tree, fringe_sum(tree, Toll::Independence).value, i_ref);
        f_dom.record(tree, fringe_sum(tree, Toll::Domination).value, d_ref);
        let ok = full_report(tree, &[])?.check_identities().is_ok();
        affine.record(tree, ok as usize, 1);
    }

    let mut rows = vec![ind.row, layered.row, dom.row];
    rows.extend(dk.into_iter().map(|b| b.row));
    rows.extend([cc.row, f_ind.row, f_dom.row, affine.row]);
    Ok(VerifyReport { rows })
}

/// Implementations with known defects, used to exercise the failure path of
/// the harness.
pub mod faulty {
    use super::*;

    /// Counts leaves twice whenever the tree has more than three nodes.
    pub fn algorithms() -> Algorithms {
        Algorithms {
            independence: |t| {
                let v = params::independence(t).value;
                if t.n() > 3 {
                    v + 1
                } else {
                    v
                }
            },
            ..Algorithms::default()
        }
    }
}
