use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{domination, independence, k_domination};
use crate::error::Result;
use crate::tree::RootedTree;

/// Every implemented parameter of a single tree.
///
/// Matching, vertex cover, edge cover and clique cover numbers, as well as
/// the multiplicity of eigenvalue 1 of the normalized Laplacian, are affine
/// in the independence number on trees and are derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub n: usize,
    #[serde(rename = "I")]
    pub independence: usize,
    #[serde(rename = "D")]
    pub domination: usize,
    #[serde(rename = "Dk")]
    pub k_domination: BTreeMap<usize, usize>,
    #[serde(rename = "M")]
    pub matching: usize,
    #[serde(rename = "VC")]
    pub vertex_cover: usize,
    /// Undefined for a single vertex.
    #[serde(rename = "EC")]
    pub edge_cover: Option<usize>,
    #[serde(rename = "CC")]
    pub clique_cover: usize,
    pub lap1_mult: usize,
}

pub fn full_report(tree: &RootedTree, k_list: &[usize]) -> Result<ParameterReport> {
    let n = tree.n();
    let i = independence(tree).value;
    let d = domination(tree).value;
    let mut dk = BTreeMap::new();
    for &k in k_list {
        dk.insert(k, k_domination(tree, k)?);
    }
    let m = n - i;
    Ok(ParameterReport {
        n,
        independence: i,
        domination: d,
        k_domination: dk,
        matching: m,
        vertex_cover: m,
        edge_cover: (n >= 2).then_some(i),
        clique_cover: i,
        lap1_mult: 2 * i - n,
    })
}

impl ParameterReport {
    /// Checks the identities that tie the derived parameters together.
    pub fn check_identities(&self) -> std::result::Result<(), String> {
        let i = self.independence;
        let fail = |what: &str| Err(format!("{what} fails for {self:?}"));
        if i + self.matching != self.n {
            return fail("I + M = n");
        }
        if self.vertex_cover != self.matching {
            return fail("VC = M");
        }
        match (self.n, self.edge_cover) {
            (1, None) => {}
            (n, Some(ec)) if n >= 2 && ec == i => {}
            _ => return fail("EC = I"),
        }
        if self.clique_cover != i {
            return fail("CC = I");
        }
        if 2 * i < self.n || self.lap1_mult != 2 * i - self.n {
            return fail("lap1_mult = 2I - n");
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::shapes::*;

    #[test]
    fn path_of_four() {
        let r = full_report(&path(4), &[]).unwrap();
        assert_eq!(
            (
                r.independence,
                r.matching,
                r.vertex_cover,
                r.edge_cover,
                r.clique_cover,
                r.domination,
                r.lap1_mult
            ),
            (2, 2, 2, Some(2), 2, 2, 0)
        );
        r.check_identities().unwrap();
    }

    #[test]
    fn single_node() {
        let r = full_report(&path(1), &[2]).unwrap();
        assert_eq!(
            (
                r.independence,
                r.matching,
                r.vertex_cover,
                r.edge_cover,
                r.clique_cover,
                r.domination,
                r.lap1_mult
            ),
            (1, 0, 0, None, 1, 1, 1)
        );
        assert!(r.to_json().contains(r#""EC":null"#));
        r.check_identities().unwrap();
    }

    #[test]
    fn star_json_shape() {
        let r = full_report(&star(4), &[2]).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"n":5,"I":4,"D":1,"Dk":{"2":4},"M":1,"VC":1,"EC":4,"CC":4,"lap1_mult":3}"#
        );
    }

    #[test]
    fn identity_check_catches_corruption() {
        let mut r = full_report(&star(4), &[]).unwrap();
        r.clique_cover += 1;
        assert!(r.check_identities().is_err());
    }
}
