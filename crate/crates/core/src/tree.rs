//! Immutable rooted trees stored in generation order.
//!
//! Node `0` is the root and every other node's parent has a strictly smaller
//! index, so a reverse index scan visits children before parents. Children
//! are kept in a compressed (offsets + flat array) layout.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense node index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[repr(transparent)]
pub struct NodeId(u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        debug_assert!(index < NO_PARENT as usize);
        NodeId(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for NodeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Sentinel stored in the parent slot of the root.
pub const NO_PARENT: u32 = u32::MAX;

/// Largest node count representable with 32-bit node ids.
pub const MAX_NODES: usize = (NO_PARENT - 1) as usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Bst,
    Rrt,
    Generic,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Bst => "bst",
            Model::Rrt => "rrt",
            Model::Generic => "generic",
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bst" => Ok(Model::Bst),
            "rrt" => Ok(Model::Rrt),
            "generic" => Ok(Model::Generic),
            other => Err(Error::InvalidArgument(format!("unknown model `{other}`"))),
        }
    }
}

/// Which slot of its parent a binary-search-tree node occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    model: Model,
    parent: Vec<u32>,
    child_start: Vec<u32>,
    children: Vec<NodeId>,
    /// Left/right slot of each non-root node; only present for generated
    /// binary search trees.
    sides: Option<Vec<Side>>,
}

impl RootedTree {
    /// Builds a tree from a parent array. `parent[0]` is ignored (the root
    /// has no parent); every other entry must satisfy `parent[i] < i`.
    pub fn from_parents(model: Model, mut parent: Vec<u32>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one node".into()));
        }
        if n > MAX_NODES {
            return Err(Error::InvalidTree(format!(
                "{n} nodes exceed the 32-bit node id range"
            )));
        }
        parent[0] = NO_PARENT;
        for (i, &p) in parent.iter().enumerate().skip(1) {
            if p as usize >= i {
                return Err(Error::InvalidTree(format!(
                    "parent[{i}] = {p} violates generation order (must be < {i})"
                )));
            }
        }

        let mut degree = vec![0u32; n + 1];
        for &p in &parent[1..] {
            degree[p as usize + 1] += 1;
        }
        if model == Model::Bst {
            if let Some(v) = degree[1..].iter().position(|&d| d > 2) {
                return Err(Error::InvalidTree(format!(
                    "node {v} has {} children in a binary search tree",
                    degree[v + 1]
                )));
            }
        }
        for i in 1..=n {
            degree[i] += degree[i - 1];
        }
        let child_start = degree;
        let mut fill = child_start.clone();
        let mut children = vec![NodeId::ROOT; n - 1];
        for (c, &p) in parent.iter().enumerate().skip(1) {
            let slot = &mut fill[p as usize];
            children[*slot as usize] = NodeId::new(c);
            *slot += 1;
        }

        Ok(RootedTree {
            model,
            parent,
            child_start,
            children,
            sides: None,
        })
    }

    /// Builds a binary search tree that remembers which slot every child
    /// occupies. `sides[0]` is ignored.
    pub fn from_bst_sides(parent: Vec<u32>, sides: Vec<Side>) -> Result<Self> {
        if sides.len() != parent.len() {
            return Err(Error::InvalidTree(format!(
                "{} side entries for {} nodes",
                sides.len(),
                parent.len()
            )));
        }
        let mut tree = Self::from_parents(Model::Bst, parent)?;
        for v in tree.nodes() {
            let kids = tree.children(v);
            if kids.len() == 2 && sides[kids[0].index()] == sides[kids[1].index()] {
                return Err(Error::InvalidTree(format!(
                    "both children of node {v} occupy the same slot"
                )));
            }
        }
        tree.sides = Some(sides);
        Ok(tree)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn model(&self) -> Model {
        self.model
    }

    #[inline]
    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    #[inline]
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        match self.parent[v.index()] {
            NO_PARENT => None,
            p => Some(NodeId(p)),
        }
    }

    /// Raw parent array; entry 0 holds [`NO_PARENT`].
    #[inline]
    pub fn parent_array(&self) -> &[u32] {
        &self.parent
    }

    /// Children of `v` in insertion order.
    #[inline]
    pub fn children(&self, v: NodeId) -> &[NodeId] {
        let i = v.index();
        &self.children[self.child_start[i] as usize..self.child_start[i + 1] as usize]
    }

    #[inline]
    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.child_start[v.index()] == self.child_start[v.index() + 1]
    }

    /// All nodes in generation order.
    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator {
        (0..self.n()).map(NodeId::new)
    }

    pub fn has_sides(&self) -> bool {
        self.sides.is_some()
    }

    pub fn side(&self, v: NodeId) -> Option<Side> {
        if v == NodeId::ROOT {
            return None;
        }
        self.sides.as_ref().map(|s| s[v.index()])
    }

    pub fn child_on(&self, v: NodeId, side: Side) -> Option<NodeId> {
        let sides = self.sides.as_ref()?;
        self.children(v)
            .iter()
            .copied()
            .find(|c| sides[c.index()] == side)
    }

    /// Iterative postorder: every node follows all of its descendants and
    /// siblings appear in stored order.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.n());
        // (node, index of next child to descend into)
        let mut stack: Vec<(NodeId, usize)> = vec![(NodeId::ROOT, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            let kids = self.children(v);
            if next < kids.len() {
                top.1 += 1;
                stack.push((kids[next], 0));
            } else {
                out.push(v);
                stack.pop();
            }
        }
        out
    }

    /// Fringe subtree sizes, one reverse generation-order pass.
    pub fn fringe_sizes(&self) -> FringeSizeTable {
        let mut size = vec![1u32; self.n()];
        for v in (1..self.n()).rev() {
            let p = self.parent[v] as usize;
            size[p] += size[v];
        }
        FringeSizeTable { subtree_size: size }
    }

    /// Extracts the fringe subtree `T(v)` as a standalone tree rooted at `v`.
    /// Node order (and BST slots) are preserved.
    pub fn fringe_subtree(&self, v: NodeId) -> RootedTree {
        let mut members = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            members.push(u);
            stack.extend_from_slice(self.children(u));
        }
        members.sort_unstable();
        let mut new_index = std::collections::HashMap::with_capacity(members.len());
        for (i, &u) in members.iter().enumerate() {
            new_index.insert(u, i as u32);
        }
        let parent: Vec<u32> = members
            .iter()
            .map(|&u| match self.parent(u) {
                Some(p) if u != v => new_index[&p],
                _ => NO_PARENT,
            })
            .collect();
        match &self.sides {
            Some(sides) => {
                let sub_sides = members.iter().map(|u| sides[u.index()]).collect();
                Self::from_bst_sides(parent, sub_sides).expect("fringe subtree of a valid tree")
            }
            None => Self::from_parents(self.model, parent).expect("fringe subtree of a valid tree"),
        }
    }

    /// Approximate heap footprint in bytes.
    pub fn heap_bytes(&self) -> usize {
        self.parent.capacity() * 4
            + self.child_start.capacity() * 4
            + self.children.capacity() * 4
            + self
                .sides
                .as_ref()
                .map_or(0, |s| s.capacity() * std::mem::size_of::<Side>())
    }

    pub fn to_json(&self) -> String {
        let file = TreeFile {
            model: self.model,
            n: self.n(),
            parent: self
                .parent
                .iter()
                .map(|&p| if p == NO_PARENT { -1 } else { p as i64 })
                .collect(),
        };
        serde_json::to_string(&file).expect("tree serialization cannot fail")
    }

    /// Parses the tree JSON format `{"model":..,"n":..,"parent":[-1,..]}`.
    ///
    /// Binary search trees read this way carry no left/right slot information.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TreeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.parent.len() != file.n {
            return Err(Error::Parse(format!(
                "field `n` is {} but `parent` has {} entries",
                file.n,
                file.parent.len()
            )));
        }
        let mut parent = Vec::with_capacity(file.n);
        for (i, &p) in file.parent.iter().enumerate() {
            if i == 0 {
                if p >= 0 {
                    return Err(Error::Parse(format!(
                        "parent[0] = {p}, the root must be marked with -1"
                    )));
                }
                parent.push(NO_PARENT);
            } else if p < 0 || p >= i as i64 {
                return Err(Error::Parse(format!(
                    "parent[{i}] = {p} violates generation order (must be in [0, {i}))"
                )));
            } else {
                parent.push(p as u32);
            }
        }
        Self::from_parents(file.model, parent).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Graphviz export with edges parent -> child.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n");
        for v in self.nodes() {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for v in self.nodes().skip(1) {
            let _ = writeln!(out, "  {} -> {v};", self.parent[v.index()]);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TreeFile {
    model: Model,
    n: usize,
    parent: Vec<i64>,
}

/// `subtree_size[v] = |T(v)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FringeSizeTable {
    pub subtree_size: Vec<u32>,
}

impl FringeSizeTable {
    #[inline]
    pub fn size(&self, v: NodeId) -> usize {
        self.subtree_size[v.index()] as usize
    }
}

/// Fixed shapes used as adversarial inputs.
pub mod shapes {
    use super::*;

    /// Path `0 - 1 - ... - (n-1)` rooted at node 0.
    pub fn path(n: usize) -> RootedTree {
        let parent = (0..n)
            .map(|i| if i == 0 { NO_PARENT } else { i as u32 - 1 })
            .collect();
        RootedTree::from_parents(Model::Generic, parent).expect("path")
    }

    /// Star `K_{1,leaves}` rooted at its center.
    pub fn star(leaves: usize) -> RootedTree {
        let parent = (0..=leaves)
            .map(|i| if i == 0 { NO_PARENT } else { 0 })
            .collect();
        RootedTree::from_parents(Model::Generic, parent).expect("star")
    }

    /// A spine of `spine` nodes rooted at one end with `legs` pendant leaves
    /// hanging off every spine node.
    pub fn caterpillar(spine: usize, legs: usize) -> RootedTree {
        assert!(spine >= 1);
        let mut parent = vec![NO_PARENT];
        for i in 1..spine {
            parent.push(i as u32 - 1);
        }
        for s in 0..spine {
            for _ in 0..legs {
                parent.push(s as u32);
            }
        }
        RootedTree::from_parents(Model::Generic, parent).expect("caterpillar")
    }

    /// Every fixed shape with at most `max_n` nodes.
    pub fn adversarial(max_n: usize) -> Vec<RootedTree> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            out.push(path(n));
        }
        for leaves in 1..max_n {
            out.push(star(leaves));
        }
        for spine in 2..=max_n {
            for legs in 1..=max_n {
                if spine * (legs + 1) <= max_n {
                    out.push(caterpillar(spine, legs));
                }
            }
        }
        out
    }
}
