//! The order-preserving suffix tree: the compacted trie of the strings
//! `code(w[i..n])#` for `i = 1..n`.
//!
//! Edge labels are not stored; an edge entering node `v` is labelled by the
//! code of the suffix `rep(v)` between the string depths of its endpoints,
//! and is read back through the [`CntTable`] character oracle.
//!
//! Construction inserts suffixes from the longest to the shortest. Codes of
//! suffixes form a quasi-suffix collection: if suffixes `i` and `j` share a
//! code prefix of length `h`, suffixes `i+1` and `j+1` share at least `h-1`.
//! After inserting suffix `i` with head depth `h` against some earlier
//! suffix `j`, the insertion of `i+1` starts at depth `h-1` on the path of
//! leaf `j+1`, found by climbing from that leaf. Children are kept in short
//! unsorted lists; a node has at most `2σ+1` of them.

mod fingerprint;
mod lca;
mod naive;
mod oplce;

use std::fmt::Write as _;

pub use fingerprint::{build_fingerprint_index, FingerprintIndex, Locus};
pub use lca::{build_lca_index, op_isomorphic_fragments, LcaIndex};
pub use oplce::OpLce;
pub use naive::{naive_reference_tree, naive_reference_tree_with_cap, DEFAULT_NAIVE_CAP};

use crate::opcore::{CntTable, CodeSymbol};

/// A symbol of `code(w[i..n])#`. The terminator sorts after every code
/// symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeSymbol {
    Code(CodeSymbol),
    Terminator,
}

impl std::fmt::Display for EdgeSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeSymbol::Code(c) => c.fmt(f),
            EdgeSymbol::Terminator => f.write_str("#"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) struct Node {
    parent: u32,
    depth: u32,
    /// 1-based start of a suffix whose leaf lies below this node; 0 at the root.
    rep: u32,
    /// First symbol of the edge entering this node.
    first: EdgeSymbol,
    children: Vec<u32>,
    /// Suffix start for leaves, 0 otherwise.
    suffix: u32,
}

#[derive(Debug, Clone)]
pub struct OpSuffixTree {
    nodes: Vec<Node>,
    leaf_of: Vec<u32>,
    sigma: u32,
}

/// A point of the tree: an explicit node when `depth` equals the node's
/// string depth, otherwise a point on the edge entering `node`.
#[derive(Debug, Clone, Copy)]
struct Location {
    node: u32,
    depth: usize,
}

impl OpSuffixTree {
    pub const ROOT: NodeId = NodeId(0);

    pub fn build(table: &CntTable) -> Self {
        Builder::new(table).run()
    }

    pub(crate) fn from_parts(nodes: Vec<Node>, leaf_of: Vec<u32>, sigma: u32) -> Self {
        Self {
            nodes,
            leaf_of,
            sigma,
        }
    }

    /// Length of the underlying string.
    pub fn text_len(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        Self::ROOT
    }

    /// Leaf of the suffix starting at 1-based position `i`.
    pub fn leaf(&self, i: usize) -> NodeId {
        NodeId(self.leaf_of[i - 1])
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.nodes[v.index()].parent;
        (p != NONE).then_some(NodeId(p))
    }

    /// String depth; a leaf's depth counts the terminator.
    pub fn string_depth(&self, v: NodeId) -> usize {
        self.nodes[v.index()].depth as usize
    }

    pub fn children(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes[v.index()].children.iter().map(|&c| NodeId(c))
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.nodes[v.index()].children.len()
    }

    /// First symbol of the edge entering `v` (`None` at the root).
    pub fn first_symbol(&self, v: NodeId) -> Option<EdgeSymbol> {
        (v != Self::ROOT).then(|| self.nodes[v.index()].first)
    }

    /// Suffix start of a leaf.
    pub fn suffix_start(&self, v: NodeId) -> Option<usize> {
        let s = self.nodes[v.index()].suffix;
        (s != 0).then_some(s as usize)
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v.index()].suffix != 0
    }

    pub fn max_degree(&self) -> usize {
        self.nodes.iter().map(|n| n.children.len()).max().unwrap_or(0)
    }

    /// Full label of the edge entering `v`, read through the oracle.
    pub fn edge_label(&self, table: &CntTable, v: NodeId) -> Vec<EdgeSymbol> {
        let Some(p) = self.parent(v) else {
            return Vec::new();
        };
        let node = &self.nodes[v.index()];
        let n = table.len();
        (self.string_depth(p) + 1..=node.depth as usize)
            .map(|d| symbol_at(table, n, node.rep as usize, d))
            .collect()
    }

    /// Checks the structural invariants, returning the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.text_len();
        let leaves = self.nodes.iter().filter(|n| n.suffix != 0).count();
        if leaves != n {
            return Err(format!("{leaves} leaves for a string of length {n}"));
        }
        for (i, &leaf) in self.leaf_of.iter().enumerate() {
            let node = &self.nodes[leaf as usize];
            if node.suffix as usize != i + 1 || node.depth as usize != n - i + 1 {
                return Err(format!("leaf of suffix {} is malformed", i + 1));
            }
        }
        let bound = 2 * self.sigma as usize + 1;
        for (id, node) in self.nodes.iter().enumerate() {
            if node.suffix == 0 && id != 0 && node.children.len() < 2 {
                return Err(format!("internal node {id} has {} children", node.children.len()));
            }
            if node.children.len() > bound {
                return Err(format!("node {id} has degree {} > {bound}", node.children.len()));
            }
            let mut firsts: Vec<_> = node.children.iter().map(|&c| self.nodes[c as usize].first).collect();
            firsts.sort();
            if firsts.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("node {id} has two children with the same first symbol"));
            }
            for &c in &node.children {
                let child = &self.nodes[c as usize];
                if child.parent as usize != id || child.depth <= node.depth {
                    return Err(format!("edge {id} -> {c} is malformed"));
                }
            }
        }
        Ok(())
    }

    /// Canonical pre-order listing with children ordered by first symbol.
    /// Two trees are isomorphic (with matching leaf labels) iff their
    /// canonical forms are equal.
    pub fn canonical_form(&self) -> Vec<CanonicalNode> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(0u32, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            let node = &self.nodes[v as usize];
            let me = out.len();
            out.push(CanonicalNode {
                parent: (parent != usize::MAX).then_some(parent),
                depth: node.depth as usize,
                first: (v != 0).then_some(node.first),
                suffix: (node.suffix != 0).then_some(node.suffix as usize),
            });
            let mut kids = node.children.clone();
            kids.sort_by_key(|&c| std::cmp::Reverse(self.nodes[c as usize].first));
            stack.extend(kids.into_iter().map(|c| (c, me)));
        }
        out
    }

    /// Debug dump: one line per node, `id parent depth first [leaf=i]`, in
    /// canonical order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (id, node) in self.canonical_form().iter().enumerate() {
            let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
            let first = node.first.map_or("-".to_string(), |f| f.to_string());
            let _ = write!(s, "{id} {parent} {} {first}", node.depth);
            if let Some(i) = node.suffix {
                let _ = write!(s, " leaf={i}");
            }
            s.push('\n');
        }
        s
    }

    pub(crate) fn raw_parent(&self, v: usize) -> u32 {
        self.nodes[v].parent
    }

    pub(crate) fn raw_depth(&self, v: usize) -> u32 {
        self.nodes[v].depth
    }

    pub(crate) fn raw_children(&self, v: usize) -> &[u32] {
        &self.nodes[v].children
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalNode {
    pub parent: Option<usize>,
    pub depth: usize,
    pub first: Option<EdgeSymbol>,
    pub suffix: Option<usize>,
}

/// Free-function form of [`OpSuffixTree::build`].
pub fn build_op_suffix_tree(table: &CntTable) -> OpSuffixTree {
    OpSuffixTree::build(table)
}

#[inline]
fn symbol_at(table: &CntTable, n: usize, i: usize, d: usize) -> EdgeSymbol {
    if d <= n - i + 1 {
        EdgeSymbol::Code(table.symbol(i, d))
    } else {
        EdgeSymbol::Terminator
    }
}

struct Builder<'a> {
    table: &'a CntTable,
    n: usize,
    nodes: Vec<Node>,
    leaf_of: Vec<u32>,
}

impl<'a> Builder<'a> {
    fn new(table: &'a CntTable) -> Self {
        let n = table.len();
        let mut nodes = Vec::with_capacity(2 * n);
        nodes.push(Node {
            parent: NONE,
            depth: 0,
            rep: 0,
            first: EdgeSymbol::Terminator,
            children: Vec::new(),
            suffix: 0,
        });
        Self {
            table,
            n,
            nodes,
            leaf_of: vec![NONE; n],
        }
    }

    fn run(mut self) -> OpSuffixTree {
        let mut start = Location { node: 0, depth: 0 };
        for i in 1..=self.n {
            let (head, partner) = self.insert(i, start);
            start = Location { node: 0, depth: 0 };
            if i < self.n && head >= 2 {
                // leaf_of is 0-based, so this is the leaf of suffix partner+1
                start = self.climb(self.leaf_of[partner], head - 1);
            }
        }
        OpSuffixTree::from_parts(self.nodes, self.leaf_of, self.table.sigma())
    }

    #[inline]
    fn sym(&self, i: usize, d: usize) -> EdgeSymbol {
        symbol_at(self.table, self.n, i, d)
    }

    /// Highest point at string depth `depth` on the root path of `leaf`.
    fn climb(&self, leaf: u32, depth: usize) -> Location {
        let mut c = leaf;
        while self.nodes[self.nodes[c as usize].parent as usize].depth as usize >= depth {
            c = self.nodes[c as usize].parent;
        }
        Location { node: c, depth }
    }

    fn add_leaf(&mut self, parent: u32, i: usize, first: EdgeSymbol) {
        let id = self.nodes.len() as u32;
        self.nodes.push(Node {
            parent,
            depth: (self.n - i + 2) as u32,
            rep: i as u32,
            first,
            children: Vec::new(),
            suffix: i as u32,
        });
        self.nodes[parent as usize].children.push(id);
        self.leaf_of[i - 1] = id;
    }

    /// Inserts suffix `i` starting from a location known to lie on its path.
    /// Returns the head depth and the start of an earlier suffix sharing
    /// that head.
    fn insert(&mut self, i: usize, mut loc: Location) -> (usize, usize) {
        loop {
            let v = loc.node as usize;
            let node_depth = self.nodes[v].depth as usize;
            if loc.depth == node_depth {
                debug_assert_eq!(self.nodes[v].suffix, 0, "walked through a leaf");
                let sym = self.sym(i, loc.depth + 1);
                let hit = self.nodes[v]
                    .children
                    .iter()
                    .copied()
                    .find(|&c| self.nodes[c as usize].first == sym);
                match hit {
                    Some(c) => {
                        loc = Location {
                            node: c,
                            depth: loc.depth + 1,
                        }
                    }
                    None => {
                        self.add_leaf(v as u32, i, sym);
                        return (loc.depth, self.nodes[v].rep as usize);
                    }
                }
            } else {
                let rep = self.nodes[v].rep as usize;
                let mut d = loc.depth;
                while d < node_depth && self.sym(i, d + 1) == self.sym(rep, d + 1) {
                    d += 1;
                }
                if d == node_depth {
                    loc.depth = d;
                    continue;
                }
                self.split_and_attach(v as u32, d, i);
                return (d, rep);
            }
        }
    }

    fn split_and_attach(&mut self, v: u32, depth: usize, i: usize) {
        let mid = self.nodes.len() as u32;
        let (parent, rep, first) = {
            let node = &self.nodes[v as usize];
            (node.parent, node.rep, node.first)
        };
        self.nodes.push(Node {
            parent,
            depth: depth as u32,
            rep,
            first,
            children: vec![v],
            suffix: 0,
        });
        let siblings = &mut self.nodes[parent as usize].children;
        let slot = siblings.iter().position(|&c| c == v).expect("child listed at parent");
        siblings[slot] = mid;
        let below = self.sym(rep as usize, depth + 1);
        let node = &mut self.nodes[v as usize];
        node.parent = mid;
        node.first = below;
        let sym = self.sym(i, depth + 1);
        self.add_leaf(mid, i, sym);
    }
}
