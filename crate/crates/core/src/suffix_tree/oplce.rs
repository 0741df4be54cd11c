use super::{LcaIndex, OpSuffixTree};
use crate::rmq::SparseTable;

/// Order-preserving longest common extensions: the string depth of the LCA
/// of two suffix leaves, answered as a range minimum over the LCA depths of
/// consecutive leaves in DFS order.
///
/// Uses one 32-bit entry per leaf rather than the roughly four 64-bit tour
/// entries per leaf of [`LcaIndex`], which keeps it cache-resident longer.
#[derive(Debug, Clone)]
pub struct OpLce {
    n: usize,
    rank: Vec<u32>,
    lcp: SparseTable<u32>,
}

impl OpLce {
    pub fn build(tree: &OpSuffixTree, lca: &LcaIndex) -> Self {
        let n = tree.text_len();
        let mut leaves = Vec::with_capacity(n);
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            let children = tree.raw_children(v as usize);
            if children.is_empty() {
                leaves.push(v);
            }
            stack.extend_from_slice(children);
        }
        let mut rank = vec![0u32; n];
        let mut lcp = vec![0u32; leaves.len()];
        for (r, &v) in leaves.iter().enumerate() {
            let leaf = super::NodeId(v);
            rank[tree.suffix_start(leaf).expect("leaf") - 1] = r as u32;
            if r > 0 {
                let prev = super::NodeId(leaves[r - 1]);
                lcp[r] = tree.string_depth(lca.lca(prev, leaf)) as u32;
            }
        }
        Self {
            n,
            rank,
            lcp: SparseTable::new(lcp),
        }
    }

    /// Length of the longest common prefix of `code(w[i..n])` and
    /// `code(w[j..n])` (1-based starts).
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n - i + 1;
        }
        let (a, b) = (self.rank[i - 1] as usize, self.rank[j - 1] as usize);
        self.lcp.min(a.min(b) + 1, a.max(b) + 1) as usize
    }
}
