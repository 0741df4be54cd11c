use super::{NodeId, OpSuffixTree, NONE};
use crate::error::{Error, Result};
use crate::rmq::RangeMin;

/// Constant-time lowest common ancestors via an Euler tour and a range
/// minimum structure over `(tree level, node)` pairs.
#[derive(Debug, Clone)]
pub struct LcaIndex {
    first_visit: Vec<u32>,
    tour: RangeMin<u64>,
}

impl LcaIndex {
    pub fn build(tree: &OpSuffixTree) -> Self {
        let count = tree.node_count();
        let mut level = vec![0u32; count];
        let mut first_visit = vec![NONE; count];
        let mut tour = Vec::with_capacity(2 * count);
        // (node, index of next child to descend into)
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, next) = stack[top];
            if next == 0 {
                first_visit[v] = tour.len() as u32;
            }
            tour.push(((level[v] as u64) << 32) | v as u64);
            let children = tree.raw_children(v);
            if next < children.len() {
                let c = children[next] as usize;
                stack[top].1 += 1;
                level[c] = level[v] + 1;
                stack.push((c, 0));
            } else {
                stack.pop();
            }
        }
        Self {
            first_visit,
            tour: RangeMin::new(tour),
        }
    }

    pub fn lca(&self, u: NodeId, v: NodeId) -> NodeId {
        let (a, b) = (
            self.first_visit[u.index()] as usize,
            self.first_visit[v.index()] as usize,
        );
        let (lo, hi) = (a.min(b), a.max(b));
        NodeId((self.tour.min(lo, hi + 1) & 0xffff_ffff) as u32)
    }
}

pub fn build_lca_index(tree: &OpSuffixTree) -> LcaIndex {
    LcaIndex::build(tree)
}

/// `w[i..i+len-1] ≈ w[i2..i2+len-1]`, decided by the string depth of the
/// LCA of the two suffix leaves.
pub fn op_isomorphic_fragments(
    tree: &OpSuffixTree,
    lca: &LcaIndex,
    i: usize,
    i2: usize,
    len: usize,
) -> Result<bool> {
    let n = tree.text_len();
    for start in [i, i2] {
        if start == 0 || start + len > n + 1 {
            return Err(Error::FragmentOverflow { start, len, n });
        }
    }
    if i == i2 || len == 0 {
        return Ok(true);
    }
    Ok(tree.string_depth(lca.lca(tree.leaf(i), tree.leaf(i2))) >= len)
}
