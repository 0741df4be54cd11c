use super::{NodeId, OpSuffixTree, NONE};
use crate::error::{Error, Result};

/// Where an ancestor at a given string depth sits in the compacted tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    Explicit(NodeId),
    /// Strictly inside the edge entering this node.
    OnEdge(NodeId),
}

/// Ancestor-at-string-depth lookups by binary lifting, and the fingerprints
/// built on them.
///
/// `fingerprint_k(x)` identifies the point at string depth `2^k` on the path
/// of leaf `x`: node `v` maps to `2v+1`, the edge entering `v` to `2v+2`.
/// Identifiers lie in `[1, 2·nodes]` and two of them are equal exactly when
/// the length-`2^k` fragments starting at the two positions are
/// order-isomorphic.
#[derive(Debug, Clone)]
pub struct FingerprintIndex {
    n: usize,
    leaf_of: Vec<u32>,
    depth: Vec<u32>,
    /// `up[j][v]`: the `2^j`-th ancestor of `v`, saturating at the root.
    up: Vec<Vec<u32>>,
    /// `levels[k][x-1]`: fingerprint of `w[x..x+2^k-1]`, 0 where it overflows.
    levels: Vec<Vec<u32>>,
}

impl FingerprintIndex {
    pub fn build(tree: &OpSuffixTree) -> Self {
        let count = tree.node_count();
        let parents: Vec<u32> = (0..count)
            .map(|v| match tree.raw_parent(v) {
                NONE => 0,
                p => p,
            })
            .collect();
        let mut up = vec![parents];
        // enough levels to climb any root path
        while (1usize << (up.len() - 1)) < count {
            let prev = up.last().unwrap();
            let next: Vec<u32> = prev.iter().map(|&p| prev[p as usize]).collect();
            up.push(next);
        }
        let n = tree.text_len();
        let leaf_of: Vec<u32> = (1..=n).map(|i| tree.leaf(i).0).collect();
        let depth: Vec<u32> = (0..count).map(|v| tree.raw_depth(v)).collect();
        let levels = power_levels(tree, &depth, &leaf_of);
        Self {
            n,
            leaf_of,
            depth,
            up,
            levels,
        }
    }

    /// Upper bound (inclusive) of the identifier range.
    pub fn id_range(&self) -> u64 {
        2 * self.depth.len() as u64
    }

    /// The point at string depth `d` (`1 <= d <= n-x+1`) above the leaf of
    /// suffix `x`.
    pub fn ancestor_at_depth(&self, x: usize, d: usize) -> Result<Locus> {
        if x == 0 || d == 0 || x + d > self.n + 1 {
            return Err(Error::FragmentOverflow {
                start: x,
                len: d,
                n: self.n,
            });
        }
        Ok(self.locate(x, d as u32))
    }

    #[inline]
    fn locate(&self, x: usize, d: u32) -> Locus {
        let mut v = self.leaf_of[x - 1] as usize;
        for level in self.up.iter().rev() {
            let a = level[v] as usize;
            if self.depth[a] >= d {
                v = a;
            }
        }
        if self.depth[v] == d {
            Locus::Explicit(NodeId(v as u32))
        } else {
            Locus::OnEdge(NodeId(v as u32))
        }
    }

    /// Fingerprint of the fragment `w[x..x+2^k-1]`.
    pub fn fingerprint(&self, x: usize, k: u32) -> Result<u64> {
        let len = 1usize.checked_shl(k).unwrap_or(usize::MAX);
        if x == 0 || len > self.n || x + len > self.n + 1 {
            return Err(Error::FragmentOverflow {
                start: x,
                len,
                n: self.n,
            });
        }
        Ok(self.levels[k as usize][x - 1] as u64)
    }

    /// Fingerprint of `w[x..x+len-1]` for any in-range length.
    #[inline]
    pub(crate) fn fingerprint_unchecked(&self, x: usize, len: usize) -> u64 {
        if len.is_power_of_two() {
            return self.levels[len.trailing_zeros() as usize][x - 1] as u64;
        }
        match self.locate(x, len as u32) {
            Locus::Explicit(v) => 2 * v.0 as u64 + 1,
            Locus::OnEdge(v) => 2 * v.0 as u64 + 2,
        }
    }
}

/// Fingerprint tables for every length `2^k <= n`, filled top-down: each
/// node inherits its parent's label once the parent reaches depth `2^k`.
fn power_levels(tree: &OpSuffixTree, depth: &[u32], leaf_of: &[u32]) -> Vec<Vec<u32>> {
    let n = tree.text_len();
    let mut order = Vec::with_capacity(depth.len());
    let mut stack = vec![0u32];
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend_from_slice(tree.raw_children(v as usize));
    }
    let mut label = vec![0u32; depth.len()];
    let mut levels = Vec::new();
    let mut len = 1u32;
    while len as usize <= n {
        for &v in &order[1..] {
            let v = v as usize;
            let p = tree.raw_parent(v) as usize;
            label[v] = if depth[p] >= len {
                label[p]
            } else if depth[v] == len {
                2 * v as u32 + 1
            } else if depth[v] > len {
                2 * v as u32 + 2
            } else {
                0
            };
        }
        levels.push(
            leaf_of
                .iter()
                .enumerate()
                .map(|(x, &leaf)| if x + len as usize <= n { label[leaf as usize] } else { 0 })
                .collect(),
        );
        len <<= 1;
    }
    levels
}

pub fn build_fingerprint_index(tree: &OpSuffixTree) -> FingerprintIndex {
    FingerprintIndex::build(tree)
}
