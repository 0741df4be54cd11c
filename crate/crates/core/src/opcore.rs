//! Order-preserving primitives: codes, the `cnt` character oracle,
//! op-borders and initial op-periods.
//!
//! Two strings `u`, `v` are order-isomorphic (`u ≈ v`) when they have the
//! same length and `u[i] <= u[j] ⇔ v[i] <= v[j]` for all `i, j`. The code of
//! a string records, per position, how many earlier characters are strictly
//! smaller and how many are equal; two strings are order-isomorphic exactly
//! when their codes coincide.

use crate::error::{out_of_range, Error, Result};
use crate::sequence::Sequence;

/// One coordinate of a code: `(prev_<, prev_=)` at some position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CodeSymbol {
    /// Earlier characters strictly smaller than this one.
    pub less: u32,
    /// Earlier characters equal to this one.
    pub equal: u32,
}

impl CodeSymbol {
    pub const fn new(less: u32, equal: u32) -> Self {
        Self { less, equal }
    }
}

impl std::fmt::Display for CodeSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.less, self.equal)
    }
}

/// Computes `code(s)` directly from the definition.
///
/// Works on any totally ordered characters; runs in O(m log m) using a
/// Fenwick tree over the ranks of `s`.
pub fn compute_code<T: Ord>(s: &[T]) -> Result<Vec<CodeSymbol>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let ranks = dense_ranks(s);
    let width = ranks.iter().copied().max().unwrap_or(0) + 1;
    let mut fenwick = vec![0u32; width + 1];
    let mut seen = vec![0u32; width];
    let mut out = Vec::with_capacity(s.len());
    for &r in &ranks {
        // prefix sum over ranks < r
        let mut less = 0;
        let mut idx = r;
        while idx > 0 {
            less += fenwick[idx];
            idx &= idx - 1;
        }
        out.push(CodeSymbol::new(less, seen[r]));
        seen[r] += 1;
        let mut idx = r + 1;
        while idx <= width {
            fenwick[idx] += 1;
            idx += idx & idx.wrapping_neg();
        }
    }
    Ok(out)
}

fn dense_ranks<T: Ord>(s: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| s[a].cmp(&s[b]));
    let mut ranks = vec![0; s.len()];
    let mut rank = 0;
    for w in 0..order.len() {
        if w > 0 && s[order[w - 1]] != s[order[w]] {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    ranks
}

/// `u ≈ v`.
pub fn is_op_isomorphic<T: Ord>(u: &[T], v: &[T]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    compute_code(u).ok() == compute_code(v).ok()
}

/// Whether `b` is an op-border of `s`, i.e. `s[1..b] ≈ s[|s|-b+1..|s|]`.
pub fn is_op_border<T: Ord>(s: &[T], b: usize) -> Result<bool> {
    if b > s.len() {
        return Err(out_of_range(
            "op-border length",
            format!("{b} > {}", s.len()),
        ));
    }
    Ok(is_op_isomorphic(&s[..b], &s[s.len() - b..]))
}

/// Split of a string into `f` full blocks of length `Δ` and one incomplete
/// block, as induced by a candidate initial op-period `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub block_length: usize,
    pub full_blocks: usize,
    pub incomplete_length: usize,
    /// True when `block_length` is an initial op-period: all full blocks are
    /// pairwise isomorphic and every block's prefix of the incomplete length
    /// is isomorphic to the incomplete block.
    pub is_initial_op_period: bool,
}

impl BlockDecomposition {
    /// 1-based start of block `j` (`1..=full_blocks + 1`).
    pub fn block_start(&self, j: usize) -> usize {
        (j - 1) * self.block_length + 1
    }
}

/// Decomposes `s` into blocks of length `p` and checks whether `p` is an
/// initial op-period. A failed check is reported through the flag rather
/// than an error.
pub fn decompose_initial_op_period<T: Ord>(s: &[T], p: usize) -> Result<BlockDecomposition> {
    if p == 0 || p > s.len() {
        return Err(out_of_range(
            "period",
            format!("{p} not in [1, {}]", s.len()),
        ));
    }
    let full_blocks = s.len() / p;
    let incomplete_length = s.len() - full_blocks * p;
    let block = |j: usize| &s[j * p..(j + 1) * p];
    let first_code = compute_code(block(0))?;
    let mut ok = (1..full_blocks).all(|j| compute_code(block(j)).ok().as_ref() == Some(&first_code));
    if ok && incomplete_length > 0 {
        let tail = compute_code(&s[full_blocks * p..])?;
        // prefixes of isomorphic blocks are isomorphic, and codes are
        // prefix-closed, so comparing against the first block suffices
        ok = first_code[..incomplete_length] == tail[..];
    }
    Ok(BlockDecomposition {
        block_length: p,
        full_blocks,
        incomplete_length,
        is_initial_op_period: ok,
    })
}

/// `cnt[i][x] = |{k <= i : w[k] < x}|` for `i ∈ [0, n]`, `x ∈ [0, σ+1]`.
///
/// The extra column `σ+1` lets equal-character counts be read off as
/// `cnt[i][c+1] - cnt[i][c]` for every `c ∈ [1, σ]`. The table also keeps a
/// copy of the string so it can serve as the character oracle for the codes
/// of all suffixes.
#[derive(Debug, Clone)]
pub struct CntTable {
    chars: Vec<u32>,
    sigma: u32,
    width: usize,
    cnt: Vec<u32>,
}

impl CntTable {
    pub fn build(s: &Sequence) -> Self {
        let n = s.len();
        let sigma = s.sigma();
        let width = sigma as usize + 2;
        let mut cnt = vec![0u32; (n + 1) * width];
        for (i, &c) in s.as_slice().iter().enumerate() {
            let (prev, row) = cnt.split_at_mut((i + 1) * width);
            let prev = &prev[i * width..];
            let row = &mut row[..width];
            for x in 0..width {
                row[x] = prev[x] + u32::from((x as u32) > c);
            }
        }
        Self {
            chars: s.as_slice().to_vec(),
            sigma,
            width,
            cnt,
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// `cnt[i][x]`.
    pub fn get(&self, i: usize, x: usize) -> Result<u32> {
        if i > self.len() || x >= self.width {
            return Err(out_of_range(
                "cnt index",
                format!("({i}, {x}) outside [0, {}] x [0, {}]", self.len(), self.width - 1),
            ));
        }
        Ok(self.cnt[i * self.width + x])
    }

    #[inline]
    fn at(&self, i: usize, x: usize) -> u32 {
        self.cnt[i * self.width + x]
    }

    /// `φ(w[i..n], j)` without bounds checks beyond debug assertions.
    #[inline]
    pub(crate) fn symbol(&self, i: usize, j: usize) -> CodeSymbol {
        debug_assert!(i >= 1 && j >= 1 && i + j - 1 <= self.len());
        let c = self.chars[i + j - 2] as usize;
        let hi = i + j - 2;
        let lo = i - 1;
        let less = self.at(hi, c) - self.at(lo, c);
        let equal = (self.at(hi, c + 1) - self.at(hi, c)) - (self.at(lo, c + 1) - self.at(lo, c));
        CodeSymbol::new(less, equal)
    }

    /// The character oracle: `φ(w[i..n], j)` in O(1).
    pub fn character_oracle(&self, i: usize, j: usize) -> Result<CodeSymbol> {
        let n = self.len();
        if i == 0 || i > n || j == 0 || j > n - i + 1 {
            return Err(out_of_range(
                "character oracle query",
                format!("(i={i}, j={j}) for n={n}"),
            ));
        }
        Ok(self.symbol(i, j))
    }
}

/// Free-function form of [`CntTable::build`].
pub fn build_cnt_table(s: &Sequence) -> CntTable {
    CntTable::build(s)
}

/// Free-function form of [`CntTable::character_oracle`].
pub fn character_oracle(t: &CntTable, i: usize, j: usize) -> Result<CodeSymbol> {
    t.character_oracle(i, j)
}
