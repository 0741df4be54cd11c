//! Longest common extensions over the plain string.
//!
//! Used to tell the two arms of a candidate square apart as words, and to
//! deduplicate occurrences that are equal as words.

use crate::rmq::SparseTable;

/// Suffix array, inverse suffix array and LCP table with RMQ support.
#[derive(Debug, Clone)]
pub struct PlainLce {
    n: usize,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: SparseTable<u32>,
}

impl PlainLce {
    pub fn build(text: &[u32]) -> Self {
        let n = text.len();
        let sa = suffix_array(text);
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(text, &sa, &rank);
        Self {
            n,
            sa,
            rank,
            lcp: SparseTable::new(lcp),
        }
    }

    /// Suffix array (0-based suffix starts in lexicographic order).
    pub fn suffix_array(&self) -> &[u32] {
        &self.sa
    }

    /// Lexicographic rank of the suffix starting at 1-based position `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i - 1] as usize
    }

    /// Length of the longest common prefix of `w[i..n]` and `w[j..n]`
    /// (1-based starts).
    pub fn lce(&self, i: usize, j: usize) -> usize {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        if i == j {
            return self.n - i + 1;
        }
        let (a, b) = (self.rank[i - 1] as usize, self.rank[j - 1] as usize);
        let (lo, hi) = (a.min(b), a.max(b));
        self.lcp.min(lo + 1, hi + 1) as usize
    }
}

/// Prefix-doubling suffix array, O(n log² n).
fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n == 0 {
        return sa;
    }
    let mut rank: Vec<u64> = text.iter().map(|&c| c as u64).collect();
    let mut tmp = vec![0u64; n];
    let mut k = 1;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            let second = if i + k < n { rank[i + k] + 1 } else { 0 };
            (rank[i], second)
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = u64::from(key(sa[w - 1]) != key(sa[w]));
            tmp[sa[w] as usize] = tmp[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// `lcp[r]` = LCP of suffixes `sa[r-1]` and `sa[r]`; `lcp[0] = 0`.
fn kasai(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_lce(t: &[u32], i: usize, j: usize) -> usize {
        t[i - 1..].iter().zip(&t[j - 1..]).take_while(|(a, b)| a == b).count()
    }

    #[test]
    fn constant_string() {
        let t = vec![1; 9];
        let lce = PlainLce::build(&t);
        assert_eq!(lce.suffix_array(), &[8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(lce.lce(1, 5), 5);
        assert_eq!(lce.lce(3, 3), 7);
    }

    proptest! {
        #[test]
        fn lce_matches_naive(t in proptest::collection::vec(1u32..=3, 1..60)) {
            let lce = PlainLce::build(&t);
            let mut sorted: Vec<u32> = (0..t.len() as u32).collect();
            sorted.sort_by(|&a, &b| t[a as usize..].cmp(&t[b as usize..]));
            prop_assert_eq!(lce.suffix_array(), &sorted[..]);
            for i in 1..=t.len() {
                for j in 1..=t.len() {
                    prop_assert_eq!(lce.lce(i, j), naive_lce(&t, i, j));
                }
            }
        }
    }
}
