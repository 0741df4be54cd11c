//! Range minimum queries.

/// Idempotent range-minimum table: O(n log n) build, O(1) query.
#[derive(Debug, Clone)]
pub struct SparseTable<T> {
    levels: Vec<Vec<T>>,
}

impl<T: Copy + Ord> SparseTable<T> {
    pub fn new(values: Vec<T>) -> Self {
        let n = values.len();
        let mut levels = vec![values];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<T> = (0..n + 1 - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels[0].is_empty()
    }

    /// Minimum over the half-open range `lo..hi`. Panics if the range is empty.
    pub fn min(&self, lo: usize, hi: usize) -> T {
        assert!(lo < hi && hi <= self.len(), "empty or invalid range {lo}..{hi}");
        let k = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        self.levels[k][lo].min(self.levels[k][hi - (1 << k)])
    }
}

const BLOCK: usize = 64;

/// Linear-space range minimum: a sparse table over blocks of 64 values,
/// and per position a bitmask of the in-block minimum stack ending there.
/// O(n) build, O(1) query.
#[derive(Debug, Clone)]
pub struct RangeMin<T> {
    values: Vec<T>,
    masks: Vec<u64>,
    blocks: SparseTable<T>,
}

impl<T: Copy + Ord> RangeMin<T> {
    pub fn new(values: Vec<T>) -> Self {
        let mut masks = vec![0u64; values.len()];
        let mut block_min = Vec::with_capacity(values.len().div_ceil(BLOCK));
        let mut stack: Vec<usize> = Vec::with_capacity(BLOCK);
        for (b, chunk) in values.chunks(BLOCK).enumerate() {
            stack.clear();
            let mut mask = 0u64;
            for (t, &v) in chunk.iter().enumerate() {
                while let Some(&top) = stack.last() {
                    if chunk[top] < v {
                        break;
                    }
                    mask &= !(1 << top);
                    stack.pop();
                }
                stack.push(t);
                mask |= 1 << t;
                masks[b * BLOCK + t] = mask;
            }
            block_min.push(chunk[stack[0]]);
        }
        Self {
            values,
            masks,
            blocks: SparseTable::new(block_min),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minimum over `l..=r` inside one block: the lowest stack entry at or
    /// after `l`.
    #[inline]
    fn in_block(&self, l: usize, r: usize) -> T {
        let m = self.masks[r] & (u64::MAX << (l % BLOCK));
        self.values[r - r % BLOCK + m.trailing_zeros() as usize]
    }

    /// Minimum over the half-open range `lo..hi`. Panics if the range is empty.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> T {
        assert!(lo < hi && hi <= self.len(), "empty or invalid range {lo}..{hi}");
        let r = hi - 1;
        let (bl, br) = (lo / BLOCK, r / BLOCK);
        if bl == br {
            return self.in_block(lo, r);
        }
        let mut best = self
            .in_block(lo, bl * BLOCK + BLOCK - 1)
            .min(self.in_block(br * BLOCK, r));
        if bl + 1 < br {
            best = best.min(self.blocks.min(bl + 1, br));
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_linear_scan(v in proptest::collection::vec(0u32..100, 1..80), a in 0usize..80, b in 0usize..80) {
            let t = SparseTable::new(v.clone());
            let (lo, hi) = (a.min(b) % v.len(), (a.max(b) % v.len()) + 1);
            prop_assume!(lo < hi);
            prop_assert_eq!(t.min(lo, hi), *v[lo..hi].iter().min().unwrap());
        }

        #[test]
        fn range_min_matches_linear_scan(v in proptest::collection::vec(0u32..50, 1..400)) {
            let t = RangeMin::new(v.clone());
            for lo in (0..v.len()).step_by(7) {
                for hi in lo + 1..=v.len() {
                    prop_assert_eq!(t.min(lo, hi), *v[lo..hi].iter().min().unwrap(), "{}..{}", lo, hi);
                }
            }
        }
    }
}
