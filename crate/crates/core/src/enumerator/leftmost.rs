use crate::sequence::Sequence;

/// Leftmost occurrences of the suffix `w[i..n]`: positions whose character
/// does not occur earlier in the suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftmostState {
    pub i: usize,
    /// Absolute positions, ascending. At most `σ` of them.
    pub positions: Vec<usize>,
}

/// Walks the suffixes `w[n..n], w[n-1..n], …, w[1..n]`, updating the
/// leftmost occurrences in O(σ) per step and recording `iprev` on the way.
#[derive(Debug, Clone)]
pub struct LeftmostScanner<'a> {
    chars: &'a [u32],
    next: usize,
    state: LeftmostState,
    iprev: Vec<usize>,
}

impl<'a> LeftmostScanner<'a> {
    pub fn new(s: &'a Sequence) -> Self {
        let n = s.len();
        Self {
            chars: s.as_slice(),
            next: n,
            state: LeftmostState {
                i: n + 1,
                positions: Vec::with_capacity(s.sigma() as usize),
            },
            iprev: vec![0; n + 1],
        }
    }

    /// Moves to the next (one shorter start) suffix and returns its state.
    pub fn advance(&mut self) -> Option<&LeftmostState> {
        if self.next == 0 {
            return None;
        }
        let i = self.next;
        let c = self.chars[i - 1];
        let positions = &mut self.state.positions;
        if let Some(idx) = positions.iter().position(|&p| self.chars[p - 1] == c) {
            let p = positions.remove(idx);
            self.iprev[p] = i;
        }
        positions.insert(0, i);
        self.state.i = i;
        self.next -= 1;
        Some(&self.state)
    }

    /// `iprev` as far as the scan has progressed; complete once `advance`
    /// has returned `None`. Index 0 is unused.
    pub fn into_iprev(self) -> Vec<usize> {
        self.iprev
    }
}

/// Every leftmost state (for `i = n` down to `1`) and the complete `iprev`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftmostScan {
    pub states: Vec<LeftmostState>,
    pub iprev: Vec<usize>,
}

impl LeftmostScan {
    /// State of the suffix starting at `i`.
    pub fn state(&self, i: usize) -> &LeftmostState {
        &self.states[self.states.len() - i]
    }
}

pub fn scan_leftmost(s: &Sequence) -> LeftmostScan {
    let mut scanner = LeftmostScanner::new(s);
    let mut states = Vec::with_capacity(s.len());
    while let Some(state) = scanner.advance() {
        states.push(state.clone());
    }
    LeftmostScan {
        states,
        iprev: scanner.into_iprev(),
    }
}

/// `iprev[p]`: the largest `p' < p` with `w[p'] = w[p]`, or 0. Index 0 is
/// unused.
pub fn compute_iprev(s: &Sequence) -> Vec<usize> {
    let mut last = vec![0usize; s.sigma() as usize + 1];
    let mut iprev = vec![0usize; s.len() + 1];
    for (idx, &c) in s.as_slice().iter().enumerate() {
        iprev[idx + 1] = last[c as usize];
        last[c as usize] = idx + 1;
    }
    iprev
}

/// `⌊log2 r⌋` for `r >= 1`.
#[inline]
pub(crate) fn dyadic_band(r: usize) -> u32 {
    usize::BITS - 1 - r.leading_zeros()
}

/// The leftmost occurrences of one suffix split into dyadic groups
/// `L_k = {r : r ∈ [2^k, 2^{k+1})}` of relative positions `r = p - i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftmostGroups {
    groups: Vec<(u32, Vec<usize>)>,
}

impl LeftmostGroups {
    /// Members of `L_k`, ascending; empty if the group is empty.
    pub fn get(&self, k: u32) -> &[usize] {
        self.groups
            .iter()
            .find(|(g, _)| *g == k)
            .map_or(&[], |(_, m)| m.as_slice())
    }

    /// Nonempty groups in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &[usize])> {
        self.groups.iter().map(|(g, m)| (*g, m.as_slice()))
    }

    pub fn total(&self) -> usize {
        self.groups.iter().map(|(_, m)| m.len()).sum()
    }
}

pub fn group_leftmost(state: &LeftmostState) -> LeftmostGroups {
    let mut runs = Vec::new();
    dyadic_runs(&state.positions, state.i, &mut runs);
    LeftmostGroups {
        groups: runs
            .into_iter()
            .map(|(g, a, b)| {
                let rel = state.positions[a..b]
                    .iter()
                    .map(|&p| p - state.i + 1)
                    .collect();
                (g, rel)
            })
            .collect(),
    }
}

/// Splits ascending absolute `positions` into maximal runs of equal dyadic
/// band relative to `i`, as `(k, begin, end)` index ranges.
pub(crate) fn dyadic_runs(positions: &[usize], i: usize, runs: &mut Vec<(u32, usize, usize)>) {
    runs.clear();
    let mut begin = 0;
    while begin < positions.len() {
        let g = dyadic_band(positions[begin] - i + 1);
        let mut end = begin + 1;
        while end < positions.len() && dyadic_band(positions[end] - i + 1) == g {
            end += 1;
        }
        runs.push((g, begin, end));
        begin = end;
    }
}

/// Suffix starts at which `p` is `k`-active: `p` is leftmost in `w[i'..n]`
/// and `2^k <= p - i' + 1 < 2^{k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KActiveRange {
    pub p: usize,
    pub k: u32,
    pub start: usize,
    pub end: usize,
}

impl KActiveRange {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.start..=self.end).contains(&i)
    }
}

/// The k-active ranges of every position.
#[derive(Debug, Clone)]
pub struct ActivityTable {
    n: usize,
    /// First suffix start at which `p` is leftmost: `iprev(p) + 1`.
    first: Vec<usize>,
    dyadic_mass: u64,
}

impl ActivityTable {
    /// `iprev` is indexed `1..=n` with index 0 unused.
    pub fn build(iprev: &[usize]) -> Self {
        let n = iprev.len().saturating_sub(1);
        let first: Vec<usize> = iprev.iter().map(|&q| q + 1).collect();
        let dyadic_mass = (1..=n)
            .map(|p| {
                let kp = dyadic_band(p - first[p] + 1);
                (2u64 << kp) - 1
            })
            .sum();
        Self {
            n,
            first,
            dyadic_mass,
        }
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    /// `k_p`: the largest scale at which `p` is ever active.
    pub fn max_scale(&self, p: usize) -> u32 {
        dyadic_band(p - self.first[p] + 1)
    }

    pub fn range(&self, p: usize, k: u32) -> Option<KActiveRange> {
        if p == 0 || p > self.n || k > self.max_scale(p) {
            return None;
        }
        let far = (p + 2).saturating_sub(2usize << k).max(1);
        Some(KActiveRange {
            p,
            k,
            start: far.max(self.first[p]),
            end: p + 1 - (1usize << k),
        })
    }

    /// Ranges of `p` for `k = 0..=k_p`.
    pub fn ranges(&self, p: usize) -> impl Iterator<Item = KActiveRange> + '_ {
        (0..=self.max_scale(p)).filter_map(move |k| self.range(p, k))
    }

    /// `Σ_p Σ_{k <= k_p} 2^k`, which bounds the total size of all ranges.
    pub fn dyadic_mass(&self) -> u64 {
        self.dyadic_mass
    }
}

pub fn compute_k_active(iprev: &[usize], n: usize) -> ActivityTable {
    debug_assert_eq!(iprev.len(), n + 1);
    ActivityTable::build(iprev)
}
