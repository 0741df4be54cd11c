//! Enumeration of all op-square occurrences.
//!
//! For every suffix `w[i..n]` the leftmost occurrences are split into dyadic
//! groups `L_g`. Each nonempty group with `g >= 1` yields candidate half
//! lengths `ℓ` from three sources:
//!
//! - the largest member `x` of `L_g`: fragments of length `2^g` covering `x`
//!   that are order-isomorphic to the suffix's prefix of that length;
//! - the smallest member `x` of `L_g`: the same at length `2^{g-1}`;
//! - `ℓ = min L_g - x'` for every `x'` in `L_{g-1}`.
//!
//! A fragment start `y` gives `ℓ = y - i`. Every candidate is checked in
//! constant time with an op-LCE query (LCA depth in the op-suffix tree) plus
//! a plain LCE query that rejects regular squares.

mod leftmost;
mod results;
#[cfg(test)]
mod tests;

pub use leftmost::{
    compute_iprev, compute_k_active, group_leftmost, scan_leftmost, ActivityTable, KActiveRange,
    LeftmostGroups, LeftmostScan, LeftmostScanner, LeftmostState,
};
pub use results::{ResultIndex, ResultStats, Scale};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lce::PlainLce;
use crate::opcore::CntTable;
use crate::sequence::Sequence;
use crate::suffix_tree::{FingerprintIndex, LcaIndex, OpLce, OpSuffixTree};
use leftmost::dyadic_runs;

/// An op-square `w[start..start+len-1]`; `len` is the total length `|uv|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquareOccurrence {
    pub start: usize,
    pub len: usize,
}

impl SquareOccurrence {
    pub fn half(&self) -> usize {
        self.len / 2
    }
}

/// Candidate counters collected during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CandidateAudit {
    pub n: usize,
    pub sigma: u32,
    /// Distinct in-range candidate lengths, each verified once.
    pub total: u64,
    pub max_per_suffix: u64,
    /// `max_i candidates(i) / (1 + σ)`.
    pub max_ratio: f64,
    /// Raw lookup results and pair differences, before range filtering and
    /// deduplication.
    pub emitted: u64,
    pub max_emitted_per_suffix: u64,
    /// `Σ_p Σ_{k <= k_p} 2^k`.
    pub dyadic_mass: u64,
    pub result_cells: usize,
    pub result_entries: usize,
}

impl CandidateAudit {
    /// Checks `c(1+σ)` per suffix and `c(σ+1)n` in total, for both the
    /// distinct candidates and the raw emissions.
    pub fn within(&self, c: u64) -> bool {
        let per = c * (1 + self.sigma as u64);
        let total = per * self.n as u64;
        self.max_per_suffix <= per
            && self.total <= total
            && self.max_emitted_per_suffix <= per
            && self.emitted <= total
    }
}

/// Occurrences sorted by `(start, len)` plus the candidate audit.
#[derive(Debug, Clone, PartialEq)]
pub struct Enumeration {
    pub occurrences: Vec<SquareOccurrence>,
    pub audit: CandidateAudit,
}

/// All indexes over one string needed to enumerate its op-squares.
#[derive(Debug, Clone)]
pub struct Enumerator {
    seq: Sequence,
    tree: OpSuffixTree,
    lca: LcaIndex,
    fp: FingerprintIndex,
    op: OpLce,
    plain: PlainLce,
    activity: ActivityTable,
    results: ResultIndex,
}

impl Enumerator {
    /// Builds every index: cnt table, op-suffix tree, LCA, fingerprints,
    /// plain LCE, k-active ranges and the result index.
    pub fn new(s: &Sequence) -> Self {
        let cnt = CntTable::build(s);
        let tree = OpSuffixTree::build(&cnt);
        let lca = LcaIndex::build(&tree);
        let fp = FingerprintIndex::build(&tree);
        let op = OpLce::build(&tree, &lca);
        let plain = PlainLce::build(s.as_slice());
        let activity = compute_k_active(&compute_iprev(s), s.len());
        let results = ResultIndex::build(&activity, &fp);
        Self {
            seq: s.clone(),
            tree,
            lca,
            fp,
            op,
            plain,
            activity,
            results,
        }
    }

    pub fn sequence(&self) -> &Sequence {
        &self.seq
    }

    pub fn tree(&self) -> &OpSuffixTree {
        &self.tree
    }

    pub fn lca_index(&self) -> &LcaIndex {
        &self.lca
    }

    pub fn fingerprints(&self) -> &FingerprintIndex {
        &self.fp
    }

    pub fn op_lce(&self) -> &OpLce {
        &self.op
    }

    pub fn plain_lce(&self) -> &PlainLce {
        &self.plain
    }

    pub fn activity(&self) -> &ActivityTable {
        &self.activity
    }

    pub fn results(&self) -> &ResultIndex {
        &self.results
    }

    /// Whether `w[i..i+totalLen-1]` is an op-square.
    pub fn verify_candidate(&self, i: usize, total_len: usize) -> Result<bool> {
        let n = self.seq.len();
        if total_len % 2 == 1 {
            return Err(Error::OddLength(total_len));
        }
        if i == 0 || total_len == 0 || i + total_len - 1 > n {
            return Err(Error::FragmentOverflow {
                start: i,
                len: total_len,
                n,
            });
        }
        Ok(self.verify(i, total_len / 2))
    }

    /// LCA string depth of the two suffix leaves, read from the op-LCE
    /// table, then a plain LCE test that rejects `u = v`.
    #[inline]
    fn verify(&self, i: usize, half: usize) -> bool {
        self.op.lce(i, i + half) >= half && self.plain.lce(i, i + half) < half
    }

    /// In-range candidate total lengths `2ℓ` for the suffix of `state`,
    /// ascending and deduplicated.
    pub fn candidates_for_suffix(&self, state: &LeftmostState) -> Vec<usize> {
        let mut gen = CandidateGen::new(self.seq.len());
        gen.run(state, &self.results);
        let mut out: Vec<usize> = gen.halves.iter().map(|&h| 2 * h).collect();
        out.sort_unstable();
        out
    }

    pub fn enumerate(&self) -> Enumeration {
        let n = self.seq.len();
        let sigma = self.seq.sigma();
        let stats = self.results.stats();

        let mut gen = CandidateGen::new(n);
        let mut scanner = LeftmostScanner::new(&self.seq);
        let mut occurrences = Vec::new();
        let mut audit = CandidateAudit {
            n,
            sigma,
            dyadic_mass: self.activity.dyadic_mass(),
            result_cells: stats.cells,
            result_entries: stats.list_entries,
            ..CandidateAudit::default()
        };
        while let Some(state) = scanner.advance() {
            let i = state.i;
            let emitted = gen.run(state, &self.results);
            let distinct = gen.halves.len() as u64;
            audit.emitted += emitted;
            audit.max_emitted_per_suffix = audit.max_emitted_per_suffix.max(emitted);
            audit.total += distinct;
            audit.max_per_suffix = audit.max_per_suffix.max(distinct);
            // starts descend; one reversal at the end yields sorted output
            gen.halves.sort_unstable_by(|a, b| b.cmp(a));
            for &half in &gen.halves {
                if self.verify(i, half) {
                    occurrences.push(SquareOccurrence { start: i, len: 2 * half });
                }
            }
        }
        audit.max_ratio = audit.max_per_suffix as f64 / (1.0 + sigma as f64);
        occurrences.reverse();
        Enumeration { occurrences, audit }
    }

    /// Number of distinct words among `occurrences`, which must lie in this
    /// enumerator's string.
    pub fn count_distinct(&self, occurrences: &[SquareOccurrence]) -> usize {
        distinct_by(&self.plain, occurrences)
    }
}

/// Candidate generation for one suffix, with a stamp array for
/// deduplication that is reused across suffixes.
struct CandidateGen {
    n: usize,
    stamp: Vec<usize>,
    runs: Vec<(u32, usize, usize)>,
    halves: Vec<usize>,
}

impl CandidateGen {
    fn new(n: usize) -> Self {
        Self {
            n,
            stamp: vec![0; n + 1],
            runs: Vec::new(),
            halves: Vec::new(),
        }
    }

    /// Fills `halves` with the in-range half lengths; returns the number of
    /// candidates emitted before filtering.
    fn run(&mut self, state: &LeftmostState, results: &ResultIndex) -> u64 {
        let i = state.i;
        let pos = &state.positions;
        self.halves.clear();
        dyadic_runs(pos, i, &mut self.runs);
        let mut emitted = 0u64;
        for r in 0..self.runs.len() {
            let (g, a, b) = self.runs[r];
            if g == 0 {
                continue;
            }
            let (lo, hi) = (pos[a], pos[b - 1]);
            for (x, scale) in [(hi, Scale::Full), (lo, Scale::Half)] {
                for &y in results.lookup(x, g, i, scale) {
                    emitted += 1;
                    self.offer(i, (y as usize).wrapping_sub(i));
                }
            }
            if r > 0 && self.runs[r - 1].0 == g - 1 {
                let (_, pa, pb) = self.runs[r - 1];
                for &x2 in &pos[pa..pb] {
                    emitted += 1;
                    self.offer(i, lo - x2);
                }
            }
        }
        emitted
    }

    #[inline]
    fn offer(&mut self, i: usize, half: usize) {
        // wrapped negative values fail the range test
        if half >= 1 && half <= (self.n + 1 - i) / 2 && self.stamp[half] != i {
            self.stamp[half] = i;
            self.halves.push(half);
        }
    }
}

/// The result index over all k-active ranges, grouped by one radix sort of
/// fingerprint tuples.
pub fn precompute_results(activity: &ActivityTable, fp: &FingerprintIndex) -> ResultIndex {
    ResultIndex::build(activity, fp)
}

/// All op-square occurrences of `s`, sorted by `(start, len)`.
pub fn enumerate_op_squares(s: &Sequence) -> Vec<SquareOccurrence> {
    Enumerator::new(s).enumerate().occurrences
}

/// Number of classes of `occurrences` (in `s`) under word equality.
pub fn count_distinct_as_words(occurrences: &[SquareOccurrence], s: &Sequence) -> usize {
    if occurrences.is_empty() {
        return 0;
    }
    distinct_by(&PlainLce::build(s.as_slice()), occurrences)
}

/// Sorts by `(len, suffix rank)` so equal words become adjacent, then counts
/// the boundaries between them.
fn distinct_by(plain: &PlainLce, occurrences: &[SquareOccurrence]) -> usize {
    let mut keyed: Vec<(usize, usize, usize)> = occurrences
        .iter()
        .map(|o| (o.len, plain.rank(o.start), o.start))
        .collect();
    keyed.sort_unstable();
    keyed
        .windows(2)
        .filter(|pair| {
            let ((len, _, a), (len2, _, b)) = (pair[0], pair[1]);
            len != len2 || plain.lce(a, b) < len
        })
        .count()
        + usize::from(!keyed.is_empty())
}
