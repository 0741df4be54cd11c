//! Equivalence suites between the enumerator and the brute-force oracle.

use opsq_core::oracle::{brute_force_distinct, brute_force_enumerate};
use opsq_core::{genbench, Enumerator, Sequence, SquareOccurrence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest length and alphabet of the random suite.
pub const RANDOM_MAX_N: usize = 200;
pub const RANDOM_MAX_SIGMA: u32 = 8;

/// Results of both implementations on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub occurrences: Vec<SquareOccurrence>,
    pub distinct: usize,
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub input: Sequence,
    pub expected: Outcome,
    pub got: Outcome,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Shrunk first failure.
    pub counterexample: Option<Mismatch>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the library (optionally with a planted fault) and the oracle.
#[derive(Debug, Clone, Copy, Default)]
pub struct Checker {
    /// Drops the first reported occurrence, for testing the harness itself.
    pub inject_fault: bool,
}

impl Checker {
    fn library(&self, s: &Sequence) -> Outcome {
        let e = Enumerator::new(s);
        let mut occurrences = e.enumerate().occurrences;
        if self.inject_fault && !occurrences.is_empty() {
            occurrences.remove(0);
        }
        let distinct = e.count_distinct(&occurrences);
        Outcome {
            occurrences,
            distinct,
        }
    }

    fn oracle(s: &Sequence) -> Outcome {
        Outcome {
            occurrences: brute_force_enumerate(s).expect("suite inputs are within the oracle cap"),
            distinct: brute_force_distinct(s).expect("suite inputs are within the oracle cap"),
        }
    }

    pub fn check(&self, s: &Sequence) -> Option<Mismatch> {
        let (expected, got) = (Self::oracle(s), self.library(s));
        (expected != got).then(|| Mismatch {
            input: s.clone(),
            expected,
            got,
        })
    }

    /// Deletes characters while the mismatch persists.
    pub fn shrink(&self, mut m: Mismatch) -> Mismatch {
        'outer: loop {
            let chars = m.input.as_slice();
            for skip in 0..chars.len() {
                let rest: Vec<u32> = chars
                    .iter()
                    .enumerate()
                    .filter(|&(idx, _)| idx != skip)
                    .map(|(_, &c)| c)
                    .collect();
                let Ok(smaller) = Sequence::normalized(&rest) else {
                    continue;
                };
                if let Some(next) = self.check(&smaller) {
                    m = next;
                    continue 'outer;
                }
            }
            return m;
        }
    }

    fn run<I: IntoIterator<Item = Sequence>>(&self, name: String, inputs: I) -> SuiteReport {
        let mut report = SuiteReport {
            name,
            cases: 0,
            failures: 0,
            counterexample: None,
        };
        for s in inputs {
            report.cases += 1;
            if let Some(m) = self.check(&s) {
                report.failures += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(self.shrink(m));
                }
            }
        }
        report
    }

    /// Every string over `{1..σ}` of length `1..=max_n`, rank-normalized.
    pub fn exhaustive(&self, max_n: usize, sigma: u32) -> SuiteReport {
        let inputs = (1..=max_n).flat_map(move |n| all_strings(n, sigma));
        self.run(format!("exhaustive n≤{max_n} σ≤{sigma}"), inputs)
    }

    /// `cases` random strings with `n ≤ 200` and `σ ≤ 8`.
    pub fn random(&self, cases: usize, seed: u64) -> SuiteReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inputs = (0..cases).map(move |_| {
            let sigma = rng.gen_range(1..=RANDOM_MAX_SIGMA);
            let n = rng.gen_range(sigma as usize..=RANDOM_MAX_N);
            genbench::generate_random(n, sigma, rng.gen()).expect("1 <= sigma <= n")
        });
        self.run(format!("random {cases} cases"), inputs)
    }

    pub fn single(&self, s: &Sequence) -> SuiteReport {
        self.run("input".to_string(), [s.clone()])
    }
}

fn all_strings(n: usize, sigma: u32) -> impl Iterator<Item = Sequence> {
    let total = (sigma as usize).pow(n as u32);
    (0..total).filter_map(move |mut code| {
        let chars: Vec<u32> = (0..n)
            .map(|_| {
                let c = (code % sigma as usize) as u32 + 1;
                code /= sigma as usize;
                c
            })
            .collect();
        // ranks keep every op-square and word equality intact
        Sequence::normalized(&chars).ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_strings() {
        let report = Checker::default().exhaustive(3, 2);
        assert_eq!(report.cases, 2 + 4 + 8);
        assert!(report.passed());
    }

    #[test]
    fn fault_is_caught_and_shrunk() {
        let checker = Checker { inject_fault: true };
        let report = checker.exhaustive(4, 2);
        assert!(!report.passed());
        let m = report.counterexample.unwrap();
        assert_eq!(m.input.len(), 2);
        assert_eq!(m.expected.occurrences.len(), 1);
        assert!(m.got.occurrences.is_empty());
    }

    #[test]
    fn random_is_deterministic() {
        let a = Checker::default().random(5, 7);
        assert_eq!(a.cases, 5);
        assert!(a.passed());
    }
}
