//! Input generators, bound audits and the benchmark harness.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerator::Enumerator;
use crate::error::{out_of_range, Error, Result};
use crate::sequence::Sequence;

/// `1^k 2^k … σ^k`.
pub fn generate_lower_bound_family(sigma: u32, k: usize) -> Result<Sequence> {
    if sigma == 0 || k == 0 {
        return Err(out_of_range(
            "family parameters",
            format!("sigma={sigma}, k={k}; both must be positive"),
        ));
    }
    let chars = (1..=sigma)
        .flat_map(|c| std::iter::repeat_n(c, k))
        .collect();
    Sequence::new(chars, sigma)
}

/// The counting formula for the family: `Σ_{i=1}^{⌊σ/2⌋} (σk − 2ik + 1)`
/// for `σ >= 3`, and `⌊k/2⌋` for `σ <= 2`.
pub fn expected_family_count(sigma: u32, k: usize) -> u64 {
    let (sigma, k) = (sigma as u64, k as u64);
    if sigma <= 2 {
        return k / 2;
    }
    let len = sigma * k;
    (1..=sigma / 2).map(|i| len + 1 - 2 * i * k).sum()
}

/// Pseudo-random sequence from ChaCha8 seeded with `seed`; characters are
/// uniform in `[1, σ]`.
pub fn generate_random(n: usize, sigma: u32, seed: u64) -> Result<Sequence> {
    if n == 0 || sigma == 0 || sigma as usize > n {
        return Err(out_of_range(
            "random parameters",
            format!("n={n}, sigma={sigma}; need 1 <= sigma <= n"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chars = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
    Sequence::new(chars, sigma)
}

/// `⌊σn/12⌋`.
pub fn lower_bound_target(n: usize, sigma: u32) -> u64 {
    sigma as u64 * n as u64 / 12
}

/// `n(64σ+3)`.
pub fn upper_bound_cap(n: usize, sigma: u32) -> u64 {
    n as u64 * (64 * sigma as u64 + 3)
}

/// Counts, bound constants and phase timings for one input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub sigma: u32,
    pub distinct: u64,
    pub occurrences: u64,
    pub candidates: u64,
    #[serde(rename = "maxPerSuffix")]
    pub max_per_suffix: u64,
    pub max_prefix_squares: u64,
    pub lower_bound_target: u64,
    pub upper_bound_cap: u64,
    /// Set for family inputs only.
    pub lower_bound_met: Option<bool>,
    pub t_build_ms: f64,
    pub t_enum_ms: f64,
}

impl BoundReport {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(self).map_err(|e| Error::Report(e.to_string()))
    }
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    sigma: u32,
    distinct: u64,
    occurrences: u64,
    candidates: u64,
    #[serde(rename = "maxPerSuffix")]
    max_per_suffix: u64,
    t_build_ms: f64,
    t_enum_ms: f64,
}

/// Writes reports as CSV with a header row.
pub fn write_csv<W: Write>(out: W, reports: &[BoundReport]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for r in reports {
        writer
            .serialize(CsvRow {
                n: r.n,
                sigma: r.sigma,
                distinct: r.distinct,
                occurrences: r.occurrences,
                candidates: r.candidates,
                max_per_suffix: r.max_per_suffix,
                t_build_ms: r.t_build_ms,
                t_enum_ms: r.t_enum_ms,
            })
            .map_err(|e| Error::Report(e.to_string()))?;
    }
    writer.flush().map_err(|e| Error::Report(e.to_string()))
}

/// Writes one JSON object per line.
pub fn write_jsonl<W: Write>(mut out: W, reports: &[BoundReport]) -> Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json()?).map_err(|e| Error::Report(e.to_string()))?;
    }
    Ok(())
}

fn measure(s: &Sequence, reps: usize) -> BoundReport {
    let reps = reps.max(1);
    let mut build_ms = Vec::with_capacity(reps);
    let mut enum_ms = Vec::with_capacity(reps);
    let mut last = None;
    for _ in 0..reps {
        let t0 = Instant::now();
        let enumerator = Enumerator::new(s);
        let t1 = Instant::now();
        let result = enumerator.enumerate();
        let t2 = Instant::now();
        build_ms.push((t1 - t0).as_secs_f64() * 1e3);
        enum_ms.push((t2 - t1).as_secs_f64() * 1e3);
        last = Some((enumerator, result));
    }
    let (enumerator, result) = last.expect("at least one repetition");
    let mut per_start = vec![0u64; s.len() + 1];
    for o in &result.occurrences {
        per_start[o.start] += 1;
    }
    BoundReport {
        n: s.len(),
        sigma: s.sigma(),
        distinct: enumerator.count_distinct(&result.occurrences) as u64,
        occurrences: result.occurrences.len() as u64,
        candidates: result.audit.total,
        max_per_suffix: result.audit.max_per_suffix,
        max_prefix_squares: per_start.into_iter().max().unwrap_or(0),
        lower_bound_target: lower_bound_target(s.len(), s.sigma()),
        upper_bound_cap: upper_bound_cap(s.len(), s.sigma()),
        lower_bound_met: None,
        t_build_ms: median(&mut build_ms),
        t_enum_ms: median(&mut enum_ms),
    }
}

/// Median of a nonempty sample.
pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        (values[m - 1] + values[m]) / 2.0
    }
}

fn check_upper(report: &BoundReport) -> Result<()> {
    let per_suffix = 64 * report.sigma as u64 + 3;
    if report.max_prefix_squares > per_suffix {
        return Err(Error::BoundViolation(format!(
            "a suffix has {} op-square prefixes, above 64σ+3 = {per_suffix}",
            report.max_prefix_squares
        )));
    }
    if report.distinct > report.upper_bound_cap {
        return Err(Error::BoundViolation(format!(
            "{} distinct op-squares, above n(64σ+3) = {}",
            report.distinct, report.upper_bound_cap
        )));
    }
    Ok(())
}

/// Enumerates, counts and checks the per-suffix and total upper bounds.
pub fn audit_bounds(s: &Sequence) -> Result<BoundReport> {
    audit_bounds_timed(s, 1)
}

/// [`audit_bounds`] with phase times taken as medians over `reps` runs.
pub fn audit_bounds_timed(s: &Sequence, reps: usize) -> Result<BoundReport> {
    let report = measure(s, reps);
    check_upper(&report)?;
    Ok(report)
}

/// [`audit_bounds`] on `family(σ, k)`, also recording whether the distinct
/// count reaches `⌊σn/12⌋`.
pub fn audit_family(sigma: u32, k: usize, reps: usize) -> Result<BoundReport> {
    let s = generate_lower_bound_family(sigma, k)?;
    let mut report = audit_bounds_timed(&s, reps)?;
    report.lower_bound_met = Some(report.distinct >= report.lower_bound_target);
    Ok(report)
}

/// Kind of input in a benchmark sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workload {
    Family,
    Random { seed: u64 },
}

/// Runs one report per `(σ, n)` pair. Family inputs use `k = ⌈n/σ⌉`.
pub fn run_sweep(
    workload: Workload,
    sigmas: &[u32],
    lengths: &[usize],
    reps: usize,
) -> Result<Vec<BoundReport>> {
    let mut reports = Vec::new();
    for &sigma in sigmas {
        for &n in lengths {
            let report = match workload {
                Workload::Family => audit_family(sigma, n.div_ceil(sigma as usize).max(1), reps)?,
                Workload::Random { seed } => audit_bounds_timed(&generate_random(n, sigma, seed)?, reps)?,
            };
            reports.push(report);
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_distinct;

    #[test]
    fn family_examples() {
        assert_eq!(
            generate_lower_bound_family(3, 2).unwrap().as_slice(),
            &[1, 1, 2, 2, 3, 3]
        );
        assert_eq!(generate_lower_bound_family(1, 4).unwrap().as_slice(), &[1; 4]);
        let s = generate_lower_bound_family(4, 3).unwrap();
        assert_eq!(s.len(), 12);
        assert_eq!(s.to_string(), "1 1 1 2 2 2 3 3 3 4 4 4");
        assert!(generate_lower_bound_family(0, 3).is_err());
        assert!(generate_lower_bound_family(2, 0).is_err());
    }

    #[test]
    fn expected_count_examples() {
        assert_eq!(expected_family_count(4, 3), 8);
        assert_eq!(expected_family_count(3, 1), 2);
        assert_eq!(expected_family_count(2, 4), 2);
        assert!(brute_force_distinct(&generate_lower_bound_family(4, 3).unwrap()).unwrap() >= 8);
    }

    #[test]
    fn expected_count_is_a_lower_bound_from_sigma_two() {
        for sigma in 2..=6 {
            for k in 1..=8 {
                let s = generate_lower_bound_family(sigma, k).unwrap();
                let distinct = brute_force_distinct(&s).unwrap() as u64;
                assert!(
                    distinct >= expected_family_count(sigma, k),
                    "σ={sigma} k={k}: {distinct}"
                );
            }
        }
    }

    #[test]
    fn unary_family_has_no_op_squares() {
        for k in 1..=20 {
            let s = generate_lower_bound_family(1, k).unwrap();
            assert_eq!(brute_force_distinct(&s).unwrap(), 0);
        }
    }

    #[test]
    fn random_examples() {
        assert_eq!(generate_random(5, 1, 99).unwrap().as_slice(), &[1; 5]);
        assert_eq!(
            generate_random(50, 4, 7).unwrap(),
            generate_random(50, 4, 7).unwrap()
        );
        assert_ne!(
            generate_random(50, 4, 7).unwrap(),
            generate_random(50, 4, 8).unwrap()
        );
        let s = generate_random(1000, 8, 1).unwrap();
        assert!(s.as_slice().iter().all(|&c| (1..=8).contains(&c)));
        assert!(generate_random(3, 4, 1).is_err());
        assert!(generate_random(0, 1, 1).is_err());
    }

    #[test]
    fn random_window_matches_oracle() {
        let s = generate_random(10_000, 4, 7).unwrap();
        let window = Sequence::normalized(&s.as_slice()[4000..4300]).unwrap();
        let got = crate::enumerator::enumerate_op_squares(&window);
        assert_eq!(got, crate::oracle::brute_force_enumerate(&window).unwrap());
        assert!(!got.is_empty());
    }

    #[test]
    fn audit_examples() {
        let r = audit_family(4, 3, 1).unwrap();
        assert!(r.distinct >= 8);
        assert_eq!(r.lower_bound_target, 4);
        assert_eq!(r.lower_bound_met, Some(true));

        let r = audit_bounds(&Sequence::from_chars(vec![1; 4]).unwrap()).unwrap();
        assert_eq!((r.distinct, r.occurrences), (0, 0));
        assert_eq!(r.lower_bound_met, None);
        assert_eq!(r.upper_bound_cap, 4 * 67);

        let r = audit_family(1, 12, 1).unwrap();
        assert_eq!(r.lower_bound_met, Some(false));
    }

    #[test]
    fn report_serialization() {
        let reports = run_sweep(Workload::Family, &[2, 4], &[64, 128], 1).unwrap();
        assert_eq!(reports.len(), 4);
        let mut json = Vec::new();
        write_jsonl(&mut json, &reports).unwrap();
        let text = String::from_utf8(json).unwrap();
        assert_eq!(text.lines().count(), 4);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["n"], 64);
        assert!(first.get("maxPerSuffix").is_some());

        let mut csv_out = Vec::new();
        write_csv(&mut csv_out, &reports).unwrap();
        let text = String::from_utf8(csv_out).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "n,sigma,distinct,occurrences,candidates,maxPerSuffix,t_build_ms,t_enum_ms"
        );
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn median_examples() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
