mod input;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use opsq_core::genbench::{self, Workload};
use opsq_core::{Enumerator, SquareOccurrence};

use input::{Format, InputArgs};
use verify::{Checker, Mismatch, SuiteReport};

#[derive(Debug, Parser)]
#[command(name = "opsq", version, about = "Order-preserving square enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List op-square occurrences as 1-based (start, length) pairs.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Print the number of occurrences and of distinct op-square words.
    Count {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Check the enumerator against the brute-force oracle.
    Verify {
        /// Optional extra input to check.
        #[command(flatten)]
        input: InputArgs,
        /// Longest string of the exhaustive suite.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Alphabet size of the exhaustive suite.
        #[arg(long, default_value_t = 3)]
        sigma: u32,
        /// Number of random cases (n ≤ 200, σ ≤ 8); 0 skips the suite.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print a lower-bound family string or a random string.
    Generate {
        /// Generate 1^k 2^k ... σ^k instead of a random string.
        #[arg(long)]
        family: bool,
        #[arg(long)]
        sigma: u32,
        /// Run length of the family.
        #[arg(long)]
        k: Option<usize>,
        /// Length of the random string.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Ints)]
        format: Format,
    },
    /// Audit bounds and time both phases over a sweep of (σ, n).
    Bench {
        /// Use family inputs (k = ⌈n/σ⌉) instead of random ones.
        #[arg(long)]
        family: bool,
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions per case; times are medians.
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = Output::Jsonl)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Enumerate { input, output } => {
            let s = input.read()?;
            let occurrences = Enumerator::new(&s).enumerate().occurrences;
            match output {
                Output::Text => {
                    for o in &occurrences {
                        writeln!(out, "{} {}", o.start, o.len)?;
                    }
                }
                Output::Jsonl => {
                    for o in &occurrences {
                        writeln!(out, "{}", serde_json::to_string(o)?)?;
                    }
                }
                Output::Csv => {
                    writeln!(out, "start,len")?;
                    for o in &occurrences {
                        writeln!(out, "{},{}", o.start, o.len)?;
                    }
                }
            }
        }
        Command::Count { input, output } => {
            let s = input.read()?;
            let e = Enumerator::new(&s);
            let occurrences = e.enumerate().occurrences;
            let (total, distinct) = (occurrences.len(), e.count_distinct(&occurrences));
            match output {
                Output::Text => writeln!(out, "occurrences={total}\ndistinct={distinct}")?,
                Output::Jsonl => writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "occurrences": total, "distinct": distinct })
                )?,
                Output::Csv => writeln!(out, "occurrences,distinct\n{total},{distinct}")?,
            }
        }
        Command::Verify {
            input,
            max_n,
            sigma,
            cases,
            seed,
            inject_fault,
        } => {
            if max_n == 0 || sigma == 0 {
                bail!("--max-n and --sigma must be positive");
            }
            let checker = Checker { inject_fault };
            let mut reports = Vec::new();
            if input.is_given() {
                reports.push(checker.single(&input.read()?));
            }
            reports.push(checker.exhaustive(max_n, sigma));
            if cases > 0 {
                reports.push(checker.random(cases, seed));
            }
            let mut ok = true;
            for r in &reports {
                print_suite(&mut out, r)?;
                ok &= r.passed();
            }
            out.flush()?;
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Generate {
            family,
            sigma,
            k,
            n,
            seed,
            format,
        } => {
            let s = match (family, k, n) {
                (true, Some(k), _) => genbench::generate_lower_bound_family(sigma, k)?,
                (true, None, _) => bail!("--family needs --k"),
                (false, _, Some(n)) => genbench::generate_random(n, sigma, seed)?,
                (false, _, None) => bail!("random generation needs --n"),
            };
            writeln!(out, "{}", input::render(&s, format)?)?;
        }
        Command::Bench {
            family,
            sigma,
            n,
            seed,
            reps,
            output,
        } => {
            let workload = if family {
                Workload::Family
            } else {
                Workload::Random { seed }
            };
            let reports = genbench::run_sweep(workload, &sigma, &n, reps)?;
            match output {
                Output::Csv => genbench::write_csv(&mut out, &reports)?,
                _ => genbench::write_jsonl(&mut out, &reports)?,
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn print_suite(out: &mut impl Write, r: &SuiteReport) -> Result<()> {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{}: {status}", r.name)?;
    writeln!(out, "  {} of {} cases passed", r.cases - r.failures, r.cases)?;
    if let Some(m) = &r.counterexample {
        print_mismatch(out, m)?;
    }
    Ok(())
}

fn print_mismatch(out: &mut impl Write, m: &Mismatch) -> Result<()> {
    let pairs = |occ: &[SquareOccurrence]| {
        occ.iter()
            .map(|o| format!("({},{})", o.start, o.len))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "  counterexample: {}", m.input)?;
    writeln!(
        out,
        "  expected: distinct={} occurrences=[{}]",
        m.expected.distinct,
        pairs(&m.expected.occurrences)
    )?;
    writeln!(
        out,
        "  got:      distinct={} occurrences=[{}]",
        m.got.distinct,
        pairs(&m.got.occurrences)
    )?;
    Ok(())
}
