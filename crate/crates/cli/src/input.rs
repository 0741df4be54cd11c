use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use opsq_core::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `ints` if the input contains whitespace, else `ascii`.
    Auto,
    /// One character per byte, ranked by byte value.
    Ascii,
    /// Whitespace-separated positive integers, ranked by value.
    Ints,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Inline input; read from --file or stdin when absent.
    pub text: Option<String>,
    /// Read the input from a file.
    #[arg(long, short, conflicts_with = "text")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

impl InputArgs {
    pub fn is_given(&self) -> bool {
        self.text.is_some() || self.file.is_some()
    }

    pub fn read(&self) -> Result<Sequence> {
        let raw = match (&self.text, &self.file) {
            (Some(text), _) => text.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?,
            (None, None) => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .context("cannot read stdin")?;
                buf
            }
        };
        parse(&raw, self.format)
    }
}

/// Parses `raw` and normalizes it to ranks `1..σ`.
pub fn parse(raw: &str, format: Format) -> Result<Sequence> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        bail!("empty input");
    }
    let format = match format {
        Format::Auto if trimmed.contains(char::is_whitespace) => Format::Ints,
        Format::Auto => Format::Ascii,
        other => other,
    };
    let seq = match format {
        Format::Ascii => Sequence::normalized(trimmed.as_bytes()),
        _ => {
            let values = trimmed
                .split_whitespace()
                .map(|tok| match tok.parse::<u64>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => bail!("not a positive integer: {tok:?}"),
                })
                .collect::<Result<Vec<u64>>>()?;
            Sequence::normalized(&values)
        }
    };
    Ok(seq?)
}

/// Renders `s` in `format`; `ascii` maps `1..σ` to `a..z`.
pub fn render(s: &Sequence, format: Format) -> Result<String> {
    match format {
        Format::Ascii => {
            if s.sigma() > 26 {
                bail!("ascii output needs sigma <= 26, got {}", s.sigma());
            }
            Ok(s.as_slice().iter().map(|&c| (b'a' + (c - 1) as u8) as char).collect())
        }
        _ => Ok(s.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detects_format() {
        assert_eq!(parse("1122", Format::Auto).unwrap().as_slice(), &[1, 1, 2, 2]);
        assert_eq!(parse("10 2 10\n", Format::Auto).unwrap().as_slice(), &[2, 1, 2]);
        assert_eq!(parse("acb", Format::Auto).unwrap().as_slice(), &[1, 3, 2]);
        assert_eq!(parse("12", Format::Ints).unwrap().as_slice(), &[1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("  \n", Format::Auto).is_err());
        assert!(parse("1 0 2", Format::Ints).is_err());
        assert!(parse("1 x", Format::Ints).is_err());
    }

    #[test]
    fn render_round_trips() {
        let s = parse("3 1 2 3", Format::Ints).unwrap();
        assert_eq!(render(&s, Format::Ascii).unwrap(), "cabc");
        assert_eq!(render(&s, Format::Ints).unwrap(), "3 1 2 3");
        assert_eq!(parse(&render(&s, Format::Ascii).unwrap(), Format::Auto).unwrap(), s);
    }
}
