use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A non-empty string over the dense alphabet `{1..σ}`.
///
/// Positions are 1-based in every accessor; `as_slice` exposes the raw
/// storage for callers that index it themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    chars: Vec<u32>,
    sigma: u32,
}

impl Sequence {
    /// Wraps `chars` as a sequence over `{1..sigma}`.
    pub fn new(chars: Vec<u32>, sigma: u32) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::EmptySequence);
        }
        if sigma == 0 || sigma as usize > chars.len() {
            return Err(Error::InvalidAlphabet {
                sigma,
                len: chars.len(),
            });
        }
        if let Some((idx, &value)) = chars
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > sigma)
        {
            return Err(Error::CharacterOutOfAlphabet {
                position: idx + 1,
                value,
                sigma,
            });
        }
        Ok(Self { chars, sigma })
    }

    /// Sequence over `{1..σ}` whose alphabet is exactly the characters used.
    pub fn from_chars(chars: Vec<u32>) -> Result<Self> {
        let sigma = chars.iter().copied().max().unwrap_or(0);
        Self::new(chars, sigma)
    }

    /// Remaps arbitrary ordered values to their ranks among the distinct
    /// values, so `σ` becomes the number of distinct characters.
    pub fn normalized<T: Ord + Copy>(values: &[T]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut ranks: BTreeMap<T, u32> = values.iter().map(|&v| (v, 0)).collect();
        for (rank, slot) in ranks.values_mut().enumerate() {
            *slot = rank as u32 + 1;
        }
        let sigma = ranks.len() as u32;
        let chars = values.iter().map(|v| ranks[v]).collect();
        Ok(Self { chars, sigma })
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// Character at 1-based position `i`.
    ///
    /// Panics when `i` is outside `[1, n]`.
    pub fn at(&self, i: usize) -> u32 {
        self.chars[i - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.chars
    }

    /// The fragment `w[start..start+len-1]` (1-based, inclusive).
    pub fn fragment(&self, start: usize, len: usize) -> Result<&[u32]> {
        if start == 0 || start + len > self.len() + 1 {
            return Err(Error::FragmentOverflow {
                start,
                len,
                n: self.len(),
            });
        }
        Ok(&self.chars[start - 1..start - 1 + len])
    }

    /// The suffix `w[start..n]`.
    pub fn suffix(&self, start: usize) -> Result<Sequence> {
        if start == 0 || start > self.len() {
            return Err(crate::error::out_of_range(
                "suffix start",
                format!("{start} not in [1, {}]", self.len()),
            ));
        }
        Ok(Sequence::normalized(&self.chars[start - 1..]).expect("non-empty suffix"))
    }
}

impl std::fmt::Display for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (idx, c) in self.chars.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
