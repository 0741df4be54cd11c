//! Brute-force reference implementations.
//!
//! Nothing here uses the code/cnt machinery, the suffix trees or the
//! enumerator: isomorphism is decided by comparing dense ranks directly.

use std::collections::HashSet;

use crate::enumerator::SquareOccurrence;
use crate::error::{Error, Result};
use crate::sequence::Sequence;

pub const DEFAULT_ORACLE_CAP: usize = 2000;

/// Whether `u` and `v` have the same relative order at every pair of
/// positions, decided by comparing their dense rank vectors.
pub fn order_isomorphic(u: &[u32], v: &[u32]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    // cheap necessary condition: adjacent comparisons agree
    if u
        .windows(2)
        .zip(v.windows(2))
        .any(|(a, b)| a[0].cmp(&a[1]) != b[0].cmp(&b[1]))
    {
        return false;
    }
    dense_ranks(u) == dense_ranks(v)
}

fn dense_ranks(s: &[u32]) -> Vec<usize> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    s.iter()
        .map(|c| sorted.binary_search(c).expect("value present"))
        .collect()
}

fn check_cap(s: &Sequence, cap: usize) -> Result<()> {
    if s.len() > cap {
        return Err(Error::CapExceeded { len: s.len(), cap });
    }
    Ok(())
}

fn is_square_at(w: &[u32], start: usize, half: usize) -> bool {
    let u = &w[start..start + half];
    let v = &w[start + half..start + 2 * half];
    u != v && order_isomorphic(u, v)
}

pub fn brute_force_enumerate(s: &Sequence) -> Result<Vec<SquareOccurrence>> {
    brute_force_enumerate_with_cap(s, DEFAULT_ORACLE_CAP)
}

/// Every `(start, 2ℓ)` whose arms are order-isomorphic and unequal, sorted.
pub fn brute_force_enumerate_with_cap(s: &Sequence, cap: usize) -> Result<Vec<SquareOccurrence>> {
    check_cap(s, cap)?;
    let w = s.as_slice();
    let n = w.len();
    let mut out = Vec::new();
    for start in 0..n {
        for half in 1..=(n - start) / 2 {
            if is_square_at(w, start, half) {
                out.push(SquareOccurrence {
                    start: start + 1,
                    len: 2 * half,
                });
            }
        }
    }
    Ok(out)
}

pub fn brute_force_distinct(s: &Sequence) -> Result<usize> {
    brute_force_distinct_with_cap(s, DEFAULT_ORACLE_CAP)
}

/// Number of distinct words among all op-square occurrences.
pub fn brute_force_distinct_with_cap(s: &Sequence, cap: usize) -> Result<usize> {
    let w = s.as_slice();
    let words: HashSet<&[u32]> = brute_force_enumerate_with_cap(s, cap)?
        .iter()
        .map(|o| &w[o.start - 1..o.start - 1 + o.len])
        .collect();
    Ok(words.len())
}

pub fn brute_force_prefix_squares(s: &Sequence) -> Result<Vec<usize>> {
    brute_force_prefix_squares_with_cap(s, DEFAULT_ORACLE_CAP)
}

/// Every even `2ℓ` such that `s[1..2ℓ]` is an op-square, ascending.
pub fn brute_force_prefix_squares_with_cap(s: &Sequence, cap: usize) -> Result<Vec<usize>> {
    check_cap(s, cap)?;
    let w = s.as_slice();
    Ok((1..=w.len() / 2)
        .filter(|&half| is_square_at(w, 0, half))
        .map(|half| 2 * half)
        .collect())
}

/// Op-square prefix counts of every suffix `w[i..n]`, for `i = 1..=n`.
pub fn prefix_square_counts(s: &Sequence) -> Result<Vec<usize>> {
    check_cap(s, DEFAULT_ORACLE_CAP)?;
    let w = s.as_slice();
    let n = w.len();
    Ok((0..n)
        .map(|start| {
            (1..=(n - start) / 2)
                .filter(|&half| is_square_at(w, start, half))
                .count()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u32]) -> Sequence {
        Sequence::from_chars(v.to_vec()).unwrap()
    }

    fn occ(pairs: &[(usize, usize)]) -> Vec<SquareOccurrence> {
        pairs
            .iter()
            .map(|&(start, len)| SquareOccurrence { start, len })
            .collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            brute_force_enumerate(&seq(&[1, 1, 2, 2])).unwrap(),
            occ(&[(1, 4), (2, 2)])
        );
        assert!(brute_force_enumerate(&seq(&[1])).unwrap().is_empty());
        assert_eq!(brute_force_enumerate(&seq(&[1, 2])).unwrap(), occ(&[(1, 2)]));
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(brute_force_distinct(&seq(&[1, 2, 1, 2])).unwrap(), 2);
        assert_eq!(brute_force_distinct(&seq(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(brute_force_distinct(&seq(&[1, 1, 2, 2])).unwrap(), 2);
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(brute_force_prefix_squares(&seq(&[1, 1, 2, 2])).unwrap(), vec![4]);
        assert!(brute_force_prefix_squares(&seq(&[1, 1])).unwrap().is_empty());
        assert_eq!(brute_force_prefix_squares(&seq(&[1, 2, 3, 3])).unwrap(), vec![2]);
    }

    #[test]
    fn isomorphism_examples() {
        // acb vs azd with a<b<c<d<z
        assert!(order_isomorphic(&[1, 3, 2], &[1, 5, 4]));
        assert!(!order_isomorphic(&[1, 2], &[2, 1]));
        assert!(!order_isomorphic(&[1, 2], &[1, 1]));
        assert!(!order_isomorphic(&[1, 2, 1], &[1, 2, 3]));
        assert!(!order_isomorphic(&[1], &[1, 1]));
    }

    #[test]
    fn cap_is_enforced() {
        let s = Sequence::from_chars(vec![1; 11]).unwrap();
        assert_eq!(
            brute_force_enumerate_with_cap(&s, 10),
            Err(Error::CapExceeded { len: 11, cap: 10 })
        );
        assert!(brute_force_distinct_with_cap(&s, 10).is_err());
        assert!(brute_force_prefix_squares_with_cap(&s, 10).is_err());
    }

    fn small_sequence() -> impl Strategy<Value = Sequence> {
        (1u32..=5).prop_flat_map(|sigma| {
            prop::collection::vec(1..=sigma, 1..40).prop_map(|v| Sequence::normalized(&v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn prefix_squares_are_start_one_occurrences(s in small_sequence()) {
            let from_enum: Vec<usize> = brute_force_enumerate(&s)
                .unwrap()
                .into_iter()
                .filter(|o| o.start == 1)
                .map(|o| o.len)
                .collect();
            prop_assert_eq!(brute_force_prefix_squares(&s).unwrap(), from_enum);
        }

        #[test]
        fn prefix_counts_within_per_suffix_bound(s in small_sequence()) {
            let bound = 64 * s.sigma() as usize + 3;
            for (idx, count) in prefix_square_counts(&s).unwrap().into_iter().enumerate() {
                prop_assert!(count <= bound, "suffix {} has {} prefixes", idx + 1, count);
                let suffix = s.suffix(idx + 1).unwrap();
                prop_assert_eq!(brute_force_prefix_squares(&suffix).unwrap().len(), count);
            }
        }

        #[test]
        fn isomorphism_matches_pairwise_definition(
            u in prop::collection::vec(1u32..4, 0..8),
            v in prop::collection::vec(1u32..4, 0..8),
        ) {
            let pairwise = u.len() == v.len()
                && (0..u.len()).all(|a| (0..u.len()).all(|b| (u[a] <= u[b]) == (v[a] <= v[b])));
            prop_assert_eq!(order_isomorphic(&u, &v), pairwise);
        }
    }
}
