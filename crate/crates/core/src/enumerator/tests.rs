use proptest::prelude::*;

use super::*;
use crate::opcore::is_op_isomorphic;
use crate::oracle::brute_force_enumerate;
use crate::suffix_tree::tests::all_strings;

fn seq(v: &[u32]) -> Sequence {
    Sequence::normalized(v).unwrap()
}

fn occ(pairs: &[(usize, usize)]) -> Vec<SquareOccurrence> {
    pairs
        .iter()
        .map(|&(start, len)| SquareOccurrence { start, len })
        .collect()
}

#[test]
fn leftmost_examples() {
    let scan = scan_leftmost(&seq(&[2, 1, 3, 1, 2]));
    assert_eq!(scan.state(1).positions, vec![1, 2, 3]);
    assert_eq!(scan.state(5).positions, vec![5]);
    assert_eq!(scan.state(3).positions, vec![3, 4, 5]);

    let scan = scan_leftmost(&seq(&[1, 2, 1]));
    assert_eq!(scan.iprev, vec![0, 0, 0, 1]);
}

#[test]
fn group_examples() {
    let groups = |positions: Vec<usize>| {
        let g = group_leftmost(&LeftmostState { i: 1, positions });
        g.iter().map(|(k, m)| (k, m.to_vec())).collect::<Vec<_>>()
    };
    assert_eq!(groups(vec![1, 2, 3]), vec![(0, vec![1]), (1, vec![2, 3])]);
    assert_eq!(groups(vec![1]), vec![(0, vec![1])]);
    assert_eq!(
        groups(vec![1, 4, 8]),
        vec![(0, vec![1]), (2, vec![4]), (3, vec![8])]
    );
    let shifted = group_leftmost(&LeftmostState {
        i: 5,
        positions: vec![5, 6, 7],
    });
    assert_eq!(shifted.get(1), &[2, 3]);
    assert_eq!(shifted.get(2), &[] as &[usize]);
    assert_eq!(shifted.total(), 3);
}

#[test]
fn k_active_examples() {
    let spans = |table: &ActivityTable, p: usize| {
        table
            .ranges(p)
            .map(|r| (r.k, r.start, r.end))
            .collect::<Vec<_>>()
    };
    let mut iprev = vec![0; 9];
    let table = compute_k_active(&iprev, 8);
    assert_eq!(
        spans(&table, 8),
        vec![(0, 8, 8), (1, 6, 7), (2, 2, 5), (3, 1, 1)]
    );
    assert_eq!(table.max_scale(8), 3);
    assert_eq!(spans(&table, 1), vec![(0, 1, 1)]);

    iprev[5] = 3;
    let table = compute_k_active(&iprev, 8);
    assert_eq!(spans(&table, 5), vec![(0, 5, 5), (1, 4, 4)]);
    assert_eq!(table.max_scale(5), 1);
    assert_eq!(table.range(5, 2), None);
}

#[test]
fn enumerate_examples() {
    assert_eq!(enumerate_op_squares(&seq(&[1, 1, 2, 2])), occ(&[(1, 4), (2, 2)]));
    assert!(enumerate_op_squares(&seq(&[1, 1, 1, 1])).is_empty());
    assert_eq!(
        enumerate_op_squares(&seq(&[1, 2, 1, 2])),
        occ(&[(1, 2), (2, 2), (3, 2)])
    );
    assert!(enumerate_op_squares(&seq(&[7])).is_empty());
}

#[test]
fn verify_examples() {
    let e = Enumerator::new(&seq(&[1, 1, 2, 2]));
    assert_eq!(e.verify_candidate(1, 4), Ok(true));
    assert_eq!(e.verify_candidate(1, 3), Err(Error::OddLength(3)));
    assert!(matches!(
        e.verify_candidate(2, 4),
        Err(Error::FragmentOverflow { .. })
    ));
    assert!(e.verify_candidate(0, 2).is_err());
    assert_eq!(Enumerator::new(&seq(&[1, 1])).verify_candidate(1, 2), Ok(false));
    assert_eq!(Enumerator::new(&seq(&[1, 2])).verify_candidate(1, 2), Ok(true));
}

#[test]
fn candidate_examples() {
    let e = Enumerator::new(&seq(&[1, 1, 2, 2]));
    let scan = scan_leftmost(e.sequence());
    assert!(e.candidates_for_suffix(scan.state(1)).contains(&4));
    assert!(e.candidates_for_suffix(scan.state(4)).is_empty());

    // a c b a d b x z with a<b<c<d<x<z
    let e = Enumerator::new(&seq(&[1, 3, 2, 1, 4, 2, 5, 6]));
    let scan = scan_leftmost(e.sequence());
    assert!(e.candidates_for_suffix(scan.state(1)).contains(&6));
    assert!(e
        .enumerate()
        .occurrences
        .contains(&SquareOccurrence { start: 1, len: 6 }));
}

#[test]
fn result_index_example() {
    // p = 3, k = 1 in 1 1 2 2, active at i' ∈ {1, 2}
    let e = Enumerator::new(&seq(&[1, 1, 2, 2]));
    let activity = e.activity();
    let results = e.results();
    let r = activity.range(3, 1).unwrap();
    assert_eq!((r.start, r.end), (1, 2));
    // length 1: only y = 3 covers p, and single characters always match
    assert_eq!(results.lookup(3, 1, 1, Scale::Half), &[3]);
    assert_eq!(results.lookup(3, 1, 2, Scale::Half), &[3]);
    // length 2: y ∈ {2, 3} cover p with "12" and "22"
    assert_eq!(results.lookup(3, 1, 1, Scale::Full), &[3]);
    assert_eq!(results.lookup(3, 1, 2, Scale::Full), &[2]);
    assert!(results.lookup(3, 0, 3, Scale::Half).is_empty());
    assert!(results.lookup(3, 1, 3, Scale::Half).is_empty());
    assert!(results.audit(e.sequence()).unwrap() > 0);
}

#[test]
fn distinct_examples() {
    let s = seq(&[1, 2, 1, 2]);
    assert_eq!(count_distinct_as_words(&enumerate_op_squares(&s), &s), 2);
    assert_eq!(count_distinct_as_words(&[], &s), 0);
    let s = seq(&[1, 1, 2, 2]);
    assert_eq!(count_distinct_as_words(&enumerate_op_squares(&s), &s), 2);
    let e = Enumerator::new(&s);
    assert_eq!(e.count_distinct(&e.enumerate().occurrences), 2);
}

#[test]
fn exhaustive_small_matches_oracle() {
    for n in 1..=8 {
        for sigma in 1..=3 {
            for w in all_strings(n, sigma) {
                let s = seq(&w);
                assert_eq!(
                    enumerate_op_squares(&s),
                    brute_force_enumerate(&s).unwrap(),
                    "{w:?}"
                );
            }
        }
    }
}

/// A leftmost pair `p`, `p + ℓ` with `p` in the left arm witnesses every
/// occurrence `(i, 2ℓ)`.
#[test]
fn leftmost_pair_witness() {
    for n in 2..=8 {
        for w in all_strings(n, 3) {
            let s = seq(&w);
            let scan = scan_leftmost(&s);
            for o in enumerate_op_squares(&s) {
                let lm = &scan.state(o.start).positions;
                let half = o.half();
                assert!(
                    (o.start..o.start + half).any(|p| lm.contains(&p) && lm.contains(&(p + half))),
                    "{w:?} {o:?}"
                );
            }
        }
    }
}

fn sequence_strategy(max_len: usize, max_sigma: u32) -> impl Strategy<Value = Sequence> {
    (1..=max_sigma).prop_flat_map(move |sigma| {
        prop::collection::vec(1..=sigma, 1..=max_len).prop_map(|v| Sequence::normalized(&v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_oracle(s in sequence_strategy(120, 8)) {
        let e = Enumerator::new(&s);
        let result = e.enumerate();
        prop_assert_eq!(&result.occurrences, &brute_force_enumerate(&s).unwrap());
        prop_assert!(result.audit.within(64));
    }

    #[test]
    fn scanner_iprev_matches_forward_pass(s in sequence_strategy(80, 6)) {
        let scan = scan_leftmost(&s);
        prop_assert_eq!(&scan.iprev, &compute_iprev(&s));
        for state in &scan.states {
            let i = state.i;
            let expected: Vec<usize> = (i..=s.len())
                .filter(|&p| scan.iprev[p] < i)
                .collect();
            prop_assert_eq!(&state.positions, &expected);
            prop_assert!(state.positions.len() <= s.sigma() as usize);
        }
    }

    #[test]
    fn k_active_ranges_match_definition(s in sequence_strategy(80, 6)) {
        let n = s.len();
        let iprev = compute_iprev(&s);
        let table = compute_k_active(&iprev, n);
        let mut mass = 0u64;
        for (p, &prev) in iprev.iter().enumerate().skip(1) {
            for k in 0..=table.max_scale(p) {
                mass += 1 << k;
                let r = table.range(p, k).unwrap();
                prop_assert!(r.len() <= 1 << k);
                for i in 1..=n {
                    let active = i <= p && prev < i
                        && (1usize << k) <= p - i + 1 && p - i + 1 < (2usize << k);
                    prop_assert_eq!(r.contains(i), active, "p={} k={} i={}", p, k, i);
                }
            }
            prop_assert!(table.range(p, table.max_scale(p) + 1).is_none());
        }
        prop_assert_eq!(table.dyadic_mass(), mass);
    }

    #[test]
    fn result_index_is_sound_and_complete(s in sequence_strategy(64, 5)) {
        let e = Enumerator::new(&s);
        let activity = e.activity();
        let results = e.results();
        results.audit(&s).unwrap();
        let w = s.as_slice();
        let n = s.len();
        for p in 1..=n {
            for r in activity.ranges(p).filter(|r| r.k >= 1) {
                for scale in [Scale::Half, Scale::Full] {
                    let len = scale.length(r.k);
                    for i in r.start..=r.end {
                        let mut got: Vec<u32> = results.lookup(p, r.k, i, scale).to_vec();
                        got.sort_unstable();
                        let expected: Vec<u32> = if i + len - 1 > n {
                            Vec::new()
                        } else {
                            ((p + 1).saturating_sub(len).max(1)..=p)
                                .filter(|&y| y + len - 1 <= n)
                                .filter(|&y| is_op_isomorphic(&w[i - 1..i - 1 + len], &w[y - 1..y - 1 + len]))
                                .map(|y| y as u32)
                                .collect()
                        };
                        prop_assert_eq!(got, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_matches_word_set(s in sequence_strategy(80, 4)) {
        let occurrences = enumerate_op_squares(&s);
        let w = s.as_slice();
        let words: std::collections::HashSet<&[u32]> = occurrences
            .iter()
            .map(|o| &w[o.start - 1..o.start - 1 + o.len])
            .collect();
        prop_assert_eq!(count_distinct_as_words(&occurrences, &s), words.len());
        prop_assert!(words.len() <= s.len() * (64 * s.sigma() as usize + 3));
    }
}
