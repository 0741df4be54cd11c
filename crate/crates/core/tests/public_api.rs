use opsq_core::genbench::{audit_bounds, audit_family, expected_family_count, generate_lower_bound_family, run_sweep, Workload};
use opsq_core::oracle::{brute_force_distinct, brute_force_enumerate};
use opsq_core::{count_distinct_as_words, enumerate_op_squares, Enumerator, Error, Sequence, SquareOccurrence};

fn seq(v: &[u32]) -> Sequence {
    Sequence::normalized(v).unwrap()
}

#[test]
fn occurrences_are_sorted_and_one_based() {
    let s = seq(&[1, 3, 2, 1, 4, 2, 5, 6]);
    let occ = enumerate_op_squares(&s);
    assert!(occ.windows(2).all(|p| p[0] < p[1]));
    assert!(occ.contains(&SquareOccurrence { start: 1, len: 6 }));
    assert!(occ.iter().all(|o| o.start >= 1 && o.len % 2 == 0 && o.start + o.len - 1 <= s.len()));
    assert_eq!(occ, brute_force_enumerate(&s).unwrap());
}

#[test]
fn distinct_counts_agree_with_brute_force() {
    for v in [&[1, 2, 1, 2][..], &[1, 1, 2, 2, 3, 3], &[2, 7, 1, 8, 2, 8, 1, 8, 2, 8], &[5; 9]] {
        let s = seq(v);
        let occ = enumerate_op_squares(&s);
        assert_eq!(count_distinct_as_words(&occ, &s), brute_force_distinct(&s).unwrap(), "{v:?}");
    }
}

#[test]
fn family_counts() {
    let s = generate_lower_bound_family(4, 3).unwrap();
    let e = Enumerator::new(&s);
    let distinct = e.count_distinct(&e.enumerate().occurrences) as u64;
    assert!(distinct >= expected_family_count(4, 3));
    assert_eq!(expected_family_count(4, 3), 8);
    assert_eq!(distinct, brute_force_distinct(&s).unwrap() as u64);

    // 1^k 2^k: every 1^l 2^l is an op-square
    let e = Enumerator::new(&generate_lower_bound_family(2, 20).unwrap());
    assert_eq!(e.count_distinct(&e.enumerate().occurrences), 20);
}

#[test]
fn audits_report_bounds() {
    let report = audit_family(3, 10, 1).unwrap();
    assert_eq!(report.n, 30);
    assert_eq!(report.lower_bound_met, Some(true));
    assert!(report.distinct <= report.upper_bound_cap);

    let report = audit_bounds(&seq(&[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5])).unwrap();
    assert_eq!(report.lower_bound_met, None);
    assert!(report.to_json().unwrap().contains("\"maxPerSuffix\""));

    let reports = run_sweep(Workload::Random { seed: 4 }, &[2, 5], &[64, 128], 1).unwrap();
    assert_eq!(reports.len(), 4);
}

#[test]
fn verification_rejects_bad_arguments() {
    let e = Enumerator::new(&seq(&[1, 2, 1, 2]));
    assert_eq!(e.verify_candidate(1, 2), Ok(true));
    assert_eq!(e.verify_candidate(1, 4), Ok(false));
    assert_eq!(e.verify_candidate(2, 3), Err(Error::OddLength(3)));
    assert!(matches!(e.verify_candidate(3, 4), Err(Error::FragmentOverflow { .. })));
    assert_eq!(Sequence::normalized::<u32>(&[]), Err(Error::EmptySequence));
}
