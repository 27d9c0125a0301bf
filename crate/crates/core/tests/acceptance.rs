//! End-to-end acceptance suite. Each test checks one numbered claim the
//! crate stands behind, prints a single PASS/FAIL line for it, and
//! enforces a wall-clock budget. Run with `--nocapture` to see the
//! lines for passing criteria too.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use peakcross::*;

fn criterion(label: &str, budget_secs: u64, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed < Duration::from_secs(budget_secs) => {
            println!("{label}: PASS in {elapsed:.2?}");
        }
        Ok(()) => {
            println!("{label}: FAIL (took {elapsed:.2?}, budget {budget_secs} s)");
            panic!("{label} exceeded its {budget_secs} s budget: {elapsed:.2?}");
        }
        Err(cause) => {
            println!("{label}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn profile(rankings: &[&[usize]]) -> PreferenceProfile {
    PreferenceProfile::from_rankings(rankings.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn example_four() -> PreferenceProfile {
    profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 4, 1], &[4, 3, 2, 1]])
}

fn example_four_modified() -> PreferenceProfile {
    profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 1, 4], &[4, 3, 2, 1]])
}

fn two_to_the_choose_two(n: usize) -> BigUint {
    BigUint::from(1u32) << (n * (n - 1) / 2)
}

#[test]
fn criterion_1_ssyt_golden_set_of_order_three() {
    criterion("criterion 1 (order-3 tableau golden set)", 1, || {
        let docs: Vec<String> = enumerate_ssyt(3).map(|t| tableau_document(&t)).collect();
        let expected = [
            "3\n1 1 1\n2 2\n3\n",
            "3\n1 1 1\n2 3\n3\n",
            "3\n1 1 2\n2 2\n3\n",
            "3\n1 1 2\n2 3\n3\n",
            "3\n1 1 3\n2 2\n3\n",
            "3\n1 1 3\n2 3\n3\n",
            "3\n1 2 2\n2 3\n3\n",
            "3\n1 2 3\n2 3\n3\n",
        ];
        assert_eq!(docs, expected);

        let hooks = hook_table(3).unwrap();
        assert_eq!(hooks.lengths, &[vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(hooks.contents, &[vec![3, 4, 5], vec![2, 3], vec![1]]);
    });
}

#[test]
fn criterion_2_hook_formula_equivalence_and_doubling() {
    criterion(
        "criterion 2 (hook formula vs closed form, orders 1..=20)",
        1,
        || {
            for m in 1..=20usize {
                let hook = count_ssyt_hook_formula(m).unwrap();
                let closed = count_ssyt_closed(m);
                assert_eq!(hook, closed, "order {m}");
                assert_eq!(closed, two_to_the_choose_two(m), "order {m}");
                let next = count_ssyt_hook_formula(m + 1).unwrap();
                assert_eq!(next, hook << m, "doubling step from order {m}");
            }
        },
    );
}

#[test]
fn criterion_3_spn_stream_matches_its_count() {
    criterion(
        "criterion 3 (single-peaked family counts, n = 2..=7)",
        30,
        || {
            let expected: [u64; 6] = [1, 2, 9, 96, 2500, 162000];
            for (n, want) in (2..=7usize).zip(expected) {
                assert_eq!(
                    count_spn(n).unwrap(),
                    BigUint::from(want),
                    "count at n = {n}"
                );
                assert_eq!(enumerate_spn(n).count() as u64, want, "stream at n = {n}");
            }
        },
    );
}

#[test]
fn criterion_4_scn_stream_matches_its_count() {
    criterion(
        "criterion 4 (single-crossing family counts, n = 2..=8)",
        60,
        || {
            for n in 2..=8usize {
                let want = two_to_the_choose_two(n - 1);
                assert_eq!(count_scn(n).unwrap(), want, "count at n = {n}");
                let streamed = enumerate_scn(n).count();
                assert_eq!(BigUint::from(streamed), want, "stream at n = {n}");
            }
        },
    );
}

#[test]
fn criterion_5_brute_force_oracle_agrees_with_the_formulas() {
    criterion("criterion 5 (brute-force oracle, n = 2..=5)", 600, || {
        for n in 2..=5usize {
            assert_eq!(
                oracle_count(n, CanonicalProperty::SpnCanonical).unwrap(),
                count_spn(n).unwrap(),
                "single-peaked at n = {n}"
            );
            assert_eq!(
                oracle_count(n, CanonicalProperty::ScnCanonical).unwrap(),
                count_scn(n).unwrap(),
                "single-crossing at n = {n}"
            );
        }
    });
}

#[test]
fn criterion_6_bijection_round_trips() {
    criterion("criterion 6 (tableau bijection round trips)", 5, || {
        for n in 2..=6usize {
            for p in enumerate_scn(n) {
                let t = profile_to_ssyt(&p).unwrap();
                assert_eq!(
                    ssyt_to_profile(&t).unwrap(),
                    p,
                    "profile round trip at n = {n}"
                );
            }
        }
        for m in 1..=5usize {
            for t in enumerate_ssyt(m) {
                let p = ssyt_to_profile(&t).unwrap();
                assert_eq!(
                    profile_to_ssyt(&p).unwrap(),
                    t,
                    "tableau round trip at order {m}"
                );
            }
        }
        let image = profile_to_ssyt(&example_four()).unwrap();
        assert_eq!(image.rows(), &[vec![1, 1, 1], vec![2, 3], vec![3]]);
    });
}

#[test]
fn criterion_7_single_crossing_profiles_are_single_peaked() {
    criterion("criterion 7 (containment and the gap at n = 4)", 5, || {
        for n in 2..=6usize {
            for p in enumerate_scn(n) {
                assert!(is_narcissistic(&p), "narcissism at n = {n}");
                assert!(
                    check_single_peaked(&p).holds(),
                    "single-peakedness at n = {n}"
                );
            }
        }

        let spn: BTreeSet<PreferenceProfile> = enumerate_spn(4).collect();
        let scn: BTreeSet<PreferenceProfile> = enumerate_scn(4).collect();
        assert!(scn.is_subset(&spn));
        let gap: BTreeSet<_> = spn.difference(&scn).cloned().collect();
        assert!(!gap.is_empty());
        let modified = example_four_modified();
        assert!(gap.contains(&modified));

        let result = check_single_crossing(&modified);
        assert!(!result.holds());
        let witness = result.witness().unwrap();
        assert!(witness.verify(&modified));
        match witness {
            Witness::Delta { pairs, .. } => assert_eq!(pairs, &[(1, 4), (2, 3)]),
            other => panic!("expected a delta witness, got {other}"),
        }
    });
}

#[test]
fn criterion_8_two_enumeration_paths_agree() {
    criterion(
        "criterion 8 (filtered stream equals direct stream, n = 2..=5)",
        10,
        || {
            for n in 2..=5usize {
                let filtered: BTreeSet<PreferenceProfile> = enumerate_spn(n)
                    .filter(|p| is_single_crossing_wrt(p, &Axis::identity(n)).unwrap())
                    .collect();
                let direct: BTreeSet<PreferenceProfile> = enumerate_scn(n).collect();
                assert_eq!(filtered, direct, "at n = {n}");
            }
        },
    );
}

#[test]
fn criterion_9_recognition_agrees_with_exhaustive_search() {
    criterion(
        "criterion 9 (recognition soundness at desk scale)",
        300,
        || {
            for n in 1..=4usize {
                let axes: Vec<Axis> = itertools::Itertools::permutations(1..=n, n)
                    .map(|seq| Axis::new(seq).unwrap())
                    .collect();
                for p in brute_force_narcissistic(n).unwrap() {
                    let sp = check_single_peaked(&p);
                    let sp_exhaustive = axes.iter().any(|a| is_single_peaked_wrt(&p, a).unwrap());
                    assert_eq!(sp.holds(), sp_exhaustive, "single-peaked at {p}");
                    match &sp {
                        RecognitionResult::Holds { axis } => {
                            let axis = axis.as_ref().expect("search scale always yields an axis");
                            assert!(is_single_peaked_wrt(&p, axis).unwrap());
                        }
                        RecognitionResult::Fails { witness } => {
                            assert_eq!(witness.family(), PropertyFamily::SinglePeaked);
                            assert!(witness.verify(&p), "witness {witness} at {p}");
                        }
                    }

                    let sc = check_single_crossing(&p);
                    let sc_exhaustive = axes.iter().any(|o| is_single_crossing_wrt(&p, o).unwrap());
                    assert_eq!(sc.holds(), sc_exhaustive, "single-crossing at {p}");
                    match &sc {
                        RecognitionResult::Holds { axis } => {
                            let order = axis.as_ref().expect("search scale always yields an order");
                            assert!(is_single_crossing_wrt(&p, order).unwrap());
                        }
                        RecognitionResult::Fails { witness } => {
                            assert_eq!(witness.family(), PropertyFamily::SingleCrossing);
                            assert!(witness.verify(&p), "witness {witness} at {p}");
                        }
                    }
                }
            }
        },
    );
}
