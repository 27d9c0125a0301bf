//! The bijection between canonical single-crossing narcissistic
//! profiles on n alternatives and staircase tableaux of order n − 1.
//!
//! Cell (i, j) of the tableau records, flipped as n+1−pos, where voter
//! n+1−j placed alternative i. Reading it back, voter i learns the
//! positions of every alternative below i from column n+1−i and fills
//! the rest upward from the peak.

use crate::canonical::check_canonical_scn;
use crate::error::Error;
use crate::profile::{PreferenceOrder, PreferenceProfile};
use crate::ssyt::Ssyt;

/// Maps a canonical single-crossing narcissistic profile on n ≥ 2
/// alternatives to its staircase tableau of order n − 1.
pub fn profile_to_ssyt(p: &PreferenceProfile) -> Result<Ssyt, Error> {
    let n = p.n();
    if n < 2 {
        return Err(Error::PreconditionViolated {
            reason: "the correspondence needs at least two alternatives".into(),
        });
    }
    if !check_canonical_scn(p) {
        return Err(Error::PreconditionViolated {
            reason: "profile is not in canonical single-crossing narcissistic form".into(),
        });
    }
    let mut rows = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut row = Vec::with_capacity(n - i);
        for j in 1..=(n - i) {
            let voter = n + 1 - j;
            let pos = p.order(voter).position(i).expect("in range");
            row.push(n + 1 - pos);
        }
        rows.push(row);
    }
    Ssyt::new(rows).map_err(|e| Error::Internal {
        reason: format!("canonical profile produced an invalid tableau: {e}"),
    })
}

/// Rebuilds the canonical profile of a staircase tableau of order
/// n − 1: voter 1 ascends, voter n descends, and voter i places each
/// alternative j < i at position n+1−T(j, n+1−i), with the alternatives
/// above i filling the remaining positions in ascending order.
pub fn ssyt_to_profile(t: &Ssyt) -> Result<PreferenceProfile, Error> {
    let n = t.order() + 1;
    let mut orders = Vec::with_capacity(n);
    orders.push(PreferenceOrder::ascending(n));
    for i in 2..=n {
        let mut slots: Vec<usize> = vec![0; n];
        slots[0] = i;
        for j in 1..i {
            let pos = n + 1 - t.get(j, n + 1 - i);
            if pos < 2 || pos > n || slots[pos - 1] != 0 {
                return Err(Error::Internal {
                    reason: format!(
                        "tableau places alternative {j} of voter {i} at occupied or out-of-range position {pos}"
                    ),
                });
            }
            slots[pos - 1] = j;
        }
        let mut next = i + 1;
        for slot in slots.iter_mut() {
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
        }
        // Alternatives on each side of the peak must fan out in order:
        // i−1, …, 1 downward and i+1, …, n upward.
        debug_assert!(fans_out_from_peak(&slots, i));
        orders.push(PreferenceOrder::new(slots).map_err(|e| Error::Internal {
            reason: format!("voter {i} reconstruction is not a permutation: {e}"),
        })?);
    }
    PreferenceProfile::new(orders).map_err(|e| Error::Internal {
        reason: format!("reconstruction is not square: {e}"),
    })
}

fn fans_out_from_peak(ranking: &[usize], peak: usize) -> bool {
    let below: Vec<usize> = ranking.iter().copied().filter(|&a| a < peak).collect();
    let above: Vec<usize> = ranking.iter().copied().filter(|&a| a > peak).collect();
    below.windows(2).all(|w| w[0] > w[1]) && above.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssyt::enumerate_ssyt;

    fn profile(rankings: &[&[usize]]) -> PreferenceProfile {
        PreferenceProfile::from_rankings(rankings.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_four() -> PreferenceProfile {
        profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 4, 1], &[4, 3, 2, 1]])
    }

    #[test]
    fn the_example_profile_maps_to_its_tableau() {
        let t = profile_to_ssyt(&example_four()).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 1], vec![2, 3], vec![3]]);
    }

    #[test]
    fn the_tableau_maps_back_to_the_example_profile() {
        let t = Ssyt::new(vec![vec![1, 1, 1], vec![2, 3], vec![3]]).unwrap();
        assert_eq!(ssyt_to_profile(&t).unwrap(), example_four());
    }

    #[test]
    fn the_two_voter_case() {
        let two = profile(&[&[1, 2], &[2, 1]]);
        let t = profile_to_ssyt(&two).unwrap();
        assert_eq!(t.rows(), &[vec![1]]);
        assert_eq!(ssyt_to_profile(&t).unwrap(), two);
    }

    #[test]
    fn non_canonical_inputs_are_rejected() {
        let modified = profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 1, 4], &[4, 3, 2, 1]]);
        assert!(matches!(
            profile_to_ssyt(&modified),
            Err(Error::PreconditionViolated { .. })
        ));
        let one = profile(&[&[1]]);
        assert!(matches!(
            profile_to_ssyt(&one),
            Err(Error::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn small_round_trips() {
        for m in 1..=4 {
            for t in enumerate_ssyt(m) {
                let p = ssyt_to_profile(&t).unwrap();
                assert!(check_canonical_scn(&p));
                assert_eq!(profile_to_ssyt(&p).unwrap(), t);
            }
        }
    }
}
