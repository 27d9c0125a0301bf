//! Brute-force reference counts over the full narcissistic universe.
//!
//! This module exists to distrust the rest of the crate. It walks all
//! ((n−1)!)^n narcissistic profiles and filters them with nothing but
//! the raw definitions written out as loops; it never consults the
//! characterizations, the closed forms, or the tableau correspondence.

use num_bigint::BigUint;

use itertools::Itertools;

use crate::error::Error;
use crate::profile::{PreferenceOrder, PreferenceProfile};

/// Largest n the brute-force walk will accept; ((n−1)!)^n grows too
/// fast beyond it.
pub const BRUTE_FORCE_CEILING: usize = 5;

/// Canonical family membership tested by the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalProperty {
    /// Voter 1 ascending, voter n descending, single-peaked along 1 ▷ … ▷ n.
    SpnCanonical,
    /// The above plus single-crossing along the voter order 1 ▷ … ▷ n.
    ScnCanonical,
}

/// Streams every narcissistic profile on n alternatives: each voter i
/// ranks i first, followed by any arrangement of the rest. Voter n's
/// arrangement varies fastest; arrangements run in lexicographic order.
pub fn brute_force_narcissistic(n: usize) -> Result<NarcissisticIter, Error> {
    if n < 1 {
        return Err(Error::InvalidArgument {
            reason: "need at least one voter".into(),
        });
    }
    if n > BRUTE_FORCE_CEILING {
        return Err(Error::ResourceBound {
            requested: n,
            ceiling: BRUTE_FORCE_CEILING,
        });
    }
    let tails: Vec<Vec<Vec<usize>>> = (1..=n)
        .map(|i| (1..=n).filter(|&x| x != i).permutations(n - 1).collect())
        .collect();
    Ok(NarcissisticIter {
        n,
        tails,
        digits: vec![0; n],
        done: false,
    })
}

pub struct NarcissisticIter {
    n: usize,
    /// tails[i-1] lists all orderings of the alternatives other than i.
    tails: Vec<Vec<Vec<usize>>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for NarcissisticIter {
    type Item = PreferenceProfile;

    fn next(&mut self) -> Option<PreferenceProfile> {
        if self.done {
            return None;
        }
        let orders = (0..self.n)
            .map(|i| {
                let mut ranking = Vec::with_capacity(self.n);
                ranking.push(i + 1);
                ranking.extend(&self.tails[i][self.digits[i]]);
                PreferenceOrder::new(ranking).expect("permutation by construction")
            })
            .collect();
        let item = PreferenceProfile::new(orders).expect("square by construction");
        let mut cursor = self.n;
        loop {
            if cursor == 0 {
                self.done = true;
                break;
            }
            cursor -= 1;
            self.digits[cursor] += 1;
            if self.digits[cursor] < self.tails[cursor].len() {
                break;
            }
            self.digits[cursor] = 0;
        }
        Some(item)
    }
}

/// How many profiles in the full narcissistic universe lie in the given
/// canonical family, by definition-only filtering.
pub fn oracle_count(n: usize, property: CanonicalProperty) -> Result<BigUint, Error> {
    let mut count: u64 = 0;
    for p in brute_force_narcissistic(n)? {
        if !bookend_voters_are_fixed(&p) {
            continue;
        }
        let keep = match property {
            CanonicalProperty::SpnCanonical => single_peaked_on_identity_axis(&p),
            CanonicalProperty::ScnCanonical => {
                single_peaked_on_identity_axis(&p) && single_crossing_in_id_order(&p)
            }
        };
        if keep {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

fn bookend_voters_are_fixed(p: &PreferenceProfile) -> bool {
    let n = p.n();
    let first = p.order(1).ranking();
    let last = p.order(n).ranking();
    first.iter().enumerate().all(|(k, &a)| a == k + 1)
        && last.iter().enumerate().all(|(k, &a)| a == n - k)
}

/// Literal reading of single-peakedness on the axis 1 ▷ 2 ▷ … ▷ n:
/// whenever a < b < peak or peak < b < a, the voter prefers b to a.
fn single_peaked_on_identity_axis(p: &PreferenceProfile) -> bool {
    let n = p.n();
    for order in p.orders() {
        let peak = order.peak();
        for b in 1..=n {
            for a in 1..=n {
                let between = (a < b && b < peak) || (peak < b && b < a);
                if between && !order.prefers(b, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Literal reading of single-crossing on the voter order 1 ▷ 2 ▷ … ▷ n:
/// for voters i < j < k, agreement of i and k on a pair forces j along.
fn single_crossing_in_id_order(p: &PreferenceProfile) -> bool {
    let n = p.n();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for a in 1..=n {
                    for b in 1..=n {
                        if a == b {
                            continue;
                        }
                        if p.order(i).prefers(a, b)
                            && p.order(k).prefers(a, b)
                            && !p.order(j).prefers(a, b)
                        {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
