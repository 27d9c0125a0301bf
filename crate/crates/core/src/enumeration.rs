//! Counting and streaming enumeration of canonical single-peaked and
//! single-crossing narcissistic profiles.
//!
//! Counts come from closed forms: ∏ C(n−1, i−1) over the middle voters
//! for the single-peaked family, 2^(n−1 choose 2) for the
//! single-crossing one, and ((n−1)!)^n narcissistic profiles overall.
//! Enumeration never materializes the full family.

use num_bigint::BigUint;

use crate::bijection::ssyt_to_profile;
use crate::error::Error;
use crate::profile::{PreferenceOrder, PreferenceProfile};
use crate::ssyt::{count_ssyt_closed, enumerate_ssyt, SsytIter};

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let mut result = BigUint::from(1u8);
    for i in 0..k.min(n - k) {
        result *= BigUint::from(n - i);
        result /= BigUint::from(i + 1);
    }
    result
}

fn require_at_least_two(n: usize) -> Result<(), Error> {
    if n < 2 {
        Err(Error::InvalidArgument {
            reason: format!("need at least two alternatives, got {n}"),
        })
    } else {
        Ok(())
    }
}

/// Number of canonical single-peaked narcissistic profiles:
/// ∏_{i=2}^{n−1} C(n−1, i−1). The empty product at n = 2 gives 1.
pub fn count_spn(n: usize) -> Result<BigUint, Error> {
    require_at_least_two(n)?;
    let mut result = BigUint::from(1u8);
    for i in 2..n {
        result *= binomial(n - 1, i - 1);
    }
    Ok(result)
}

/// Number of canonical single-crossing narcissistic profiles:
/// 2^(n−1 choose 2), the staircase tableau count of order n − 1.
pub fn count_scn(n: usize) -> Result<BigUint, Error> {
    require_at_least_two(n)?;
    Ok(count_ssyt_closed(n - 1))
}

/// Number of narcissistic profiles on n alternatives: ((n−1)!)^n.
pub fn count_narcissistic(n: usize) -> BigUint {
    let mut factorial = BigUint::from(1u8);
    for k in 2..n {
        factorial *= BigUint::from(k);
    }
    factorial.pow(n as u32)
}

/// Streams every canonical single-peaked narcissistic profile on n
/// alternatives. Voter 1 ascends and voter n descends; each middle
/// voter i independently picks the i−1 positions among 2..=n where the
/// alternatives below its peak will sit, in falling order, with the
/// alternatives above the peak filling the gaps in rising order.
///
/// Profiles appear with the position subsets in lexicographic order,
/// voter 2's choice changing slowest. Practical up to about n = 7
/// (162000 profiles); n < 2 yields nothing.
pub fn enumerate_spn(n: usize) -> SpnIter {
    SpnIter::new(n)
}

pub struct SpnIter {
    n: usize,
    /// combos[k] is the sorted position subset for voter k + 2.
    combos: Vec<Vec<usize>>,
    done: bool,
}

impl SpnIter {
    fn new(n: usize) -> Self {
        if n < 2 {
            return SpnIter {
                n,
                combos: Vec::new(),
                done: true,
            };
        }
        // Voter i needs i−1 positions out of 2..=n; start at the
        // lexicographically first subset {2, …, i}.
        let combos = (2..n).map(|i| (2..=i).collect()).collect();
        SpnIter {
            n,
            combos,
            done: false,
        }
    }

    fn build(&self) -> PreferenceProfile {
        let n = self.n;
        let mut orders = Vec::with_capacity(n);
        orders.push(PreferenceOrder::ascending(n));
        for (k, combo) in self.combos.iter().enumerate() {
            let voter = k + 2;
            let mut slots = vec![0usize; n];
            slots[0] = voter;
            // Alternatives voter−1, …, 1 land on the chosen positions in
            // that order.
            for (t, &pos) in combo.iter().enumerate() {
                slots[pos - 1] = voter - 1 - t;
            }
            let mut next = voter + 1;
            for slot in slots.iter_mut() {
                if *slot == 0 {
                    *slot = next;
                    next += 1;
                }
            }
            orders.push(PreferenceOrder::new(slots).expect("constructed permutation"));
        }
        if n >= 2 {
            orders.push(PreferenceOrder::descending(n));
        }
        PreferenceProfile::new(orders).expect("square by construction")
    }

    /// Lexicographic successor of a k-subset of {2, …, n}; false on wrap.
    fn advance_combo(combo: &mut [usize], n: usize) -> bool {
        let k = combo.len();
        for idx in (0..k).rev() {
            if combo[idx] < n - (k - 1 - idx) {
                combo[idx] += 1;
                for t in idx + 1..k {
                    combo[t] = combo[t - 1] + 1;
                }
                return true;
            }
        }
        // Reset to the first subset for carrying.
        for (t, v) in combo.iter_mut().enumerate() {
            *v = t + 2;
        }
        false
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        for k in (0..self.combos.len()).rev() {
            if Self::advance_combo(&mut self.combos[k], n) {
                return true;
            }
        }
        false
    }
}

impl Iterator for SpnIter {
    type Item = PreferenceProfile;

    fn next(&mut self) -> Option<PreferenceProfile> {
        if self.done {
            return None;
        }
        let item = self.build();
        if !self.advance() {
            self.done = true;
        }
        Some(item)
    }
}

/// Streams every canonical single-crossing narcissistic profile on n
/// alternatives, in the tableau enumeration order of their images.
/// Practical up to about n = 8 (2097152 profiles); n < 2 yields nothing.
pub fn enumerate_scn(n: usize) -> ScnIter {
    ScnIter {
        inner: enumerate_ssyt(n.saturating_sub(1)),
    }
}

pub struct ScnIter {
    inner: SsytIter,
}

impl Iterator for ScnIter {
    type Item = PreferenceProfile;

    fn next(&mut self) -> Option<PreferenceProfile> {
        self.inner
            .next()
            .map(|t| ssyt_to_profile(&t).expect("staircase tableaux map to canonical profiles"))
    }
}
