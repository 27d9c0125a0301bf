//! Canonical labeling of single-peaked narcissistic profiles.
//!
//! Such a profile always contains exactly one pair of voters whose
//! orders are mutual reversals. Relabeling voters and alternatives
//! together so that the lexicographically smaller of those two orders
//! becomes 1 ≻ 2 ≻ … ≻ n puts the profile in canonical form: voter 1
//! ascending, voter n descending, single-peaked along 1 ▷ 2 ▷ … ▷ n.

use crate::error::Error;
use crate::profile::{Axis, PreferenceOrder, PreferenceProfile};
use crate::recognition::{
    check_single_peaked, is_narcissistic, is_single_crossing_wrt, is_single_peaked_wrt,
};

/// A simultaneous renaming of voter indices and alternative ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    /// map[i-1] is the new id of old id i.
    map: Vec<usize>,
}

impl Relabeling {
    pub fn new(map: Vec<usize>) -> Result<Self, Error> {
        // Reuse the permutation validation from orders.
        PreferenceOrder::new(map.clone())?;
        Ok(Relabeling { map })
    }

    pub fn identity(n: usize) -> Self {
        Relabeling {
            map: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// New id of old id `i`.
    pub fn apply_id(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Relabeling {
        let mut inv = vec![0; self.map.len()];
        for (k, &v) in self.map.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Relabeling { map: inv }
    }

    /// Renames voters and alternatives at once: new voter map(i) holds
    /// old voter i's order with every entry renamed.
    pub fn apply_profile(&self, p: &PreferenceProfile) -> Result<PreferenceProfile, Error> {
        if self.n() != p.n() {
            return Err(Error::SizeMismatch {
                expected: p.n(),
                got: self.n(),
            });
        }
        let n = p.n();
        let mut rankings = vec![Vec::new(); n];
        for (i, order) in p.orders().iter().enumerate() {
            let renamed: Vec<usize> = order.ranking().iter().map(|&a| self.apply_id(a)).collect();
            rankings[self.apply_id(i + 1) - 1] = renamed;
        }
        PreferenceProfile::from_rankings(rankings)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

impl std::fmt::Display for Relabeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The unique voter pair (a, b), a < b, whose orders are mutual
/// reversals. Single-peaked narcissistic profiles always have one.
pub fn find_reverse_pair(p: &PreferenceProfile) -> Result<(usize, usize), Error> {
    let n = p.n();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if p.order(a).ranking() == p.order(b).reversed().ranking() {
                return Ok((a, b));
            }
        }
    }
    Err(Error::PreconditionViolated {
        reason: "no mutually reversed voter pair; input is not single-peaked narcissistic".into(),
    })
}

/// Brings a single-peaked narcissistic profile into canonical form.
///
/// Returns the canonical profile and the relabeling that produced it.
/// Of the two mutually reversed voters, the one with the
/// lexicographically smaller order becomes voter 1; the mirror-image
/// canonical form would arise from the opposite choice.
pub fn canonicalize(p: &PreferenceProfile) -> Result<(PreferenceProfile, Relabeling), Error> {
    if !is_narcissistic(p) {
        return Err(Error::PreconditionViolated {
            reason: "profile is not narcissistic".into(),
        });
    }
    if !check_single_peaked(p).holds() {
        return Err(Error::PreconditionViolated {
            reason: "profile is not single-peaked".into(),
        });
    }
    if p.n() == 1 {
        return Ok((p.clone(), Relabeling::identity(1)));
    }
    let (a, b) = find_reverse_pair(p)?;
    let pivot = if p.order(a) <= p.order(b) { a } else { b };
    // Renaming every alternative to its position in the pivot's order
    // turns that order into 1 ≻ 2 ≻ … ≻ n.
    let mut map = vec![0; p.n()];
    for (idx, &alt) in p.order(pivot).ranking().iter().enumerate() {
        map[alt - 1] = idx + 1;
    }
    let sigma = Relabeling::new(map)?;
    let canonical = sigma.apply_profile(p)?;
    debug_assert!(check_canonical_spn(&canonical));
    Ok((canonical, sigma))
}

/// True iff the profile is narcissistic with voter 1 ascending, voter n
/// descending, and single-peaked along the identity axis.
fn check_canonical_spn(p: &PreferenceProfile) -> bool {
    let n = p.n();
    is_narcissistic(p)
        && p.order(1).ranking() == PreferenceOrder::ascending(n).ranking()
        && p.order(n).ranking() == PreferenceOrder::descending(n).ranking()
        && is_single_peaked_wrt(p, &Axis::identity(n)).expect("sizes match")
}

/// True iff the profile is in canonical single-crossing narcissistic
/// form: canonical single-peaked shape, single-crossing along the
/// identity voter order, and, for each alternative a < n, weakly
/// growing positions of a across voters a+1, …, n.
pub fn check_canonical_scn(p: &PreferenceProfile) -> bool {
    let n = p.n();
    if !check_canonical_spn(p) {
        return false;
    }
    if !is_single_crossing_wrt(p, &Axis::identity(n)).expect("sizes match") {
        return false;
    }
    for a in 1..n {
        let mut prev = 0;
        for v in (a + 1)..=n {
            let pos = p.order(v).position(a).expect("in range");
            if pos < prev {
                return false;
            }
            prev = pos;
        }
    }
    true
}
