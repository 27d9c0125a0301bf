//! Strict linear preference orders, square profiles, axes, and the
//! positional operators everything else is built from.
//!
//! Voters and alternatives share the id space 1..=n: voter i's most
//! preferred alternative in a narcissistic profile is i itself. All
//! public ids are 1-based; only private vector indices are 0-based.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// A strict linear order over alternatives 1..=n, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceOrder {
    /// ranking[k] is the alternative at (1-based) position k+1.
    ranking: Vec<usize>,
    /// inverse[a-1] is the 1-based position of alternative a.
    inverse: Vec<usize>,
}

fn permutation_inverse(ranking: &[usize]) -> Result<Vec<usize>, Error> {
    let n = ranking.len();
    let mut inverse = vec![0usize; n];
    for (idx, &a) in ranking.iter().enumerate() {
        if a == 0 || a > n {
            return Err(Error::NotAPermutation { n });
        }
        if inverse[a - 1] != 0 {
            return Err(Error::NotAPermutation { n });
        }
        inverse[a - 1] = idx + 1;
    }
    Ok(inverse)
}

impl PreferenceOrder {
    /// Builds an order from a ranking (most preferred first).
    /// The ranking must be a permutation of 1..=n.
    pub fn new(ranking: Vec<usize>) -> Result<Self, Error> {
        if ranking.is_empty() {
            return Err(Error::NotAPermutation { n: 0 });
        }
        let inverse = permutation_inverse(&ranking)?;
        Ok(PreferenceOrder { ranking, inverse })
    }

    /// The order 1 ≻ 2 ≻ … ≻ n.
    pub fn ascending(n: usize) -> Self {
        PreferenceOrder::new((1..=n).collect()).expect("ascending ranking is a permutation")
    }

    /// The order n ≻ n−1 ≻ … ≻ 1.
    pub fn descending(n: usize) -> Self {
        PreferenceOrder::new((1..=n).rev().collect()).expect("descending ranking is a permutation")
    }

    pub fn n(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// The most preferred alternative.
    pub fn peak(&self) -> usize {
        self.ranking[0]
    }

    /// The 1-based position of alternative `a`: 1 for the peak, n for the last.
    pub fn position(&self, a: usize) -> Result<usize, Error> {
        if a == 0 || a > self.n() {
            return Err(Error::IdOutOfRange { id: a, n: self.n() });
        }
        Ok(self.inverse[a - 1])
    }

    /// True iff `a` is strictly preferred to `b`. Both ids must be in range.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.inverse[a - 1] < self.inverse[b - 1]
    }

    /// Everything weakly preferred to the best element of `subset`: the
    /// prefix of the ranking up to and including the first member of
    /// `subset` encountered. An empty subset yields all alternatives.
    pub fn top(&self, subset: &BTreeSet<usize>) -> Result<BTreeSet<usize>, Error> {
        for &a in subset {
            if a == 0 || a > self.n() {
                return Err(Error::IdOutOfRange { id: a, n: self.n() });
            }
        }
        let mut prefix = BTreeSet::new();
        for &a in &self.ranking {
            prefix.insert(a);
            if subset.contains(&a) {
                break;
            }
        }
        Ok(prefix)
    }

    /// The same order read back to front.
    pub fn reversed(&self) -> Self {
        PreferenceOrder::new(self.ranking.iter().rev().copied().collect())
            .expect("reversal preserves permutations")
    }
}

impl fmt::Display for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.ranking.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A square profile: n voters, each with a strict order over 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceProfile {
    orders: Vec<PreferenceOrder>,
}

impl PreferenceProfile {
    /// Builds a profile; requires as many voters as alternatives.
    pub fn new(orders: Vec<PreferenceOrder>) -> Result<Self, Error> {
        let n = orders.len();
        if n == 0 {
            return Err(Error::EmptyProfile);
        }
        for order in &orders {
            if order.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: order.n(),
                });
            }
        }
        Ok(PreferenceProfile { orders })
    }

    /// Convenience constructor from raw rankings.
    pub fn from_rankings(rankings: Vec<Vec<usize>>) -> Result<Self, Error> {
        let orders = rankings
            .into_iter()
            .map(PreferenceOrder::new)
            .collect::<Result<Vec<_>, _>>()?;
        PreferenceProfile::new(orders)
    }

    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[PreferenceOrder] {
        &self.orders
    }

    /// Voter `i`'s order, 1-based. Panics if `i` is out of range, like indexing.
    pub fn order(&self, i: usize) -> &PreferenceOrder {
        &self.orders[i - 1]
    }
}

/// One line per call site: the voters' rankings separated by semicolons.
impl fmt::Display for PreferenceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, order) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{order}")?;
        }
        Ok(())
    }
}

/// A left-to-right arrangement of ids, used both as an axis over
/// alternatives (single-peakedness) and as a voter order (single-crossing).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Axis {
    sequence: Vec<usize>,
    inverse: Vec<usize>,
}

impl Axis {
    /// Builds an axis from a left-to-right sequence; must be a permutation of 1..=n.
    pub fn new(sequence: Vec<usize>) -> Result<Self, Error> {
        if sequence.is_empty() {
            return Err(Error::NotAPermutation { n: 0 });
        }
        let inverse = permutation_inverse(&sequence)?;
        Ok(Axis { sequence, inverse })
    }

    /// The axis 1 ▷ 2 ▷ … ▷ n.
    pub fn identity(n: usize) -> Self {
        Axis::new((1..=n).collect()).expect("identity sequence is a permutation")
    }

    /// An axis running along a preference order, most preferred leftmost.
    pub fn from_order(order: &PreferenceOrder) -> Self {
        Axis::new(order.ranking().to_vec()).expect("rankings are permutations")
    }

    pub fn n(&self) -> usize {
        self.sequence.len()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// 1-based position of `id` on the axis. Panics if out of range, like indexing.
    pub fn position(&self, id: usize) -> usize {
        self.inverse[id - 1]
    }

    pub fn reversed(&self) -> Self {
        Axis::new(self.sequence.iter().rev().copied().collect())
            .expect("reversal preserves permutations")
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.sequence.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A set of unordered alternative pairs, kept sorted for deterministic output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl PairSet {
    pub fn new() -> Self {
        PairSet::default()
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.pairs.insert((a.min(b), a.max(b)));
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// Pairs in ascending order, each as (smaller, larger).
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        PairSet {
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }
}

/// The unordered pairs on which two orders disagree.
///
/// Two identical orders share no disagreement; an order and its reversal
/// disagree on all n(n−1)/2 pairs.
pub fn diff_pairs(a: &PreferenceOrder, b: &PreferenceOrder) -> Result<PairSet, Error> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    let mut out = PairSet::new();
    let n = a.n();
    for x in 1..=n {
        for y in (x + 1)..=n {
            if a.prefers(x, y) != b.prefers(x, y) {
                out.insert(x, y);
            }
        }
    }
    Ok(out)
}
