//! Recognition of narcissistic, single-peaked, and single-crossing
//! profiles, with certificate output on failure.
//!
//! A profile fails single-peakedness iff it embeds a worst-restricted
//! triple or an alpha-subprofile, and fails single-crossing iff it
//! embeds a gamma- or delta-subprofile. The existential checks either
//! produce an axis (respectively a voter order) or one of these
//! forbidden patterns, so every verdict ships its own evidence.

use itertools::Itertools;

use crate::error::Error;
use crate::profile::{diff_pairs, Axis, PreferenceProfile};

/// Exhaustive axis search is only attempted up to this many ids.
pub const AXIS_SEARCH_CEILING: usize = 8;

/// Which property a witness refutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyFamily {
    SinglePeaked,
    SingleCrossing,
}

/// A forbidden subprofile embedded in a concrete profile.
///
/// Voters are stored in pattern-role order so a witness can be replayed
/// against its profile; displayed pairs are sorted for readability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Each of three voters ranks a different member of the triple last
    /// within the triple: voters[t] ranks alternatives[t] below the
    /// other two.
    Worst {
        voters: [usize; 3],
        alternatives: [usize; 3],
    },
    /// voters[0]: a,b ≻ c ≻ d and voters[1]: b,d ≻ c ≻ a, with
    /// alternatives = (a, b, c, d).
    Alpha {
        voters: [usize; 2],
        alternatives: [usize; 4],
    },
    /// Three pairs on which each voter in turn is the odd one out:
    /// voters[0]: a≻b, c≻d, e≻f; voters[1]: b≻a, d≻c, e≻f;
    /// voters[2]: a≻b, d≻c, f≻e. Pairs stored oriented as ((a,b),(c,d),(e,f)).
    Gamma {
        voters: [usize; 3],
        pairs: [(usize, usize); 3],
    },
    /// Four voters realizing all four orientation combinations of two
    /// pairs, in the order (a≻b,c≻d), (b≻a,c≻d), (a≻b,d≻c), (b≻a,d≻c).
    Delta {
        voters: [usize; 4],
        pairs: [(usize, usize); 2],
    },
}

impl Witness {
    pub fn family(&self) -> PropertyFamily {
        match self {
            Witness::Worst { .. } | Witness::Alpha { .. } => PropertyFamily::SinglePeaked,
            Witness::Gamma { .. } | Witness::Delta { .. } => PropertyFamily::SingleCrossing,
        }
    }

    /// Replays the pattern against `p`; true iff every stated comparison
    /// holds and all referenced ids are in range.
    pub fn verify(&self, p: &PreferenceProfile) -> bool {
        let n = p.n();
        let in_range = |ids: &[usize]| ids.iter().all(|&x| x >= 1 && x <= n);
        let pref = |v: usize, a: usize, b: usize| p.order(v).prefers(a, b);
        match *self {
            Witness::Worst {
                voters,
                alternatives,
            } => {
                let [va, vb, vc] = voters;
                let [a, b, c] = alternatives;
                let mut ids = voters.to_vec();
                ids.extend_from_slice(&alternatives);
                in_range(&ids)
                    && distinct(&voters)
                    && distinct(&alternatives)
                    && pref(va, b, a)
                    && pref(va, c, a)
                    && pref(vb, a, b)
                    && pref(vb, c, b)
                    && pref(vc, a, c)
                    && pref(vc, b, c)
            }
            Witness::Alpha {
                voters,
                alternatives,
            } => {
                let [vi, vj] = voters;
                let [a, b, c, d] = alternatives;
                let mut ids = voters.to_vec();
                ids.extend_from_slice(&alternatives);
                in_range(&ids)
                    && distinct(&voters)
                    && distinct(&alternatives)
                    && pref(vi, a, c)
                    && pref(vi, b, c)
                    && pref(vi, c, d)
                    && pref(vj, b, c)
                    && pref(vj, d, c)
                    && pref(vj, c, a)
            }
            Witness::Gamma { voters, pairs } => {
                let [vi, vj, vk] = voters;
                let [(a, b), (c, d), (e, f)] = pairs;
                let ids = [vi, vj, vk, a, b, c, d, e, f];
                in_range(&ids)
                    && distinct(&voters)
                    && a != b
                    && c != d
                    && e != f
                    && pref(vi, a, b)
                    && pref(vi, c, d)
                    && pref(vi, e, f)
                    && pref(vj, b, a)
                    && pref(vj, d, c)
                    && pref(vj, e, f)
                    && pref(vk, a, b)
                    && pref(vk, d, c)
                    && pref(vk, f, e)
            }
            Witness::Delta { voters, pairs } => {
                let [v1, v2, v3, v4] = voters;
                let [(a, b), (c, d)] = pairs;
                let ids = [v1, v2, v3, v4, a, b, c, d];
                in_range(&ids)
                    && distinct(&voters)
                    && a != b
                    && c != d
                    && pref(v1, a, b)
                    && pref(v1, c, d)
                    && pref(v2, b, a)
                    && pref(v2, c, d)
                    && pref(v3, a, b)
                    && pref(v3, d, c)
                    && pref(v4, b, a)
                    && pref(v4, d, c)
            }
        }
    }
}

fn distinct(ids: &[usize]) -> bool {
    ids.iter()
        .all(|a| ids.iter().filter(|b| *b == a).count() == 1)
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn ids(xs: &[usize]) -> String {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            Witness::Worst {
                voters,
                alternatives,
            } => {
                let mut alts = *alternatives;
                alts.sort_unstable();
                write!(
                    f,
                    "worst-subprofile: alternatives {{{}}}; voters {}",
                    ids(&alts),
                    ids(voters)
                )
            }
            Witness::Alpha {
                voters,
                alternatives,
            } => write!(
                f,
                "alpha-subprofile: alternatives ({}); voters {}",
                ids(alternatives),
                ids(voters)
            ),
            Witness::Gamma { voters, pairs } => {
                let ps = pairs
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = sorted_pair(a, b);
                        format!("{{{x},{y}}}")
                    })
                    .join(",");
                write!(f, "gamma-subprofile: pairs {ps}; voters {}", ids(voters))
            }
            Witness::Delta { voters, pairs } => {
                let ps = pairs
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = sorted_pair(a, b);
                        format!("{{{x},{y}}}")
                    })
                    .join(",");
                write!(f, "delta-subprofile: pairs {ps}; voters {}", ids(voters))
            }
        }
    }
}

/// Outcome of an existential check: an arrangement that works, or a
/// forbidden pattern showing none can.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    /// The property holds. The axis is present whenever a search
    /// produced one (always, at supported sizes).
    Holds { axis: Option<Axis> },
    /// The property fails, certified by an embedded forbidden pattern.
    Fails { witness: Witness },
}

impl RecognitionResult {
    pub fn holds(&self) -> bool {
        matches!(self, RecognitionResult::Holds { .. })
    }

    pub fn axis(&self) -> Option<&Axis> {
        match self {
            RecognitionResult::Holds { axis } => axis.as_ref(),
            RecognitionResult::Fails { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            RecognitionResult::Holds { .. } => None,
            RecognitionResult::Fails { witness } => Some(witness),
        }
    }
}

/// True iff every voter ranks their own id first.
pub fn is_narcissistic(p: &PreferenceProfile) -> bool {
    p.orders()
        .iter()
        .enumerate()
        .all(|(i, o)| o.peak() == i + 1)
}

/// Single-peakedness with respect to a fixed axis, checked by the
/// defining implication: whenever b lies strictly between a and the
/// voter's peak on the axis, the voter prefers b to a.
pub fn is_single_peaked_wrt(p: &PreferenceProfile, axis: &Axis) -> Result<bool, Error> {
    if axis.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            got: axis.n(),
        });
    }
    let n = p.n();
    let seq = axis.sequence();
    for order in p.orders() {
        let peak_pos = axis.position(order.peak());
        // Left of the peak: positions x < y < peak_pos, with a at x and b at y.
        for y in 1..peak_pos {
            for x in 1..y {
                if !order.prefers(seq[y - 1], seq[x - 1]) {
                    return Ok(false);
                }
            }
        }
        // Right of the peak: positions peak_pos < y < x.
        for y in (peak_pos + 1)..=n {
            for x in (y + 1)..=n {
                if !order.prefers(seq[y - 1], seq[x - 1]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The equivalent prefix-interval criterion: every top set of every
/// voter occupies contiguous axis positions. Kept as an independent
/// route for cross-checking the implication form.
pub fn single_peaked_wrt_by_intervals(p: &PreferenceProfile, axis: &Axis) -> Result<bool, Error> {
    if axis.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            got: axis.n(),
        });
    }
    for order in p.orders() {
        // The top sets of a single order are exactly its ranking prefixes.
        let mut min_pos = usize::MAX;
        let mut max_pos = 0usize;
        for (len, &a) in order.ranking().iter().enumerate() {
            let pos = axis.position(a);
            min_pos = min_pos.min(pos);
            max_pos = max_pos.max(pos);
            if max_pos - min_pos != len {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Single-crossing with respect to a fixed voter order: along the
/// order, each alternative pair switches sides at most once.
pub fn is_single_crossing_wrt(p: &PreferenceProfile, voter_order: &Axis) -> Result<bool, Error> {
    if voter_order.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            got: voter_order.n(),
        });
    }
    let n = p.n();
    for a in 1..=n {
        for b in (a + 1)..=n {
            let mut switches = 0;
            let mut prev: Option<bool> = None;
            for &v in voter_order.sequence() {
                let cur = p.order(v).prefers(a, b);
                if prev.is_some_and(|x| x != cur) {
                    switches += 1;
                    if switches > 1 {
                        return Ok(false);
                    }
                }
                prev = Some(cur);
            }
        }
    }
    Ok(true)
}

/// The equivalent interval criterion: for each pair, the voters on
/// either side of it occupy contiguous stretches of the voter order.
pub fn single_crossing_wrt_by_intervals(
    p: &PreferenceProfile,
    voter_order: &Axis,
) -> Result<bool, Error> {
    if voter_order.n() != p.n() {
        return Err(Error::SizeMismatch {
            expected: p.n(),
            got: voter_order.n(),
        });
    }
    let n = p.n();
    let contiguous = |positions: &[usize]| {
        positions.is_empty()
            || positions.iter().max().unwrap() - positions.iter().min().unwrap() + 1
                == positions.len()
    };
    for a in 1..=n {
        for b in (a + 1)..=n {
            let mut yes = Vec::new();
            let mut no = Vec::new();
            for (idx, &v) in voter_order.sequence().iter().enumerate() {
                if p.order(v).prefers(a, b) {
                    yes.push(idx);
                } else {
                    no.push(idx);
                }
            }
            if !contiguous(&yes) || !contiguous(&no) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Does some axis make `p` single-peaked? Returns the axis or a
/// worst/alpha pattern.
///
/// For narcissistic profiles only the orders of a mutually-reversed
/// voter pair can serve as axes, which keeps the search linear in the
/// number of such pairs. Other profiles get an exhaustive axis sweep up
/// to [`AXIS_SEARCH_CEILING`]; beyond it, holding profiles are reported
/// without an axis.
pub fn check_single_peaked(p: &PreferenceProfile) -> RecognitionResult {
    let n = p.n();
    if n <= 2 {
        return RecognitionResult::Holds {
            axis: Some(Axis::identity(n)),
        };
    }
    if is_narcissistic(p) {
        // An axis valid for two mutually reversed voters must be one of
        // their own orders, and a single-peaked narcissistic profile
        // always contains such a pair.
        for a in 1..=n {
            for b in (a + 1)..=n {
                if p.order(a).ranking() == p.order(b).reversed().ranking() {
                    let (first, second) = if p.order(a) <= p.order(b) {
                        (p.order(a), p.order(b))
                    } else {
                        (p.order(b), p.order(a))
                    };
                    for candidate in [Axis::from_order(first), Axis::from_order(second)] {
                        if is_single_peaked_wrt(p, &candidate).expect("sizes match") {
                            return RecognitionResult::Holds {
                                axis: Some(candidate),
                            };
                        }
                    }
                }
            }
        }
    } else if n <= AXIS_SEARCH_CEILING {
        for perm in (1..=n).permutations(n) {
            let axis = Axis::new(perm).expect("permutation");
            if is_single_peaked_wrt(p, &axis).expect("sizes match") {
                return RecognitionResult::Holds { axis: Some(axis) };
            }
        }
    } else if find_witness(p, PropertyFamily::SinglePeaked).is_none() {
        return RecognitionResult::Holds { axis: None };
    }
    let witness = find_witness(p, PropertyFamily::SinglePeaked)
        .expect("a profile with no single-peaked axis embeds a worst or alpha pattern");
    RecognitionResult::Fails { witness }
}

/// Does some voter order make `p` single-crossing? Returns the order or
/// a gamma/delta pattern.
///
/// If an order starting at voter f exists, sorting the others by how
/// much they disagree with f recovers one, so each candidate first
/// voter is tried in turn. Ties with equal disagreement counts but
/// incomparable pair sets break lexicographically by id and simply fail
/// verification, moving on to the next candidate.
pub fn check_single_crossing(p: &PreferenceProfile) -> RecognitionResult {
    let n = p.n();
    if n <= 2 {
        return RecognitionResult::Holds {
            axis: Some(Axis::identity(n)),
        };
    }
    for first in 1..=n {
        let mut rest: Vec<(usize, usize)> = (1..=n)
            .filter(|&v| v != first)
            .map(|v| {
                let card = diff_pairs(p.order(first), p.order(v))
                    .expect("profile orders share n")
                    .len();
                (card, v)
            })
            .collect();
        rest.sort_unstable();
        let mut sequence = vec![first];
        sequence.extend(rest.iter().map(|&(_, v)| v));
        let axis = Axis::new(sequence).expect("permutation");
        if is_single_crossing_wrt(p, &axis).expect("sizes match") {
            return RecognitionResult::Holds { axis: Some(axis) };
        }
    }
    let witness = find_witness(p, PropertyFamily::SingleCrossing)
        .expect("a profile with no single-crossing order embeds a gamma or delta pattern");
    RecognitionResult::Fails { witness }
}

/// Searches for the family's forbidden patterns, smallest first by
/// sorted voter tuple, then by the alternatives involved. For
/// single-peakedness, worst patterns are tried before alpha; for
/// single-crossing, delta patterns are tried before gamma.
pub fn find_witness(p: &PreferenceProfile, family: PropertyFamily) -> Option<Witness> {
    match family {
        PropertyFamily::SinglePeaked => find_worst(p).or_else(|| find_alpha(p)),
        PropertyFamily::SingleCrossing => find_delta(p).or_else(|| find_gamma(p)),
    }
}

fn find_worst(p: &PreferenceProfile) -> Option<Witness> {
    let n = p.n();
    for voters in (1..=n).combinations(3) {
        for alts in (1..=n).combinations(3) {
            // Within the triple each voter ranks exactly one member last;
            // the pattern needs the three voters to cover all three.
            let mut role = [0usize; 3];
            let mut ok = true;
            for &v in &voters {
                let o = p.order(v);
                let lowest = alts
                    .iter()
                    .copied()
                    .max_by_key(|&a| o.position(a).expect("in range"))
                    .expect("three alternatives");
                let slot = alts.iter().position(|&a| a == lowest).expect("member");
                if role[slot] != 0 {
                    ok = false;
                    break;
                }
                role[slot] = v;
            }
            if ok && role.iter().all(|&v| v != 0) {
                return Some(Witness::Worst {
                    voters: role,
                    alternatives: [alts[0], alts[1], alts[2]],
                });
            }
        }
    }
    None
}

fn find_alpha(p: &PreferenceProfile) -> Option<Witness> {
    let n = p.n();
    if n < 4 {
        return None;
    }
    for voters in (1..=n).combinations(2) {
        for quad in (1..=n).combinations(4) {
            for perm in quad.iter().copied().permutations(4) {
                let [a, b, c, d] = [perm[0], perm[1], perm[2], perm[3]];
                for (vi, vj) in [(voters[0], voters[1]), (voters[1], voters[0])] {
                    let w = Witness::Alpha {
                        voters: [vi, vj],
                        alternatives: [a, b, c, d],
                    };
                    if w.verify(p) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn find_delta(p: &PreferenceProfile) -> Option<Witness> {
    let n = p.n();
    if n < 4 {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| ((a + 1)..=n).map(move |b| (a, b)))
        .collect();
    for voters in (1..=n).combinations(4) {
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[pi + 1..] {
                // Each voter holds one of the four orientation combos;
                // the pattern needs all four represented.
                let mut role = [0usize; 4];
                let mut ok = true;
                for &v in &voters {
                    let o = p.order(v);
                    let slot = match (o.prefers(a, b), o.prefers(c, d)) {
                        (true, true) => 0,
                        (false, true) => 1,
                        (true, false) => 2,
                        (false, false) => 3,
                    };
                    if role[slot] != 0 {
                        ok = false;
                        break;
                    }
                    role[slot] = v;
                }
                if ok && role.iter().all(|&v| v != 0) {
                    return Some(Witness::Delta {
                        voters: role,
                        pairs: [(a, b), (c, d)],
                    });
                }
            }
        }
    }
    None
}

fn find_gamma(p: &PreferenceProfile) -> Option<Witness> {
    let n = p.n();
    if n < 3 {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| ((a + 1)..=n).map(move |b| (a, b)))
        .collect();
    for voters in (1..=n).combinations(3) {
        for role in voters.iter().copied().permutations(3) {
            let [vi, vj, vk] = [role[0], role[1], role[2]];
            // Orient each pair by the role voter the pattern says
            // prefers its first element.
            let oriented = |v: usize, &(x, y): &(usize, usize)| {
                if p.order(v).prefers(x, y) {
                    (x, y)
                } else {
                    (y, x)
                }
            };
            for p1 in &pairs {
                let (a, b) = oriented(vi, p1);
                if !(p.order(vj).prefers(b, a) && p.order(vk).prefers(a, b)) {
                    continue;
                }
                for p2 in &pairs {
                    if p2 == p1 {
                        continue;
                    }
                    let (c, d) = oriented(vi, p2);
                    if !(p.order(vj).prefers(d, c) && p.order(vk).prefers(d, c)) {
                        continue;
                    }
                    for p3 in &pairs {
                        if p3 == p1 || p3 == p2 {
                            continue;
                        }
                        let (e, f) = oriented(vi, p3);
                        if p.order(vj).prefers(e, f) && p.order(vk).prefers(f, e) {
                            return Some(Witness::Gamma {
                                voters: [vi, vj, vk],
                                pairs: [(a, b), (c, d), (e, f)],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// For a narcissistic single-crossing profile, reports whether it is
/// also single-peaked. Validates both preconditions.
pub fn scn_implies_spn_check(p: &PreferenceProfile) -> Result<bool, Error> {
    if !is_narcissistic(p) {
        return Err(Error::PreconditionViolated {
            reason: "profile is not narcissistic".into(),
        });
    }
    if !check_single_crossing(p).holds() {
        return Err(Error::PreconditionViolated {
            reason: "profile is not single-crossing".into(),
        });
    }
    Ok(check_single_peaked(p).holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(rankings: &[&[usize]]) -> PreferenceProfile {
        PreferenceProfile::from_rankings(rankings.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_four() -> PreferenceProfile {
        profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 4, 1], &[4, 3, 2, 1]])
    }

    fn example_four_modified() -> PreferenceProfile {
        profile(&[&[1, 2, 3, 4], &[2, 3, 4, 1], &[3, 2, 1, 4], &[4, 3, 2, 1]])
    }

    #[test]
    fn narcissism_is_about_own_peaks() {
        assert!(is_narcissistic(&example_four()));
        assert!(!is_narcissistic(&profile(&[
            &[2, 1, 3, 4],
            &[2, 3, 4, 1],
            &[3, 2, 4, 1],
            &[4, 3, 2, 1]
        ])));
        assert!(is_narcissistic(&profile(&[&[1]])));
    }

    #[test]
    fn single_peaked_against_fixed_axes() {
        let p = example_four();
        assert!(is_single_peaked_wrt(&p, &Axis::identity(4)).unwrap());
        assert!(!is_single_peaked_wrt(&p, &Axis::new(vec![2, 1, 3, 4]).unwrap()).unwrap());
        let ridge = profile(&[&[2, 1, 3], &[2, 3, 1], &[3, 2, 1]]);
        assert!(is_single_peaked_wrt(&ridge, &Axis::identity(3)).unwrap());
        let valley = profile(&[&[1, 3, 2], &[2, 1, 3], &[3, 2, 1]]);
        assert!(!is_single_peaked_wrt(&valley, &Axis::identity(3)).unwrap());
        assert!(is_single_peaked_wrt(&p, &Axis::identity(3)).is_err());
    }

    #[test]
    fn implication_and_interval_forms_coincide_on_the_fixtures() {
        for p in [example_four(), example_four_modified()] {
            for perm in (1..=4usize).permutations(4) {
                let axis = Axis::new(perm).unwrap();
                assert_eq!(
                    is_single_peaked_wrt(&p, &axis).unwrap(),
                    single_peaked_wrt_by_intervals(&p, &axis).unwrap()
                );
            }
        }
    }

    #[test]
    fn existential_single_peaked_finds_the_identity_axis() {
        let r = check_single_peaked(&example_four());
        assert!(r.holds());
        assert_eq!(r.axis().unwrap().sequence(), &[1, 2, 3, 4]);
    }

    #[test]
    fn condorcet_triple_yields_a_worst_pattern() {
        let p = profile(&[&[2, 3, 1], &[3, 1, 2], &[1, 2, 3]]);
        // No axis works: confirm exhaustively.
        for perm in (1..=3usize).permutations(3) {
            assert!(!is_single_peaked_wrt(&p, &Axis::new(perm).unwrap()).unwrap());
        }
        let r = check_single_peaked(&p);
        assert!(!r.holds());
        let w = r.witness().unwrap();
        assert!(w.verify(&p));
        assert_eq!(
            *w,
            Witness::Worst {
                voters: [1, 2, 3],
                alternatives: [1, 2, 3]
            }
        );
        assert_eq!(
            find_witness(&p, PropertyFamily::SinglePeaked),
            Some(w.clone())
        );
    }

    #[test]
    fn two_voters_can_still_fail_via_alpha() {
        // Voters 3 and 4 duplicate voter 1, so no triple of voters can
        // rank three different members of a triple last and the first
        // witness the search can reach is the alpha pattern.
        let p = profile(&[&[1, 2, 3, 4], &[2, 4, 3, 1], &[1, 2, 3, 4], &[1, 2, 3, 4]]);
        for perm in (1..=4usize).permutations(4) {
            assert!(!is_single_peaked_wrt(&p, &Axis::new(perm).unwrap()).unwrap());
        }
        let r = check_single_peaked(&p);
        let w = r.witness().unwrap();
        assert!(w.verify(&p));
        assert_eq!(
            *w,
            Witness::Alpha {
                voters: [1, 2],
                alternatives: [1, 2, 3, 4]
            }
        );
    }

    #[test]
    fn single_crossing_against_fixed_orders() {
        assert!(is_single_crossing_wrt(&example_four(), &Axis::identity(4)).unwrap());
        assert!(!is_single_crossing_wrt(&example_four_modified(), &Axis::identity(4)).unwrap());
        let two = profile(&[&[2, 1], &[1, 2]]);
        assert!(is_single_crossing_wrt(&two, &Axis::identity(2)).unwrap());
        assert!(is_single_crossing_wrt(&two, &Axis::new(vec![2, 1]).unwrap()).unwrap());
    }

    #[test]
    fn crossing_and_interval_forms_coincide_on_the_fixtures() {
        for p in [example_four(), example_four_modified()] {
            for perm in (1..=4usize).permutations(4) {
                let order = Axis::new(perm).unwrap();
                assert_eq!(
                    is_single_crossing_wrt(&p, &order).unwrap(),
                    single_crossing_wrt_by_intervals(&p, &order).unwrap()
                );
            }
        }
    }

    #[test]
    fn existential_single_crossing_sorts_by_disagreement() {
        let r = check_single_crossing(&example_four());
        assert!(r.holds());
        assert_eq!(r.axis().unwrap().sequence(), &[1, 2, 3, 4]);
        let single = profile(&[&[1]]);
        assert!(check_single_crossing(&single).holds());
    }

    #[test]
    fn modified_example_fails_single_crossing_with_a_delta() {
        let p = example_four_modified();
        let r = check_single_crossing(&p);
        assert!(!r.holds());
        let w = r.witness().unwrap();
        assert!(w.verify(&p));
        assert_eq!(
            *w,
            Witness::Delta {
                voters: [1, 2, 3, 4],
                pairs: [(1, 4), (2, 3)]
            }
        );
        assert_eq!(
            w.to_string(),
            "delta-subprofile: pairs {1,4},{2,3}; voters 1,2,3,4"
        );
        // The same profile also embeds gamma patterns; delta is simply
        // reported first.
        assert!(find_gamma(&p).is_some());
        assert!(find_gamma(&p).unwrap().verify(&p));
    }

    #[test]
    fn witness_search_is_empty_on_recognized_profiles() {
        let p = example_four();
        assert_eq!(find_witness(&p, PropertyFamily::SinglePeaked), None);
        assert_eq!(find_witness(&p, PropertyFamily::SingleCrossing), None);
    }

    #[test]
    fn scn_implies_spn_on_the_example() {
        assert!(scn_implies_spn_check(&example_four()).unwrap());
        let not_narc = profile(&[&[2, 1], &[1, 2]]);
        assert!(matches!(
            scn_implies_spn_check(&not_narc),
            Err(Error::PreconditionViolated { .. })
        ));
        let not_sc = example_four_modified();
        assert!(matches!(
            scn_implies_spn_check(&not_sc),
            Err(Error::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn reversal_closure_on_the_example() {
        let p = example_four();
        let axis = Axis::identity(4);
        assert!(is_single_peaked_wrt(&p, &axis).unwrap());
        assert!(is_single_peaked_wrt(&p, &axis.reversed()).unwrap());
    }
}
