//! Narcissistic preference profiles on the domains where every voter is
//! also an alternative: recognition of single-peaked and single-crossing
//! structure with certifying witnesses, a canonical form under
//! simultaneous relabeling, enumeration and counting in both families,
//! and a bijection between the canonical single-crossing profiles and
//! semistandard Young tableaux of staircase shape.
//!
//! The main entry points:
//!
//! - [`PreferenceProfile`] and [`PreferenceOrder`] model the inputs.
//! - [`check_single_peaked`] and [`check_single_crossing`] either
//!   certify the property (with an axis where one exists) or return a
//!   forbidden subprofile as a [`Witness`].
//! - [`canonicalize`] relabels a narcissistic single-peaked profile
//!   into its canonical form.
//! - [`enumerate_spn`], [`enumerate_scn`], [`count_spn`], [`count_scn`]
//!   walk or count the two families without materializing them.
//! - [`profile_to_ssyt`] and [`ssyt_to_profile`] convert between
//!   canonical single-crossing profiles and staircase tableaux.
//! - [`oracle`] re-derives small counts by brute force so the clever
//!   paths have something to answer to.

#![forbid(unsafe_code)]

pub mod bijection;
pub mod canonical;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod oracle;
pub mod profile;
pub mod recognition;
pub mod ssyt;

pub use bijection::{profile_to_ssyt, ssyt_to_profile};
pub use canonical::{canonicalize, check_canonical_scn, find_reverse_pair, Relabeling};
pub use enumeration::{
    count_narcissistic, count_scn, count_spn, enumerate_scn, enumerate_spn, ScnIter, SpnIter,
};
pub use error::Error;
pub use io::{parse_profile, parse_tableau, profile_document, tableau_document, ParseError};
pub use oracle::{brute_force_narcissistic, oracle_count, CanonicalProperty, BRUTE_FORCE_CEILING};
pub use profile::{diff_pairs, Axis, PairSet, PreferenceOrder, PreferenceProfile};
pub use recognition::{
    check_single_crossing, check_single_peaked, is_narcissistic, is_single_crossing_wrt,
    is_single_peaked_wrt, scn_implies_spn_check, single_crossing_wrt_by_intervals,
    single_peaked_wrt_by_intervals, PropertyFamily, RecognitionResult, Witness,
    AXIS_SEARCH_CEILING,
};
pub use ssyt::{
    count_ssyt_closed, count_ssyt_hook_formula, enumerate_ssyt, hook_table, validate_ssyt,
    HookTable, Ssyt, SsytIter,
};
