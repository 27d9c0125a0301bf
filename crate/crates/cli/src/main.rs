//! Command line front end for the profile and tableau library.
//!
//! Exit codes are part of the contract: 0 for success or PASS, 1 for a
//! failed property or violated precondition, 2 for usage and parse
//! errors, 3 for refusing a computation above the documented ceilings.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use peakcross::*;

/// Enumeration refusal thresholds. Counting has no ceiling; these only
/// guard commands that stream whole families.
const ENUMERATE_SPN_CEILING: usize = 7;
const ENUMERATE_SCN_CEILING: usize = 8;
const ENUMERATE_SSYT_CEILING: usize = 7;
const VERIFY_CEILING: usize = 7;

#[derive(Parser)]
#[command(
    name = "peakcross",
    about = "Recognize, canonicalize, count and enumerate narcissistic single-peaked \
             and single-crossing preference profiles, and map them to staircase tableaux",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check properties of a profile read from FILE ("-" for stdin)
    Check {
        file: String,
        /// Fixed axis (for sp) or voter order (for sc), comma-separated ids
        #[arg(long, value_delimiter = ',')]
        axis: Option<Vec<usize>>,
        /// Property to check; default checks narcissistic, sp and sc
        #[arg(long, value_enum)]
        property: Option<Property>,
    },
    /// Print the exact size of a family in decimal
    Count {
        #[arg(value_enum)]
        family: CountFamily,
        #[arg(long)]
        n: usize,
    },
    /// Stream every member of a family, one document per blank-line-separated block
    Enumerate {
        #[arg(value_enum)]
        family: EnumerateFamily,
        #[arg(long)]
        n: usize,
        /// Stop after this many items
        #[arg(long)]
        limit: Option<usize>,
        /// Print only the number of items that would be streamed
        #[arg(long)]
        count_only: bool,
    },
    /// Convert between canonical single-crossing profiles and tableaux
    Map {
        #[arg(value_enum)]
        direction: MapDirection,
        file: String,
    },
    /// Relabel a single-peaked narcissistic profile into canonical form
    Canonicalize { file: String },
    /// Cross-check counts, enumerations and round trips at one size
    Verify {
        #[arg(long)]
        n: usize,
        /// Also compare against the brute-force walk over all narcissistic profiles
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Property {
    Narcissistic,
    Sp,
    Sc,
    Spn,
    Scn,
}

#[derive(Copy, Clone, ValueEnum)]
enum CountFamily {
    Spn,
    Scn,
    Ssyt,
    Narcissistic,
}

#[derive(Copy, Clone, ValueEnum)]
enum EnumerateFamily {
    Spn,
    Scn,
    Ssyt,
}

#[derive(Copy, Clone, ValueEnum)]
enum MapDirection {
    ToSsyt,
    ToProfile,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check {
            file,
            axis,
            property,
        } => check(&file, axis, property),
        Command::Count { family, n } => count(family, n),
        Command::Enumerate {
            family,
            n,
            limit,
            count_only,
        } => enumerate(family, n, limit, count_only),
        Command::Map { direction, file } => map(direction, &file),
        Command::Canonicalize { file } => canonicalize_file(&file),
        Command::Verify { n, oracle } => verify(n, oracle),
    }
}

fn read_input(file: &str) -> Result<String, Failure> {
    if file == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(file).map_err(|e| Failure::usage(format!("reading {file}: {e}")))
    }
}

fn load_profile(file: &str) -> Result<PreferenceProfile, Failure> {
    parse_profile(&read_input(file)?).map_err(|e| Failure::usage(format!("{file}: {e}")))
}

fn load_tableau(file: &str) -> Result<Ssyt, Failure> {
    parse_tableau(&read_input(file)?).map_err(|e| Failure::usage(format!("{file}: {e}")))
}

fn joined(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Outcome of one property check: pass/fail plus an optional detail
/// line (axis, order or witness).
struct Verdict {
    pass: bool,
    detail: Option<String>,
}

fn sp_verdict(p: &PreferenceProfile) -> Verdict {
    match check_single_peaked(p) {
        RecognitionResult::Holds { axis } => Verdict {
            pass: true,
            detail: axis.map(|a| format!("axis: {}", joined(a.sequence()))),
        },
        RecognitionResult::Fails { witness } => Verdict {
            pass: false,
            detail: Some(witness.to_string()),
        },
    }
}

fn sc_verdict(p: &PreferenceProfile) -> Verdict {
    match check_single_crossing(p) {
        RecognitionResult::Holds { axis } => Verdict {
            pass: true,
            detail: axis.map(|o| format!("order: {}", joined(o.sequence()))),
        },
        RecognitionResult::Fails { witness } => Verdict {
            pass: false,
            detail: Some(witness.to_string()),
        },
    }
}

fn narcissistic_verdict(p: &PreferenceProfile) -> Verdict {
    Verdict {
        pass: is_narcissistic(p),
        detail: None,
    }
}

fn conjunction(p: &PreferenceProfile, second: fn(&PreferenceProfile) -> Verdict) -> Verdict {
    if !is_narcissistic(p) {
        return Verdict {
            pass: false,
            detail: Some("not narcissistic".into()),
        };
    }
    second(p)
}

fn print_verdict(v: &Verdict) -> u8 {
    println!("{}", if v.pass { "PASS" } else { "FAIL" });
    if let Some(detail) = &v.detail {
        println!("{detail}");
    }
    u8::from(!v.pass)
}

fn check(file: &str, axis: Option<Vec<usize>>, property: Option<Property>) -> Result<u8, Failure> {
    let p = load_profile(file)?;

    if let Some(sequence) = axis {
        let axis = Axis::new(sequence).map_err(|e| Failure::usage(format!("--axis: {e}")))?;
        if axis.n() != p.n() {
            return Err(Failure::usage(format!(
                "--axis names {} ids but the profile has {}",
                axis.n(),
                p.n()
            )));
        }
        let pass = match property {
            Some(Property::Sp) => is_single_peaked_wrt(&p, &axis).expect("sizes match"),
            Some(Property::Sc) => is_single_crossing_wrt(&p, &axis).expect("sizes match"),
            _ => {
                return Err(Failure::usage(
                    "--axis requires --property sp or --property sc",
                ))
            }
        };
        return Ok(print_verdict(&Verdict { pass, detail: None }));
    }

    match property {
        Some(Property::Narcissistic) => Ok(print_verdict(&narcissistic_verdict(&p))),
        Some(Property::Sp) => Ok(print_verdict(&sp_verdict(&p))),
        Some(Property::Sc) => Ok(print_verdict(&sc_verdict(&p))),
        Some(Property::Spn) => Ok(print_verdict(&conjunction(&p, sp_verdict))),
        Some(Property::Scn) => Ok(print_verdict(&conjunction(&p, sc_verdict))),
        None => {
            let checks = [
                ("narcissistic", narcissistic_verdict(&p)),
                ("single-peaked", sp_verdict(&p)),
                ("single-crossing", sc_verdict(&p)),
            ];
            let mut all_pass = true;
            for (label, verdict) in &checks {
                let mark = if verdict.pass { "PASS" } else { "FAIL" };
                match &verdict.detail {
                    Some(detail) => println!("{label}: {mark} ({detail})"),
                    None => println!("{label}: {mark}"),
                }
                all_pass &= verdict.pass;
            }
            Ok(u8::from(!all_pass))
        }
    }
}

fn count(family: CountFamily, n: usize) -> Result<u8, Failure> {
    let value = match family {
        CountFamily::Spn => count_spn(n).map_err(|e| Failure::usage(e.to_string()))?,
        CountFamily::Scn => count_scn(n).map_err(|e| Failure::usage(e.to_string()))?,
        CountFamily::Ssyt => {
            count_ssyt_hook_formula(n).map_err(|e| Failure::usage(e.to_string()))?
        }
        CountFamily::Narcissistic => count_narcissistic(n),
    };
    println!("{value}");
    Ok(0)
}

fn guard_enumeration(family: EnumerateFamily, n: usize) -> Result<(), Failure> {
    let (ceiling, name) = match family {
        EnumerateFamily::Spn => (ENUMERATE_SPN_CEILING, "spn"),
        EnumerateFamily::Scn => (ENUMERATE_SCN_CEILING, "scn"),
        EnumerateFamily::Ssyt => (ENUMERATE_SSYT_CEILING, "ssyt"),
    };
    if n > ceiling {
        return Err(Failure::resource(format!(
            "n = {n} exceeds the {name} enumeration ceiling {ceiling}; use `count` for sizes"
        )));
    }
    Ok(())
}

fn stream<I: Iterator<Item = String>>(docs: I, limit: Option<usize>, count_only: bool) -> u8 {
    let capped: Box<dyn Iterator<Item = String>> = match limit {
        Some(k) => Box::new(docs.take(k)),
        None => Box::new(docs),
    };
    if count_only {
        println!("{}", capped.count());
        return 0;
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for (idx, doc) in capped.enumerate() {
        let sep = if idx > 0 { "\n" } else { "" };
        if write!(out, "{sep}{doc}").is_err() {
            // Downstream closed the pipe; stop quietly.
            return 0;
        }
    }
    let _ = out.flush();
    0
}

fn enumerate(
    family: EnumerateFamily,
    n: usize,
    limit: Option<usize>,
    count_only: bool,
) -> Result<u8, Failure> {
    guard_enumeration(family, n)?;
    match family {
        EnumerateFamily::Spn => Ok(stream(
            enumerate_spn(n).map(|p| profile_document(&p)),
            limit,
            count_only,
        )),
        EnumerateFamily::Scn => Ok(stream(
            enumerate_scn(n).map(|p| profile_document(&p)),
            limit,
            count_only,
        )),
        EnumerateFamily::Ssyt => Ok(stream(
            enumerate_ssyt(n).map(|t| tableau_document(&t)),
            limit,
            count_only,
        )),
    }
}

fn map(direction: MapDirection, file: &str) -> Result<u8, Failure> {
    match direction {
        MapDirection::ToSsyt => {
            let p = load_profile(file)?;
            let t = profile_to_ssyt(&p).map_err(|e| Failure::domain(e.to_string()))?;
            print!("{}", tableau_document(&t));
        }
        MapDirection::ToProfile => {
            let t = load_tableau(file)?;
            let p = ssyt_to_profile(&t).map_err(|e| Failure::domain(e.to_string()))?;
            print!("{}", profile_document(&p));
        }
    }
    Ok(0)
}

fn canonicalize_file(file: &str) -> Result<u8, Failure> {
    let p = load_profile(file)?;
    let (canonical, relabeling) = canonicalize(&p).map_err(|e| Failure::domain(e.to_string()))?;
    print!("{}", profile_document(&canonical));
    println!("relabeling: {relabeling}");
    Ok(0)
}

fn verify(n: usize, oracle: bool) -> Result<u8, Failure> {
    if n < 2 {
        return Err(Failure::usage("--n must be at least 2"));
    }
    if n > VERIFY_CEILING {
        return Err(Failure::resource(format!(
            "n = {n} exceeds the verification ceiling {VERIFY_CEILING}"
        )));
    }
    if oracle && n > BRUTE_FORCE_CEILING {
        return Err(Failure::resource(format!(
            "--oracle walks all narcissistic profiles and is capped at n = {BRUTE_FORCE_CEILING}"
        )));
    }

    let mut checks: Vec<(String, bool)> = Vec::new();
    let m = n - 1;

    checks.push((
        format!("tableau count by hook formula equals 2^C({m},2)"),
        count_ssyt_hook_formula(m).expect("m >= 1") == count_ssyt_closed(m),
    ));
    let spn: Vec<PreferenceProfile> = enumerate_spn(n).collect();
    let scn: Vec<PreferenceProfile> = enumerate_scn(n).collect();
    checks.push((
        format!("single-peaked family stream matches its count at n = {n}"),
        num_bigint_eq(spn.len(), &count_spn(n).expect("n >= 2")),
    ));
    checks.push((
        format!("single-crossing family stream matches its count at n = {n}"),
        num_bigint_eq(scn.len(), &count_scn(n).expect("n >= 2")),
    ));
    checks.push((
        "every streamed single-crossing profile passes the canonical shape check".into(),
        scn.iter().all(check_canonical_scn),
    ));
    checks.push((
        "profile-to-tableau-to-profile round trip is the identity".into(),
        scn.iter().all(|p| {
            profile_to_ssyt(p)
                .and_then(|t| ssyt_to_profile(&t))
                .map(|q| q == *p)
                .unwrap_or(false)
        }),
    ));
    checks.push((
        format!("tableau-to-profile-to-tableau round trip is the identity at order {m}"),
        enumerate_ssyt(m).all(|t| {
            ssyt_to_profile(&t)
                .and_then(|p| profile_to_ssyt(&p))
                .map(|u| u == t)
                .unwrap_or(false)
        }),
    ));
    checks.push((
        "every single-crossing family member is single-peaked".into(),
        scn.iter().all(|p| check_single_peaked(p).holds()),
    ));
    checks.push((
        "single-crossing filter over the single-peaked family gives the same set".into(),
        {
            let filtered: BTreeSet<&PreferenceProfile> = spn
                .iter()
                .filter(|p| is_single_crossing_wrt(p, &Axis::identity(n)).expect("sizes match"))
                .collect();
            let direct: BTreeSet<&PreferenceProfile> = scn.iter().collect();
            filtered == direct
        },
    ));
    if oracle {
        checks.push((
            "brute-force walk agrees with the single-peaked count".into(),
            oracle_count(n, CanonicalProperty::SpnCanonical).expect("within ceiling")
                == count_spn(n).expect("n >= 2"),
        ));
        checks.push((
            "brute-force walk agrees with the single-crossing count".into(),
            oracle_count(n, CanonicalProperty::ScnCanonical).expect("within ceiling")
                == count_scn(n).expect("n >= 2"),
        ));
    }

    let width = checks
        .iter()
        .map(|(label, _)| label.len())
        .max()
        .unwrap_or(0);
    let mut all_pass = true;
    for (label, pass) in &checks {
        println!("{label:<width$}  {}", if *pass { "PASS" } else { "FAIL" });
        all_pass &= pass;
    }
    Ok(u8::from(!all_pass))
}

fn num_bigint_eq(len: usize, count: &num_bigint::BigUint) -> bool {
    num_bigint::BigUint::from(len) == *count
}
