//! Plain-text documents for profiles and tableaux.
//!
//! A profile document is a header line holding n followed by n ranking
//! lines, most preferred first. A tableau document is a header line
//! holding the order m followed by the m staircase rows. Tokens are
//! whitespace-separated; lines starting with `#` (after leading
//! whitespace) and blank lines are ignored. Printing uses single
//! spaces, LF endings, and a trailing newline, so parse ∘ print is the
//! identity.

use thiserror::Error;

use crate::error::Error as DomainError;
use crate::profile::PreferenceProfile;
use crate::ssyt::Ssyt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// A token did not parse as a positive integer.
    #[error("line {line}, column {column}: malformed integer")]
    MalformedInteger { line: usize, column: usize },

    /// A ranking line was not a permutation of 1..=n.
    #[error("line {line}: not a permutation of 1..={n}")]
    NotAPermutationLine { line: usize, n: usize },

    /// The document declared one size but delivered another.
    #[error("expected {expected} content lines, found {found}")]
    CountMismatch { expected: usize, found: usize },

    /// A tableau row had the wrong width for its position.
    #[error("line {line}: row has {found} entries, expected {expected}")]
    RowWidth {
        line: usize,
        expected: usize,
        found: usize,
    },

    /// No header line before the document ended.
    #[error("missing header line")]
    MissingHeader,

    /// The header must be a single positive integer.
    #[error("line {line}: header must be a single positive integer")]
    BadHeader { line: usize },

    /// The parsed object violated a structural rule of its type.
    #[error("invalid document: {0}")]
    Domain(#[from] DomainError),
}

/// Significant lines with their 1-based line numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line))
        .filter(|(_, line)| {
            let trimmed = line.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        })
        .collect()
}

/// Tokens of a line with their 1-based starting columns.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut column = 1;
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((column, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
            column = idx + 1;
        }
    }
    if let Some(s) = start {
        out.push((column, &line[s..]));
    }
    out
}

fn parse_header(lines: &[(usize, &str)]) -> Result<usize, ParseError> {
    let &(line_no, line) = lines.first().ok_or(ParseError::MissingHeader)?;
    let tokens = tokens_with_columns(line);
    if tokens.len() != 1 {
        return Err(ParseError::BadHeader { line: line_no });
    }
    let (column, token) = tokens[0];
    let value: usize = token.parse().map_err(|_| ParseError::MalformedInteger {
        line: line_no,
        column,
    })?;
    if value == 0 {
        return Err(ParseError::BadHeader { line: line_no });
    }
    Ok(value)
}

fn parse_int_line(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    tokens_with_columns(line)
        .into_iter()
        .map(|(column, token)| {
            token.parse().map_err(|_| ParseError::MalformedInteger {
                line: line_no,
                column,
            })
        })
        .collect()
}

/// Parses a profile document.
pub fn parse_profile(text: &str) -> Result<PreferenceProfile, ParseError> {
    let lines = significant_lines(text);
    let n = parse_header(&lines)?;
    let body = &lines[1..];
    if body.len() != n {
        return Err(ParseError::CountMismatch {
            expected: n,
            found: body.len(),
        });
    }
    let mut rankings = Vec::with_capacity(n);
    for &(line_no, line) in body {
        let ints = parse_int_line(line_no, line)?;
        let order = crate::profile::PreferenceOrder::new(ints)
            .map_err(|_| ParseError::NotAPermutationLine { line: line_no, n })?;
        if order.n() != n {
            return Err(ParseError::NotAPermutationLine { line: line_no, n });
        }
        rankings.push(order);
    }
    PreferenceProfile::new(rankings).map_err(ParseError::Domain)
}

/// Parses a tableau document.
pub fn parse_tableau(text: &str) -> Result<Ssyt, ParseError> {
    let lines = significant_lines(text);
    let m = parse_header(&lines)?;
    let body = &lines[1..];
    if body.len() != m {
        return Err(ParseError::CountMismatch {
            expected: m,
            found: body.len(),
        });
    }
    let mut rows = Vec::with_capacity(m);
    for (i, &(line_no, line)) in body.iter().enumerate() {
        let ints = parse_int_line(line_no, line)?;
        let expected = m - i;
        if ints.len() != expected {
            return Err(ParseError::RowWidth {
                line: line_no,
                expected,
                found: ints.len(),
            });
        }
        rows.push(ints);
    }
    Ssyt::new(rows).map_err(ParseError::Domain)
}

/// Renders a profile in document form.
pub fn profile_document(p: &PreferenceProfile) -> String {
    let mut out = format!("{}\n", p.n());
    for order in p.orders() {
        out.push_str(&order.to_string());
        out.push('\n');
    }
    out
}

/// Renders a tableau in document form.
pub fn tableau_document(t: &Ssyt) -> String {
    format!("{}\n{}\n", t.order(), t)
}
