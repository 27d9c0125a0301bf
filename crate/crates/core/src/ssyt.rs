//! Semistandard Young tableaux of staircase shape (m, m−1, …, 1) with
//! entries in 1..=m: rows weakly increase, columns strictly increase.
//!
//! Their number is 2^(m choose 2), reachable two independent ways: a
//! hook-content product evaluated in exact integer arithmetic, and the
//! closed power-of-two form. Enumeration streams tableaux in
//! lexicographic order of the row-major entry sequence.

use std::fmt;

use num_bigint::BigUint;

use crate::error::Error;

/// A validated staircase tableau of a given order m ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    /// Validates shape and monotonicity; row i (1-based) must hold
    /// m−i+1 entries from 1..=m.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidTableau {
                reason: "no rows".into(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m - i {
                return Err(Error::InvalidTableau {
                    reason: format!(
                        "row {} has {} entries, expected {}",
                        i + 1,
                        row.len(),
                        m - i
                    ),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > m {
                    return Err(Error::InvalidTableau {
                        reason: format!(
                            "entry {} at row {}, column {} outside 1..={}",
                            v,
                            i + 1,
                            j + 1,
                            m
                        ),
                    });
                }
                if j > 0 && row[j - 1] > v {
                    return Err(Error::InvalidTableau {
                        reason: format!("row {} decreases at column {}", i + 1, j + 1),
                    });
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::InvalidTableau {
                        reason: format!(
                            "column {} does not strictly increase at row {}",
                            j + 1,
                            i + 1
                        ),
                    });
                }
            }
        }
        Ok(Ssyt { rows })
    }

    /// The order m (number of rows; row 1 has m entries).
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 1-based (row, column). Panics if outside the staircase.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// True iff `rows` forms a valid staircase tableau. Malformed shapes
/// simply yield false.
pub fn validate_ssyt(rows: &[Vec<usize>]) -> bool {
    Ssyt::new(rows.to_vec()).is_ok()
}

/// Hook lengths and contents for every cell of the staircase of order m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTable {
    pub order: usize,
    /// lengths[i-1][j-1] = 2(m−i−j)+3; always odd.
    pub lengths: Vec<Vec<usize>>,
    /// contents[i-1][j-1] = m−i+j.
    pub contents: Vec<Vec<usize>>,
}

/// Computes hook lengths and contents cell by cell.
pub fn hook_table(m: usize) -> Result<HookTable, Error> {
    if m < 1 {
        return Err(Error::InvalidArgument {
            reason: "tableau order must be at least 1".into(),
        });
    }
    let mut lengths = Vec::with_capacity(m);
    let mut contents = Vec::with_capacity(m);
    for i in 1..=m {
        let width = m - i + 1;
        let mut lrow = Vec::with_capacity(width);
        let mut crow = Vec::with_capacity(width);
        for j in 1..=width {
            // i + j <= m + 1, so the subtraction stays in range.
            lrow.push(2 * m + 3 - 2 * (i + j));
            crow.push(m + j - i);
        }
        lengths.push(lrow);
        contents.push(crow);
    }
    Ok(HookTable {
        order: m,
        lengths,
        contents,
    })
}

/// Number of staircase tableaux via the hook-content product
/// ∏ (content / hook) over all cells, evaluated exactly.
pub fn count_ssyt_hook_formula(m: usize) -> Result<BigUint, Error> {
    let table = hook_table(m)?;
    let mut numerator = BigUint::from(1u8);
    let mut denominator = BigUint::from(1u8);
    for i in 0..m {
        for j in 0..table.lengths[i].len() {
            numerator *= BigUint::from(table.contents[i][j]);
            denominator *= BigUint::from(table.lengths[i][j]);
        }
    }
    if &numerator % &denominator != BigUint::from(0u8) {
        return Err(Error::Internal {
            reason: format!("hook-content product for m = {m} is not integral"),
        });
    }
    Ok(numerator / denominator)
}

/// Number of staircase tableaux in closed form: 2^(m choose 2).
pub fn count_ssyt_closed(m: usize) -> BigUint {
    let exponent = m.saturating_sub(1) * m / 2;
    BigUint::from(1u8) << exponent
}

/// Streams all staircase tableaux of order m in lexicographic order of
/// the row-major entry sequence. `m = 0` yields nothing.
pub fn enumerate_ssyt(m: usize) -> SsytIter {
    SsytIter::new(m)
}

/// Backtracking enumerator over staircase fillings.
///
/// Cells are visited row-major. A cell at (i, j) must be at least its
/// left neighbour, strictly greater than the cell above, and at most
/// i+j−1 so the rest of its column can still strictly increase up to m.
/// Any prefix satisfying these bounds extends greedily to a full
/// tableau, so the search never dead-ends and runs in time linear in
/// the output.
pub struct SsytIter {
    m: usize,
    /// (row, column), 1-based, row-major.
    cells: Vec<(usize, usize)>,
    /// Flat row-major values for the current partial filling.
    values: Vec<usize>,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(m: usize) -> Self {
        let mut cells = Vec::new();
        for i in 1..=m {
            for j in 1..=(m - i + 1) {
                cells.push((i, j));
            }
        }
        let len = cells.len();
        SsytIter {
            m,
            cells,
            values: vec![0; len],
            started: false,
            done: m == 0,
        }
    }

    fn row_width(&self, i: usize) -> usize {
        self.m - i + 1
    }

    fn flat_index(&self, i: usize, j: usize) -> usize {
        // Rows 1..i-1 contribute m + (m-1) + … + (m-i+2) cells.
        let above = i - 1;
        above * (self.m + 1) - above * (above + 1) / 2 + (j - 1)
    }

    fn lower_bound(&self, k: usize) -> usize {
        let (i, j) = self.cells[k];
        let mut low = 1;
        if j > 1 {
            low = low.max(self.values[k - 1]);
        }
        if i > 1 {
            low = low.max(self.values[self.flat_index(i - 1, j)] + 1);
        }
        low
    }

    fn upper_bound(&self, k: usize) -> usize {
        let (i, j) = self.cells[k];
        i + j - 1
    }

    /// Fills cells k.. with their minimal admissible values.
    fn fill_minimal_from(&mut self, k: usize) {
        for t in k..self.cells.len() {
            let low = self.lower_bound(t);
            debug_assert!(low <= self.upper_bound(t));
            self.values[t] = low;
        }
    }

    /// Advances to the lexicographic successor; false when exhausted.
    fn step(&mut self) -> bool {
        let mut k = self.cells.len();
        while k > 0 {
            k -= 1;
            if self.values[k] < self.upper_bound(k) {
                // The lower bound only depends on earlier cells, so any
                // value up to the upper bound stays admissible.
                self.values[k] += 1;
                self.fill_minimal_from(k + 1);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Ssyt {
        let mut rows = Vec::with_capacity(self.m);
        let mut k = 0;
        for i in 1..=self.m {
            let width = self.row_width(i);
            rows.push(self.values[k..k + width].to_vec());
            k += width;
        }
        Ssyt::new(rows).expect("enumerator emits valid tableaux")
    }
}

impl Iterator for SsytIter {
    type Item = Ssyt;

    fn next(&mut self) -> Option<Ssyt> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_minimal_from(0);
        } else if !self.step() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_the_golden_cases() {
        assert!(validate_ssyt(&[vec![1, 1, 2], vec![2, 3], vec![3]]));
        // weak row decrease is fine to reject only when strict: 1,1 rows ok,
        // but a column repeat is not.
        assert!(!validate_ssyt(&[vec![1, 2, 2], vec![2, 2], vec![3]]));
        // bad shape: row 2 too long
        assert!(!validate_ssyt(&[vec![1, 1, 1], vec![2, 2, 3], vec![3]]));
        assert!(validate_ssyt(&[vec![1]]));
        assert!(!validate_ssyt(&[]));
        // entry above m
        assert!(!validate_ssyt(&[vec![1, 4, 4], vec![2, 3], vec![3]]));
    }

    #[test]
    fn hook_table_order_three() {
        let t = hook_table(3).unwrap();
        assert_eq!(t.lengths, vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(t.contents, vec![vec![3, 4, 5], vec![2, 3], vec![1]]);
    }

    #[test]
    fn hook_table_order_one_and_zero() {
        let t = hook_table(1).unwrap();
        assert_eq!(t.lengths, vec![vec![1]]);
        assert_eq!(t.contents, vec![vec![1]]);
        assert!(hook_table(0).is_err());
    }

    #[test]
    fn hook_lengths_are_odd() {
        for m in 1..=10 {
            let t = hook_table(m).unwrap();
            assert!(t.lengths.iter().flatten().all(|h| h % 2 == 1));
        }
    }

    #[test]
    fn hook_lengths_match_the_arm_and_leg_count() {
        // A cell's hook is itself plus everything to its right in the row
        // and below it in the column.
        for m in 1..=10 {
            let t = hook_table(m).unwrap();
            for i in 1..=m {
                for j in 1..=(m - i + 1) {
                    let right = (m - i + 1) - j;
                    let below = (m + 1 - j) - i;
                    assert_eq!(t.lengths[i - 1][j - 1], 1 + right + below);
                }
            }
        }
    }

    #[test]
    fn counts_agree_on_small_orders() {
        assert_eq!(count_ssyt_hook_formula(2).unwrap(), BigUint::from(2u8));
        assert_eq!(count_ssyt_hook_formula(3).unwrap(), BigUint::from(8u8));
        assert_eq!(count_ssyt_closed(3), BigUint::from(8u8));
        assert_eq!(count_ssyt_closed(1), BigUint::from(1u8));
        assert_eq!(count_ssyt_closed(6), BigUint::from(32768u32));
        assert_eq!(count_ssyt_hook_formula(5).unwrap(), BigUint::from(1024u32));
    }

    #[test]
    fn enumerates_the_eight_order_three_tableaux_in_order() {
        let got: Vec<Vec<Vec<usize>>> = enumerate_ssyt(3).map(|t| t.rows().to_vec()).collect();
        let expect = vec![
            vec![vec![1, 1, 1], vec![2, 2], vec![3]],
            vec![vec![1, 1, 1], vec![2, 3], vec![3]],
            vec![vec![1, 1, 2], vec![2, 2], vec![3]],
            vec![vec![1, 1, 2], vec![2, 3], vec![3]],
            vec![vec![1, 1, 3], vec![2, 2], vec![3]],
            vec![vec![1, 1, 3], vec![2, 3], vec![3]],
            vec![vec![1, 2, 2], vec![2, 3], vec![3]],
            vec![vec![1, 2, 3], vec![2, 3], vec![3]],
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn enumeration_edge_orders() {
        assert_eq!(enumerate_ssyt(0).count(), 0);
        let ones: Vec<_> = enumerate_ssyt(1).collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].rows(), &[vec![1]]);
    }

    /// Odometer over all assignments of 1..=m to `len` cells.
    fn next_assignment(assignment: &mut [usize], m: usize) -> bool {
        for pos in (0..assignment.len()).rev() {
            if assignment[pos] < m {
                assignment[pos] += 1;
                for v in assignment[pos + 1..].iter_mut() {
                    *v = 1;
                }
                return true;
            }
        }
        false
    }

    #[test]
    fn enumeration_matches_naive_filtering() {
        // Independent route: try every assignment of 1..=m to the cells
        // and keep the valid ones.
        for m in 1..=4usize {
            let cell_count = m * (m + 1) / 2;
            let mut naive = 0usize;
            let mut assignment = vec![1usize; cell_count];
            loop {
                let mut rows = Vec::new();
                let mut k = 0;
                for i in 1..=m {
                    rows.push(assignment[k..k + (m - i + 1)].to_vec());
                    k += m - i + 1;
                }
                if validate_ssyt(&rows) {
                    naive += 1;
                }
                if !next_assignment(&mut assignment, m) {
                    break;
                }
            }
            let enumerated = enumerate_ssyt(m).count();
            assert_eq!(enumerated, naive, "m = {m}");
            assert_eq!(
                BigUint::from(enumerated),
                count_ssyt_closed(m),
                "closed form at m = {m}"
            );
        }
    }

    #[test]
    fn first_column_is_forced() {
        for m in 1..=5 {
            for t in enumerate_ssyt(m) {
                for i in 1..=m {
                    assert_eq!(t.get(i, 1), i);
                }
            }
        }
    }

    #[test]
    fn no_duplicates_and_counts_match() {
        for m in 1..=6 {
            let all: Vec<_> = enumerate_ssyt(m).collect();
            let unique: std::collections::BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(all.len(), unique.len());
            assert_eq!(BigUint::from(all.len()), count_ssyt_closed(m));
            assert_eq!(
                BigUint::from(all.len()),
                count_ssyt_hook_formula(m).unwrap()
            );
        }
    }

    #[test]
    fn doubling_recurrence_holds() {
        for m in 1..=12usize {
            let lhs = count_ssyt_closed(m + 1);
            let rhs = count_ssyt_closed(m) << m;
            assert_eq!(lhs, rhs);
        }
    }
}
