//! Maximal classical dimension per `(n, k, d)` and the published bound table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::par::{self, Execution};

use super::{feasible, Verdict};

/// Largest `m` for which `[[n, k:m, d]]` passes the program, scanning down
/// from `n - k`; `None` if even `m = 0` fails.
pub fn max_m(n: usize, k: usize, d: usize, use_shadow: bool) -> Result<Option<usize>> {
    if k > n || d > n {
        return Ok(None);
    }
    for m in (0..=n - k).rev() {
        if feasible(n, k, m, d, use_shadow)?.verdict == Verdict::Feasible {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

const NA: Option<u8> = None;

macro_rules! row {
    (@ -) => { NA };
    (@ $x:literal) => { Some($x) };
    ($($x:tt)*) => { [$(row!(@ $x)),*] };
}

/// Published maxima for `d = 3`, `n = 5..=14`, `k = 0..=8`.
pub const EXPECTED_D3: [[Option<u8>; 9]; 10] = [
    row!(2 0 - - - - - - -),
    row!(3 0 - - - - - - -),
    row!(4 2 - - - - - - -),
    row!(4 3 1 0 - - - - -),
    row!(5 4 3 1 - - - - -),
    row!(6 5 4 2 1 - - - -),
    row!(7 6 5 4 2 0 - - -),
    row!(8 7 6 5 3 2 0 - -),
    row!(9 8 7 5 5 3 1 0 -),
    row!(10 9 8 7 6 5 3 1 0),
];

/// Published maxima for `d = 4`, `n = 5..=14`, `k = 0..=6`.
pub const EXPECTED_D4: [[Option<u8>; 7]; 10] = [
    row!(1 - - - - - -),
    row!(2 - - - - - -),
    row!(3 - - - - - -),
    row!(4 - - - - - -),
    row!(4 - - - - - -),
    row!(5 3 1 - - - -),
    row!(6 4 2 - - - -),
    row!(7 5 4 2 0 - -),
    row!(8 6 5 4 2 0 -),
    row!(9 6 6 5 3 2 0),
];

/// Published maxima for `d = 5`, `n = 5..=14`, `k = 0..=3`.
pub const EXPECTED_D5: [[Option<u8>; 4]; 10] = [
    row!(1 - - -),
    row!(1 - - -),
    row!(1 - - -),
    row!(2 - - -),
    row!(2 - - -),
    row!(3 - - -),
    row!(4 0 - -),
    row!(4 2 - -),
    row!(5 4 - -),
    row!(6 5 3 1),
];

/// The cell excluded by an argument outside linear programming.
pub const STARRED: (usize, usize, usize) = (4, 13, 5);

/// Published value for `(d, n, k)`, `Some(None)` for a printed dash, `None`
/// outside the table.
pub fn expected(d: usize, n: usize, k: usize) -> Option<Option<usize>> {
    if !(5..=14).contains(&n) {
        return None;
    }
    let i = n - 5;
    let cell = match d {
        3 => EXPECTED_D3[i].get(k).copied(),
        4 => EXPECTED_D4[i].get(k).copied(),
        5 => EXPECTED_D5[i].get(k).copied(),
        _ => None,
    }?;
    Some(cell.map(usize::from))
}

pub fn columns(d: usize) -> usize {
    match d {
        3 => 9,
        4 => 7,
        5 => 4,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    Mismatch,
    /// `k = 0` cells are listed from classical code tables; reported only.
    Reported,
    /// Relies on a nonexistence result outside the program.
    Starred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub d: usize,
    pub n: usize,
    pub k: usize,
    pub computed: Option<usize>,
    pub expected: Option<usize>,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub use_shadow: bool,
    pub cells: Vec<TableCell>,
}

impl Table1 {
    pub fn mismatches(&self) -> Vec<&TableCell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Mismatch).collect()
    }

    pub fn cell(&self, d: usize, n: usize, k: usize) -> Option<&TableCell> {
        self.cells.iter().find(|c| (c.d, c.n, c.k) == (d, n, k))
    }

    /// Aligned text, one block per distance; `a/b` marks a cell whose
    /// computed value `a` differs from the printed `b`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let show = |v: Option<usize>| v.map_or("--".to_string(), |x| x.to_string());
        for d in [3, 4, 5] {
            let cells: Vec<&TableCell> = self.cells.iter().filter(|c| c.d == d).collect();
            if cells.is_empty() {
                continue;
            }
            let _ = writeln!(out, "d = {d}");
            let _ = write!(out, "{:>4} |", "n\\k");
            for k in 0..columns(d) {
                let _ = write!(out, "{k:>7}");
            }
            out.push('\n');
            let mut ns: Vec<usize> = cells.iter().map(|c| c.n).collect();
            ns.dedup();
            for n in ns {
                let _ = write!(out, "{n:>4} |");
                for k in 0..columns(d) {
                    let text = match self.cell(d, n, k) {
                        Some(c) => {
                            let mut s = show(c.computed);
                            match c.status {
                                CellStatus::Mismatch | CellStatus::Reported if c.computed != c.expected => {
                                    s = format!("{s}/{}", show(c.expected));
                                }
                                _ => {}
                            }
                            if c.status == CellStatus::Starred {
                                s.push('*');
                            }
                            s
                        }
                        None => String::new(),
                    };
                    let _ = write!(out, "{text:>7}");
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }
}

/// Computes every table cell for `d ∈ distances` and `n ∈ lengths` and
/// compares against the published values. Cells are independent and run in
/// parallel; the output order is fixed.
pub fn reproduce_table1(
    distances: &[usize],
    lengths: std::ops::RangeInclusive<usize>,
    use_shadow: bool,
    exec: Execution,
) -> Result<Table1> {
    let mut jobs = Vec::new();
    for &d in distances {
        for n in lengths.clone() {
            for k in 0..columns(d) {
                jobs.push((d, n, k));
            }
        }
    }
    let results = par::map_collect(exec, jobs, |(d, n, k)| -> Result<TableCell> {
        let computed = max_m(n, k, d, use_shadow)?;
        let expected = expected(d, n, k).flatten();
        let status = if (d, n, k) == STARRED {
            CellStatus::Starred
        } else if k == 0 {
            CellStatus::Reported
        } else if computed == expected {
            CellStatus::Match
        } else {
            CellStatus::Mismatch
        };
        Ok(TableCell { d, n, k, computed, expected, status })
    });
    Ok(Table1 {
        use_shadow,
        cells: results.into_iter().collect::<Result<Vec<_>>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_values_spot_checks() {
        assert_eq!(expected(3, 10, 3), Some(Some(2)));
        assert_eq!(expected(5, 13, 1), Some(Some(4)));
        assert_eq!(expected(3, 14, 0), Some(Some(10)));
        assert_eq!(expected(4, 11, 0), Some(Some(6)));
        assert_eq!(expected(4, 11, 1), Some(Some(4)));
        assert_eq!(expected(4, 11, 2), Some(Some(2)));
        assert_eq!(expected(4, 11, 3), Some(None));
        assert_eq!(expected(5, 11, 1), Some(Some(0)));
        assert_eq!(expected(4, 13, 5), Some(Some(0)));
        assert_eq!(expected(3, 4, 0), None);
    }
}
