//! Ferrers boards and rook numbers.
//!
//! Columns are numbered left to right and rows top to bottom, both from 1, so
//! the cell `(1, 1)` sits in the top left corner and every column hangs from a
//! common top edge.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{Letter, Word};

/// Cell limit for exhaustive placement enumeration.
pub const MAX_BRUTEFORCE_CELLS: usize = 64;
/// Limit on `columns * rows` for [`enumerate_boards`].
pub const MAX_RECTANGLE_CELLS: usize = 64;

/// Column heights `h_1 ≥ h_2 ≥ … ≥ h_n ≥ 0`.
///
/// Zero heights are allowed: a word ending in `D` outlines trailing empty columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if let Some(i) = heights.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "heights must be non-increasing, but h_{} = {} < h_{} = {}",
                i + 1,
                heights[i],
                i + 2,
                heights[i + 1]
            )));
        }
        Ok(FerrersBoard { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    /// Number of cells, `|B|`.
    pub fn cells(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn max_height(&self) -> usize {
        self.heights.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, column: usize, row: usize) -> bool {
        column >= 1 && row >= 1 && self.heights.get(column - 1).is_some_and(|&h| row <= h)
    }

    /// The same cell set with trailing empty columns removed.
    pub fn trimmed(&self) -> FerrersBoard {
        let len = self.heights.iter().rposition(|&h| h > 0).map_or(0, |p| p + 1);
        FerrersBoard {
            heights: self.heights[..len].to_vec(),
        }
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FerrersBoard {
    type Err = Error;

    /// Parses comma-separated heights such as `"4,4,3,1,1"`; `""` is the empty board.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(FerrersBoard::default());
        }
        let mut heights = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let h = part.trim().parse::<usize>().map_err(|_| {
                Error::parse(offset, format!("invalid column height {:?}", part.trim()))
            })?;
            heights.push(h);
            offset += part.len() + 1;
        }
        FerrersBoard::new(heights)
    }
}

/// A set of rooks given as 1-indexed `(column, row)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Placement {
    pub rooks: Vec<(usize, usize)>,
}

impl Placement {
    pub fn new(rooks: Vec<(usize, usize)>) -> Self {
        Placement { rooks }
    }

    pub fn len(&self) -> usize {
        self.rooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooks.is_empty()
    }

    /// Checks that every rook is on the board and no two attack each other.
    pub fn validate(&self, board: &FerrersBoard) -> Result<()> {
        for (i, &(c, r)) in self.rooks.iter().enumerate() {
            if !board.contains(c, r) {
                return Err(Error::Domain(format!("rook at ({c},{r}) is off the board")));
            }
            for &(c2, r2) in &self.rooks[..i] {
                if c == c2 || r == r2 {
                    return Err(Error::Domain(format!(
                        "rooks at ({c2},{r2}) and ({c},{r}) attack each other"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The board outlined by a word: one column per `D`, of height equal to the
/// number of `U`s to its right.
pub fn board_from_word(w: &Word) -> FerrersBoard {
    let mut ups = 0;
    let mut heights = Vec::with_capacity(w.count_d());
    for &l in w.letters().iter().rev() {
        match l {
            Letter::U => ups += 1,
            Letter::D => heights.push(ups),
        }
    }
    heights.reverse();
    FerrersBoard { heights }
}

/// The staircase board outlined by `(U^r D^s)^n`.
pub fn staircase(r: usize, s: usize, n: usize) -> Result<FerrersBoard> {
    if r == 0 || s == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "staircase needs r, s, n >= 1 (got {r}, {s}, {n})"
        )));
    }
    Ok(board_from_word(&Word::normal(r, s).repeat(n)))
}

/// Right-to-left column scan. When the j-th rook (counting from the right,
/// from 0) lands in a column of height `h`, it has `h + j * rows_per_rook`
/// choices, clamped at zero. `rows_per_rook = -1` gives ordinary rook numbers.
pub(crate) fn column_scan(board: &FerrersBoard, rows_per_rook: i64) -> Vec<BigInt> {
    let n = board.columns();
    let mut counts = vec![BigInt::zero(); n + 1];
    counts[0] = BigInt::one();
    for (done, &h) in board.heights.iter().rev().enumerate() {
        for j in (0..=done).rev() {
            if counts[j].is_zero() {
                continue;
            }
            let choices = h as i64 + j as i64 * rows_per_rook;
            if choices > 0 {
                let add = &counts[j] * choices;
                counts[j + 1] += add;
            }
        }
    }
    counts
}

/// Rook numbers `r_0, …, r_n` of a board with `n` columns.
pub fn rook_numbers(board: &FerrersBoard) -> Vec<BigInt> {
    column_scan(board, -1)
}

/// The number of ways to place `k` non-attacking rooks on the board.
pub fn rook_number(board: &FerrersBoard, k: usize) -> BigInt {
    rook_numbers(board)
        .into_iter()
        .nth(k)
        .unwrap_or_else(BigInt::zero)
}

/// Calls `visit` once for every placement of exactly `k` non-attacking rooks.
pub fn for_each_placement(
    board: &FerrersBoard,
    k: usize,
    max_cells: usize,
    mut visit: impl FnMut(&Placement),
) -> Result<()> {
    if board.cells() > max_cells {
        return Err(Error::Resource(format!(
            "placement enumeration is limited to {max_cells} cells, board has {}",
            board.cells()
        )));
    }
    let mut current = Placement::default();
    place(board, 0, k, 0, &mut current, &mut visit);
    Ok(())
}

fn place(
    board: &FerrersBoard,
    column: usize,
    remaining: usize,
    used_rows: u64,
    current: &mut Placement,
    visit: &mut impl FnMut(&Placement),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    if board.columns() - column < remaining {
        return;
    }
    // leave this column empty
    place(board, column + 1, remaining, used_rows, current, visit);
    for row in 1..=board.heights[column] {
        let bit = 1u64 << (row - 1);
        if used_rows & bit == 0 {
            current.rooks.push((column + 1, row));
            place(board, column + 1, remaining - 1, used_rows | bit, current, visit);
            current.rooks.pop();
        }
    }
}

/// Rook number by direct enumeration of placements.
pub fn rook_number_bruteforce(board: &FerrersBoard, k: usize) -> Result<BigInt> {
    let mut count = 0u64;
    for_each_placement(board, k, MAX_BRUTEFORCE_CELLS, |_| count += 1)?;
    Ok(BigInt::from(count))
}

/// Every Ferrers board inside a `columns × rows` rectangle, as height
/// sequences of length `columns`, in lexicographically descending order.
pub fn enumerate_boards(columns: usize, rows: usize) -> Result<Vec<FerrersBoard>> {
    if columns.saturating_mul(rows) > MAX_RECTANGLE_CELLS {
        return Err(Error::Resource(format!(
            "board enumeration is limited to {MAX_RECTANGLE_CELLS}-cell rectangles, got {columns}x{rows}"
        )));
    }
    let mut out = Vec::new();
    let mut heights = Vec::with_capacity(columns);
    fill(columns, rows, &mut heights, &mut out);
    Ok(out)
}

fn fill(columns: usize, cap: usize, heights: &mut Vec<usize>, out: &mut Vec<FerrersBoard>) {
    if heights.len() == columns {
        out.push(FerrersBoard {
            heights: heights.clone(),
        });
        return;
    }
    for h in (0..=cap).rev() {
        heights.push(h);
        fill(columns, h, heights, out);
        heights.pop();
    }
}
