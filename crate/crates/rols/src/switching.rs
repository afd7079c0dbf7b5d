//! Local moves that perturb a Latin grid while keeping it Latin.
//!
//! Each move swaps two rows, two columns, or two symbols along a closed
//! cycle (squares) or an open path (rectangles). Moves are *traced* against
//! the unmodified grid into a [`SwitchMove`] — the exact cell set plus old
//! and new values — and then applied atomically, so no intermediate
//! non-Latin state ever exists. The hill-climbing searches lean on this:
//! a traced move can be applied in place, scored, and undone in O(cells).
//!
//! * **Row cycle** — pick rows `r ≠ s` and a start column; follow the
//!   permutation between the two rows to a closed set of columns and swap
//!   the rows there. Works on squares and rectangles alike.
//! * **Column cycle** — the transpose-conjugate of a row cycle; squares only.
//! * **Symbol cycle** — swap two symbols `a ↔ b` along one cycle of the
//!   cells holding them; squares only.
//! * **Column path** — the rectangle analogue of a column cycle: swapping
//!   entries of columns `c, d` row by row, starting from a row whose column-
//!   `c` symbol is absent from column `d`; the trail ends on its own.
//! * **Symbol path** — the rectangle analogue of a symbol cycle, starting
//!   from a cell whose partner symbol is absent from the cell's column.
//!
//! Every cycle move is an involution: applying it twice with the same
//! parameters restores the grid.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::grid::LatinGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    RowCycle,
    ColumnCycle,
    SymbolCycle,
    ColumnPath,
    SymbolPath,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::RowCycle => "row-cycle",
            MoveKind::ColumnCycle => "column-cycle",
            MoveKind::SymbolCycle => "symbol-cycle",
            MoveKind::ColumnPath => "column-path",
            MoveKind::SymbolPath => "symbol-path",
        })
    }
}

/// The drawn parameters of a move. Rows/columns are 0-based indices,
/// symbols are the `1..=n` values themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveParams {
    RowCycle { r: usize, s: usize, start_col: usize },
    ColumnCycle { c: usize, d: usize, start_row: usize },
    SymbolCycle { a: u16, b: u16, start: (usize, usize) },
    ColumnPath { c: usize, d: usize, start_row: usize },
    SymbolPath { a: u16, b: u16, start: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error("row index {row} out of range for a grid with {rows} rows")]
    RowOutOfRange { row: usize, rows: usize },
    #[error("column index {col} out of range for order {order}")]
    ColumnOutOfRange { col: usize, order: usize },
    #[error("symbol {symbol} out of range for order {order}")]
    SymbolOutOfRange { symbol: u16, order: usize },
    #[error("need two distinct rows, got row {0} twice")]
    SameRow(usize),
    #[error("need two distinct columns, got column {0} twice")]
    SameColumn(usize),
    #[error("need two distinct symbols, got symbol {0} twice")]
    SameSymbol(u16),
    #[error("this move needs a full square, grid is {rows}x{order}")]
    NeedsSquare { rows: usize, order: usize },
    #[error("bad start for the move: {0}")]
    BadStart(String),
}

/// A fully resolved move: parameters plus the cells it touches and the
/// values before and after. Produced by the `SwitchMove::*` constructors
/// against a specific grid; applying it to any other grid is a logic error
/// (caught by debug assertions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchMove {
    params: MoveParams,
    cells: Vec<(usize, usize)>,
    old_vals: Vec<u16>,
    new_vals: Vec<u16>,
}

impl SwitchMove {
    pub fn kind(&self) -> MoveKind {
        match self.params {
            MoveParams::RowCycle { .. } => MoveKind::RowCycle,
            MoveParams::ColumnCycle { .. } => MoveKind::ColumnCycle,
            MoveParams::SymbolCycle { .. } => MoveKind::SymbolCycle,
            MoveParams::ColumnPath { .. } => MoveKind::ColumnPath,
            MoveParams::SymbolPath { .. } => MoveKind::SymbolPath,
        }
    }

    pub fn params(&self) -> &MoveParams {
        &self.params
    }

    /// The cells this move rewrites, in trace order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn old_values(&self) -> &[u16] {
        &self.old_vals
    }

    pub fn new_values(&self) -> &[u16] {
        &self.new_vals
    }

    /// The grid with this move applied.
    pub fn apply(&self, grid: &LatinGrid) -> LatinGrid {
        let mut out = grid.clone();
        self.apply_in_place(&mut out);
        out.debug_validate();
        out
    }

    pub(crate) fn apply_in_place(&self, grid: &mut LatinGrid) {
        for (&(i, j), (&old, &new)) in
            self.cells.iter().zip(self.old_vals.iter().zip(&self.new_vals))
        {
            debug_assert_eq!(grid.get(i, j), old, "move applied to a different grid");
            grid.set(i, j, new);
        }
    }

    pub(crate) fn undo_in_place(&self, grid: &mut LatinGrid) {
        for (&(i, j), (&old, &new)) in
            self.cells.iter().zip(self.old_vals.iter().zip(&self.new_vals))
        {
            debug_assert_eq!(grid.get(i, j), new, "undo of a move that was not applied");
            grid.set(i, j, old);
        }
    }

    /// Traces the row cycle through rows `r` and `s` that contains
    /// `start_col`: follow "the symbol below mine in row `s` sits at this
    /// column of row `r`" until the walk closes, then swap the two rows on
    /// the collected columns.
    pub fn row_cycle(
        grid: &LatinGrid,
        r: usize,
        s: usize,
        start_col: usize,
    ) -> Result<SwitchMove, SwitchError> {
        let (k, n) = (grid.rows(), grid.order());
        check_row(r, k)?;
        check_row(s, k)?;
        if r == s {
            return Err(SwitchError::SameRow(r));
        }
        check_col(start_col, n)?;

        // The two rows disagree everywhere (no column repeats a symbol), so
        // the permutation row r ↦ row s is a derangement and every column
        // lies on a cycle of length ≥ 2.
        debug_assert!((0..n).all(|j| grid.get(r, j) != grid.get(s, j)));

        let mut pos_r = vec![0usize; n];
        for j in 0..n {
            pos_r[grid.get(r, j) as usize - 1] = j;
        }
        let mut cols = Vec::new();
        let mut c = start_col;
        loop {
            cols.push(c);
            c = pos_r[grid.get(s, c) as usize - 1];
            if c == start_col {
                break;
            }
        }

        let mut mv = SwitchMove::blank(MoveParams::RowCycle { r, s, start_col });
        for &c in &cols {
            mv.record(grid, r, c, grid.get(s, c));
            mv.record(grid, s, c, grid.get(r, c));
        }
        Ok(mv)
    }

    /// The column analogue of [`SwitchMove::row_cycle`]; squares only.
    /// Equivalent to conjugating a row cycle by transposition.
    pub fn column_cycle(
        grid: &LatinGrid,
        c: usize,
        d: usize,
        start_row: usize,
    ) -> Result<SwitchMove, SwitchError> {
        check_square(grid)?;
        let n = grid.order();
        check_col(c, n)?;
        check_col(d, n)?;
        if c == d {
            return Err(SwitchError::SameColumn(c));
        }
        check_row(start_row, n)?;

        let mut pos_c = vec![0usize; n];
        for i in 0..n {
            pos_c[grid.get(i, c) as usize - 1] = i;
        }
        let mut rows = Vec::new();
        let mut i = start_row;
        loop {
            rows.push(i);
            i = pos_c[grid.get(i, d) as usize - 1];
            if i == start_row {
                break;
            }
        }

        let mut mv = SwitchMove::blank(MoveParams::ColumnCycle { c, d, start_row });
        for &i in &rows {
            mv.record(grid, i, c, grid.get(i, d));
            mv.record(grid, i, d, grid.get(i, c));
        }
        Ok(mv)
    }

    /// Swaps symbols `a ↔ b` along the cycle of `{a, b}`-cells through
    /// `start`; squares only. Cells holding `a` or `b` form disjoint cycles
    /// (each such cell has exactly one partner in its row and one in its
    /// column); only the cycle through `start` is rewritten.
    pub fn symbol_cycle(
        grid: &LatinGrid,
        a: u16,
        b: u16,
        start: (usize, usize),
    ) -> Result<SwitchMove, SwitchError> {
        check_square(grid)?;
        let n = grid.order();
        check_symbol(a, n)?;
        check_symbol(b, n)?;
        if a == b {
            return Err(SwitchError::SameSymbol(a));
        }
        check_row(start.0, n)?;
        check_col(start.1, n)?;
        let held = grid.get(start.0, start.1);
        if held != a && held != b {
            return Err(SwitchError::BadStart(format!(
                "cell ({}, {}) holds {held}, not {a} or {b}",
                start.0, start.1
            )));
        }

        let other = |sym: u16| if sym == a { b } else { a };
        let mut cells = vec![start];
        let (mut i, mut j) = start;
        loop {
            // Across row i to the cell holding the partner symbol…
            let j2 = grid
                .position_in_row(i, other(grid.get(i, j)))
                .expect("square rows contain every symbol");
            if (i, j2) == start {
                break;
            }
            cells.push((i, j2));
            // …then down column j2 to the cell holding the partner of that.
            let i2 = grid
                .position_in_col(j2, other(grid.get(i, j2)))
                .expect("square columns contain every symbol");
            if (i2, j2) == start {
                break;
            }
            cells.push((i2, j2));
            (i, j) = (i2, j2);
        }

        let mut mv = SwitchMove::blank(MoveParams::SymbolCycle { a, b, start });
        for &(i, j) in &cells {
            mv.record(grid, i, j, other(grid.get(i, j)));
        }
        Ok(mv)
    }

    /// Swaps the column-`c` and column-`d` entries along an open trail of
    /// rows, starting at `start_row`. Requires the start symbol
    /// `grid[start_row][c]` to be absent from column `d`, which guarantees
    /// the trail never revisits a row and ends on its own; on a full square
    /// no start qualifies.
    pub fn column_path(
        grid: &LatinGrid,
        c: usize,
        d: usize,
        start_row: usize,
    ) -> Result<SwitchMove, SwitchError> {
        let (k, n) = (grid.rows(), grid.order());
        check_col(c, n)?;
        check_col(d, n)?;
        if c == d {
            return Err(SwitchError::SameColumn(c));
        }
        check_row(start_row, k)?;
        let start_sym = grid.get(start_row, c);
        if grid.position_in_col(d, start_sym).is_some() {
            return Err(SwitchError::BadStart(format!(
                "symbol {start_sym} already appears in column {d}, the trail would not terminate"
            )));
        }

        let mut pos_c: Vec<Option<usize>> = vec![None; n];
        for i in 0..k {
            pos_c[grid.get(i, c) as usize - 1] = Some(i);
        }

        let mut mv = SwitchMove::blank(MoveParams::ColumnPath { c, d, start_row });
        let mut i = start_row;
        loop {
            mv.record(grid, i, c, grid.get(i, d));
            mv.record(grid, i, d, grid.get(i, c));
            // The displaced column-d symbol chases its copy in column c.
            match pos_c[grid.get(i, d) as usize - 1] {
                Some(next) => i = next,
                None => break,
            }
        }
        debug_assert!(mv.cells.len() <= 2 * k);
        Ok(mv)
    }

    /// Swaps symbols `a ↔ b` along the open trail of `{a, b}`-cells through
    /// `start`. Requires `start` to hold `a` or `b` with the partner symbol
    /// absent from the start column (so the trail has a loose end there);
    /// rows of a rectangle are complete, so the trail alternates row/column
    /// steps until a column misses the partner symbol. On a full square no
    /// start qualifies.
    pub fn symbol_path(
        grid: &LatinGrid,
        a: u16,
        b: u16,
        start: (usize, usize),
    ) -> Result<SwitchMove, SwitchError> {
        let (k, n) = (grid.rows(), grid.order());
        check_symbol(a, n)?;
        check_symbol(b, n)?;
        if a == b {
            return Err(SwitchError::SameSymbol(a));
        }
        check_row(start.0, k)?;
        check_col(start.1, n)?;
        let held = grid.get(start.0, start.1);
        if held != a && held != b {
            return Err(SwitchError::BadStart(format!(
                "cell ({}, {}) holds {held}, not {a} or {b}",
                start.0, start.1
            )));
        }
        let other = |sym: u16| if sym == a { b } else { a };
        if grid.position_in_col(start.1, other(held)).is_some() {
            return Err(SwitchError::BadStart(format!(
                "symbol {} also appears in column {}, the trail would not terminate there",
                other(held),
                start.1
            )));
        }

        let mut cells = vec![start];
        let (mut i, mut j) = start;
        loop {
            let j2 = grid
                .position_in_row(i, other(grid.get(i, j)))
                .expect("rectangle rows contain every symbol");
            cells.push((i, j2));
            match grid.position_in_col(j2, other(grid.get(i, j2))) {
                Some(i2) => {
                    cells.push((i2, j2));
                    (i, j) = (i2, j2);
                }
                None => break,
            }
        }

        let mut mv = SwitchMove::blank(MoveParams::SymbolPath { a, b, start });
        for &(i, j) in &cells {
            mv.record(grid, i, j, other(grid.get(i, j)));
        }
        Ok(mv)
    }

    fn blank(params: MoveParams) -> SwitchMove {
        SwitchMove { params, cells: Vec::new(), old_vals: Vec::new(), new_vals: Vec::new() }
    }

    fn record(&mut self, grid: &LatinGrid, i: usize, j: usize, new: u16) {
        self.cells.push((i, j));
        self.old_vals.push(grid.get(i, j));
        self.new_vals.push(new);
    }
}

fn check_square(grid: &LatinGrid) -> Result<(), SwitchError> {
    if !grid.is_square() {
        return Err(SwitchError::NeedsSquare { rows: grid.rows(), order: grid.order() });
    }
    Ok(())
}

fn check_row(row: usize, rows: usize) -> Result<(), SwitchError> {
    if row >= rows {
        return Err(SwitchError::RowOutOfRange { row, rows });
    }
    Ok(())
}

fn check_col(col: usize, order: usize) -> Result<(), SwitchError> {
    if col >= order {
        return Err(SwitchError::ColumnOutOfRange { col, order });
    }
    Ok(())
}

fn check_symbol(symbol: u16, order: usize) -> Result<(), SwitchError> {
    if symbol < 1 || symbol as usize > order {
        return Err(SwitchError::SymbolOutOfRange { symbol, order });
    }
    Ok(())
}

/// Draws two distinct values from `0..m`, uniformly over ordered pairs.
fn two_distinct<R: Rng + ?Sized>(rng: &mut R, m: usize) -> (usize, usize) {
    debug_assert!(m >= 2);
    let x = rng.random_range(0..m);
    let mut y = rng.random_range(0..m - 1);
    if y >= x {
        y += 1;
    }
    (x, y)
}

/// Draws a move with uniformly chosen kind and parameters.
///
/// On a square (order ≥ 2) the kinds are row, column, and symbol cycles —
/// always applicable. On a rectangle they are row cycles (once two rows
/// exist) plus column and symbol paths; path starts are drawn by rejection,
/// and after 50 failed draws the move falls back to a row cycle. A
/// single-row rectangle admits every path start, so the fallback only
/// triggers when a row cycle is available.
pub fn random_move<R: Rng + ?Sized>(grid: &LatinGrid, rng: &mut R) -> SwitchMove {
    let (k, n) = (grid.rows(), grid.order());
    assert!(n >= 2, "switching needs order >= 2");
    assert!(k >= 1, "switching needs at least one row");

    const PATH_START_ATTEMPTS: usize = 50;

    let draw_row_cycle = |rng: &mut R| {
        let (r, s) = two_distinct(rng, k);
        let start_col = rng.random_range(0..n);
        SwitchMove::row_cycle(grid, r, s, start_col).expect("drawn row cycle is always valid")
    };

    if grid.is_square() {
        return match rng.random_range(0..3) {
            0 => draw_row_cycle(rng),
            1 => {
                let (c, d) = two_distinct(rng, n);
                let start_row = rng.random_range(0..n);
                SwitchMove::column_cycle(grid, c, d, start_row)
                    .expect("drawn column cycle is always valid")
            }
            _ => {
                let (a, b) = two_distinct(rng, n);
                let (a, b) = (a as u16 + 1, b as u16 + 1);
                let i = rng.random_range(0..n);
                let sym = if rng.random_bool(0.5) { a } else { b };
                let j = grid.position_in_row(i, sym).expect("square rows are complete");
                SwitchMove::symbol_cycle(grid, a, b, (i, j))
                    .expect("drawn symbol cycle is always valid")
            }
        };
    }

    // Rectangle: row cycles (k ≥ 2) plus the two path moves.
    let kinds: &[MoveKind] = if k >= 2 {
        &[MoveKind::RowCycle, MoveKind::ColumnPath, MoveKind::SymbolPath]
    } else {
        &[MoveKind::ColumnPath, MoveKind::SymbolPath]
    };
    match kinds[rng.random_range(0..kinds.len())] {
        MoveKind::RowCycle => draw_row_cycle(rng),
        MoveKind::ColumnPath => {
            for _ in 0..PATH_START_ATTEMPTS {
                let (c, d) = two_distinct(rng, n);
                let start_row = rng.random_range(0..k);
                if let Ok(mv) = SwitchMove::column_path(grid, c, d, start_row) {
                    return mv;
                }
            }
            draw_row_cycle(rng)
        }
        MoveKind::SymbolPath => {
            for _ in 0..PATH_START_ATTEMPTS {
                let (a, b) = two_distinct(rng, n);
                let (a, b) = (a as u16 + 1, b as u16 + 1);
                let i = rng.random_range(0..k);
                let sym = if rng.random_bool(0.5) { a } else { b };
                let Some(j) = grid.position_in_row(i, sym) else { continue };
                if let Ok(mv) = SwitchMove::symbol_path(grid, a, b, (i, j)) {
                    return mv;
                }
            }
            draw_row_cycle(rng)
        }
        _ => unreachable!("cycle kinds other than row need a square"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{self_orthogonality, LatinGrid};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn grid(order: usize, rows: &[&[u16]]) -> LatinGrid {
        let rows: Vec<Vec<u16>> = rows.iter().map(|r| r.to_vec()).collect();
        LatinGrid::from_rows(order, &rows).expect("test grid should be Latin")
    }

    /// A worked 5×5 square used across the move tests.
    fn square5() -> LatinGrid {
        grid(5, &[&[4, 3, 2, 5, 1], &[5, 1, 3, 2, 4], &[3, 4, 5, 1, 2], &[1, 2, 4, 3, 5], &[2, 5, 1, 4, 3]])
    }

    /// Its first four rows, as a 4×5 rectangle.
    fn rect4x5() -> LatinGrid {
        grid(5, &[&[4, 3, 2, 5, 1], &[5, 1, 3, 2, 4], &[3, 4, 5, 1, 2], &[1, 2, 4, 3, 5]])
    }

    #[test]
    fn row_cycle_swaps_rows_along_one_cycle() {
        let g = square5();
        let mv = SwitchMove::row_cycle(&g, 2, 4, 1).unwrap();
        let out = mv.apply(&g);
        let expected = grid(
            5,
            &[&[4, 3, 2, 5, 1], &[5, 1, 3, 2, 4], &[3, 5, 1, 4, 2], &[1, 2, 4, 3, 5], &[2, 4, 5, 1, 3]],
        );
        assert_eq!(out, expected);
        // The move changed the self-orthogonality count — that is its job.
        assert_eq!(self_orthogonality(&g).unwrap(), 19);
        assert_eq!(self_orthogonality(&out).unwrap(), 14);
    }

    #[test]
    fn symbol_cycle_matches_hand_trace() {
        let g = square5();
        let mv = SwitchMove::symbol_cycle(&g, 2, 3, (0, 1)).unwrap();
        assert_eq!(mv.cells(), &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 3), (3, 1)]);
        let out = mv.apply(&g);
        let expected = grid(
            5,
            &[&[4, 2, 3, 5, 1], &[5, 1, 2, 3, 4], &[3, 4, 5, 1, 2], &[1, 3, 4, 2, 5], &[2, 5, 1, 4, 3]],
        );
        assert_eq!(out, expected);
        assert_eq!(self_orthogonality(&out).unwrap(), 17);
    }

    #[test]
    fn column_path_walks_the_rectangle() {
        let g = rect4x5();
        let mv = SwitchMove::column_path(&g, 0, 2, 3).unwrap();
        let out = mv.apply(&g);
        let expected = grid(
            5,
            &[&[2, 3, 4, 5, 1], &[5, 1, 3, 2, 4], &[3, 4, 5, 1, 2], &[4, 2, 1, 3, 5]],
        );
        assert_eq!(out, expected);
    }

    #[test]
    fn symbol_path_walks_the_rectangle() {
        let g = rect4x5();
        let mv = SwitchMove::symbol_path(&g, 3, 4, (3, 3)).unwrap();
        assert_eq!(mv.cells(), &[(3, 3), (3, 2), (1, 2), (1, 4)]);
        let out = mv.apply(&g);
        let expected = grid(
            5,
            &[&[4, 3, 2, 5, 1], &[5, 1, 4, 2, 3], &[3, 4, 5, 1, 2], &[1, 2, 3, 4, 5]],
        );
        assert_eq!(out, expected);
    }

    #[test]
    fn cycles_are_involutions() {
        let g = square5();
        for (r, s) in [(0, 1), (1, 3), (2, 4)] {
            for start in 0..5 {
                let once = SwitchMove::row_cycle(&g, r, s, start).unwrap().apply(&g);
                let twice = SwitchMove::row_cycle(&once, r, s, start).unwrap().apply(&once);
                assert_eq!(twice, g);
            }
        }
        let once = SwitchMove::column_cycle(&g, 0, 3, 2).unwrap().apply(&g);
        assert_eq!(SwitchMove::column_cycle(&once, 0, 3, 2).unwrap().apply(&once), g);
        let once = SwitchMove::symbol_cycle(&g, 1, 4, (0, 0)).unwrap().apply(&g);
        assert_eq!(SwitchMove::symbol_cycle(&once, 1, 4, (0, 0)).unwrap().apply(&once), g);
    }

    #[test]
    fn column_cycle_is_the_transpose_conjugate_of_row_cycle() {
        let g = square5();
        for (c, d) in [(0, 1), (1, 4), (2, 3)] {
            for start in 0..5 {
                let direct = SwitchMove::column_cycle(&g, c, d, start).unwrap().apply(&g);
                let conjugated = {
                    let t = g.transpose();
                    SwitchMove::row_cycle(&t, c, d, start).unwrap().apply(&t).transpose()
                };
                assert_eq!(direct, conjugated);
            }
        }
    }

    #[test]
    fn moves_validate_their_parameters() {
        let sq = square5();
        let rect = rect4x5();
        assert_eq!(SwitchMove::row_cycle(&sq, 2, 2, 0), Err(SwitchError::SameRow(2)));
        assert_eq!(
            SwitchMove::row_cycle(&rect, 0, 4, 0),
            Err(SwitchError::RowOutOfRange { row: 4, rows: 4 })
        );
        assert_eq!(
            SwitchMove::column_cycle(&rect, 0, 1, 0),
            Err(SwitchError::NeedsSquare { rows: 4, order: 5 })
        );
        assert_eq!(SwitchMove::symbol_cycle(&sq, 2, 2, (0, 0)), Err(SwitchError::SameSymbol(2)));
        assert_eq!(
            SwitchMove::symbol_cycle(&sq, 6, 1, (0, 0)),
            Err(SwitchError::SymbolOutOfRange { symbol: 6, order: 5 })
        );
        // (0, 0) holds 4, not 2 or 3.
        assert!(matches!(
            SwitchMove::symbol_cycle(&sq, 2, 3, (0, 0)),
            Err(SwitchError::BadStart(_))
        ));
        // Column paths never start on a square: every symbol is everywhere.
        assert!(matches!(SwitchMove::column_path(&sq, 0, 1, 0), Err(SwitchError::BadStart(_))));
        // Symbol 4 at (0, 0) has partner 5 present in column 0.
        assert!(matches!(SwitchMove::symbol_path(&rect, 4, 5, (0, 0)), Err(SwitchError::BadStart(_))));
    }

    #[test]
    fn random_moves_keep_grids_latin() {
        let mut rng = ChaCha8Rng::seed_from_u64(20250819);
        let mut sq = square5();
        for _ in 0..300 {
            let mv = random_move(&sq, &mut rng);
            sq = mv.apply(&sq); // apply() re-validates under debug assertions
            assert!(sq.check().is_ok());
        }
        // Rectangles of every height, including a single row.
        for k in 1..5 {
            let rows: Vec<Vec<u16>> = (0..k).map(|i| square5().row(i).to_vec()).collect();
            let mut rect = LatinGrid::from_rows(5, &rows).unwrap();
            for _ in 0..300 {
                let mv = random_move(&rect, &mut rng);
                if k == 1 {
                    assert_ne!(mv.kind(), MoveKind::RowCycle);
                }
                rect = mv.apply(&rect);
                assert!(rect.check().is_ok());
            }
        }
    }

    #[test]
    fn random_moves_on_squares_cover_all_three_kinds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = square5();
        let mut seen = std::collections::HashSet::new();
        for _ in 0..200 {
            seen.insert(random_move(&g, &mut rng).kind());
        }
        assert_eq!(seen.len(), 3);
        assert!(seen.contains(&MoveKind::SymbolCycle));
    }

    #[test]
    fn in_place_apply_and_undo_round_trip() {
        let g = square5();
        let mv = SwitchMove::row_cycle(&g, 0, 3, 2).unwrap();
        let mut working = g.clone();
        mv.apply_in_place(&mut working);
        assert_ne!(working, g);
        mv.undo_in_place(&mut working);
        assert_eq!(working, g);
    }

    #[test]
    fn order_two_square_flips_to_its_mate() {
        let g = grid(2, &[&[1, 2], &[2, 1]]);
        let other = grid(2, &[&[2, 1], &[1, 2]]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert_eq!(random_move(&g, &mut rng).apply(&g), other);
        }
    }
}
