//! Latin squares and rectangles over the symbol set `1..=n`, plus the
//! orthogonality counts and the plain-text interchange format.
//!
//! A [`LatinGrid`] is a `k × n` array (`k ≤ n`) in which every row is a
//! permutation prefix-compatible shape: each row contains `n` distinct
//! symbols and no symbol repeats within a column. `k = n` is a Latin square;
//! `k < n` is a Latin rectangle. Rows and columns are indexed from 0 in the
//! API; symbols are the integers `1..=n`. Error positions are reported
//! 1-based, matching the text format.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Whether an operation concerns a pair of distinct squares or a single
/// square measured against its own transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Two squares `A`, `B`; the count is `r(A, B)`.
    Pair,
    /// One square `A`; the count is `r(A, Aᵀ)`.
    SelfOrthogonal,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Pair => "pair",
            Mode::SelfOrthogonal => "self",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pair" => Ok(Mode::Pair),
            "self" => Ok(Mode::SelfOrthogonal),
            other => Err(format!("unknown mode `{other}` (expected `pair` or `self`)")),
        }
    }
}

/// Violations of the Latin property, with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatinError {
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow { row: usize, got: usize, expected: usize },
    #[error("grid has {rows} rows, but order {order} allows at most {order}")]
    TooManyRows { rows: usize, order: usize },
    #[error("symbol {symbol} at ({row},{col}) is outside 1..={order}")]
    SymbolOutOfRange { row: usize, col: usize, symbol: u16, order: usize },
    #[error("symbol {symbol} repeats in row {row} (second occurrence at column {col})")]
    RowDuplicate { row: usize, col: usize, symbol: u16 },
    #[error("symbol {symbol} repeats in column {col} (second occurrence at row {row})")]
    ColumnDuplicate { row: usize, col: usize, symbol: u16 },
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("grid is {rows}x{order}, expected a full square")]
    NotSquare { rows: usize, order: usize },
}

/// A `k × n` Latin rectangle (`k = n`: a Latin square). Symbols are `1..=n`.
///
/// The shape invariant — every row a permutation of `1..=n`, no repeats in
/// any column — is established by the constructors and preserved by every
/// public operation, so holders of a `LatinGrid` never need to re-validate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatinGrid {
    order: usize,
    /// Row-major, `rows() * order` entries.
    cells: Vec<u16>,
}

impl LatinGrid {
    /// A rectangle with no rows yet. `order` must be in `1..=u16::MAX`.
    pub fn empty(order: usize) -> Self {
        assert!(
            order >= 1 && order <= u16::MAX as usize,
            "order must be in 1..={}, got {order}",
            u16::MAX
        );
        LatinGrid { order, cells: Vec::new() }
    }

    /// The cyclic square `L[i][j] = ((i + j) mod n) + 1`.
    pub fn cyclic(order: usize) -> Self {
        let mut grid = LatinGrid::empty(order);
        grid.cells.reserve(order * order);
        for i in 0..order {
            for j in 0..order {
                grid.cells.push(((i + j) % order) as u16 + 1);
            }
        }
        grid
    }

    /// Validates `rows` as a Latin rectangle of the given order.
    ///
    /// Cells are checked in row-major order; at each cell the range check
    /// runs before the row-duplicate check, which runs before the
    /// column-duplicate check, so the reported error is the first violation
    /// in that combined order.
    pub fn from_rows(order: usize, rows: &[Vec<u16>]) -> Result<Self, LatinError> {
        let mut grid = LatinGrid::empty(order);
        if rows.len() > order {
            return Err(LatinError::TooManyRows { rows: rows.len(), order });
        }
        for row in rows {
            grid.push_row(row)?;
        }
        Ok(grid)
    }

    /// A copy of `self` with one more validated row appended.
    pub fn with_row(&self, row: &[u16]) -> Result<Self, LatinError> {
        let mut grid = self.clone();
        grid.push_row(row)?;
        Ok(grid)
    }

    fn push_row(&mut self, row: &[u16]) -> Result<(), LatinError> {
        let n = self.order;
        let k = self.rows();
        if k == n {
            return Err(LatinError::TooManyRows { rows: n + 1, order: n });
        }
        if row.len() != n {
            return Err(LatinError::RaggedRow { row: k + 1, got: row.len(), expected: n });
        }
        let mut seen = vec![false; n];
        for (j, &symbol) in row.iter().enumerate() {
            if symbol < 1 || symbol as usize > n {
                return Err(LatinError::SymbolOutOfRange {
                    row: k + 1,
                    col: j + 1,
                    symbol,
                    order: n,
                });
            }
            if seen[symbol as usize - 1] {
                return Err(LatinError::RowDuplicate { row: k + 1, col: j + 1, symbol });
            }
            seen[symbol as usize - 1] = true;
            for i in 0..k {
                if self.cells[i * n + j] == symbol {
                    return Err(LatinError::ColumnDuplicate { row: k + 1, col: j + 1, symbol });
                }
            }
        }
        self.cells.extend_from_slice(row);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.cells.len() / self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u16 {
        debug_assert!(col < self.order);
        self.cells[row * self.order + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, symbol: u16) {
        debug_assert!(col < self.order);
        self.cells[row * self.order + col] = symbol;
    }

    pub fn row(&self, row: usize) -> &[u16] {
        &self.cells[row * self.order..(row + 1) * self.order]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u16]> {
        self.cells.chunks_exact(self.order)
    }

    /// The column index holding `symbol` in `row`, if present.
    pub fn position_in_row(&self, row: usize, symbol: u16) -> Option<usize> {
        self.row(row).iter().position(|&v| v == symbol)
    }

    /// The row index holding `symbol` in `col`, if present.
    pub fn position_in_col(&self, col: usize, symbol: u16) -> Option<usize> {
        (0..self.rows()).find(|&i| self.get(i, col) == symbol)
    }

    /// The transpose of a square. Panics on a proper rectangle, whose
    /// transpose would not fit this type's row/column convention.
    pub fn transpose(&self) -> LatinGrid {
        assert!(self.is_square(), "transpose is only defined for squares");
        let n = self.order;
        let mut grid = LatinGrid::empty(n);
        grid.cells = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                grid.cells[j * n + i] = self.cells[i * n + j];
            }
        }
        grid
    }

    /// Full re-validation of the shape invariant. Constructors make this
    /// redundant for grids built through them; it exists for auditing grids
    /// after in-place mutation or hand assembly.
    pub fn check(&self) -> Result<(), LatinError> {
        let rows: Vec<Vec<u16>> = self.iter_rows().map(|r| r.to_vec()).collect();
        LatinGrid::from_rows(self.order, &rows).map(|_| ())
    }

    #[track_caller]
    pub(crate) fn debug_validate(&self) {
        if cfg!(debug_assertions) {
            if let Err(e) = self.check() {
                panic!("Latin invariant violated: {e}");
            }
        }
    }

    /// The wire format of the grid: see [`parse_grid`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LatinGrid {
    /// Writes the wire format: a `"k n"` header line, then `k` rows of
    /// symbols separated by single spaces, each line `\n`-terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows(), self.order)?;
        for row in self.iter_rows() {
            for (j, symbol) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{symbol}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatinGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinGrid {}x{}:\n{}", self.rows(), self.order, self)
    }
}

/// A set of ordered symbol pairs `(a, b)` over `1..=n`, the superposition
/// alphabet of two grids. Backed by a flat bitset: membership and insertion
/// are O(1), and the distinct count is maintained incrementally.
#[derive(Clone)]
pub struct PairSet {
    order: usize,
    bits: Vec<u64>,
    len: usize,
}

impl PairSet {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let slots = order * order;
        PairSet { order, bits: vec![0; slots.div_ceil(64)], len: 0 }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn index(&self, a: u16, b: u16) -> usize {
        debug_assert!(a >= 1 && (a as usize) <= self.order);
        debug_assert!(b >= 1 && (b as usize) <= self.order);
        (a as usize - 1) * self.order + (b as usize - 1)
    }

    /// Inserts `(a, b)`; returns `true` if the pair was not already present.
    pub fn insert(&mut self, a: u16, b: u16) -> bool {
        let idx = self.index(a, b);
        let (word, bit) = (idx / 64, 1u64 << (idx % 64));
        if self.bits[word] & bit == 0 {
            self.bits[word] |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, a: u16, b: u16) -> bool {
        let idx = self.index(a, b);
        self.bits[idx / 64] & (1 << (idx % 64)) != 0
    }

    /// The number of distinct pairs inserted so far.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        let n = self.order;
        (0..n * n).filter_map(move |idx| {
            if self.bits[idx / 64] & (1 << (idx % 64)) != 0 {
                Some(((idx / n) as u16 + 1, (idx % n) as u16 + 1))
            } else {
                None
            }
        })
    }
}

/// `r(A, B)`: the number of distinct ordered pairs in the superposition of
/// two squares of equal order. Ranges over `n..=n²` for Latin squares.
pub fn orthogonality(a: &LatinGrid, b: &LatinGrid) -> Result<usize, LatinError> {
    check_square_pair(a, b)?;
    let mut pairs = PairSet::new(a.order);
    for (x, y) in a.cells.iter().zip(&b.cells) {
        pairs.insert(*x, *y);
    }
    Ok(pairs.len())
}

/// The ordered pairs **absent** from the superposition of `a` and `b`, in
/// lexicographic order. `missing.len() == n² − r(a, b)`.
pub fn missing_pairs(a: &LatinGrid, b: &LatinGrid) -> Result<Vec<(u16, u16)>, LatinError> {
    check_square_pair(a, b)?;
    let n = a.order;
    let mut pairs = PairSet::new(n);
    for (x, y) in a.cells.iter().zip(&b.cells) {
        pairs.insert(*x, *y);
    }
    let mut missing = Vec::with_capacity(n * n - pairs.len());
    for a_sym in 1..=n as u16 {
        for b_sym in 1..=n as u16 {
            if !pairs.contains(a_sym, b_sym) {
                missing.push((a_sym, b_sym));
            }
        }
    }
    Ok(missing)
}

/// `r(A, Aᵀ)`: the orthogonality of a square against its own transpose.
pub fn self_orthogonality(a: &LatinGrid) -> Result<usize, LatinError> {
    if !a.is_square() {
        return Err(LatinError::NotSquare { rows: a.rows(), order: a.order });
    }
    let n = a.order;
    let mut pairs = PairSet::new(n);
    for i in 0..n {
        for j in 0..n {
            pairs.insert(a.get(i, j), a.get(j, i));
        }
    }
    Ok(pairs.len())
}

fn check_square_pair(a: &LatinGrid, b: &LatinGrid) -> Result<(), LatinError> {
    if !a.is_square() {
        return Err(LatinError::NotSquare { rows: a.rows(), order: a.order });
    }
    if !b.is_square() {
        return Err(LatinError::NotSquare { rows: b.rows(), order: b.order });
    }
    if a.order != b.order {
        return Err(LatinError::OrderMismatch(a.order, b.order));
    }
    Ok(())
}

/// For a `k × n` rectangle with `k < n`: the symbols missing from each
/// column, ascending, indexed by column. Every set has size `n − k`, and by
/// Hall's condition a system of distinct representatives always exists, so
/// the rectangle extends to a square.
///
/// Panics when called on a full square (there is nothing left to place).
pub fn candidate_sets(a: &LatinGrid) -> Vec<Vec<u16>> {
    assert!(a.rows() < a.order(), "candidate sets are defined for proper rectangles only");
    let n = a.order;
    let k = a.rows();
    let mut sets = vec![Vec::with_capacity(n - k); n];
    let mut used = vec![false; n];
    for (j, set) in sets.iter_mut().enumerate() {
        used.iter_mut().for_each(|u| *u = false);
        for i in 0..k {
            used[a.get(i, j) as usize - 1] = true;
        }
        for symbol in 1..=n as u16 {
            if !used[symbol as usize - 1] {
                set.push(symbol);
            }
        }
    }
    sets
}

/// Failures while reading the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Latin(#[from] LatinError),
}

/// Non-blank input lines paired with their 1-based line numbers.
struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Cursor { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn last_line_number(&self) -> usize {
        self.lines.last().map_or(1, |&(n, _)| n)
    }
}

fn parse_fields(line: &str, line_no: usize) -> Result<Vec<u16>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u16>().map_err(|_| ParseError::Syntax {
                line: line_no,
                message: format!("`{tok}` is not a symbol in 1..=65535"),
            })
        })
        .collect()
}

/// Reads one grid from the cursor: a `"k n"` header, then `k` symbol rows.
fn parse_grid_block(cursor: &mut Cursor<'_>) -> Result<LatinGrid, ParseError> {
    let (line_no, header) = cursor.next().ok_or(ParseError::Syntax {
        line: cursor.last_line_number(),
        message: "expected a `k n` header line".into(),
    })?;
    let fields = parse_fields(header, line_no)?;
    let [k, n] = fields[..] else {
        return Err(ParseError::Syntax {
            line: line_no,
            message: format!("header must be two integers `k n`, got {} fields", fields.len()),
        });
    };
    if n == 0 {
        return Err(ParseError::Syntax { line: line_no, message: "order must be at least 1".into() });
    }
    let mut rows = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let (row_line_no, line) = cursor.next().ok_or(ParseError::Syntax {
            line: cursor.last_line_number(),
            message: format!("expected {k} rows, input ended early"),
        })?;
        let row = parse_fields(line, row_line_no)?;
        if row.len() != n as usize {
            return Err(ParseError::Syntax {
                line: row_line_no,
                message: format!("expected {n} entries in this row, got {}", row.len()),
            });
        }
        rows.push(row);
    }
    Ok(LatinGrid::from_rows(n as usize, &rows)?)
}

fn reject_trailing(cursor: &Cursor<'_>) -> Result<(), ParseError> {
    if let Some(&(line, _)) = cursor.lines.get(cursor.pos) {
        return Err(ParseError::Syntax { line, message: "unexpected trailing content".into() });
    }
    Ok(())
}

/// Parses a single grid in the wire format: a `"k n"` header line followed
/// by `k` rows of `n` symbols. Readers accept any positive run of blanks
/// between fields and ignore empty lines; writers ([`LatinGrid::to_text`])
/// emit single spaces and single newlines, so output is byte-reproducible.
pub fn parse_grid(text: &str) -> Result<LatinGrid, ParseError> {
    let mut cursor = Cursor::new(text);
    let grid = parse_grid_block(&mut cursor)?;
    reject_trailing(&cursor)?;
    Ok(grid)
}

/// Parses two grids of equal order (a superposition pair).
pub fn parse_pair(text: &str) -> Result<(LatinGrid, LatinGrid), ParseError> {
    let mut cursor = Cursor::new(text);
    let a = parse_grid_block(&mut cursor)?;
    let b = parse_grid_block(&mut cursor)?;
    reject_trailing(&cursor)?;
    if a.order() != b.order() {
        return Err(ParseError::Latin(LatinError::OrderMismatch(a.order(), b.order())));
    }
    Ok((a, b))
}

/// The wire format of a pair: the two grids separated by exactly one blank
/// line.
pub fn pair_to_text(a: &LatinGrid, b: &LatinGrid) -> String {
    format!("{a}\n{b}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(order: usize, rows: &[&[u16]]) -> LatinGrid {
        let rows: Vec<Vec<u16>> = rows.iter().map(|r| r.to_vec()).collect();
        LatinGrid::from_rows(order, &rows).expect("test grid should be Latin")
    }

    #[test]
    fn cyclic_is_latin() {
        for n in 1..=8 {
            let g = LatinGrid::cyclic(n);
            assert!(g.check().is_ok());
            assert!(g.is_square());
        }
    }

    #[test]
    fn rejects_symbol_out_of_range() {
        let err = LatinGrid::from_rows(2, &[vec![1, 3]]).unwrap_err();
        assert_eq!(err, LatinError::SymbolOutOfRange { row: 1, col: 2, symbol: 3, order: 2 });
        let err = LatinGrid::from_rows(2, &[vec![0, 1]]).unwrap_err();
        assert_eq!(err, LatinError::SymbolOutOfRange { row: 1, col: 1, symbol: 0, order: 2 });
    }

    #[test]
    fn rejects_row_duplicate() {
        let err = LatinGrid::from_rows(2, &[vec![1, 1]]).unwrap_err();
        assert_eq!(err, LatinError::RowDuplicate { row: 1, col: 2, symbol: 1 });
    }

    #[test]
    fn rejects_column_duplicate_with_position() {
        // Both rows are fine on their own; the clash is in column 1.
        let err = LatinGrid::from_rows(2, &[vec![1, 2], vec![1, 2]]).unwrap_err();
        assert_eq!(err, LatinError::ColumnDuplicate { row: 2, col: 1, symbol: 1 });
    }

    #[test]
    fn rejects_ragged_and_overfull() {
        let err = LatinGrid::from_rows(3, &[vec![1, 2]]).unwrap_err();
        assert_eq!(err, LatinError::RaggedRow { row: 1, got: 2, expected: 3 });

        let rows = vec![vec![1, 2], vec![2, 1], vec![1, 2]];
        let err = LatinGrid::from_rows(2, &rows).unwrap_err();
        assert_eq!(err, LatinError::TooManyRows { rows: 3, order: 2 });
    }

    #[test]
    fn with_row_extends_and_validates() {
        let g = grid(3, &[&[1, 2, 3]]);
        let g2 = g.with_row(&[2, 3, 1]).unwrap();
        assert_eq!(g2.rows(), 2);
        assert_eq!(g2.row(1), &[2, 3, 1]);
        // Column clash in column 0.
        let err = g2.with_row(&[2, 1, 3]).unwrap_err();
        assert_eq!(err, LatinError::ColumnDuplicate { row: 3, col: 1, symbol: 2 });
    }

    #[test]
    fn transpose_is_an_involution() {
        let g = grid(4, &[&[1, 2, 3, 4], &[3, 4, 1, 2], &[4, 3, 2, 1], &[2, 1, 4, 3]]);
        let t = g.transpose();
        assert_eq!(t.get(0, 2), g.get(2, 0));
        assert_eq!(t.transpose(), g);
    }

    #[test]
    fn orthogonality_extremes() {
        // A square superposed with itself yields only the diagonal pairs.
        let g = LatinGrid::cyclic(5);
        assert_eq!(orthogonality(&g, &g).unwrap(), 5);

        // A classic orthogonal mate pair of order 4 reaches n².
        let a = grid(4, &[&[1, 2, 3, 4], &[2, 1, 4, 3], &[3, 4, 1, 2], &[4, 3, 2, 1]]);
        let b = grid(4, &[&[1, 4, 2, 3], &[3, 2, 4, 1], &[4, 1, 3, 2], &[2, 3, 1, 4]]);
        assert_eq!(orthogonality(&a, &b).unwrap(), 16);
        assert!(missing_pairs(&a, &b).unwrap().is_empty());
    }

    #[test]
    fn orthogonality_rejects_bad_shapes() {
        let sq = LatinGrid::cyclic(3);
        let rect = grid(3, &[&[1, 2, 3]]);
        assert_eq!(
            orthogonality(&rect, &sq).unwrap_err(),
            LatinError::NotSquare { rows: 1, order: 3 }
        );
        let other = LatinGrid::cyclic(4);
        assert_eq!(orthogonality(&sq, &other).unwrap_err(), LatinError::OrderMismatch(3, 4));
    }

    #[test]
    fn missing_pairs_complement_the_count() {
        let a = LatinGrid::cyclic(4);
        let b = grid(4, &[&[1, 2, 3, 4], &[3, 4, 1, 2], &[4, 3, 2, 1], &[2, 1, 4, 3]]);
        let r = orthogonality(&a, &b).unwrap();
        let missing = missing_pairs(&a, &b).unwrap();
        assert_eq!(missing.len(), 16 - r);
        let mut sorted = missing.clone();
        sorted.sort_unstable();
        assert_eq!(missing, sorted, "missing pairs must come out lexicographically sorted");
    }

    #[test]
    fn self_orthogonality_of_symmetric_square_is_n() {
        // The cyclic square is symmetric, so A and Aᵀ superpose to (v, v) only.
        let g = LatinGrid::cyclic(6);
        assert_eq!(self_orthogonality(&g).unwrap(), 6);
    }

    #[test]
    fn self_orthogonal_square_of_order_four() {
        let g = grid(4, &[&[1, 2, 3, 4], &[3, 4, 1, 2], &[4, 3, 2, 1], &[2, 1, 4, 3]]);
        assert_eq!(self_orthogonality(&g).unwrap(), 16);
        assert_eq!(
            self_orthogonality(&g).unwrap(),
            orthogonality(&g, &g.transpose()).unwrap()
        );
    }

    #[test]
    fn candidate_sets_list_absent_symbols() {
        let rect = grid(5, &[&[4, 3, 2, 5, 1], &[5, 1, 3, 2, 4], &[3, 4, 5, 1, 2], &[1, 2, 4, 3, 5]]);
        let sets = candidate_sets(&rect);
        assert_eq!(sets, vec![vec![2], vec![5], vec![1], vec![4], vec![3]]);

        let two_rows = grid(4, &[&[1, 2, 3, 4], &[2, 1, 4, 3]]);
        let sets = candidate_sets(&two_rows);
        assert_eq!(sets, vec![vec![3, 4], vec![3, 4], vec![1, 2], vec![1, 2]]);
    }

    #[test]
    fn pair_set_tracks_distinct_pairs() {
        let mut set = PairSet::new(3);
        assert!(set.insert(1, 3));
        assert!(!set.insert(1, 3));
        assert!(set.insert(3, 1));
        assert_eq!(set.len(), 2);
        assert!(set.contains(1, 3));
        assert!(!set.contains(2, 2));
        assert_eq!(set.iter().collect::<Vec<_>>(), vec![(1, 3), (3, 1)]);
    }

    #[test]
    fn text_round_trip_is_byte_exact() {
        let g = grid(3, &[&[1, 2, 3], &[2, 3, 1]]);
        let text = g.to_text();
        assert_eq!(text, "2 3\n1 2 3\n2 3 1\n");
        assert_eq!(parse_grid(&text).unwrap(), g);
    }

    #[test]
    fn parser_accepts_blank_runs_and_blank_lines() {
        let g = parse_grid("  2   3 \n\n1\t2  3\n2 3    1\n\n\n").unwrap();
        assert_eq!(g, grid(3, &[&[1, 2, 3], &[2, 3, 1]]));
    }

    #[test]
    fn parser_reports_syntax_errors_with_lines() {
        match parse_grid("1 3\n1 x 3\n") {
            Err(ParseError::Syntax { line: 2, .. }) => {}
            other => panic!("expected a syntax error on line 2, got {other:?}"),
        }
        match parse_grid("2 3\n1 2 3\n") {
            Err(ParseError::Syntax { .. }) => {}
            other => panic!("expected an early-end error, got {other:?}"),
        }
        match parse_grid("1 3\n1 2 3\n4 5\n") {
            Err(ParseError::Syntax { line: 3, .. }) => {}
            other => panic!("expected a trailing-content error, got {other:?}"),
        }
        match parse_grid("2 2\n1 2\n1 2\n") {
            Err(ParseError::Latin(LatinError::ColumnDuplicate { row: 2, col: 1, symbol: 1 })) => {}
            other => panic!("expected a Latin violation, got {other:?}"),
        }
    }

    #[test]
    fn pair_round_trip() {
        let a = LatinGrid::cyclic(3);
        let b = grid(3, &[&[2, 3, 1], &[1, 2, 3], &[3, 1, 2]]);
        let text = pair_to_text(&a, &b);
        assert_eq!(text, format!("{a}\n{b}"));
        let (pa, pb) = parse_pair(&text).unwrap();
        assert_eq!((pa, pb), (a, b));
    }

    #[test]
    fn pair_parser_rejects_mismatched_orders() {
        let a = LatinGrid::cyclic(3);
        let b = LatinGrid::cyclic(4);
        let text = format!("{a}\n{b}");
        assert_eq!(
            parse_pair(&text).unwrap_err(),
            ParseError::Latin(LatinError::OrderMismatch(3, 4))
        );
    }

    #[test]
    fn mode_round_trips_through_strings() {
        assert_eq!("pair".parse::<Mode>().unwrap(), Mode::Pair);
        assert_eq!("self".parse::<Mode>().unwrap(), Mode::SelfOrthogonal);
        assert_eq!(Mode::Pair.to_string(), "pair");
        assert_eq!(Mode::SelfOrthogonal.to_string(), "self");
        assert!("both".parse::<Mode>().is_err());
    }
}
