//! The tabular model of skew graphs.
//!
//! A skew table is a `rows × cols` grid of non-negative counts. Expanding
//! each count into that many vertices and joining vertices whose boxes sit
//! in different rows *and* different columns yields the skew graph the
//! table denotes. All indices (rows, columns, ordinals) are 0-based, in
//! files and CLI output as well as internally.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::SimpleGraph;

/// A vertex of a skew table: box coordinates plus an ordinal inside the box.
///
/// Ordinals exist purely to give same-box vertices distinct identities;
/// vertices sharing a box have identical neighborhoods and every algorithm
/// in this crate is invariant under permuting them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxVertex {
    pub row: usize,
    pub col: usize,
    pub ord: usize,
}

impl BoxVertex {
    pub fn new(row: usize, col: usize, ord: usize) -> Self {
        BoxVertex { row, col, ord }
    }
}

impl fmt::Display for BoxVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.row, self.col, self.ord)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid vertex token '{0}': expected 'row,col,ord'")]
pub struct ParseVertexError(String);

impl FromStr for BoxVertex {
    type Err = ParseVertexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(',');
        let mut field = || {
            parts
                .next()
                .and_then(|p| p.trim().parse::<usize>().ok())
                .ok_or_else(|| ParseVertexError(s.to_string()))
        };
        let v = BoxVertex::new(field()?, field()?, field()?);
        if parts.next().is_some() {
            return Err(ParseVertexError(s.to_string()));
        }
        Ok(v)
    }
}

/// Errors for table-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("vertex {0} is not present in the table")]
    InvalidVertex(BoxVertex),
    #[error("box ({0},{1}) is outside the table")]
    InvalidBox(usize, usize),
    #[error("box ({0},{1}) is empty")]
    EmptyBox(usize, usize),
    #[error("operation requires a non-empty table")]
    EmptyTable,
}

/// Errors from parsing the table file format. Every variant carries the
/// 1-based source line it was detected on.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseTableError {
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: negative entry {value}")]
    NegativeEntry { line: usize, value: i64 },
    #[error("line {line}: invalid entry '{token}'")]
    InvalidEntry { line: usize, token: String },
    #[error("line {line}: expected {expected} entries in row, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found only {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last table row")]
    TrailingData { line: usize },
}

/// The four tabular shapes that characterize disconnected skew graphs,
/// plus `Empty` and `Connected`.
///
/// Classification precedence: `Empty` (no vertices), then `SingleRow`
/// (all non-empty boxes in one row — a lone non-empty box lands here),
/// then `SingleColumn`, then `BoxPlus` (exactly four non-empty boxes at
/// the corners of two rows × two columns), then `RowUnionColumn` (boxes
/// coverable by one row plus one column, each contributing a vertex the
/// other does not), and `Connected` otherwise.
///
/// `RowUnionColumn` with an empty intersection box describes a *connected*
/// graph; connectivity queries must go through
/// [`SkewTable::component_count`], never the pattern name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternClass {
    Empty,
    SingleRow(usize),
    SingleColumn(usize),
    BoxPlus {
        rows: (usize, usize),
        cols: (usize, usize),
    },
    RowUnionColumn {
        row: usize,
        col: usize,
        intersection: usize,
    },
    Connected,
}

/// Per-row and per-column vertex totals of a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tallies {
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
}

impl Tallies {
    /// Row totals paired with their row index, sorted by descending count
    /// (ties by ascending index).
    pub fn rows_desc(&self) -> Vec<(usize, usize)> {
        sorted_desc(&self.row_counts)
    }

    /// Column totals paired with their column index, sorted descending.
    pub fn cols_desc(&self) -> Vec<(usize, usize)> {
        sorted_desc(&self.col_counts)
    }
}

fn sorted_desc(counts: &[usize]) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = counts.iter().copied().zip(0..).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    v
}

/// A skew table: dimensions, the count grid, and cached totals.
///
/// Values are immutable once constructed; [`SkewTable::remove_vertex`]
/// returns a fresh table. Shared read-only access across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTable {
    rows: usize,
    cols: usize,
    counts: Vec<u32>,
    n: usize,
    row_tally: Vec<u32>,
    col_tally: Vec<u32>,
}

impl SkewTable {
    /// Builds a table from a row-major count vector.
    ///
    /// Panics if `counts.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, counts: Vec<u32>) -> Self {
        assert_eq!(
            counts.len(),
            rows * cols,
            "count grid must have rows*cols entries"
        );
        let mut row_tally = vec![0u32; rows];
        let mut col_tally = vec![0u32; cols];
        let mut n = 0usize;
        for r in 0..rows {
            for c in 0..cols {
                let t = counts[r * cols + c];
                row_tally[r] += t;
                col_tally[c] += t;
                n += t as usize;
            }
        }
        SkewTable {
            rows,
            cols,
            counts,
            n,
            row_tally,
            col_tally,
        }
    }

    /// Convenience constructor from row slices. Panics on ragged input.
    pub fn from_grid(grid: &[&[u32]]) -> Self {
        let rows = grid.len();
        let cols = grid.first().map_or(0, |r| r.len());
        let mut counts = Vec::with_capacity(rows * cols);
        for (i, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has a different length");
            counts.extend_from_slice(row);
        }
        SkewTable::new(rows, cols, counts)
    }

    /// An all-ones table, the tabular form of the complete bipartite
    /// simple graph `K_{rows,cols}`.
    pub fn all_ones(rows: usize, cols: usize) -> Self {
        SkewTable::new(rows, cols, vec![1; rows * cols])
    }

    /// Parses the table file format: first non-comment line `p q`, then
    /// `p` lines of `q` whitespace-separated non-negative integers. `#`
    /// starts a comment; blank lines are skipped; a final newline is
    /// optional.
    pub fn parse(text: &str) -> Result<Self, ParseTableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(ParseTableError::Header {
            line: 1,
            msg: "missing 'p q' line".into(),
        })?;
        let mut fields = header.split_whitespace();
        let mut dim = |name: &str| {
            fields
                .next()
                .ok_or(ParseTableError::Header {
                    line: hline,
                    msg: format!("missing {name}"),
                })?
                .parse::<usize>()
                .map_err(|_| ParseTableError::Header {
                    line: hline,
                    msg: format!("{name} is not a non-negative integer"),
                })
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        if fields.next().is_some() {
            return Err(ParseTableError::Header {
                line: hline,
                msg: "expected exactly two fields 'p q'".into(),
            });
        }
        // Refuse absurd allocations up front.
        if rows.saturating_mul(cols) > 16_000_000 {
            return Err(ParseTableError::Header {
                line: hline,
                msg: "table dimensions too large".into(),
            });
        }

        let mut counts = Vec::with_capacity(rows * cols);
        let mut found = 0usize;
        for (line, text) in lines.by_ref() {
            if found == rows {
                return Err(ParseTableError::TrailingData { line });
            }
            let mut row_entries = 0usize;
            for token in text.split_whitespace() {
                match token.parse::<i64>() {
                    Ok(v) if v < 0 => {
                        return Err(ParseTableError::NegativeEntry { line, value: v })
                    }
                    Ok(v) => {
                        let v = u32::try_from(v).map_err(|_| ParseTableError::InvalidEntry {
                            line,
                            token: token.to_string(),
                        })?;
                        counts.push(v);
                        row_entries += 1;
                    }
                    Err(_) => {
                        return Err(ParseTableError::InvalidEntry {
                            line,
                            token: token.to_string(),
                        })
                    }
                }
            }
            if row_entries != cols {
                return Err(ParseTableError::RowLength {
                    line,
                    expected: cols,
                    found: row_entries,
                });
            }
            found += 1;
        }
        if found != rows {
            return Err(ParseTableError::MissingRows {
                expected: rows,
                found,
            });
        }
        Ok(SkewTable::new(rows, cols, counts))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Total number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Count in box `(r, c)`. Panics if the box is outside the table.
    pub fn count(&self, r: usize, c: usize) -> usize {
        assert!(r < self.rows && c < self.cols, "box ({r},{c}) out of range");
        self.counts[r * self.cols + c] as usize
    }

    pub(crate) fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of vertices in row `r`.
    pub fn row_tally(&self, r: usize) -> usize {
        self.row_tally[r] as usize
    }

    /// Number of vertices in column `c`.
    pub fn col_tally(&self, c: usize) -> usize {
        self.col_tally[c] as usize
    }

    pub fn tallies(&self) -> Tallies {
        Tallies {
            row_counts: self.row_tally.iter().map(|&t| t as usize).collect(),
            col_counts: self.col_tally.iter().map(|&t| t as usize).collect(),
        }
    }

    /// Whether `v` denotes an existing vertex of this table.
    pub fn contains(&self, v: BoxVertex) -> bool {
        v.row < self.rows && v.col < self.cols && v.ord < self.count(v.row, v.col)
    }

    /// All vertices in row-major box order, ordinals ascending.
    pub fn vertices(&self) -> impl Iterator<Item = BoxVertex> + '_ {
        (0..self.rows).flat_map(move |r| {
            (0..self.cols).flat_map(move |c| {
                (0..self.count(r, c)).map(move |k| BoxVertex::new(r, c, k))
            })
        })
    }

    /// Rank of `v` in [`Self::vertices`] order, the canonical index used
    /// when the table is expanded into an explicit graph.
    pub fn vertex_index(&self, v: BoxVertex) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        let mut idx = 0usize;
        for r in 0..v.row {
            idx += self.row_tally(r);
        }
        for c in 0..v.col {
            idx += self.count(v.row, c);
        }
        Some(idx + v.ord)
    }

    /// Inverse of [`Self::vertex_index`].
    pub fn vertex_at(&self, mut idx: usize) -> Option<BoxVertex> {
        if idx >= self.n {
            return None;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let t = self.count(r, c);
                if idx < t {
                    return Some(BoxVertex::new(r, c, idx));
                }
                idx -= t;
            }
        }
        None
    }

    /// Skew adjacency: two vertices are adjacent exactly when their boxes
    /// are in different rows and different columns. Irreflexive.
    pub fn adjacent(&self, u: BoxVertex, v: BoxVertex) -> Result<bool, TableError> {
        if !self.contains(u) {
            return Err(TableError::InvalidVertex(u));
        }
        if !self.contains(v) {
            return Err(TableError::InvalidVertex(v));
        }
        Ok(u != v && u.row != v.row && u.col != v.col)
    }

    /// Returns a copy of the table with `v` removed. Remaining vertices in
    /// `v`'s box are re-identified with ordinals `0..count-1`.
    pub fn remove_vertex(&self, v: BoxVertex) -> Result<SkewTable, TableError> {
        if v.row >= self.rows || v.col >= self.cols {
            return Err(TableError::InvalidBox(v.row, v.col));
        }
        if self.count(v.row, v.col) == 0 {
            return Err(TableError::EmptyBox(v.row, v.col));
        }
        if v.ord >= self.count(v.row, v.col) {
            return Err(TableError::InvalidVertex(v));
        }
        let mut t = self.clone();
        t.counts[v.row * t.cols + v.col] -= 1;
        t.row_tally[v.row] -= 1;
        t.col_tally[v.col] -= 1;
        t.n -= 1;
        Ok(t)
    }

    /// Classifies the table into one of the six tabular patterns. See
    /// [`PatternClass`] for the precedence rules.
    pub fn classify(&self) -> PatternClass {
        if self.n == 0 {
            return PatternClass::Empty;
        }
        let live_rows: Vec<usize> = (0..self.rows).filter(|&r| self.row_tally[r] > 0).collect();
        if live_rows.len() == 1 {
            return PatternClass::SingleRow(live_rows[0]);
        }
        let live_cols: Vec<usize> = (0..self.cols).filter(|&c| self.col_tally[c] > 0).collect();
        if live_cols.len() == 1 {
            return PatternClass::SingleColumn(live_cols[0]);
        }

        let boxes_in_row = |r: usize| (0..self.cols).filter(move |&c| self.count(r, c) > 0);
        let nonempty_boxes: usize = live_rows.iter().map(|&r| boxes_in_row(r).count()).sum();
        if nonempty_boxes == 4 && live_rows.len() == 2 && live_cols.len() == 2 {
            // Four boxes inside a 2x2 row/column selection are necessarily
            // the four corners.
            return PatternClass::BoxPlus {
                rows: (live_rows[0], live_rows[1]),
                cols: (live_cols[0], live_cols[1]),
            };
        }

        // Row-union-column cover: all non-empty boxes in row r or column c.
        // Any row other than the covering one must then consist of a single
        // non-empty box, and those boxes must share one column.
        'rows: for &r in &live_rows {
            let mut shared_col: Option<usize> = None;
            for &other in &live_rows {
                if other == r {
                    continue;
                }
                let mut it = boxes_in_row(other);
                let first = it.next().expect("live row has a non-empty box");
                if it.next().is_some() {
                    continue 'rows;
                }
                match shared_col {
                    None => shared_col = Some(first),
                    Some(c) if c == first => {}
                    Some(_) => continue 'rows,
                }
            }
            let col = shared_col.expect("at least two live rows here");
            // Both legs are automatically non-empty: a row-r box outside
            // `col` exists (else the table would be a single column), and
            // the other rows supply column vertices outside row r.
            debug_assert!(boxes_in_row(r).any(|c| c != col));
            return PatternClass::RowUnionColumn {
                row: r,
                col,
                intersection: self.count(r, col),
            };
        }
        PatternClass::Connected
    }

    /// Number of connected components of the skew graph, derived from the
    /// tabular pattern. Agrees with breadth-first search on the expanded
    /// graph.
    pub fn component_count(&self) -> usize {
        match self.classify() {
            PatternClass::Empty => 0,
            PatternClass::SingleRow(_) | PatternClass::SingleColumn(_) => self.n,
            PatternClass::BoxPlus { .. } => 2,
            PatternClass::RowUnionColumn { intersection, .. } => intersection + 1,
            PatternClass::Connected => 1,
        }
    }

    /// Expands the table into the explicit skew graph (vertices indexed by
    /// [`Self::vertex_index`]).
    pub fn expand_complement(&self) -> SimpleGraph {
        let verts: Vec<BoxVertex> = self.vertices().collect();
        let mut g = SimpleGraph::new(self.n);
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if u.row != v.row && u.col != v.col {
                    g.add_edge(i, j).expect("indices in range");
                }
            }
        }
        g
    }

    /// Expands the table into the explicit line graph `L(H)`: vertices
    /// sharing a row or a column (same box included) are adjacent.
    pub fn expand_line_graph(&self) -> SimpleGraph {
        let verts: Vec<BoxVertex> = self.vertices().collect();
        let mut g = SimpleGraph::new(self.n);
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if u.row == v.row || u.col == v.col {
                    g.add_edge(i, j).expect("indices in range");
                }
            }
        }
        g
    }
}

impl FromStr for SkewTable {
    type Err = ParseTableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SkewTable::parse(s)
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternClass::Empty => write!(f, "empty"),
            PatternClass::SingleRow(r) => write!(f, "single_row({r})"),
            PatternClass::SingleColumn(c) => write!(f, "single_column({c})"),
            PatternClass::BoxPlus { rows, cols } => write!(
                f,
                "box_plus(rows={},{};cols={},{})",
                rows.0, rows.1, cols.0, cols.1
            ),
            PatternClass::RowUnionColumn {
                row,
                col,
                intersection,
            } => write!(f, "row_union_column(row={row},col={col},p={intersection})"),
            PatternClass::Connected => write!(f, "connected"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig_table() -> SkewTable {
        SkewTable::from_grid(&[&[1, 1, 0, 0], &[0, 2, 2, 1], &[0, 0, 1, 0]])
    }

    #[test]
    fn parse_basic() {
        let t = SkewTable::parse("3 4\n1 1 0 0\n0 2 2 1\n0 0 1 0").unwrap();
        assert_eq!(t.n(), 8);
        assert_eq!(t, fig_table());
    }

    #[test]
    fn parse_empty_and_trivial() {
        let t = SkewTable::parse("1 1\n0").unwrap();
        assert_eq!(t.n(), 0);
        assert!(t.is_empty());

        let t = SkewTable::parse("2 2\n1 1\n1 1").unwrap();
        assert_eq!(t.n(), 4);
    }

    #[test]
    fn parse_comments_and_whitespace() {
        let t = SkewTable::parse("# example\n 2 2 # dims\n\n1 0 # row 0\n0 3").unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(t.count(1, 1), 3);
        // no trailing newline
        assert_eq!(SkewTable::parse("1 1\n2").unwrap().n(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match SkewTable::parse("x y\n") {
            Err(ParseTableError::Header { line: 1, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match SkewTable::parse("1 2\n3 -1") {
            Err(ParseTableError::NegativeEntry { line: 2, value: -1 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match SkewTable::parse("2 2\n1 1 1\n0 0") {
            Err(ParseTableError::RowLength {
                line: 2,
                expected: 2,
                found: 3,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match SkewTable::parse("2 2\n1 1") {
            Err(ParseTableError::MissingRows {
                expected: 2,
                found: 1,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match SkewTable::parse("1 1\n1\n5") {
            Err(ParseTableError::TrailingData { line: 3 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn adjacency_rules() {
        let t = SkewTable::from_grid(&[&[1, 1], &[1, 2]]);
        let a = BoxVertex::new(0, 0, 0);
        let b = BoxVertex::new(1, 1, 0);
        let c = BoxVertex::new(1, 1, 1);
        let d = BoxVertex::new(0, 1, 0);
        assert!(t.adjacent(a, b).unwrap());
        assert!(!t.adjacent(b, c).unwrap(), "same box");
        assert!(!t.adjacent(a, d).unwrap(), "same row");
        assert!(!t.adjacent(a, a).unwrap(), "irreflexive");
        assert_eq!(
            t.adjacent(a, BoxVertex::new(0, 0, 1)),
            Err(TableError::InvalidVertex(BoxVertex::new(0, 0, 1)))
        );
    }

    #[test]
    fn classify_patterns() {
        assert_eq!(
            SkewTable::from_grid(&[&[1, 1], &[1, 1]]).classify(),
            PatternClass::BoxPlus {
                rows: (0, 1),
                cols: (0, 1)
            }
        );
        assert_eq!(
            SkewTable::from_grid(&[&[0, 3, 1]]).classify(),
            PatternClass::SingleRow(0)
        );
        assert_eq!(
            SkewTable::from_grid(&[&[0], &[2], &[1]]).classify(),
            PatternClass::SingleColumn(0)
        );
        assert_eq!(fig_table().classify(), PatternClass::Connected);
        assert_eq!(
            SkewTable::from_grid(&[&[0, 0], &[0, 0]]).classify(),
            PatternClass::Empty
        );
        // a single non-empty box is a single row by precedence
        assert_eq!(
            SkewTable::from_grid(&[&[0, 0], &[0, 5]]).classify(),
            PatternClass::SingleRow(1)
        );
        assert_eq!(
            SkewTable::from_grid(&[&[2, 1, 1], &[0, 1, 0], &[0, 1, 0]]).classify(),
            PatternClass::RowUnionColumn {
                row: 0,
                col: 1,
                intersection: 1
            }
        );
        // two skew boxes: row-union-column with an empty intersection
        assert_eq!(
            SkewTable::from_grid(&[&[1, 0], &[0, 1]]).classify(),
            PatternClass::RowUnionColumn {
                row: 0,
                col: 1,
                intersection: 0
            }
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(SkewTable::from_grid(&[&[1, 1], &[1, 1]]).component_count(), 2);
        assert_eq!(
            SkewTable::from_grid(&[&[2, 1, 1], &[0, 1, 0], &[0, 1, 0]]).component_count(),
            2
        );
        assert_eq!(SkewTable::from_grid(&[&[0, 3, 1]]).component_count(), 4);
        assert_eq!(fig_table().component_count(), 1);
        assert_eq!(SkewTable::from_grid(&[&[1, 0], &[0, 1]]).component_count(), 1);
        assert_eq!(SkewTable::from_grid(&[&[0]]).component_count(), 0);
    }

    #[test]
    fn remove_vertex_updates() {
        let t = SkewTable::from_grid(&[&[2]]);
        let t1 = t.remove_vertex(BoxVertex::new(0, 0, 1)).unwrap();
        assert_eq!(t1, SkewTable::from_grid(&[&[1]]));

        let fig = fig_table();
        let r = fig.remove_vertex(BoxVertex::new(1, 1, 0)).unwrap();
        assert_eq!(r.n(), 7);
        assert_eq!(r.row_tally(1), 4);

        let empty = SkewTable::from_grid(&[&[1]])
            .remove_vertex(BoxVertex::new(0, 0, 0))
            .unwrap();
        assert!(empty.is_empty());

        assert_eq!(
            SkewTable::from_grid(&[&[0]]).remove_vertex(BoxVertex::new(0, 0, 0)),
            Err(TableError::EmptyBox(0, 0))
        );
    }

    #[test]
    fn vertex_indexing_roundtrip() {
        let t = fig_table();
        for (i, v) in t.vertices().enumerate() {
            assert_eq!(t.vertex_index(v), Some(i));
            assert_eq!(t.vertex_at(i), Some(v));
        }
        assert_eq!(t.vertex_at(t.n()), None);
    }

    #[test]
    fn expansions_are_consistent() {
        let t = fig_table();
        let skew = t.expand_complement();
        let line = t.expand_line_graph();
        // the two expansions are complementary graphs
        for i in 0..t.n() {
            for j in (i + 1)..t.n() {
                assert_ne!(skew.has_edge(i, j), line.has_edge(i, j));
            }
        }
    }

    #[test]
    fn vertex_token_roundtrip() {
        let v = BoxVertex::new(3, 0, 2);
        assert_eq!(v.to_string(), "3,0,2");
        assert_eq!("3,0,2".parse::<BoxVertex>().unwrap(), v);
        assert!("3,0".parse::<BoxVertex>().is_err());
        assert!("a,b,c".parse::<BoxVertex>().is_err());
    }
}
