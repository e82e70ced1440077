//! Labelings of line graphs of bipartite multigraphs.
//!
//! In `L(H)` two table vertices are adjacent when they share a row, a
//! column, or a box; a Hamiltonian path of the skew complement therefore
//! visits pairwise non-adjacent vertices consecutively, and indexing along
//! it is a λ-labeling of `L(H)` (injective, adjacent labels ≥ 2 apart).
//! A minimum path cover gives an optimal L(2,1)-coloring the same way,
//! skipping one label between consecutive paths.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::hamilton::{self, EnumMode, HamPath, PathCover};
use crate::table::{BoxVertex, SkewTable};
use crate::toughness;

/// Validity regime of a labeling of `L(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    /// Injective, adjacent labels differ by at least two.
    Lambda,
    /// Adjacent labels differ by at least two, distance-two labels are
    /// distinct (repeats allowed at distance three and beyond).
    L21,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("operation requires a non-empty table")]
    EmptyTable,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("vertex {0} has no label")]
    MissingVertex(BoxVertex),
    #[error("label assigned to {0}, which is not in the table")]
    UnknownVertex(BoxVertex),
}

/// A vertex labeling of `L(H)` with its intended validity mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    assignment: BTreeMap<BoxVertex, usize>,
    mode: LabelMode,
}

impl Labeling {
    pub fn mode(&self) -> LabelMode {
        self.mode
    }

    pub fn get(&self, v: BoxVertex) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    /// Largest label used (0 for an empty labeling).
    pub fn span(&self) -> usize {
        self.assignment.values().copied().max().unwrap_or(0)
    }

    /// Entries sorted by vertex.
    pub fn iter(&self) -> impl Iterator<Item = (BoxVertex, usize)> + '_ {
        self.assignment.iter().map(|(&v, &l)| (v, l))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// A labeling constraint violation found by [`validate_labeling`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub u: BoxVertex,
    pub v: BoxVertex,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Adjacent in `L(H)` with labels differing by less than two.
    AdjacentTooClose,
    /// Equal labels on distinct vertices in λ mode.
    DuplicateLabel,
    /// Equal labels at distance two in `L(H)` in L(2,1) mode.
    DistanceTwoClash,
}

/// Labels each vertex with its index along a Hamiltonian path of the skew
/// complement. The result is a λ-labeling of `L(H)` with span `n - 1`.
pub fn lambda_from_path(t: &SkewTable, path: &HamPath) -> Result<Labeling, LabelingError> {
    path.validate(t).map_err(LabelingError::InvalidPath)?;
    let assignment = path
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    Ok(Labeling {
        assignment,
        mode: LabelMode::Lambda,
    })
}

/// Labels consecutively along each cover path, skipping one integer
/// between consecutive paths. For a cover of `r` paths the span is
/// `n + r - 2`, which is the optimum L(2,1) span whenever `r >= 2`.
pub fn l21_from_cover(t: &SkewTable, cover: &PathCover) -> Result<Labeling, LabelingError> {
    cover.validate(t).map_err(LabelingError::InvalidCover)?;
    if cover.is_empty() {
        return Err(LabelingError::EmptyTable);
    }
    let mut assignment = BTreeMap::new();
    let mut next = 0usize;
    for (i, path) in cover.paths().iter().enumerate() {
        if i > 0 {
            next += 1; // gap of two between the last and the next label
        }
        for &v in path {
            assignment.insert(v, next);
            next += 1;
        }
    }
    debug_assert_eq!(next - 1, t.n() + cover.len() - 2);
    Ok(Labeling {
        assignment,
        mode: LabelMode::L21,
    })
}

/// The L(2,1) span of `L(H)` computed through the path covering number
/// of the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct L21Span {
    pub value: usize,
    /// `true` when the value is the optimum (`r >= 2`); with `r = 1` the
    /// Hamiltonian-path construction only certifies an upper bound.
    pub exact: bool,
}

pub fn l21_span(t: &SkewTable) -> Result<L21Span, LabelingError> {
    if t.is_empty() {
        return Err(LabelingError::EmptyTable);
    }
    let r = toughness::path_cover_number(t);
    if r >= 2 {
        Ok(L21Span {
            value: t.n() + r - 2,
            exact: true,
        })
    } else {
        Ok(L21Span {
            value: t.n() - 1,
            exact: false,
        })
    }
}

/// Checks a labeling against `L(H)`: λ mode checks injectivity and the
/// adjacent-difference bound; L(2,1) mode checks the adjacent bound and
/// distance-two distinctness. Returns every violating pair.
///
/// Distance two in `L(H)` has a closed form: non-adjacent vertices
/// `(r1,c1,·)` and `(r2,c2,·)` have a common neighbor exactly when box
/// `(r1,c2)` or box `(r2,c1)` is non-empty, so no neighborhood sets are
/// materialized.
pub fn validate_labeling(t: &SkewTable, lab: &Labeling) -> Result<Vec<Violation>, LabelingError> {
    for (v, _) in lab.iter() {
        if !t.contains(v) {
            return Err(LabelingError::UnknownVertex(v));
        }
    }
    for v in t.vertices() {
        if lab.get(v).is_none() {
            return Err(LabelingError::MissingVertex(v));
        }
    }

    let entries: Vec<(BoxVertex, usize)> = lab.iter().collect();
    let mut violations = Vec::new();
    for (i, &(u, lu)) in entries.iter().enumerate() {
        for &(v, lv) in entries.iter().skip(i + 1) {
            let adjacent = u.row == v.row || u.col == v.col;
            if adjacent {
                if lu.abs_diff(lv) < 2 {
                    violations.push(Violation {
                        u,
                        v,
                        kind: ViolationKind::AdjacentTooClose,
                    });
                }
                continue;
            }
            match lab.mode {
                LabelMode::Lambda => {
                    if lu == lv {
                        violations.push(Violation {
                            u,
                            v,
                            kind: ViolationKind::DuplicateLabel,
                        });
                    }
                }
                LabelMode::L21 => {
                    let dist2 = t.count(u.row, v.col) > 0 || t.count(v.row, u.col) > 0;
                    if dist2 && lu == lv {
                        violations.push(Violation {
                            u,
                            v,
                            kind: ViolationKind::DistanceTwoClash,
                        });
                    }
                }
            }
        }
    }
    Ok(violations)
}

/// An `m × n` array with entries `1..=m*n` in which any two entries sharing
/// a row or a column differ by at least two. Equivalent to an
/// L(2,1)-coloring of the rook's graph `K_m □ K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRectangle {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl LambdaRectangle {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> usize {
        self.entries[r * self.cols + c]
    }

    /// Checks the defining invariants.
    pub fn validate(&self) -> Result<(), String> {
        let mn = self.rows * self.cols;
        let mut seen = vec![false; mn + 1];
        for &e in &self.entries {
            if e < 1 || e > mn {
                return Err(format!("entry {e} out of range 1..={mn}"));
            }
            if seen[e] {
                return Err(format!("entry {e} repeats"));
            }
            seen[e] = true;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                for c2 in (c + 1)..self.cols {
                    if e.abs_diff(self.get(r, c2)) < 2 {
                        return Err(format!("row {r}: entries at columns {c},{c2} too close"));
                    }
                }
                for r2 in (r + 1)..self.rows {
                    if e.abs_diff(self.get(r2, c)) < 2 {
                        return Err(format!("column {c}: entries at rows {r},{r2} too close"));
                    }
                }
            }
        }
        Ok(())
    }

    fn from_path(m: usize, n: usize, path: &HamPath) -> Self {
        let mut entries = vec![0usize; m * n];
        for (i, v) in path.vertices().iter().enumerate() {
            entries[v.row * n + v.col] = i + 1;
        }
        LambdaRectangle {
            rows: m,
            cols: n,
            entries,
        }
    }
}

impl fmt::Display for LambdaRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// Builds one `m × n` λ-rectangle, or `None` when none exists. Existence
/// coincides with the all-ones `m × n` table having a Hamiltonian path:
/// everything with `m, n >= 2` except `2 × 2`, plus the trivial `1 × 1`.
pub fn lambda_rectangle(m: usize, n: usize) -> Option<LambdaRectangle> {
    assert!(m >= 1 && n >= 1, "rectangle dimensions must be positive");
    let t = SkewTable::all_ones(m, n);
    hamilton::ham_path_any(&t).map(|p| LambdaRectangle::from_path(m, n, &p))
}

/// Lazily enumerates every `m × n` λ-rectangle: all Hamiltonian paths from
/// every start cell in row-major order, each mapped to its rectangle.
pub fn lambda_rectangles(m: usize, n: usize) -> RectangleIter {
    assert!(m >= 1 && n >= 1, "rectangle dimensions must be positive");
    RectangleIter {
        table: SkewTable::all_ones(m, n),
        m,
        n,
        next_start: 0,
        current: None,
    }
}

pub struct RectangleIter {
    table: SkewTable,
    m: usize,
    n: usize,
    next_start: usize,
    current: Option<crate::hamilton::HamPathEnumerator>,
}

impl Iterator for RectangleIter {
    type Item = LambdaRectangle;

    fn next(&mut self) -> Option<LambdaRectangle> {
        loop {
            if let Some(it) = &mut self.current {
                if let Some(path) = it.next() {
                    return Some(LambdaRectangle::from_path(self.m, self.n, &path));
                }
                self.current = None;
            }
            if self.next_start >= self.m * self.n {
                return None;
            }
            let v = BoxVertex::new(self.next_start / self.n, self.next_start % self.n, 0);
            self.next_start += 1;
            self.current = Some(
                hamilton::enumerate_ham_paths(&self.table, v, EnumMode::Boxes, None)
                    .expect("cell vertex exists"),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::{ham_path_any, min_path_cover};

    fn fig() -> SkewTable {
        SkewTable::from_grid(&[&[1, 1, 0, 0], &[0, 2, 2, 1], &[0, 0, 1, 0]])
    }

    #[test]
    fn lambda_from_single_vertex() {
        let t = SkewTable::from_grid(&[&[1]]);
        let p = ham_path_any(&t).unwrap();
        let lab = lambda_from_path(&t, &p).unwrap();
        assert_eq!(lab.span(), 0);
        assert_eq!(lab.get(BoxVertex::new(0, 0, 0)), Some(0));
    }

    #[test]
    fn lambda_from_path_validates() {
        let t = SkewTable::all_ones(2, 3);
        let p = ham_path_any(&t).unwrap();
        let lab = lambda_from_path(&t, &p).unwrap();
        assert_eq!(lab.span(), 5);
        assert!(validate_labeling(&t, &lab).unwrap().is_empty());
    }

    #[test]
    fn two_vertex_table_path_labels() {
        let t = SkewTable::from_grid(&[&[1, 0], &[0, 1]]);
        let p = ham_path_any(&t).unwrap();
        let lab = lambda_from_path(&t, &p).unwrap();
        assert_eq!(lab.span(), 1);
        assert!(validate_labeling(&t, &lab).unwrap().is_empty());
    }

    #[test]
    fn l21_from_cover_spans() {
        let fig = fig();
        let cover = min_path_cover(&fig).unwrap();
        let lab = l21_from_cover(&fig, &cover).unwrap();
        assert_eq!(lab.span(), 8);
        assert!(validate_labeling(&fig, &lab).unwrap().is_empty());

        let t = SkewTable::all_ones(3, 3);
        let lab = l21_from_cover(&t, &min_path_cover(&t).unwrap()).unwrap();
        assert_eq!(lab.span(), 8);

        let t = SkewTable::from_grid(&[&[2]]);
        let lab = l21_from_cover(&t, &min_path_cover(&t).unwrap()).unwrap();
        assert_eq!(lab.span(), 2);
        let labels: Vec<usize> = lab.iter().map(|(_, l)| l).collect();
        assert_eq!(labels, vec![0, 2]);
    }

    #[test]
    fn l21_span_cases() {
        assert_eq!(
            l21_span(&fig()).unwrap(),
            L21Span {
                value: 8,
                exact: true
            }
        );
        assert_eq!(
            l21_span(&SkewTable::all_ones(3, 3)).unwrap(),
            L21Span {
                value: 8,
                exact: false
            }
        );
        assert_eq!(
            l21_span(&SkewTable::from_grid(&[&[3]])).unwrap(),
            L21Span {
                value: 4,
                exact: true
            }
        );
        assert_eq!(
            l21_span(&SkewTable::from_grid(&[&[0]])),
            Err(LabelingError::EmptyTable)
        );
    }

    #[test]
    fn triangle_span_matches_oracle() {
        // L(H) of a single box with three vertices is K3
        let t = SkewTable::from_grid(&[&[3]]);
        let brute = crate::oracle::brute_l21(&t.expand_line_graph()).unwrap();
        assert_eq!(l21_span(&t).unwrap().value, brute);
    }

    #[test]
    fn validate_finds_violations() {
        let t = SkewTable::from_grid(&[&[1, 1]]);
        let mut assignment = BTreeMap::new();
        assignment.insert(BoxVertex::new(0, 0, 0), 0);
        assignment.insert(BoxVertex::new(0, 1, 0), 1);
        let lab = Labeling {
            assignment,
            mode: LabelMode::Lambda,
        };
        let v = validate_labeling(&t, &lab).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::AdjacentTooClose);

        // distance-two clash: same label on two vertices joined through a
        // common row/column neighbor
        let t = SkewTable::from_grid(&[&[1, 1], &[0, 1]]);
        let mut assignment = BTreeMap::new();
        assignment.insert(BoxVertex::new(0, 0, 0), 0);
        assignment.insert(BoxVertex::new(0, 1, 0), 2);
        assignment.insert(BoxVertex::new(1, 1, 0), 0);
        let lab = Labeling {
            assignment,
            mode: LabelMode::L21,
        };
        let v = validate_labeling(&t, &lab).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::DistanceTwoClash);

        // missing assignment is an error, not a violation
        let t = SkewTable::from_grid(&[&[2]]);
        let mut assignment = BTreeMap::new();
        assignment.insert(BoxVertex::new(0, 0, 0), 0);
        let lab = Labeling {
            assignment,
            mode: LabelMode::Lambda,
        };
        assert_eq!(
            validate_labeling(&t, &lab),
            Err(LabelingError::MissingVertex(BoxVertex::new(0, 0, 1)))
        );
    }

    #[test]
    fn distance_two_matches_expansion() {
        // the closed-form distance-2 test against explicit BFS on L(H)
        for t in crate::oracle::enumerate_tables(2, 3, 5) {
            let g = t.expand_line_graph();
            let verts: Vec<BoxVertex> = t.vertices().collect();
            for (i, &u) in verts.iter().enumerate() {
                for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                    if g.has_edge(i, j) {
                        continue;
                    }
                    let closed = t.count(u.row, v.col) > 0 || t.count(v.row, u.col) > 0;
                    let bfs = g.neighbors(i).any(|w| g.has_edge(w, j));
                    assert_eq!(closed, bfs, "{u} vs {v} in {t:?}");
                }
            }
        }
    }

    #[test]
    fn rectangle_existence_small() {
        assert!(lambda_rectangle(1, 1).is_some());
        assert!(lambda_rectangle(2, 2).is_none());
        assert!(lambda_rectangle(1, 3).is_none());
        assert!(lambda_rectangle(3, 1).is_none());
        let r = lambda_rectangle(3, 3).unwrap();
        r.validate().unwrap();
        let r = lambda_rectangle(2, 3).unwrap();
        r.validate().unwrap();
    }

    #[test]
    fn rectangle_enumeration_yields_valid_distinct() {
        let rects: Vec<_> = lambda_rectangles(2, 3).collect();
        assert!(!rects.is_empty());
        for r in &rects {
            r.validate().unwrap();
        }
        let mut sorted = rects.clone();
        sorted.sort_by(|a, b| a.entries.cmp(&b.entries));
        sorted.dedup();
        assert_eq!(sorted.len(), rects.len(), "no duplicate rectangles");
    }
}
