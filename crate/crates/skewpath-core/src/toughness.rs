//! Pathwise toughness, tough vertices, and the deficit-based formulas for
//! the path covering number and the maximum path length of skew graphs.
//!
//! A graph is *pathwise tough* when deleting any vertex set `S` leaves at
//! most `|S| + 1` components. A vertex `v` is *tough* when additionally
//! deleting any superset `S ⊇ N(v)` of its neighborhood (with `v`) leaves
//! at most `|S|` components. For skew tables both notions reduce to
//! arithmetic on row and column tallies, which is what this module
//! implements; the brute-force definitions live in the test suites.

use std::collections::HashSet;

use thiserror::Error;

use crate::table::{BoxVertex, PatternClass, SkewTable, TableError};

/// One term of the deficit maximum: a row term `2|V(R)| - 1`, a column
/// term `2|V(C)| - 1`, or an admissible pair term `|V(R)| + |V(C)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficitTerm {
    Row(usize),
    Col(usize),
    Pair(usize, usize),
}

/// The deficit of a table: how many vertices the graph is short of being
/// pathwise tough, together with the term attaining the inner maximum.
///
/// `value = max(0, M - n)` where `M` ranges over all row terms, column
/// terms, and pair terms of rows and columns neither of which contains the
/// other's vertex set. Ties are broken towards rows first, then columns,
/// then pairs, each by ascending index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deficit {
    pub value: usize,
    pub argmax: Option<DeficitTerm>,
}

/// Why a table is, or is not, pathwise tough.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToughnessWitness {
    /// The graph is disconnected already (deleting nothing leaves more
    /// than one component).
    Disconnected,
    /// A deficit term exceeds the vertex count.
    Deficient(DeficitTerm),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToughnessReport {
    pub pathwise_tough: bool,
    pub witness: Option<ToughnessWitness>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToughnessError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("operation requires a non-empty table")]
    EmptyTable,
}

/// Raw maximum `M` over all deficit terms, with the tie-broken argmax.
/// `None` when the table has no rows and no columns.
pub(crate) fn max_term(t: &SkewTable) -> Option<(i64, DeficitTerm)> {
    let mut best: Option<(i64, DeficitTerm)> = None;
    let mut consider = |value: i64, term: DeficitTerm| {
        if best.map_or(true, |(b, _)| value > b) {
            best = Some((value, term));
        }
    };
    for r in 0..t.rows() {
        consider(2 * t.row_tally(r) as i64 - 1, DeficitTerm::Row(r));
    }
    for c in 0..t.cols() {
        consider(2 * t.col_tally(c) as i64 - 1, DeficitTerm::Col(c));
    }
    for r in 0..t.rows() {
        for c in 0..t.cols() {
            if pair_admissible(t, r, c) {
                consider(
                    (t.row_tally(r) + t.col_tally(c)) as i64,
                    DeficitTerm::Pair(r, c),
                );
            }
        }
    }
    best
}

/// A pair `(R, C)` contributes a deficit term only when row `R` has a
/// vertex outside column `C`'s box and column `C` has a vertex outside row
/// `R`'s box (mutual non-containment of `V(R)` and `V(C)`).
fn pair_admissible(t: &SkewTable, r: usize, c: usize) -> bool {
    let shared = t.count(r, c);
    t.row_tally(r) > shared && t.col_tally(c) > shared
}

/// Computes the deficit of `t`.
pub fn deficit(t: &SkewTable) -> Deficit {
    if t.is_empty() {
        return Deficit {
            value: 0,
            argmax: None,
        };
    }
    match max_term(t) {
        None => Deficit {
            value: 0,
            argmax: None,
        },
        Some((m, term)) => Deficit {
            value: (m - t.n() as i64).max(0) as usize,
            argmax: Some(term),
        },
    }
}

/// Decides pathwise toughness: the table must be connected (at most one
/// component) and have deficit zero. On failure the report carries the
/// disconnection witness or the first violating deficit term.
pub fn is_pathwise_tough(t: &SkewTable) -> ToughnessReport {
    if t.component_count() > 1 {
        return ToughnessReport {
            pathwise_tough: false,
            witness: Some(ToughnessWitness::Disconnected),
        };
    }
    let d = deficit(t);
    if d.value > 0 {
        return ToughnessReport {
            pathwise_tough: false,
            witness: Some(ToughnessWitness::Deficient(
                d.argmax.expect("positive deficit has an argmax"),
            )),
        };
    }
    ToughnessReport {
        pathwise_tough: true,
        witness: None,
    }
}

/// Decides whether `v` is a tough vertex of `t`.
///
/// Two checks, each exact:
///
/// 1. `t` minus `v` must be pathwise tough.
/// 2. The neighborhood-superset condition. Deleting `v` together with any
///    `S ⊇ N(v)` leaves only vertices of `v`'s row and column: the row leg
///    (row vertices outside the shared box), the column leg, and the rest
///    of the shared box, whose vertices are isolated there. The legs span
///    a complete bipartite graph, so counting components for the worst
///    choice of `S` gives exactly three inequalities, with `n = |t|` and
///    tallies measured in `t`:
///    * `n ≥ 2|V(R_v)| - 1`  (worst case keeps the column leg only),
///    * `n ≥ 2|V(C_v)| - 1`  (worst case keeps the row leg only),
///    * `n ≥ |V(R_v)| + |V(C_v)|` whenever both legs are non-empty
///      (worst case keeps both legs and the shared box).
pub fn is_tough_vertex(t: &SkewTable, v: BoxVertex) -> Result<bool, ToughnessError> {
    if !t.contains(v) {
        return Err(TableError::InvalidVertex(v).into());
    }
    let n = t.n();
    let row = t.row_tally(v.row);
    let col = t.col_tally(v.col);
    let shared = t.count(v.row, v.col);
    if n + 1 < 2 * row || n + 1 < 2 * col {
        return Ok(false);
    }
    if row > shared && col > shared && n < row + col {
        return Ok(false);
    }
    let rest = t.remove_vertex(v).expect("v verified present");
    Ok(is_pathwise_tough(&rest).pathwise_tough)
}

/// Minimum number of vertex-disjoint paths covering all vertices.
///
/// For every pattern except `BoxPlus` this is `deficit + 1`. A `BoxPlus`
/// table splits into two complete bipartite components `K_{a,d}` and
/// `K_{b,c}` (diagonal corner pairs), each needing `max(|x - y|, 1)`
/// paths; the deficit formula is wrong there, so the components are summed
/// directly.
pub fn path_cover_number(t: &SkewTable) -> usize {
    if t.is_empty() {
        return 0;
    }
    match t.classify() {
        PatternClass::BoxPlus { rows, cols } => {
            let (a, b, c, d) = corner_counts(t, rows, cols);
            bipartite_cover(a, d) + bipartite_cover(b, c)
        }
        _ => deficit(t).value + 1,
    }
}

/// Maximum path length of the table's graph, in edges.
///
/// The longest path has `n - k` vertices where `k` is the least number of
/// deletions leaving a pathwise-tough (traceable) table. `k` equals the
/// deficit whenever deleting one vertex at a time from the structure
/// attaining the deficit maximum keeps lowering that maximum by two —
/// then the answer is the closed form `n - deficit - 1`. When tying terms
/// interlock so that no single deletion works (or the reduction lands on
/// a disconnected table), `k` exceeds the deficit and an exact
/// branch-and-bound takes over. `BoxPlus` tables are two complete
/// bipartite components and are answered directly: `2·min` edges for
/// unequal sides, `2·min - 1` for equal sides.
pub fn max_path_length(t: &SkewTable) -> Result<usize, ToughnessError> {
    if t.is_empty() {
        return Err(ToughnessError::EmptyTable);
    }
    Ok(match t.classify() {
        PatternClass::BoxPlus { rows, cols } => {
            let (a, b, c, d) = corner_counts(t, rows, cols);
            bipartite_longest(a, d).max(bipartite_longest(b, c))
        }
        _ => match reduce_to_tough(t) {
            Reduction::Canonical { .. } => t.n() - deficit(t).value - 1,
            Reduction::Stuck => t.n() - min_deletions_to_tough(t) - 1,
        },
    })
}

/// Outcome of the greedy deficit reduction.
#[derive(Debug)]
pub(crate) enum Reduction {
    /// Exactly `deficit` deletions reached a pathwise-tough table; the
    /// reduced table is traceable and the deleted boxes are listed in
    /// deletion order.
    Canonical {
        table: SkewTable,
        deleted: Vec<(usize, usize)>,
    },
    /// Some deletion step could not lower the deficit maximum by two, or
    /// the reduction ended disconnected.
    Stuck,
}

/// Repeatedly deletes one vertex from the structure attaining the deficit
/// maximum, requiring the maximum to drop by two each time. Within the
/// argmax row (or column) the box in the fullest crossing column (row) is
/// tried first, so tying terms sharing that box drop together.
pub(crate) fn reduce_to_tough(t: &SkewTable) -> Reduction {
    let mut work = t.clone();
    let mut deleted: Vec<(usize, usize)> = Vec::new();
    loop {
        let d = deficit(&work);
        if d.value == 0 {
            break;
        }
        let m = d.value as i64 + work.n() as i64;
        let term = d.argmax.expect("positive deficit has an argmax");
        let mut advanced = false;
        for (r, c) in deletion_candidates(&work, term) {
            let next = work
                .remove_vertex(BoxVertex::new(r, c, 0))
                .expect("candidate box is non-empty");
            let m2 = max_term(&next).map_or(i64::MIN, |(v, _)| v);
            if m2 <= m - 2 {
                work = next;
                deleted.push((r, c));
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Reduction::Stuck;
        }
    }
    if is_pathwise_tough(&work).pathwise_tough {
        Reduction::Canonical {
            table: work,
            deleted,
        }
    } else {
        Reduction::Stuck
    }
}

/// Boxes of the argmax structure in deletion-preference order.
fn deletion_candidates(t: &SkewTable, term: DeficitTerm) -> Vec<(usize, usize)> {
    match term {
        DeficitTerm::Row(r) => {
            let mut cols: Vec<usize> = (0..t.cols()).filter(|&c| t.count(r, c) > 0).collect();
            cols.sort_by(|&a, &b| t.col_tally(b).cmp(&t.col_tally(a)).then(a.cmp(&b)));
            cols.into_iter().map(|c| (r, c)).collect()
        }
        DeficitTerm::Col(c) => {
            let mut rows: Vec<usize> = (0..t.rows()).filter(|&r| t.count(r, c) > 0).collect();
            rows.sort_by(|&a, &b| t.row_tally(b).cmp(&t.row_tally(a)).then(a.cmp(&b)));
            rows.into_iter().map(|r| (r, c)).collect()
        }
        // a pair term above the vertex count forces a non-empty shared box
        DeficitTerm::Pair(r, c) => {
            if t.count(r, c) > 0 {
                vec![(r, c)]
            } else {
                Vec::new()
            }
        }
    }
}

/// Exact minimum number of deletions leaving a pathwise-tough table.
///
/// Disconnected patterns have closed answers (their components are
/// edgeless or complete bipartite); connected tables with positive
/// deficit branch over the boxes of the first violated structure, which
/// every optimal solution must touch. The deficit is a valid lower bound
/// (one deletion lowers it by at most one), so the search stays shallow.
fn min_deletions_to_tough(t: &SkewTable) -> usize {
    fn closed_form(t: &SkewTable) -> Option<usize> {
        match t.classify() {
            PatternClass::Empty => Some(0),
            PatternClass::SingleRow(_) | PatternClass::SingleColumn(_) => Some(t.n() - 1),
            PatternClass::BoxPlus { rows, cols } => {
                let (a, b, c, d) = corner_counts(t, rows, cols);
                let keep = bipartite_longest(a, d).max(bipartite_longest(b, c)) + 1;
                Some(t.n() - keep)
            }
            PatternClass::RowUnionColumn {
                row,
                col,
                intersection,
            } if intersection >= 1 => {
                let a = t.row_tally(row) - intersection;
                let b = t.col_tally(col) - intersection;
                Some(t.n() - (bipartite_longest(a, b) + 1))
            }
            _ => None,
        }
    }

    fn rec(
        t: &SkewTable,
        depth: usize,
        best: &mut usize,
        visited: &mut HashSet<Vec<u32>>,
    ) {
        if depth >= *best {
            return;
        }
        if let Some(extra) = closed_form(t) {
            *best = (*best).min(depth + extra);
            return;
        }
        // connected from here on
        let d = deficit(t);
        if d.value == 0 {
            *best = depth;
            return;
        }
        if depth + d.value >= *best {
            return;
        }
        let boxes: Vec<(usize, usize)> = match d.argmax.expect("positive deficit") {
            DeficitTerm::Row(r) => (0..t.cols())
                .filter(|&c| t.count(r, c) > 0)
                .map(|c| (r, c))
                .collect(),
            DeficitTerm::Col(c) => (0..t.rows())
                .filter(|&r| t.count(r, c) > 0)
                .map(|r| (r, c))
                .collect(),
            DeficitTerm::Pair(r, c) => {
                let mut v: Vec<(usize, usize)> = (0..t.cols())
                    .filter(|&cc| t.count(r, cc) > 0)
                    .map(|cc| (r, cc))
                    .collect();
                v.extend(
                    (0..t.rows())
                        .filter(|&rr| rr != r && t.count(rr, c) > 0)
                        .map(|rr| (rr, c)),
                );
                v
            }
        };
        for (r, c) in boxes {
            let next = t
                .remove_vertex(BoxVertex::new(r, c, 0))
                .expect("box is non-empty");
            if visited.insert(next.counts().to_vec()) {
                rec(&next, depth + 1, best, visited);
            }
        }
    }

    let mut best = t.n().saturating_sub(1); // a single vertex is always tough
    let mut visited = HashSet::new();
    rec(t, 0, &mut best, &mut visited);
    best
}

pub(crate) fn corner_counts(
    t: &SkewTable,
    rows: (usize, usize),
    cols: (usize, usize),
) -> (usize, usize, usize, usize) {
    (
        t.count(rows.0, cols.0),
        t.count(rows.0, cols.1),
        t.count(rows.1, cols.0),
        t.count(rows.1, cols.1),
    )
}

fn bipartite_cover(x: usize, y: usize) -> usize {
    x.abs_diff(y).max(1)
}

fn bipartite_longest(x: usize, y: usize) -> usize {
    let m = x.min(y);
    if x == y {
        2 * m - 1
    } else {
        2 * m
    }
}
