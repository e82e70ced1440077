//! Constrained Hamiltonian-path search and partial-labeling extension on
//! arbitrary simple graphs.
//!
//! A partial λ-labeling of `G` extends to a full one with labels `0..n-1`
//! exactly when the complement of `G` has a Hamiltonian path placing every
//! pre-labeled vertex at the index its label dictates. This module solves
//! that search directly: exact backtracking with position forcing,
//! gap-window pruning, and reachability pruning. The extension problem is
//! NP-hard in general, so the solver is desk-scale by design: a soft guard
//! rejects instances above [`SOLVER_GUARD`] vertices unless overridden.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::SimpleGraph;

/// Default instance cap for the exact search.
pub const SOLVER_GUARD: usize = 18;

/// Hard representation limit (visited sets are single machine words).
const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("invalid constraints: {0}")]
    InvalidConstraint(String),
    #[error("invalid partial labeling: {0}")]
    InvalidPartialLabeling(String),
    #[error("instance has {n} vertices, above the solver guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("inconsistent path: {0}")]
    InconsistentPath(String),
}

/// Errors from parsing constraint / partial-labeling files.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseSolverError {
    #[error("line {line}: malformed line '{text}'")]
    Malformed { line: usize, text: String },
    #[error("line {line}: cannot mix 'abs' and 'gap' constraints in one file")]
    MixedModes { line: usize },
}

/// Position constraints for a Hamiltonian path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintSet {
    /// vertex -> required index from the start of the path.
    Absolute(BTreeMap<usize, usize>),
    /// Ordered anchors with a required path-index distance between each
    /// consecutive pair (distance measured as absolute index difference).
    Gaps {
        anchors: Vec<usize>,
        gaps: Vec<usize>,
    },
}

impl ConstraintSet {
    pub fn empty() -> Self {
        ConstraintSet::Absolute(BTreeMap::new())
    }

    fn validate(&self, n: usize) -> Result<(), SolverError> {
        let bad = |msg: String| Err(SolverError::InvalidConstraint(msg));
        match self {
            ConstraintSet::Absolute(map) => {
                let mut seen = vec![false; n];
                for (&v, &pos) in map {
                    if v >= n {
                        return bad(format!("vertex {v} out of range"));
                    }
                    if pos >= n {
                        return bad(format!("position {pos} out of range"));
                    }
                    if seen[pos] {
                        return bad(format!("position {pos} required twice"));
                    }
                    seen[pos] = true;
                }
                Ok(())
            }
            ConstraintSet::Gaps { anchors, gaps } => {
                if anchors.is_empty() && gaps.is_empty() {
                    return Ok(());
                }
                if gaps.len() + 1 != anchors.len() {
                    return bad("need one gap per consecutive anchor pair".into());
                }
                let mut seen = vec![false; n];
                for &v in anchors {
                    if v >= n {
                        return bad(format!("anchor {v} out of range"));
                    }
                    if seen[v] {
                        return bad(format!("anchor {v} repeats"));
                    }
                    seen[v] = true;
                }
                if gaps.iter().any(|&d| d == 0) {
                    return bad("gaps must be positive".into());
                }
                if gaps.iter().sum::<usize>() > n.saturating_sub(1) {
                    return bad("gap total exceeds the path length".into());
                }
                Ok(())
            }
        }
    }

    /// Parses the constraint file format: `abs v pos` lines or
    /// `gap u v d` lines, one mode per file.
    pub fn parse(text: &str) -> Result<Self, ParseSolverError> {
        let mut absolute: Option<BTreeMap<usize, usize>> = None;
        let mut anchors: Vec<usize> = Vec::new();
        let mut gaps: Vec<usize> = Vec::new();
        for (line, text) in clean_lines(text) {
            let fields: Vec<&str> = text.split_whitespace().collect();
            let malformed = || ParseSolverError::Malformed {
                line,
                text: text.to_string(),
            };
            let num = |s: &str| s.parse::<usize>().map_err(|_| malformed());
            match fields.as_slice() {
                ["abs", v, pos] => {
                    if !anchors.is_empty() {
                        return Err(ParseSolverError::MixedModes { line });
                    }
                    absolute
                        .get_or_insert_with(BTreeMap::new)
                        .insert(num(v)?, num(pos)?);
                }
                ["gap", u, v, d] => {
                    if absolute.is_some() {
                        return Err(ParseSolverError::MixedModes { line });
                    }
                    let (u, v, d) = (num(u)?, num(v)?, num(d)?);
                    match anchors.last() {
                        None => anchors.push(u),
                        Some(&last) if last == u => {}
                        Some(_) => return Err(malformed()),
                    }
                    anchors.push(v);
                    gaps.push(d);
                }
                _ => return Err(malformed()),
            }
        }
        Ok(match absolute {
            Some(map) => ConstraintSet::Absolute(map),
            None if anchors.is_empty() => ConstraintSet::empty(),
            None => ConstraintSet::Gaps { anchors, gaps },
        })
    }
}

/// An injective pre-labeling whose adjacent labeled pairs differ by at
/// least two. Labels live in `0..n-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialLabeling(pub BTreeMap<usize, usize>);

impl PartialLabeling {
    pub fn empty() -> Self {
        PartialLabeling(BTreeMap::new())
    }

    fn validate(&self, g: &SimpleGraph) -> Result<(), SolverError> {
        let n = g.n();
        let bad = |msg: String| Err(SolverError::InvalidPartialLabeling(msg));
        let mut used = vec![false; n];
        for (&v, &l) in &self.0 {
            if v >= n {
                return bad(format!("vertex {v} out of range"));
            }
            if l >= n {
                return bad(format!("label {l} out of range 0..{n}"));
            }
            if used[l] {
                return bad(format!("label {l} used twice"));
            }
            used[l] = true;
        }
        for (&u, &lu) in &self.0 {
            for (&v, &lv) in self.0.range((u + 1)..) {
                if g.has_edge(u, v) && lu.abs_diff(lv) < 2 {
                    return bad(format!(
                        "adjacent vertices {u} and {v} carry labels {lu} and {lv}"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Parses the partial-labeling file format: one `v label` line per
    /// entry.
    pub fn parse(text: &str) -> Result<Self, ParseSolverError> {
        let mut map = BTreeMap::new();
        for (line, text) in clean_lines(text) {
            let mut it = text.split_whitespace();
            let malformed = || ParseSolverError::Malformed {
                line,
                text: text.to_string(),
            };
            let (v, l) = match (it.next(), it.next(), it.next()) {
                (Some(v), Some(l), None) => (v, l),
                _ => return Err(malformed()),
            };
            let v = v.parse::<usize>().map_err(|_| malformed())?;
            let l = l.parse::<usize>().map_err(|_| malformed())?;
            map.insert(v, l);
        }
        Ok(PartialLabeling(map))
    }
}

fn clean_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// A full labeling of a simple graph, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphLabeling {
    labels: Vec<usize>,
}

impl GraphLabeling {
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn span(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }
}

/// One piece of a Hamiltonian path between consecutive labeled vertices
/// (or before the first / after the last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSegment {
    /// Path indices of the segment's endpoints (inclusive).
    pub start: usize,
    pub end: usize,
    pub vertices: Vec<usize>,
}

impl PathSegment {
    /// Length in edges.
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Exact search for a Hamiltonian path satisfying `constraints`, under the
/// default guard.
pub fn constrained_ham_path(
    g: &SimpleGraph,
    constraints: &ConstraintSet,
) -> Result<Option<Vec<usize>>, SolverError> {
    constrained_ham_path_with_guard(g, constraints, SOLVER_GUARD)
}

pub fn constrained_ham_path_with_guard(
    g: &SimpleGraph,
    constraints: &ConstraintSet,
    guard: usize,
) -> Result<Option<Vec<usize>>, SolverError> {
    let n = g.n();
    if n > guard.min(MAX_VERTICES) {
        return Err(SolverError::GuardExceeded {
            n,
            guard: guard.min(MAX_VERTICES),
        });
    }
    constraints.validate(n)?;
    if n == 0 {
        return Ok(None);
    }
    let search = Search::new(g, constraints);
    Ok(search.run())
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    /// position -> forced vertex (absolute mode)
    forced_at: Vec<Option<usize>>,
    /// vertex -> forced position (absolute mode)
    position_of: Vec<Option<usize>>,
    /// vertex -> (chain neighbor, required gap) pairs (gap mode)
    chain: Vec<Vec<(usize, usize)>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, constraints: &ConstraintSet) -> Self {
        let n = g.n();
        let mut forced_at = vec![None; n];
        let mut position_of = vec![None; n];
        let mut chain = vec![Vec::new(); n];
        match constraints {
            ConstraintSet::Absolute(map) => {
                for (&v, &pos) in map {
                    forced_at[pos] = Some(v);
                    position_of[v] = Some(pos);
                }
            }
            ConstraintSet::Gaps { anchors, gaps } => {
                for (i, &d) in gaps.iter().enumerate() {
                    let (u, v) = (anchors[i], anchors[i + 1]);
                    chain[u].push((v, d));
                    chain[v].push((u, d));
                }
            }
        }
        Search {
            g,
            n,
            forced_at,
            position_of,
            chain,
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let starts: Vec<usize> = match self.forced_at[0] {
            Some(v) => vec![v],
            None => (0..self.n).collect(),
        };
        let mut path = Vec::with_capacity(self.n);
        let mut place = vec![None; self.n];
        for s in starts {
            if !self.placeable(s, 0, &place) {
                continue;
            }
            path.push(s);
            place[s] = Some(0);
            if self.extend(&mut path, &mut place, 1 << s) {
                return Some(path);
            }
            path.pop();
            place[s] = None;
        }
        None
    }

    /// Checks the position constraints for putting `v` at index `pos`.
    fn placeable(&self, v: usize, pos: usize, place: &[Option<usize>]) -> bool {
        if let Some(req) = self.position_of[v] {
            if req != pos {
                return false;
            }
        }
        if let Some(w) = self.forced_at[pos] {
            if w != v {
                return false;
            }
        }
        for &(other, d) in &self.chain[v] {
            match place[other] {
                Some(p) => {
                    if p.abs_diff(pos) != d {
                        return false;
                    }
                }
                // the partner comes later, so it must fit above
                None => {
                    if pos + d > self.n - 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&self, path: &mut Vec<usize>, place: &mut Vec<Option<usize>>, used: u64) -> bool {
        if path.len() == self.n {
            return true;
        }
        let pos = path.len();
        let end = *path.last().expect("non-empty path");
        if !self.reachable(end, used) {
            return false;
        }
        for v in self.g.neighbors(end) {
            if used & (1 << v) != 0 || !self.placeable(v, pos, place) {
                continue;
            }
            path.push(v);
            place[v] = Some(pos);
            if self.extend(path, place, used | (1 << v)) {
                return true;
            }
            path.pop();
            place[v] = None;
        }
        false
    }

    /// Every unvisited vertex must be reachable from the current endpoint
    /// through unvisited vertices; the path suffix is such a walk.
    fn reachable(&self, end: usize, used: u64) -> bool {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let free = full & !used;
        if free == 0 {
            return true;
        }
        let mut seen = 0u64;
        let mut stack = vec![end];
        while let Some(u) = stack.pop() {
            for v in self.g.neighbors(u) {
                let bit = 1u64 << v;
                if free & bit != 0 && seen & bit == 0 {
                    seen |= bit;
                    stack.push(v);
                }
            }
        }
        seen == free
    }
}

/// Extends a partial λ-labeling of `g` to a full one with labels
/// `0..n-1`, or returns `None` when impossible. The extension is the
/// index map along a consistent Hamiltonian path of the complement.
pub fn extend_partial(
    g: &SimpleGraph,
    partial: &PartialLabeling,
) -> Result<Option<GraphLabeling>, SolverError> {
    extend_partial_with_guard(g, partial, SOLVER_GUARD)
}

pub fn extend_partial_with_guard(
    g: &SimpleGraph,
    partial: &PartialLabeling,
    guard: usize,
) -> Result<Option<GraphLabeling>, SolverError> {
    partial.validate(g)?;
    let constraints = ConstraintSet::Absolute(partial.0.clone());
    let Some(path) = constrained_ham_path_with_guard(&g.complement(), &constraints, guard)?
    else {
        return Ok(None);
    };
    let mut labels = vec![0usize; g.n()];
    for (pos, &v) in path.iter().enumerate() {
        labels[v] = pos;
    }
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| labels[u].abs_diff(labels[v]) >= 2));
    Ok(Some(GraphLabeling { labels }))
}

/// Splits a consistent Hamiltonian path of the complement at the labeled
/// vertices: a head of length `c(v_1)` ending at the lowest-labeled
/// vertex, internal segments of length `c(v_{i+1}) - c(v_i)`, and a tail
/// of length `n - c(v_t) - 1`. With no labeled vertices the whole path is
/// one segment.
pub fn segment_decomposition(
    g: &SimpleGraph,
    partial: &PartialLabeling,
    path: &[usize],
) -> Result<Vec<PathSegment>, SolverError> {
    partial.validate(g)?;
    let n = g.n();
    let fail = |msg: String| Err(SolverError::InconsistentPath(msg));
    if path.len() != n {
        return fail(format!("path covers {} of {n} vertices", path.len()));
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n {
            return fail(format!("vertex {v} out of range"));
        }
        if seen[v] {
            return fail(format!("vertex {v} repeats"));
        }
        seen[v] = true;
    }
    for w in path.windows(2) {
        if g.has_edge(w[0], w[1]) {
            return fail(format!(
                "consecutive vertices {} and {} are adjacent in the graph",
                w[0], w[1]
            ));
        }
    }
    for (&v, &label) in &partial.0 {
        if path[label] != v {
            return fail(format!("vertex {v} is not at index {label}"));
        }
    }

    let mut cuts: Vec<usize> = partial.0.values().copied().collect();
    cuts.sort_unstable();
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend(cuts);
    bounds.push(n - 1);
    bounds.dedup();
    let segments = bounds
        .windows(2)
        .map(|w| PathSegment {
            start: w[0],
            end: w[1],
            vertices: path[w[0]..=w[1]].to_vec(),
        })
        .collect::<Vec<_>>();
    if segments.is_empty() {
        // single-vertex path, possibly labeled
        return Ok(vec![PathSegment {
            start: 0,
            end: 0,
            vertices: path.to_vec(),
        }]);
    }
    Ok(segments)
}
