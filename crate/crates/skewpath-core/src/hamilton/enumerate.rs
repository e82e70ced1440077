//! Lazy depth-first enumeration of Hamiltonian paths.
//!
//! One engine serves both the path enumerator and the position-constrained
//! search: an explicit-stack DFS over the incremental [`TableState`],
//! filtering every continuation through the O(1) toughness test. The
//! filter is sound (the next vertex of any completable path is tough in
//! the remainder) and the tests pin completeness against the brute-force
//! oracle.

use std::collections::HashMap;

use super::state::TableState;
use super::HamPath;
use crate::table::{BoxVertex, SkewTable};

/// Whether the stream distinguishes same-box vertices.
///
/// `Vertices` yields every ordinal assignment of every box sequence;
/// `Boxes` yields one canonical representative per box sequence, with
/// box visits taking the lowest unused ordinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMode {
    Vertices,
    Boxes,
}

#[derive(Debug, Clone)]
enum Cursor {
    /// This position is pinned to one vertex by a constraint.
    Forced { tried: bool },
    /// Row-major scan: next candidate at or after box `(r, c)`, ordinal
    /// slot `ord`.
    Scan { r: usize, c: usize, ord: usize },
}

#[derive(Debug)]
struct Constraints {
    /// position -> the vertex required there
    at_index: Vec<Option<BoxVertex>>,
    /// vertex -> its required position
    required: HashMap<BoxVertex, usize>,
    /// per box, ordinals that belong to constrained vertices
    pinned_ords: Vec<Vec<usize>>,
    /// per box, constrained vertices not yet placed
    pending: Vec<u32>,
}

/// Streaming Hamiltonian-path iterator. Single consumer; state is restored
/// on backtracking, so dropping it mid-stream is fine.
#[derive(Debug)]
pub struct HamPathEnumerator {
    rows: usize,
    cols: usize,
    n: usize,
    init_counts: Vec<u32>,
    box_offset: Vec<usize>,
    state: TableState,
    mode: EnumMode,
    constraints: Option<Constraints>,
    ord_used: Vec<bool>,
    path: Vec<BoxVertex>,
    stack: Vec<Cursor>,
    limit_left: Option<usize>,
    finished: bool,
    /// a full path was returned; the next call resumes by backtracking
    emitted: bool,
}

impl HamPathEnumerator {
    pub(super) fn with_start(
        t: &SkewTable,
        start: BoxVertex,
        mode: EnumMode,
        limit: Option<usize>,
    ) -> Self {
        let mut e = Self::build(t, mode, None, limit);
        // Pre-place the start vertex; the bottom cursor is already spent.
        e.stack.push(Cursor::Scan {
            r: e.rows,
            c: 0,
            ord: 0,
        });
        e.apply(start);
        e.stack.push(e.cursor_for(e.path.len()));
        e
    }

    pub(super) fn with_constraints(
        t: &SkewTable,
        required: &HashMap<BoxVertex, usize>,
        limit: Option<usize>,
    ) -> Self {
        let mut at_index = vec![None; t.n()];
        let mut pinned_ords = vec![Vec::new(); t.rows() * t.cols()];
        let mut pending = vec![0u32; t.rows() * t.cols()];
        for (&v, &pos) in required {
            at_index[pos] = Some(v);
            let b = v.row * t.cols() + v.col;
            pinned_ords[b].push(v.ord);
            pending[b] += 1;
        }
        for ords in &mut pinned_ords {
            ords.sort_unstable();
        }
        let constraints = Constraints {
            at_index,
            required: required.clone(),
            pinned_ords,
            pending,
        };
        let mut e = Self::build(t, EnumMode::Boxes, Some(constraints), limit);
        e.stack.push(e.cursor_for(0));
        e
    }

    fn build(
        t: &SkewTable,
        mode: EnumMode,
        constraints: Option<Constraints>,
        limit: Option<usize>,
    ) -> Self {
        let mut box_offset = vec![0usize; t.rows() * t.cols()];
        let mut off = 0usize;
        for r in 0..t.rows() {
            for c in 0..t.cols() {
                box_offset[r * t.cols() + c] = off;
                off += t.count(r, c);
            }
        }
        HamPathEnumerator {
            rows: t.rows(),
            cols: t.cols(),
            n: t.n(),
            init_counts: t.counts().to_vec(),
            box_offset,
            state: TableState::new(t),
            mode,
            constraints,
            ord_used: vec![false; t.n()],
            path: Vec::with_capacity(t.n()),
            stack: Vec::with_capacity(t.n() + 1),
            limit_left: limit,
            finished: limit == Some(0),
            emitted: false,
        }
    }

    fn cursor_for(&self, depth: usize) -> Cursor {
        let forced = self
            .constraints
            .as_ref()
            .and_then(|c| c.at_index.get(depth).copied().flatten())
            .is_some();
        if forced {
            Cursor::Forced { tried: false }
        } else {
            Cursor::Scan { r: 0, c: 0, ord: 0 }
        }
    }

    fn apply(&mut self, v: BoxVertex) {
        let b = v.row * self.cols + v.col;
        self.state.remove(v.row, v.col);
        debug_assert!(!self.ord_used[self.box_offset[b] + v.ord]);
        self.ord_used[self.box_offset[b] + v.ord] = true;
        if let Some(cons) = &mut self.constraints {
            if cons.required.get(&v) == Some(&self.path.len()) {
                cons.pending[b] -= 1;
            }
        }
        self.path.push(v);
    }

    fn undo(&mut self) {
        let v = self.path.pop().expect("undo with a placed vertex");
        let b = v.row * self.cols + v.col;
        self.state.unremove(v.row, v.col);
        self.ord_used[self.box_offset[b] + v.ord] = false;
        if let Some(cons) = &mut self.constraints {
            if cons.required.get(&v) == Some(&self.path.len()) {
                cons.pending[b] += 1;
            }
        }
    }

    /// Next candidate for position `depth`, advancing `cursor` past it.
    fn find_candidate(&self, depth: usize, cursor: &mut Cursor) -> Option<BoxVertex> {
        let prev = depth.checked_sub(1).map(|i| self.path[i]);
        match cursor {
            Cursor::Forced { tried } => {
                if *tried {
                    return None;
                }
                *tried = true;
                let w = self.constraints.as_ref().expect("forced implies constraints").at_index
                    [depth]
                    .expect("forced cursor at a constrained index");
                if let Some(p) = prev {
                    if w.row == p.row || w.col == p.col {
                        return None;
                    }
                }
                debug_assert!(self.state.count(w.row, w.col) > 0);
                if !self.state.is_tough_candidate(w.row, w.col) {
                    return None;
                }
                Some(w)
            }
            Cursor::Scan { r, c, ord } => {
                while *r < self.rows {
                    if prev.is_some_and(|p| p.row == *r) {
                        *r += 1;
                        *c = 0;
                        *ord = 0;
                        continue;
                    }
                    while *c < self.cols {
                        if let Some(v) = self.scan_box(depth, prev, *r, *c, ord) {
                            return Some(v);
                        }
                        *c += 1;
                        *ord = 0;
                    }
                    *r += 1;
                    *c = 0;
                }
                None
            }
        }
    }

    /// Candidates within one box, honoring the mode and skipping ordinals
    /// pinned to constrained vertices. `ord` is the resume slot and is
    /// advanced past the returned candidate.
    fn scan_box(
        &self,
        depth: usize,
        prev: Option<BoxVertex>,
        r: usize,
        c: usize,
        ord: &mut usize,
    ) -> Option<BoxVertex> {
        if prev.is_some_and(|p| p.col == c) {
            return None;
        }
        let b = r * self.cols + c;
        let live = self.state.count(r, c);
        if live == 0 {
            return None;
        }
        let pending = self.constraints.as_ref().map_or(0, |k| k.pending[b] as usize);
        if live <= pending {
            return None; // only vertices reserved for later forced slots
        }
        // the toughness test is per box; a previously returned ordinal
        // (ord > 0) means it already passed at this depth
        if *ord == 0 && !self.state.is_tough_candidate(r, c) {
            return None;
        }
        let _ = depth;
        let total = self.init_counts[b] as usize;
        match self.mode {
            EnumMode::Boxes => {
                if *ord > 0 {
                    return None;
                }
                *ord = 1;
                let k = (0..total)
                    .find(|&k| !self.ord_used[self.box_offset[b] + k] && !self.is_pinned(b, k))
                    .expect("free vertex available");
                Some(BoxVertex::new(r, c, k))
            }
            EnumMode::Vertices => {
                for k in *ord..total {
                    if !self.ord_used[self.box_offset[b] + k] && !self.is_pinned(b, k) {
                        *ord = k + 1;
                        return Some(BoxVertex::new(r, c, k));
                    }
                }
                None
            }
        }
    }

    fn is_pinned(&self, b: usize, ord: usize) -> bool {
        self.constraints
            .as_ref()
            .is_some_and(|c| c.pinned_ords[b].binary_search(&ord).is_ok())
    }
}

impl Iterator for HamPathEnumerator {
    type Item = HamPath;

    fn next(&mut self) -> Option<HamPath> {
        if self.finished {
            return None;
        }
        // returning from a previous emission: step back once
        if self.emitted {
            self.emitted = false;
            self.stack.pop();
            self.undo();
        }
        loop {
            if self.path.len() == self.n && self.n > 0 {
                if let Some(left) = &mut self.limit_left {
                    *left -= 1;
                    if *left == 0 {
                        self.finished = true;
                    }
                }
                self.emitted = true;
                return Some(HamPath::from_vertices(self.path.clone()));
            }
            let depth = self.path.len();
            let mut cursor = self.stack.last().expect("cursor per depth").clone();
            let candidate = self.find_candidate(depth, &mut cursor);
            *self.stack.last_mut().expect("cursor per depth") = cursor;
            match candidate {
                Some(v) => {
                    self.apply(v);
                    self.stack.push(self.cursor_for(self.path.len()));
                }
                None => {
                    self.stack.pop();
                    if self.path.is_empty() {
                        self.finished = true;
                        return None;
                    }
                    self.undo();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::enumerate_ham_paths;
    use crate::oracle;

    #[test]
    fn two_by_two_is_empty() {
        let t = SkewTable::all_ones(2, 2);
        for v in t.vertices().collect::<Vec<_>>() {
            let paths: Vec<_> =
                enumerate_ham_paths(&t, v, EnumMode::Vertices, None).unwrap().collect();
            assert!(paths.is_empty());
        }
    }

    #[test]
    fn single_vertex_single_path() {
        let t = SkewTable::from_grid(&[&[1]]);
        let paths: Vec<_> =
            enumerate_ham_paths(&t, BoxVertex::new(0, 0, 0), EnumMode::Vertices, None)
                .unwrap()
                .collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices(), &[BoxVertex::new(0, 0, 0)]);
    }

    #[test]
    fn matches_oracle_on_2x3() {
        let t = SkewTable::all_ones(2, 3);
        let g = t.expand_complement();
        let v = BoxVertex::new(0, 0, 0);
        let got: Vec<Vec<usize>> = enumerate_ham_paths(&t, v, EnumMode::Vertices, None)
            .unwrap()
            .map(|p| {
                p.vertices()
                    .iter()
                    .map(|&w| t.vertex_index(w).unwrap())
                    .collect()
            })
            .collect();
        let expected = oracle::brute_ham_paths(&g, t.vertex_index(v)).unwrap();
        let mut sorted = got.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), got.len(), "no duplicates");
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(sorted, expected_sorted);
    }

    #[test]
    fn boxes_mode_yields_canonical_representatives() {
        let t = SkewTable::from_grid(&[&[2, 0], &[0, 2]]);
        let v = BoxVertex::new(0, 0, 0);
        let by_boxes: Vec<_> =
            enumerate_ham_paths(&t, v, EnumMode::Boxes, None).unwrap().collect();
        let by_vertices: Vec<_> =
            enumerate_ham_paths(&t, v, EnumMode::Vertices, None).unwrap().collect();
        // box sequences of the two streams agree as sets of sequences
        let seq = |p: &HamPath| {
            p.vertices().iter().map(|w| (w.row, w.col)).collect::<Vec<_>>()
        };
        let mut a: Vec<_> = by_boxes.iter().map(seq).collect();
        let mut b: Vec<_> = by_vertices.iter().map(seq).collect();
        a.sort();
        a.dedup();
        b.sort();
        b.dedup();
        assert_eq!(a, b);
        // canonical representative: ordinals ascend per box
        for p in &by_boxes {
            let mut last: HashMap<(usize, usize), usize> = HashMap::new();
            for w in p.vertices() {
                if let Some(&prev) = last.get(&(w.row, w.col)) {
                    assert!(w.ord > prev, "ordinals ascend within a box");
                }
                last.insert((w.row, w.col), w.ord);
            }
        }
        assert_eq!(by_vertices.len(), by_boxes.len() * 2, "t has one free ordinal pair");
    }

    #[test]
    fn limit_stops_the_stream() {
        let t = SkewTable::all_ones(3, 3);
        let v = BoxVertex::new(0, 0, 0);
        let some: Vec<_> =
            enumerate_ham_paths(&t, v, EnumMode::Vertices, Some(5)).unwrap().collect();
        assert_eq!(some.len(), 5);
        let all: Vec<_> =
            enumerate_ham_paths(&t, v, EnumMode::Vertices, None).unwrap().collect();
        assert!(all.len() > 5);
        assert_eq!(&all[..5], &some[..]);
    }

    #[test]
    fn stream_is_deterministic_and_lexicographic() {
        let t = SkewTable::from_grid(&[&[1, 1, 1], &[0, 2, 1]]);
        let v = BoxVertex::new(0, 0, 0);
        let run = || {
            enumerate_ham_paths(&t, v, EnumMode::Vertices, None)
                .unwrap()
                .map(|p| p.vertices().to_vec())
                .collect::<Vec<_>>()
        };
        let a = run();
        assert_eq!(a, run());
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted, "depth-first order is lexicographic");
    }
}
