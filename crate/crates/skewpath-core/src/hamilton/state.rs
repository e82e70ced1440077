//! Incremental table state for the Hamiltonian-path searches.
//!
//! The descent and the enumerator remove (and restore) one vertex at a
//! time and, at every step, ask for each candidate box whether one of its
//! vertices is tough in the current remainder. That test reduces to tally
//! arithmetic; everything it needs — tallies, the two largest row/column
//! tallies, non-empty box/row/column counters, and ordered lists of live
//! boxes — is maintained here in O(1) per update. Restores must happen in
//! reverse removal order (the usual dancing-links discipline), which is
//! exactly what a depth-first search does.

use crate::table::SkewTable;

const NONE: usize = usize::MAX;

/// Multiset of row (or column) tallies with O(1) updates and O(1)-amortized
/// "largest tally among the *other* rows" queries.
#[derive(Debug)]
struct TallyBag {
    hist: Vec<u32>,
    bits: Vec<u64>,
    max: usize,
}

impl TallyBag {
    fn new(tallies: &[u32]) -> Self {
        let cap = tallies.iter().copied().max().unwrap_or(0) as usize;
        let mut bag = TallyBag {
            hist: vec![0; cap + 1],
            bits: vec![0; cap / 64 + 1],
            max: 0,
        };
        for &t in tallies {
            let t = t as usize;
            bag.hist[t] += 1;
            bag.bits[t / 64] |= 1 << (t % 64);
            bag.max = bag.max.max(t);
        }
        bag
    }

    /// One element moves from tally `old` to `old - 1`.
    fn dec(&mut self, old: u32) {
        let o = old as usize;
        debug_assert!(o >= 1 && self.hist[o] > 0);
        self.hist[o] -= 1;
        if self.hist[o] == 0 {
            self.bits[o / 64] &= !(1 << (o % 64));
        }
        self.hist[o - 1] += 1;
        self.bits[(o - 1) / 64] |= 1 << ((o - 1) % 64);
        if o == self.max && self.hist[o] == 0 {
            self.max = o - 1;
        }
    }

    /// One element moves from tally `old` to `old + 1`.
    fn inc(&mut self, old: u32) {
        let o = old as usize;
        debug_assert!(self.hist[o] > 0 && o + 1 < self.hist.len());
        self.hist[o] -= 1;
        if self.hist[o] == 0 {
            self.bits[o / 64] &= !(1 << (o % 64));
        }
        self.hist[o + 1] += 1;
        self.bits[(o + 1) / 64] |= 1 << ((o + 1) % 64);
        if o + 1 > self.max {
            self.max = o + 1;
        }
    }

    /// Largest tally once one element of tally `excluded` is set aside.
    fn max_excluding(&self, excluded: u32) -> usize {
        let e = excluded as usize;
        debug_assert!(e <= self.max);
        if e < self.max || self.hist[self.max] >= 2 {
            return self.max;
        }
        self.prev_value(self.max)
    }

    /// Largest present value strictly below `v`, or 0 when there is none.
    fn prev_value(&self, v: usize) -> usize {
        if v == 0 {
            return 0;
        }
        let mut bit = v - 1;
        let mut word = bit / 64;
        let mut mask = self.bits[word] & (u64::MAX >> (63 - (bit % 64)));
        loop {
            if mask != 0 {
                return word * 64 + (63 - mask.leading_zeros() as usize);
            }
            if word == 0 {
                return 0;
            }
            word -= 1;
            mask = self.bits[word];
            bit = 0;
            let _ = bit;
        }
    }
}

/// Doubly linked list over `0..len` kept in ascending order, supporting
/// O(1) unlink and O(1) stack-disciplined relink.
#[derive(Debug)]
struct LinkedList {
    next: Vec<usize>,
    prev: Vec<usize>,
    head: usize,
}

impl LinkedList {
    fn full(len: usize, alive: impl Fn(usize) -> bool) -> Self {
        let mut next = vec![NONE; len];
        let mut prev = vec![NONE; len];
        let mut head = NONE;
        let mut last = NONE;
        for i in 0..len {
            if !alive(i) {
                continue;
            }
            if last == NONE {
                head = i;
            } else {
                next[last] = i;
                prev[i] = last;
            }
            last = i;
        }
        LinkedList { next, prev, head }
    }

    fn unlink(&mut self, i: usize) {
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NONE {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n != NONE {
            self.prev[n] = p;
        }
    }

    fn relink(&mut self, i: usize) {
        let (p, n) = (self.prev[i], self.next[i]);
        if p == NONE {
            self.head = i;
        } else {
            self.next[p] = i;
        }
        if n != NONE {
            self.prev[n] = i;
        }
    }
}

/// Mutable search state over a table.
#[derive(Debug)]
pub(crate) struct TableState {
    cols: usize,
    counts: Vec<u32>,
    n: usize,
    row_tally: Vec<u32>,
    col_tally: Vec<u32>,
    row_bag: TallyBag,
    col_bag: TallyBag,
    nonempty_boxes: usize,
    nonempty_rows: usize,
    nonempty_cols: usize,
    live_rows: LinkedList,
    live_cols: LinkedList,
    /// Per-row list of live (non-empty) boxes; entry `r * cols + c` links
    /// to the neighboring live columns of row `r`.
    row_boxes: Vec<LinkedList>,
}

impl TableState {
    pub fn new(t: &SkewTable) -> Self {
        let (rows, cols) = (t.rows(), t.cols());
        let counts = t.counts().to_vec();
        let row_tally: Vec<u32> = (0..rows).map(|r| t.row_tally(r) as u32).collect();
        let col_tally: Vec<u32> = (0..cols).map(|c| t.col_tally(c) as u32).collect();
        let row_boxes: Vec<LinkedList> = (0..rows)
            .map(|r| LinkedList::full(cols, |c| counts[r * cols + c] > 0))
            .collect();
        TableState {
            cols,
            n: t.n(),
            row_bag: TallyBag::new(&row_tally),
            col_bag: TallyBag::new(&col_tally),
            nonempty_boxes: counts.iter().filter(|&&c| c > 0).count(),
            nonempty_rows: row_tally.iter().filter(|&&t| t > 0).count(),
            nonempty_cols: col_tally.iter().filter(|&&t| t > 0).count(),
            live_rows: LinkedList::full(rows, |r| row_tally[r] > 0),
            live_cols: LinkedList::full(cols, |c| col_tally[c] > 0),
            row_boxes,
            counts,
            row_tally,
            col_tally,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, r: usize, c: usize) -> usize {
        self.counts[r * self.cols + c] as usize
    }

    /// Removes one vertex from box `(r, c)`.
    pub fn remove(&mut self, r: usize, c: usize) {
        let idx = r * self.cols + c;
        debug_assert!(self.counts[idx] > 0);
        self.counts[idx] -= 1;
        self.n -= 1;
        self.row_bag.dec(self.row_tally[r]);
        self.row_tally[r] -= 1;
        self.col_bag.dec(self.col_tally[c]);
        self.col_tally[c] -= 1;
        if self.counts[idx] == 0 {
            self.row_boxes[r].unlink(c);
            self.nonempty_boxes -= 1;
        }
        if self.row_tally[r] == 0 {
            self.live_rows.unlink(r);
            self.nonempty_rows -= 1;
        }
        if self.col_tally[c] == 0 {
            self.live_cols.unlink(c);
            self.nonempty_cols -= 1;
        }
    }

    /// Exact inverse of the most recent unmatched [`Self::remove`].
    pub fn unremove(&mut self, r: usize, c: usize) {
        let idx = r * self.cols + c;
        if self.counts[idx] == 0 {
            self.row_boxes[r].relink(c);
            self.nonempty_boxes += 1;
        }
        if self.row_tally[r] == 0 {
            self.live_rows.relink(r);
            self.nonempty_rows += 1;
        }
        if self.col_tally[c] == 0 {
            self.live_cols.relink(c);
            self.nonempty_cols += 1;
        }
        self.counts[idx] += 1;
        self.n += 1;
        self.row_bag.inc(self.row_tally[r]);
        self.row_tally[r] += 1;
        self.col_bag.inc(self.col_tally[c]);
        self.col_tally[c] += 1;
    }

    /// Whether a vertex of box `(r, c)` is tough in the current table.
    ///
    /// Exact translation of the tally conditions: the vertex's own row,
    /// column and (when both legs are non-empty) row+column bounds, plus
    /// pathwise toughness of the remainder — deficit zero and not the
    /// four-corner pattern, which for deficit zero is the only
    /// disconnected shape.
    pub fn is_tough_candidate(&self, r: usize, c: usize) -> bool {
        let idx = r * self.cols + c;
        debug_assert!(self.counts[idx] > 0);
        let n1 = self.n;
        let ri = self.row_tally[r] as usize;
        let cj = self.col_tally[c] as usize;
        let shared = self.counts[idx] as usize;

        // own-vertex conditions
        if n1 + 1 < 2 * ri || n1 + 1 < 2 * cj {
            return false;
        }
        if ri > shared && cj > shared && n1 < ri + cj {
            return false;
        }

        // remainder (with the candidate removed) must have deficit zero
        let n2 = n1 - 1;
        let max_row = (ri - 1).max(self.row_bag.max_excluding(ri as u32));
        if 2 * max_row > n2 + 1 {
            return false;
        }
        let max_col = (cj - 1).max(self.col_bag.max_excluding(cj as u32));
        if 2 * max_col > n2 + 1 {
            return false;
        }
        if max_row + max_col > n2 && !self.pairs_ok_after(r, c) {
            return false;
        }

        // ... and must not be the four-corner pattern
        let boxes2 = self.nonempty_boxes - usize::from(shared == 1);
        let rows2 = self.nonempty_rows - usize::from(ri == 1);
        let cols2 = self.nonempty_cols - usize::from(cj == 1);
        !(boxes2 == 4 && rows2 == 2 && cols2 == 2)
    }

    /// Exact pair-term check for the remainder after removing one vertex
    /// from `(dr, dc)`: every admissible row/column pair must satisfy
    /// `|V(R)| + |V(C)| <= n`. Only consulted when the cheap
    /// max-row + max-col bound fails.
    fn pairs_ok_after(&self, dr: usize, dc: usize) -> bool {
        let n2 = self.n - 1;
        let mut r = self.live_rows.head;
        while r != NONE {
            let tr = self.row_tally[r] as usize - usize::from(r == dr);
            if tr > 0 {
                let mut c = self.live_cols.head;
                while c != NONE {
                    let tc = self.col_tally[c] as usize - usize::from(c == dc);
                    if tc > 0 && tr + tc > n2 {
                        let shared = self.count(r, c) - usize::from(r == dr && c == dc);
                        if tr > shared && tc > shared {
                            return false;
                        }
                    }
                    c = self.live_cols.next[c];
                }
            }
            r = self.live_rows.next[r];
        }
        true
    }

    /// First box in row-major order that avoids row `pr` and column `pc`
    /// and holds a tough vertex.
    pub fn first_tough_skew_box(&self, pr: usize, pc: usize) -> Option<(usize, usize)> {
        let mut r = self.live_rows.head;
        while r != NONE {
            if r != pr {
                let mut c = self.row_boxes[r].head;
                while c != NONE {
                    if c != pc && self.is_tough_candidate(r, c) {
                        return Some((r, c));
                    }
                    c = self.row_boxes[r].next[c];
                }
            }
            r = self.live_rows.next[r];
        }
        None
    }

    /// Live boxes in row-major order with their current counts.
    pub fn live_boxes(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        let mut r = self.live_rows.head;
        while r != NONE {
            let mut c = self.row_boxes[r].head;
            while c != NONE {
                out.push((r, c, self.counts[r * self.cols + c]));
                c = self.row_boxes[r].next[c];
            }
            r = self.live_rows.next[r];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::SkewTable;
    use crate::toughness;

    #[test]
    fn tally_bag_tracks_maxima() {
        let mut bag = TallyBag::new(&[5, 4, 4, 0]);
        assert_eq!(bag.max_excluding(5), 4);
        assert_eq!(bag.max_excluding(4), 5);
        bag.dec(5); // 4,4,4,0
        assert_eq!(bag.max_excluding(4), 4);
        bag.dec(4); // 3,4,4,0
        bag.dec(4); // 3,3,4,0
        assert_eq!(bag.max_excluding(4), 3);
        bag.inc(4); // 3,3,5,0
        assert_eq!(bag.max_excluding(5), 3);
        assert_eq!(bag.max_excluding(3), 5);
    }

    #[test]
    fn remove_unremove_roundtrip() {
        let t = SkewTable::from_grid(&[&[1, 2], &[3, 0]]);
        let mut s = TableState::new(&t);
        let before = format!("{s:?}");
        s.remove(1, 0);
        s.remove(0, 1);
        s.remove(1, 0);
        s.unremove(1, 0);
        s.unremove(0, 1);
        s.unremove(1, 0);
        assert_eq!(format!("{s:?}"), before);
    }

    /// The O(1) candidate test must agree with the reference tough-vertex
    /// computation on the same remainder table.
    #[test]
    fn candidate_test_matches_reference() {
        for t in crate::oracle::enumerate_tables(3, 3, 6) {
            if t.is_empty() {
                continue;
            }
            let state = TableState::new(&t);
            for r in 0..t.rows() {
                for c in 0..t.cols() {
                    if t.count(r, c) == 0 {
                        continue;
                    }
                    let fast = state.is_tough_candidate(r, c);
                    let slow = toughness::is_tough_vertex(&t, crate::table::BoxVertex::new(r, c, 0))
                        .unwrap();
                    assert_eq!(fast, slow, "mismatch at ({r},{c}) on {t:?}");
                }
            }
        }
    }
}
