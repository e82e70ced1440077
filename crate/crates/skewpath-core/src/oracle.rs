//! Independent brute-force reference implementations.
//!
//! These are the ground truth the test suites compare the production
//! algorithms against, and they back the `oracle` CLI subcommand. They work
//! on explicit [`SimpleGraph`]s only — never on tallies, deficits or
//! toughness conditions — so that agreement with the tabular formulas is
//! meaningful evidence. Each oracle carries a small instance guard that
//! fails loudly instead of silently truncating; the `*_with_guard` variants
//! accept a raised cap.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::table::SkewTable;

/// Default instance caps, chosen so every oracle finishes in milliseconds.
pub const HAM_PATHS_GUARD: usize = 11;
pub const PATH_COVER_GUARD: usize = 10;
pub const LONGEST_PATH_GUARD: usize = 16;
pub const L21_GUARD: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, above the oracle guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("start vertex {vertex} out of range for a graph on {n} vertices")]
    StartOutOfRange { vertex: usize, n: usize },
}

fn check_guard(n: usize, guard: usize) -> Result<(), OracleError> {
    if n > guard {
        return Err(OracleError::GuardExceeded { n, guard });
    }
    Ok(())
}

/// Enumerates every Hamiltonian path of `g` by permutation backtracking,
/// optionally restricted to paths starting at `from`. Output is in
/// lexicographic order of the vertex sequences.
pub fn brute_ham_paths(
    g: &SimpleGraph,
    from: Option<usize>,
) -> Result<Vec<Vec<usize>>, OracleError> {
    brute_ham_paths_with_guard(g, from, HAM_PATHS_GUARD)
}

pub fn brute_ham_paths_with_guard(
    g: &SimpleGraph,
    from: Option<usize>,
    guard: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    check_guard(g.n(), guard)?;
    let mut out = Vec::new();
    for_each_ham_path(g, from, &mut |path| {
        out.push(path.to_vec());
        true
    })?;
    Ok(out)
}

/// Existence-only variant of [`brute_ham_paths`]; stops at the first path.
pub fn brute_has_ham_path(g: &SimpleGraph, from: Option<usize>) -> Result<bool, OracleError> {
    brute_has_ham_path_with_guard(g, from, HAM_PATHS_GUARD)
}

pub fn brute_has_ham_path_with_guard(
    g: &SimpleGraph,
    from: Option<usize>,
    guard: usize,
) -> Result<bool, OracleError> {
    check_guard(g.n(), guard)?;
    let mut found = false;
    for_each_ham_path(g, from, &mut |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Runs `visit` on every Hamiltonian path (in lexicographic order) until it
/// returns `false`.
fn for_each_ham_path(
    g: &SimpleGraph,
    from: Option<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<(), OracleError> {
    let n = g.n();
    if let Some(s) = from {
        if s >= n {
            return Err(OracleError::StartOutOfRange { vertex: s, n });
        }
    }
    if n == 0 {
        return Ok(());
    }

    fn rec(
        g: &SimpleGraph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if path.len() == g.n() {
            return visit(path);
        }
        let end = *path.last().expect("path is non-empty");
        for v in g.neighbors(end) {
            if !used[v] {
                used[v] = true;
                path.push(v);
                let keep_going = rec(g, path, used, visit);
                path.pop();
                used[v] = false;
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }

    let starts: Vec<usize> = match from {
        Some(s) => vec![s],
        None => (0..n).collect(),
    };
    let mut used = vec![false; n];
    for s in starts {
        used[s] = true;
        let mut path = vec![s];
        let keep_going = rec(g, &mut path, &mut used, visit);
        used[s] = false;
        if !keep_going {
            return Ok(());
        }
    }
    Ok(())
}

/// For every vertex subset, which vertices can end a Hamiltonian path of
/// the induced subgraph. `ends[mask] & (1 << v) != 0` iff such a path ends
/// at `v`.
fn path_end_sets(g: &SimpleGraph) -> Vec<u32> {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |m, v| m | (1 << v)))
        .collect();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1u32..(1 << n) as u32 {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut e = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if ends[(mask ^ (1 << v)) as usize] & adj[v] != 0 {
                e |= 1 << v;
            }
        }
        ends[mask as usize] = e;
    }
    ends
}

/// Minimum number of vertex-disjoint paths covering all vertices, by
/// iterative deepening on the path count: for k = 1, 2, … test whether the
/// vertex set splits into k traceable pieces.
pub fn brute_path_cover(g: &SimpleGraph) -> Result<usize, OracleError> {
    brute_path_cover_with_guard(g, PATH_COVER_GUARD)
}

pub fn brute_path_cover_with_guard(g: &SimpleGraph, guard: usize) -> Result<usize, OracleError> {
    check_guard(g.n(), guard)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let ends = path_end_sets(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    fn can_split(
        mask: u32,
        k: usize,
        ends: &[u32],
        failed: &mut HashSet<(u32, usize)>,
    ) -> bool {
        if mask == 0 {
            return true;
        }
        if k == 0 || failed.contains(&(mask, k)) {
            return false;
        }
        let low = mask & mask.wrapping_neg();
        // enumerate submasks of `mask` containing the lowest vertex
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let piece = sub | low;
            if ends[piece as usize] != 0 && can_split(mask ^ piece, k - 1, ends, failed) {
                return true;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        failed.insert((mask, k));
        false
    }

    let mut failed = HashSet::new();
    for k in 1..=n {
        if can_split(full, k, &ends, &mut failed) {
            return Ok(k);
        }
    }
    unreachable!("n singleton paths always cover")
}

/// Maximum path length (in edges) over all paths of `g`.
pub fn brute_longest_path(g: &SimpleGraph) -> Result<usize, OracleError> {
    brute_longest_path_with_guard(g, LONGEST_PATH_GUARD)
}

pub fn brute_longest_path_with_guard(g: &SimpleGraph, guard: usize) -> Result<usize, OracleError> {
    check_guard(g.n(), guard)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let ends = path_end_sets(g);
    let best = (1u32..(1 << g.n()) as u32)
        .filter(|&m| ends[m as usize] != 0)
        .map(|m| m.count_ones() as usize)
        .max()
        .expect("singletons are traceable");
    Ok(best - 1)
}

/// Minimum span of an L(2,1)-coloring of `g`: adjacent labels differ by at
/// least two and vertices at distance two get distinct labels. Branch and
/// bound over spans, smallest first.
pub fn brute_l21(g: &SimpleGraph) -> Result<usize, OracleError> {
    brute_l21_with_guard(g, L21_GUARD)
}

pub fn brute_l21_with_guard(g: &SimpleGraph, guard: usize) -> Result<usize, OracleError> {
    check_guard(g.n(), guard)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    // Assign labels to vertices in descending-degree order; high-degree
    // vertices are the most constrained, which prunes infeasible spans fast.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let adj_of = |u: usize| g.neighbors(u).fold(0u32, |m, v| m | (1 << v));
    let adj: Vec<u32> = (0..n).map(adj_of).collect();
    let dist2: Vec<u32> = (0..n)
        .map(|u| {
            let two_steps = g.neighbors(u).fold(0u32, |m, w| m | adj[w]);
            two_steps & !adj[u] & !(1 << u)
        })
        .collect();

    fn feasible(
        i: usize,
        order: &[usize],
        labels: &mut [usize],
        adj: &[u32],
        dist2: &[u32],
        span: usize,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        // reversing a labeling (l -> span - l) preserves both constraints,
        // so the first vertex only needs the lower half
        let cap = if i == 0 { span / 2 } else { span };
        'labels: for l in 0..=cap {
            for &w in &order[..i] {
                let lw = labels[w];
                if adj[u] & (1 << w) != 0 && lw.abs_diff(l) < 2 {
                    continue 'labels;
                }
                if dist2[u] & (1 << w) != 0 && lw == l {
                    continue 'labels;
                }
            }
            labels[u] = l;
            if feasible(i + 1, order, labels, adj, dist2, span) {
                return true;
            }
        }
        false
    }

    let mut labels = vec![0usize; n];
    for span in 0..=2 * n {
        if feasible(0, &order, &mut labels, &adj, &dist2, span) {
            return Ok(span);
        }
    }
    unreachable!("span 2n always admits an L(2,1)-coloring")
}

/// Deterministically enumerates every table with dimensions up to
/// `max_rows × max_cols` and at most `max_total` vertices. Used to build
/// exhaustive test corpora and to reproduce reference values.
pub fn enumerate_tables(max_rows: usize, max_cols: usize, max_total: usize) -> Vec<SkewTable> {
    let mut out = Vec::new();
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            let mut counts = vec![0u32; rows * cols];
            fill(&mut counts, 0, max_total, &mut |c| {
                out.push(SkewTable::new(rows, cols, c.to_vec()));
            });
        }
    }
    out
}

fn fill(counts: &mut [u32], pos: usize, budget: usize, emit: &mut impl FnMut(&[u32])) {
    if pos == counts.len() {
        emit(counts);
        return;
    }
    for v in 0..=budget {
        counts[pos] = v as u32;
        fill(counts, pos + 1, budget - v, emit);
    }
    counts[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn k(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::with_edges(n, &edges).unwrap()
    }

    #[test]
    fn ham_paths_on_k3() {
        let paths = brute_ham_paths(&k(3), None).unwrap();
        assert_eq!(paths.len(), 6);
        assert_eq!(paths[0], vec![0, 1, 2]);
        // lexicographically sorted, no duplicates
        let mut sorted = paths.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, paths);
    }

    #[test]
    fn ham_paths_edgeless() {
        let g = SimpleGraph::new(3);
        assert!(brute_ham_paths(&g, None).unwrap().is_empty());
        assert!(!brute_has_ham_path(&g, Some(1)).unwrap());
    }

    #[test]
    fn ham_paths_two_by_two_skew() {
        let g = SkewTable::all_ones(2, 2).expand_complement();
        assert!(brute_ham_paths(&g, None).unwrap().is_empty());
    }

    #[test]
    fn guards_fail_loudly() {
        let g = SimpleGraph::new(12);
        assert_eq!(
            brute_ham_paths(&g, None),
            Err(OracleError::GuardExceeded { n: 12, guard: 11 })
        );
        assert!(brute_ham_paths_with_guard(&g, None, 12).is_ok());
        assert_eq!(
            brute_ham_paths(&k(3), Some(7)),
            Err(OracleError::StartOutOfRange { vertex: 7, n: 3 })
        );
    }

    #[test]
    fn path_cover_examples() {
        let fig = SkewTable::from_grid(&[&[1, 1, 0, 0], &[0, 2, 2, 1], &[0, 0, 1, 0]]);
        assert_eq!(brute_path_cover(&fig.expand_complement()).unwrap(), 2);
        assert_eq!(brute_path_cover(&SimpleGraph::new(4)).unwrap(), 4);
        // any graph with a Hamiltonian path has cover number 1
        let p5 = SimpleGraph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(brute_path_cover(&p5).unwrap(), 1);
        assert_eq!(brute_path_cover(&SimpleGraph::new(0)).unwrap(), 0);
    }

    #[test]
    fn longest_path_examples() {
        let p5 = SimpleGraph::with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(brute_longest_path(&p5).unwrap(), 4);
        assert_eq!(brute_longest_path(&SimpleGraph::new(3)).unwrap(), 0);
        let fig = SkewTable::from_grid(&[&[1, 1, 0, 0], &[0, 2, 2, 1], &[0, 0, 1, 0]]);
        assert_eq!(brute_longest_path(&fig.expand_complement()).unwrap(), 6);
    }

    #[test]
    fn l21_examples() {
        assert_eq!(brute_l21(&k(3)).unwrap(), 4);
        assert_eq!(brute_l21(&SimpleGraph::new(1)).unwrap(), 0);
        let fig = SkewTable::from_grid(&[&[1, 1, 0, 0], &[0, 2, 2, 1], &[0, 0, 1, 0]]);
        assert_eq!(brute_l21(&fig.expand_line_graph()).unwrap(), 8);
        // C4: classic span 4... verify against an independent hand check:
        // labels 0,2,4 won't do for 4 vertices pairwise within distance 2.
        let c4 = SimpleGraph::with_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(brute_l21(&c4).unwrap(), 4);
    }

    #[test]
    fn table_enumeration_counts() {
        // 1x1 tables with at most 3 vertices: counts 0..=3
        let t = enumerate_tables(1, 1, 3);
        assert_eq!(t.len(), 4);
        // 2x2 with at most 2: C(2+4,4)=15 weak compositions
        let t = enumerate_tables(2, 2, 2)
            .into_iter()
            .filter(|t| t.rows() == 2 && t.cols() == 2)
            .count();
        assert_eq!(t, 15);
    }
}
