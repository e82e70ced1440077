//! Arbitrary simple graphs: the substrate of the general solver and the
//! brute-force oracles.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
}

/// Errors from parsing the graph file format ("n" line, then "u v" lines).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseGraphError {
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: malformed edge '{text}': expected 'u v'")]
    Edge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// An undirected simple graph on vertices `0..n`, without loops or
/// multi-edges. Neighbor sets are kept sorted so traversals are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complement graph: edge exactly where this graph has none.
    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("indices in range");
                }
            }
        }
        g
    }

    /// Number of connected components, by breadth-first search.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut queue = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            queue.push(s);
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push(v);
                    }
                }
            }
        }
        components
    }

    /// Parses the graph file format: a line `n`, then one `u v` pair per
    /// line (0-based). `#` comments and blank lines are allowed.
    pub fn parse(text: &str) -> Result<Self, ParseGraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(ParseGraphError::Header {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| ParseGraphError::Header {
            line: hline,
            msg: format!("'{header}' is not a vertex count"),
        })?;
        let mut g = SimpleGraph::new(n);
        for (line, text) in lines {
            let mut it = text.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(ParseGraphError::Edge {
                        line,
                        text: text.to_string(),
                    })
                }
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| ParseGraphError::Edge {
                    line,
                    text: text.to_string(),
                })
            };
            g.add_edge(parse(u)?, parse(v)?)
                .map_err(|source| ParseGraphError::Invalid { line, source })?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::with_edges(n, &edges).unwrap()
    }

    #[test]
    fn complement_examples() {
        // K3 -> edgeless
        let k3 = SimpleGraph::with_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);
        // P3 (a-b, b-c) -> single edge a-c
        let p3 = SimpleGraph::with_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);
        // C5 -> C5 (the pentagram relabeling)
        let c5 = cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!((0..5).all(|v| comp.degree(v) == 2));
        assert_eq!(comp.component_count(), 1);
    }

    #[test]
    fn components() {
        let g = SimpleGraph::with_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 3);
        assert_eq!(SimpleGraph::new(0).component_count(), 0);
    }

    #[test]
    fn parse_graph() {
        let g = SimpleGraph::parse("# triangle\n3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(SimpleGraph::parse("3\n0 0").is_err());
        assert!(SimpleGraph::parse("3\n0 9").is_err());
        assert!(SimpleGraph::parse("3\n0 1 2").is_err());
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = SimpleGraph::new(2);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }
}
