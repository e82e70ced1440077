//! Algorithms for λ-labelings and L(2,1)-colorings of line graphs of
//! bipartite multigraphs.
//!
//! A bipartite multigraph `H` is encoded as a *skew table*: a `p × q` grid
//! whose `(i, j)` entry counts the parallel edges between the `i`-th left
//! vertex and the `j`-th right vertex. The entries double as vertex counts
//! for the complement of the line graph `L(H)`: put that many vertices in
//! each box and join two vertices exactly when their boxes share neither a
//! row nor a column. Hamiltonian paths and minimum path covers of that
//! complement translate directly into λ-labelings and L(2,1)-colorings of
//! `L(H)`, which is what this crate computes:
//!
//! * [`table`] — the tabular data model: vertices, adjacency, tallies,
//!   pattern classification and connectivity.
//! * [`toughness`] — pathwise toughness, tough vertices, the deficit,
//!   the path covering number π and the maximum path length ℓ.
//! * [`hamilton`] — construction and enumeration of Hamiltonian paths by
//!   tough-vertex descent, minimum path covers, and position-constrained
//!   search over skew tables.
//! * [`labeling`] — turning paths and covers into labelings, the L(2,1)
//!   span, and λ-rectangle generation.
//! * [`graph`] / [`solver`] — arbitrary simple graphs: complements,
//!   position- and gap-constrained Hamiltonian path search, and extension
//!   of partial λ-labelings.
//! * [`oracle`] — independent brute-force references used by the test
//!   suites and the `oracle` CLI subcommand.

pub mod graph;
pub mod hamilton;
pub mod labeling;
pub mod oracle;
pub mod solver;
pub mod table;
pub mod toughness;

pub use graph::SimpleGraph;
pub use hamilton::{HamPath, PathCover};
pub use labeling::{Labeling, LambdaRectangle};
pub use table::{BoxVertex, PatternClass, SkewTable, Tallies};
pub use toughness::{Deficit, DeficitTerm, ToughnessReport};
