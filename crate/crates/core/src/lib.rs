//! Ordered Ramsey graphs.
//!
//! An ordered graph has a fixed linear order on its vertices, and a copy of
//! a pattern must respect that order. A graph `F` arrows `(H, H')` if every
//! red/blue coloring of its edges contains a red copy of `H` or a blue copy
//! of `H'`. This crate decides the arrow relation by pruned search, builds
//! explicit Ramsey graphs and refuting colorings for several families of
//! forests and caterpillars, and classifies pairs as Ramsey finite or
//! infinite where a characterization is known.

pub mod arrow;
pub mod classify;
pub mod coloring;
pub mod construct;
pub mod density;
pub mod embed;
pub mod graph;
pub mod obstruct;
pub mod random;
pub mod refute;
pub mod search;
pub mod structure;

pub use arrow::{arrows, ArrowCertificate, ArrowError, ArrowVerdict};
pub use coloring::{Color, EdgeColoring};
pub use graph::{GraphError, OrderedGraph, Vertex};
pub use search::SearchOptions;
