//! Chip-firing on finite connected multigraphs: divisors, Dhar burning,
//! q-reduction, Baker–Norine rank, and exact searches for gonality and
//! multiplicity-free gonality.

pub mod catalog;
pub mod divisor;
pub mod error;
pub mod families;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod rank;
pub mod reduction;
pub mod repro;
pub mod search;
pub mod subsets;

pub use divisor::Divisor;
pub use error::{Error, Result};
pub use graph::{Multigraph, VertexSet};
