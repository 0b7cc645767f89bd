//! Scramble number, carton number and their neighboring invariants
//! (treewidth, screewidth, gonality, vertex congestion) for desk-scale
//! multigraphs.
//!
//! Values that cannot be computed exactly are reported as certified
//! intervals; every exact solver is guarded by a [`Budget`] cap.

pub mod approx;
pub mod budget;
pub mod chipfiring;
pub mod corpus;
pub mod count;
pub mod error;
pub mod graph;
pub mod scramble;
pub mod search;
pub mod vset;
pub mod width;

pub use budget::Budget;
pub use count::Count;
pub use error::{Error, Result};
pub use graph::{Family, MultiGraph};
pub use scramble::{make_scramble, OrderReport, Scramble};
pub use vset::VertexSet;
