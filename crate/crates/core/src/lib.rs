//! Graph potentials of trivalent colored graphs, their critical values, and
//! motivic classes of rank-two moduli of stable bundles on curves.

pub mod critical;
pub mod gaussian;
pub mod graphs;
pub mod grothendieck;
pub mod laurent;
pub mod matrix;
pub mod measures;
pub mod newton;
pub mod potential;

pub use gaussian::GaussianRational;
pub use graphs::{ColoredGraph, Edge, GraphError, Matching};
pub use laurent::{ExponentVector, LaurentError, LaurentPoly, MonomialMap};
pub use matrix::ExactMatrix;
pub use potential::{Coordinates, PotentialBundle, PotentialError};
