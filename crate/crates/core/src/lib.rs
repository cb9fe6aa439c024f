//! Exact and certified tools for the 3-graph Turán problem of the family `M`:
//! constructions, membership tests, Lagrangians, symmetrization, exhaustive
//! search and feasible-region points.

pub mod bits;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod family_m;
pub mod hypergraph;
pub mod lagrangian;
pub mod region;
pub mod search;
pub mod symmetrize;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{BlowupSpec, EdgeSet, Hypergraph, SimplexPoint, VertexMap};

/// Exact rational arithmetic used wherever a value must be reported exactly.
pub type Rational = num_rational::Ratio<i128>;

pub fn rational_to_f64(x: &Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
