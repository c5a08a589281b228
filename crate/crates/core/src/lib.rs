//! Exact characteristic-class calculus for complex projective manifolds.
//!
//! The crate computes Chern, Pontrjagin and Stiefel-Whitney classes and
//! numbers, Hodge and lattice invariants, and Riemann-Roch data with exact
//! rational arithmetic, and replays topological obstruction arguments as
//! checkable deduction traces.
//!
//! ```
//! use charclass::chern::{chern_numbers, complete_intersection};
//!
//! let cubic = complete_intersection(5, &[3], 1).unwrap();
//! let numbers = chern_numbers(&cubic).unwrap();
//! assert_eq!(numbers.get(&[4]).to_string(), "27");
//! ```

pub mod algebra;
pub mod catalog;
pub mod chern;
pub mod cli;
pub mod deduce;
pub mod error;
pub mod exact;
pub mod genus;
pub mod hodge;
pub mod schubert;
pub mod symmetric;

pub use error::{Error, Result};
pub use exact::Rational;
