//! Orbifold Donaldson–Thomas vertices and pyramid partitions.
//!
//! The crate computes the `Z2×Z2` and `Zn` topological vertices with at most one
//! leg, pyramid-partition generating functions and their restricted variants,
//! each by three routes: direct enumeration, vertex-operator transfer on the
//! partition basis, and closed-form products of MacMahon functions. All
//! arithmetic is exact over truncated multivariate series.

pub mod cli;
pub mod error;
pub mod fock;
pub mod group;
pub mod partition;
pub mod pyramid;
pub mod qseries;
pub mod rpc;
pub mod vertex;

pub use error::{Error, Result};
pub use partition::{Cell, InterlaceKind, InterlaceTag, Partition, Sign};
pub use qseries::{Monomial, Series};
