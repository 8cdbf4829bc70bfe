//! Exact combinatorics of quasi-BPS categories for symmetric quivers.
//!
//! The crate counts dominant lattice points in the zonotope `W(d)` spanned by
//! the weights of the representation space, computes the partition sets
//! `S^d_δ` cut out by the integrality invariant `ε`, enumerates score
//! sequences of one-vertex loop quivers, and assembles total dimensions of
//! BPS cohomology from per-block data. All predicates are decided with
//! arbitrary-precision rationals.
//!
//! Coordinates: the slots `(i, a)` with `1 ≤ a ≤ d^i` are flattened in
//! vertex-major order. A weight is dominant when its coefficients are
//! nondecreasing inside every vertex block; a cocharacter is antidominant
//! when its values are nonincreasing inside every block.

pub mod bps;
mod error;
pub mod magic;
pub mod oracle;
pub mod par;
pub mod partitions;
pub mod quiver;
pub mod simplex;
pub mod verify;
pub mod weights;
pub mod zonotope;

pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use quiver::{DimVector, Quiver, WeightMultiset};
pub use weights::{CentralWeight, Cocharacter, RationalVector, Weight};
pub use zonotope::{MembershipMode, Zonotope};

/// Default cutoff on `d̄` for lattice counting.
pub const COUNT_CUTOFF: usize = 12;
/// Default cutoff on `d̄` for vector-partition enumeration.
pub const PARTITION_CUTOFF: usize = 20;
/// Default cutoff on the ambient dimension of the indicator membership test.
pub const INDICATOR_CUTOFF: usize = 16;
