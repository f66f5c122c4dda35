//! Exact computation of lower bounds for the number of real solutions of
//! osculating Schubert problems.
//!
//! The bound for a problem `(λ^(1), ..., λ^(k); ν)` in `Gr(n, d)` with `c`
//! complex conjugate pairs of points is the absolute value of one coefficient
//! of an explicit symmetric polynomial times the Vandermonde determinant. The
//! crate computes it with exact integer arithmetic and checks it against
//! independent combinatorial rules.
//!
//! ```
//! use oscbound::bounds::lower_bound_a;
//! use oscbound::partitions::{Partition, SchubertProblem};
//!
//! let problem = SchubertProblem::vector(9, Partition::empty(), 3, 6, 2);
//! let report = lower_bound_a(&problem).unwrap();
//! assert_eq!(report.lower_bound, 2.into());
//! assert_eq!(report.complex_count, 42.into());
//! ```

pub mod bounds;
pub mod characters;
pub mod partitions;
pub mod poly;
pub mod symfunc;

pub use bounds::{lower_bound_a, signature_q, BoundReport, BoundsError};
pub use characters::{character_value, CharacterValue, ProductClass};
pub use partitions::{Partition, SchubertProblem};
pub use poly::{ExponentVector, SparsePoly};
pub use symfunc::CycleType;
