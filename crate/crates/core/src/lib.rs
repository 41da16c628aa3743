//! Exact combinatorics for splitting the square of a complete homogeneous
//! or elementary symmetric function into its symmetric and anti-symmetric
//! parts.
//!
//! The library decomposes `s_2[h_λ]`, `s_11[h_λ]`, `s_2[e_λ]` and
//! `s_11[e_λ]` into Schur functions by counting semistandard tableaux of
//! content `λ²` weighted by a sign statistic built from jeu de taquin
//! rectification of two-letter subtableaux of RSK recording tableaux.
//! Every count can be cross-checked against two independent routes:
//!
//! * an exact symmetric-function engine ([`symfunc`]) that computes the
//!   same plethysms through power sums and expands them in the Schur
//!   basis with arbitrary-precision rational arithmetic, and
//! * the Yamanouchi domino tableau construction ([`domino`]) for the
//!   one-row and one-column cases.
//!
//! All arithmetic is exact; none of the public operations use floating
//! point. All value types are immutable after construction and safe to
//! share across threads.

pub mod domino;
pub mod error;
pub mod jdt;
pub mod partition;
pub mod rsk;
pub mod sign;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use tableau::{SkewShape, Tableau, TableauTuple, TupleKind};
