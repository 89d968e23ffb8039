//! Exact computation of equivariant reduced Euler characteristics of the
//! buildings of symplectic groups over finite fields.
//!
//! The crate computes the generating functions of these invariants by
//! several independent routes (closed products, exponential forms,
//! transform recurrences, partition expansions, and their p-primary
//! variants), verifies the associated polynomial identities symbolically,
//! and cross-checks everything at small sizes against a brute-force
//! group-action oracle.

pub mod algebra;
pub mod counting;
mod error;
pub mod genfun;
pub mod groups;
pub mod identities;
pub mod partitions;

pub use algebra::{BigRat, Coeff, QPoly, TruncSeries};
pub use error::{Error, Result};
