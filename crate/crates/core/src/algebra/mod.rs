//! Exact scalar arithmetic.
//!
//! Every matrix in this crate is built over one of three commutative rings:
//! the integers, the Gaussian integers and integer polynomials in a single
//! indeterminate `t`. The [`Ring`] trait is the contract the determinant
//! engines are written against; [`RingValue`] is its dynamically tagged
//! counterpart used where the scalar domain is only known at run time.

mod gaussian;
mod poly;
mod sequences;
mod value;

pub use gaussian::GaussianInt;
pub use poly::{ParsePolyError, Poly};
pub use sequences::{fib, lucas};
pub use value::{Ring, RingValue, ScalarTag};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("scalar tag mismatch: {left} vs {right}")]
    TagMismatch { left: ScalarTag, right: ScalarTag },
}
