//! Exact construction and determinant evaluation for Fibonacci–Hessenberg
//! matrix families, their Lorentz products, and an audit engine that checks
//! closed-form determinant formulas against computed values.

pub mod algebra;
pub mod claims;
pub mod determinant;
pub mod matrix;
pub mod oeis;

pub use algebra::{fib, lucas, GaussianInt, Integer, Poly, Ring, RingValue, ScalarTag};
pub use determinant::{
    cofactor_det, det_of_lorentz_product, hessenberg_det, hessenberg_leading_dets, DetEngine,
    DetError,
};
pub use matrix::{
    build_a, build_b, build_family, build_product, build_substituted, AnyMatrix, Family, FamilyId,
    MatrixError, ProductPair, SquareMatrix, SubstitutionMode,
};
