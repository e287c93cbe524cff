//! Exact rational arithmetic and the small amount of dense linear algebra the
//! verification paths need.
//!
//! Matrices are generic over [`Scalar`]; the rational instantiation is the
//! default and the only one used for verification. The `f64` instantiation
//! exists for timing comparisons on larger instances.

mod matrix;
mod rational;
mod report;
mod solve;

pub use matrix::{mat_mul, mat_mul3, mat_vec, DenseMatrix, Scalar};
pub use rational::{format_rational, int, parse_rational, powi, rat, to_decimal_string, Rational};
pub use report::{compare, Discrepancy, DiscrepancyReport, REPORT_CAP};
pub use solve::{determinant, gauss_solve, invert};
