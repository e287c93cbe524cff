//! Exact average hitting times, effective resistances and Kirchhoff indices
//! for weighted random walks on the circulant Cayley graphs
//! `Cay(Z_2n, {±1})` (alternating weights) and `Cay(Z_N, {+1, +2})`.
//!
//! Every closed-form expression in this crate is checked against a
//! first-step linear-solve oracle in exact rational arithmetic, and, as a
//! third opinion, against a seeded Monte Carlo simulation of the walk.
//! Mismatches are never silently corrected; they are surfaced as
//! [`DiscrepancyReport`]s.
//!
//! Module map:
//!
//! * [`numerics`]: rationals, dense matrices, exact elimination, comparison.
//! * [`graph`]: the four graph families, Laplacians, minors, transitions.
//! * [`hitting`]: oracle solves, structured systems, closed forms, baselines.
//! * [`decomposition`]: structured factors of the coefficient matrices and
//!   their printed inverses.
//! * [`resistance`]: effective resistance and Kirchhoff indices.
//! * [`montecarlo`]: reproducible simulation of the walks.
//! * [`audit`]: grid runners that turn all of the above into errata reports.

#![forbid(unsafe_code)]

pub mod audit;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod hitting;
pub mod montecarlo;
pub mod numerics;
pub mod resistance;

pub use error::{Error, Result};
pub use graph::{GraphFamily, WeightedDigraph};
pub use hitting::{HittingVector, IndexMap2n};
pub use montecarlo::{SimConfig, SimStats};
pub use numerics::{
    compare, gauss_solve, invert, mat_mul, DenseMatrix, Discrepancy, DiscrepancyReport, Rational,
    Scalar,
};
pub use resistance::ResistanceValue;
