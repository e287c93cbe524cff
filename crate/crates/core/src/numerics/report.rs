use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::matrix::{DenseMatrix, Scalar};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Detailed entries kept per report; `total_mismatches` keeps counting past it.
pub const REPORT_CAP: usize = 100;

/// One entrywise mismatch at 1-based position `(i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy<T = Rational> {
    pub i: usize,
    pub j: usize,
    pub expected: T,
    pub actual: T,
}

/// Outcome of an entrywise audit. Empty exactly when the audited identity
/// holds.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscrepancyReport<T = Rational> {
    pub context: String,
    pub entries: Vec<Discrepancy<T>>,
    pub truncated: bool,
    pub total_mismatches: usize,
}

impl<T: Scalar> DiscrepancyReport<T> {
    pub fn new(context: impl Into<String>) -> Self {
        DiscrepancyReport {
            context: context.into(),
            entries: Vec::new(),
            truncated: false,
            total_mismatches: 0,
        }
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        self.context = context.into();
        self
    }

    pub fn record(&mut self, i: usize, j: usize, expected: T, actual: T) {
        self.total_mismatches += 1;
        if self.entries.len() < REPORT_CAP {
            self.entries.push(Discrepancy {
                i,
                j,
                expected,
                actual,
            });
        } else {
            self.truncated = true;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total_mismatches == 0
    }
}

/// Reports every `(i, j)` with `|actual(i,j) - expected(i,j)| > tol`.
/// Use `tol = 0` in the rational field.
pub fn compare<T: Scalar>(
    actual: &DenseMatrix<T>,
    expected: &DenseMatrix<T>,
    tol: &T,
) -> Result<DiscrepancyReport<T>> {
    if actual.rows() != expected.rows() || actual.cols() != expected.cols() {
        return Err(Error::DimensionMismatch(format!(
            "comparing {}x{} with {}x{}",
            actual.rows(),
            actual.cols(),
            expected.rows(),
            expected.cols()
        )));
    }
    let mut report = DiscrepancyReport::new("");
    for ((i, j, a), e) in actual.iter_indexed().zip(expected.entries()) {
        if (a.clone() - e.clone()).abs() > *tol {
            report.record(i, j, e.clone(), a.clone());
        }
    }
    Ok(report)
}

impl<T: Scalar> Serialize for Discrepancy<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Discrepancy", 4)?;
        s.serialize_field("i", &self.i)?;
        s.serialize_field("j", &self.j)?;
        s.serialize_field("expected", &self.expected.render())?;
        s.serialize_field("actual", &self.actual.render())?;
        s.end()
    }
}

impl<T: Scalar> Serialize for DiscrepancyReport<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DiscrepancyReport", 4)?;
        s.serialize_field("context", &self.context)?;
        s.serialize_field("totalMismatches", &self.total_mismatches)?;
        s.serialize_field("truncated", &self.truncated)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}
