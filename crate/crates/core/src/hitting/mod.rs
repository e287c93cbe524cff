//! Average hitting times: the first-step oracle, the structured linear
//! systems of the two weighted families, their closed forms, and the
//! Fibonacci/Jacobsthal baselines for the unweighted graphs.

pub mod baseline;
pub mod oracle;
pub mod plus12;
pub mod pm1;

pub use baseline::{
    fibonacci, ht_plus12_baseline, ht_pm1pm2_baseline, jacobsthal, jacobsthal_closed,
};
pub use oracle::{first_step_residual, hitting_time, oracle_hitting, HittingVector};
pub use plus12::{build_h_plus12, ht_plus12, ht_plus12_closed, solve_plus12_system};
pub use pm1::{
    build_h_pm1, h_vector_closed, hprime_closed, ht_pm1, ht_pm1_closed, ht_pm1_prefix,
    solve_pm1_system, IndexMap2n,
};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Checks `0 < p < 1`, the range of every closed form on the ±1 cycle.
pub(crate) fn require_open_unit(p: &Rational) -> Result<()> {
    if !p.is_positive() || *p >= Rational::one() {
        return Err(Error::Degenerate(format!(
            "closed form needs 0 < p < 1, got p = {p}"
        )));
    }
    Ok(())
}

/// Checks `0 <= p <= 1`.
pub(crate) fn require_closed_unit(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= p <= 1, got p = {p}"
        )));
    }
    Ok(())
}

pub(crate) fn require_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::InvalidParameter(format!(
            "{name} = {value} outside {lo}..={hi}"
        )));
    }
    Ok(())
}
