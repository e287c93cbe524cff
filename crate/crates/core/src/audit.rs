//! Named verification checks over parameter grids, and the consolidated
//! errata report they produce.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{
    build_ln, build_r2n, build_un, h2n_inverse_closed, hn_inverse_closed, ln_inverse_closed,
    r2n_inverse_closed, un_inverse_closed, verify_plus12_lu, verify_pm1_decomposition,
};
use crate::error::{Error, Result};
use crate::graph::{build_graph, GraphFamily};
use crate::hitting::{
    build_h_plus12, build_h_pm1, h_vector_closed, hitting_time, hprime_closed, ht_plus12_baseline,
    ht_plus12_closed, ht_pm1_closed, ht_pm1pm2_baseline, solve_pm1_system,
};
use crate::numerics::{
    compare, format_rational, int, invert, mat_mul, rat, DenseMatrix, DiscrepancyReport, Rational,
};
use crate::resistance::{
    kf_plus12_closed, kf_plus12_closed_sum, kf_plus12_proof_penultimate, kf_pm1_closed,
    kirchhoff_from_hitting,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `U^{-1} R tU^{-1}` against the ±1 block system.
    Pm1Factor,
    /// `P L U` against the +1/+2 system.
    Plus12Lu,
    /// Block system times the printed inverse table, against `I`.
    HinvPm1,
    HinvPlus12,
    /// `R` times the printed `R^{-1}` table, against `I`.
    Rinv,
    Linv,
    Uinv,
    KfPm1,
    /// Oracle, summed closed form, displayed formula and the derivation's
    /// penultimate line, side by side.
    KfPlus12,
    /// Jacobsthal expression on unweighted `Cay(Z_N, {+1, +2})` vs oracle.
    BaselineJacobsthal,
    /// Fibonacci expression on unweighted `Cay(Z_N, {±1, ±2})` vs oracle.
    BaselineFibonacci,
    /// Closed-form hitting vector plugged into the ±1 block system.
    ResidualPm1,
    ResidualPlus12,
    /// Closed-form hitting times vs oracle, every start and target.
    ClosedPm1,
    ClosedPlus12,
    /// Closed-form difference vector vs differences of the block solution.
    HprimePm1,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::Pm1Factor,
        Check::Plus12Lu,
        Check::HinvPm1,
        Check::HinvPlus12,
        Check::Rinv,
        Check::Linv,
        Check::Uinv,
        Check::KfPm1,
        Check::KfPlus12,
        Check::BaselineJacobsthal,
        Check::BaselineFibonacci,
        Check::ResidualPm1,
        Check::ResidualPlus12,
        Check::ClosedPm1,
        Check::ClosedPlus12,
        Check::HprimePm1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Pm1Factor => "pm1-factor",
            Check::Plus12Lu => "plus12-lu",
            Check::HinvPm1 => "hinv-pm1",
            Check::HinvPlus12 => "hinv-plus12",
            Check::Rinv => "rinv",
            Check::Linv => "linv",
            Check::Uinv => "uinv",
            Check::KfPm1 => "kf-pm1",
            Check::KfPlus12 => "kf-plus12",
            Check::BaselineJacobsthal => "baseline-jacobsthal",
            Check::BaselineFibonacci => "baseline-fibonacci",
            Check::ResidualPm1 => "residual-pm1",
            Check::ResidualPlus12 => "residual-plus12",
            Check::ClosedPm1 => "closed-pm1",
            Check::ClosedPlus12 => "closed-plus12",
            Check::HprimePm1 => "hprime-pm1",
        }
    }

    /// Whether the check is swept over edge weights.
    pub fn uses_p(self) -> bool {
        !matches!(self, Check::BaselineJacobsthal | Check::BaselineFibonacci)
    }

    /// Smallest size parameter the check accepts.
    pub fn min_size(self) -> usize {
        match self {
            Check::Plus12Lu | Check::HinvPlus12 | Check::Linv | Check::Uinv => 6,
            Check::BaselineFibonacci => 5,
            Check::ResidualPlus12 | Check::ClosedPlus12 | Check::KfPlus12 => 3,
            Check::BaselineJacobsthal => 3,
            _ => 2,
        }
    }

    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Check::Pm1Factor | Check::HinvPm1 | Check::Rinv | Check::ClosedPm1 => {
                (2..=10).collect()
            }
            Check::ResidualPm1 | Check::HprimePm1 => (2..=10).collect(),
            Check::KfPm1 => (2..=8).collect(),
            Check::Plus12Lu | Check::HinvPlus12 | Check::Linv | Check::Uinv => (6..=16).collect(),
            Check::KfPlus12 | Check::ResidualPlus12 | Check::ClosedPlus12 => (3..=16).collect(),
            Check::BaselineJacobsthal => (3..=10).collect(),
            Check::BaselineFibonacci => (5..=12).collect(),
        }
    }
}

/// The edge-weight grid every weighted check sweeps by default.
pub fn default_p_grid() -> Vec<Rational> {
    vec![rat(1, 2), rat(1, 3), rat(1, 4), rat(3, 7), rat(2, 5)]
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct Job {
    pub check: Check,
    pub size: usize,
    pub p: Option<Rational>,
}

/// Cartesian product of sizes and weights; weight-free checks ignore `ps`.
pub fn jobs(check: Check, sizes: &[usize], ps: &[Rational]) -> Vec<Job> {
    let mut out = Vec::new();
    for &size in sizes {
        if check.uses_p() {
            out.extend(ps.iter().map(|p| Job {
                check,
                size,
                p: Some(p.clone()),
            }));
        } else {
            out.push(Job {
                check,
                size,
                p: None,
            });
        }
    }
    out
}

/// Side-by-side values for scalar audits, rendered as `a/b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditRow {
    pub index: usize,
    pub columns: BTreeMap<String, String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub check: Check,
    pub size_param: usize,
    #[serde(serialize_with = "ser_opt_rational")]
    pub p: Option<Rational>,
    pub report: DiscrepancyReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<AuditRow>,
    /// For inverse-table audits: whether the eliminated inverse satisfies
    /// `M M^{-1} = I` exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_inverse_exact: Option<bool>,
}

fn ser_opt_rational<S: serde::Serializer>(
    p: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub checks_run: usize,
    pub checks_with_discrepancies: usize,
    pub total_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Errata {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Errata {
    pub fn is_clean(&self) -> bool {
        self.summary.checks_with_discrepancies == 0
    }
}

fn identity_report(product: &DenseMatrix, context: String) -> Result<DiscrepancyReport> {
    let id = DenseMatrix::identity(product.rows());
    Ok(compare(product, &id, &Rational::zero())?.with_context(context))
}

fn inverse_is_exact(m: &DenseMatrix) -> Result<bool> {
    let inv = invert(m)?;
    Ok(mat_mul(m, &inv)? == DenseMatrix::identity(m.rows()))
}

fn row(index: usize, columns: &[(&str, &Rational)], agrees: bool) -> AuditRow {
    AuditRow {
        index,
        columns: columns
            .iter()
            .map(|(k, v)| ((*k).to_string(), format_rational(v)))
            .collect(),
        agrees,
    }
}

fn pm1_graph(n: usize, p: &Rational) -> Result<crate::graph::WeightedDigraph> {
    build_graph(&GraphFamily::pm1_alt(n, p.clone(), int(1) - p)?)
}

fn plus12_graph(order: usize, p: &Rational) -> Result<crate::graph::WeightedDigraph> {
    build_graph(&GraphFamily::plus12(order, p.clone(), int(1) - p)?)
}

/// Runs one grid point.
pub fn run_job(job: &Job) -> Result<CheckResult> {
    let Job { check, size, .. } = *job;
    let label = match &job.p {
        Some(p) => format!("{check} size={size} p={}", format_rational(p)),
        None => format!("{check} size={size}"),
    };
    let p = || {
        job.p
            .clone()
            .ok_or_else(|| Error::InvalidParameter(format!("{check} needs p")))
    };
    let mut rows = Vec::new();
    let mut numeric_inverse_exact = None;
    let mut report = DiscrepancyReport::new(label.clone());
    match check {
        Check::Pm1Factor => report = verify_pm1_decomposition(size, &p()?)?,
        Check::Plus12Lu => report = verify_plus12_lu(size, &p()?)?,
        Check::HinvPm1 => {
            let p = p()?;
            let (h, _) = build_h_pm1(size, &p)?;
            report = identity_report(&mat_mul(&h, &h2n_inverse_closed(size, &p)?)?, label)?;
            numeric_inverse_exact = Some(inverse_is_exact(&h)?);
        }
        Check::HinvPlus12 => {
            let p = p()?;
            let h = build_h_plus12(size, &p)?;
            report = identity_report(&mat_mul(&h, &hn_inverse_closed(size, &p)?)?, label)?;
            numeric_inverse_exact = Some(inverse_is_exact(&h)?);
        }
        Check::Rinv => {
            let p = p()?;
            let r = build_r2n(size, &p)?;
            report = identity_report(&mat_mul(&r, &r2n_inverse_closed(size, &p)?)?, label)?;
            numeric_inverse_exact = Some(inverse_is_exact(&r)?);
        }
        Check::Linv => {
            let p = p()?;
            let l = build_ln(size, &p)?;
            report = identity_report(&mat_mul(&l, &ln_inverse_closed(size, &p)?)?, label)?;
        }
        Check::Uinv => {
            let p = p()?;
            let u = build_un(size, &p)?;
            report = identity_report(&mat_mul(&u, &un_inverse_closed(size, &p)?)?, label)?;
        }
        Check::KfPm1 => {
            let p = p()?;
            let oracle = kirchhoff_from_hitting(&pm1_graph(size, &p)?)?;
            let closed = kf_pm1_closed(size, &p)?;
            if closed != oracle {
                report.record(1, 1, oracle.clone(), closed.clone());
            }
            rows.push(row(
                1,
                &[("oracle", &oracle), ("closed", &closed)],
                closed == oracle,
            ));
        }
        Check::KfPlus12 => {
            let p = p()?;
            let oracle = kirchhoff_from_hitting(&plus12_graph(size, &p)?)?;
            let columns = [
                kf_plus12_closed(size, &p)?,
                kf_plus12_proof_penultimate(size, &p)?,
                kf_plus12_closed_sum(size, &p)?,
            ];
            for (j, value) in columns.iter().enumerate() {
                if *value != oracle {
                    report.record(1, j + 1, oracle.clone(), value.clone());
                }
            }
            let agrees = columns.iter().all(|v| *v == oracle);
            rows.push(row(
                1,
                &[
                    ("oracle", &oracle),
                    ("printed", &columns[0]),
                    ("proof_penultimate", &columns[1]),
                    ("closed_sum", &columns[2]),
                ],
                agrees,
            ));
        }
        Check::BaselineJacobsthal | Check::BaselineFibonacci => {
            let (g, formula): (_, fn(usize, usize) -> Result<Rational>) =
                if check == Check::BaselineJacobsthal {
                    (
                        build_graph(&GraphFamily::plus12_unweighted(size)?)?,
                        ht_plus12_baseline,
                    )
                } else {
                    (
                        build_graph(&GraphFamily::pm1pm2(size)?)?,
                        ht_pm1pm2_baseline,
                    )
                };
            for l in 1..size {
                let printed = formula(size, l)?;
                let oracle = hitting_time(&g, 0, l)?;
                if printed != oracle {
                    report.record(l, 1, oracle.clone(), printed.clone());
                }
                rows.push(row(
                    l,
                    &[("oracle", &oracle), ("printed", &printed)],
                    printed == oracle,
                ));
            }
        }
        Check::ResidualPm1 => {
            let p = p()?;
            let (h, _) = build_h_pm1(size, &p)?;
            let x = DenseMatrix::column(h_vector_closed(size, &p)?);
            let ones = DenseMatrix::column(vec![Rational::one(); h.rows()]);
            report = compare(&mat_mul(&h, &x)?, &ones, &Rational::zero())?.with_context(label);
        }
        Check::ResidualPlus12 => {
            let p = p()?;
            let h = build_h_plus12(size, &p)?;
            let x = (1..size)
                .map(|l| ht_plus12_closed(size, &p, l))
                .collect::<Result<Vec<_>>>()?;
            let ones = DenseMatrix::column(vec![Rational::one(); h.rows()]);
            report = compare(
                &mat_mul(&h, &DenseMatrix::column(x))?,
                &ones,
                &Rational::zero(),
            )?
            .with_context(label);
        }
        Check::ClosedPm1 => {
            let p = p()?;
            let g = pm1_graph(size, &p)?;
            for start in 0..2 {
                for l in 1..2 * size {
                    let target = (l + start) % (2 * size);
                    let oracle = hitting_time(&g, start, target)?;
                    let closed = ht_pm1_closed(size, &p, start, l)?;
                    if closed != oracle {
                        report.record(l, start + 1, oracle, closed);
                    }
                }
            }
        }
        Check::ClosedPlus12 => {
            let p = p()?;
            let g = plus12_graph(size, &p)?;
            for l in 1..size {
                let oracle = hitting_time(&g, 0, l)?;
                let closed = ht_plus12_closed(size, &p, l)?;
                if closed != oracle {
                    report.record(l, 1, oracle, closed);
                }
            }
        }
        Check::HprimePm1 => {
            let p = p()?;
            let h = solve_pm1_system(size, &p)?;
            for (k, x) in h.iter().enumerate() {
                let diff = if k == 0 { x.clone() } else { x - &h[k - 1] };
                let closed = hprime_closed(size, &p, k + 1)?;
                if closed != diff {
                    report.record(k + 1, 1, diff, closed);
                }
            }
        }
    }
    Ok(CheckResult {
        check,
        size_param: size,
        p: job.p.clone(),
        report,
        rows,
        numeric_inverse_exact,
    })
}

/// Runs every job (in parallel) and sorts results by check, size and `p`.
pub fn run_jobs(jobs: &[Job]) -> Result<Errata> {
    let mut results = jobs.par_iter().map(run_job).collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| (a.check, a.size_param, &a.p).cmp(&(b.check, b.size_param, &b.p)));
    let summary = Summary {
        checks_run: results.len(),
        checks_with_discrepancies: results.iter().filter(|r| !r.report.is_empty()).count(),
        total_mismatches: results.iter().map(|r| r.report.total_mismatches).sum(),
    };
    Ok(Errata { results, summary })
}

/// Every check over its default grid.
pub fn full_audit() -> Result<Errata> {
    let ps = default_p_grid();
    let all: Vec<Job> = Check::ALL
        .into_iter()
        .flat_map(|c| jobs(c, &c.default_sizes(), &ps))
        .collect();
    run_jobs(&all)
}
