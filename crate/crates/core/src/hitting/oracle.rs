use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{co_reachable_set, reachable_set, WeightedDigraph};
use crate::numerics::{compare, gauss_solve, DenseMatrix, DiscrepancyReport, Rational};

/// Hitting times `h(u, target)` into one target, indexed by start vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct HittingVector {
    pub target: usize,
    pub times: Vec<Rational>,
}

impl HittingVector {
    /// `h(start, target)`.
    pub fn time_from(&self, start: usize) -> &Rational {
        &self.times[start]
    }
}

/// Solves `W(u) h(u) - sum_{v != t} w(u, v) h(v) = W(u)` over `u` in `vertices`
/// (which must be closed under successors apart from the target).
fn first_step_solve(
    g: &WeightedDigraph,
    vertices: &[usize],
    target: usize,
) -> Result<Vec<Rational>> {
    let n = g.vertex_count();
    let mut slot = vec![usize::MAX; n];
    for (k, &u) in vertices.iter().enumerate() {
        slot[u] = k;
    }
    let m = vertices.len();
    let mut a = DenseMatrix::zeros(m, m);
    let mut b = Vec::with_capacity(m);
    for (k, &u) in vertices.iter().enumerate() {
        let total = g.out_weight(u);
        a.set(k + 1, k + 1, total.clone());
        for (v, w) in g.successors(u) {
            if v != target {
                let cur = a.get(k + 1, slot[v] + 1).clone();
                a.set(k + 1, slot[v] + 1, cur - w);
            }
        }
        b.push(total);
    }
    gauss_solve(&a, &b)
}

/// Exact first-step solve for every start vertex.
pub fn oracle_hitting(g: &WeightedDigraph, target: usize) -> Result<HittingVector> {
    let n = g.vertex_count();
    if target >= n {
        return Err(Error::InvalidParameter(format!(
            "target {target} outside 0..{n}"
        )));
    }
    let reach = co_reachable_set(g, target);
    if reach.len() < n {
        let starts = (0..n).filter(|u| !reach.contains(u)).collect();
        return Err(Error::Unreachable { target, starts });
    }
    let vertices: Vec<usize> = (0..n).filter(|&u| u != target).collect();
    let x = first_step_solve(g, &vertices, target)?;
    let mut times = vec![Rational::zero(); n];
    for (u, h) in vertices.into_iter().zip(x) {
        times[u] = h;
    }
    Ok(HittingVector { target, times })
}

/// `h(start, target)` alone. Only the part of the graph reachable from
/// `start` has to reach `target`.
pub fn hitting_time(g: &WeightedDigraph, start: usize, target: usize) -> Result<Rational> {
    let n = g.vertex_count();
    if start >= n || target >= n {
        return Err(Error::InvalidParameter(format!(
            "vertices ({start}, {target}) outside 0..{n}"
        )));
    }
    if start == target {
        return Ok(Rational::zero());
    }
    let ahead = reachable_set(g, start);
    let back = co_reachable_set(g, target);
    let stuck: Vec<usize> = ahead
        .iter()
        .copied()
        .filter(|u| !back.contains(u))
        .collect();
    if !stuck.is_empty() {
        return Err(Error::Unreachable {
            target,
            starts: stuck,
        });
    }
    let vertices: Vec<usize> = ahead.into_iter().filter(|&u| u != target).collect();
    let x = first_step_solve(g, &vertices, target)?;
    let k = vertices.iter().position(|&u| u == start).unwrap();
    Ok(x[k].clone())
}

/// Audits `h(u) = 1 + sum_v P(u, v) h(v)` for `u != target` and `h(target) = 0`.
/// Row `i` of the report is vertex `i - 1`.
pub fn first_step_residual(g: &WeightedDigraph, h: &HittingVector) -> Result<DiscrepancyReport> {
    let n = g.vertex_count();
    if h.times.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "hitting vector of length {} for a graph on {n} vertices",
            h.times.len()
        )));
    }
    let residual = DenseMatrix::column(
        (0..n)
            .map(|u| {
                if u == h.target {
                    return h.times[u].clone();
                }
                let step: Rational = g
                    .successors(u)
                    .map(|(v, w)| w * &h.times[v])
                    .sum::<Rational>()
                    / g.out_weight(u);
                &h.times[u] - Rational::one() - step
            })
            .collect(),
    );
    let zero = DenseMatrix::zeros(n, 1);
    Ok(compare(&residual, &zero, &Rational::zero())?.with_context("first-step residual"))
}
