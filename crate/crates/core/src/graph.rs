//! The four circulant graph families, their Laplacians, Laplacian minors and
//! transition matrices.
//!
//! Vertices are the residues `0..size`; vertex `v` is row/column `v + 1` of
//! every matrix produced here.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{format_rational, int, DenseMatrix, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    /// Undirected `Cay(Z_2n, {±1})`: edge `{2k, 2k+1}` has weight `p`, edge
    /// `{2k+1, 2k+2}` weight `q`.
    Pm1Alt { n: usize, p: Rational, q: Rational },
    /// Directed `Cay(Z_N, {+1, +2})`: `i -> i+1` has weight `p`, `i -> i+2`
    /// weight `q`.
    Plus12 {
        order: usize,
        p: Rational,
        q: Rational,
    },
    /// Undirected `Cay(Z_N, {±1, ±2})`, unit weights.
    Pm1Pm2Unweighted { order: usize },
    /// Directed `Cay(Z_N, {+1, +2})`, unit weights.
    Plus12Unweighted { order: usize },
}

impl GraphFamily {
    pub fn pm1_alt(n: usize, p: Rational, q: Rational) -> Result<Self> {
        let f = GraphFamily::Pm1Alt { n, p, q };
        f.validate()?;
        Ok(f)
    }

    pub fn plus12(order: usize, p: Rational, q: Rational) -> Result<Self> {
        let f = GraphFamily::Plus12 { order, p, q };
        f.validate()?;
        Ok(f)
    }

    pub fn pm1pm2(order: usize) -> Result<Self> {
        let f = GraphFamily::Pm1Pm2Unweighted { order };
        f.validate()?;
        Ok(f)
    }

    pub fn plus12_unweighted(order: usize) -> Result<Self> {
        let f = GraphFamily::Plus12Unweighted { order };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let (min, size) = match self {
            GraphFamily::Pm1Alt { n, .. } => (2, *n),
            GraphFamily::Plus12 { order, .. } => (3, *order),
            GraphFamily::Pm1Pm2Unweighted { order } => (5, *order),
            GraphFamily::Plus12Unweighted { order } => (3, *order),
        };
        if size < min {
            return Err(Error::InvalidParameter(format!(
                "{} needs size parameter >= {min}, got {size}",
                self.tag()
            )));
        }
        let (p, q) = self.weights();
        if p.is_negative() || q.is_negative() || (p.clone() + q.clone()).is_zero() {
            return Err(Error::InvalidParameter(format!(
                "weights must satisfy p >= 0, q >= 0, p + q > 0 (got p = {}, q = {})",
                format_rational(&p),
                format_rational(&q)
            )));
        }
        Ok(())
    }

    /// Short name used on the command line and in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            GraphFamily::Pm1Alt { .. } => "pm1",
            GraphFamily::Plus12 { .. } => "plus12",
            GraphFamily::Pm1Pm2Unweighted { .. } => "pm1pm2",
            GraphFamily::Plus12Unweighted { .. } => "plus12base",
        }
    }

    /// `n` for [`GraphFamily::Pm1Alt`], `N` otherwise.
    pub fn size_param(&self) -> usize {
        match self {
            GraphFamily::Pm1Alt { n, .. } => *n,
            GraphFamily::Plus12 { order, .. }
            | GraphFamily::Pm1Pm2Unweighted { order }
            | GraphFamily::Plus12Unweighted { order } => *order,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            GraphFamily::Pm1Alt { n, .. } => 2 * n,
            _ => self.size_param(),
        }
    }

    /// `(p, q)`; `(1, 1)` for the unweighted families.
    pub fn weights(&self) -> (Rational, Rational) {
        match self {
            GraphFamily::Pm1Alt { p, q, .. } | GraphFamily::Plus12 { p, q, .. } => {
                (p.clone(), q.clone())
            }
            _ => (int(1), int(1)),
        }
    }

    /// `p / (p + q)`; transition probabilities depend on nothing else.
    pub fn normalized_p(&self) -> Rational {
        let (p, q) = self.weights();
        p.clone() / (p + q)
    }

    /// Smallest rotation `v -> v + s` that is a graph automorphism.
    pub fn shift_period(&self) -> usize {
        match self {
            GraphFamily::Pm1Alt { .. } => 2,
            _ => 1,
        }
    }
}

/// Explicit weight matrix `w(u, v) >= 0` with positive out-weight at every
/// vertex. This is the oracle's view of a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph {
    weights: DenseMatrix,
}

impl WeightedDigraph {
    pub fn new(weights: DenseMatrix) -> Result<Self> {
        if !weights.is_square() || weights.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "weight matrix must be square and nonempty, got {}x{}",
                weights.rows(),
                weights.cols()
            )));
        }
        if weights.entries().iter().any(Signed::is_negative) {
            return Err(Error::InvalidParameter("negative edge weight".into()));
        }
        let g = WeightedDigraph { weights };
        if let Some(u) = (0..g.vertex_count()).find(|&u| g.out_weight(u).is_zero()) {
            return Err(Error::Degenerate(format!("vertex {u} has zero out-weight")));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.rows()
    }

    /// `w(u, v)` for 0-based vertices.
    pub fn weight(&self, u: usize, v: usize) -> &Rational {
        self.weights.get(u + 1, v + 1)
    }

    pub fn weights(&self) -> &DenseMatrix {
        &self.weights
    }

    /// `W(u) = sum_v w(u, v)`.
    pub fn out_weight(&self, u: usize) -> Rational {
        self.weights.row(u + 1).iter().sum()
    }

    /// Out-neighbours of `u` with their (positive) weights.
    pub fn successors(&self, u: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.weights
            .row(u + 1)
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.weights == self.weights.transpose()
    }

    /// Every weight multiplied by `c > 0`.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidParameter(
                "scale factor must be positive".into(),
            ));
        }
        WeightedDigraph::new(self.weights.scaled(c))
    }

    /// Same vertex set, every edge reversed. May fail if some vertex has no
    /// incoming edge.
    pub fn reversed(&self) -> Result<Self> {
        WeightedDigraph::new(self.weights.transpose())
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(Error::InvalidParameter(
                "relabeling is not a permutation".into(),
            ));
        }
        let mut w = DenseMatrix::zeros(n, n);
        for u in 0..n {
            for v in 0..n {
                w.set(perm[u] + 1, perm[v] + 1, self.weight(u, v).clone());
            }
        }
        WeightedDigraph::new(w)
    }
}

pub fn build_graph(family: &GraphFamily) -> Result<WeightedDigraph> {
    family.validate()?;
    let size = family.vertex_count();
    let mut w: DenseMatrix = DenseMatrix::zeros(size, size);
    let mut add = |u: usize, v: usize, x: &Rational| {
        let (i, j) = (u % size + 1, v % size + 1);
        let cur = w.get(i, j).clone();
        w.set(i, j, cur + x);
    };
    match family {
        GraphFamily::Pm1Alt { p, q, .. } => {
            for i in 0..size {
                let x = if i % 2 == 0 { p } else { q };
                add(i, i + 1, x);
                add(i + 1, i, x);
            }
        }
        GraphFamily::Plus12 { p, q, .. } => {
            for i in 0..size {
                add(i, i + 1, p);
                add(i, i + 2, q);
            }
        }
        GraphFamily::Pm1Pm2Unweighted { .. } => {
            let one = Rational::one();
            for i in 0..size {
                for s in [1, 2, size - 1, size - 2] {
                    add(i, i + s, &one);
                }
            }
        }
        GraphFamily::Plus12Unweighted { .. } => {
            let one = Rational::one();
            for i in 0..size {
                add(i, i + 1, &one);
                add(i, i + 2, &one);
            }
        }
    }
    WeightedDigraph::new(w)
}

/// `L(i,i) = W(i)`, `L(i,j) = -w(i,j)` off the diagonal.
pub fn laplacian(g: &WeightedDigraph) -> DenseMatrix {
    let n = g.vertex_count();
    DenseMatrix::from_fn(n, n, |i, j| {
        if i == j {
            g.out_weight(i - 1) - g.weight(i - 1, i - 1)
        } else {
            -g.weight(i - 1, j - 1).clone()
        }
    })
}

fn check_minor_size(m: &DenseMatrix) -> Result<()> {
    if !m.is_square() || m.rows() < 2 {
        return Err(Error::DimensionMismatch(format!(
            "minor needs a square matrix of size >= 2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Deletes the first row and column (`L'`).
pub fn minor_drop_first(m: &DenseMatrix) -> Result<DenseMatrix> {
    check_minor_size(m)?;
    Ok(m.without_row_col(1))
}

/// Deletes the last row and column (`L''`).
pub fn minor_drop_last(m: &DenseMatrix) -> Result<DenseMatrix> {
    check_minor_size(m)?;
    Ok(m.without_row_col(m.rows()))
}

/// Row-stochastic `P(u, v) = w(u, v) / W(u)`.
pub fn transition_matrix(g: &WeightedDigraph) -> DenseMatrix {
    let n = g.vertex_count();
    let totals: Vec<Rational> = (0..n).map(|u| g.out_weight(u)).collect();
    DenseMatrix::from_fn(n, n, |i, j| {
        g.weight(i - 1, j - 1).clone() / totals[i - 1].clone()
    })
}

/// Vertices reachable from `start` along positive-weight directed paths
/// (including `start`).
pub fn reachable_set(g: &WeightedDigraph, start: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for (v, _) in g.successors(u) {
            if seen.insert(v) {
                stack.push(v);
            }
        }
    }
    seen
}

/// Vertices from which `target` is reachable (including `target`).
pub fn co_reachable_set(g: &WeightedDigraph, target: usize) -> BTreeSet<usize> {
    let n = g.vertex_count();
    let mut seen = BTreeSet::from([target]);
    let mut stack = vec![target];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if !g.weight(u, v).is_zero() && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen
}
