//! Seeded simulation of the walk, reproducible for any thread schedule.
//!
//! Trial `t` draws from ChaCha8 keyed by the master seed on stream `t`.
//! Each step compares a uniform `u64` against integer thresholds
//! `ceil(C_k / W * 2^64)` built from the exact cumulative weights `C_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{co_reachable_set, reachable_set, WeightedDigraph};
use crate::numerics::Rational;

pub const DEFAULT_STEP_CAP: u64 = 1 << 40;

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub graph: WeightedDigraph,
    pub start: usize,
    pub target: usize,
    pub trials: u64,
    pub master_seed: u64,
    pub step_cap: u64,
}

impl SimConfig {
    /// Checks vertex ranges, `trials >= 1`, and that every vertex the walk can
    /// visit still reaches the target.
    pub fn new(
        graph: WeightedDigraph,
        start: usize,
        target: usize,
        trials: u64,
        master_seed: u64,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        if start >= n || target >= n {
            return Err(Error::InvalidParameter(format!(
                "vertices ({start}, {target}) outside 0..{n}"
            )));
        }
        if trials == 0 {
            return Err(Error::InvalidParameter("need at least one trial".into()));
        }
        let back = co_reachable_set(&graph, target);
        let stuck: Vec<usize> = reachable_set(&graph, start)
            .into_iter()
            .filter(|u| !back.contains(u))
            .collect();
        if !stuck.is_empty() {
            return Err(Error::Unreachable {
                target,
                starts: stuck,
            });
        }
        Ok(SimConfig {
            graph,
            start,
            target,
            trials,
            master_seed,
            step_cap: DEFAULT_STEP_CAP,
        })
    }

    pub fn with_step_cap(mut self, cap: u64) -> Self {
        self.step_cap = cap;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SimStats {
    pub trials: u64,
    pub mean_steps: f64,
    pub sample_variance: f64,
    pub standard_error: f64,
    pub min_steps: u64,
    pub max_steps: u64,
    pub seed: u64,
    /// Exact sum of step counts over all trials.
    #[serde(skip)]
    pub total_steps: u128,
    /// Exact sum of squared step counts.
    #[serde(skip)]
    pub total_squares: u128,
}

impl SimStats {
    /// `total_steps / trials` as an exact fraction.
    pub fn exact_mean(&self) -> Rational {
        Rational::new(BigInt::from(self.total_steps), BigInt::from(self.trials))
    }

    /// Unbiased sample variance as an exact fraction (zero for one trial).
    pub fn exact_variance(&self) -> Rational {
        if self.trials < 2 {
            return Rational::zero();
        }
        let n = BigInt::from(self.trials);
        let s = BigInt::from(self.total_steps);
        let sq = BigInt::from(self.total_squares);
        Rational::new(&n * sq - &s * &s, &n * (&n - 1))
    }
}

/// Per-vertex successor lists with cumulative thresholds on `[0, 2^64]`.
struct Sampler {
    choices: Vec<Vec<(usize, u128)>>,
}

impl Sampler {
    fn new(g: &WeightedDigraph) -> Self {
        let scale = BigInt::from(1u128 << 64);
        let choices = (0..g.vertex_count())
            .map(|u| {
                let total = g.out_weight(u);
                let mut acc = Rational::zero();
                g.successors(u)
                    .map(|(v, w)| {
                        acc += w;
                        let frac = &acc / &total;
                        let t = (frac.numer() * &scale).div_ceil(frac.denom());
                        (v, t.to_u128().expect("threshold fits in 65 bits"))
                    })
                    .collect()
            })
            .collect();
        Sampler { choices }
    }

    fn step(&self, u: usize, draw: u64) -> usize {
        let r = u128::from(draw);
        self.choices[u]
            .iter()
            .find(|&&(_, t)| r < t)
            .map(|&(v, _)| v)
            .expect("last threshold is 2^64")
    }
}

fn run_trial(cfg: &SimConfig, sampler: &Sampler, trial: u64) -> Result<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.master_seed);
    rng.set_stream(trial);
    let (mut v, mut steps) = (cfg.start, 0u64);
    while v != cfg.target {
        if steps == cfg.step_cap {
            return Err(Error::StepCapExceeded {
                cap: cfg.step_cap,
                trial,
            });
        }
        v = sampler.step(v, rng.next_u64());
        steps += 1;
    }
    Ok(steps)
}

#[derive(Clone, Copy)]
struct Acc {
    sum: u128,
    squares: u128,
    min: u64,
    max: u64,
}

impl Acc {
    const EMPTY: Acc = Acc {
        sum: 0,
        squares: 0,
        min: u64::MAX,
        max: 0,
    };

    fn push(self, x: u64) -> Acc {
        let x128 = u128::from(x);
        Acc {
            sum: self.sum + x128,
            squares: self.squares + x128 * x128,
            min: self.min.min(x),
            max: self.max.max(x),
        }
    }

    fn merge(self, o: Acc) -> Acc {
        Acc {
            sum: self.sum + o.sum,
            squares: self.squares + o.squares,
            min: self.min.min(o.min),
            max: self.max.max(o.max),
        }
    }
}

pub fn simulate_hit(cfg: &SimConfig) -> Result<SimStats> {
    let sampler = Sampler::new(&cfg.graph);
    let acc = (0..cfg.trials)
        .into_par_iter()
        .try_fold(
            || Acc::EMPTY,
            |acc, t| run_trial(cfg, &sampler, t).map(|x| acc.push(x)),
        )
        .try_reduce(|| Acc::EMPTY, |a, b| Ok(a.merge(b)))?;
    let mut stats = SimStats {
        trials: cfg.trials,
        mean_steps: 0.0,
        sample_variance: 0.0,
        standard_error: 0.0,
        min_steps: acc.min,
        max_steps: acc.max,
        seed: cfg.master_seed,
        total_steps: acc.sum,
        total_squares: acc.squares,
    };
    stats.mean_steps = stats.exact_mean().to_f64().unwrap_or(f64::NAN);
    stats.sample_variance = stats.exact_variance().to_f64().unwrap_or(f64::NAN);
    stats.standard_error = (stats.sample_variance / cfg.trials as f64).sqrt();
    Ok(stats)
}
