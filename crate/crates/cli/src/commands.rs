use std::fmt;

use cayht_core::audit::{full_audit, jobs, run_jobs, Check, Errata};
use cayht_core::decomposition::{
    build_ln, build_pn, build_r2n, build_u2n, build_un, h2n_inverse_closed, hn_inverse_closed,
    ln_inverse_closed, r2n_inverse_closed, un_inverse_closed,
};
use cayht_core::graph::build_graph;
use cayht_core::hitting::{
    build_h_plus12, build_h_pm1, hitting_time, ht_plus12, ht_plus12_baseline, ht_pm1,
    ht_pm1pm2_baseline, solve_plus12_system, solve_pm1_system,
};
use cayht_core::montecarlo::{simulate_hit, SimConfig};
use cayht_core::numerics::{format_rational, int, invert, parse_rational, rat};
use cayht_core::resistance::{
    kf_plus12_closed, kf_plus12_closed_sum, kf_plus12_proof_penultimate, kf_pm1_closed,
    kirchhoff_by_symmetry,
};
use cayht_core::{DenseMatrix, Error, GraphFamily, Rational, SimStats, WeightedDigraph};
use serde_json::{json, Map, Value};

use crate::args::{
    Command, Family, GraphArgs, HitArgs, HitMethod, InverseArgs, KfMethod, KirchhoffArgs,
    MatrixFormat, SimulateArgs, VerifyArgs,
};
use crate::record::{render, to_json, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_degenerate() => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;
type PerTarget<'a, T> = Box<dyn Fn(usize) -> T + 'a>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Text for stdout plus the process exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn dispatch(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Hit(a) => hit(&a),
        Command::Verify(a) => verify(&a),
        Command::Kirchhoff(a) => kirchhoff(&a),
        Command::Simulate(a) => simulate(&a),
        Command::Inverse(a) => inverse(&a),
    }
}

fn parse_p(s: &str) -> CliResult<Rational> {
    Ok(parse_rational(s)?)
}

fn family_of(args: &GraphArgs) -> CliResult<GraphFamily> {
    let size = match (args.family, args.half, args.order) {
        (_, Some(_), Some(_)) => return usage("give only one of --n and --N"),
        (Family::Pm1, Some(n), None) => n,
        (Family::Pm1, _, _) => return usage("family pm1 takes its size from --n"),
        (_, None, Some(order)) => order,
        (f, _, _) => return usage(format!("family {} takes its size from --N", tag(f))),
    };
    let weights = || -> CliResult<(Rational, Rational)> {
        let p = match &args.p {
            Some(p) => parse_p(p)?,
            None => return usage(format!("family {} needs --p", tag(args.family))),
        };
        let q = match &args.q {
            Some(q) => parse_p(q)?,
            None => int(1) - &p,
        };
        Ok((p, q))
    };
    let unweighted = || {
        if args.p.is_some() || args.q.is_some() {
            return usage(format!(
                "family {} is unweighted; drop --p/--q",
                tag(args.family)
            ));
        }
        Ok(())
    };
    let family = match args.family {
        Family::Pm1 => {
            let (p, q) = weights()?;
            GraphFamily::pm1_alt(size, p, q)?
        }
        Family::Plus12 => {
            let (p, q) = weights()?;
            GraphFamily::plus12(size, p, q)?
        }
        Family::Pm1pm2 => {
            unweighted()?;
            GraphFamily::pm1pm2(size)?
        }
        Family::Plus12base => {
            unweighted()?;
            GraphFamily::plus12_unweighted(size)?
        }
    };
    Ok(family)
}

fn tag(f: Family) -> &'static str {
    match f {
        Family::Pm1 => "pm1",
        Family::Plus12 => "plus12",
        Family::Pm1pm2 => "pm1pm2",
        Family::Plus12base => "plus12base",
    }
}

fn check_vertex(g: &WeightedDigraph, name: &str, v: usize) -> CliResult<()> {
    if v >= g.vertex_count() {
        return usage(format!("--{name} {v} outside 0..{}", g.vertex_count()));
    }
    Ok(())
}

fn stats_extra(s: &SimStats) -> Map<String, Value> {
    match serde_json::to_value(s).expect("serializable") {
        Value::Object(m) => m,
        _ => unreachable!("stats serialize as an object"),
    }
}

fn simulate_record(
    family: &GraphFamily,
    g: &WeightedDigraph,
    start: usize,
    target: usize,
    trials: u64,
    seed: u64,
    cap: Option<u64>,
) -> CliResult<OutputRecord> {
    let mut cfg = SimConfig::new(g.clone(), start, target, trials, seed)?;
    if let Some(cap) = cap {
        cfg = cfg.with_step_cap(cap);
    }
    let stats = simulate_hit(&cfg)?;
    Ok(OutputRecord::new(
        family,
        Some(start),
        Some(target),
        "simulate",
        &stats.exact_mean(),
    )
    .with_extra(stats_extra(&stats)))
}

fn hit(a: &HitArgs) -> CliResult<Outcome> {
    let family = family_of(&a.graph)?;
    let g = build_graph(&family)?;
    check_vertex(&g, "start", a.start)?;
    let targets: Vec<usize> = match a.target {
        Some(t) => {
            check_vertex(&g, "target", t)?;
            vec![t]
        }
        None => (0..g.vertex_count()).filter(|&t| t != a.start).collect(),
    };
    let size = family.size_param();
    let p = family.normalized_p();
    let s = a.start;
    let mut records = Vec::with_capacity(targets.len());
    match a.method {
        HitMethod::Simulate => {
            for &t in &targets {
                records.push(simulate_record(&family, &g, s, t, a.trials, a.seed, None)?);
            }
        }
        HitMethod::Oracle => {
            for &t in &targets {
                let v = hitting_time(&g, s, t)?;
                records.push(OutputRecord::new(&family, Some(s), Some(t), "oracle", &v));
            }
        }
        HitMethod::Formula => {
            let n = g.vertex_count();
            let (label, value): (&str, PerTarget<cayht_core::Result<Rational>>) = match family {
                GraphFamily::Pm1Alt { .. } => ("formula", Box::new(|t| ht_pm1(size, &p, s, t))),
                GraphFamily::Plus12 { .. } => ("formula", Box::new(|t| ht_plus12(size, &p, s, t))),
                GraphFamily::Pm1Pm2Unweighted { .. } => (
                    "baseline",
                    Box::new(move |t| ht_pm1pm2_baseline(size, (t + n - s) % n)),
                ),
                GraphFamily::Plus12Unweighted { .. } => (
                    "baseline",
                    Box::new(move |t| ht_plus12_baseline(size, (t + n - s) % n)),
                ),
            };
            for &t in &targets {
                let v = if t == s {
                    Rational::default()
                } else {
                    value(t)?
                };
                records.push(OutputRecord::new(&family, Some(s), Some(t), label, &v));
            }
        }
        HitMethod::Solve => {
            let n = g.vertex_count();
            let lookup: PerTarget<Rational> = match family {
                GraphFamily::Pm1Alt { .. } => {
                    let sol = solve_pm1_system(size, &p)?;
                    let map = cayht_core::IndexMap2n::new(size)?;
                    Box::new(move |t| match map.position_of_vertices(s, t) {
                        Some(i) => sol[i - 1].clone(),
                        None => Rational::default(),
                    })
                }
                GraphFamily::Plus12 { .. } | GraphFamily::Plus12Unweighted { .. } => {
                    let sol = solve_plus12_system(size, &p)?;
                    Box::new(move |t| match (t + n - s) % n {
                        0 => Rational::default(),
                        l => sol[l - 1].clone(),
                    })
                }
                GraphFamily::Pm1Pm2Unweighted { .. } => {
                    return usage("method solve has no structured system for pm1pm2; use oracle")
                }
            };
            for &t in &targets {
                records.push(OutputRecord::new(
                    &family,
                    Some(s),
                    Some(t),
                    "solve",
                    &lookup(t),
                ));
            }
        }
    }
    Ok(Outcome::ok(render(&records, a.format)))
}

/// `"a..b"` (inclusive), `"a,b,c"` or `"a"`.
fn parse_sizes(s: &str) -> CliResult<Vec<usize>> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad size {x:?}")))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
        if lo > hi {
            return usage(format!("empty range {s:?}"));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(num).collect()
}

fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let errata: Errata = if a.all {
        full_audit()?
    } else {
        let name = a
            .check
            .as_deref()
            .expect("clap requires --check without --all");
        let check = match (name, a.family) {
            ("residual", Some(Family::Pm1)) => Check::ResidualPm1,
            ("residual", Some(Family::Plus12)) => Check::ResidualPlus12,
            ("residual", _) => return usage("check residual needs --family pm1 or plus12"),
            _ => name
                .parse::<Check>()
                .map_err(|_| CliError::Usage(format!("unknown check {name:?}")))?,
        };
        let sizes = match (&a.half, &a.order) {
            (Some(_), Some(_)) => return usage("give only one of --n and --N"),
            (Some(s), None) | (None, Some(s)) => parse_sizes(s)?,
            (None, None) => check.default_sizes(),
        };
        if let Some(&bad) = sizes.iter().find(|&&s| s < check.min_size()) {
            return usage(format!(
                "check {check} needs size >= {}, got {bad}",
                check.min_size()
            ));
        }
        let ps = match &a.p {
            Some(list) => list
                .split(',')
                .map(|x| parse_p(x.trim()))
                .collect::<CliResult<Vec<_>>>()?,
            None => cayht_core::audit::default_p_grid(),
        };
        run_jobs(&jobs(check, &sizes, &ps))?
    };
    let text = to_json(&errata);
    if let Some(path) = &a.report {
        std::fs::write(path, &text)?;
    }
    let code = if errata.is_clean() {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    };
    Ok(Outcome { stdout: text, code })
}

fn kirchhoff(a: &KirchhoffArgs) -> CliResult<Outcome> {
    let family = family_of(&a.graph)?;
    let size = family.size_param();
    let (p, q) = family.weights();
    let scale = p + q;
    let record = match a.method {
        KfMethod::Oracle => OutputRecord::new(
            &family,
            None,
            None,
            "oracle",
            &kirchhoff_by_symmetry(&family)?,
        ),
        KfMethod::Formula => {
            let np = family.normalized_p();
            match family {
                GraphFamily::Pm1Alt { .. } => {
                    let v = kf_pm1_closed(size, &np)? / &scale;
                    OutputRecord::new(&family, None, None, "formula", &v)
                }
                GraphFamily::Plus12 { .. } => {
                    let v = kf_plus12_closed(size, &np)? / &scale;
                    let sum = kf_plus12_closed_sum(size, &np)? / &scale;
                    let pen = kf_plus12_proof_penultimate(size, &np)? / &scale;
                    let mut extra = Map::new();
                    extra.insert("closedSum".into(), json!(format_rational(&sum)));
                    extra.insert("proofPenultimate".into(), json!(format_rational(&pen)));
                    OutputRecord::new(&family, None, None, "formula", &v).with_extra(extra)
                }
                _ => {
                    return usage(format!(
                        "no closed form for the Kirchhoff index of {}; use --method oracle",
                        family.tag()
                    ))
                }
            }
        }
    };
    Ok(Outcome::ok(render(&[record], a.format)))
}

fn simulate(a: &SimulateArgs) -> CliResult<Outcome> {
    let family = family_of(&a.graph)?;
    let g = build_graph(&family)?;
    check_vertex(&g, "start", a.start)?;
    check_vertex(&g, "target", a.target)?;
    let r = simulate_record(&family, &g, a.start, a.target, a.trials, a.seed, a.step_cap)?;
    Ok(Outcome::ok(render(&[r], a.format)))
}

fn inverse(a: &InverseArgs) -> CliResult<Outcome> {
    let name = a.matrix.as_str();
    let pm1_side = matches!(name, "h-pm1" | "u2n" | "r2n" | "r2n-inv" | "h2n-inv");
    let size = match (pm1_side, a.half, a.order) {
        (true, Some(n), None) => n,
        (false, None, Some(n)) => n,
        (true, _, _) => return usage(format!("matrix {name} takes its size from --n")),
        (false, _, _) => return usage(format!("matrix {name} takes its size from --N")),
    };
    let p = match (name, &a.p) {
        ("u2n" | "pn", _) => None,
        (_, Some(p)) => Some(parse_p(p)?),
        (_, None) => return usage(format!("matrix {name} needs --p")),
    };
    let pv = || p.clone().unwrap_or_else(|| rat(1, 2));
    let m: DenseMatrix = match name {
        "h-pm1" => build_h_pm1(size, &pv())?.0,
        "u2n" => build_u2n(size)?,
        "r2n" => build_r2n(size, &pv())?,
        "r2n-inv" => r2n_inverse_closed(size, &pv())?,
        "h2n-inv" => h2n_inverse_closed(size, &pv())?,
        "h-plus12" => build_h_plus12(size, &pv())?,
        "pn" => build_pn(size)?,
        "ln" => build_ln(size, &pv())?,
        "ln-inv" => ln_inverse_closed(size, &pv())?,
        "un" => build_un(size, &pv())?,
        "un-inv" => un_inverse_closed(size, &pv())?,
        "hn-inv" => hn_inverse_closed(size, &pv())?,
        other => return usage(format!("unknown matrix {other:?}")),
    };
    let m = if a.numeric_inverse { invert(&m)? } else { m };
    let cells: Vec<Vec<String>> = (1..=m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect();
    let text = match a.format {
        MatrixFormat::Json => to_json(&json!({
            "matrix": name,
            "sizeParam": size,
            "p": p.as_ref().map(format_rational),
            "numericInverse": a.numeric_inverse,
            "rows": m.rows(),
            "cols": m.cols(),
            "entries": cells,
        })),
        MatrixFormat::Csv => cells.iter().map(|r| r.join(",") + "\n").collect(),
    };
    Ok(Outcome::ok(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_ranges() {
        assert_eq!(parse_sizes("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_sizes("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_sizes("5").unwrap(), vec![5]);
        assert_eq!(parse_sizes("3,7").unwrap(), vec![3, 7]);
        assert!(parse_sizes("4..2").is_err());
        assert!(parse_sizes("x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_USAGE);
        let e = Error::Unreachable {
            target: 1,
            starts: vec![0],
        };
        assert_eq!(CliError::Core(e).exit_code(), EXIT_DEGENERATE);
        assert_eq!(
            CliError::Core(Error::Parse("x".into())).exit_code(),
            EXIT_USAGE
        );
    }
}
