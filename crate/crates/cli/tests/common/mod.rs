//! Invocations shared by the golden-file test and the acceptance run.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static str,
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "hit_plus12_formula.json",
        args: "hit --family plus12 --N 3 --p 1/2 --start 0 --target 1 --method formula",
        code: 0,
    },
    Case {
        name: "hit_pm1_all_targets.csv",
        args: "hit --family pm1 --n 2 --p 1/2 --start 0 --all-targets --method oracle --format csv",
        code: 0,
    },
    Case {
        name: "hit_plus12_unreachable.txt",
        args: "hit --family plus12 --N 4 --p 0/1 --start 0 --target 1",
        code: 2,
    },
    Case {
        name: "hit_plus12base_baseline.csv",
        args: "hit --family plus12base --N 5 --start 0 --all-targets --method formula --format csv",
        code: 0,
    },
    Case {
        name: "verify_pm1_factor.json",
        args: "verify --check pm1-factor --n 2..4 --p 1/2,1/3,3/7",
        code: 0,
    },
    Case {
        name: "verify_baseline_jacobsthal.json",
        args: "verify --check baseline-jacobsthal --N 5",
        code: 3,
    },
    Case {
        name: "verify_residual_plus12.json",
        args: "verify --check residual --family plus12 --N 3..8 --p 1/4",
        code: 0,
    },
    Case {
        name: "kirchhoff_pm1_formula.csv",
        args: "kirchhoff --family pm1 --n 2 --p 1/2 --method formula --format csv",
        code: 0,
    },
    Case {
        name: "simulate_pm1.json",
        args: "simulate --family pm1 --n 2 --p 1/2 --start 0 --target 2 --trials 100000 --seed 42",
        code: 0,
    },
    Case {
        name: "inverse_r2n_inv.json",
        args: "inverse --matrix r2n-inv --n 2 --p 1/3 --format json",
        code: 0,
    },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn invoke(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cayht"))
        .args(args.split_whitespace())
        .env_remove("CAYHT_THREADS")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Runs every case; returns one message per case that differs from its
/// golden file or exits with the wrong code.
pub fn golden_failures() -> Vec<String> {
    let mut failures = Vec::new();
    for case in CASES {
        let (code, stdout, stderr) = invoke(case.args);
        if code != case.code {
            failures.push(format!("{}: exit {code}, wanted {}", case.name, case.code));
            continue;
        }
        let want = std::fs::read_to_string(golden_dir().join(case.name)).unwrap_or_default();
        if stdout + &stderr != want {
            failures.push(format!("{}: output differs from golden file", case.name));
        }
    }
    failures
}
