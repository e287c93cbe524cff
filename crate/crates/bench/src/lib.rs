//! Criterion benchmarks for the exact solvers; see `benches/solvers.rs`.
