//! Benchmark-only crate; see `benches/multimysticum.rs`.
