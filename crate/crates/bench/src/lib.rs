//! Benchmark-only crate; see `benches/ordinal_ops.rs`.
