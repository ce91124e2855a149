//! Criterion benchmarks for `schubhess`; see `benches/`.
