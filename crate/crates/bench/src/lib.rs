//! Criterion benchmarks for harmpack; see `benches/`.
