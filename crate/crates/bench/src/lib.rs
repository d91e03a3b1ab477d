//! Criterion benchmarks for kasner-core; see `benches/`.
