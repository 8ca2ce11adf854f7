//! Criterion benchmarks for torsionkit; see `benches/`.
