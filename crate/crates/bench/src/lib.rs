//! Benchmarks for raag-core live in `benches/`.
