//! Criterion benchmarks for `grquot-core` live in `benches/`.
