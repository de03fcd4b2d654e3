//! Criterion benchmarks for the geometry kernel, the Farey engine and the
//! move engine live under `benches/`.
