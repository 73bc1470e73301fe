//! Criterion benchmarks for `lspace-core`; see `benches/invariants.rs`.
//!
//! ```text
//! cargo bench -p lspace-bench
//! ```
