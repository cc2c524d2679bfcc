//! Benchmark-only crate; see `benches/kernels.rs`.

pub use cyclic_sieve;
