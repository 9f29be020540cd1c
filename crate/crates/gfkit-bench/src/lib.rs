//! Host crate for the criterion benchmarks in benches/: field arithmetic
//! and Galois operations in field_ops.rs, modular integer routines in
//! zmod_ops.rs. Run with `cargo bench -p gfkit-bench`.
