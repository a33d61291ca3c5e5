//! Library surface of the theta-toolkit CLI: graph-source parsing,
//! report writers, and the reproduction suites. The binary in `main.rs`
//! is a thin dispatcher over these.

pub mod output;
pub mod source;
pub mod suites;
