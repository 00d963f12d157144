//! Library side of the command-line front end: file formats, reports and
//! the verification suite. The binary in `main.rs` is a thin dispatcher
//! over these pieces.

pub mod formats;
pub mod report;
pub mod suite;
