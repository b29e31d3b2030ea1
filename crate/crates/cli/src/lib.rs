//! Library half of the command-line front end: logic-definition files, the
//! claims manifest and its executor, and shared output helpers. The binary
//! in `main.rs` is a thin dispatcher over this.

pub mod config;
pub mod manifest;
pub mod output;
pub mod registry;
