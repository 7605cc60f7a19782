//! JSON formats and the command-line front end for `wbideg-core`.

pub mod cli;
pub mod json;

pub use cli::{run, Outcome};
