//! File formats and the command-line front end for `dets2-core`.

pub mod cli;
pub mod config_file;
pub mod svg;

pub use cli::{run, Backend};
