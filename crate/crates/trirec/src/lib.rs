//! Command line, JSON file formats and benchmarks built on [`trirec_core`].

pub mod bench;
pub mod cli;
pub mod eval;
pub mod report;
pub mod spec;

pub use trirec_core;
