//! File formats, rendering and parallel suite runs on top of `domtab-core`,
//! plus the `domtab` command-line front end.

pub mod cli;
pub mod format;
pub mod harness;

pub use domtab_core as core;
