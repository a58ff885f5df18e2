//! Std companion to `convolvium-core`: report serialization, a timed and
//! optionally parallel sweep runner, and the `convolvium` command line.

pub mod cli;
pub mod format;
pub mod runner;
