//! Command-line front end for the `flexbeam-core` numerical library:
//! configuration parsing, subcommand dispatch, and deterministic CSV output
//! for spectra, mode tables, certification reports, trajectories, and
//! parameter sweeps.

pub mod commands;
pub mod config;
pub mod io;
