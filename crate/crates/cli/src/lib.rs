//! File formats, analysis pipeline and rendering for FFI overhead benchmarks.
//!
//! This is the std side of `ffibench-core`: it reads and writes raw sample
//! files and the driver's timing-record CSV, runs aggregation and the
//! overhead regression, and renders tables and SVG plots. The `ffibench`
//! binary is a thin command-line layer over these modules.

pub mod analysis;
mod error;
pub mod format;
pub mod plot;
pub mod records;
pub mod report;
pub mod sample;
pub mod table;

pub use error::{Error, Result};

/// Adapter whose best chunked time is subtracted from every overhead series.
pub const DEFAULT_BASELINE: &str = "reference_baseline";
