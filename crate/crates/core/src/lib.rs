//! Statistics kernels and benchmark analysis shared by every binding path.
//!
//! The crate is `no_std` and only needs `alloc`. It holds:
//!
//! * the mean and population standard deviation kernels ([`kernels`]) that
//!   the C-ABI exports and the Python extension wrap,
//! * the timing-record model produced by the benchmark driver ([`record`]),
//! * per-group aggregation, floor subtraction and the least-squares fit that
//!   turns chunked timings into per-call and base overhead estimates
//!   ([`aggregate`], [`overhead`], [`regression`]).
//!
//! Anything touching files, CSV or rendering lives in the `ffibench` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod aggregate;
pub mod buffer;
mod error;
pub mod kernels;
pub mod overhead;
pub mod record;
pub mod regression;

pub use aggregate::{AggregateStat, AggregateWarning, Aggregation, aggregate};
pub use buffer::Float64Buffer;
pub use error::{AnalysisError, EmptyBufferError, ParseError, RegressionError};
pub use overhead::{FloorRule, OverheadPoint, OverheadSeries, overhead_series};
pub use record::{ChunkExponent, Function, GroupKey, Strategy, TimingRecord};
pub use regression::{RegressionResult, ols_fit};
