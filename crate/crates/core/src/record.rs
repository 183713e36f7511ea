//! Timing records emitted by the benchmark driver.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::ParseError;

/// How a binding converts the sample into native form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    /// Conversion happens inside every call.
    InSitu,
    /// Conversion happens once, before the timed region.
    Preconverted,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::InSitu, Strategy::Preconverted];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::InSitu => "in_situ",
            Strategy::Preconverted => "preconverted",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "in_situ" => Ok(Strategy::InSitu),
            "preconverted" => Ok(Strategy::Preconverted),
            other => Err(ParseError::Strategy(other.to_string())),
        }
    }
}

/// The benchmarked kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Function {
    Mean,
    Stddev,
}

impl Function {
    pub const ALL: [Function; 2] = [Function::Mean, Function::Stddev];

    pub fn as_str(self) -> &'static str {
        match self {
            Function::Mean => "mean",
            Function::Stddev => "stddev",
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Function {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mean" => Ok(Function::Mean),
            "stddev" => Ok(Function::Stddev),
            other => Err(ParseError::Function(other.to_string())),
        }
    }
}

/// Base-2 logarithm of a chunk size, e.g. `10.5` for chunks of 1448 elements.
///
/// Always finite and non-negative, which makes the total order below agree
/// with the numeric one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChunkExponent(f64);

impl ChunkExponent {
    pub fn new(exponent: f64) -> Result<Self, ParseError> {
        if exponent.is_finite() && exponent >= 0.0 {
            // Normalise -0.0 so equal exponents compare equal under total_cmp.
            Ok(Self(exponent + 0.0))
        } else {
            Err(ParseError::ChunkExponent(exponent))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `round(2^e)`, halves rounding away from zero.
    pub fn chunk_size(self) -> u64 {
        libm::round(libm::pow(2.0, self.0)) as u64
    }

    /// Number of calls needed to cover `sample_length` elements, counting a
    /// trailing partial chunk.
    pub fn calls_for(self, sample_length: u64) -> u64 {
        sample_length.div_ceil(self.chunk_size().max(1))
    }
}

impl Eq for ChunkExponent {}

impl PartialOrd for ChunkExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChunkExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for ChunkExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.1}", self.0)
    }
}

/// One timed measurement: the summed duration of `n_calls` foreign calls.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingRecord {
    pub adapter: String,
    pub strategy: Strategy,
    pub function: Function,
    pub sample_id: String,
    pub run_id: u32,
    /// `None` for serial runs.
    pub chunk_exponent: Option<ChunkExponent>,
    pub n_calls: u64,
    pub total_ns: u64,
}

impl TimingRecord {
    pub fn group_key(&self) -> GroupKey {
        GroupKey {
            adapter: self.adapter.clone(),
            strategy: self.strategy,
            function: self.function,
            chunk_exponent: self.chunk_exponent,
        }
    }
}

/// Records sharing a key are repetitions of the same measurement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupKey {
    pub adapter: String,
    pub strategy: Strategy,
    pub function: Function,
    pub chunk_exponent: Option<ChunkExponent>,
}
