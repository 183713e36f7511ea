use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::EmptyBufferError;
use crate::kernels;

/// A contiguous, owned sequence of `f64` samples.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Float64Buffer(Vec<f64>);

impl Float64Buffer {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        kernels::sum(&self.0)
    }

    pub fn mean(&self) -> Result<f64, EmptyBufferError> {
        kernels::mean(&self.0)
    }

    pub fn stddev(&self) -> Result<f64, EmptyBufferError> {
        kernels::stddev(&self.0)
    }
}

impl Deref for Float64Buffer {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for Float64Buffer {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

/// Copies the slice.
impl From<&[f64]> for Float64Buffer {
    fn from(values: &[f64]) -> Self {
        Self(values.to_vec())
    }
}

impl FromIterator<f64> for Float64Buffer {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}
