//! Python extension module `ffistats_native`.
//!
//! * `mean(values)` and `stddev(values)` convert the whole Python sequence to
//!   `f64` on every call.
//! * `Array(values)` converts once at construction; `Array.mean()` and
//!   `Array.stddev()` then run the kernels on the owned copy.
//!
//! Python ints are widened to float by the argument conversion; anything
//! non-numeric raises `TypeError`, and an empty sequence raises `ValueError`.

use ffibench_core::{EmptyBufferError, Float64Buffer, kernels};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

/// Name the module is imported under.
pub const MODULE_NAME: &str = "ffistats_native";

fn empty_error(_: EmptyBufferError) -> PyErr {
    PyValueError::new_err("cannot compute statistics of an empty sequence")
}

/// Arithmetic mean of a sequence of numbers.
#[pyfunction]
fn mean(values: Vec<f64>) -> PyResult<f64> {
    kernels::mean(&values).map_err(empty_error)
}

/// Population standard deviation of a sequence of numbers.
#[pyfunction]
fn stddev(values: Vec<f64>) -> PyResult<f64> {
    kernels::stddev(&values).map_err(empty_error)
}

/// Immutable float64 array converted once from a Python sequence.
#[pyclass(frozen, module = "ffistats_native")]
pub struct Array(Float64Buffer);

#[pymethods]
impl Array {
    #[new]
    fn new(values: Vec<f64>) -> PyResult<Self> {
        if values.is_empty() {
            return Err(empty_error(EmptyBufferError));
        }
        Ok(Self(Float64Buffer::new(values)))
    }

    fn mean(&self) -> f64 {
        kernels::mean_unchecked(&self.0)
    }

    fn stddev(&self) -> f64 {
        kernels::stddev_unchecked(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pymodule]
pub fn ffistats_native(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(mean, m)?)?;
    m.add_function(wrap_pyfunction!(stddev, m)?)?;
    m.add_class::<Array>()?;
    Ok(())
}
