//! Mean and population standard deviation over `f64` slices.
//!
//! All kernels accumulate strictly left to right in plain `f64` arithmetic,
//! with no pairwise or compensated summation. The C-ABI exports and the
//! Python extension call these exact functions, so results agree bit for bit
//! across binding paths.

use crate::error::EmptyBufferError;

/// Sequential sum. An empty slice sums to `+0.0`; NaN propagates.
pub fn sum(values: &[f64]) -> f64 {
    // Not `Iterator::sum`, whose float impl starts from -0.0.
    let mut total = 0.0;
    for &v in values {
        total += v;
    }
    total
}

/// `sum / len`. Returns NaN for an empty slice.
pub fn mean_unchecked(values: &[f64]) -> f64 {
    sum(values) / values.len() as f64
}

/// Two-pass population standard deviation (denominator `len`). Returns NaN
/// for an empty slice.
pub fn stddev_unchecked(values: &[f64]) -> f64 {
    let m = mean_unchecked(values);
    let mut squared_sum = 0.0;
    for &v in values {
        let shifted = v - m;
        squared_sum += shifted * shifted;
    }
    libm::sqrt(squared_sum / values.len() as f64)
}

pub fn mean(values: &[f64]) -> Result<f64, EmptyBufferError> {
    if values.is_empty() {
        return Err(EmptyBufferError);
    }
    Ok(mean_unchecked(values))
}

pub fn stddev(values: &[f64]) -> Result<f64, EmptyBufferError> {
    if values.is_empty() {
        return Err(EmptyBufferError);
    }
    Ok(stddev_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_small_cases() {
        assert_eq!(sum(&[]), 0.0);
        assert!(sum(&[]).is_sign_positive());
        assert_eq!(sum(&[1.0, 2.0, 3.0]), 6.0);
        assert!(sum(&[1.0, f64::NAN, 3.0]).is_nan());
    }

    #[test]
    fn sum_is_left_to_right() {
        // (1e16 + 1) + 1 rounds twice; a compensated sum would give 1e16 + 2.
        assert_eq!(sum(&[1e16, 1.0, 1.0]), 1e16);
        assert_eq!(sum(&[1.0, 1.0, 1e16]), 1e16 + 2.0);
    }

    #[test]
    fn mean_small_cases() {
        assert_eq!(mean(&[2.0, 2.0, 2.0]), Ok(2.0));
        assert_eq!(mean(&[1.0, 2.0, 3.0]), Ok(2.0));
        assert_eq!(mean(&[]), Err(EmptyBufferError));
        assert!(mean_unchecked(&[]).is_nan());
    }

    #[test]
    fn stddev_small_cases() {
        assert_eq!(stddev(&[5.0, 5.0, 5.0, 5.0]), Ok(0.0));
        let sd = stddev(&[1.0, 2.0, 3.0]).unwrap();
        assert!((sd - 0.816496580927726).abs() <= 1e-15);
        assert_eq!(stddev(&[]), Err(EmptyBufferError));
        assert!(stddev_unchecked(&[]).is_nan());
    }

    #[test]
    fn singleton() {
        for x in [0.0, -3.25, 1e300, 5e-324] {
            assert_eq!(mean(&[x]), Ok(x));
            assert_eq!(stddev(&[x]), Ok(0.0));
        }
    }

    #[test]
    fn nan_propagates() {
        assert!(mean_unchecked(&[1.0, f64::NAN]).is_nan());
        assert!(stddev_unchecked(&[f64::NAN, 1.0]).is_nan());
    }
}
