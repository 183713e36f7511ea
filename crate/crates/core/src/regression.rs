//! Ordinary least squares of overhead on call count.

use crate::error::RegressionError;

/// Fitted line `y = intercept + slope * x` with coefficient standard errors.
///
/// For overhead series, `slope` is the per-call overhead and `intercept` the
/// base overhead, both in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionResult {
    pub slope: f64,
    pub intercept: f64,
    pub slope_se: f64,
    pub intercept_se: f64,
    pub n_points: usize,
}

/// Fits `y` on `x` by least squares.
///
/// Standard errors use the residual variance with `n - 2` degrees of freedom:
/// `se(slope) = sqrt(s² / Sxx)` and `se(intercept) = se(slope) * sqrt(Σx² / n)`.
pub fn ols_fit(points: &[(f64, f64)]) -> Result<RegressionResult, RegressionError> {
    let n = points.len();
    if n < 3 {
        return Err(RegressionError::TooFewPoints(n));
    }
    if let Some(i) = points
        .iter()
        .position(|(x, y)| !x.is_finite() || !y.is_finite())
    {
        return Err(RegressionError::NonFinite(i));
    }

    let nf = n as f64;
    let (sum_x, sum_y) = points
        .iter()
        .fold((0.0, 0.0), |(sx, sy), (x, y)| (sx + x, sy + y));
    let (mean_x, mean_y) = (sum_x / nf, sum_y / nf);

    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut sum_x2 = 0.0;
    for &(x, y) in points {
        let dx = x - mean_x;
        sxx += dx * dx;
        sxy += dx * (y - mean_y);
        sum_x2 += x * x;
    }
    if sxx == 0.0 {
        return Err(RegressionError::DegenerateDesign);
    }

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;

    let mut ssr = 0.0;
    for &(x, y) in points {
        let r = y - intercept - slope * x;
        ssr += r * r;
    }
    let s2 = ssr / (nf - 2.0);
    let slope_se = libm::sqrt(s2 / sxx);
    let intercept_se = slope_se * libm::sqrt(sum_x2 / nf);

    Ok(RegressionResult {
        slope,
        intercept,
        slope_se,
        intercept_se,
        n_points: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let fit = ols_fit(&[(1.0, 3.0), (2.0, 5.0), (3.0, 7.0)]).unwrap();
        assert_eq!(fit.slope, 2.0);
        assert_eq!(fit.intercept, 1.0);
        assert_eq!(fit.slope_se, 0.0);
        assert_eq!(fit.intercept_se, 0.0);
        assert_eq!(fit.n_points, 3);
    }

    #[test]
    fn hand_evaluated_three_points() {
        // x̄ = 2, ȳ = 10/3, Sxx = 2, Sxy = 3, residuals (1/6, -1/3, 1/6),
        // SSR = 1/6, s² = 1/6, se(slope) = sqrt(1/12), se(int) = se(slope) * sqrt(14/3).
        let fit = ols_fit(&[(1.0, 2.0), (2.0, 3.0), (3.0, 5.0)]).unwrap();
        assert!((fit.slope - 1.5).abs() < 1e-12);
        assert!((fit.intercept - 1.0 / 3.0).abs() < 1e-12);
        let slope_se = (1.0f64 / 12.0).sqrt();
        assert!((fit.slope_se - slope_se).abs() < 1e-12);
        assert!((fit.slope_se - 0.2887).abs() < 1e-4);
        assert!((fit.intercept_se - slope_se * (14.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert_eq!(
            ols_fit(&[(1.0, 1.0), (2.0, 2.0)]),
            Err(RegressionError::TooFewPoints(2))
        );
        assert_eq!(
            ols_fit(&[(4.0, 1.0), (4.0, 2.0), (4.0, 3.0)]),
            Err(RegressionError::DegenerateDesign)
        );
        assert_eq!(
            ols_fit(&[(1.0, 1.0), (2.0, f64::NAN), (3.0, 3.0)]),
            Err(RegressionError::NonFinite(1))
        );
    }
}
