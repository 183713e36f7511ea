//! Exact-arithmetic reference values for the statistics kernels.
//!
//! Every finite `f64` is a dyadic rational `m * 2^e`. Scaling all elements of
//! a slice to the smallest exponent present turns the sum, the sum of squares
//! and the variance numerator into plain big-integer arithmetic, so the only
//! rounding happens in the final conversion back to `f64`.
//!
//! This crate is test-only and deliberately shares no code with the kernels
//! it checks.

use num_bigint::{BigInt, Sign};
use num_traits::{Float, ToPrimitive, Zero};

/// A value `num * 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: i64,
}

impl Dyadic {
    /// Correctly rounded conversion (barring overflow and subnormal results).
    pub fn to_f64(&self) -> f64 {
        const KEEP: u64 = 128;
        let bits = self.num.bits();
        if bits <= KEEP {
            return scale_pow2(self.num.to_f64().expect("fits in f64"), self.exp);
        }
        // Truncate to KEEP bits with a sticky bit so the single rounding in
        // `to_f64` still lands on the nearest value.
        let drop = bits - KEEP;
        let (sign, magnitude) = (self.num.sign(), self.num.magnitude());
        let mut head = magnitude >> drop;
        if (magnitude - (&head << drop)) != Zero::zero() {
            head |= num_bigint::BigUint::from(1u8);
        }
        let head = BigInt::from_biguint(sign, head)
            .to_f64()
            .expect("fits in f64");
        scale_pow2(head, self.exp + drop as i64)
    }
}

/// Multiplies by `2^exp` without overflowing the intermediate power.
fn scale_pow2(mut value: f64, mut exp: i64) -> f64 {
    while exp > 0 {
        let step = exp.min(1000);
        value *= 2f64.powi(step as i32);
        exp -= step;
    }
    while exp < 0 {
        let step = exp.max(-1000);
        value *= 2f64.powi(step as i32);
        exp -= step;
    }
    value
}

struct Decoded {
    mantissa: BigInt,
    exp: i64,
}

fn decode(x: f64) -> Decoded {
    assert!(x.is_finite(), "oracle only accepts finite values, got {x}");
    let (mantissa, exp, sign) = Float::integer_decode(x);
    let sign = if sign < 0 { Sign::Minus } else { Sign::Plus };
    Decoded {
        mantissa: BigInt::from_biguint(sign, mantissa.into()),
        exp: i64::from(exp),
    }
}

/// Elements decoded and rescaled to a common exponent.
fn common_scale(xs: &[f64]) -> (Vec<BigInt>, i64) {
    let decoded: Vec<Decoded> = xs.iter().map(|&x| decode(x)).collect();
    let min_exp = decoded
        .iter()
        .filter(|d| !d.mantissa.is_zero())
        .map(|d| d.exp)
        .min()
        .unwrap_or(0);
    let scaled = decoded
        .into_iter()
        .map(|d| {
            if d.mantissa.is_zero() {
                BigInt::zero()
            } else {
                d.mantissa << ((d.exp - min_exp) as usize)
            }
        })
        .collect();
    (scaled, min_exp)
}

/// Exact sum as a dyadic rational.
pub fn exact_sum_dyadic(xs: &[f64]) -> Dyadic {
    let (scaled, exp) = common_scale(xs);
    Dyadic {
        num: scaled.into_iter().sum(),
        exp,
    }
}

/// The exact sum, rounded once to `f64`.
pub fn exact_sum(xs: &[f64]) -> f64 {
    exact_sum_dyadic(xs).to_f64()
}

const QUOTIENT_BITS: i64 = 128;

/// `num * 2^exp / den`, keeping `QUOTIENT_BITS` extra bits through the division.
fn divide(num: &BigInt, exp: i64, den: &BigInt) -> f64 {
    let q = (num << QUOTIENT_BITS as usize) / den;
    Dyadic {
        num: q,
        exp: exp - QUOTIENT_BITS,
    }
    .to_f64()
}

/// Exact arithmetic mean, rounded once. `None` for an empty slice.
pub fn exact_mean(xs: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    let sum = exact_sum_dyadic(xs);
    Some(divide(&sum.num, sum.exp, &BigInt::from(xs.len())))
}

/// Exact population variance `(n * sum(x^2) - sum(x)^2) / n^2`, rounded once.
pub fn exact_population_variance(xs: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    let (scaled, exp) = common_scale(xs);
    let n = BigInt::from(xs.len());
    let sum: BigInt = scaled.iter().sum();
    let sum_sq: BigInt = scaled.iter().map(|v| v * v).sum();
    let numerator = &n * sum_sq - &sum * &sum;
    Some(divide(&numerator, 2 * exp, &(&n * &n)))
}

/// Population standard deviation from the exact variance.
pub fn exact_population_stddev(xs: &[f64]) -> Option<f64> {
    exact_population_variance(xs).map(f64::sqrt)
}

/// `|actual - expected| / |expected|`, or the absolute error when `expected`
/// is zero.
pub fn relative_error(actual: f64, expected: f64) -> f64 {
    let diff = (actual - expected).abs();
    if expected == 0.0 {
        diff
    } else {
        diff / expected.abs()
    }
}
