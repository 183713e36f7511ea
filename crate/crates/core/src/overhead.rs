//! Excess time over a floor, as a function of call count.
//!
//! The floor is the best chunked time of a reference implementation. What
//! remains after subtracting it is attributed to call overhead and is fitted
//! against the number of calls made at each chunk size.

use alloc::string::String;
use alloc::vec::Vec;

use crate::aggregate::AggregateStat;
use crate::error::{AnalysisError, RegressionError};
use crate::record::{ChunkExponent, Function, Strategy};
use crate::regression::{RegressionResult, ols_fit};

/// How the floor subtracted from every series is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum FloorRule {
    /// Minimum chunked mean of the named adapter, per function, over all of
    /// its strategies and chunk exponents.
    BaselineMinimum(String),
    /// A fixed floor in nanoseconds for every function.
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverheadPoint {
    pub chunk_exponent: ChunkExponent,
    pub chunk_size: u64,
    /// `ceil(sample_length / chunk_size)`.
    pub n_calls: u64,
    pub overhead_ns: f64,
    /// Spread of the underlying aggregate, kept for error bars.
    pub stddev_ns: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverheadSeries {
    pub adapter: String,
    pub strategy: Strategy,
    pub function: Function,
    pub floor_ns: f64,
    /// Ascending chunk exponent.
    pub points: Vec<OverheadPoint>,
}

impl OverheadSeries {
    /// Least-squares fit of overhead on call count.
    pub fn fit(&self) -> Result<RegressionResult, RegressionError> {
        let xy: Vec<(f64, f64)> = self
            .points
            .iter()
            .map(|p| (p.n_calls as f64, p.overhead_ns))
            .collect();
        ols_fit(&xy)
    }
}

fn floor_for(
    stats: &[AggregateStat],
    rule: &FloorRule,
    function: Function,
) -> Result<f64, AnalysisError> {
    match rule {
        FloorRule::Fixed(value) => Ok(*value),
        FloorRule::BaselineMinimum(baseline) => stats
            .iter()
            .filter(|s| {
                s.key.adapter == *baseline
                    && s.key.function == function
                    && s.key.chunk_exponent.is_some()
            })
            .map(|s| s.mean_ns)
            .reduce(f64::min)
            .ok_or_else(|| AnalysisError::MissingBaseline {
                adapter: baseline.clone(),
                function,
            }),
    }
}

/// Builds one overhead series per (adapter, strategy, function) from the
/// chunked aggregates. Serial aggregates are ignored.
pub fn overhead_series(
    stats: &[AggregateStat],
    rule: &FloorRule,
    sample_length: u64,
) -> Result<Vec<OverheadSeries>, AnalysisError> {
    if sample_length == 0 {
        return Err(AnalysisError::EmptySample);
    }

    let mut series: Vec<OverheadSeries> = Vec::new();
    for function in Function::ALL {
        let chunked: Vec<&AggregateStat> = stats
            .iter()
            .filter(|s| s.key.function == function && s.key.chunk_exponent.is_some())
            .collect();
        if chunked.is_empty() {
            continue;
        }
        let floor_ns = floor_for(stats, rule, function)?;

        for stat in chunked {
            let Some(exponent) = stat.key.chunk_exponent else {
                continue;
            };
            let point = OverheadPoint {
                chunk_exponent: exponent,
                chunk_size: exponent.chunk_size(),
                n_calls: exponent.calls_for(sample_length),
                overhead_ns: stat.mean_ns - floor_ns,
                stddev_ns: stat.stddev_ns,
            };
            let existing = series.iter_mut().find(|s| {
                s.adapter == stat.key.adapter
                    && s.strategy == stat.key.strategy
                    && s.function == function
            });
            match existing {
                Some(s) => s.points.push(point),
                None => series.push(OverheadSeries {
                    adapter: stat.key.adapter.clone(),
                    strategy: stat.key.strategy,
                    function,
                    floor_ns,
                    points: alloc::vec![point],
                }),
            }
        }
    }

    for s in &mut series {
        s.points.sort_by_key(|p| p.chunk_exponent);
    }
    series.sort_by(|a, b| {
        (a.function, &a.adapter, a.strategy).cmp(&(b.function, &b.adapter, b.strategy))
    });
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::GroupKey;
    use alloc::string::ToString;
    use alloc::vec;

    fn stat(adapter: &str, function: Function, exponent: f64, mean_ns: f64) -> AggregateStat {
        AggregateStat {
            key: GroupKey {
                adapter: adapter.to_string(),
                strategy: Strategy::InSitu,
                function,
                chunk_exponent: Some(ChunkExponent::new(exponent).unwrap()),
            },
            mean_ns,
            stddev_ns: 1.0,
            n: 30,
        }
    }

    const BASE: &str = "reference_baseline";

    fn baseline_rule() -> FloorRule {
        FloorRule::BaselineMinimum(BASE.to_string())
    }

    #[test]
    fn baseline_minimum_point_is_zero() {
        let stats = vec![
            stat(BASE, Function::Mean, 10.0, 300.0),
            stat(BASE, Function::Mean, 11.0, 100.0),
            stat(BASE, Function::Mean, 12.0, 200.0),
        ];
        let series = overhead_series(&stats, &baseline_rule(), 1 << 20).unwrap();
        assert_eq!(series.len(), 1);
        assert_eq!(series[0].floor_ns, 100.0);
        let overheads: Vec<f64> = series[0].points.iter().map(|p| p.overhead_ns).collect();
        assert_eq!(overheads, vec![200.0, 0.0, 100.0]);
    }

    #[test]
    fn candidate_point() {
        // 8 calls of 1024 elements cover 8192.
        let stats = vec![
            stat(BASE, Function::Mean, 13.0, 100.0),
            stat("native_extension", Function::Mean, 10.0, 150.0),
        ];
        let series = overhead_series(&stats, &baseline_rule(), 8192).unwrap();
        let candidate = series
            .iter()
            .find(|s| s.adapter == "native_extension")
            .unwrap();
        assert_eq!(candidate.points.len(), 1);
        assert_eq!(candidate.points[0].n_calls, 8);
        assert_eq!(candidate.points[0].overhead_ns, 50.0);
    }

    #[test]
    fn linear_model_is_recovered() {
        let sample_length = 1_000_000;
        let mut stats = vec![stat(BASE, Function::Stddev, 18.0, 100.0)];
        for i in 0..18 {
            let e = ChunkExponent::new(10.0 + 0.5 * i as f64).unwrap();
            let calls = e.calls_for(sample_length) as f64;
            stats.push(stat("x", Function::Stddev, e.get(), 100.0 + 5.0 * calls));
        }
        let series = overhead_series(&stats, &baseline_rule(), sample_length).unwrap();
        let x = series.iter().find(|s| s.adapter == "x").unwrap();
        for p in &x.points {
            assert_eq!(p.overhead_ns, 5.0 * p.n_calls as f64);
        }
        let fit = x.fit().unwrap();
        assert!((fit.slope - 5.0).abs() < 1e-9);
        assert!(fit.intercept.abs() < 1e-6);
    }

    #[test]
    fn floor_is_per_function() {
        let stats = vec![
            stat(BASE, Function::Mean, 10.0, 10.0),
            stat(BASE, Function::Stddev, 10.0, 50.0),
        ];
        let series = overhead_series(&stats, &baseline_rule(), 4096).unwrap();
        let floors: Vec<_> = series.iter().map(|s| (s.function, s.floor_ns)).collect();
        assert_eq!(
            floors,
            vec![(Function::Mean, 10.0), (Function::Stddev, 50.0)]
        );
    }

    #[test]
    fn missing_baseline_is_reported() {
        let stats = vec![stat("native_extension", Function::Stddev, 10.0, 1.0)];
        let err = overhead_series(&stats, &baseline_rule(), 4096).unwrap_err();
        assert_eq!(
            err,
            AnalysisError::MissingBaseline {
                adapter: BASE.to_string(),
                function: Function::Stddev,
            }
        );
    }

    #[test]
    fn fixed_floor_and_serial_ignored() {
        let mut serial = stat("a", Function::Mean, 10.0, 7.0);
        serial.key.chunk_exponent = None;
        let stats = vec![serial, stat("a", Function::Mean, 10.0, 7.0)];
        let series = overhead_series(&stats, &FloorRule::Fixed(2.0), 2048).unwrap();
        assert_eq!(series.len(), 1);
        assert_eq!(series[0].points.len(), 1);
        assert_eq!(series[0].points[0].overhead_ns, 5.0);
        assert_eq!(series[0].points[0].n_calls, 2);
    }

    #[test]
    fn zero_sample_length() {
        assert_eq!(
            overhead_series(&[], &FloorRule::Fixed(0.0), 0),
            Err(AnalysisError::EmptySample)
        );
    }
}
