//! Aggregation, floor subtraction and regression over a set of records, plus
//! the CSV files an analysis is stored as.
//!
//! An analysis directory holds three files:
//!
//! * `aggregates.csv`: `adapter,strategy,function,chunk_exponent,mean_ns,stddev_ns,n`
//! * `overhead.csv`: `adapter,strategy,function,chunk_exponent,chunk_size,n_calls,overhead_ns,stddev_ns,floor_ns`
//! * `regression.csv`: `adapter,strategy,function,slope_ns,intercept_ns,slope_se_ns,intercept_se_ns,n_points`

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use ffibench_core::{
    AggregateStat, AggregateWarning, ChunkExponent, FloorRule, Function, GroupKey, OverheadPoint,
    OverheadSeries, RegressionError, RegressionResult, Strategy, TimingRecord, aggregate,
    overhead_series,
};
use serde::{Deserialize, Serialize, de::DeserializeOwned};

use crate::{Error, Result};

pub const AGGREGATES_FILE: &str = "aggregates.csv";
pub const OVERHEAD_FILE: &str = "overhead.csv";
pub const REGRESSION_FILE: &str = "regression.csv";

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Elements in the sample the chunked runs were split from.
    pub sample_length: u64,
    pub floor: FloorRule,
}

/// Regression of one overhead series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFit {
    pub adapter: String,
    pub strategy: Strategy,
    pub function: Function,
    pub result: RegressionResult,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Analysis {
    pub aggregates: Vec<AggregateStat>,
    pub series: Vec<OverheadSeries>,
    pub fits: Vec<SeriesFit>,
    /// Problems that did not stop the analysis. Empty for loaded analyses.
    pub warnings: Vec<String>,
}

fn describe(key: &GroupKey) -> String {
    match key.chunk_exponent {
        Some(e) => format!("{}/{}/{} at 2^{e}", key.adapter, key.strategy, key.function),
        None => format!("{}/{}/{} (serial)", key.adapter, key.strategy, key.function),
    }
}

fn record_warnings(records: &[TimingRecord], sample_length: u64) -> Vec<String> {
    let mut flagged = BTreeSet::new();
    let mut warnings = Vec::new();
    for record in records {
        let Some(e) = record.chunk_exponent else {
            continue;
        };
        let key = record.group_key();
        if flagged.contains(&key) {
            continue;
        }
        let expected = e.calls_for(sample_length);
        if e.chunk_size() > sample_length {
            warnings.push(format!(
                "{}: chunk size {} exceeds the sample length {sample_length}",
                describe(&key),
                e.chunk_size()
            ));
            flagged.insert(key);
        } else if record.n_calls != expected {
            warnings.push(format!(
                "{}: record has n_calls = {} but a sample of {sample_length} needs {expected} calls",
                describe(&key),
                record.n_calls
            ));
            flagged.insert(key);
        }
    }
    warnings
}

pub fn analyze(records: &[TimingRecord], options: &AnalyzeOptions) -> Result<Analysis> {
    let mut warnings = record_warnings(records, options.sample_length);

    let aggregation = aggregate(records);
    for warning in &aggregation.warnings {
        match warning {
            AggregateWarning::SingleRecord(key) => warnings.push(format!(
                "{}: only one record, standard deviation reported as 0",
                describe(key)
            )),
        }
    }

    let series = overhead_series(&aggregation.stats, &options.floor, options.sample_length)?;
    let mut fits = Vec::new();
    for s in &series {
        match s.fit() {
            Ok(result) => fits.push(SeriesFit {
                adapter: s.adapter.clone(),
                strategy: s.strategy,
                function: s.function,
                result,
            }),
            Err(err @ (RegressionError::TooFewPoints(_) | RegressionError::DegenerateDesign)) => {
                warnings.push(format!(
                    "{}/{}/{}: regression skipped: {err}",
                    s.adapter, s.strategy, s.function
                ))
            }
            Err(err) => return Err(ffibench_core::AnalysisError::from(err).into()),
        }
    }

    Ok(Analysis {
        aggregates: aggregation.stats,
        series,
        fits,
        warnings,
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct AggregateRow {
    adapter: String,
    strategy: String,
    function: String,
    chunk_exponent: Option<f64>,
    mean_ns: f64,
    stddev_ns: f64,
    n: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct OverheadRow {
    adapter: String,
    strategy: String,
    function: String,
    chunk_exponent: f64,
    chunk_size: u64,
    n_calls: u64,
    overhead_ns: f64,
    stddev_ns: f64,
    floor_ns: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct RegressionRow {
    adapter: String,
    strategy: String,
    function: String,
    slope_ns: f64,
    intercept_ns: f64,
    slope_se_ns: f64,
    intercept_se_ns: f64,
    n_points: usize,
}

fn write_csv<T: Serialize>(path: &Path, header: &[&str], rows: &[T]) -> Result<()> {
    let mut csv = csv::Writer::from_path(path).map_err(Error::csv(path))?;
    if rows.is_empty() {
        // serde only emits the header alongside the first row.
        csv.write_record(header).map_err(Error::csv(path))?;
    }
    for row in rows {
        csv.serialize(row).map_err(Error::csv(path))?;
    }
    csv.flush().map_err(Error::io(path))
}

fn read_csv<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let mut csv = csv::Reader::from_path(path).map_err(Error::csv(path))?;
    csv.deserialize()
        .collect::<Result<_, _>>()
        .map_err(Error::csv(path))
}

impl Analysis {
    /// Writes the three analysis CSVs into `dir`, creating it if needed.
    pub fn write(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(Error::io(dir))?;

        let aggregates: Vec<AggregateRow> = self
            .aggregates
            .iter()
            .map(|s| AggregateRow {
                adapter: s.key.adapter.clone(),
                strategy: s.key.strategy.to_string(),
                function: s.key.function.to_string(),
                chunk_exponent: s.key.chunk_exponent.map(ChunkExponent::get),
                mean_ns: s.mean_ns,
                stddev_ns: s.stddev_ns,
                n: s.n,
            })
            .collect();
        write_csv(
            &dir.join(AGGREGATES_FILE),
            &[
                "adapter",
                "strategy",
                "function",
                "chunk_exponent",
                "mean_ns",
                "stddev_ns",
                "n",
            ],
            &aggregates,
        )?;

        let overhead: Vec<OverheadRow> = self
            .series
            .iter()
            .flat_map(|s| {
                s.points.iter().map(move |p| OverheadRow {
                    adapter: s.adapter.clone(),
                    strategy: s.strategy.to_string(),
                    function: s.function.to_string(),
                    chunk_exponent: p.chunk_exponent.get(),
                    chunk_size: p.chunk_size,
                    n_calls: p.n_calls,
                    overhead_ns: p.overhead_ns,
                    stddev_ns: p.stddev_ns,
                    floor_ns: s.floor_ns,
                })
            })
            .collect();
        write_csv(
            &dir.join(OVERHEAD_FILE),
            &[
                "adapter",
                "strategy",
                "function",
                "chunk_exponent",
                "chunk_size",
                "n_calls",
                "overhead_ns",
                "stddev_ns",
                "floor_ns",
            ],
            &overhead,
        )?;

        let regression: Vec<RegressionRow> = self
            .fits
            .iter()
            .map(|f| RegressionRow {
                adapter: f.adapter.clone(),
                strategy: f.strategy.to_string(),
                function: f.function.to_string(),
                slope_ns: f.result.slope,
                intercept_ns: f.result.intercept,
                slope_se_ns: f.result.slope_se,
                intercept_se_ns: f.result.intercept_se,
                n_points: f.result.n_points,
            })
            .collect();
        write_csv(
            &dir.join(REGRESSION_FILE),
            &[
                "adapter",
                "strategy",
                "function",
                "slope_ns",
                "intercept_ns",
                "slope_se_ns",
                "intercept_se_ns",
                "n_points",
            ],
            &regression,
        )
    }

    /// Loads an analysis previously written with [`Analysis::write`].
    pub fn read(dir: &Path) -> Result<Self> {
        let mut aggregates = Vec::new();
        for row in read_csv::<AggregateRow>(&dir.join(AGGREGATES_FILE))? {
            aggregates.push(AggregateStat {
                key: GroupKey {
                    adapter: row.adapter,
                    strategy: row.strategy.parse()?,
                    function: row.function.parse()?,
                    chunk_exponent: row.chunk_exponent.map(ChunkExponent::new).transpose()?,
                },
                mean_ns: row.mean_ns,
                stddev_ns: row.stddev_ns,
                n: row.n,
            });
        }

        let mut series: Vec<OverheadSeries> = Vec::new();
        for row in read_csv::<OverheadRow>(&dir.join(OVERHEAD_FILE))? {
            let strategy: Strategy = row.strategy.parse()?;
            let function: Function = row.function.parse()?;
            let point = OverheadPoint {
                chunk_exponent: ChunkExponent::new(row.chunk_exponent)?,
                chunk_size: row.chunk_size,
                n_calls: row.n_calls,
                overhead_ns: row.overhead_ns,
                stddev_ns: row.stddev_ns,
            };
            match series.last_mut() {
                Some(s)
                    if s.adapter == row.adapter
                        && s.strategy == strategy
                        && s.function == function =>
                {
                    s.points.push(point)
                }
                _ => series.push(OverheadSeries {
                    adapter: row.adapter,
                    strategy,
                    function,
                    floor_ns: row.floor_ns,
                    points: vec![point],
                }),
            }
        }

        let mut fits = Vec::new();
        for row in read_csv::<RegressionRow>(&dir.join(REGRESSION_FILE))? {
            fits.push(SeriesFit {
                adapter: row.adapter,
                strategy: row.strategy.parse()?,
                function: row.function.parse()?,
                result: RegressionResult {
                    slope: row.slope_ns,
                    intercept: row.intercept_ns,
                    slope_se: row.slope_se_ns,
                    intercept_se: row.intercept_se_ns,
                    n_points: row.n_points,
                },
            });
        }

        Ok(Analysis {
            aggregates,
            series,
            fits,
            warnings: Vec::new(),
        })
    }
}
