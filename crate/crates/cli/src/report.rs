//! Tables and plots built from an [`Analysis`].

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use ffibench_core::{Function, Strategy};

use crate::analysis::Analysis;
use crate::format::{ms_with_uncertainty, ns_to_ms};
use crate::plot::{self, Plot, PlotPoint, PlotSeries};
use crate::table::{Table, TableFormat};
use crate::{Error, Result};

fn label(adapter: &str, strategy: Strategy) -> String {
    format!("{adapter} ({strategy})")
}

/// Every aggregate, one row per group.
pub fn aggregate_table(analysis: &Analysis) -> Table {
    let mut table = Table::new([
        "adapter",
        "strategy",
        "function",
        "chunk size (2^n)",
        "time (ms)",
        "n",
    ]);
    for s in &analysis.aggregates {
        table.push([
            s.key.adapter.clone(),
            s.key.strategy.to_string(),
            s.key.function.to_string(),
            s.key
                .chunk_exponent
                .map_or_else(|| "serial".to_string(), |e| e.to_string()),
            ms_with_uncertainty(s.mean_ns, s.stddev_ns),
            s.n.to_string(),
        ]);
    }
    table
}

/// Serial runs: one row per adapter and strategy, one column per function.
pub fn serial_table(analysis: &Analysis) -> Table {
    let mut table = Table::new(["method", "strategy", "mean (ms)", "stddev (ms)"]);
    let serial: Vec<_> = analysis
        .aggregates
        .iter()
        .filter(|s| s.key.chunk_exponent.is_none())
        .collect();
    let rows: BTreeSet<(Strategy, &str)> = serial
        .iter()
        .map(|s| (s.key.strategy, s.key.adapter.as_str()))
        .collect();
    for (strategy, adapter) in rows {
        let cell = |function| {
            serial
                .iter()
                .find(|s| {
                    s.key.adapter == adapter
                        && s.key.strategy == strategy
                        && s.key.function == function
                })
                .map(|s| ms_with_uncertainty(s.mean_ns, s.stddev_ns))
                .unwrap_or_default()
        };
        table.push([
            adapter.to_string(),
            strategy.to_string(),
            cell(Function::Mean),
            cell(Function::Stddev),
        ]);
    }
    table
}

/// Chunked runs of one function: one row per chunk exponent, one column per
/// adapter and strategy.
pub fn chunked_table(analysis: &Analysis, function: Function) -> Table {
    let chunked: Vec<_> = analysis
        .aggregates
        .iter()
        .filter(|s| s.key.function == function && s.key.chunk_exponent.is_some())
        .collect();
    let columns: BTreeSet<(&str, Strategy)> = chunked
        .iter()
        .map(|s| (s.key.adapter.as_str(), s.key.strategy))
        .collect();
    let exponents: BTreeSet<_> = chunked
        .iter()
        .filter_map(|s| s.key.chunk_exponent)
        .collect();

    let mut table = Table::new(
        std::iter::once("chunk size (2^n)".to_string())
            .chain(columns.iter().map(|(a, s)| label(a, *s))),
    );
    for e in exponents {
        let mut row = vec![e.to_string()];
        for (adapter, strategy) in &columns {
            row.push(
                chunked
                    .iter()
                    .find(|s| {
                        s.key.adapter == *adapter
                            && s.key.strategy == *strategy
                            && s.key.chunk_exponent == Some(e)
                    })
                    .map(|s| ms_with_uncertainty(s.mean_ns, s.stddev_ns))
                    .unwrap_or_default(),
            );
        }
        table.push(row);
    }
    table
}

/// Per-call (slope) and base (intercept) overhead per adapter and strategy.
pub fn regression_table(analysis: &Analysis) -> Table {
    let mut table = Table::new([
        "method",
        "strategy",
        "mean per-call (ms)",
        "mean base (ms)",
        "stddev per-call (ms)",
        "stddev base (ms)",
    ]);
    let rows: BTreeSet<(&str, Strategy)> = analysis
        .fits
        .iter()
        .map(|f| (f.adapter.as_str(), f.strategy))
        .collect();
    for (adapter, strategy) in rows {
        let mut row = vec![adapter.to_string(), strategy.to_string()];
        for function in Function::ALL {
            match analysis
                .fits
                .iter()
                .find(|f| f.adapter == adapter && f.strategy == strategy && f.function == function)
            {
                Some(f) => {
                    row.push(ms_with_uncertainty(f.result.slope, f.result.slope_se));
                    row.push(ms_with_uncertainty(
                        f.result.intercept,
                        f.result.intercept_se,
                    ));
                }
                None => row.extend([String::new(), String::new()]),
            }
        }
        table.push(row);
    }
    table
}

/// Named tables in output order.
pub fn tables(analysis: &Analysis) -> Vec<(String, Table)> {
    let mut out = vec![
        ("aggregates".to_string(), aggregate_table(analysis)),
        ("serial".to_string(), serial_table(analysis)),
    ];
    for function in Function::ALL {
        out.push((
            format!("chunked_{function}"),
            chunked_table(analysis, function),
        ));
    }
    out.push(("regression".to_string(), regression_table(analysis)));
    out
}

/// Chunked timings of one function against chunk size, with the floor.
pub fn chunked_plot(analysis: &Analysis, function: Function) -> Option<Plot> {
    let mut series: Vec<PlotSeries> = Vec::new();
    for s in analysis
        .aggregates
        .iter()
        .filter(|s| s.key.function == function)
    {
        let Some(e) = s.key.chunk_exponent else {
            continue;
        };
        let name = label(&s.key.adapter, s.key.strategy);
        let point = PlotPoint {
            x: e.chunk_size() as f64,
            y: ns_to_ms(s.mean_ns),
            err: ns_to_ms(s.stddev_ns),
        };
        match series.iter_mut().find(|p| p.label == name) {
            Some(p) => p.points.push(point),
            None => series.push(PlotSeries {
                label: name,
                points: vec![point],
            }),
        }
    }
    if series.is_empty() {
        return None;
    }
    let floor = analysis
        .series
        .iter()
        .find(|s| s.function == function)
        .map(|s| ns_to_ms(s.floor_ns));
    Some(Plot {
        title: format!("Chunked execution time: {function}()"),
        x_label: "chunk size".into(),
        y_label: "total time (ms)".into(),
        x_log_base: 2.0,
        series,
        floor,
    })
}

/// Overhead above the floor against the number of calls.
pub fn overhead_plot(analysis: &Analysis, function: Function) -> Option<Plot> {
    let series: Vec<PlotSeries> = analysis
        .series
        .iter()
        .filter(|s| s.function == function)
        .map(|s| PlotSeries {
            label: label(&s.adapter, s.strategy),
            points: s
                .points
                .iter()
                .map(|p| PlotPoint {
                    x: p.n_calls as f64,
                    y: ns_to_ms(p.overhead_ns),
                    err: ns_to_ms(p.stddev_ns),
                })
                .collect(),
        })
        .collect();
    if series.is_empty() {
        return None;
    }
    Some(Plot {
        title: format!("Call overhead: {function}()"),
        x_label: "frequency (number of calls)".into(),
        y_label: "overhead (ms)".into(),
        x_log_base: 10.0,
        series,
        floor: None,
    })
}

/// Named plots in output order.
pub fn plots(analysis: &Analysis) -> Vec<(String, Plot)> {
    let mut out = Vec::new();
    for function in Function::ALL {
        if let Some(p) = chunked_plot(analysis, function) {
            out.push((format!("chunked_{function}"), p));
        }
        if let Some(p) = overhead_plot(analysis, function) {
            out.push((format!("overhead_{function}"), p));
        }
    }
    out
}

/// Writes `tables/*.{txt,csv}` and/or `plots/*.svg` under `dir` and returns
/// the written paths.
pub fn write(
    analysis: &Analysis,
    dir: &Path,
    with_tables: bool,
    with_plots: bool,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    if with_tables {
        let tables_dir = dir.join("tables");
        fs::create_dir_all(&tables_dir).map_err(Error::io(&tables_dir))?;
        for (name, table) in tables(analysis) {
            for format in [TableFormat::Text, TableFormat::Csv] {
                let path = tables_dir.join(format!("{name}.{}", format.extension()));
                fs::write(&path, table.render(format)).map_err(Error::io(&path))?;
                written.push(path);
            }
        }
    }
    if with_plots {
        let plots_dir = dir.join("plots");
        fs::create_dir_all(&plots_dir).map_err(Error::io(&plots_dir))?;
        for (name, p) in plots(analysis) {
            let path = plots_dir.join(format!("{name}.svg"));
            plot::write(&p, &path)?;
            written.push(path);
        }
    }
    Ok(written)
}
