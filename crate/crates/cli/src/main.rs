use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ffibench::analysis::{Analysis, AnalyzeOptions, analyze};
use ffibench::table::TableFormat;
use ffibench::{DEFAULT_BASELINE, records, report, sample};
use ffibench_core::FloorRule;
use log::{info, warn};

/// Sample generation and timing analysis for FFI overhead benchmarks.
#[derive(Debug, Parser)]
#[command(name = "ffibench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write `n` uniform [0, 1) values as raw little-endian f64.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Aggregate timing records and fit per-call overhead.
    Analyze {
        /// Timing-record CSV written by the benchmark driver.
        #[arg(long)]
        records: PathBuf,
        /// Length of the sample the chunked runs were split from.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sample_length: u64,
        /// Output directory for the analysis CSVs.
        #[arg(long)]
        out: PathBuf,
        /// Adapter whose best chunked time is subtracted as the floor.
        #[arg(long, default_value = DEFAULT_BASELINE)]
        baseline: String,
    },
    /// Render tables and plots from an analysis directory.
    Report {
        #[arg(long)]
        analysis: PathBuf,
        #[arg(long)]
        tables: bool,
        #[arg(long)]
        plots: bool,
    },
}

fn run(cli: Cli) -> ffibench::Result<()> {
    match cli.command {
        Command::Gen { n, seed, out } => {
            let values = sample::generate(n as usize, seed);
            sample::write(&out, &values)?;
            info!("wrote {n} values to {}", out.display());
        }
        Command::Analyze {
            records: path,
            sample_length,
            out,
            baseline,
        } => {
            let records = records::read(&path)?;
            let options = AnalyzeOptions {
                sample_length,
                floor: FloorRule::BaselineMinimum(baseline),
            };
            let analysis = analyze(&records, &options)?;
            for warning in &analysis.warnings {
                warn!("{warning}");
            }
            analysis.write(&out)?;
            info!(
                "{} records, {} groups, {} fits written to {}",
                records.len(),
                analysis.aggregates.len(),
                analysis.fits.len(),
                out.display()
            );
        }
        Command::Report {
            analysis: dir,
            tables,
            plots,
        } => {
            let analysis = Analysis::read(&dir)?;
            if tables {
                for (name, table) in report::tables(&analysis) {
                    println!("{name}\n{}", table.render(TableFormat::Text));
                }
            }
            for path in report::write(&analysis, &dir, tables, plots)? {
                info!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
