//! The driver's timing-record CSV.
//!
//! Columns, in order:
//! `adapter,strategy,function,sample_id,run_id,chunk_exponent,n_calls,total_ns`.
//! `chunk_exponent` is empty for serial runs.

use std::fs;
use std::io;
use std::path::Path;

use ffibench_core::{ChunkExponent, TimingRecord};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const COLUMNS: [&str; 8] = [
    "adapter",
    "strategy",
    "function",
    "sample_id",
    "run_id",
    "chunk_exponent",
    "n_calls",
    "total_ns",
];

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    adapter: String,
    strategy: String,
    function: String,
    sample_id: String,
    run_id: u32,
    chunk_exponent: Option<f64>,
    n_calls: u64,
    total_ns: u64,
}

impl Row {
    fn into_record(self) -> Result<TimingRecord> {
        Ok(TimingRecord {
            adapter: self.adapter,
            strategy: self.strategy.parse()?,
            function: self.function.parse()?,
            sample_id: self.sample_id,
            run_id: self.run_id,
            chunk_exponent: self.chunk_exponent.map(ChunkExponent::new).transpose()?,
            n_calls: self.n_calls,
            total_ns: self.total_ns,
        })
    }
}

impl From<&TimingRecord> for Row {
    fn from(r: &TimingRecord) -> Self {
        Row {
            adapter: r.adapter.clone(),
            strategy: r.strategy.to_string(),
            function: r.function.to_string(),
            sample_id: r.sample_id.clone(),
            run_id: r.run_id,
            chunk_exponent: r.chunk_exponent.map(ChunkExponent::get),
            n_calls: r.n_calls,
            total_ns: r.total_ns,
        }
    }
}

pub fn from_reader<R: io::Read>(reader: R, path: &Path) -> Result<Vec<TimingRecord>> {
    let mut csv = csv::Reader::from_reader(reader);
    let headers = csv.headers().map_err(Error::csv(path))?;
    if headers.iter().ne(COLUMNS) {
        return Err(Error::format(
            path,
            format!(
                "expected columns `{}`, found `{}`",
                COLUMNS.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    let mut records = Vec::new();
    for (line, row) in csv.deserialize::<Row>().enumerate() {
        let row = row.map_err(Error::csv(path))?;
        let record = row
            .into_record()
            .map_err(|e| Error::format(path, format!("record {}: {e}", line + 1)))?;
        if record.n_calls == 0 {
            return Err(Error::format(
                path,
                format!("record {}: n_calls is 0", line + 1),
            ));
        }
        records.push(record);
    }
    Ok(records)
}

pub fn read(path: &Path) -> Result<Vec<TimingRecord>> {
    let file = fs::File::open(path).map_err(Error::io(path))?;
    from_reader(io::BufReader::new(file), path)
}

pub fn to_writer<W: io::Write>(writer: W, records: &[TimingRecord], path: &Path) -> Result<()> {
    // Header written explicitly so an empty record set still gets one.
    let mut csv = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(writer);
    csv.write_record(COLUMNS).map_err(Error::csv(path))?;
    for record in records {
        csv.serialize(Row::from(record)).map_err(Error::csv(path))?;
    }
    csv.flush().map_err(Error::io(path))
}

pub fn write(path: &Path, records: &[TimingRecord]) -> Result<()> {
    let file = fs::File::create(path).map_err(Error::io(path))?;
    to_writer(io::BufWriter::new(file), records, path)
}
