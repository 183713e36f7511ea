//! Raw sample files: little-endian binary64 values, no header.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// `n` values uniform on `[0, 1)` from a ChaCha8 stream seeded with `seed`.
pub fn generate(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random::<f64>()).collect()
}

pub fn encode(values: &[f64]) -> Vec<u8> {
    values.iter().flat_map(|v| v.to_le_bytes()).collect()
}

/// Decodes a sample. Fails if the length is not a multiple of 8 or any value
/// is NaN.
pub fn decode(bytes: &[u8], path: &Path) -> Result<Vec<f64>> {
    if bytes.len() % 8 != 0 {
        return Err(Error::format(
            path,
            format!("size {} is not a multiple of 8 bytes", bytes.len()),
        ));
    }
    let values: Vec<f64> = bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect();
    if let Some(i) = values.iter().position(|v| v.is_nan()) {
        return Err(Error::format(path, format!("value {i} is NaN")));
    }
    Ok(values)
}

pub fn write(path: &Path, values: &[f64]) -> Result<()> {
    let file = fs::File::create(path).map_err(Error::io(path))?;
    let mut out = BufWriter::new(file);
    for v in values {
        out.write_all(&v.to_le_bytes()).map_err(Error::io(path))?;
    }
    out.flush().map_err(Error::io(path))
}

pub fn read(path: &Path) -> Result<Vec<f64>> {
    let bytes = fs::read(path).map_err(Error::io(path))?;
    decode(&bytes, path)
}
