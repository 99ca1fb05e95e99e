//! Artifact reading and writing.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rainbow_core::colorings::{ColoringFamily, PQColoring};
use rainbow_core::hypergraph::{make_family, UniformHypergraph};
use serde::Serialize;
use serde_json::{json, Value};

pub type AnyResult<T> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

pub const SCHEMA_VERSION: u32 = 1;

/// A family id, or a path to a hypergraph JSON file.
pub fn load_pattern(id: &str, r: usize) -> AnyResult<UniformHypergraph> {
    let path = Path::new(id);
    if path.is_file() {
        let h: UniformHypergraph = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        return Ok(h);
    }
    Ok(make_family(id, r)?)
}

pub fn load_family(path: &Path) -> AnyResult<ColoringFamily> {
    let mut reader = BufReader::new(File::open(path).map_err(|e| format!("{}: {e}", path.display()))?);
    Ok(ColoringFamily::read_from(&mut reader)?)
}

pub fn load_pq(path: &Path, p: usize, q: usize) -> AnyResult<PQColoring> {
    let mut reader = BufReader::new(File::open(path).map_err(|e| format!("{}: {e}", path.display()))?);
    Ok(PQColoring::read_from(&mut reader, p, q)?)
}

pub fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// The JSON envelope every artifact shares.
pub fn envelope(command: &str, config: &Value, result: impl Serialize) -> AnyResult<Value> {
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config,
        "result": serde_json::to_value(result)?,
    }))
}

pub fn write_json(path: &Path, value: &Value) -> AnyResult<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// Writes to `output` when given, stdout otherwise.
pub fn emit(output: Option<&Path>, value: &Value) -> AnyResult<()> {
    match output {
        Some(path) => write_json(path, value),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            serde_json::to_writer_pretty(&mut lock, value)?;
            lock.write_all(b"\n")?;
            Ok(())
        }
    }
}

/// Writes a binary artifact and its `.meta.json` sidecar.
pub fn write_binary(path: &Path, bytes: &[u8], meta: &Value) -> AnyResult<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(bytes)?;
    w.flush()?;
    write_json(&sidecar(path), meta)
}
