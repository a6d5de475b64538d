//! Deterministic JSON reports. The comparison payload carries everything
//! reproducible (sorted keys, canonical rational printing, no timestamps);
//! timings live in a separate non-compared field. Writes are atomic:
//! temp file in the target directory, then rename.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use lecycles::poly::Frame;
use lecycles::{Error, Result};

use crate::corpus::CorpusEntry;

pub const SCHEMA_VERSION: u32 = 1;

/// Input echo: enough to independently re-derive the report.
#[derive(Debug, Serialize)]
pub struct EntryEcho {
    pub name: String,
    pub variables: Vec<String>,
    pub f: String,
    pub expected_s: usize,
    pub frame_matrix: Vec<Vec<String>>,
    pub frame_seed: Option<u64>,
    pub seeds: Vec<u64>,
    pub samples: Vec<Vec<String>>,
}

pub fn echo(entry: &CorpusEntry, frame: &Frame) -> EntryEcho {
    EntryEcho {
        name: entry.name.clone(),
        variables: entry.ring.var_names().to_vec(),
        f: entry.f_text.clone(),
        expected_s: entry.expected_s,
        frame_matrix: frame
            .matrix()
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
        frame_seed: frame.seed(),
        seeds: entry.seeds.clone(),
        samples: entry
            .samples
            .iter()
            .map(|p| p.iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

/// Wraps a payload with its timing sidecar. serde_json's default map is
/// ordered, so round-tripping through `Value` yields sorted keys and
/// byte-identical output for identical payloads.
pub fn render<P: Serialize>(payload: &P, started: Instant) -> Result<String> {
    let mut payload_value = to_value(payload)?;
    if let Value::Object(map) = &mut payload_value {
        map.insert("schema".into(), Value::from(SCHEMA_VERSION));
    }
    let report = serde_json::json!({
        "payload": payload_value,
        "timings": { "total_ms": started.elapsed().as_millis() as u64 },
    });
    serde_json::to_string_pretty(&report).map_err(|e| Error::Internal(e.to_string()))
}

fn to_value<P: Serialize>(payload: &P) -> Result<Value> {
    serde_json::to_value(payload).map_err(|e| Error::Internal(e.to_string()))
}

pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("report")
    ));
    std::fs::write(&tmp, contents)
        .map_err(|e| Error::Input(format!("cannot write {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| Error::Input(format!("cannot rename to {}: {e}", path.display())))
}
