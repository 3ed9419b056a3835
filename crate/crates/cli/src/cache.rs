//! Append-only JSON-lines store of experiment results.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "CCMAP_CACHE_DIR";
const FILE: &str = "experiments.jsonl";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub experiment: String,
    pub input_hash: String,
    pub status: String,
    pub wall_secs: f64,
    pub version: String,
    pub seed: Option<u64>,
    pub payload: serde_json::Value,
}

/// Hash of an experiment name, its parameters, and the tool version.
pub fn input_hash(experiment: &str, params: &serde_json::Value) -> String {
    let mut h = Sha256::new();
    h.update(experiment.as_bytes());
    h.update([0]);
    h.update(params.to_string().as_bytes());
    h.update([0]);
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    /// The store under `$CCMAP_CACHE_DIR`, or `.ccmap-cache` in the working
    /// directory.
    pub fn from_env() -> std::io::Result<Cache> {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".ccmap-cache"));
        Cache::at(&dir)
    }

    pub fn at(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache { path: dir.join(FILE) })
    }

    /// The latest complete record for `hash`. Unreadable lines are skipped.
    pub fn lookup(&self, hash: &str) -> std::io::Result<Option<ExperimentRecord>> {
        let Ok(file) = fs::File::open(&self.path) else {
            return Ok(None);
        };
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<ExperimentRecord>(&line) {
                if rec.input_hash == hash && rec.status == "complete" {
                    hit = Some(rec);
                }
            }
        }
        Ok(hit)
    }

    pub fn append(&self, rec: &ExperimentRecord) -> std::io::Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{}", serde_json::to_string(rec).expect("record json"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_records_are_found() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path()).unwrap();
        let hash = input_hash("x", &serde_json::json!({"n": 1}));
        assert_ne!(hash, input_hash("x", &serde_json::json!({"n": 2})));
        let mut rec = ExperimentRecord {
            experiment: "x".into(),
            input_hash: hash.clone(),
            status: "budget-exhausted".into(),
            wall_secs: 0.5,
            version: "0".into(),
            seed: None,
            payload: serde_json::json!([]),
        };
        cache.append(&rec).unwrap();
        assert!(cache.lookup(&hash).unwrap().is_none());
        rec.status = "complete".into();
        cache.append(&rec).unwrap();
        assert_eq!(cache.lookup(&hash).unwrap(), Some(rec));
    }
}
