//! On-disk result cache. One JSON file per key; entries that fail any check
//! are reported and recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::schema;
use crate::CliError;

pub const ENV_VAR: &str = "CYCLIC_SIEVE_CACHE";

pub type Params = BTreeMap<String, Value>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Params,
    pub version: String,
    pub key: String,
    pub payload_sha256: String,
    pub payload: Value,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Stable key for `command + parameters + version`.
pub fn cache_key(command: &str, parameters: &Params, version: &str) -> String {
    let ident =
        serde_json::json!({ "command": command, "parameters": parameters, "version": version });
    sha256_hex(ident.to_string().as_bytes())
}

impl RunManifest {
    pub fn new(command: &str, parameters: Params, payload: Value) -> Self {
        let version = cyclic_sieve::VERSION.to_string();
        Self {
            key: cache_key(command, &parameters, &version),
            payload_sha256: sha256_hex(payload.to_string().as_bytes()),
            command: command.to_string(),
            parameters,
            version,
            payload,
        }
    }

    /// Why this entry cannot be trusted for the given request, if it cannot.
    fn defect(&self, expected: &RunManifest) -> Option<String> {
        if self.key != expected.key
            || self.command != expected.command
            || self.parameters != expected.parameters
            || self.version != expected.version
        {
            return Some("request does not match key".into());
        }
        if sha256_hex(self.payload.to_string().as_bytes()) != self.payload_sha256 {
            return Some("payload digest mismatch".into());
        }
        schema::validate(&self.command, &self.payload).err()
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
    pub warnings: Vec<String>,
}

impl Cache {
    /// `--no-cache` wins, then `--cache-dir`, then the environment. With none
    /// of them set nothing is cached.
    pub fn new(flag: Option<&Path>, disabled: bool) -> Self {
        let dir = if disabled {
            None
        } else {
            flag.map(Path::to_path_buf)
                .or_else(|| std::env::var_os(ENV_VAR).map(PathBuf::from))
        };
        Self {
            dir,
            warnings: Vec::new(),
        }
    }

    pub fn disabled() -> Self {
        Self {
            dir: None,
            warnings: Vec::new(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entry_path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Returns the cached payload for the request, or computes, validates and
    /// stores it.
    pub fn fetch_or_compute(
        &mut self,
        command: &str,
        parameters: Params,
        compute: impl FnOnce() -> Result<Value, CliError>,
    ) -> Result<Value, CliError> {
        let probe = RunManifest::new(command, parameters.clone(), Value::Null);
        if let Some(path) = self.entry_path(&probe.key) {
            if path.exists() {
                match read_manifest(&path).and_then(|m| match m.defect(&probe) {
                    None => Ok(m),
                    Some(why) => Err(why),
                }) {
                    Ok(m) => return Ok(m.payload),
                    Err(why) => self.warnings.push(format!(
                        "cache entry {} rejected ({why}); recomputing",
                        path.display()
                    )),
                }
            }
        }
        let payload = compute()?;
        schema::validate(command, &payload).map_err(CliError::Internal)?;
        if let Some(path) = self.entry_path(&probe.key) {
            let manifest = RunManifest::new(command, parameters, payload.clone());
            if let Err(e) = write_manifest(&path, &manifest) {
                self.warnings.push(format!(
                    "could not write cache entry {}: {e}",
                    path.display()
                ));
            }
        }
        Ok(payload)
    }
}

fn read_manifest(path: &Path) -> Result<RunManifest, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| format!("unreadable: {e}"))
}

fn write_manifest(path: &Path, m: &RunManifest) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(
        &tmp,
        serde_json::to_string_pretty(m).expect("manifest serializes"),
    )?;
    fs::rename(tmp, path)
}
