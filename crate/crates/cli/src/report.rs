//! The TOML run report. Field order is fixed by the struct definitions so
//! identical runs produce byte-identical reports.

use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

#[derive(Serialize, Debug)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub records: usize,
    pub degrees: bool,
}

impl InputInfo {
    pub fn new(path: &Path, records: usize, degrees: bool) -> Result<Self> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
        Ok(Self {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
            records,
            degrees,
        })
    }
}

#[derive(Serialize, Debug)]
pub struct Timing {
    pub elapsed_seconds: f64,
}

#[derive(Serialize, Debug)]
pub struct Report<P, R> {
    pub command: &'static str,
    pub version: &'static str,
    pub input: InputInfo,
    pub parameters: P,
    pub result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl<P: Serialize, R: Serialize> Report<P, R> {
    pub fn new(command: &'static str, input: InputInfo, parameters: P, result: R) -> Self {
        Self {
            command,
            version: env!("CARGO_PKG_VERSION"),
            input,
            parameters,
            result,
            timing: None,
        }
    }

    pub fn with_timing(mut self, elapsed: Option<Duration>) -> Self {
        self.timing = elapsed.map(|d| Timing {
            elapsed_seconds: d.as_secs_f64(),
        });
        self
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = toml::to_string(self)
            .map_err(|e| CliError::validation(format!("cannot serialize report: {e}")))?;
        crate::table::write_file(path, &text)
    }
}
