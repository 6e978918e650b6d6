use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputHash {
    pub name: String,
    pub sha256: String,
}

/// Provenance block embedded in every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<InputHash>,
    pub seed: u64,
    /// Wall-clock milliseconds, only with `--timing`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            inputs: Vec::new(),
            seed,
            elapsed_ms: None,
        }
    }

    pub fn record(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.push(InputHash {
            name: name.to_string(),
            sha256: sha256_hex(bytes),
        });
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
