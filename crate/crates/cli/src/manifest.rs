use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::commands::Params;

/// Everything needed to re-run a command and check its payload.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub params: Params,
    pub seed: Option<u64>,
    pub generator: String,
    pub version: String,
    pub wall_clock_secs: f64,
    pub summary: String,
}

/// Command payload with its manifest alongside. The payload alone is
/// deterministic; the manifest records timing too.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    #[serde(flatten)]
    pub payload: Map<String, Value>,
    pub manifest: RunManifest,
}

impl Envelope {
    pub fn payload_json(&self) -> String {
        serde_json::to_string(&self.payload).expect("JSON values serialize")
    }
}
