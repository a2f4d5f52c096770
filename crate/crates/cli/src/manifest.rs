//! Run manifest: the full resolved configuration of a run plus timing.
//!
//! Re-running the flags recorded here reproduces the data payload
//! bit-exactly; the manifest is the only output that carries timing.

use serde::Serialize;

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    /// Every default resolved.
    pub config: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tool_version: String,
    pub duration_ms: u64,
}
