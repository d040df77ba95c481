use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Envelope around every JSON result.
///
/// The payload depends only on the command line and the bytes of its input
/// files, so the same invocation always prints the same document. `timing_ms`
/// is left out unless explicitly requested.
#[derive(Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub inputs_digest: String,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// SHA-256 over the echoed arguments and the contents of every input file.
pub fn inputs_digest(command: &[String], files: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for arg in command {
        h.update((arg.len() as u64).to_le_bytes());
        h.update(arg.as_bytes());
    }
    for f in files {
        h.update((f.len() as u64).to_le_bytes());
        h.update(f);
    }
    hex::encode(h.finalize())
}
