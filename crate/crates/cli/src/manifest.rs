//! Run manifest: the resolved configuration plus a digest of every artifact
//! the run wrote. Reruns with an identical config produce identical
//! manifests, so the digest list doubles as a reproducibility check.

use serde::Serialize;
use sha2::{Digest as _, Sha256};

use crate::config::ExperimentConfig;

#[derive(Serialize)]
pub struct ManifestEntry {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct Manifest<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub format: &'a str,
    pub graph: String,
    pub master_seed: Option<u64>,
    /// Config echo with the output directory cleared: the same experiment
    /// written to two directories must produce identical bundles.
    pub config: ExperimentConfig,
    pub outputs: Vec<ManifestEntry>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

impl<'a> Manifest<'a> {
    pub fn new(
        command: &'a str,
        format: &'a str,
        config: &ExperimentConfig,
        files: &[(String, Vec<u8>)],
    ) -> Self {
        let mut echo = config.clone();
        echo.output_dir = None;
        let mut outputs: Vec<ManifestEntry> = files
            .iter()
            .map(|(path, bytes)| ManifestEntry {
                path: path.clone(),
                sha256: sha256_hex(bytes),
            })
            .collect();
        outputs.sort_by(|a, b| a.path.cmp(&b.path));
        Manifest {
            tool: "lexnet",
            version: env!("CARGO_PKG_VERSION"),
            command,
            format,
            graph: config.graph_id(),
            master_seed: config.master_seed,
            config: echo,
            outputs,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }
}
