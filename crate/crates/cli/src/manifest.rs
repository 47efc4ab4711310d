//! Run manifests: a JSON record of every subcommand invocation (inputs,
//! cutoffs, tool version, wall time, produced files) written next to the CSV
//! outputs. Rerunning with the recorded inputs reproduces the CSV bodies
//! byte for byte; only the manifest's own timing fields differ.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

#[derive(Serialize)]
pub struct Manifest {
    pub subcommand: String,
    pub version: String,
    pub argv: Vec<String>,
    pub inputs: serde_json::Map<String, serde_json::Value>,
    pub outputs: Vec<PathBuf>,
    pub wall_time_s: f64,
    pub unix_time: u64,
    #[serde(skip)]
    started: Instant,
}

impl Manifest {
    pub fn new(subcommand: &str) -> Self {
        Self {
            subcommand: subcommand.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            argv: std::env::args().collect(),
            inputs: serde_json::Map::new(),
            outputs: Vec::new(),
            wall_time_s: 0.0,
            unix_time: 0,
            started: Instant::now(),
        }
    }

    pub fn input<V: Serialize>(&mut self, key: &str, value: V) -> &mut Self {
        self.inputs.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable input"),
        );
        self
    }

    pub fn output(&mut self, path: &Path) -> &mut Self {
        self.outputs.push(path.into());
        self
    }

    pub fn write(&mut self, out_dir: &Path) -> std::io::Result<()> {
        self.wall_time_s = self.started.elapsed().as_secs_f64();
        self.unix_time = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        std::fs::create_dir_all(out_dir)?;
        let path = out_dir.join(format!("{}_manifest.json", self.subcommand));
        std::fs::write(
            path,
            serde_json::to_string_pretty(self).expect("serializable manifest"),
        )
    }
}
