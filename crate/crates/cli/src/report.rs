use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Phase {
    pub name: String,
    pub ms: f64,
}

/// Summary of one colouring run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// Hex SHA-256 of the input bytes.
    pub input_digest: String,
    pub mode: String,
    pub vertices: usize,
    pub colours_used: usize,
    pub palette_max: usize,
    pub verified: bool,
    pub wall_ms: f64,
    pub phases: Vec<Phase>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Records named phases against a single start time.
pub struct Timer {
    start: Instant,
    last: Instant,
    pub phases: Vec<Phase>,
}

impl Timer {
    pub fn start() -> Self {
        let now = Instant::now();
        Timer { start: now, last: now, phases: Vec::new() }
    }

    pub fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.phases.push(Phase { name: name.into(), ms: ms(now - self.last) });
        self.last = now;
    }

    pub fn wall_ms(&self) -> f64 {
        ms(self.start.elapsed())
    }
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
