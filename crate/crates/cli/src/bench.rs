//! Runtime scaling of the colouring pipelines. The exponent is the slope
//! of a least-squares line through `(ln n, ln t)`.

use std::time::Instant;

use nonrep::gen::{generate, GenKind, GenSpec};
use serde::{Deserialize, Serialize};

use crate::commands::Mode;
use crate::{CliError, CliResult};

pub const DEFAULT_SIZES: [usize; 5] = [1_000, 3_000, 10_000, 30_000, 100_000];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchPoint {
    pub n: usize,
    pub min_ms: f64,
    pub median_ms: f64,
    pub colours_max: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub corpus: String,
    pub mode: String,
    pub repeat: usize,
    pub points: Vec<BenchPoint>,
    pub exponent: f64,
    pub total_ms: f64,
}

pub fn mode_for(kind: GenKind) -> Mode {
    match kind {
        GenKind::Plane => Mode::Plane,
        GenKind::CactusEven | GenKind::Cycle => Mode::Cactus,
        GenKind::OuterplaneBiconnected => Mode::SingleBlock,
        _ => Mode::Outerplane,
    }
}

pub fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.max(1e-6).ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Times the pipeline matching `corpus` on `repeat` seeded instances of
/// each size. Instances run one after another so timings don't contend.
pub fn run_bench(corpus: GenKind, sizes: &[usize], repeat: usize, seed: u64) -> CliResult<BenchReport> {
    let start = Instant::now();
    let mode = mode_for(corpus);
    let mut points = Vec::new();
    for &n in sizes {
        let mut times = Vec::new();
        let mut colours_max = 0;
        for r in 0..repeat.max(1) {
            let g = generate(&GenSpec::new(corpus, n, seed.wrapping_add(r as u64)))?;
            let t = Instant::now();
            let c = mode.run(&g)?;
            times.push(t.elapsed().as_secs_f64() * 1e3);
            colours_max = colours_max.max(c.distinct_colours());
        }
        times.sort_by(f64::total_cmp);
        points.push(BenchPoint { n, min_ms: times[0], median_ms: times[times.len() / 2], colours_max });
    }
    let exponent = fit_exponent(&points.iter().map(|p| (p.n as f64, p.min_ms)).collect::<Vec<_>>());
    Ok(BenchReport {
        corpus: corpus.name().into(),
        mode: mode.name().into(),
        repeat,
        points,
        exponent,
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn check_exponent(report: &BenchReport, limit: f64) -> CliResult<()> {
    if report.exponent > limit {
        return Err(CliError::Scaling { exponent: report.exponent, limit });
    }
    Ok(())
}
