//! Timing grid for the decision procedure.

use std::time::{Duration, Instant};

use tcomp_core::pairgraph::{decide_on, PairGraph};
use tcomp_core::{families, Automaton, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchFamily {
    /// Uniformly random rows (`random N K SEED`).
    Random,
    /// `K - 1` random permutations plus one random 1-defect letter.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub letters: usize,
    pub seed: u64,
    pub reps: usize,
    pub family: BenchFamily,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![125, 250, 500, 1000],
            letters: 3,
            seed: 1,
            reps: 5,
            family: BenchFamily::Random,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub vertices: usize,
    pub permutation_letters: usize,
    pub roots: usize,
    pub totally_compatible: bool,
    /// Median over repetitions.
    pub build: Duration,
    pub search: Duration,
    pub total: Duration,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(total time) against log(n).
    pub slope: Option<f64>,
}

impl BenchReport {
    pub fn largest(&self) -> Option<&BenchRow> {
        self.rows.iter().max_by_key(|r| r.n)
    }
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn bench_automaton(config: &BenchConfig, n: usize) -> Result<Automaton> {
    match config.family {
        BenchFamily::Random => families::random_automaton(n, config.letters, config.seed),
        BenchFamily::Mixed => {
            families::random_mixed(n, config.letters.saturating_sub(1), config.seed)
        }
    }
}

pub fn run(config: &BenchConfig) -> Result<BenchReport> {
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let a = bench_automaton(config, n)?;
        let (mut builds, mut searches, mut totals) = (Vec::new(), Vec::new(), Vec::new());
        let mut last = None;
        for _ in 0..config.reps.max(1) {
            let start = Instant::now();
            let graph = PairGraph::build(&a);
            let built = Instant::now();
            let decision = decide_on(&graph);
            let done = Instant::now();
            builds.push(built - start);
            searches.push(done - built);
            totals.push(done - start);
            last = Some((
                graph.vertex_count(),
                graph.roots().count(),
                decision.is_totally_compatible(),
            ));
        }
        let (vertices, roots, totally_compatible) = last.unwrap();
        rows.push(BenchRow {
            n,
            vertices,
            permutation_letters: a.permutation_letters().len(),
            roots,
            totally_compatible,
            build: median(builds),
            search: median(searches),
            total: median(totals),
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.n as f64, r.total.as_secs_f64()))
        .collect();
    Ok(BenchReport {
        slope: loglog_slope(&points),
        rows,
    })
}

/// Least-squares slope of `ln y` against `ln x`. Needs two distinct `x`
/// values and positive coordinates.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
