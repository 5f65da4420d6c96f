//! Verification and timing drivers behind the `verify` and `bench` commands.

use std::time::Instant;

use rayon::prelude::*;

use crate::axis::{AxisOptions, AxisStrategy};
use crate::error::Result;
use crate::games::{GameKind, ShapleyVector};
use crate::gen;
use crate::geometry::PlanarPointSet;
use crate::solve::{solve, Algorithm, SolveOptions};

/// Comparisons below this absolute error always pass.
pub const ABS_FLOOR: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub games: Vec<GameKind>,
    pub sizes: Vec<usize>,
    pub instances: usize,
    pub seed: u64,
    /// Draw monotone chains instead of uniform points.
    pub chain: bool,
    pub tolerance: f64,
    pub fault_injection: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            games: GameKind::ALL.to_vec(),
            sizes: (3..=8).collect(),
            instances: 50,
            seed: 0,
            chain: false,
            tolerance: 1e-9,
            fault_injection: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GameCheck {
    pub game: GameKind,
    pub comparisons: usize,
    /// Largest `max|a - b| / max|b|` over all comparisons.
    pub max_discrepancy: f64,
    /// Largest `|sum - v(P)| / |v(P)|`.
    pub max_efficiency: f64,
    pub failures: Vec<String>,
}

impl GameCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub games: Vec<GameCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.games.iter().all(GameCheck::passed)
    }
}

/// Whether `got` matches `want` to `tol` relative to the largest entry of `want`.
pub fn within(got: &[f64], want: &[f64], tol: f64) -> (bool, f64) {
    let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let err = got.iter().zip(want).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let ok = got.len() == want.len() && err <= (tol * scale).max(ABS_FLOOR);
    (ok, if scale > 0.0 { err / scale } else { err })
}

fn efficiency(v: &ShapleyVector<f64>, tol: f64) -> (bool, f64) {
    let r = v.efficiency_residual().abs();
    let t = v.game_total.abs();
    (r <= (tol * t).max(ABS_FLOOR), if t > 0.0 { r / t } else { r })
}

fn instance_seed(seed: u64, game: GameKind, n: usize, i: usize) -> u64 {
    let g = GameKind::ALL.iter().position(|&k| k == game).unwrap() as u64;
    seed ^ (g << 48) ^ ((n as u64) << 24) ^ i as u64
}

pub fn verify_instance(game: GameKind, n: usize, seed: u64, chain: bool) -> Result<PlanarPointSet<f64>> {
    if chain {
        gen::chain_instance(n, seed, seed % 2 == 0)
    } else {
        gen::instance(game, n, seed)
    }
}

/// The reference a size gets compared against.
fn reference(game: GameKind, n: usize) -> Option<Algorithm> {
    if n <= 8 {
        Some(Algorithm::OraclePerm)
    } else if n <= 14 {
        Some(Algorithm::OracleSubset)
    } else {
        Algorithm::available(game)
            .iter()
            .copied()
            .find(|&a| matches!(a, Algorithm::Quadratic | Algorithm::Naive))
    }
}

struct Outcome {
    comparisons: usize,
    discrepancy: f64,
    efficiency: f64,
    failures: Vec<String>,
}

fn check_instance(cfg: &VerifyConfig, game: GameKind, n: usize, i: usize) -> Result<Outcome> {
    let seed = instance_seed(cfg.seed, game, n, i);
    let set = verify_instance(game, n, seed, cfg.chain)?;
    let base = SolveOptions {
        fault_injection: cfg.fault_injection,
        ..Default::default()
    };
    let reference = reference(game, n);
    let mut runs: Vec<(String, Algorithm, SolveOptions)> = Algorithm::available(game)
        .iter()
        .filter(|&&a| Some(a) != reference && (a != Algorithm::OracleSubset || n <= 14) && a != Algorithm::OraclePerm)
        .map(|&a| (a.tag().to_string(), a, base))
        .collect();
    if game.is_axis_game() {
        let general = AxisOptions {
            strategy: AxisStrategy::General,
            ..Default::default()
        };
        runs.push(("fast/general".into(), Algorithm::Fast, SolveOptions { axis: general, ..base }));
    }
    let mut out = Outcome {
        comparisons: 0,
        discrepancy: 0.0,
        efficiency: 0.0,
        failures: Vec::new(),
    };
    let want = match reference {
        Some(a) => Some(solve(game, &set, a, SolveOptions::default())?),
        None => None,
    };
    for (name, a, opts) in runs {
        let got = solve(game, &set, a, opts)?;
        let (ok, eff) = efficiency(&got, cfg.tolerance);
        out.efficiency = out.efficiency.max(eff);
        if !ok {
            out.failures.push(format!("{game} {name} n={n} seed={seed}: efficiency residual {eff:.3e}"));
        }
        if let Some(want) = &want {
            let (ok, d) = within(&got.values, &want.values, cfg.tolerance);
            out.comparisons += 1;
            out.discrepancy = out.discrepancy.max(d);
            if !ok {
                out.failures.push(format!("{game} {name} n={n} seed={seed}: discrepancy {d:.3e}"));
            }
        }
    }
    Ok(out)
}

/// Runs every applicable algorithm on random instances and compares them.
pub fn verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut games = Vec::new();
    for &game in &cfg.games {
        let jobs: Vec<(usize, usize)> = cfg
            .sizes
            .iter()
            .flat_map(|&n| (0..cfg.instances).map(move |i| (n, i)))
            .collect();
        let outcomes = jobs
            .par_iter()
            .map(|&(n, i)| check_instance(cfg, game, n, i))
            .collect::<Result<Vec<_>>>()?;
        let mut check = GameCheck {
            game,
            comparisons: 0,
            max_discrepancy: 0.0,
            max_efficiency: 0.0,
            failures: Vec::new(),
        };
        for o in outcomes {
            check.comparisons += o.comparisons;
            check.max_discrepancy = check.max_discrepancy.max(o.discrepancy);
            check.max_efficiency = check.max_efficiency.max(o.efficiency);
            check.failures.extend(o.failures);
        }
        games.push(check);
    }
    Ok(VerifyReport { games })
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub game: GameKind,
    pub algorithm: Algorithm,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub chain: bool,
    /// Best of this many timed runs per size.
    pub repeats: usize,
    /// Fit the slope to `time / log2(n)^2`.
    pub divide_log_squared: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slope: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub fn bench(cfg: &BenchConfig) -> Result<BenchReport> {
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        let set = verify_instance(cfg.game, n, cfg.seed ^ n as u64, cfg.chain)?;
        let mut best = f64::INFINITY;
        for _ in 0..cfg.repeats.max(1) {
            let t = Instant::now();
            let v = solve(
                cfg.game,
                &set,
                cfg.algorithm,
                SolveOptions {
                    skip_validation: true,
                    ..Default::default()
                },
            )?;
            best = best.min(t.elapsed().as_secs_f64());
            std::hint::black_box(v);
        }
        rows.push(BenchRow { n, seconds: best });
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            let scale = if cfg.divide_log_squared { (r.n as f64).log2().powi(2) } else { 1.0 };
            (r.n as f64, r.seconds / scale)
        })
        .collect();
    Ok(BenchReport {
        slope: loglog_slope(&pts),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x| (x, 3.0 * x * x)).collect();
        assert!((loglog_slope(&pts) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn small_verify_passes_and_fault_fails() {
        let mut cfg = VerifyConfig {
            games: vec![GameKind::HullArea, GameKind::AnchoredRects],
            sizes: vec![4, 5],
            instances: 3,
            ..Default::default()
        };
        assert!(verify(&cfg).unwrap().passed());
        cfg.fault_injection = true;
        let r = verify(&cfg).unwrap();
        assert!(!r.games[0].passed() && r.games[1].passed());
    }
}
