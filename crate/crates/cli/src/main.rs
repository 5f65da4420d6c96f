mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use geoshapley::algebra::MultipointMode;
use geoshapley::axis::{AxisOptions, AxisStrategy};
use geoshapley::harness::{self, BenchConfig, VerifyConfig};
use geoshapley::{solve, Algorithm, GameKind, PointSet, ShapleyError, SolveOptions};

use output::Record;

#[derive(Parser)]
#[command(name = "geoshapley", version, about = "Exact Shapley values for geometric games on planar points")]
struct Cli {
    /// Worker threads (GEOSHAPLEY_THREADS takes precedence).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Shapley values of one point set.
    Compute {
        #[arg(long, value_parser = parse_game)]
        game: GameKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Evaluate rational series directly instead of by FFT.
        #[arg(long)]
        direct_eval: bool,
        /// Never use the chain solvers.
        #[arg(long, conflicts_with = "chain")]
        no_chain: bool,
        /// Require a monotone chain and use the chain solvers.
        #[arg(long)]
        chain: bool,
        /// Report no wall time, so output depends only on the input.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare every applicable algorithm on random instances.
    Verify {
        /// Comma-separated game names, or `all`.
        #[arg(long, default_value = "all")]
        games: String,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw monotone chains.
        #[arg(long)]
        chain: bool,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Time a doubling series and fit the log-log slope.
    Bench {
        #[arg(long, value_parser = parse_game)]
        game: GameKind,
        #[arg(long, default_value = "fast", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        /// First size of the series.
        #[arg(long, default_value_t = 500)]
        start: usize,
        /// Number of sizes, each twice the previous.
        #[arg(long, default_value_t = 4)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        chain: bool,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// Fit the slope to time / log2(n)^2.
        #[arg(long)]
        log_squared: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_game(s: &str) -> Result<GameKind, String> {
    s.parse().map_err(|e: ShapleyError| e.to_string())
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: ShapleyError| e.to_string())
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<ShapleyError>() {
        Some(ShapleyError::SizeLimit { .. }) => 3,
        Some(ShapleyError::Internal(_)) => 4,
        Some(_) => 2,
        None if e.downcast_ref::<VerifyFailed>().is_some() => 4,
        None => 1,
    }
}

#[derive(Debug)]
struct VerifyFailed;

impl std::fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for VerifyFailed {}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let threads = std::env::var("GEOSHAPLEY_THREADS")
        .ok()
        .map(|v| v.trim().parse::<usize>().context("GEOSHAPLEY_THREADS must be a number"))
        .transpose()?
        .or(cli.threads);
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("starting the worker pool")?;
    }
    match cli.command {
        Command::Compute {
            game,
            input,
            algorithm,
            format,
            output,
            direct_eval,
            no_chain,
            chain,
            no_timing,
        } => {
            let points = input::read_points(&input)?;
            let set = PointSet::new(points)?;
            let strategy = match (chain, no_chain) {
                (true, _) => AxisStrategy::Chain,
                (_, true) => AxisStrategy::General,
                _ => AxisStrategy::Auto,
            };
            let multipoint = if direct_eval { MultipointMode::Direct } else { MultipointMode::Fft };
            let opts = SolveOptions {
                axis: AxisOptions { strategy, multipoint },
                ..Default::default()
            };
            let t = Instant::now();
            let result = solve(game, &set, algorithm, opts)?;
            let ms = t.elapsed().as_secs_f64() * 1e3;
            let algorithm = if algorithm == Algorithm::Auto { Algorithm::Fast } else { algorithm };
            let rec = Record {
                game,
                algorithm,
                points: set.points(),
                result: &result,
                wall_time_ms: (!no_timing).then_some(ms),
            };
            let text = match format {
                Format::Json => rec.to_json(),
                Format::Csv => rec.to_csv(),
            };
            emit(&text, output.as_ref())
        }
        Command::Verify {
            games,
            n_min,
            n_max,
            instances,
            seed,
            chain,
            tolerance,
            inject_fault,
        } => {
            let games = if games == "all" {
                GameKind::ALL.to_vec()
            } else {
                games.split(',').map(|g| g.trim().parse()).collect::<geoshapley::Result<Vec<_>>>()?
            };
            let cfg = VerifyConfig {
                games,
                sizes: (n_min..=n_max).collect(),
                instances,
                seed,
                chain,
                tolerance,
                fault_injection: inject_fault,
            };
            let report = harness::verify(&cfg)?;
            for g in &report.games {
                println!(
                    "{:<26} comparisons={:<6} max_discrepancy={:.3e} max_efficiency={:.3e} {}",
                    g.game.tag(),
                    g.comparisons,
                    g.max_discrepancy,
                    g.max_efficiency,
                    if g.passed() { "PASS" } else { "FAIL" }
                );
                for f in g.failures.iter().take(5) {
                    println!("  {f}");
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(VerifyFailed.into())
            }
        }
        Command::Bench {
            game,
            algorithm,
            start,
            steps,
            seed,
            chain,
            repeats,
            log_squared,
            output,
        } => {
            let cfg = BenchConfig {
                game,
                algorithm,
                sizes: (0..steps).map(|k| start << k).collect(),
                seed,
                chain,
                repeats,
                divide_log_squared: log_squared,
            };
            let report = harness::bench(&cfg)?;
            let mut text = String::from("n,seconds\n");
            for r in &report.rows {
                text.push_str(&format!("{},{}\n", r.n, output::num(r.seconds)));
            }
            text.push_str(&format!("# game={game} algorithm={algorithm} slope={:.4}\n", report.slope));
            emit(&text, output.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
