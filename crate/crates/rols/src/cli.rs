//! Command-line front end: random generation, targeted construction,
//! spectrum sweeps, expectation estimates, and certificate verification.
//!
//! Conventions shared by every subcommand:
//!
//! - machine-readable artifacts (grids, certificates, reports, estimate
//!   lines) go to standard output or to files; human-readable progress and
//!   diagnostics go to the error stream;
//! - the effective seed is always echoed (to the error stream), so any run
//!   can be reproduced even when the seed came from entropy — identical
//!   argument vectors including `--seed` yield byte-identical artifacts;
//! - exit code 0 is success, 1 means a search exhausted its budget or a
//!   certificate failed to verify, 2 means the request itself was bad
//!   (usage errors, infeasible targets).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

use crate::construct::{random_pair, random_self, target_pair, target_self, Outcome, SearchConfig};
use crate::grid::Mode;
use crate::randgen::estimate_expected;
use crate::spectrum::{
    certificate_text, sweep, verify_certificate, Algorithm, SweepSpec, VerifyReport, write_certificate,
};

const EXIT_OK: i32 = 0;
/// A search ran out of budget, or a certificate did not check out.
const EXIT_FAILED: i32 = 1;
/// The request itself was invalid: usage errors, infeasible targets.
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "rols",
    version,
    about = "Random construction, targeted search, and spectrum charting for r-orthogonal Latin squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random square pair (or single square) and certify its orthogonality
    Generate(GenerateArgs),
    /// Search for a pair (or single square) with an exact orthogonality r
    Target(TargetArgs),
    /// Chart how much of one order's feasible spectrum a strategy reaches
    Sweep(SweepArgs),
    /// Estimate the expected orthogonality of random squares
    Estimate(EstimateArgs),
    /// Re-check a certificate file against its own claim
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Order of the squares
    #[arg(short = 'n', long = "order")]
    order: usize,
    /// pair (two independent squares) or self (one square vs its transpose)
    #[arg(long)]
    mode: Option<Mode>,
    /// Random strategy token: a1 (random pair) or a3 (random self)
    #[arg(long)]
    algorithm: Option<Algorithm>,
    /// RNG seed; drawn from entropy when absent
    #[arg(long)]
    seed: Option<u64>,
    /// Write the certificate here instead of standard output
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TargetArgs {
    /// Order of the squares
    #[arg(short = 'n', long = "order")]
    order: usize,
    /// The exact orthogonality to hit
    #[arg(short = 'r', long = "target")]
    target: usize,
    /// pair or self
    #[arg(long, default_value = "pair")]
    mode: Mode,
    /// RNG seed; drawn from entropy when absent
    #[arg(long)]
    seed: Option<u64>,
    /// Switch proposals per greedy restart
    #[arg(long = "max-iters", default_value_t = 1_000_000)]
    max_iters: u64,
    /// Greedy restarts before giving up
    #[arg(long = "max-restarts", default_value_t = 100)]
    max_restarts: u32,
    /// Write the certificate here instead of standard output
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Order of the squares
    #[arg(short = 'n', long = "order")]
    order: usize,
    /// pair or self
    #[arg(long)]
    mode: Option<Mode>,
    /// Strategy token: a1/a3 random runs, a2/a4 targeted searches
    #[arg(long)]
    algorithm: Option<Algorithm>,
    /// Random runs (a1/a3) or restarts per target (a2/a4); defaults to
    /// 1000 runs or 100 restarts
    #[arg(long)]
    budget: Option<u32>,
    /// Climb iterations per restart before giving up (a2/a4 only)
    #[arg(long = "max-iters", default_value_t = 1_000_000)]
    max_iters: u64,
    /// RNG seed; drawn from entropy when absent
    #[arg(long)]
    seed: Option<u64>,
    /// Directory for one certificate per achieved r
    #[arg(long = "out-dir")]
    out_dir: Option<PathBuf>,
    /// Worker threads for independent targets/runs
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct EstimateArgs {
    /// Order of the squares
    #[arg(short = 'n', long = "order")]
    order: usize,
    /// pair or self
    #[arg(long, default_value = "pair")]
    mode: Mode,
    /// Independent samples to draw (at least 2)
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// RNG seed; drawn from entropy when absent
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate file to re-check
    path: PathBuf,
    /// Also list the ordered pairs the superposition misses
    #[arg(long)]
    missing: bool,
}

/// Parses and runs an argument vector, returning the process exit code.
/// The first element is the program name, as in `std::env::args_os`.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Target(args) => target(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Estimate(args) => estimate(args),
        Command::Verify(args) => verify(args),
    }
}

/// Reconciles `--mode` and `--algorithm`, defaulting to pair mode and the
/// matching random strategy when either is absent.
fn resolve_strategy(
    mode: Option<Mode>,
    algorithm: Option<Algorithm>,
) -> Result<(Mode, Algorithm), String> {
    match (mode, algorithm) {
        (Some(m), Some(a)) if a.mode() != m => Err(format!(
            "algorithm {a} works in {} mode, but --mode {m} was given",
            a.mode()
        )),
        (_, Some(a)) => Ok((a.mode(), a)),
        (Some(Mode::Pair), None) | (None, None) => Ok((Mode::Pair, Algorithm::RandomPair)),
        (Some(Mode::SelfOrthogonal), None) => Ok((Mode::SelfOrthogonal, Algorithm::RandomSelf)),
    }
}

fn effective_seed(seed: Option<u64>) -> u64 {
    let seed = seed.unwrap_or_else(|| rand::rng().random());
    eprintln!("seed={seed}");
    seed
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Prints a certificate to standard output, or writes it atomically to
/// `out` when given.
fn emit_certificate(
    out: Option<&PathBuf>,
    a: &crate::grid::LatinGrid,
    b: Option<&crate::grid::LatinGrid>,
    r: usize,
    seed: u64,
) -> i32 {
    match out {
        Some(path) => {
            if let Err(err) = write_certificate(path, a, b, r, seed) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return EXIT_FAILED;
            }
            eprintln!("wrote {}", path.display());
            EXIT_OK
        }
        None => {
            print!("{}", certificate_text(a, b, r, seed));
            EXIT_OK
        }
    }
}

fn generate(args: GenerateArgs) -> i32 {
    let (mode, algorithm) = match resolve_strategy(args.mode, args.algorithm) {
        Ok(pair) => pair,
        Err(message) => return usage_error(&message),
    };
    if algorithm.is_targeted() {
        return usage_error(&format!(
            "algorithm {algorithm} searches for a specific r; use the `target` subcommand"
        ));
    }
    if args.order == 0 || (args.order == 1 && mode == Mode::Pair) {
        return usage_error("generation needs order >= 1 (pair mode: order >= 2)");
    }
    let seed = effective_seed(args.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        Mode::Pair => {
            let (a, b, r) = random_pair(args.order, &mut rng);
            eprintln!("generated an order-{} pair with r={r}", args.order);
            emit_certificate(args.out.as_ref(), &a, Some(&b), r, seed)
        }
        Mode::SelfOrthogonal => {
            let (a, r) = random_self(args.order, &mut rng);
            eprintln!("generated an order-{} square with r={r} against its transpose", args.order);
            emit_certificate(args.out.as_ref(), &a, None, r, seed)
        }
    }
}

fn target(args: TargetArgs) -> i32 {
    let seed = effective_seed(args.seed);
    let config = SearchConfig {
        target: args.target,
        seed,
        max_switch_iters: args.max_iters,
        max_restarts: args.max_restarts,
        ..SearchConfig::new(args.target, seed)
    };
    let result = match args.mode {
        Mode::Pair => target_pair(args.order, &config),
        Mode::SelfOrthogonal => target_self(args.order, &config),
    };
    let result = match result {
        Ok(result) => result,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    match &result.outcome {
        Outcome::Pair(a, b) => {
            eprintln!("found r={} in {} attempt(s)", result.achieved_r, result.attempts);
            emit_certificate(args.out.as_ref(), a, Some(b), result.achieved_r, seed)
        }
        Outcome::Single(a) => {
            eprintln!("found r={} in {} attempt(s)", result.achieved_r, result.attempts);
            emit_certificate(args.out.as_ref(), a, None, result.achieved_r, seed)
        }
        Outcome::Exhausted => {
            eprintln!(
                "exhausted {} restart(s) without hitting r={}; closest reached r={}",
                result.attempts, args.target, result.achieved_r
            );
            EXIT_FAILED
        }
    }
}

fn run_sweep(args: SweepArgs) -> i32 {
    let (mode, algorithm) = match resolve_strategy(args.mode, args.algorithm) {
        Ok(pair) => pair,
        Err(message) => return usage_error(&message),
    };
    if args.order == 0 || (args.order == 1 && mode == Mode::Pair) {
        return usage_error("sweeps need order >= 1 (pair mode: order >= 2)");
    }
    let budget = match args.budget {
        Some(0) => return usage_error("--budget must be positive"),
        Some(b) => b,
        None if algorithm.is_targeted() => 100,
        None => 1000,
    };
    if args.max_iters == 0 {
        return usage_error("--max-iters must be positive");
    }
    let seed = effective_seed(args.seed);
    let mut spec = SweepSpec::new(args.order, algorithm, budget, seed);
    spec.jobs = args.jobs.max(1);
    spec.out_dir = args.out_dir;
    spec.max_switch_iters = args.max_iters;
    eprintln!(
        "sweeping order {} in {mode} mode with {algorithm} (budget {budget}, {} job(s))",
        args.order, spec.jobs
    );
    let report = sweep(&spec);
    eprintln!(
        "reached {} of {} feasible values in {} ms",
        report.achieved().len(),
        report.targets.len(),
        report.wall.as_millis()
    );
    print!("{}", report.to_text());
    EXIT_OK
}

fn estimate(args: EstimateArgs) -> i32 {
    if args.samples < 2 {
        return usage_error("--samples must be at least 2");
    }
    if args.order == 0 {
        return usage_error("--order must be at least 1");
    }
    let seed = effective_seed(args.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let est = estimate_expected(args.order, args.samples, args.mode, &mut rng);
    println!(
        "n={} mode={} samples={} mean={:.4} stddev={:.4}",
        est.order, est.mode, est.samples, est.mean, est.stddev
    );
    EXIT_OK
}

fn verify(args: VerifyArgs) -> i32 {
    match verify_certificate(&args.path) {
        Ok(VerifyReport { computed, missing, .. }) => {
            println!("OK r={computed}");
            if args.missing {
                for (x, y) in missing {
                    println!("missing {x} {y}");
                }
            }
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_FAILED
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn rols(args: &[&str]) -> i32 {
        run(std::iter::once("rols").chain(args.iter().copied()))
    }

    #[test]
    fn help_and_version_exit_cleanly() {
        assert_eq!(rols(&["--help"]), 0);
        assert_eq!(rols(&["--version"]), 0);
        assert_eq!(rols(&["target", "--help"]), 0);
    }

    #[test]
    fn usage_errors_exit_with_two() {
        assert_eq!(rols(&[]), 2);
        assert_eq!(rols(&["frobnicate"]), 2);
        assert_eq!(rols(&["target", "-n", "7"]), 2); // missing -r
        assert_eq!(rols(&["generate", "-n", "5", "--algorithm", "a2"]), 2);
        assert_eq!(rols(&["generate", "-n", "5", "--mode", "self", "--algorithm", "a1"]), 2);
        assert_eq!(rols(&["generate", "-n", "1"]), 2); // order-1 pair mode
        assert_eq!(rols(&["estimate", "-n", "4", "--samples", "1"]), 2);
        assert_eq!(rols(&["sweep", "-n", "4", "--budget", "0"]), 2);
        assert_eq!(rols(&["sweep", "-n", "4", "--max-iters", "0"]), 2);
    }

    #[test]
    fn infeasible_targets_exit_with_two() {
        // r = n + 1 never exists.
        assert_eq!(rols(&["target", "-n", "5", "-r", "6", "--seed", "1"]), 2);
        // A genuine exception.
        assert_eq!(rols(&["target", "-n", "3", "-r", "5", "--seed", "1"]), 2);
        // Out of window.
        assert_eq!(rols(&["target", "-n", "4", "-r", "99", "--mode", "self", "--seed", "1"]), 2);
    }

    #[test]
    fn generate_then_verify_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pair.txt");
        let path_str = path.to_str().unwrap();
        assert_eq!(rols(&["generate", "-n", "6", "--seed", "7", "-o", path_str]), 0);
        assert_eq!(rols(&["verify", path_str]), 0);
        assert_eq!(rols(&["verify", "--missing", path_str]), 0);

        let self_path = dir.path().join("self.txt");
        let self_str = self_path.to_str().unwrap();
        assert_eq!(
            rols(&["generate", "-n", "5", "--mode", "self", "--seed", "8", "-o", self_str]),
            0
        );
        assert_eq!(rols(&["verify", self_str]), 0);
    }

    #[test]
    fn identical_seeds_give_identical_files() {
        let dir = tempfile::tempdir().unwrap();
        let x = dir.path().join("x.txt");
        let y = dir.path().join("y.txt");
        for (path, seed) in [(&x, "42"), (&y, "42")] {
            assert_eq!(
                rols(&["generate", "-n", "7", "--seed", seed, "-o", path.to_str().unwrap()]),
                0
            );
        }
        assert_eq!(fs::read(&x).unwrap(), fs::read(&y).unwrap());
    }

    #[test]
    fn targeted_search_writes_a_verifiable_certificate() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("hit.txt");
        let path_str = path.to_str().unwrap();
        assert_eq!(
            rols(&["target", "-n", "4", "-r", "16", "--seed", "3", "-o", path_str]),
            0
        );
        assert_eq!(rols(&["verify", path_str]), 0);
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("# n=4 mode=pair r=16 seed=3\n"));
    }

    #[test]
    fn exhausted_search_exits_with_one() {
        // Tiny budget on a hard target: order 6 next to the missing mate.
        assert_eq!(
            rols(&[
                "target", "-n", "6", "-r", "34", "--seed", "1", "--max-iters", "5",
                "--max-restarts", "1",
            ]),
            1
        );
    }

    #[test]
    fn verify_failures_exit_with_one() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        fs::write(&path, "# n=3 mode=self r=9 seed=0\n3 3\n1 2 3\n2 3 1\n3 1 2\n").unwrap();
        assert_eq!(rols(&["verify", path.to_str().unwrap()]), 1);
        assert_eq!(rols(&["verify", "/nonexistent/cert.txt"]), 1);
    }

    #[test]
    fn sweep_prints_a_report() {
        assert_eq!(rols(&["sweep", "-n", "2", "--seed", "5", "--budget", "3"]), 0);
        assert_eq!(
            rols(&["sweep", "-n", "3", "--algorithm", "a4", "--seed", "5", "--budget", "5"]),
            0
        );
    }

    #[test]
    fn estimate_validates_and_runs() {
        assert_eq!(rols(&["estimate", "-n", "3", "--samples", "50", "--seed", "2"]), 0);
        assert_eq!(
            rols(&["estimate", "-n", "3", "--mode", "self", "--samples", "50", "--seed", "2"]),
            0
        );
    }
}
