//! Feasibility of `(order, r)` combinations, sweep drivers that chart the
//! achievable spectrum empirically, and certificate files that make every
//! claimed value independently checkable.
//!
//! For a pair of order-`n` squares (`n ≥ 2`), the orthogonality `r(A, B)`
//! can take any value in `[n, n²]` **except** `n + 1` and `n² − 1`, minus
//! sixteen small-order exceptions (all at `n ≤ 6`). Measured against the
//! own transpose, the same window applies with its own twenty-six
//! exceptions (all at `n ≤ 7`) — and one genuinely open case: order 14
//! with `r = 193` is neither known to exist nor ruled out. [`feasible`]
//! encodes exactly this classification; [`sweep`] then charts how much of
//! the feasible window the randomized constructions actually reach.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::construct::{random_pair, random_self, target_pair, target_self, Outcome, SearchConfig};
use crate::grid::{
    missing_pairs, orthogonality, pair_to_text, parse_grid, parse_pair, self_orthogonality,
    LatinGrid, Mode, ParseError,
};

/// Pair-mode orders and values `r` for which no r-orthogonal pair exists
/// even though `r` lies in the window `[n, n²] \ {n+1, n²−1}`.
pub const PAIR_EXCEPTIONS: [(usize, usize); 16] = [
    (2, 4),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 7),
    (4, 10),
    (4, 11),
    (4, 13),
    (4, 14),
    (5, 8),
    (5, 9),
    (5, 20),
    (5, 22),
    (5, 23),
    (6, 33),
    (6, 36),
];

/// Self-mode exceptions: windows values `r` for which no square satisfies
/// `r(A, Aᵀ) = r` at the given order.
pub const SELF_EXCEPTIONS: [(usize, usize); 26] = [
    (2, 4),
    (3, 5),
    (3, 6),
    (3, 7),
    (3, 9),
    (4, 6),
    (4, 7),
    (4, 8),
    (4, 10),
    (4, 11),
    (4, 12),
    (4, 13),
    (4, 14),
    (5, 8),
    (5, 9),
    (5, 12),
    (5, 16),
    (5, 18),
    (5, 20),
    (5, 22),
    (5, 23),
    (6, 32),
    (6, 33),
    (6, 34),
    (6, 36),
    (7, 46),
];

/// The single undecided combination: order 14 against the transpose with
/// r = 193 (= 14² − 3). Searching for it is allowed; rejecting it is not.
const UNKNOWN_SELF: (usize, usize) = (14, 193);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Infeasible,
    /// Neither a construction nor a non-existence proof is known.
    Unknown,
}

/// Classifies whether some pair (or single square, in self mode) of order
/// `n` can have orthogonality exactly `r`.
///
/// Total over all inputs: out-of-window values are `Infeasible`, as is
/// every pair-mode query at order < 2 (two order-1 squares always superpose
/// to the single pair `(1, 1)`, so no spectrum exists to speak of; order 0
/// has no squares at all). Order 1 in self mode admits exactly `r = 1`.
pub fn feasible(n: usize, r: usize, mode: Mode) -> Feasibility {
    if n == 0 || (n == 1 && mode == Mode::Pair) {
        return Feasibility::Infeasible;
    }
    if r < n || r > n * n {
        return Feasibility::Infeasible;
    }
    if r == n + 1 || r == n * n - 1 {
        return Feasibility::Infeasible;
    }
    match mode {
        Mode::Pair => {
            if PAIR_EXCEPTIONS.contains(&(n, r)) {
                return Feasibility::Infeasible;
            }
        }
        Mode::SelfOrthogonal => {
            if (n, r) == UNKNOWN_SELF {
                return Feasibility::Unknown;
            }
            if SELF_EXCEPTIONS.contains(&(n, r)) {
                return Feasibility::Infeasible;
            }
        }
    }
    Feasibility::Feasible
}

/// A one-line explanation for an infeasible `(n, r, mode)`, `None` when the
/// combination is feasible or unknown.
pub fn infeasibility_reason(n: usize, r: usize, mode: Mode) -> Option<&'static str> {
    if feasible(n, r, mode) != Feasibility::Infeasible {
        return None;
    }
    Some(if n == 0 {
        "order must be at least 1"
    } else if n == 1 && mode == Mode::Pair {
        "order-1 squares always superpose to the single pair (1, 1); the pair spectrum starts at order 2"
    } else if r < n {
        "superposition always yields at least n distinct pairs (one per symbol of a row)"
    } else if r > n * n {
        "a square has only n² cells, so at most n² distinct pairs"
    } else if r == n + 1 {
        "r = n + 1 is never achievable at any order"
    } else if r == n * n - 1 {
        "r = n² − 1 is never achievable at any order"
    } else {
        "a known genuine exception: no such pair exists despite lying in the window"
    })
}

/// All `r` classified [`Feasibility::Feasible`] at this order, ascending.
/// The one `Unknown` value is excluded. Empty only for pair mode below
/// order 2.
pub fn feasible_set(n: usize, mode: Mode) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    (n..=n * n).filter(|&r| feasible(n, r, mode) == Feasibility::Feasible).collect()
}

/// The four spectrum-charting strategies: plain random construction or
/// targeted search, in pair or self mode. The compact tokens `a1`–`a4`
/// (random pair, targeted pair, random self, targeted self) are the
/// command-line names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    RandomPair,
    TargetedPair,
    RandomSelf,
    TargetedSelf,
}

impl Algorithm {
    pub fn mode(self) -> Mode {
        match self {
            Algorithm::RandomPair | Algorithm::TargetedPair => Mode::Pair,
            Algorithm::RandomSelf | Algorithm::TargetedSelf => Mode::SelfOrthogonal,
        }
    }

    /// Targeted strategies iterate the feasible values one by one; random
    /// ones spend the whole budget on independent runs.
    pub fn is_targeted(self) -> bool {
        matches!(self, Algorithm::TargetedPair | Algorithm::TargetedSelf)
    }

    pub fn token(self) -> &'static str {
        match self {
            Algorithm::RandomPair => "a1",
            Algorithm::TargetedPair => "a2",
            Algorithm::RandomSelf => "a3",
            Algorithm::TargetedSelf => "a4",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(Algorithm::RandomPair),
            "a2" => Ok(Algorithm::TargetedPair),
            "a3" => Ok(Algorithm::RandomSelf),
            "a4" => Ok(Algorithm::TargetedSelf),
            other => Err(format!("unknown algorithm `{other}` (expected a1, a2, a3, or a4)")),
        }
    }
}

/// Everything a sweep needs. `budget` counts random runs for the random
/// strategies and greedy restarts *per target* for the targeted ones.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub n: usize,
    pub algorithm: Algorithm,
    pub budget: u32,
    pub seed: u64,
    /// Worker threads; 1 (the default) runs everything on the caller.
    pub jobs: usize,
    /// Where certificates for achieved values are written; no files are
    /// produced when absent (results are still verified in memory).
    pub out_dir: Option<PathBuf>,
    /// Switch proposals per restart for the targeted strategies.
    pub max_switch_iters: u64,
}

impl SweepSpec {
    pub fn new(n: usize, algorithm: Algorithm, budget: u32, seed: u64) -> Self {
        SweepSpec {
            n,
            algorithm,
            budget,
            seed,
            jobs: 1,
            out_dir: None,
            max_switch_iters: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetStatus {
    Found,
    Exhausted,
}

/// One spectrum value's outcome within a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetReport {
    pub r: usize,
    pub status: TargetStatus,
    /// The derived seed that produced the hit (rerun it to regenerate the
    /// certificate), or the seed the failed search ran under.
    pub seed: u64,
    /// Random strategies: 1-based index of the first run that hit `r`, or
    /// the full budget. Targeted: greedy restarts consumed.
    pub attempts: u32,
    pub file: Option<PathBuf>,
}

/// The outcome of charting one order's spectrum with one strategy.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub n: usize,
    pub mode: Mode,
    pub algorithm: Algorithm,
    pub budget: u32,
    pub seed: u64,
    /// Total wall-clock time the sweep consumed.
    pub wall: Duration,
    /// One entry per feasible `r`, ascending.
    pub targets: Vec<TargetReport>,
}

impl SweepReport {
    /// The values actually hit, ascending.
    pub fn achieved(&self) -> Vec<usize> {
        self.targets
            .iter()
            .filter(|t| t.status == TargetStatus::Found)
            .map(|t| t.r)
            .collect()
    }

    /// Fraction of listed values hit, in `[0, 1]`.
    pub fn coverage(&self) -> f64 {
        if self.targets.is_empty() {
            return 0.0;
        }
        self.achieved().len() as f64 / self.targets.len() as f64
    }

    /// Serializes the report: one `key=value` header line, then one line
    /// per spectrum value. Everything after the header reproduces exactly
    /// from `(n, mode, algorithm, budget, seed)`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} mode={} algorithm={} budget={} seed={} targets={} found={} wall_ms={}\n",
            self.n,
            self.mode,
            self.algorithm,
            self.budget,
            self.seed,
            self.targets.len(),
            self.achieved().len(),
            self.wall.as_millis(),
        );
        for t in &self.targets {
            let status = match t.status {
                TargetStatus::Found => "found",
                TargetStatus::Exhausted => "exhausted",
            };
            let file = t
                .file
                .as_ref()
                .map_or_else(|| "-".to_string(), |p| p.display().to_string());
            out.push_str(&format!(
                "r={} status={} seed={} attempts={} file={}\n",
                t.r, status, t.seed, t.attempts, file
            ));
        }
        out
    }
}

/// Splits a master seed into independent per-run / per-target streams
/// (splitmix64 finalizer over a golden-ratio offset).
fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Charts the spectrum of one order with one strategy.
///
/// Random strategies (`a1`, `a3`) run `budget` independent constructions
/// and record, for every feasible `r`, the first run that produced it;
/// targeted strategies (`a2`, `a4`) iterate the feasible values and give
/// each a full targeted search with `budget` restarts. Every hit is
/// re-verified, and written as a certificate when `out_dir` is set.
/// Per-value exhaustion is recorded in the report, never raised.
///
/// Reports are deterministic functions of the spec (minus wall time),
/// regardless of `jobs`.
pub fn sweep(spec: &SweepSpec) -> SweepReport {
    assert!(spec.budget >= 1, "sweep budget must be positive");
    let start = Instant::now();
    let mode = spec.algorithm.mode();
    if let Some(dir) = &spec.out_dir {
        fs::create_dir_all(dir).expect("certificate directory must be creatable");
    }
    let rs = feasible_set(spec.n, mode);
    let targets = if spec.algorithm.is_targeted() {
        sweep_targeted(spec, &rs)
    } else {
        sweep_random(spec, &rs)
    };
    SweepReport {
        n: spec.n,
        mode,
        algorithm: spec.algorithm,
        budget: spec.budget,
        seed: spec.seed,
        wall: start.elapsed(),
        targets,
    }
}

fn run_jobs<T, F>(jobs: usize, inputs: Vec<T>, f: F) -> Vec<(T, usize, u32)>
where
    T: Copy + Send,
    F: Fn(T) -> (usize, u32) + Sync,
{
    if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| {
            inputs
                .into_par_iter()
                .map(|x| {
                    let (r, a) = f(x);
                    (x, r, a)
                })
                .collect()
        })
    } else {
        inputs
            .into_iter()
            .map(|x| {
                let (r, a) = f(x);
                (x, r, a)
            })
            .collect()
    }
}

/// Random-strategy sweep: `budget` independent runs, then certificates for
/// first hits regenerated from their recorded per-run seeds.
fn sweep_random(spec: &SweepSpec, rs: &[usize]) -> Vec<TargetReport> {
    let mode = spec.algorithm.mode();
    let runs: Vec<u32> = (1..=spec.budget).collect();
    let observed = run_jobs(spec.jobs, runs, |run| {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(spec.seed, u64::from(run)));
        let r = match mode {
            Mode::Pair => random_pair(spec.n, &mut rng).2,
            Mode::SelfOrthogonal => random_self(spec.n, &mut rng).1,
        };
        (r, run)
    });

    let mut first_hit: BTreeMap<usize, u32> = BTreeMap::new();
    for (run, r, _) in observed {
        first_hit.entry(r).and_modify(|idx| *idx = (*idx).min(run)).or_insert(run);
    }

    // Report rows: the feasible window, plus anything observed outside it
    // (possible only by hitting the open case — worth surfacing, not hiding).
    let all_rs: BTreeSet<usize> = rs.iter().copied().chain(first_hit.keys().copied()).collect();
    all_rs
        .into_iter()
        .map(|r| match first_hit.get(&r) {
            Some(&run) => {
                let run_seed = derive_seed(spec.seed, u64::from(run));
                let mut rng = ChaCha8Rng::seed_from_u64(run_seed);
                let (a, b) = match mode {
                    Mode::Pair => {
                        let (a, b, got) = random_pair(spec.n, &mut rng);
                        assert_eq!(got, r, "recorded run must replay identically");
                        (a, Some(b))
                    }
                    Mode::SelfOrthogonal => {
                        let (a, got) = random_self(spec.n, &mut rng);
                        assert_eq!(got, r, "recorded run must replay identically");
                        (a, None)
                    }
                };
                let file = write_report_certificate(spec, r, run_seed, &a, b.as_ref());
                TargetReport { r, status: TargetStatus::Found, seed: run_seed, attempts: run, file }
            }
            None => TargetReport {
                r,
                status: TargetStatus::Exhausted,
                seed: spec.seed,
                attempts: spec.budget,
                file: None,
            },
        })
        .collect()
}

/// Targeted-strategy sweep: one full search per feasible value, each with
/// its own derived seed and `budget` restarts.
fn sweep_targeted(spec: &SweepSpec, rs: &[usize]) -> Vec<TargetReport> {
    let mode = spec.algorithm.mode();
    let searched = run_jobs(spec.jobs, rs.to_vec(), |r| {
        let config = SearchConfig {
            target: r,
            seed: derive_seed(spec.seed, r as u64),
            max_switch_iters: spec.max_switch_iters,
            max_restarts: spec.budget,
            objective: crate::construct::GreedyObjective::Auto,
        };
        let result = match mode {
            Mode::Pair => target_pair(spec.n, &config),
            Mode::SelfOrthogonal => target_self(spec.n, &config),
        }
        .expect("sweep only searches feasible targets");
        let found = u32::from(result.is_found());
        (found as usize, result.attempts)
    });

    // Re-run the successful searches to materialize their grids. The search
    // is deterministic per seed, so this replays the recorded outcome.
    searched
        .into_iter()
        .map(|(r, found, attempts)| {
            let seed = derive_seed(spec.seed, r as u64);
            if found == 0 {
                return TargetReport {
                    r,
                    status: TargetStatus::Exhausted,
                    seed,
                    attempts,
                    file: None,
                };
            }
            let config = SearchConfig {
                target: r,
                seed,
                max_switch_iters: spec.max_switch_iters,
                max_restarts: spec.budget,
                objective: crate::construct::GreedyObjective::Auto,
            };
            let result = match mode {
                Mode::Pair => target_pair(spec.n, &config),
                Mode::SelfOrthogonal => target_self(spec.n, &config),
            }
            .expect("replay of a feasible target");
            let file = match &result.outcome {
                Outcome::Pair(a, b) => write_report_certificate(spec, r, seed, a, Some(b)),
                Outcome::Single(a) => write_report_certificate(spec, r, seed, a, None),
                Outcome::Exhausted => unreachable!("replay of a found target cannot exhaust"),
            };
            TargetReport { r, status: TargetStatus::Found, seed, attempts: result.attempts, file }
        })
        .collect()
}

fn write_report_certificate(
    spec: &SweepSpec,
    r: usize,
    seed: u64,
    a: &LatinGrid,
    b: Option<&LatinGrid>,
) -> Option<PathBuf> {
    let dir = spec.out_dir.as_ref()?;
    let mode = spec.algorithm.mode();
    let path = dir.join(certificate_file_name(spec.n, r, mode));
    write_certificate(&path, a, b, r, seed).expect("certificate write must succeed");
    Some(path)
}

/// Canonical certificate file name: `<mode>-n<order>-r<value>.txt`.
pub fn certificate_file_name(n: usize, r: usize, mode: Mode) -> String {
    format!("{mode}-n{n}-r{r}.txt")
}

/// The full text of a certificate: a `#`-comment header carrying the claim
/// and the seed that produced it, followed by the grid (self mode) or the
/// two grids separated by a blank line (pair mode).
pub fn certificate_text(a: &LatinGrid, b: Option<&LatinGrid>, r: usize, seed: u64) -> String {
    let mode = if b.is_some() { Mode::Pair } else { Mode::SelfOrthogonal };
    let body = match b {
        Some(b) => pair_to_text(a, b),
        None => a.to_text(),
    };
    format!("# n={} mode={} r={} seed={}\n{}", a.order(), mode, r, seed, body)
}

/// Writes a certificate atomically (temp file in the same directory, then
/// rename), so readers never observe a half-written claim.
pub fn write_certificate(
    path: &Path,
    a: &LatinGrid,
    b: Option<&LatinGrid>,
    r: usize,
    seed: u64,
) -> io::Result<()> {
    let tmp = path.with_extension("txt.tmp");
    fs::write(&tmp, certificate_text(a, b, r, seed))?;
    fs::rename(&tmp, path)
}

/// What a certificate turned out to contain, when it checks out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub mode: Mode,
    /// The `r=` claim in the header, when one was present.
    pub claimed: Option<usize>,
    /// The recomputed orthogonality — always the authority.
    pub computed: usize,
    /// The ordered pairs *not* realized by the superposition.
    pub missing: Vec<(u16, u16)>,
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot read certificate: {0}")]
    Io(#[from] io::Error),
    #[error("malformed certificate: {0}")]
    Parse(#[from] ParseError),
    #[error("header claims {field}={header}, but the grids have {field}={body}")]
    HeaderMismatch { field: &'static str, header: String, body: String },
    #[error("verification failed: header claims r={claimed}, recomputed r={computed}")]
    Failed { claimed: usize, computed: usize },
}

/// Re-checks a certificate file: the grid(s) must be Latin, the recomputed
/// orthogonality must match the header's `r=` claim (when present), and
/// any `n=`/`mode=` header fields must agree with the body. Single-grid
/// files are checked against their own transpose.
pub fn verify_certificate(path: &Path) -> Result<VerifyReport, VerifyError> {
    verify_certificate_text(&fs::read_to_string(path)?)
}

/// [`verify_certificate`] on in-memory text.
pub fn verify_certificate_text(text: &str) -> Result<VerifyReport, VerifyError> {
    let mut header: BTreeMap<&str, &str> = BTreeMap::new();
    let mut body = String::new();
    for line in text.lines() {
        let trimmed = line.trim_start();
        if let Some(comment) = trimmed.strip_prefix('#') {
            for token in comment.split_whitespace() {
                if let Some((key, value)) = token.split_once('=') {
                    header.insert(key, value);
                }
            }
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }

    // One grid or two? The first header line announces its own row count;
    // any content beyond those rows must be the second grid.
    let declared_rows: Option<usize> = body
        .lines()
        .find(|l| !l.trim().is_empty())
        .and_then(|l| l.split_whitespace().next())
        .and_then(|tok| tok.parse().ok());
    let non_blank = body.lines().filter(|l| !l.trim().is_empty()).count();
    let is_pair = matches!(declared_rows, Some(k) if non_blank > k + 1);

    let (a, b) = if is_pair {
        let (a, b) = parse_pair(&body)?;
        (a, Some(b))
    } else {
        (parse_grid(&body)?, None)
    };

    let mode = if b.is_some() { Mode::Pair } else { Mode::SelfOrthogonal };
    let (computed, missing) = match &b {
        Some(b) => (
            orthogonality(&a, b).expect("parsed pair has equal orders"),
            missing_pairs(&a, b).expect("parsed pair has equal orders"),
        ),
        None => {
            let t = a.transpose();
            (
                self_orthogonality(&a).expect("parsed grid is square"),
                missing_pairs(&a, &t).expect("transpose shares the order"),
            )
        }
    };

    if let Some(&h) = header.get("n") {
        if h != a.order().to_string() {
            return Err(VerifyError::HeaderMismatch {
                field: "n",
                header: h.to_string(),
                body: a.order().to_string(),
            });
        }
    }
    if let Some(&h) = header.get("mode") {
        if h != mode.to_string() {
            return Err(VerifyError::HeaderMismatch {
                field: "mode",
                header: h.to_string(),
                body: mode.to_string(),
            });
        }
    }
    let claimed = match header.get("r") {
        Some(&h) => Some(h.parse::<usize>().map_err(|_| VerifyError::HeaderMismatch {
            field: "r",
            header: h.to_string(),
            body: "an unsigned integer".to_string(),
        })?),
        None => None,
    };
    if let Some(c) = claimed {
        if c != computed {
            return Err(VerifyError::Failed { claimed: c, computed });
        }
    }
    Ok(VerifyReport { n: a.order(), mode, claimed, computed, missing })
}
