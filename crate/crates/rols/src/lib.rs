//! Latin squares with a prescribed degree of orthogonality.
//!
//! Two Latin squares `A`, `B` of order `n` are *r-orthogonal* when the
//! superposition `{(A[i][j], B[i][j])}` contains exactly `r` distinct ordered
//! pairs. Classic orthogonal mates are the extreme case `r = n²`; sharing a
//! row pattern gives the other extreme `r = n`. A single square is
//! *r-self-orthogonal* when it is r-orthogonal to its own transpose.
//!
//! The crate provides:
//!
//! * [`grid`] — the `LatinGrid` container (squares and k×n rectangles),
//!   validation, orthogonality counting, and a plain-text interchange format;
//! * [`matching`] — bipartite maximum matching and small-weight assignment,
//!   the engine behind every row-extension step;
//! * [`switching`] — local moves (row/column/symbol cycles, column/symbol
//!   paths) that perturb a grid while keeping it Latin;
//! * [`construct`] — row-by-row builders: uniform-ish random pairs, and
//!   hill-climbing searches that hit an exact target `r`;
//! * [`randgen`] — a proper/improper incidence-cube sampler for near-uniform
//!   random Latin squares, plus Monte-Carlo estimates of expected
//!   orthogonality;
//! * [`spectrum`] — the feasibility oracle for `(n, r)` (known bounds and the
//!   finitely many exceptions), spectrum sweeps, and certificate files;
//! * [`cli`] — the `rols` command-line front end.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability.

pub mod cli;
pub mod construct;
pub mod grid;
pub mod matching;
pub mod randgen;
pub mod spectrum;
pub mod switching;

pub use construct::{
    complete_rectangle, extend_optimal, random_pair, random_self, target_pair, target_self,
    ConstructError, ConstructionResult, GreedyObjective, Outcome, SearchConfig,
};
pub use grid::{orthogonality, self_orthogonality, LatinGrid, Mode, PairSet};
pub use randgen::{estimate_expected, random_square, IncidenceCube, OrthogonalityEstimate};
pub use spectrum::{
    feasible, feasible_set, sweep, verify_certificate, Algorithm, Feasibility, SweepReport,
    SweepSpec,
};
