//! Chart one order's spectrum: which r in [n, n²] are achievable at all,
//! and which of them plain random construction actually stumbles on.
//!
//!     cargo run --release --example spectrum_sweep [order] [runs]
//!
//! At order 5 the feasible window is {5, 7, 10–19, 21, 25}; a few thousand
//! random runs find the central values instantly, while the extremes (5,
//! 25, and friends) essentially never appear — that gap is what the
//! targeted strategies (see the `target_search` example) are for.

use rols::grid::Mode;
use rols::spectrum::TargetStatus;
use rols::{feasible_set, sweep, Algorithm, SweepSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().map_or(5, |s| s.parse().expect("order"));
    let runs: u32 = args.next().map_or(5000, |s| s.parse().expect("runs"));

    println!("feasible r at order {order} (pair mode): {:?}", feasible_set(order, Mode::Pair));

    let spec = SweepSpec::new(order, Algorithm::RandomPair, runs, 2718);
    let report = sweep(&spec);
    println!("\n{}", report.to_text());

    let unseen: Vec<usize> = report
        .targets
        .iter()
        .filter(|t| t.status == TargetStatus::Exhausted)
        .map(|t| t.r)
        .collect();
    println!(
        "{} random runs reached {:.0}% of the window; never saw {unseen:?}",
        runs,
        100.0 * report.coverage()
    );
}
