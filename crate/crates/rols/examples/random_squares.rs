//! Sample Latin squares (approximately) uniformly with the ±1-move walk on
//! the 0/1 incidence cube, and estimate the expected orthogonality of
//! random squares — the ratio E[r]/n² settles near 0.63 for
//! independent pairs and near 0.395 against the own transpose.
//!
//!     cargo run --release --example random_squares [order] [samples]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rols::grid::Mode;
use rols::{estimate_expected, random_square};

fn main() {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().map_or(6, |s| s.parse().expect("order"));
    let samples: usize = args.next().map_or(2000, |s| s.parse().expect("samples"));

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let square = random_square(order, &mut rng);
    println!("one random square of order {order}:\n{square}");

    for mode in [Mode::Pair, Mode::SelfOrthogonal] {
        let est = estimate_expected(order, samples, mode, &mut rng);
        println!(
            "E[r] in {mode} mode ≈ {:.3} ± {:.3}  (ratio to n²: {:.4})",
            est.mean,
            est.stddev,
            est.mean / (order * order) as f64
        );
    }
}
