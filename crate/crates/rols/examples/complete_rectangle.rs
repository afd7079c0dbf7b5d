//! Every Latin rectangle completes to a full square — the candidate sets
//! (symbols absent from each column) always admit a perfect matching. This
//! example shows the candidate sets of a partial grid and two different
//! random completions of it.
//!
//!     cargo run --example complete_rectangle

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rols::complete_rectangle;
use rols::grid::{candidate_sets, LatinGrid};

fn main() {
    let rect = LatinGrid::from_rows(
        5,
        &[
            vec![1, 2, 3, 4, 5],
            vec![3, 4, 5, 1, 2],
        ],
    )
    .unwrap();
    println!("2×5 rectangle:\n{rect}");

    println!("candidate symbols per column:");
    for (col, set) in candidate_sets(&rect).iter().enumerate() {
        println!("  column {}: {set:?}", col + 1);
    }

    let one = complete_rectangle(&rect, &mut ChaCha8Rng::seed_from_u64(1));
    let two = complete_rectangle(&rect, &mut ChaCha8Rng::seed_from_u64(2));
    println!("\none completion:\n{one}");
    println!("another (different matchings drawn):\n{two}");
    assert_eq!(one.row(0), rect.row(0));
    assert_eq!(one.row(1), rect.row(1));

    // A nearly full rectangle has no freedom left: with one row missing the
    // candidate sets are singletons and the completion is forced.
    let forced_rows: Vec<Vec<u16>> = (0..4).map(|i| one.row(i).to_vec()).collect();
    let forced = LatinGrid::from_rows(5, &forced_rows).unwrap();
    println!("candidate sets with one row to go: {:?}", candidate_sets(&forced));
    assert_eq!(complete_rectangle(&forced, &mut ChaCha8Rng::seed_from_u64(3)), one);
    println!("…and the forced completion reproduces the square.");
}
