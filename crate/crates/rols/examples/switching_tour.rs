//! A tour of the five switch moves — the local perturbations behind the
//! hill climbs. Each move swaps two rows, columns, or symbols along one
//! cycle (or path, on rectangles) and leaves the grid Latin; applied twice,
//! a cycle move undoes itself.
//!
//!     cargo run --example switching_tour

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rols::grid::LatinGrid;
use rols::switching::{random_move, SwitchMove};
use rols::self_orthogonality;

fn main() {
    let a = LatinGrid::from_rows(
        5,
        &[
            vec![4, 3, 2, 5, 1],
            vec![5, 1, 3, 2, 4],
            vec![3, 4, 5, 1, 2],
            vec![1, 2, 4, 3, 5],
            vec![2, 5, 1, 4, 3],
        ],
    )
    .unwrap();
    println!("start (r against own transpose = {}):\n{a}", self_orthogonality(&a).unwrap());

    // A row cycle: swap symbols of rows 2 and 4 along one cycle of their
    // permutation. Touches only those two rows.
    let mv = SwitchMove::row_cycle(&a, 1, 3, 0).unwrap();
    let after = mv.apply(&a);
    println!(
        "after a {} touching {} cells: r = {}\n{after}",
        mv.kind(),
        mv.cells().len(),
        self_orthogonality(&after).unwrap()
    );

    // Cycle moves are involutions: the same parameters undo the move.
    let back = SwitchMove::row_cycle(&after, 1, 3, 0).unwrap().apply(&after);
    assert_eq!(back, a);
    println!("the same row cycle applied again restores the start\n");

    // A symbol cycle: exchange symbols 2 and 3 along their alternating
    // row/column cycle through a chosen cell.
    let mv = SwitchMove::symbol_cycle(&a, 2, 3, (0, 1)).unwrap();
    let after = mv.apply(&a);
    println!(
        "after a {} through {:?}: r = {}\n{after}",
        mv.kind(),
        mv.cells(),
        self_orthogonality(&after).unwrap()
    );

    // On rectangles, column and symbol switches run along open paths
    // instead of closed cycles.
    let rect = LatinGrid::from_rows(
        5,
        &[
            vec![4, 3, 2, 5, 1],
            vec![5, 1, 3, 2, 4],
            vec![3, 4, 5, 1, 2],
            vec![1, 2, 4, 3, 5],
        ],
    )
    .unwrap();
    let mv = SwitchMove::column_path(&rect, 0, 2, 3).unwrap();
    println!("a {} on a 4×5 rectangle rewrites cells {:?}", mv.kind(), mv.cells());
    println!("{}", mv.apply(&rect));

    // The climbs just draw these uniformly; every draw keeps the grid Latin.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut g = a.clone();
    for _ in 0..1000 {
        g = random_move(&g, &mut rng).apply(&g);
    }
    g.check().expect("a thousand random moves later, still Latin");
    println!("1000 random moves later the square is still Latin, r = {}", self_orthogonality(&g).unwrap());
}
