//! Search for squares measured against their own transpose: first a fully
//! self-orthogonal square (r(A, Aᵀ) = n², every ordered pair realized),
//! then an interior value to show the same machinery hits arbitrary
//! feasible targets.
//!
//!     cargo run --release --example self_orthogonal [order]

use rols::{self_orthogonality, target_self, Outcome, SearchConfig};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be a positive integer"))
        .unwrap_or(5);

    // Fully self-orthogonal: superposed on its transpose, the square
    // realizes all n² ordered pairs. Such squares exist for every order
    // except 2, 3, and 6.
    let full = order * order;
    match target_self(order, &SearchConfig::new(full, 5)).map(|r| r.outcome) {
        Ok(Outcome::Single(a)) => {
            println!("self-orthogonal square of order {order}:\n{a}");
            println!("r(A, Aᵀ) = {}", self_orthogonality(&a).unwrap());
        }
        Ok(_) => println!("no fully self-orthogonal square found within budget"),
        Err(err) => println!("rejected: {err}"),
    }

    // An interior target: twice the order is feasible for every order ≥ 4.
    let interior = 2 * order;
    match target_self(order, &SearchConfig::new(interior, 6)).map(|r| r.outcome) {
        Ok(Outcome::Single(a)) => {
            println!("\nsquare with r(A, Aᵀ) = {interior}:\n{a}");
        }
        Ok(_) => println!("\nr = {interior} not reached within budget"),
        Err(err) => println!("\nr = {interior} rejected: {err}"),
    }
}
