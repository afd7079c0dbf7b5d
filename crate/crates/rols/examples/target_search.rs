//! Hit an exact orthogonality: search for a pair of order-7 squares whose
//! superposition realizes precisely 42 of the 49 possible ordered pairs.
//!
//!     cargo run --release --example target_search [order] [r]
//!
//! The search greedily builds a pair near the target (one optimal-extension
//! row at a time), then hill-climbs with random switch moves, restarting
//! from a fresh greedy pair whenever it stalls. Infeasible targets — like
//! r = n+1, which no pair of any order achieves — are rejected up front.

use rols::grid::missing_pairs;
use rols::spectrum::certificate_text;
use rols::{target_pair, ConstructError, Outcome, SearchConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().map_or(7, |s| s.parse().expect("order"));
    let target: usize = args.next().map_or(42, |s| s.parse().expect("target r"));

    let config = SearchConfig::new(target, 11);
    match target_pair(order, &config) {
        Ok(result) => match result.outcome {
            Outcome::Pair(a, b) => {
                println!("{}", certificate_text(&a, Some(&b), target, config.seed));
                let absent = missing_pairs(&a, &b).unwrap();
                println!("found in {} attempt(s); the {} unrealized pairs:", result.attempts, absent.len());
                println!("{absent:?}");
            }
            Outcome::Exhausted => println!(
                "budget exhausted; closest reached r = {} (try more restarts)",
                result.achieved_r
            ),
            Outcome::Single(_) => unreachable!("pair searches return pairs"),
        },
        Err(err @ ConstructError::InfeasibleTarget { .. }) => {
            println!("rejected: {err}");
        }
        Err(err) => println!("error: {err}"),
    }
}
