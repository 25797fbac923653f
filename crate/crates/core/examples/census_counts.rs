use std::time::Instant;

use birack_core::census::{enumerate_biracks, isomorphism_representatives};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for n in 1..=max {
        let start = Instant::now();
        let all = enumerate_biracks(n, max).expect("within cap");
        let reps = isomorphism_representatives(&all);
        println!(
            "n={n}: {} tables, {} up to isomorphism ({:?})",
            all.len(),
            reps.len(),
            start.elapsed()
        );
    }
}
