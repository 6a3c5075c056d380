//! Star and reversal sweeps on the two- and three-letter witness dialects.
//!
//! Run with: cargo run --example star_reverse

use sclab::ops::{reverse, star};
use sclab::witness::{dialect, universal_witness, PartialPermutation};

fn main() {
    println!("n | kappa(L_n(a,b)*)    vs 2^(n-1)+2^(n-2)");
    for n in 3..=8usize {
        let d = dialect(
            &universal_witness(n).unwrap(),
            &PartialPermutation::parse("a,b").unwrap(),
        )
        .unwrap();
        let measured = star(&d).unwrap().state_count();
        println!(
            "{n} | {measured:5} {}",
            if measured == (1 << (n - 1)) + (1 << (n - 2)) { "ok" } else { "MISMATCH" }
        );
    }

    println!("\nn | kappa(L_n(a,b,c) reversed) vs 2^n");
    for n in 3..=8usize {
        let d = dialect(
            &universal_witness(n).unwrap(),
            &PartialPermutation::parse("a,b,c").unwrap(),
        )
        .unwrap();
        let measured = reverse(&d).unwrap().state_count();
        println!(
            "{n} | {measured:5} {}",
            if measured == 1 << n { "ok" } else { "MISMATCH" }
        );
    }
}
