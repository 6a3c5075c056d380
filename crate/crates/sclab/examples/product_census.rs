//! Concatenation through the ε-NFA and subset construction, with a census
//! of the reachable subsets: every one is {p} ∪ S with a non-final left
//! state, {p, 0} ∪ S with a final left state, or a plain S of right states.
//!
//! Run with: cargo run --example product_census

use sclab::ops::{concat, product_subset_census};
use sclab::witness::product_witness_pair;

fn main() {
    println!("m n | kappa  = m*2^n + 2^(n-1) | census (m-k)*2^n + k*2^(n-1) + 2^n");
    for m in 3..=5usize {
        for n in 3..=5usize {
            let (l, r) = product_witness_pair(m, n).unwrap();
            let kappa = concat(&l, &r).unwrap().state_count();
            let census = product_subset_census(&l, &r).unwrap();
            println!(
                "{m} {n} | {kappa:5}  (formula {:5}) | {:3} + {:2} + {:2} = {:3}, k = {}",
                m * (1 << n) + (1 << (n - 1)),
                census.nonfinal_head,
                census.final_head,
                census.right_only,
                census.total,
                census.left_finals,
            );
        }
    }

    // making more left states final shrinks the reachable count: k = 1 is
    // the worst case
    let (l, r) = product_witness_pair(4, 4).unwrap();
    let all_final = sclab::Dfa::new(
        l.state_count(),
        l.alphabet().clone(),
        (0..l.alphabet().len()).map(|x| l.row(x).to_vec()).collect(),
        l.initial(),
        1..l.state_count(),
    )
    .unwrap();
    let census = product_subset_census(&all_final, &r).unwrap();
    println!(
        "\nwith k = {} final left states the census total drops to {}",
        census.left_finals, census.total
    );
}
