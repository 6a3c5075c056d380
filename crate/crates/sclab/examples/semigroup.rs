//! Transformations as algebra: the witness letters generate the full
//! transformation monoid, so the three-letter dialect has the largest
//! possible syntactic semigroup, n^n.
//!
//! Run with: cargo run --example semigroup

use sclab::atoms::syntactic_semigroup_size;
use sclab::transform::{default_semigroup_budget, generate_semigroup, Transformation};
use sclab::witness::{dialect, universal_witness, PartialPermutation};

fn main() {
    let n = 4;
    let cycle = Transformation::cycle(n, &[0, 1, 2, 3]).unwrap();
    let swap = Transformation::transposition(n, 0, 1).unwrap();
    let collapse = Transformation::point(n, n - 1, 0).unwrap();
    println!("generators: {cycle}, {swap}, {collapse}");

    // left action: the first factor acts first
    let product = cycle.compose(&swap).unwrap();
    println!("cycle then swap = {product}");

    let sg = generate_semigroup(
        &[cycle, swap, collapse],
        default_semigroup_budget(n),
    )
    .unwrap();
    println!("closure size at n={n}: {} (= {})", sg.len(), n.pow(n as u32));
    println!("identity generated along the way: {}", sg.contains(&Transformation::identity(n)));

    println!("\nsyntactic semigroup sizes of the three-letter witness:");
    for n in 3..=6usize {
        let d = dialect(
            &universal_witness(n).unwrap(),
            &PartialPermutation::parse("a,b,c").unwrap(),
        )
        .unwrap();
        println!("  n = {n}: {} (n^n = {})", syntactic_semigroup_size(&d).unwrap(), n.pow(n as u32));
    }
}
