//! Two minimal two-state DFAs over *different* alphabets, combined by
//! completing each over the union alphabet and taking the direct product.
//! The union of two 2-state languages lands at six states, not the four
//! the same-alphabet folklore would suggest.
//!
//! Run with: cargo run --example completion

use sclab::ops::{boolean_op, direct_product, BoolOp};
use sclab::{fixtures, Alphabet};

fn main() {
    let ends_b = fixtures::ends_with_b(); // {a,b}*b
    let ends_c = fixtures::ends_with_c(); // {a,c}*c
    println!("left  operand over {}: kappa = {}", ends_b.alphabet(), ends_b.quotient_complexity());
    println!("right operand over {}: kappa = {}", ends_c.alphabet(), ends_c.quotient_complexity());

    // completing over the union alphabet adds one sink per side
    let gamma = Alphabet::new(['a', 'b', 'c']).unwrap();
    let completed = ends_b.complete(&gamma).unwrap();
    println!(
        "\ncompleted left operand has {} states over {} (sink added)",
        completed.state_count(),
        completed.alphabet()
    );
    println!(
        "its language did not change: effective alphabet is still {}",
        completed.effective_alphabet()
    );

    let product = direct_product(&ends_b, &ends_c, BoolOp::Union);
    println!("\nreachable union product states and their origins:");
    for (id, label) in product.labels.iter().enumerate() {
        let side = |s: Option<usize>| s.map_or("sink".to_string(), |q| q.to_string());
        println!(
            "  {id}: ({}, {}){}",
            side(label.left),
            side(label.right),
            if product.dfa.is_final(id) { "  [final]" } else { "" }
        );
    }

    let union = boolean_op(&ends_b, &ends_c, BoolOp::Union);
    println!("\nkappa(union) = {}", union.state_count());
    let intersection = boolean_op(&ends_b, &ends_c, BoolOp::Intersection);
    println!(
        "kappa(intersection) = {} (no word ends in both b and c)",
        intersection.state_count()
    );
}
