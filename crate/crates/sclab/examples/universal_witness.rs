//! The n-state universal witness: one automaton family whose dialects meet
//! every complexity bound this crate measures. Letter a cycles the states,
//! b swaps the first two, c collapses the last onto the first, d idles.
//!
//! Run with: cargo run --example universal_witness

use sclab::dot::dfa_to_dot;
use sclab::transform::Transformation;
use sclab::witness::universal_witness;

fn main() {
    let n = 5;
    let u = universal_witness(n).unwrap();

    println!("U_{n} over {}: initial 0, final {}", u.alphabet(), n - 1);
    for letter in u.alphabet().iter() {
        let t = Transformation::from_images(u.row(letter.index).to_vec()).unwrap();
        println!("  {}: {}", letter.name, t);
    }

    println!("\nminimal as built: kappa = {}", u.quotient_complexity());
    println!(
        "every letter matters: effective alphabet = {}",
        u.effective_alphabet()
    );

    println!("\nGraphviz form:\n{}", dfa_to_dot(&u));
}
