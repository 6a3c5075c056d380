//! Permutational dialects: renaming and deleting letters of the universal
//! witness yields every operand the bench needs, without designing new
//! automata.
//!
//! Run with: cargo run --example dialects

use sclab::ops::BoolOp;
use sclab::witness::{boolean_witness_pair, dialect, universal_witness, PartialPermutation};

fn main() {
    let u = universal_witness(4).unwrap();

    for text in ["a,b,-,c", "b,a,-,d", "a,b", "d,c,b,a"] {
        let pi = PartialPermutation::parse(text).unwrap();
        let image = dialect(&u, &pi).unwrap();
        println!(
            "dialect {text:<9} -> alphabet {}, kappa = {}",
            image.alphabet(),
            image.quotient_complexity()
        );
    }

    println!("\nwitness pairs per operation (m = n = 4):");
    for op in [
        BoolOp::Union,
        BoolOp::SymmetricDifference,
        BoolOp::Difference,
        BoolOp::Intersection,
    ] {
        let (l, r) = boolean_witness_pair(op, 4, 4).unwrap();
        println!(
            "  {op:?}: left over {}, right over {}",
            l.alphabet(),
            r.alphabet()
        );
    }

    // deleting a letter loses words; renaming injectively never does
    let abc = dialect(&u, &PartialPermutation::parse("a,b,c").unwrap()).unwrap();
    println!(
        "\ndropping the idle letter d keeps the language hard: kappa = {}",
        abc.quotient_complexity()
    );
}
