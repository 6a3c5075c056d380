//! Reading an ε-NFA from its JSON form and determinizing it. The subset
//! construction materializes only reachable subsets; an empty subset, if
//! reached, becomes an ordinary sink state.
//!
//! Run with: cargo run --example determinize

use sclab::json::{dfa_to_string, nfa_from_str};

// the classic exponential case: words over {a,b} whose third-to-last
// letter is an 'a'
const NFA: &str = r#"{
    "alphabet": ["a", "b"],
    "states": 4,
    "initials": [0],
    "finals": [3],
    "transitions": {
        "a": [[0, 1], [2], [3], []],
        "b": [[0], [2], [3], []]
    }
}"#;

fn main() {
    let nfa = nfa_from_str(NFA).unwrap();
    println!(
        "NFA: {} states over {}, simulating directly:",
        nfa.state_count(),
        nfa.alphabet()
    );
    for word in ["ab", "aab", "abb", "ba", ""] {
        println!("  {word:?} -> {}", nfa.accepts_str(word).unwrap());
    }

    let det = nfa.determinization(1_000).unwrap();
    println!("\nsubset construction reached {} subsets:", det.subsets.len());
    for (id, subset) in det.subsets.iter().enumerate() {
        println!("  state {id} = {subset:?}");
    }

    let minimal = det.dfa.minimize();
    println!(
        "\nminimized to {} states:\n{}",
        minimal.state_count(),
        dfa_to_string(&minimal)
    );
}
