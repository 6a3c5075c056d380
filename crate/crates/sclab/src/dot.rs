//! Graphviz export.
//!
//! The drawing conventions are the textbook ones: the
//! initial state gets an incoming edge from an invisible point, final
//! states are double circles, and parallel edges collapse into one edge
//! listing its letters.

use std::fmt::Write;

use crate::dfa::Dfa;

/// Renders the DFA as a `digraph`, deterministically: states ascending,
/// letters in alphabet order.
pub fn dfa_to_dot(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph dfa {{");
    let _ = writeln!(out, "  rankdir = LR;");
    let _ = writeln!(out, "  node [shape = circle];");
    for q in d.finals() {
        let _ = writeln!(out, "  {q} [shape = doublecircle];");
    }
    let _ = writeln!(out, "  __start [shape = point];");
    let _ = writeln!(out, "  __start -> {};", d.initial());
    for q in 0..d.state_count() {
        for target in 0..d.state_count() {
            let letters: Vec<String> = d
                .alphabet()
                .iter()
                .filter(|l| d.step(q, l.index) == target)
                .map(|l| l.name.to_string())
                .collect();
            if !letters.is_empty() {
                let _ = writeln!(out, "  {q} -> {target} [label = \"{}\"];", letters.join(","));
            }
        }
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use crate::fixtures;

    #[test]
    fn fixture_renders_with_textbook_conventions() {
        let dot = super::dfa_to_dot(&fixtures::ends_with_b());
        assert_eq!(
            dot,
            "digraph dfa {\n\
             \x20 rankdir = LR;\n\
             \x20 node [shape = circle];\n\
             \x20 1 [shape = doublecircle];\n\
             \x20 __start [shape = point];\n\
             \x20 __start -> 0;\n\
             \x20 0 -> 0 [label = \"a\"];\n\
             \x20 0 -> 1 [label = \"b\"];\n\
             \x20 1 -> 0 [label = \"a\"];\n\
             \x20 1 -> 1 [label = \"b\"];\n\
             }\n"
        );
    }

    #[test]
    fn parallel_edges_share_one_label() {
        let dot = super::dfa_to_dot(&fixtures::ends_with_b_completed());
        assert!(dot.contains("2 -> 2 [label = \"a,b,c\"];"));
    }
}
