//! Small hand-built automata used by the tests, the examples and the docs.

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;

/// Minimal two-state DFA for `{a,b}*b`: words over {a,b} ending in b.
pub fn ends_with_b() -> Dfa {
    Dfa::new(
        2,
        Alphabet::new(['a', 'b']).unwrap(),
        vec![vec![0, 0], vec![1, 1]],
        0,
        [1],
    )
    .unwrap()
}

/// Minimal two-state DFA for `{a,c}*c`: words over {a,c} ending in c.
pub fn ends_with_c() -> Dfa {
    Dfa::new(
        2,
        Alphabet::new(['a', 'c']).unwrap(),
        vec![vec![0, 0], vec![1, 1]],
        0,
        [1],
    )
    .unwrap()
}

/// [`ends_with_b`] completed over {a,b,c}: the sink state 2 absorbs c.
pub fn ends_with_b_completed() -> Dfa {
    Dfa::new(
        3,
        Alphabet::new(['a', 'b', 'c']).unwrap(),
        vec![vec![0, 0, 2], vec![1, 1, 2], vec![2, 2, 2]],
        0,
        [1],
    )
    .unwrap()
}

/// One-state DFA accepting every word over its alphabet.
pub fn sigma_star(names: &[char]) -> Dfa {
    let alphabet = Alphabet::new(names.iter().copied()).unwrap();
    let delta = vec![vec![0]; alphabet.len()];
    Dfa::new(1, alphabet, delta, 0, [0]).unwrap()
}

/// One-state DFA over the empty alphabet accepting exactly the empty word.
pub fn epsilon_language() -> Dfa {
    Dfa::new(1, Alphabet::empty(), vec![], 0, [0]).unwrap()
}
