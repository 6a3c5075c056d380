//! Shared helpers for the integration suites: random automata, word
//! enumeration, language membership from first principles, and an
//! independent brute-force minimizer used as the oracle against the
//! production partition refinement.
//!
//! Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::Rng;

use sclab::{Alphabet, Dfa, Nfa};

pub fn random_dfa(rng: &mut StdRng, max_states: usize, max_letters: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_letters);
    random_dfa_exact(rng, n, &"abcd".chars().take(k).collect::<Vec<_>>())
}

pub fn random_dfa_exact(rng: &mut StdRng, n: usize, names: &[char]) -> Dfa {
    let alphabet = Alphabet::new(names.iter().copied()).unwrap();
    let delta = (0..names.len())
        .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let initial = rng.gen_range(0..n);
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(n, alphabet, delta, initial, finals).unwrap()
}

pub fn random_nfa(rng: &mut StdRng, max_states: usize, max_letters: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_letters);
    let alphabet = Alphabet::new("abcd".chars().take(k)).unwrap();
    let initials: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let with_eps = rng.gen_bool(0.5);
    let mut nfa = if with_eps {
        Nfa::with_epsilon(n, alphabet, initials, finals).unwrap()
    } else {
        Nfa::new(n, alphabet, initials, finals).unwrap()
    };
    for from in 0..n {
        for x in 0..k {
            for to in 0..n {
                if rng.gen_bool(0.3) {
                    nfa.add_transition(from, x, to).unwrap();
                }
            }
        }
        if with_eps {
            for to in 0..n {
                if from != to && rng.gen_bool(0.15) {
                    nfa.add_epsilon(from, to).unwrap();
                }
            }
        }
    }
    nfa
}

/// Every word over `names` of length at most `max_len`, shortest first.
pub fn words_over(names: &[char], max_len: usize) -> Vec<Vec<char>> {
    let mut words: Vec<Vec<char>> = vec![Vec::new()];
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * names.len());
        for w in &layer {
            for &c in names {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}

/// Membership of a word over a possibly larger alphabet: letters the DFA
/// does not know exclude the word from the language.
pub fn member_over(d: &Dfa, word: &[char]) -> bool {
    let mut state = d.initial();
    for &c in word {
        match d.alphabet().position_of(c) {
            Some(x) => state = d.step(state, x),
            None => return false,
        }
    }
    d.is_final(state)
}

/// w ∈ L1 · L2, straight from the definition: some split puts the prefix in
/// L1 and the suffix in L2.
pub fn concat_member(d1: &Dfa, d2: &Dfa, word: &[char]) -> bool {
    (0..=word.len()).any(|i| member_over(d1, &word[..i]) && member_over(d2, &word[i..]))
}

/// w ∈ L*, by dynamic programming over prefix lengths.
pub fn star_member(d: &Dfa, word: &[char]) -> bool {
    let n = word.len();
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for i in 1..=n {
        reachable[i] = (0..i).any(|j| reachable[j] && member_over(d, &word[j..i]));
    }
    reachable[n]
}

/// Number of distinct residual languages among prefixes, telling residuals
/// apart by suffixes. Exact for the language's complexity when `names` is
/// the language's own alphabet and both length bounds cover the reachable
/// and distinguishable depth.
pub fn residual_count(
    member: impl Fn(&[char]) -> bool,
    names: &[char],
    prefix_len: usize,
    suffix_len: usize,
) -> usize {
    let suffixes = words_over(names, suffix_len);
    let mut signatures: HashSet<Vec<bool>> = HashSet::new();
    for prefix in words_over(names, prefix_len) {
        let signature = suffixes
            .iter()
            .map(|suffix| {
                let mut w = prefix.clone();
                w.extend(suffix);
                member(&w)
            })
            .collect();
        signatures.insert(signature);
    }
    signatures.len()
}

/// Independent minimizer used as the test oracle.
///
/// Distinguishability is decided the brute-force way: every word of length
/// at most n-1 is applied to all states at once (words whose action on the
/// state set repeats an earlier one are skipped, which loses nothing), and
/// a pair of states is separated when some word drives exactly one of them
/// into a final state. Indistinguishable states are then merged, the
/// quotient is trimmed to the classes reachable from the initial one, and
/// classes are renumbered breadth-first with letters in alphabet order:
/// the same canonical order the production minimizer promises, arrived at
/// independently.
pub fn brute_force_minimize(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let k = d.alphabet().len();

    let mut distinct = vec![vec![false; n]; n];
    let mut remaining = n * (n - 1) / 2;
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue: Vec<(Vec<usize>, usize)> = vec![(identity, 0)];
    let mut head = 0;
    while head < queue.len() && remaining > 0 {
        let (action, depth) = queue[head].clone();
        head += 1;
        for p in 0..n {
            for q in 0..p {
                if !distinct[p][q] && d.is_final(action[p]) != d.is_final(action[q]) {
                    distinct[p][q] = true;
                    distinct[q][p] = true;
                    remaining -= 1;
                }
            }
        }
        if depth + 1 < n {
            for x in 0..k {
                let next: Vec<usize> = action.iter().map(|&s| d.step(s, x)).collect();
                if seen.insert(next.clone()) {
                    queue.push((next, depth + 1));
                }
            }
        }
    }

    // group states by their first indistinguishable representative
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for q in 0..n {
        match reps.iter().position(|&r| !distinct[r][q]) {
            Some(c) => class_of[q] = c,
            None => {
                class_of[q] = reps.len();
                reps.push(q);
            }
        }
    }

    // breadth-first over classes from the initial one
    let mut number: HashMap<usize, usize> = HashMap::new();
    let mut order: Vec<usize> = vec![class_of[d.initial()]];
    number.insert(class_of[d.initial()], 0);
    let mut head = 0;
    while head < order.len() {
        let class = order[head];
        head += 1;
        for x in 0..k {
            let target = class_of[d.step(reps[class], x)];
            if let std::collections::hash_map::Entry::Vacant(slot) = number.entry(target) {
                slot.insert(order.len());
                order.push(target);
            }
        }
    }

    let delta = (0..k)
        .map(|x| {
            order
                .iter()
                .map(|&class| number[&class_of[d.step(reps[class], x)]])
                .collect()
        })
        .collect();
    let finals = order
        .iter()
        .enumerate()
        .filter(|&(_, &class)| d.is_final(reps[class]))
        .map(|(i, _)| i);
    Dfa::new(order.len(), d.alphabet().clone(), delta, 0, finals).unwrap()
}
