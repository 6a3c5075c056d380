//! DFA minimization, canonical state numbering and language equivalence.
//!
//! Minimization trims unreachable states, merges equivalent ones by
//! partition refinement, and renumbers the result by a breadth-first search
//! from the initial state that explores letters in alphabet order. The
//! canonical numbering makes structural equality (`==`) a decision procedure
//! for isomorphism of minimal DFAs over the same alphabet.

use std::collections::HashMap;

use crate::dfa::Dfa;
use crate::state_set::StateId;

impl Dfa {
    /// The canonical minimal DFA for the same language over the same
    /// alphabet.
    pub fn minimize(&self) -> Dfa {
        // breadth-first reachable states, in discovery order
        let mut order: Vec<StateId> = vec![self.initial()];
        let mut seen = vec![false; self.state_count()];
        seen[self.initial()] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for x in 0..self.alphabet().len() {
                let t = self.step(q, x);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }

        // Moore-style partition refinement on the reachable part. Classes
        // are renumbered by first occurrence along `order`, which keeps each
        // round deterministic.
        let mut class: Vec<usize> = vec![usize::MAX; self.state_count()];
        let mut count = assign_classes(&order, &mut class, |q| usize::from(self.is_final(q)));
        loop {
            let signature = |q: StateId| {
                let mut sig = Vec::with_capacity(self.alphabet().len() + 1);
                sig.push(class[q]);
                sig.extend((0..self.alphabet().len()).map(|x| class[self.step(q, x)]));
                sig
            };
            let mut next: Vec<usize> = vec![usize::MAX; self.state_count()];
            let new_count = assign_classes(&order, &mut next, signature);
            let done = new_count == count;
            class = next;
            count = new_count;
            if done {
                break;
            }
        }

        // canonical BFS renumbering over the quotient
        let repr: Vec<StateId> = {
            let mut repr = vec![usize::MAX; count];
            for &q in order.iter().rev() {
                repr[class[q]] = q;
            }
            repr
        };
        let mut number = vec![usize::MAX; count];
        let mut by_number: Vec<usize> = vec![class[self.initial()]];
        number[class[self.initial()]] = 0;
        let mut head = 0;
        while head < by_number.len() {
            let c = by_number[head];
            head += 1;
            for x in 0..self.alphabet().len() {
                let t = class[self.step(repr[c], x)];
                if number[t] == usize::MAX {
                    number[t] = by_number.len();
                    by_number.push(t);
                }
            }
        }

        let delta = (0..self.alphabet().len())
            .map(|x| {
                by_number
                    .iter()
                    .map(|&c| number[class[self.step(repr[c], x)]])
                    .collect()
            })
            .collect();
        let finals = by_number
            .iter()
            .enumerate()
            .filter(|&(_, &c)| self.is_final(repr[c]))
            .map(|(i, _)| i);
        Dfa::new(count, self.alphabet().clone(), delta, 0, finals)
            .expect("quotient of a valid DFA is valid")
    }

    /// The canonical minimal DFA over the language's own alphabet: letters
    /// outside the effective alphabet are dropped before minimizing.
    ///
    /// Every complexity measurement in this crate goes through here, so the
    /// restriction step cannot be skipped at any call site.
    pub fn normalize(&self) -> Dfa {
        self.restrict(&self.effective_alphabet())
            .expect("effective alphabet is a subset")
            .minimize()
    }

    /// Quotient complexity of the accepted language: the number of states of
    /// the minimal complete DFA over the language's own alphabet.
    ///
    /// For languages with an empty effective alphabet (the empty language
    /// and `{ε}`) this is 1 by convention: the single-state DFA over the
    /// empty alphabet.
    pub fn quotient_complexity(&self) -> usize {
        self.normalize().state_count()
    }

    /// True iff both DFAs accept the same language as subsets of `Γ*`, where
    /// `Γ` is the union of the two alphabets.
    pub fn equivalent_to(&self, other: &Dfa) -> bool {
        let gamma = self.alphabet().union(other.alphabet());
        let a = self.complete(&gamma).expect("own alphabet is a subset");
        let b = other.complete(&gamma).expect("own alphabet is a subset");
        a.minimize() == b.minimize()
    }
}

fn assign_classes<K, F>(order: &[StateId], class: &mut [usize], key: F) -> usize
where
    K: std::hash::Hash + Eq,
    F: Fn(StateId) -> K,
{
    let mut ids: HashMap<K, usize> = HashMap::new();
    for &q in order {
        let next = ids.len();
        class[q] = *ids.entry(key(q)).or_insert(next);
    }
    ids.len()
}
