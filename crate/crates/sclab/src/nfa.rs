//! Nondeterministic finite automata and the subset construction.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, LetterId};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::state_set::{StateId, StateSet};

/// Default ceiling on the number of subsets the determinization may
/// materialize before giving up with a resource error.
pub const DEFAULT_SUBSET_BUDGET: usize = 2_000_000;

/// An NFA with a set of initial states and, optionally, ε-transitions.
///
/// Transition sets may be empty, so an NFA can be "incomplete" without any
/// completion machinery. ε-transitions exist only when the automaton was
/// created with [`Nfa::with_epsilon`].
#[derive(Clone, Debug)]
pub struct Nfa {
    n: usize,
    alphabet: Alphabet,
    delta: Vec<Vec<StateSet>>,
    epsilon: Option<Vec<StateSet>>,
    initials: StateSet,
    finals: StateSet,
}

impl Nfa {
    /// An NFA with no transitions; add them with [`Nfa::add_transition`].
    pub fn new<I, F>(n: usize, alphabet: Alphabet, initials: I, finals: F) -> Result<Self>
    where
        I: IntoIterator<Item = StateId>,
        F: IntoIterator<Item = StateId>,
    {
        if n == 0 {
            return Err(Error::NoStates);
        }
        let mut init = StateSet::empty(n);
        for q in initials {
            check_state(q, n)?;
            init.insert(q);
        }
        let mut fin = StateSet::empty(n);
        for q in finals {
            check_state(q, n)?;
            fin.insert(q);
        }
        let delta = (0..alphabet.len())
            .map(|_| vec![StateSet::empty(n); n])
            .collect();
        Ok(Nfa {
            n,
            alphabet,
            delta,
            epsilon: None,
            initials: init,
            finals: fin,
        })
    }

    /// Same as [`Nfa::new`] but with ε-transitions enabled.
    pub fn with_epsilon<I, F>(n: usize, alphabet: Alphabet, initials: I, finals: F) -> Result<Self>
    where
        I: IntoIterator<Item = StateId>,
        F: IntoIterator<Item = StateId>,
    {
        let mut nfa = Self::new(n, alphabet, initials, finals)?;
        nfa.epsilon = Some(vec![StateSet::empty(nfa.n); nfa.n]);
        Ok(nfa)
    }

    /// Lifts a DFA into an NFA with the same language.
    pub fn from_dfa(d: &Dfa) -> Self {
        let mut nfa = Self::new(
            d.state_count(),
            d.alphabet().clone(),
            [d.initial()],
            d.finals(),
        )
        .expect("valid DFA");
        for x in 0..d.alphabet().len() {
            for q in 0..d.state_count() {
                nfa.add_transition(q, x, d.step(q, x)).unwrap();
            }
        }
        nfa
    }

    pub fn add_transition(&mut self, from: StateId, letter: LetterId, to: StateId) -> Result<()> {
        check_state(from, self.n)?;
        check_state(to, self.n)?;
        if letter >= self.alphabet.len() {
            return Err(Error::LetterIndexOutOfRange {
                index: letter,
                len: self.alphabet.len(),
            });
        }
        self.delta[letter][from].insert(to);
        Ok(())
    }

    /// Adds an ε-transition; only allowed on automata built with
    /// [`Nfa::with_epsilon`].
    pub fn add_epsilon(&mut self, from: StateId, to: StateId) -> Result<()> {
        check_state(from, self.n)?;
        check_state(to, self.n)?;
        match self.epsilon.as_mut() {
            Some(eps) => {
                eps[from].insert(to);
                Ok(())
            }
            None => Err(Error::EpsilonNotEnabled),
        }
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.is_some()
    }

    pub fn targets(&self, from: StateId, letter: LetterId) -> &StateSet {
        &self.delta[letter][from]
    }

    pub fn epsilon_targets(&self, from: StateId) -> Option<&StateSet> {
        self.epsilon.as_ref().map(|eps| &eps[from])
    }

    /// Extends `set` with everything reachable through ε-transitions.
    pub fn epsilon_closure(&self, set: &mut StateSet) {
        let Some(eps) = &self.epsilon else { return };
        let mut queue: Vec<StateId> = set.iter().collect();
        while let Some(q) = queue.pop() {
            for t in eps[q].iter() {
                if set.insert(t) {
                    queue.push(t);
                }
            }
        }
    }

    /// Direct membership test by simulating the set of active states.
    pub fn accepts(&self, word: &[LetterId]) -> Result<bool> {
        let mut current = self.initials.clone();
        self.epsilon_closure(&mut current);
        for &x in word {
            if x >= self.alphabet.len() {
                return Err(Error::LetterIndexOutOfRange {
                    index: x,
                    len: self.alphabet.len(),
                });
            }
            let mut next = StateSet::empty(self.n);
            for q in current.iter() {
                next.union_with(&self.delta[x][q]);
            }
            self.epsilon_closure(&mut next);
            current = next;
        }
        Ok(current.intersects(&self.finals))
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        self.accepts(&self.alphabet.word_from_str(word)?)
    }

    /// Subset construction with the default budget; see
    /// [`Nfa::determinize_bounded`].
    pub fn determinize(&self) -> Result<Dfa> {
        self.determinize_bounded(DEFAULT_SUBSET_BUDGET)
    }

    /// Accessible subset construction with ε-closure.
    ///
    /// Only subsets reachable from the ε-closure of the initial states are
    /// materialized; the empty subset, if reached, becomes an ordinary sink
    /// state. Exceeding `budget` materialized subsets is a resource error.
    pub fn determinize_bounded(&self, budget: usize) -> Result<Dfa> {
        Ok(self.determinization(budget)?.dfa)
    }

    /// Like [`Nfa::determinize_bounded`], but keeps the subset behind each
    /// DFA state for later inspection.
    pub fn determinization(&self, budget: usize) -> Result<Determinization> {
        let mut start = self.initials.clone();
        self.epsilon_closure(&mut start);

        let mut index: HashMap<StateSet, StateId> = HashMap::new();
        let mut subsets: Vec<StateSet> = Vec::new();
        let mut delta: Vec<Vec<StateId>> = vec![Vec::new(); self.alphabet.len()];

        let mut intern = |set: StateSet,
                          subsets: &mut Vec<StateSet>|
         -> Result<StateId> {
            if let Some(&id) = index.get(&set) {
                return Ok(id);
            }
            if subsets.len() >= budget {
                return Err(Error::BudgetExceeded {
                    what: "subset",
                    budget,
                    reached: subsets.len(),
                });
            }
            let id = subsets.len();
            index.insert(set.clone(), id);
            subsets.push(set);
            Ok(id)
        };

        intern(start, &mut subsets)?;
        let mut head = 0;
        while head < subsets.len() {
            for (x, row) in delta.iter_mut().enumerate() {
                let mut next = StateSet::empty(self.n);
                for q in subsets[head].iter() {
                    next.union_with(&self.delta[x][q]);
                }
                self.epsilon_closure(&mut next);
                let id = intern(next, &mut subsets)?;
                row.push(id);
            }
            head += 1;
        }

        let finals: Vec<StateId> = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.intersects(&self.finals))
            .map(|(i, _)| i)
            .collect();
        let dfa = Dfa::new(subsets.len(), self.alphabet.clone(), delta, 0, finals)?;
        Ok(Determinization { dfa, subsets })
    }
}

/// Result of the subset construction: the DFA plus, for each of its states,
/// the NFA subset it stands for (indexed by DFA state id).
pub struct Determinization {
    pub dfa: Dfa,
    pub subsets: Vec<StateSet>,
}

fn check_state(q: StateId, n: usize) -> Result<()> {
    if q >= n {
        Err(Error::StateOutOfRange { state: q, n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn deterministic_nfa_determinizes_to_isomorphic_dfa() {
        // the fixture is already numbered in BFS order, so the subset
        // construction reproduces it state for state
        let d = fixtures::ends_with_b_completed();
        let nfa = Nfa::from_dfa(&d);
        assert_eq!(nfa.determinize().unwrap(), d);
    }

    #[test]
    fn empty_subset_becomes_a_sink() {
        // no c-transitions at all: reading c must land in the empty subset
        let abc = Alphabet::new(['a', 'b', 'c']).unwrap();
        let d = fixtures::ends_with_b();
        let mut nfa = Nfa::new(2, abc, [0], [1]).unwrap();
        for x in 0..2 {
            for q in 0..2 {
                nfa.add_transition(q, x, d.step(q, x)).unwrap();
            }
        }
        let det = nfa.determinization(100).unwrap();
        let empty_id = det
            .subsets
            .iter()
            .position(|s| s.is_empty())
            .expect("empty subset reached");
        for x in 0..3 {
            assert_eq!(det.dfa.step(empty_id, x), empty_id);
        }
        assert!(!det.dfa.is_final(empty_id));
    }

    #[test]
    fn subset_budget_is_enforced() {
        let d = fixtures::ends_with_b_completed();
        let nfa = Nfa::from_dfa(&d);
        let err = nfa.determinize_bounded(2).unwrap_err();
        assert!(err.is_resource());
        assert_eq!(
            err,
            Error::BudgetExceeded {
                what: "subset",
                budget: 2,
                reached: 2
            }
        );
    }

    #[test]
    fn epsilon_closure_feeds_acceptance() {
        let ab = Alphabet::new(['a', 'b']).unwrap();
        let mut nfa = Nfa::with_epsilon(3, ab, [0], [2]).unwrap();
        nfa.add_epsilon(0, 1).unwrap();
        nfa.add_transition(1, 0, 2).unwrap();
        assert!(nfa.accepts_str("a").unwrap());
        assert!(!nfa.accepts_str("b").unwrap());
        assert!(!nfa.accepts_str("").unwrap());
        let dfa = nfa.determinize().unwrap();
        assert!(dfa.accepts_str("a").unwrap());
        assert!(!dfa.accepts_str("aa").unwrap());
    }

    #[test]
    fn epsilon_rejected_when_not_enabled() {
        let ab = Alphabet::new(['a']).unwrap();
        let mut nfa = Nfa::new(2, ab, [0], [1]).unwrap();
        assert!(nfa.add_epsilon(0, 1).is_err());
    }
}
