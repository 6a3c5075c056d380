//! Complete deterministic finite automata.
//!
//! A [`Dfa`] always has exactly one transition per (state, letter) pair.
//! Automata missing whole letters are handled by [`Dfa::complete`], which
//! extends the alphabet and routes the new letters to a fresh sink state.
//! States are the integers `0..n`; values are immutable once built, so they
//! can be shared freely across threads.

use crate::alphabet::{Alphabet, LetterId};
use crate::error::{Error, Result};
use crate::state_set::{StateId, StateSet};

use std::collections::BTreeSet;

/// A complete DFA: state count, ordered alphabet, total transition table,
/// initial state and final-state set.
///
/// The transition table is stored one row per letter: `delta[x][q]` is the
/// successor of state `q` under the letter at position `x`, mirroring the
/// JSON interchange layout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    n: usize,
    alphabet: Alphabet,
    delta: Vec<Vec<StateId>>,
    initial: StateId,
    finals: BTreeSet<StateId>,
}

impl Dfa {
    /// Builds a DFA, checking every invariant: `n >= 1`, one full row per
    /// letter, all targets and the initial/final states in range.
    pub fn new<I: IntoIterator<Item = StateId>>(
        n: usize,
        alphabet: Alphabet,
        delta: Vec<Vec<StateId>>,
        initial: StateId,
        finals: I,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStates);
        }
        if delta.len() != alphabet.len() {
            return Err(Error::LetterIndexOutOfRange {
                index: delta.len(),
                len: alphabet.len(),
            });
        }
        for row in &delta {
            if row.len() != n {
                return Err(Error::StateOutOfRange { state: row.len(), n });
            }
            if let Some(&bad) = row.iter().find(|&&q| q >= n) {
                return Err(Error::StateOutOfRange { state: bad, n });
            }
        }
        if initial >= n {
            return Err(Error::StateOutOfRange { state: initial, n });
        }
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        if let Some(&bad) = finals.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: bad, n });
        }
        Ok(Dfa {
            n,
            alphabet,
            delta,
            initial,
            finals,
        })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals.contains(&state)
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().copied()
    }

    pub fn final_count(&self) -> usize {
        self.finals.len()
    }

    /// Successor of `state` under the letter at position `letter`.
    pub fn step(&self, state: StateId, letter: LetterId) -> StateId {
        self.delta[letter][state]
    }

    /// The transformation row of one letter: `row(x)[q] = delta(q, x)`.
    pub fn row(&self, letter: LetterId) -> &[StateId] {
        &self.delta[letter]
    }

    /// Runs the extended transition function from `state` over `word`.
    pub fn walk(&self, mut state: StateId, word: &[LetterId]) -> Result<StateId> {
        for &x in word {
            if x >= self.alphabet.len() {
                return Err(Error::LetterIndexOutOfRange {
                    index: x,
                    len: self.alphabet.len(),
                });
            }
            state = self.delta[x][state];
        }
        Ok(state)
    }

    /// True iff the word (a sequence of letter positions) is accepted.
    ///
    /// A letter index outside the alphabet is an error, distinct from the
    /// word merely being rejected.
    pub fn accepts(&self, word: &[LetterId]) -> Result<bool> {
        Ok(self.is_final(self.walk(self.initial, word)?))
    }

    /// Convenience for tests and the CLI: parses the word by letter name.
    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        self.accepts(&self.alphabet.word_from_str(word)?)
    }

    /// States reachable from the initial state, explored breadth-first with
    /// letters in alphabet order.
    pub fn reachable(&self) -> StateSet {
        let mut seen = StateSet::singleton(self.n, self.initial);
        let mut queue = vec![self.initial];
        let mut head = 0;
        while head < queue.len() {
            let q = queue[head];
            head += 1;
            for row in &self.delta {
                if seen.insert(row[q]) {
                    queue.push(row[q]);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn co_reachable(&self) -> StateSet {
        let mut seen = StateSet::empty(self.n);
        let mut queue: Vec<StateId> = Vec::new();
        for &f in &self.finals {
            if seen.insert(f) {
                queue.push(f);
            }
        }
        // walk the reversed transition graph
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); self.n];
        for row in &self.delta {
            for (q, &t) in row.iter().enumerate() {
                preds[t].push(q);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let q = queue[head];
            head += 1;
            for &p in &preds[q] {
                if seen.insert(p) {
                    queue.push(p);
                }
            }
        }
        seen
    }

    /// The alphabet of the accepted language: letters that occur in at least
    /// one accepted word, in the order of this DFA's alphabet.
    ///
    /// A letter qualifies exactly when some transition under it leads from a
    /// reachable state to a co-reachable one.
    pub fn effective_alphabet(&self) -> Alphabet {
        let reach = self.reachable();
        let co = self.co_reachable();
        let names = self.alphabet.iter().filter_map(|l| {
            let used = reach.iter().any(|q| co.contains(self.delta[l.index][q]));
            used.then_some(l.name)
        });
        Alphabet::new(names).expect("subset of a valid alphabet")
    }

    /// Extends this DFA to a complete DFA over `target`.
    ///
    /// Requires the current alphabet to be a subset of `target`. If no letter
    /// is missing the result is this DFA with its table reordered to
    /// `target`'s letter order (and equal to `self` when the orders already
    /// agree). Otherwise exactly one sink state is appended with the highest
    /// index; it receives all transitions under the missing letters and loops
    /// to itself on every letter. The accepted language is unchanged.
    pub fn complete(&self, target: &Alphabet) -> Result<Dfa> {
        Ok(self.complete_tracking(target)?.0)
    }

    /// Like [`Dfa::complete`] but also reports the sink state, if one was added.
    pub(crate) fn complete_tracking(&self, target: &Alphabet) -> Result<(Dfa, Option<StateId>)> {
        if let Some(missing) = self
            .alphabet
            .iter()
            .find(|l| !target.contains(l.name))
        {
            return Err(Error::UnknownLetter(missing.name));
        }
        let needs_sink = target.iter().any(|l| !self.alphabet.contains(l.name));
        if !needs_sink && *target == self.alphabet {
            return Ok((self.clone(), None));
        }
        let n = if needs_sink { self.n + 1 } else { self.n };
        let sink = needs_sink.then_some(self.n);
        let delta = target
            .iter()
            .map(|l| match self.alphabet.position_of(l.name) {
                Some(x) => {
                    let mut row = self.delta[x].clone();
                    if needs_sink {
                        row.push(self.n); // sink loops on every letter
                    }
                    row
                }
                None => vec![self.n; n],
            })
            .collect();
        let dfa = Dfa::new(n, target.clone(), delta, self.initial, self.finals.clone())?;
        Ok((dfa, sink))
    }

    /// Drops every letter outside `sub`, keeping all states.
    ///
    /// The result accepts `L ∩ sub*`; `sub` must be a subset of the current
    /// alphabet and its order is taken as given.
    pub fn restrict(&self, sub: &Alphabet) -> Result<Dfa> {
        let delta = sub
            .iter()
            .map(|l| {
                self.alphabet
                    .position_of(l.name)
                    .map(|x| self.delta[x].clone())
                    .ok_or(Error::UnknownLetter(l.name))
            })
            .collect::<Result<Vec<_>>>()?;
        Dfa::new(self.n, sub.clone(), delta, self.initial, self.finals.clone())
    }

    /// Same automaton with a different initial state; used to inspect the
    /// quotient languages of individual states.
    pub fn with_initial(&self, initial: StateId) -> Result<Dfa> {
        Dfa::new(
            self.n,
            self.alphabet.clone(),
            self.delta.clone(),
            initial,
            self.finals.clone(),
        )
    }
}
