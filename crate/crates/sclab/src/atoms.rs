//! Atoms of a regular language and the syntactic semigroup of its minimal
//! DFA.
//!
//! Two words belong to the same atom when exactly the same quotients of the
//! language contain them. With the minimal DFA in hand, the atom of a word
//! w is read off the tuple (δ(0,w), .., δ(n-1,w)): the atom's index set S
//! collects the positions driven into a final state. Atoms partition Σ*,
//! at most 2^n of them are nonempty, and each nonempty one is itself a
//! regular language whose complexity we can measure.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::state_set::{StateId, StateSet};
use crate::transform::{default_semigroup_budget, generate_semigroup};

/// One atom candidate: the quotient index set S, whether the atom A_S is
/// nonempty, and its measured complexity when it is.
#[derive(Clone, Debug)]
pub struct AtomProfile {
    pub subset: StateSet,
    pub nonempty: bool,
    pub measured_kappa: Option<usize>,
}

/// All 2^n atom candidates of a language, over the states of its minimal
/// DFA. Profiles are ordered by the subset's bit mask, so `profiles[0]` is
/// always S = ∅.
#[derive(Debug)]
pub struct AtomsReport {
    /// State count of the minimal DFA the profiles refer to.
    pub n: usize,
    /// False when the input first had to be reduced to its minimal form.
    pub input_was_minimal: bool,
    pub profiles: Vec<AtomProfile>,
}

impl AtomsReport {
    pub fn atom_count(&self) -> usize {
        self.profiles.iter().filter(|p| p.nonempty).count()
    }
}

/// Computes every atom of the language with the default tuple budget.
pub fn atoms(d: &Dfa) -> Result<AtomsReport> {
    let n = d.quotient_complexity();
    atoms_bounded(d, default_semigroup_budget(n))
}

/// Computes every atom of the language of `d`.
///
/// The input is reduced to its canonical minimal DFA first (the profiles
/// only make sense there). The construction walks the reachable tuples of
/// the n-fold product of the DFA with itself (at most n^n of them, capped
/// by `budget`) and then measures each nonempty atom by re-finalizing the
/// shared tuple graph, once per index set.
pub fn atoms_bounded(d: &Dfa, budget: usize) -> Result<AtomsReport> {
    let (graph, input_was_minimal) = TupleGraph::build(d, budget)?;
    let n = graph.n;
    if n >= 64 {
        // index sets are held in a 64-bit mask
        return Err(Error::BudgetExceeded {
            what: "atom index-set",
            budget: 63,
            reached: n,
        });
    }

    // the per-S measurements are independent reductions over the shared
    // immutable tuple graph, so they run in parallel
    let profiles = (0u64..(1 << n))
        .into_par_iter()
        .map(|mask| {
            let subset = subset_from_mask(n, mask);
            let finals = graph.tuples_with_profile(&subset);
            if finals.is_empty() {
                return AtomProfile {
                    subset,
                    nonempty: false,
                    measured_kappa: None,
                };
            }
            let kappa = graph.refinalized(finals).quotient_complexity();
            AtomProfile {
                subset,
                nonempty: true,
                measured_kappa: Some(kappa),
            }
        })
        .collect();
    Ok(AtomsReport {
        n,
        input_was_minimal,
        profiles,
    })
}

/// Number of nonempty atoms, skipping the per-atom complexity measurements.
pub fn atom_count(d: &Dfa) -> Result<usize> {
    let n = d.quotient_complexity();
    let (graph, _) = TupleGraph::build(d, default_semigroup_budget(n))?;
    if graph.n >= 64 {
        return Err(Error::BudgetExceeded {
            what: "atom index-set",
            budget: 63,
            reached: graph.n,
        });
    }
    let mut seen: Vec<bool> = vec![false; 1 << graph.n];
    for tuple in &graph.tuples {
        seen[graph.profile_mask(tuple) as usize] = true;
    }
    Ok(seen.iter().filter(|&&b| b).count())
}

/// Closed form for the complexity of the atom with |S| = s of a maximally
/// complex language with n quotients:
/// 2^n - 1 when S is empty or everything, and otherwise
/// 1 + Σ_{x=1..s} Σ_{y=1..n-s} C(n,x) C(n-x,y).
pub fn atom_formula(n: usize, s: usize) -> u64 {
    assert!(s <= n, "|S| cannot exceed n");
    if s == 0 || s == n {
        return (1u64 << n) - 1;
    }
    let mut total = 1u64;
    for x in 1..=s {
        for y in 1..=(n - s) {
            total += binomial(n, x) * binomial(n - x, y);
        }
    }
    total
}

/// Size of the syntactic semigroup, computed as the transition semigroup of
/// the canonical minimal DFA over the language's own alphabet.
pub fn syntactic_semigroup_size(d: &Dfa) -> Result<usize> {
    let budget = default_semigroup_budget(d.quotient_complexity());
    syntactic_semigroup_size_bounded(d, budget)
}

pub fn syntactic_semigroup_size_bounded(d: &Dfa, budget: usize) -> Result<usize> {
    let min = d.normalize();
    let gens: Vec<_> = (0..min.alphabet().len())
        .map(|x| {
            crate::transform::Transformation::from_images(min.row(x).to_vec())
                .expect("rows of a valid DFA are transformations")
        })
        .collect();
    Ok(generate_semigroup(&gens, budget)?.len())
}

/// The reachable tuple automaton of a minimal DFA: states are the vectors
/// (δ(0,w), .., δ(n-1,w)) for words w, the initial tuple is the identity.
struct TupleGraph {
    n: usize,
    alphabet_len: usize,
    minimal: Dfa,
    tuples: Vec<Vec<StateId>>,
    delta: Vec<Vec<StateId>>,
}

impl TupleGraph {
    fn build(d: &Dfa, budget: usize) -> Result<(Self, bool)> {
        let minimal = d.normalize();
        let input_was_minimal = minimal == *d;
        let n = minimal.state_count();
        let k = minimal.alphabet().len();

        let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
        let mut tuples: Vec<Vec<StateId>> = vec![(0..n).collect()];
        index.insert(tuples[0].clone(), 0);
        let mut delta: Vec<Vec<StateId>> = vec![Vec::new(); k];
        let mut head = 0;
        while head < tuples.len() {
            for (x, row) in delta.iter_mut().enumerate() {
                let next: Vec<StateId> =
                    tuples[head].iter().map(|&q| minimal.step(q, x)).collect();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if tuples.len() >= budget {
                            return Err(Error::BudgetExceeded {
                                what: "tuple",
                                budget,
                                reached: tuples.len(),
                            });
                        }
                        index.insert(next.clone(), tuples.len());
                        tuples.push(next);
                        tuples.len() - 1
                    }
                };
                row.push(id);
            }
            head += 1;
        }
        Ok((
            TupleGraph {
                n,
                alphabet_len: k,
                minimal,
                tuples,
                delta,
            },
            input_was_minimal,
        ))
    }

    fn profile_mask(&self, tuple: &[StateId]) -> u64 {
        tuple
            .iter()
            .enumerate()
            .filter(|&(_, &t)| self.minimal.is_final(t))
            .fold(0u64, |mask, (i, _)| mask | (1 << i))
    }

    fn tuples_with_profile(&self, subset: &StateSet) -> Vec<StateId> {
        let want = subset.as_mask();
        self.tuples
            .iter()
            .enumerate()
            .filter(|(_, t)| self.profile_mask(t) == want)
            .map(|(i, _)| i)
            .collect()
    }

    /// The shared tuple graph as a DFA accepting exactly the words whose
    /// tuple lies in `finals`.
    fn refinalized(&self, finals: Vec<StateId>) -> Dfa {
        Dfa::new(
            self.tuples.len(),
            self.minimal.alphabet().clone(),
            (0..self.alphabet_len).map(|x| self.delta[x].clone()).collect(),
            0,
            finals,
        )
        .expect("tuple graph is a valid DFA")
    }
}

fn subset_from_mask(n: usize, mask: u64) -> StateSet {
    StateSet::from_states(n, (0..n).filter(|&i| mask & (1 << i) != 0))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}
