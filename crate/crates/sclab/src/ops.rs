//! Operations on regular languages over possibly different alphabets.
//!
//! Binary boolean operations complete both operands over the union alphabet
//! (adding a sink only where letters are actually missing), build the
//! reachable direct product, and then reduce the result to the minimal DFA
//! over its own effective alphabet. Concatenation, star and reversal go
//! through an ε-NFA and the subset construction before the same reduction.
//!
//! The restriction-before-minimization step is what distinguishes the
//! different-alphabet complexities from the classical same-alphabet ones; it
//! lives in [`Dfa::normalize`] so no operation can skip it.

use std::collections::HashMap;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, DEFAULT_SUBSET_BUDGET};
use crate::state_set::StateId;

/// The four proper binary boolean operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoolOp {
    Union,
    SymmetricDifference,
    Difference,
    Intersection,
}

impl BoolOp {
    /// Whether a product state is final, given membership on each side.
    pub fn is_final(self, left: bool, right: bool) -> bool {
        match self {
            BoolOp::Union => left || right,
            BoolOp::SymmetricDifference => left != right,
            BoolOp::Difference => left && !right,
            BoolOp::Intersection => left && right,
        }
    }
}

/// Where a product state came from: the original state on each side, or
/// `None` for the sink a side gained during completion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProductStateLabel {
    pub left: Option<StateId>,
    pub right: Option<StateId>,
}

/// A reachable direct product with its provenance labels, indexed by product
/// state id.
pub struct DirectProduct {
    pub dfa: Dfa,
    pub labels: Vec<ProductStateLabel>,
}

/// Builds the reachable direct product of two DFAs over the union of their
/// alphabets, with finals chosen by `op`.
///
/// Each operand is completed first; a sink appears on a side only when the
/// other side contributes letters it lacks, and shows up as `None` in the
/// labels. Pairs are numbered in breadth-first discovery order, letters in
/// union-alphabet order.
pub fn direct_product(d1: &Dfa, d2: &Dfa, op: BoolOp) -> DirectProduct {
    let gamma = d1.alphabet().union(d2.alphabet());
    let (c1, sink1) = d1
        .complete_tracking(&gamma)
        .expect("own alphabet is a subset of the union");
    let (c2, sink2) = d2
        .complete_tracking(&gamma)
        .expect("own alphabet is a subset of the union");

    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = vec![(c1.initial(), c2.initial())];
    index.insert(pairs[0], 0);
    let mut delta: Vec<Vec<StateId>> = vec![Vec::new(); gamma.len()];
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        for (x, row) in delta.iter_mut().enumerate() {
            let next = (c1.step(p, x), c2.step(q, x));
            let id = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
            row.push(id);
        }
        head += 1;
    }

    let finals = pairs
        .iter()
        .enumerate()
        .filter(|&(_, &(p, q))| op.is_final(c1.is_final(p), c2.is_final(q)))
        .map(|(i, _)| i);
    let dfa = Dfa::new(pairs.len(), gamma, delta, 0, finals).expect("consistent by construction");
    let labels = pairs
        .iter()
        .map(|&(p, q)| ProductStateLabel {
            left: (Some(p) != sink1).then_some(p),
            right: (Some(q) != sink2).then_some(q),
        })
        .collect();
    DirectProduct { dfa, labels }
}

/// A boolean operation followed by the reduction to the canonical minimal
/// DFA over the result's own alphabet.
pub fn boolean_op(d1: &Dfa, d2: &Dfa, op: BoolOp) -> Dfa {
    direct_product(d1, d2, op).dfa.normalize()
}

/// The ε-NFA recognizing the concatenation: the left DFA loses its final
/// markings and gains an ε-transition from each old final state to the
/// right DFA's initial state. Left states keep their ids, right states are
/// shifted by the left state count.
pub fn concat_nfa(d1: &Dfa, d2: &Dfa) -> Nfa {
    let gamma = d1.alphabet().union(d2.alphabet());
    let m = d1.state_count();
    let n = d2.state_count();
    let mut nfa = Nfa::with_epsilon(
        m + n,
        gamma.clone(),
        [d1.initial()],
        d2.finals().map(|f| m + f),
    )
    .expect("state count is positive");
    for letter in gamma.iter() {
        if let Some(x) = d1.alphabet().position_of(letter.name) {
            for q in 0..m {
                nfa.add_transition(q, letter.index, d1.step(q, x)).unwrap();
            }
        }
        if let Some(x) = d2.alphabet().position_of(letter.name) {
            for q in 0..n {
                nfa.add_transition(m + q, letter.index, m + d2.step(q, x))
                    .unwrap();
            }
        }
    }
    for f in d1.finals() {
        nfa.add_epsilon(f, m + d2.initial()).unwrap();
    }
    nfa
}

/// Concatenation with the default subset budget.
pub fn concat(d1: &Dfa, d2: &Dfa) -> Result<Dfa> {
    concat_bounded(d1, d2, DEFAULT_SUBSET_BUDGET)
}

/// Concatenation: ε-NFA, subset construction, then reduction to the minimal
/// DFA over the result's own alphabet.
pub fn concat_bounded(d1: &Dfa, d2: &Dfa, budget: usize) -> Result<Dfa> {
    Ok(concat_nfa(d1, d2).determinize_bounded(budget)?.normalize())
}

/// Kleene star with the default subset budget.
pub fn star(d: &Dfa) -> Result<Dfa> {
    star_bounded(d, DEFAULT_SUBSET_BUDGET)
}

/// The ε-NFA for the star: a fresh state that is both initial and final,
/// an ε-transition from it to the old initial state, and ε-transitions from
/// the old finals back to the old initial state.
pub fn star_nfa(d: &Dfa) -> Nfa {
    let n = d.state_count();
    let fresh = n;
    let finals: Vec<StateId> = d.finals().chain([fresh]).collect();
    let mut nfa = Nfa::with_epsilon(n + 1, d.alphabet().clone(), [fresh], finals)
        .expect("state count is positive");
    for x in 0..d.alphabet().len() {
        for q in 0..n {
            nfa.add_transition(q, x, d.step(q, x)).unwrap();
        }
    }
    nfa.add_epsilon(fresh, d.initial()).unwrap();
    for f in d.finals() {
        nfa.add_epsilon(f, d.initial()).unwrap();
    }
    nfa
}

/// Kleene star: [`star_nfa`], determinization, reduction.
pub fn star_bounded(d: &Dfa, budget: usize) -> Result<Dfa> {
    Ok(star_nfa(d).determinize_bounded(budget)?.normalize())
}

/// Reversal with the default subset budget.
pub fn reverse(d: &Dfa) -> Result<Dfa> {
    reverse_bounded(d, DEFAULT_SUBSET_BUDGET)
}

/// The NFA for the reversal: every transition flipped, the old finals as
/// initial states, the old initial state as the only final one.
pub fn reverse_nfa(d: &Dfa) -> Nfa {
    let mut nfa = Nfa::new(
        d.state_count(),
        d.alphabet().clone(),
        d.finals(),
        [d.initial()],
    )
    .expect("state count is positive");
    for x in 0..d.alphabet().len() {
        for q in 0..d.state_count() {
            nfa.add_transition(d.step(q, x), x, q).unwrap();
        }
    }
    nfa
}

/// Reversal: [`reverse_nfa`], determinization, reduction.
pub fn reverse_bounded(d: &Dfa, budget: usize) -> Result<Dfa> {
    Ok(reverse_nfa(d).determinize_bounded(budget)?.normalize())
}

/// How the reachable subsets of a concatenation's determinization decompose
/// into the three possible shapes.
///
/// Writing m for the left state count and Q for the right state set, every
/// reachable subset is either `{p} ∪ S` with p a non-final left state
/// (`nonfinal_head`), `{p, init} ∪ S` with p a final left state and init the
/// right initial state (`final_head`), or a plain `S ⊆ Q` (`right_only`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubsetCensus {
    /// Number of final states of the left operand (k in the bound).
    pub left_finals: usize,
    pub nonfinal_head: usize,
    pub final_head: usize,
    pub right_only: usize,
    pub total: usize,
}

/// Classifies every reachable determinization subset of the concatenation's
/// ε-NFA; see [`SubsetCensus`]. A subset matching none of the three shapes
/// means the construction itself is broken and yields an error.
pub fn product_subset_census(d1: &Dfa, d2: &Dfa) -> Result<SubsetCensus> {
    product_subset_census_bounded(d1, d2, DEFAULT_SUBSET_BUDGET)
}

pub fn product_subset_census_bounded(d1: &Dfa, d2: &Dfa, budget: usize) -> Result<SubsetCensus> {
    let m = d1.state_count();
    let det = concat_nfa(d1, d2).determinization(budget)?;
    let right_initial = m + d2.initial();

    let mut census = SubsetCensus {
        left_finals: d1.final_count(),
        nonfinal_head: 0,
        final_head: 0,
        right_only: 0,
        total: det.subsets.len(),
    };
    for (id, subset) in det.subsets.iter().enumerate() {
        let heads: Vec<StateId> = subset.iter().take_while(|&q| q < m).collect();
        match heads.as_slice() {
            [] => census.right_only += 1,
            [p] if !d1.is_final(*p) => census.nonfinal_head += 1,
            [p] if subset.contains(right_initial) => {
                debug_assert!(d1.is_final(*p));
                census.final_head += 1;
            }
            _ => {
                return Err(Error::CensusShapeViolation {
                    state: id,
                    subset: format!("{subset:?}"),
                    detail: if heads.len() > 1 {
                        "more than one left state".into()
                    } else {
                        "final left state without the right initial state".into()
                    },
                })
            }
        }
    }
    Ok(census)
}
