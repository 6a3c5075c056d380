//! sclab is a lab bench for the state complexity of operations on regular
//! languages whose operands live over *different* alphabets.
//!
//! The classical complexity results assume both operands share one
//! alphabet. Dropping that assumption changes the numbers: a union can need
//! `mn + m + n + 1` states instead of `mn`, a concatenation `m·2^n +
//! 2^(n-1)` instead of `(m-1)·2^n + 2^(n-1)`. This crate implements the
//! constructions behind those bounds and a harness that measures them
//! mechanically:
//!
//! * [`dfa`], [`nfa`]: complete DFAs and NFAs with membership,
//!   completion over larger alphabets, alphabet restriction, subset
//!   construction, canonical minimization and language equivalence.
//! * [`transform`]: transformations of the state set as first-class
//!   algebra, and semigroup generation by closure.
//! * [`witness`]: the universal witness family `U_n(a,b,c,d)` and its
//!   permutational dialects, the source of every hard instance here.
//! * [`ops`]: union, symmetric difference, difference, intersection,
//!   concatenation, star and reversal, each followed by the reduction to
//!   the result's own effective alphabet, plus the subset census for
//!   concatenations.
//! * [`atoms`](mod@atoms): atoms of a language, their complexities, and syntactic
//!   semigroup sizes.
//! * [`lab`]: grid sweeps comparing measured complexities against the
//!   closed-form expectations, with markdown/CSV/JSON reports.
//! * [`json`], [`dot`]: interchange formats.
//!
//! Complexity is always measured on the minimal complete DFA over the
//! language's *own* (effective) alphabet, [`Dfa::normalize`], which is
//! what makes the different-alphabet numbers come out right. Languages with
//! no effective letters at all (the empty language and `{ε}`) get
//! complexity 1 by convention.
//!
//! All values are immutable after construction and safe to share across
//! threads; the grid runner in [`lab`] evaluates cells in parallel.

pub mod alphabet;
pub mod atoms;
pub mod dfa;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod lab;
mod minimize;
pub mod nfa;
pub mod ops;
pub mod state_set;
pub mod transform;
pub mod witness;

pub use alphabet::{Alphabet, Letter, LetterId};
pub use atoms::{atom_formula, atoms, syntactic_semigroup_size, AtomProfile, AtomsReport};
pub use dfa::Dfa;
pub use error::{Error, Result};
pub use nfa::{Determinization, Nfa, DEFAULT_SUBSET_BUDGET};
pub use ops::{
    boolean_op, concat, direct_product, product_subset_census, reverse, star, BoolOp,
    DirectProduct, ProductStateLabel, SubsetCensus,
};
pub use state_set::{StateId, StateSet};
pub use transform::{generate_semigroup, Semigroup, Transformation};
pub use witness::{
    boolean_witness_pair, dialect, product_witness_pair, universal_witness, PartialPermutation,
    WitnessSpec,
};
