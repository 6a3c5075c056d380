//! Total transformations of the state set `{0, .., n-1}` and the semigroups
//! they generate.
//!
//! Every letter of a DFA acts as a transformation, and all witness automata
//! in this crate are defined through the constructors here: cycles,
//! transpositions, point collapses and the identity.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::state_set::{StateId, StateSet};

/// A total self-map of `{0, .., n-1}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Transformation {
    images: Vec<StateId>,
}

impl Transformation {
    /// Wraps an image sequence; every entry must be below the length.
    pub fn from_images(images: Vec<StateId>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: bad, n });
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            images: (0..n).collect(),
        }
    }

    /// The cycle sending each listed state to the next and the last back to
    /// the first; everything else is fixed.
    pub fn cycle(n: usize, states: &[StateId]) -> Result<Self> {
        let mut t = Self::identity(n);
        for (i, &q) in states.iter().enumerate() {
            if q >= n {
                return Err(Error::StateOutOfRange { state: q, n });
            }
            if states[..i].contains(&q) {
                return Err(Error::DuplicateState(q));
            }
            t.images[q] = states[(i + 1) % states.len()];
        }
        Ok(t)
    }

    /// The transposition swapping `p` and `q`.
    pub fn transposition(n: usize, p: StateId, q: StateId) -> Result<Self> {
        Self::cycle(n, &[p, q])
    }

    /// The map sending `p` to `q` and fixing every other state.
    pub fn point(n: usize, p: StateId, q: StateId) -> Result<Self> {
        let mut t = Self::identity(n);
        if p >= n {
            return Err(Error::StateOutOfRange { state: p, n });
        }
        if q >= n {
            return Err(Error::StateOutOfRange { state: q, n });
        }
        t.images[p] = q;
        Ok(t)
    }

    /// Number of states acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, q: StateId) -> StateId {
        self.images[q]
    }

    pub fn images(&self) -> &[StateId] {
        &self.images
    }

    pub fn into_images(self) -> Vec<StateId> {
        self.images
    }

    /// Left-action composition: `q (s ∗ t) = (q s) t`, so `self` acts first.
    pub fn compose(&self, then: &Transformation) -> Result<Transformation> {
        if self.degree() != then.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: then.degree(),
            });
        }
        Ok(Transformation {
            images: self.images.iter().map(|&q| then.images[q]).collect(),
        })
    }

    /// Image of a set of states; shrinks when the map is not injective.
    pub fn apply_to_set(&self, set: &StateSet) -> StateSet {
        let mut out = StateSet::empty(self.degree());
        for q in set.iter() {
            out.insert(self.images[q]);
        }
        out
    }

    /// True iff the image sequence is a bijection.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        self.images.iter().all(|&q| !std::mem::replace(&mut seen[q], true))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &t)| q == t)
    }
}

impl fmt::Display for Transformation {
    /// Cycle notation with fixed points elided: the identity prints as `1`,
    /// a point collapse as `(p→q)`, permutations as products of cycles and
    /// anything else as its image sequence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let moved: Vec<StateId> = (0..self.degree())
            .filter(|&q| self.images[q] != q)
            .collect();
        if moved.len() == 1 {
            return write!(f, "({}→{})", moved[0], self.images[moved[0]]);
        }
        if self.is_permutation() {
            let mut done = vec![false; self.degree()];
            for start in 0..self.degree() {
                if done[start] || self.images[start] == start {
                    continue;
                }
                write!(f, "(")?;
                let mut q = start;
                let mut first = true;
                while !done[q] {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{q}")?;
                    done[q] = true;
                    first = false;
                    q = self.images[q];
                }
                write!(f, ")")?;
            }
            return Ok(());
        }
        write!(f, "[")?;
        for (i, q) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "]")
    }
}

/// A set of transformations closed under composition, together with the
/// generators it was built from. Elements are kept in the deterministic
/// order in which the breadth-first closure discovered them.
#[derive(Debug)]
pub struct Semigroup {
    elements: Vec<Transformation>,
    generators: Vec<Transformation>,
    index: HashMap<Vec<StateId>, usize>,
}

impl Semigroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index.contains_key(t.images())
    }
}

/// Default closure budget for `n` states: `n^n + 1`, so the full
/// transformation monoid always fits for n ≤ 7 and anything larger is an
/// explicit choice. Saturates once n^n leaves the representable range.
pub fn default_semigroup_budget(n: usize) -> usize {
    (n as u64)
        .checked_pow(n as u32)
        .and_then(|v| usize::try_from(v).ok())
        .map_or(usize::MAX, |v| v.saturating_add(1))
}

/// Breadth-first closure of the generators under composition.
///
/// The result holds all products of one or more generators, so it is a
/// semigroup rather than a monoid: the identity appears only if some
/// product equals it. Exceeding `budget` elements is a resource error
/// reporting the partial count.
///
/// The closure runs single-threaded. A parallel variant is free to
/// partition the work however it likes as long as the returned set is a
/// fixed point under composition with every generator.
pub fn generate_semigroup(generators: &[Transformation], budget: usize) -> Result<Semigroup> {
    if let Some(first) = generators.first() {
        let n = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: bad.degree(),
            });
        }
    }
    let mut elements: Vec<Transformation> = Vec::new();
    let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut push = |t: Transformation,
                    elements: &mut Vec<Transformation>|
     -> Result<bool> {
        if index.contains_key(t.images()) {
            return Ok(false);
        }
        if elements.len() >= budget {
            return Err(Error::BudgetExceeded {
                what: "semigroup",
                budget,
                reached: elements.len(),
            });
        }
        index.insert(t.images().to_vec(), elements.len());
        elements.push(t);
        Ok(true)
    };

    for g in generators {
        push(g.clone(), &mut elements)?;
    }
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            // left action: the queued element acts first, the generator after
            let product = elements[head].compose(g).expect("degrees checked");
            push(product, &mut elements)?;
        }
        head += 1;
    }
    Ok(Semigroup {
        elements,
        generators: generators.to_vec(),
        index,
    })
}
