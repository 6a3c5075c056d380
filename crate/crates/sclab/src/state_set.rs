//! Fixed-capacity bit sets over the states `0..n` of an automaton.

use std::fmt;

/// Index of a state; states of an n-state automaton are `0..n`.
pub type StateId = usize;

const BITS: usize = 64;

/// A set of states backed by a bit vector.
///
/// The capacity is fixed at construction and must equal the state count of
/// the owning automaton. Inserting a state at or beyond the capacity is a
/// programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    capacity: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    pub fn empty(capacity: usize) -> Self {
        StateSet {
            capacity,
            blocks: vec![0; capacity.div_ceil(BITS)],
        }
    }

    pub fn singleton(capacity: usize, state: StateId) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(state);
        s
    }

    pub fn from_states<I: IntoIterator<Item = StateId>>(capacity: usize, states: I) -> Self {
        let mut s = Self::empty(capacity);
        for q in states {
            s.insert(q);
        }
        s
    }

    /// Universe `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        Self::from_states(capacity, 0..capacity)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Inserts `state`, returning whether it was newly added.
    pub fn insert(&mut self, state: StateId) -> bool {
        assert!(state < self.capacity, "state {state} beyond capacity");
        let (blk, bit) = (state / BITS, state % BITS);
        let was = self.blocks[blk] & (1 << bit) != 0;
        self.blocks[blk] |= 1 << bit;
        !was
    }

    pub fn remove(&mut self, state: StateId) {
        if state < self.capacity {
            self.blocks[state / BITS] &= !(1 << (state % BITS));
        }
    }

    pub fn contains(&self, state: StateId) -> bool {
        state < self.capacity && self.blocks[state / BITS] & (1 << (state % BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    /// States in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &blk)| {
            let mut rest = blk;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * BITS + bit)
                }
            })
        })
    }

    /// The set as a bit mask, low bit = state 0. Only valid for capacity <= 64.
    pub fn as_mask(&self) -> u64 {
        assert!(self.capacity <= BITS);
        self.blocks.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}
