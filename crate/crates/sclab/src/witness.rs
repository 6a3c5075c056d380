//! The universal witness family and its permutational dialects.
//!
//! Every hard instance in this crate is a dialect of one automaton family:
//! `U_n` over the master alphabet {a,b,c,d}, where a cycles all states,
//! b swaps the first two, c collapses the last state onto the first and d
//! does nothing. A dialect renames letters through an injective partial map
//! and deletes the letters the map leaves undefined.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::ops::BoolOp;
use crate::transform::Transformation;

/// The fixed master alphabet dialects are defined over.
pub const MASTER_ALPHABET: [char; 4] = ['a', 'b', 'c', 'd'];

fn master_position(name: char) -> Result<usize> {
    MASTER_ALPHABET
        .iter()
        .position(|&c| c == name)
        .ok_or(Error::OutsideMasterAlphabet(name))
}

/// An injective partial renaming of the master alphabet.
///
/// Entry `i` tells what the i-th master letter becomes: another master
/// letter, or nothing at all, in which case the letter is deleted from any
/// dialect built with this map. In text form entries are comma-separated
/// with `-` for "deleted" and trailing `-` entries may be dropped, so
/// `"b,a"` means `b,a,-,-`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialPermutation {
    targets: Vec<Option<char>>,
}

impl PartialPermutation {
    pub fn new(targets: Vec<Option<char>>) -> Result<Self> {
        if targets.len() > MASTER_ALPHABET.len() {
            return Err(Error::DialectTooLong {
                len: targets.len(),
                max: MASTER_ALPHABET.len(),
            });
        }
        let mut targets = targets;
        targets.resize(MASTER_ALPHABET.len(), None);
        for (i, &t) in targets.iter().enumerate() {
            let Some(name) = t else { continue };
            master_position(name)?;
            if targets[..i].contains(&Some(name)) {
                return Err(Error::DialectNotInjective(name));
            }
        }
        Ok(PartialPermutation { targets })
    }

    /// The identity map on the full master alphabet.
    pub fn identity() -> Self {
        PartialPermutation {
            targets: MASTER_ALPHABET.iter().copied().map(Some).collect(),
        }
    }

    /// Parses the CLI form, e.g. `"b,a,-,d"` or `"a,b"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::EmptyDialect);
        }
        let targets = text
            .split(',')
            .map(|part| {
                let part = part.trim();
                match part {
                    "-" => Ok(None),
                    _ => {
                        let mut chars = part.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => Ok(Some(c)),
                            _ => Err(Error::InvalidInput(format!(
                                "dialect entry '{part}' is not a single letter or '-'"
                            ))),
                        }
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(targets)
    }

    /// Image of the letter at master position `i`, if defined.
    pub fn target(&self, i: usize) -> Option<char> {
        self.targets.get(i).copied().flatten()
    }

    /// True if every master letter has an image.
    pub fn is_total(&self) -> bool {
        self.targets.iter().all(|t| t.is_some())
    }
}

impl fmt::Display for PartialPermutation {
    /// The CLI form with trailing undefined entries omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self
            .targets
            .iter()
            .rposition(|t| t.is_some())
            .map_or(0, |i| i + 1);
        for (i, t) in self.targets[..last.max(1)].iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match t {
                Some(c) => write!(f, "{c}")?,
                None => write!(f, "-")?,
            }
        }
        Ok(())
    }
}

/// A witness request: state count plus the dialect to apply.
#[derive(Clone, Debug)]
pub struct WitnessSpec {
    pub n: usize,
    pub pi: PartialPermutation,
}

impl WitnessSpec {
    pub fn build(&self) -> Result<Dfa> {
        dialect(&universal_witness(self.n)?, &self.pi)
    }
}

/// The n-state witness over {a,b,c,d}: initial state 0, final state n-1,
/// with a: (0,..,n-1), b: (0,1), c: (n-1 → 0) and d the identity.
///
/// Needs n ≥ 3; the automaton is minimal as built.
pub fn universal_witness(n: usize) -> Result<Dfa> {
    if n < 3 {
        return Err(Error::TooFewStates { n, min: 3 });
    }
    let all: Vec<usize> = (0..n).collect();
    let delta = vec![
        Transformation::cycle(n, &all)?.into_images(),
        Transformation::transposition(n, 0, 1)?.into_images(),
        Transformation::point(n, n - 1, 0)?.into_images(),
        Transformation::identity(n).into_images(),
    ];
    Dfa::new(
        n,
        Alphabet::new(MASTER_ALPHABET)?,
        delta,
        0,
        [n - 1],
    )
}

/// Applies a permutational dialect to a DFA over (a subset of) the master
/// alphabet.
///
/// Each letter with a defined image is renamed (the renamed letter induces
/// the transformation the original letter induced); letters with no image
/// are deleted together with their transitions. States are untouched and
/// the result is not re-minimized, so two dialects of one automaton can be
/// compared node for node. The surviving letters are ordered by their
/// master positions.
pub fn dialect(d: &Dfa, pi: &PartialPermutation) -> Result<Dfa> {
    let mut renamed: Vec<(usize, char, Vec<usize>)> = Vec::new();
    for letter in d.alphabet().iter() {
        let pos = master_position(letter.name)?;
        if let Some(new_name) = pi.target(pos) {
            renamed.push((
                master_position(new_name)?,
                new_name,
                d.row(letter.index).to_vec(),
            ));
        }
    }
    renamed.sort_by_key(|&(pos, _, _)| pos);
    let alphabet = Alphabet::new(renamed.iter().map(|&(_, name, _)| name))?;
    let delta = renamed.into_iter().map(|(_, _, row)| row).collect();
    Dfa::new(d.state_count(), alphabet, delta, d.initial(), d.finals())
}

/// The dialect pair meeting the boolean-operation bounds:
/// union and symmetric difference use `L'_m(a,b,-,c)` against
/// `L_n(b,a,-,d)`, difference drops the right automaton's private letter,
/// and intersection restricts both to {a,b}.
pub fn boolean_witness_pair(op: BoolOp, m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    let left_pi = match op {
        BoolOp::Intersection => PartialPermutation::parse("a,b")?,
        _ => PartialPermutation::parse("a,b,-,c")?,
    };
    let right_pi = match op {
        BoolOp::Union | BoolOp::SymmetricDifference => PartialPermutation::parse("b,a,-,d")?,
        BoolOp::Difference | BoolOp::Intersection => PartialPermutation::parse("b,a")?,
    };
    Ok((
        dialect(&universal_witness(m)?, &left_pi)?,
        dialect(&universal_witness(n)?, &right_pi)?,
    ))
}

/// The dialect pair meeting the product (concatenation) bound; it is the
/// same pair as for union.
pub fn product_witness_pair(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    boolean_witness_pair(BoolOp::Union, m, n)
}
