//! Ordered alphabets of single-character letters.
//!
//! Letter order is significant everywhere: transition tables are indexed by
//! letter position, canonical minimization explores letters in alphabet
//! order, and all reports list letters in this order.

use std::fmt;

use crate::error::{Error, Result};

/// Position of a letter inside its [`Alphabet`].
pub type LetterId = usize;

/// One letter of an alphabet: its position and its printable name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: LetterId,
    pub name: char,
}

/// An ordered sequence of distinct letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    /// Builds an alphabet from letter names, in the given order.
    pub fn new<I: IntoIterator<Item = char>>(names: I) -> Result<Self> {
        let mut letters = Vec::new();
        for name in names {
            if letters.iter().any(|l: &Letter| l.name == name) {
                return Err(Error::DuplicateLetter(name));
            }
            letters.push(Letter {
                index: letters.len(),
                name,
            });
        }
        Ok(Alphabet { letters })
    }

    /// The empty alphabet (used by languages such as `{}` and `{ε}`).
    pub fn empty() -> Self {
        Alphabet {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied()
    }

    pub fn letter(&self, index: LetterId) -> Option<Letter> {
        self.letters.get(index).copied()
    }

    /// Position of `name` in this alphabet, if present.
    pub fn position_of(&self, name: char) -> Option<LetterId> {
        self.letters.iter().position(|l| l.name == name)
    }

    pub fn contains(&self, name: char) -> bool {
        self.position_of(name).is_some()
    }

    /// Letters of `self` in order, followed by letters of `other` not in
    /// `self`, in `other`'s order.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut names: Vec<char> = self.letters.iter().map(|l| l.name).collect();
        for l in &other.letters {
            if !names.contains(&l.name) {
                names.push(l.name);
            }
        }
        Alphabet::new(names).expect("both operands hold distinct names")
    }

    pub fn names(&self) -> Vec<char> {
        self.letters.iter().map(|l| l.name).collect()
    }

    /// Translates a textual word into letter positions.
    ///
    /// This is the only place words in string form enter the library; all
    /// internal words are sequences of letter positions.
    pub fn word_from_str(&self, word: &str) -> Result<Vec<LetterId>> {
        word.chars()
            .map(|c| self.position_of(c).ok_or(Error::UnknownLetter(c)))
            .collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.name)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Alphabet {
    /// Formats as `{a,b,c}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.name)?;
        }
        write!(f, "}}")
    }
}
