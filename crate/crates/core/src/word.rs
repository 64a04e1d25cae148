//! Letters and words over an inverse-closed alphabet.

use std::fmt;
use std::ops::{Deref, Mul};

/// A generator or the formal inverse of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: usize,
    inverse: bool,
}

impl Letter {
    pub const fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    /// The positive letter for generator `i`.
    pub const fn gen(i: usize) -> Self {
        Letter::new(i, false)
    }

    /// The inverse letter for generator `i`.
    pub const fn inv(i: usize) -> Self {
        Letter::new(i, true)
    }

    pub const fn generator(self) -> usize {
        self.generator
    }

    pub const fn is_inverse(self) -> bool {
        self.inverse
    }

    /// +1 for a generator, -1 for an inverse.
    pub const fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub const fn inverse(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// Position of this letter in the standard alphabet of `rank` generators:
    /// generators first, then their inverses.
    pub const fn slot(self, rank: usize) -> usize {
        if self.inverse {
            rank + self.generator
        } else {
            self.generator
        }
    }
}

/// The standard inverse-closed alphabet `a, b, …, A, B, …` of a group of the given rank.
pub fn standard_alphabet(rank: usize) -> Vec<Letter> {
    (0..rank).map(Letter::gen).chain((0..rank).map(Letter::inv)).collect()
}

/// A finite sequence of letters. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    /// `self · x` as a new word.
    pub fn with(&self, x: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(x);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters reversed with every sign flipped.
    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|x| x.inverse()).collect()
    }

    /// Deletes adjacent letter/inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        Word(stack)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[1] != p[0].inverse())
    }

    /// Shortlex comparison: shorter first, then lexicographic by alphabet slot.
    pub fn shortlex_cmp(&self, other: &Word, rank: usize) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            self.0
                .iter()
                .map(|x| x.slot(rank))
                .cmp(other.0.iter().map(|x| x.slot(rank)))
        })
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

/// Debug-style rendering with default names (`a`..`z`, inverses uppercase).
/// Use [`crate::Presentation::format_word`] when the generator names matter.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for x in &self.0 {
            let c = match u8::try_from(x.generator()) {
                Ok(g) if g < 26 => (b'a' + g) as char,
                _ => '?',
            };
            let c = if x.is_inverse() { c.to_ascii_uppercase() } else { c };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All words of exactly `len` letters over `alphabet`, in lexicographic
/// order of alphabet positions.
pub fn words_of_length(alphabet: &[Letter], len: usize) -> WordsOfLength<'_> {
    WordsOfLength {
        alphabet,
        digits: vec![0; len],
        done: alphabet.is_empty() && len > 0,
    }
}

/// All words of length at most `max_len`, shortlex ordered.
pub fn words_up_to(alphabet: &[Letter], max_len: usize) -> impl Iterator<Item = Word> + '_ {
    (0..=max_len).flat_map(move |n| words_of_length(alphabet, n))
}

pub struct WordsOfLength<'a> {
    alphabet: &'a [Letter],
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for WordsOfLength<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word = self.digits.iter().map(|&d| self.alphabet[d]).collect();
        // odometer, last position fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.alphabet.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}
