//! Deterministic finite automata over the letter alphabet, and exact
//! geodesic-language acceptors for free and free abelian groups.
//!
//! When an automaton accepts exactly the geodesics of a group, reading `u·x`
//! for a geodesic `u` decides whether `ℓ(ux) > ℓ(u)` in one extra
//! transition.

use std::cell::Cell;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::oracles::{Ball, IncreaseOracle};
use crate::word::{standard_alphabet, words_up_to, Letter, Word};

/// A complete DFA; every state has a transition on every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    rank: usize,
    alphabet: Vec<Letter>,
    // states × alphabet, row-major
    table: Vec<u32>,
    start: u32,
    accepting: Vec<bool>,
    dead: Option<u32>,
}

impl Dfa {
    /// `table[s * k + i]` is the successor of `s` on `alphabet[i]`, where the
    /// alphabet is the standard one for `rank` generators.
    pub fn new(rank: usize, table: Vec<u32>, start: u32, accepting: Vec<bool>, dead: Option<u32>) -> Self {
        let alphabet = standard_alphabet(rank);
        let states = accepting.len();
        assert_eq!(table.len(), states * alphabet.len(), "transition table must be total");
        assert!((start as usize) < states);
        assert!(table.iter().all(|&t| (t as usize) < states));
        Dfa {
            rank,
            alphabet,
            table,
            start,
            accepting,
            dead,
        }
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn dead_state(&self) -> Option<u32> {
        self.dead
    }

    pub fn is_accepting(&self, state: u32) -> bool {
        self.accepting[state as usize]
    }

    /// Letters outside the alphabet are not accepted from any state.
    pub fn next(&self, state: u32, x: Letter) -> Option<u32> {
        if x.generator() >= self.rank {
            return None;
        }
        Some(self.table[state as usize * self.alphabet.len() + x.slot(self.rank)])
    }

    /// The state reached after reading `w`, or `None` if `w` leaves the alphabet.
    pub fn state_after(&self, w: &Word) -> Option<u32> {
        self.walk(self.start, w, &Cell::new(0))
    }

    fn walk(&self, from: u32, w: &Word, lookups: &Cell<usize>) -> Option<u32> {
        let mut s = from;
        for &x in w.iter() {
            lookups.set(lookups.get() + 1);
            s = self.next(s, x)?;
        }
        Some(s)
    }

    pub fn run(&self, w: &Word) -> bool {
        self.run_counted(w).0
    }

    /// [`Dfa::run`] together with the number of transition lookups made.
    pub fn run_counted(&self, w: &Word) -> (bool, usize) {
        let lookups = Cell::new(0);
        let accepted = self.walk(self.start, w, &lookups).is_some_and(|s| self.is_accepting(s));
        (accepted, lookups.get())
    }

    /// Plain-text transition table: a header naming the letters, then one
    /// line per state with its successors; `*` marks accepting states.
    pub fn to_table(&self, names: &[char]) -> String {
        let mut out = String::from("state");
        for x in &self.alphabet {
            let c = names.get(x.generator()).copied().unwrap_or('?');
            let c = if x.is_inverse() { c.to_ascii_uppercase() } else { c };
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
        let k = self.alphabet.len();
        for s in 0..self.state_count() {
            write!(out, "{s}{}", if self.accepting[s] { "*" } else { "" }).unwrap();
            for t in &self.table[s * k..(s + 1) * k] {
                write!(out, " {t}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Accepts exactly the freely reduced words on `k` generators: the
/// geodesics of the free group. States are the start, one per last letter,
/// and a dead state.
pub fn free_geodesic_dfa(k: usize) -> Dfa {
    let alphabet = standard_alphabet(k);
    let n = alphabet.len();
    let dead = (n + 1) as u32;
    let mut table = Vec::with_capacity((n + 2) * n);
    // start
    table.extend((0..n).map(|i| i as u32 + 1));
    for last in &alphabet {
        for y in &alphabet {
            table.push(if *y == last.inverse() {
                dead
            } else {
                y.slot(k) as u32 + 1
            });
        }
    }
    table.extend(std::iter::repeat_n(dead, n));
    let mut accepting = vec![true; n + 2];
    accepting[dead as usize] = false;
    Dfa::new(k, table, 0, accepting, Some(dead))
}

/// Accepts exactly the geodesics of Z^k: words in which no generator occurs
/// with both signs. Tracks per coordinate which sign has been seen, in base 3.
pub fn abelian_geodesic_dfa(k: usize) -> Dfa {
    let alphabet = standard_alphabet(k);
    let signed_states = 3usize.pow(k as u32);
    let dead = signed_states as u32;
    let mut table = Vec::with_capacity((signed_states + 1) * alphabet.len());
    for s in 0..signed_states {
        for x in &alphabet {
            let place = 3usize.pow(x.generator() as u32);
            let seen = (s / place) % 3;
            let want = if x.is_inverse() { 2 } else { 1 };
            table.push(match seen {
                0 => (s + want * place) as u32,
                _ if seen == want => s as u32,
                _ => dead,
            });
        }
    }
    table.extend(std::iter::repeat_n(dead, alphabet.len()));
    let mut accepting = vec![true; signed_states + 1];
    accepting[signed_states] = false;
    Dfa::new(k, table, 0, accepting, Some(dead))
}

/// `ℓ(ux) > ℓ(u)` for a geodesic `u`, given an automaton accepting exactly
/// the geodesics. Fails if `u` is rejected.
pub fn delta_from_dfa(d: &Dfa, u: &Word, x: Letter) -> Result<bool> {
    match d.state_after(u) {
        Some(s) if d.is_accepting(s) => Ok(d.next(s, x).is_some_and(|t| d.is_accepting(t))),
        _ => Err(Error::NotGeodesicInput(u.to_string())),
    }
}

impl IncreaseOracle for Dfa {
    fn increases(&self, u: &Word, x: Letter) -> Result<bool> {
        delta_from_dfa(self, u, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: Word,
    pub accepted: bool,
    pub geodesic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checked: usize,
    pub max_len: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares acceptance with ball geodesicity on every word of length at most
/// `max_len`. The ball's radius must be at least `max_len`.
pub fn validate_dfa_against_ball(d: &Dfa, b: &Ball, max_len: usize) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        checked: 0,
        max_len,
        mismatches: Vec::new(),
    };
    for word in words_up_to(b.alphabet(), max_len) {
        let accepted = d.run(&word);
        let geodesic = b.is_geodesic(&word)?;
        report.checked += 1;
        if accepted != geodesic {
            report.mismatches.push(Mismatch {
                word,
                accepted,
                geodesic,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::models::{FreeAbelian, FreeGroup};
    use crate::presentation::Presentation;
    use crate::word::words_of_length;

    fn w(s: &str) -> Word {
        Presentation::with_rank(3).unwrap().parse_word(s).unwrap()
    }

    #[test]
    fn run_examples() {
        let f = free_geodesic_dfa(2);
        assert!(f.run(&w("abA")));
        assert!(!f.run(&w("aA")));
        assert!(f.run(&w("aa")));
        assert!(!f.run(&w("abBA")));
        assert!(abelian_geodesic_dfa(2).run(&w("aB")));
    }

    #[test]
    fn state_counts() {
        assert_eq!(free_geodesic_dfa(2).state_count(), 6);
        assert_eq!(abelian_geodesic_dfa(2).state_count(), 10);
        assert_eq!(abelian_geodesic_dfa(3).state_count(), 28);
    }

    #[test]
    fn free_rank_one_accepts_two_words_per_length() {
        let d = free_geodesic_dfa(1);
        for n in 1..=6 {
            assert_eq!(words_of_length(d.alphabet(), n).filter(|w| d.run(w)).count(), 2);
        }
    }

    #[test]
    fn abelian_examples() {
        let d = abelian_geodesic_dfa(2);
        assert!(!d.run(&w("abA")));
        assert!(d.run(&w("baab")));
        assert_eq!(words_of_length(d.alphabet(), 2).filter(|w| d.run(w)).count(), 12);
    }

    #[test]
    fn out_of_alphabet_letters_reject() {
        assert!(!free_geodesic_dfa(2).run(&w("ac")));
    }

    #[test]
    fn incremental_delta() {
        let a = abelian_geodesic_dfa(2);
        assert!(delta_from_dfa(&a, &w("a"), Letter::gen(0)).unwrap());
        assert!(!delta_from_dfa(&a, &w("a"), Letter::inv(0)).unwrap());
        let f = free_geodesic_dfa(2);
        assert!(!delta_from_dfa(&f, &w("ab"), Letter::inv(1)).unwrap());
        assert!(matches!(
            delta_from_dfa(&f, &w("aA"), Letter::gen(0)),
            Err(Error::NotGeodesicInput(_))
        ));
    }

    #[test]
    fn run_costs_one_lookup_per_letter() {
        let d = abelian_geodesic_dfa(2);
        for word in words_up_to(d.alphabet(), 4) {
            assert_eq!(d.run_counted(&word).1, word.len());
        }
    }

    #[test]
    fn validation_against_balls() {
        let z2 = Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), 5).unwrap();
        let f2 = Ball::build(Arc::new(FreeGroup::new(2).unwrap()), 5).unwrap();
        let r = validate_dfa_against_ball(&abelian_geodesic_dfa(2), &z2, 5).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.checked, 1365);
        assert!(validate_dfa_against_ball(&free_geodesic_dfa(2), &f2, 5)
            .unwrap()
            .is_clean());

        // the free acceptor is wrong for Z², first at length 3
        let free = free_geodesic_dfa(2);
        assert!(validate_dfa_against_ball(&free, &z2, 2).unwrap().is_clean());
        let r = validate_dfa_against_ball(&free, &z2, 3).unwrap();
        assert!(r
            .mismatches
            .iter()
            .any(|m| m.word == w("abA") && m.accepted && !m.geodesic));
        assert!(r.mismatches.iter().all(|m| m.accepted && !m.geodesic));
    }

    #[test]
    fn table_export() {
        let t = free_geodesic_dfa(1).to_table(&['a']);
        assert_eq!(t, "state a A\n0* 1 2\n1* 1 3\n2* 3 2\n3 3 3\n");
    }
}
