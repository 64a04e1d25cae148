//! Group presentations, the word text syntax, and length-reducing rewriting.
//!
//! Words are written with one character per letter: the generator's
//! lowercase name, or its uppercase form for the inverse. A presentation file
//! holds one directive per line:
//!
//! ```text
//! # Z/3
//! gens: a
//! rels: aaa
//! rules: aA -> ; Aa -> ; aa -> A ; AA -> a
//! ```
//!
//! `rels:` and `rules:` may repeat; an empty right-hand side is the empty word.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{standard_alphabet, Letter, Word};

/// A rewriting rule `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    AllRelatorsEven,
    SomeRelatorOdd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<char>,
    relators: Vec<Word>,
    rules: Vec<Rule>,
}

impl Presentation {
    pub fn new(names: impl IntoIterator<Item = char>) -> Result<Self> {
        let names: Vec<char> = names.into_iter().collect();
        if names.len() > 26 {
            return Err(Error::TooManyGenerators(names.len()));
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidGeneratorName(c));
            }
            if names[..i].contains(&c) {
                return Err(Error::DuplicateGenerator(c));
            }
        }
        Ok(Presentation {
            names,
            relators: Vec::new(),
            rules: Vec::new(),
        })
    }

    /// `k` generators named `a`, `b`, `c`, ….
    pub fn with_rank(k: usize) -> Result<Self> {
        if k > 26 {
            return Err(Error::TooManyGenerators(k));
        }
        Presentation::new((0..k as u8).map(|i| (b'a' + i) as char))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Generators in presentation order, then their inverses.
    pub fn alphabet(&self) -> Vec<Letter> {
        standard_alphabet(self.rank())
    }

    pub fn add_relator(&mut self, r: Word) -> Result<()> {
        self.check_letters(&r)?;
        self.relators.push(r);
        Ok(())
    }

    /// Appends a rule without checking it; see [`Presentation::validate_rules`].
    pub fn add_rule(&mut self, lhs: Word, rhs: Word) {
        self.rules.push(Rule { lhs, rhs });
    }

    pub fn parse_relator(mut self, text: &str) -> Result<Self> {
        let r = self.parse_word(text)?;
        self.add_relator(r)?;
        Ok(self)
    }

    fn check_letters(&self, w: &Word) -> Result<()> {
        match w.iter().find(|x| x.generator() >= self.rank()) {
            Some(x) => Err(Error::UnknownLetter(letter_char(*x))),
            None => Ok(()),
        }
    }

    pub fn parse_letter(&self, c: char) -> Result<Letter> {
        let lower = c.to_ascii_lowercase();
        match self.names.iter().position(|&n| n == lower) {
            Some(i) => Ok(Letter::new(i, c.is_ascii_uppercase())),
            None => Err(Error::UnknownLetter(c)),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars().map(|c| self.parse_letter(c)).collect()
    }

    pub fn format_letter(&self, x: Letter) -> char {
        let c = self.names[x.generator()];
        if x.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.iter().map(|&x| self.format_letter(x)).collect()
    }

    pub fn relator_parity(&self) -> ParityClass {
        if self.relators.iter().all(|r| r.len() % 2 == 0) {
            ParityClass::AllRelatorsEven
        } else {
            ParityClass::SomeRelatorOdd
        }
    }

    /// Every rule must be strictly length-reducing and use only listed generators.
    pub fn validate_rules(&self) -> Result<()> {
        for (index, rule) in self.rules.iter().enumerate() {
            let bad = |reason| Error::InvalidRule {
                index,
                rule: format!("{} -> {}", rule.lhs, rule.rhs),
                reason,
            };
            if rule
                .lhs
                .iter()
                .chain(rule.rhs.iter())
                .any(|x| x.generator() >= self.rank())
            {
                return Err(bad("references an unknown generator"));
            }
            if rule.rhs.len() >= rule.lhs.len() {
                return Err(bad("right-hand side is not shorter than left-hand side"));
            }
        }
        Ok(())
    }

    /// Applies the rules until none matches: the leftmost matching position
    /// wins, and among rules matching there the first declared one.
    pub fn rewrite_to_normal_form(&self, w: &Word) -> Word {
        let mut cur: Vec<Letter> = w.letters().to_vec();
        while let Some((pos, rule)) = self.leftmost_match(&cur) {
            cur.splice(pos..pos + rule.lhs.len(), rule.rhs.iter().copied());
        }
        Word::from(cur)
    }

    fn leftmost_match(&self, w: &[Letter]) -> Option<(usize, &Rule)> {
        (0..w.len()).find_map(|pos| {
            self.rules
                .iter()
                .find(|r| !r.lhs.is_empty() && w[pos..].starts_with(&r.lhs))
                .map(|r| (pos, r))
        })
    }

    /// Parses the line-oriented presentation format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected `directive: value`, found {line:?}"),
                });
            };
            lines.push((i + 1, key.trim(), value.trim()));
        }

        let mut gens = lines.iter().filter(|(_, k, _)| *k == "gens");
        let Some(&(gline, _, gvalue)) = gens.next() else {
            return Err(Error::Parse {
                line: 0,
                message: "missing `gens:` line".into(),
            });
        };
        if let Some(&(line, _, _)) = gens.next() {
            return Err(Error::Parse {
                line,
                message: "repeated `gens:` line".into(),
            });
        }
        let mut names = Vec::new();
        for tok in gvalue.split_whitespace() {
            let mut chars = tok.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => names.push(c),
                _ => {
                    return Err(Error::Parse {
                        line: gline,
                        message: format!("generator names are single characters, found {tok:?}"),
                    })
                }
            }
        }
        let mut p = Presentation::new(names)?;

        for &(line, key, value) in &lines {
            let at_line = |e: Error| match e {
                Error::UnknownLetter(c) => Error::Parse {
                    line,
                    message: format!("unknown letter {c:?}"),
                },
                e => e,
            };
            match key {
                "gens" => {}
                "rels" => {
                    for tok in value.split(|c: char| c.is_whitespace() || c == ',' || c == ';') {
                        if !tok.is_empty() {
                            let r = p.parse_word(tok).map_err(at_line)?;
                            p.add_relator(r)?;
                        }
                    }
                }
                "rules" => {
                    for part in value.split(';') {
                        if part.trim().is_empty() {
                            continue;
                        }
                        let Some((lhs, rhs)) = part.split_once("->") else {
                            return Err(Error::Parse {
                                line,
                                message: format!("expected `lhs -> rhs`, found {:?}", part.trim()),
                            });
                        };
                        let lhs = p.parse_word(lhs.trim()).map_err(at_line)?;
                        let rhs = p.parse_word(rhs.trim()).map_err(at_line)?;
                        p.add_rule(lhs, rhs);
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown directive {other:?}"),
                    })
                }
            }
        }
        p.validate_rules()?;
        Ok(p)
    }
}

fn letter_char(x: Letter) -> char {
    Word::from(vec![x]).to_string().chars().next().unwrap_or('?')
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for c in &self.names {
            write!(f, " {c}")?;
        }
        writeln!(f)?;
        if !self.relators.is_empty() {
            let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
            writeln!(f, "rels: {}", rels.join(" "))?;
        }
        if !self.rules.is_empty() {
            let rules: Vec<String> = self
                .rules
                .iter()
                .map(|r| format!("{} -> {}", self.format_word(&r.lhs), self.format_word(&r.rhs)))
                .collect();
            writeln!(f, "rules: {}", rules.join(" ; "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_rules(with_inverse_cube: bool) -> Presentation {
        let mut p = Presentation::with_rank(1).unwrap();
        for (l, r) in [("aA", ""), ("Aa", ""), ("aa", "A")] {
            let (l, r) = (p.parse_word(l).unwrap(), p.parse_word(r).unwrap());
            p.add_rule(l, r);
        }
        if with_inverse_cube {
            let (l, r) = (p.parse_word("AA").unwrap(), p.parse_word("a").unwrap());
            p.add_rule(l, r);
        }
        p
    }

    #[test]
    fn parse_word_examples() {
        let p = Presentation::with_rank(2).unwrap();
        assert_eq!(
            p.parse_word("abA").unwrap().letters(),
            &[Letter::gen(0), Letter::gen(1), Letter::inv(0)]
        );
        assert!(Presentation::with_rank(1).unwrap().parse_word("").unwrap().is_empty());
        assert_eq!(p.parse_word("abc"), Err(Error::UnknownLetter('c')));
    }

    #[test]
    fn format_word_examples() {
        let p = Presentation::with_rank(2).unwrap();
        assert_eq!(p.format_word(&Word::from(vec![Letter::gen(0), Letter::inv(0)])), "aA");
        assert_eq!(p.format_word(&Word::empty()), "");
        assert_eq!(p.format_word(&Word::from(vec![Letter::inv(1)])), "B");
    }

    #[test]
    fn free_reduce_over_three_generators() {
        let p = Presentation::with_rank(3).unwrap();
        let w = p.parse_word("abBc").unwrap();
        assert_eq!(p.format_word(&w.free_reduce()), "ac");
    }

    #[test]
    fn parity_examples() {
        let p = Presentation::with_rank(2).unwrap().parse_relator("abAB").unwrap();
        assert_eq!(p.relator_parity(), ParityClass::AllRelatorsEven);
        let p = Presentation::with_rank(1).unwrap().parse_relator("aaa").unwrap();
        assert_eq!(p.relator_parity(), ParityClass::SomeRelatorOdd);
        let p = Presentation::with_rank(2).unwrap();
        assert_eq!(p.relator_parity(), ParityClass::AllRelatorsEven);
    }

    #[test]
    fn rewrite_examples() {
        let p = z3_rules(false);
        assert_eq!(
            p.format_word(&p.rewrite_to_normal_form(&p.parse_word("aa").unwrap())),
            "A"
        );

        let mut q = Presentation::with_rank(2).unwrap();
        for (l, r) in [("aA", ""), ("Aa", ""), ("bB", ""), ("Bb", "")] {
            let (l, r) = (q.parse_word(l).unwrap(), q.parse_word(r).unwrap());
            q.add_rule(l, r);
        }
        assert!(q.rewrite_to_normal_form(&q.parse_word("abBA").unwrap()).is_empty());

        // aaa -> Aa -> ε
        let p = z3_rules(true);
        assert!(p.rewrite_to_normal_form(&p.parse_word("aaa").unwrap()).is_empty());
    }

    #[test]
    fn rule_validation() {
        let mut p = Presentation::with_rank(1).unwrap();
        let (l, r) = (p.parse_word("aa").unwrap(), p.parse_word("A").unwrap());
        p.add_rule(l, r);
        assert!(p.validate_rules().is_ok());

        let mut p = Presentation::with_rank(1).unwrap();
        let (l, r) = (p.parse_word("a").unwrap(), p.parse_word("aa").unwrap());
        p.add_rule(l, r);
        assert!(matches!(p.validate_rules(), Err(Error::InvalidRule { index: 0, .. })));

        // equal lengths are rejected too
        let mut p = Presentation::with_rank(2).unwrap();
        let (l, r) = (p.parse_word("ba").unwrap(), p.parse_word("ab").unwrap());
        p.add_rule(l, r);
        assert!(p.validate_rules().is_err());

        assert!(Presentation::with_rank(2).unwrap().validate_rules().is_ok());
    }

    #[test]
    fn parse_presentation_file() {
        let text = "# torus\ngens: a b\nrels: abAB\nrules: aa -> A ; aA -> ; Aa ->\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.names(), &['a', 'b']);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.rules().len(), 3);
        assert!(p.rules()[1].rhs.is_empty());
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn parse_presentation_errors() {
        assert!(matches!(Presentation::parse("rels: aa"), Err(Error::Parse { .. })));
        assert!(matches!(
            Presentation::parse("gens: a\nrels: ab"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Presentation::parse("gens: a\nrules: a -> aa"),
            Err(Error::InvalidRule { .. })
        ));
        assert_eq!(Presentation::parse("gens: a a"), Err(Error::DuplicateGenerator('a')));
        assert!(matches!(
            Presentation::parse("gens: a\nfoo: x"),
            Err(Error::Parse { .. })
        ));
    }
}
