//! Oracle interfaces for the five geodesic problems, call counting, and the
//! exact Cayley-ball oracle.
//!
//! | problem | trait             | question                                  |
//! |---------|-------------------|-------------------------------------------|
//! | 1       | [`DeltaOracle`]   | `ℓ(ux) − ℓ(u)` for geodesic `u`           |
//! | 2       | [`IncreaseOracle`]| `ℓ(ux) > ℓ(u)` for geodesic `u`           |
//! | 3       | [`GeodesicOracle`]| a geodesic representative of `w`          |
//! | 4       | [`LengthOracle`]  | `ℓ(w)`                                    |
//! | 5       | [`BoundedOracle`] | `ℓ(w) ≤ k`                                |
//!
//! Closures of the matching shape implement the traits, so any function can
//! stand in for an oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::models::{ElementKey, GroupModel};
use crate::word::{Letter, Word};

/// `ℓ(ux) − ℓ(u)`, which is always −1, 0 or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Delta {
    Decrease,
    Same,
    Increase,
}

impl Delta {
    pub fn from_diff(diff: i64) -> Option<Delta> {
        match diff {
            -1 => Some(Delta::Decrease),
            0 => Some(Delta::Same),
            1 => Some(Delta::Increase),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Delta::Decrease => -1,
            Delta::Same => 0,
            Delta::Increase => 1,
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Problem 1.
pub trait DeltaOracle {
    fn delta(&self, u: &Word, x: Letter) -> Result<Delta>;
}

/// Problem 2.
pub trait IncreaseOracle {
    fn increases(&self, u: &Word, x: Letter) -> Result<bool>;
}

/// Problem 3.
pub trait GeodesicOracle {
    fn geodesic(&self, w: &Word) -> Result<Word>;
}

/// Problem 4.
pub trait LengthOracle {
    fn length(&self, w: &Word) -> Result<usize>;
}

/// Problem 5. Negative bounds are allowed and always answer `false`.
pub trait BoundedOracle {
    fn bounded(&self, w: &Word, k: i64) -> Result<bool>;
}

impl<F: Fn(&Word, Letter) -> Result<Delta>> DeltaOracle for F {
    fn delta(&self, u: &Word, x: Letter) -> Result<Delta> {
        self(u, x)
    }
}

impl<F: Fn(&Word, Letter) -> Result<bool>> IncreaseOracle for F {
    fn increases(&self, u: &Word, x: Letter) -> Result<bool> {
        self(u, x)
    }
}

impl<F: Fn(&Word) -> Result<Word>> GeodesicOracle for F {
    fn geodesic(&self, w: &Word) -> Result<Word> {
        self(w)
    }
}

impl<F: Fn(&Word) -> Result<usize>> LengthOracle for F {
    fn length(&self, w: &Word) -> Result<usize> {
        self(w)
    }
}

impl<F: Fn(&Word, i64) -> Result<bool>> BoundedOracle for F {
    fn bounded(&self, w: &Word, k: i64) -> Result<bool> {
        self(w, k)
    }
}

/// Per-problem invocation counts plus the longest word handed to an oracle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CallStats {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub p4: u64,
    pub p5: u64,
    pub max_word_len: usize,
}

impl CallStats {
    pub fn total(&self) -> u64 {
        self.p1 + self.p2 + self.p3 + self.p4 + self.p5
    }

    pub(crate) fn saw(&mut self, w: &Word) {
        self.max_word_len = self.max_word_len.max(w.len());
    }

    pub fn merge(&mut self, other: &CallStats) {
        self.p1 += other.p1;
        self.p2 += other.p2;
        self.p3 += other.p3;
        self.p4 += other.p4;
        self.p5 += other.p5;
        self.max_word_len = self.max_word_len.max(other.max_word_len);
    }
}

/// Wraps an oracle and counts every call made through it. Counters are
/// atomic, so a shared wrapper stays exact under concurrent use.
#[derive(Debug, Default)]
pub struct Counting<O> {
    inner: O,
    counts: [AtomicU64; 5],
    max_word_len: AtomicUsize,
}

impl<O> Counting<O> {
    pub fn new(inner: O) -> Self {
        Counting {
            inner,
            counts: Default::default(),
            max_word_len: AtomicUsize::new(0),
        }
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn stats(&self) -> CallStats {
        let c = |i: usize| self.counts[i].load(Ordering::Relaxed);
        CallStats {
            p1: c(0),
            p2: c(1),
            p3: c(2),
            p4: c(3),
            p5: c(4),
            max_word_len: self.max_word_len.load(Ordering::Relaxed),
        }
    }

    pub fn reset(&self) {
        for c in &self.counts {
            c.store(0, Ordering::Relaxed);
        }
        self.max_word_len.store(0, Ordering::Relaxed);
    }

    fn record(&self, problem: usize, len: usize) {
        self.counts[problem].fetch_add(1, Ordering::Relaxed);
        self.max_word_len.fetch_max(len, Ordering::Relaxed);
    }
}

impl<O: DeltaOracle> DeltaOracle for Counting<O> {
    fn delta(&self, u: &Word, x: Letter) -> Result<Delta> {
        self.record(0, u.len() + 1);
        self.inner.delta(u, x)
    }
}

impl<O: IncreaseOracle> IncreaseOracle for Counting<O> {
    fn increases(&self, u: &Word, x: Letter) -> Result<bool> {
        self.record(1, u.len() + 1);
        self.inner.increases(u, x)
    }
}

impl<O: GeodesicOracle> GeodesicOracle for Counting<O> {
    fn geodesic(&self, w: &Word) -> Result<Word> {
        self.record(2, w.len());
        self.inner.geodesic(w)
    }
}

impl<O: LengthOracle> LengthOracle for Counting<O> {
    fn length(&self, w: &Word) -> Result<usize> {
        self.record(3, w.len());
        self.inner.length(w)
    }
}

impl<O: BoundedOracle> BoundedOracle for Counting<O> {
    fn bounded(&self, w: &Word, k: i64) -> Result<bool> {
        self.record(4, w.len());
        self.inner.bounded(w, k)
    }
}

/// Default cap on the number of elements a [`Ball`] may hold.
pub const DEFAULT_BALL_CAPACITY: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    key: ElementKey,
    dist: usize,
    parent: Option<(usize, Letter)>,
}

/// The Cayley ball of radius `R` around the identity, built by breadth-first
/// search. Layer `d` holds exactly the elements at distance `d`.
pub struct Ball {
    model: Arc<dyn GroupModel>,
    alphabet: Vec<Letter>,
    radius: usize,
    nodes: Vec<Node>,
    index: HashMap<ElementKey, usize>,
    layer_starts: Vec<usize>,
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ball")
            .field("model", &self.model.name())
            .field("radius", &self.radius)
            .field("layers", &self.layer_sizes())
            .finish()
    }
}

impl Ball {
    pub fn build(model: Arc<dyn GroupModel>, radius: usize) -> Result<Ball> {
        Ball::build_with_capacity(model, radius, DEFAULT_BALL_CAPACITY)
    }

    /// Neighbours are discovered in alphabet order; the first discovery of an
    /// element fixes its parent.
    pub fn build_with_capacity(model: Arc<dyn GroupModel>, radius: usize, capacity: usize) -> Result<Ball> {
        let alphabet = model.presentation().alphabet();
        let identity = model.identity_key();
        let mut ball = Ball {
            model,
            alphabet,
            radius,
            nodes: vec![Node {
                key: identity.clone(),
                dist: 0,
                parent: None,
            }],
            index: HashMap::from([(identity, 0)]),
            layer_starts: vec![0, 1],
        };
        if capacity == 0 {
            return Err(Error::CapacityExceeded { limit: capacity });
        }
        for d in 0..radius {
            let (lo, hi) = (ball.layer_starts[d], ball.layer_starts[d + 1]);
            for i in lo..hi {
                let word = ball.path_to(i);
                for &x in &ball.alphabet {
                    let key = ball.model.eval(&word.with(x));
                    if ball.index.contains_key(&key) {
                        continue;
                    }
                    if ball.nodes.len() >= capacity {
                        return Err(Error::CapacityExceeded { limit: capacity });
                    }
                    ball.index.insert(key.clone(), ball.nodes.len());
                    ball.nodes.push(Node {
                        key,
                        dist: d + 1,
                        parent: Some((i, x)),
                    });
                }
            }
            ball.layer_starts.push(ball.nodes.len());
        }
        Ok(ball)
    }

    fn path_to(&self, mut i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.nodes[i].dist);
        while let Some((p, x)) = self.nodes[i].parent {
            letters.push(x);
            i = p;
        }
        letters.reverse();
        Word::from(letters)
    }

    pub fn model(&self) -> &Arc<dyn GroupModel> {
        &self.model
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layer_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Distance of an element from the identity, if it lies in the ball.
    pub fn distance(&self, key: &ElementKey) -> Option<usize> {
        self.index.get(key).map(|&i| self.nodes[i].dist)
    }

    /// `(element, parent element, incoming letter)` in discovery order.
    pub fn parents(&self) -> impl Iterator<Item = (&ElementKey, Option<(&ElementKey, Letter)>)> {
        self.nodes.iter().map(|n| {
            let parent = n.parent.map(|(p, x)| (&self.nodes[p].key, x));
            (&n.key, parent)
        })
    }

    fn locate(&self, w: &Word) -> Result<usize> {
        self.index
            .get(&self.model.eval(w))
            .copied()
            .ok_or(Error::RadiusExceeded { radius: self.radius })
    }

    /// `ℓ(w)`.
    pub fn length_of(&self, w: &Word) -> Result<usize> {
        self.locate(w).map(|i| self.nodes[i].dist)
    }

    /// `ℓ(w) ≤ k`.
    pub fn is_bounded(&self, w: &Word, k: i64) -> Result<bool> {
        let len = self.length_of(w)?;
        Ok(k >= 0 && len as i64 <= k)
    }

    /// The geodesic obtained by following parent pointers back to the identity.
    pub fn geodesic_of(&self, w: &Word) -> Result<Word> {
        self.locate(w).map(|i| self.path_to(i))
    }

    pub fn is_geodesic(&self, w: &Word) -> Result<bool> {
        Ok(self.length_of(w)? == w.len())
    }

    /// `ℓ(ux) − ℓ(u)`; `u` must be geodesic.
    pub fn delta_of(&self, u: &Word, x: Letter) -> Result<Delta> {
        let lu = self.length_of(u)?;
        if lu != u.len() {
            return Err(Error::NotGeodesic(self.model.presentation().format_word(u)));
        }
        let lux = self.length_of(&u.with(x))?;
        Delta::from_diff(lux as i64 - lu as i64).ok_or_else(|| {
            Error::InconsistentOracle(format!("length changed by {} after one letter", lux as i64 - lu as i64))
        })
    }
}

impl DeltaOracle for Ball {
    fn delta(&self, u: &Word, x: Letter) -> Result<Delta> {
        self.delta_of(u, x)
    }
}

impl IncreaseOracle for Ball {
    fn increases(&self, u: &Word, x: Letter) -> Result<bool> {
        Ok(self.delta_of(u, x)? == Delta::Increase)
    }
}

impl GeodesicOracle for Ball {
    fn geodesic(&self, w: &Word) -> Result<Word> {
        self.geodesic_of(w)
    }
}

impl LengthOracle for Ball {
    fn length(&self, w: &Word) -> Result<usize> {
        self.length_of(w)
    }
}

impl BoundedOracle for Ball {
    fn bounded(&self, w: &Word, k: i64) -> Result<bool> {
        self.is_bounded(w, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{FreeAbelian, FreeGroup, RewritingModel};
    use crate::presentation::Presentation;

    fn z2(radius: usize) -> Ball {
        Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), radius).unwrap()
    }

    fn f2(radius: usize) -> Ball {
        Ball::build(Arc::new(FreeGroup::new(2).unwrap()), radius).unwrap()
    }

    fn z3(radius: usize) -> Ball {
        let p = Presentation::parse("gens: a\nrels: aaa\nrules: aA -> ; Aa -> ; aa -> A ; AA -> a").unwrap();
        Ball::build(Arc::new(RewritingModel::new(p, true).unwrap()), radius).unwrap()
    }

    fn w(b: &Ball, s: &str) -> Word {
        b.model().presentation().parse_word(s).unwrap()
    }

    #[test]
    fn layer_sizes() {
        assert_eq!(z2(1).layer_sizes(), vec![1, 4]);
        assert_eq!(z2(1).len(), 5);
        assert_eq!(f2(2).layer_sizes(), vec![1, 4, 12]);
        assert_eq!(z3(1).layer_sizes(), vec![1, 2]);
        assert_eq!(z3(3).layer_sizes(), vec![1, 2, 0, 0]);
    }

    #[test]
    fn capacity_is_enforced() {
        let m: Arc<dyn GroupModel> = Arc::new(FreeGroup::new(2).unwrap());
        let err = Ball::build_with_capacity(m.clone(), 3, 10).unwrap_err();
        assert_eq!(err, Error::CapacityExceeded { limit: 10 });
        assert!(Ball::build_with_capacity(m, 2, 17).is_ok());
    }

    #[test]
    fn length_and_bounded() {
        let b = z2(4);
        assert_eq!(b.length_of(&w(&b, "abAB")).unwrap(), 0);
        assert_eq!(b.length_of(&w(&b, "aab")).unwrap(), 3);
        assert!(b.is_bounded(&w(&b, "abAB"), 0).unwrap());
        assert!(!b.is_bounded(&w(&b, "aab"), 2).unwrap());
        assert!(!b.is_bounded(&w(&b, ""), -1).unwrap());
        assert_eq!(z2(1).length_of(&w(&b, "aab")), Err(Error::RadiusExceeded { radius: 1 }));
    }

    #[test]
    fn geodesics() {
        let b = z2(4);
        assert_eq!(b.geodesic_of(&w(&b, "abAB")).unwrap(), Word::empty());
        assert_eq!(b.geodesic_of(&w(&b, "abA")).unwrap(), w(&b, "b"));
        let f = f2(3);
        assert_eq!(f.geodesic_of(&w(&f, "abB")).unwrap(), w(&f, "a"));
    }

    #[test]
    fn deltas() {
        let b = z2(3);
        assert_eq!(b.delta_of(&w(&b, "a"), Letter::gen(0)).unwrap(), Delta::Increase);
        assert_eq!(b.delta_of(&w(&b, "a"), Letter::inv(0)).unwrap(), Delta::Decrease);
        assert!(matches!(
            b.delta_of(&w(&b, "aA"), Letter::gen(0)),
            Err(Error::NotGeodesic(_))
        ));
        let c = z3(3);
        assert_eq!(c.delta_of(&w(&c, "a"), Letter::gen(0)).unwrap(), Delta::Same);
        assert!(!c.increases(&w(&c, "a"), Letter::gen(0)).unwrap());
    }

    #[test]
    fn geodesic_checks() {
        let b = z2(3);
        assert!(b.is_geodesic(&w(&b, "ab")).unwrap());
        assert!(!b.is_geodesic(&w(&b, "aA")).unwrap());
        let f = f2(3);
        assert!(f.is_geodesic(&w(&f, "aa")).unwrap());
    }

    #[test]
    fn counting_wrapper_counts() {
        let b = z2(3);
        let len = |u: &Word| b.length_of(u);
        let counted = Counting::new(len);
        counted.length(&w(&b, "aab")).unwrap();
        counted.length(&w(&b, "a")).unwrap();
        assert_eq!(counted.stats().p4, 2);
        assert_eq!(counted.stats().max_word_len, 3);
        counted.reset();
        assert_eq!(counted.stats(), CallStats::default());
    }

    #[test]
    fn delta_display() {
        assert_eq!(Delta::Decrease.to_string(), "-1");
        assert_eq!(Delta::Same.to_string(), "0");
        assert_eq!(Delta::Increase.to_string(), "1");
    }
}
