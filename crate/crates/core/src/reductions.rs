//! Constructive reductions between the geodesic problems.
//!
//! * Problems 3, 4 and 5 reduce to one another with polynomially many oracle
//!   calls: [`geodesic_from_length`], [`length_from_geodesic`],
//!   [`length_from_bounded`], [`bounded_from_length`].
//! * Problem 5 answers Problem 1 with at most two calls: [`delta_from_bounded`].
//! * Problem 2 plus an enumeration of relator conjugates answers Problem 3:
//!   [`geodesic_from_delta`]. This one is only a semi-decision procedure in
//!   general, so it runs under explicit budgets.
//!
//! Every reduction counts its own oracle calls in the returned
//! [`ReductionOutcome`].

use crate::error::{Error, Result};
use crate::oracles::{BoundedOracle, CallStats, Delta, GeodesicOracle, IncreaseOracle, LengthOracle};
use crate::presentation::Presentation;
use crate::word::{words_up_to, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome<T> {
    pub answer: T,
    pub stats: CallStats,
}

/// `ℓ(u)` by querying `ℓ(u) ≤ n−1, n−2, …` until the first negative answer.
///
/// Uses at most `|u|` calls. The first "no" at bound `k` means `ℓ(u) = k+1`.
pub fn length_from_bounded<O>(p5: &O, u: &Word) -> Result<ReductionOutcome<usize>>
where
    O: BoundedOracle + ?Sized,
{
    let n = u.len();
    let mut stats = CallStats::default();
    stats.saw(u);
    let mut answer = 0;
    for k in (0..n).rev() {
        stats.p5 += 1;
        if !p5.bounded(u, k as i64)? {
            answer = k + 1;
            break;
        }
    }
    // every bound down to 0 held (or u is empty): u is trivial
    Ok(ReductionOutcome { answer, stats })
}

/// A geodesic for `u` from a length oracle.
///
/// With `m = ℓ(u)`, greedily picks letters `x₁, …, x_m` such that
/// `ℓ(u x₁ … x_i) = m − i`, then returns `x_m⁻¹ … x₁⁻¹`. Letters are tried in
/// `alphabet` order, which must be inverse-closed. At most `1 + k·m` calls for
/// an alphabet of `k` letters.
pub fn geodesic_from_length<O>(p4: &O, u: &Word, alphabet: &[Letter]) -> Result<ReductionOutcome<Word>>
where
    O: LengthOracle + ?Sized,
{
    let mut stats = CallStats::default();
    stats.saw(u);
    stats.p4 += 1;
    let m = p4.length(u)?;
    if m == u.len() {
        return Ok(ReductionOutcome {
            answer: u.clone(),
            stats,
        });
    }
    if m > u.len() {
        return Err(Error::InconsistentOracle(format!(
            "length {m} exceeds word length {}",
            u.len()
        )));
    }

    let mut current = u.clone();
    let mut descent = Vec::with_capacity(m);
    for i in 1..=m {
        let mut found = None;
        for &x in alphabet {
            let candidate = current.with(x);
            stats.saw(&candidate);
            stats.p4 += 1;
            if p4.length(&candidate)? == m - i {
                found = Some((x, candidate));
                break;
            }
        }
        let Some((x, next)) = found else {
            return Err(Error::NoDescentLetter { step: i });
        };
        descent.push(x);
        current = next;
    }
    Ok(ReductionOutcome {
        answer: Word::from(descent).inverse(),
        stats,
    })
}

/// `ℓ(u) ≤ k` from one length query.
pub fn bounded_from_length<O>(p4: &O, u: &Word, k: i64) -> Result<ReductionOutcome<bool>>
where
    O: LengthOracle + ?Sized,
{
    let mut stats = CallStats {
        p4: 1,
        ..CallStats::default()
    };
    stats.saw(u);
    let len = p4.length(u)?;
    Ok(ReductionOutcome {
        answer: k >= 0 && len as i64 <= k,
        stats,
    })
}

/// `ℓ(u)` as the length of one geodesic.
pub fn length_from_geodesic<O>(p3: &O, u: &Word) -> Result<ReductionOutcome<usize>>
where
    O: GeodesicOracle + ?Sized,
{
    let mut stats = CallStats {
        p3: 1,
        ..CallStats::default()
    };
    stats.saw(u);
    let g = p3.geodesic(u)?;
    Ok(ReductionOutcome { answer: g.len(), stats })
}

/// `ℓ(ux) − ℓ(u)` for a geodesic `u` from at most two bounded-length queries.
///
/// `u` being geodesic is the caller's contract and is not checked.
pub fn delta_from_bounded<O>(p5: &O, u: &Word, x: Letter) -> Result<ReductionOutcome<Delta>>
where
    O: BoundedOracle + ?Sized,
{
    let ux = u.with(x);
    let n = u.len() as i64;
    let mut stats = CallStats::default();
    stats.saw(&ux);

    stats.p5 += 1;
    if p5.bounded(&ux, n - 1)? {
        return Ok(ReductionOutcome {
            answer: Delta::Decrease,
            stats,
        });
    }
    stats.p5 += 1;
    let answer = if p5.bounded(&ux, n)? {
        Delta::Same
    } else {
        Delta::Increase
    };
    Ok(ReductionOutcome { answer, stats })
}

/// Limits for enumerating products of relator conjugates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumeratorConfig {
    /// Most conjugates multiplied together.
    pub max_factors: usize,
    /// Longest conjugating word.
    pub max_conjugator_length: usize,
    /// Most products yielded by one enumeration.
    pub max_products: usize,
    /// Oracle calls plus products examined, across one whole
    /// [`geodesic_from_delta`] run.
    pub max_steps: u64,
    /// Also use every cyclic rotation of each relator. A rotation of `r` is
    /// `s⁻¹ r s` for a prefix `s`, so the products are still products of
    /// relator conjugates, but short conjugators reach farther.
    pub rotations: bool,
}

impl Default for EnumeratorConfig {
    fn default() -> Self {
        EnumeratorConfig {
            max_factors: 2,
            max_conjugator_length: 2,
            max_products: 100_000,
            max_steps: 1_000_000,
            rotations: true,
        }
    }
}

/// Freely reduced products `c₁ ⋯ c_j` of conjugates `c = w r^{±1} w⁻¹`.
///
/// Ordered by factor count `j = 1..=K`, then lexicographically on the
/// tuple of `(conjugator, relator index, rotation, sign)` choices,
/// conjugators in shortlex order. Only freely reduced conjugators are used.
/// Rotations are skipped unless [`EnumeratorConfig::rotations`] is set.
/// Duplicates are not removed.
pub fn enumerate_conjugate_products(p: &Presentation, cfg: &EnumeratorConfig) -> ConjugateProducts {
    let alphabet = p.alphabet();
    let mut factors = Vec::new();
    if !p.relators().is_empty() {
        for w in words_up_to(&alphabet, cfg.max_conjugator_length) {
            if !w.is_freely_reduced() {
                continue;
            }
            let w_inv = w.inverse();
            for r in p.relators() {
                let turns = if cfg.rotations { r.len().max(1) } else { 1 };
                for t in 0..turns {
                    let rotated: Word = r[t..].iter().chain(&r[..t]).copied().collect();
                    for rr in [rotated.clone(), rotated.inverse()] {
                        factors.push(w.concat(&rr).concat(&w_inv).free_reduce());
                    }
                }
            }
        }
    }
    ConjugateProducts {
        digits: Vec::new(),
        max_factors: if factors.is_empty() { 0 } else { cfg.max_factors },
        factors,
        remaining: cfg.max_products,
    }
}

/// Iterator returned by [`enumerate_conjugate_products`].
#[derive(Debug, Clone)]
pub struct ConjugateProducts {
    factors: Vec<Word>,
    digits: Vec<usize>,
    max_factors: usize,
    remaining: usize,
}

impl ConjugateProducts {
    /// Number of single conjugates the products are built from.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    fn advance(&mut self) -> bool {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.factors.len() {
                return true;
            }
            *d = 0;
        }
        // wrapped: move to one more factor
        if self.digits.len() < self.max_factors {
            self.digits.push(0);
            true
        } else {
            false
        }
    }
}

impl Iterator for ConjugateProducts {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.remaining == 0 || self.max_factors == 0 {
            return None;
        }
        if self.digits.is_empty() {
            self.digits.push(0);
        } else if !self.advance() {
            self.remaining = 0;
            return None;
        }
        self.remaining -= 1;
        let product: Word = self
            .digits
            .iter()
            .flat_map(|&d| self.factors[d].iter().copied())
            .collect();
        Some(product.free_reduce())
    }
}

struct Prop3Search<'a, O: ?Sized> {
    p2: &'a O,
    presentation: &'a Presentation,
    cfg: EnumeratorConfig,
    products: ConjugateProducts,
    cache: Vec<Word>,
    exhausted: bool,
    steps: u64,
    stats: CallStats,
}

impl<O: IncreaseOracle + ?Sized> Prop3Search<'_, O> {
    fn step(&mut self, position: usize) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cfg.max_steps {
            return Err(Error::BudgetExhausted { position });
        }
        Ok(())
    }

    fn product(&mut self, i: usize) -> Option<&Word> {
        while self.cache.len() <= i && !self.exhausted {
            match self.products.next() {
                Some(p) => self.cache.push(p),
                None => self.exhausted = true,
            }
        }
        self.cache.get(i)
    }

    /// Geodesic for `w`, built prefix by prefix. `outer` is the position in
    /// the top-level input that triggered this call, for error reporting.
    fn geodesic(&mut self, w: &Word, outer: Option<usize>) -> Result<Word> {
        let mut v = Word::empty();
        for (i, &x) in w.iter().enumerate() {
            let position = outer.unwrap_or(i);
            v = self.extend(v, x, position)?;
        }
        Ok(v)
    }

    /// Geodesic for `v·x` given geodesic `v`.
    fn extend(&mut self, v: Word, x: Letter, position: usize) -> Result<Word> {
        self.step(position)?;
        self.stats.p2 += 1;
        let vx = v.with(x);
        self.stats.saw(&vx);
        if self.p2.increases(&v, x)? {
            return Ok(vx);
        }

        // the empty product first, then the enumeration
        let mut z = vx.free_reduce();
        let mut i = 0;
        while z.len() > v.len() {
            self.step(position)?;
            let Some(p) = self.product(i) else {
                return Err(Error::BudgetExhausted { position });
            };
            z = p.concat(&vx).free_reduce();
            i += 1;
        }

        if z.len() + 1 == v.len() {
            Ok(z)
        } else if z.len() == v.len() {
            self.geodesic(&z, Some(position))
        } else {
            Err(Error::InconsistentOracle(format!(
                "{} has a representative of length {} but its prefix {} was taken as geodesic",
                self.presentation.format_word(&vx),
                z.len(),
                self.presentation.format_word(&v),
            )))
        }
    }
}

/// A geodesic for `w` from a Problem 2 oracle and the relators of `p`.
///
/// Processes `w` one letter at a time, keeping a geodesic `v` for the prefix.
/// When `ℓ(vx) > ℓ(v)` fails, scans products of relator conjugates `p_j` for a
/// free reduction of `p_j·v·x` no longer than `v`; a word one letter shorter
/// is geodesic, one of equal length is solved recursively. Fails with
/// [`Error::BudgetExhausted`] if `cfg` runs out first.
pub fn geodesic_from_delta<O>(
    p2: &O,
    p: &Presentation,
    w: &Word,
    cfg: &EnumeratorConfig,
) -> Result<ReductionOutcome<Word>>
where
    O: IncreaseOracle + ?Sized,
{
    let mut search = Prop3Search {
        p2,
        presentation: p,
        cfg: *cfg,
        products: enumerate_conjugate_products(p, cfg),
        cache: Vec::new(),
        exhausted: false,
        steps: 0,
        stats: CallStats::default(),
    };
    let answer = search.geodesic(w, None)?;
    Ok(ReductionOutcome {
        answer,
        stats: search.stats,
    })
}
