//! Word-problem solvers: each model maps words to canonical element keys.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

/// Canonical serialized form of a group element. Two words evaluate to the
/// same key iff they represent the same element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementKey(Vec<u8>);

impl ElementKey {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        ElementKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for ElementKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// A group together with a solution to its word problem.
pub trait GroupModel: Send + Sync {
    fn presentation(&self) -> &Presentation;

    fn eval(&self, w: &Word) -> ElementKey;

    fn identity_key(&self) -> ElementKey {
        self.eval(&Word::empty())
    }

    /// `u =_G v`.
    fn equal(&self, u: &Word, v: &Word) -> bool {
        self.eval(u) == self.eval(v)
    }

    /// Short selector-style name, e.g. `free:2`.
    fn name(&self) -> String;
}

fn word_key(w: &Word, rank: usize) -> ElementKey {
    ElementKey(w.iter().map(|x| x.slot(rank) as u8).collect())
}

/// The free group; keys are freely reduced words.
#[derive(Debug, Clone)]
pub struct FreeGroup {
    presentation: Presentation,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidModel("free:0".into()));
        }
        Ok(FreeGroup {
            presentation: Presentation::with_rank(rank)?,
        })
    }
}

impl GroupModel for FreeGroup {
    fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn eval(&self, w: &Word) -> ElementKey {
        word_key(&w.free_reduce(), self.presentation.rank())
    }

    fn name(&self) -> String {
        format!("free:{}", self.presentation.rank())
    }
}

/// Z^k with the standard generators; keys are exponent-sum vectors.
#[derive(Debug, Clone)]
pub struct FreeAbelian {
    presentation: Presentation,
}

impl FreeAbelian {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidModel("abelian:0".into()));
        }
        let mut presentation = Presentation::with_rank(rank)?;
        for i in 0..rank {
            for j in i + 1..rank {
                let (a, b) = (Letter::gen(i), Letter::gen(j));
                presentation.add_relator(Word::from(vec![a, b, a.inverse(), b.inverse()]))?;
            }
        }
        Ok(FreeAbelian { presentation })
    }

    pub fn exponents(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0i64; self.presentation.rank()];
        for x in w.iter() {
            v[x.generator()] += i64::from(x.sign());
        }
        v
    }
}

impl GroupModel for FreeAbelian {
    fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn eval(&self, w: &Word) -> ElementKey {
        ElementKey(self.exponents(w).iter().flat_map(|e| e.to_le_bytes()).collect())
    }

    fn name(&self) -> String {
        format!("abelian:{}", self.presentation.rank())
    }
}

/// An element `(m / n^d, e)` of `Z[1/n] ⋊ Z`, the normal form of BS(1,n).
///
/// `a = (1, 0)` and `t = (0, 1)`; the product is
/// `(x₁, e₁)·(x₂, e₂) = (x₁ + n^e₁·x₂, e₁ + e₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BsElement {
    n: i64,
    m: BigInt,
    d: u64,
    e: i64,
}

impl BsElement {
    pub fn identity(n: i64) -> Self {
        BsElement {
            n,
            m: BigInt::zero(),
            d: 0,
            e: 0,
        }
    }

    /// Builds `(m / n^d, e)` in canonical form.
    pub fn new(n: i64, m: BigInt, d: u64, e: i64) -> Self {
        let mut el = BsElement { n, m, d, e };
        el.canonicalize();
        el
    }

    pub fn from_letter(n: i64, x: Letter) -> Self {
        let mut el = BsElement::identity(n);
        el.mul_letter(x);
        el
    }

    pub fn numerator(&self) -> &BigInt {
        &self.m
    }

    pub fn denominator_exponent(&self) -> u64 {
        self.d
    }

    pub fn t_exponent(&self) -> i64 {
        self.e
    }

    fn canonicalize(&mut self) {
        let n = BigInt::from(self.n);
        if self.m.is_zero() {
            self.d = 0;
            return;
        }
        while self.d > 0 {
            let (q, r) = self.m.div_rem(&n);
            if !r.is_zero() {
                break;
            }
            self.m = q;
            self.d -= 1;
        }
    }

    fn pow_n(&self, k: u64) -> BigInt {
        num_traits::pow(BigInt::from(self.n), k as usize)
    }

    /// `self += m / n^d` followed by canonicalization.
    fn add_fraction(&mut self, m: BigInt, d: u64) {
        let common = self.d.max(d);
        let lhs = &self.m * self.pow_n(common - self.d);
        let rhs = m * self.pow_n(common - d);
        self.m = lhs + rhs;
        self.d = common;
        self.canonicalize();
    }

    /// Right multiplication by a single letter. Generator 0 is `a`, 1 is `t`.
    pub fn mul_letter(&mut self, x: Letter) {
        match x.generator() {
            0 => {
                // n^e as a fraction
                let (m, d) = if self.e >= 0 {
                    (self.pow_n(self.e as u64), 0)
                } else {
                    (BigInt::one(), self.e.unsigned_abs())
                };
                let m = if x.is_inverse() { -m } else { m };
                self.add_fraction(m, d);
            }
            _ => self.e += i64::from(x.sign()),
        }
    }

    /// The group law.
    pub fn mul(&self, other: &BsElement) -> BsElement {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        // n^e₁ · m₂ / n^d₂
        let shift = self.e - other.d as i64;
        let (m, d) = if shift >= 0 {
            (&other.m * self.pow_n(shift as u64), 0)
        } else {
            (other.m.clone(), shift.unsigned_abs())
        };
        out.add_fraction(m, d);
        out.e += other.e;
        out
    }

    /// Value of the `Z[1/n]` coordinate as `(numerator, n^d)`.
    pub fn fraction(&self) -> (BigInt, BigInt) {
        (self.m.clone(), self.pow_n(self.d))
    }

    pub fn is_canonical(&self) -> bool {
        if self.m.is_zero() {
            return self.d == 0;
        }
        self.d == 0 || !(&self.m % BigInt::from(self.n)).is_zero()
    }

    fn key(&self) -> ElementKey {
        let mut bytes = Vec::with_capacity(24);
        bytes.extend_from_slice(&self.e.to_le_bytes());
        bytes.extend_from_slice(&self.d.to_le_bytes());
        bytes.extend_from_slice(&self.m.to_signed_bytes_le());
        ElementKey(bytes)
    }
}

/// The solvable Baumslag–Solitar group `⟨a, t | t a t⁻¹ = aⁿ⟩`.
#[derive(Debug, Clone)]
pub struct BaumslagSolitar {
    n: i64,
    presentation: Presentation,
}

impl BaumslagSolitar {
    pub fn new(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModel("bs:0".into()));
        }
        let mut presentation = Presentation::new(['a', 't'])?;
        let (a, t) = (Letter::gen(0), Letter::gen(1));
        // t a T (a^n)^{-1}
        let mut rel = vec![t, a, t.inverse()];
        let power = if n > 0 { a.inverse() } else { a };
        rel.extend(std::iter::repeat_n(power, n.unsigned_abs() as usize));
        presentation.add_relator(Word::from(rel))?;
        Ok(BaumslagSolitar { n, presentation })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn element(&self, w: &Word) -> BsElement {
        let mut el = BsElement::identity(self.n);
        for &x in w.iter() {
            el.mul_letter(x);
        }
        el
    }
}

impl GroupModel for BaumslagSolitar {
    fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn eval(&self, w: &Word) -> ElementKey {
        self.element(w).key()
    }

    fn name(&self) -> String {
        format!("bs:{}", self.n)
    }
}

/// Number of random relator insertions checked when a rewriting model is built.
pub const SMOKE_TEST_SAMPLES: usize = 200;
const SMOKE_TEST_MAX_LEN: usize = 8;
const SMOKE_TEST_SEED: u64 = 0x005e_ed0f_9e0d;

/// A presentation with a user-asserted confluent, length-reducing rewriting
/// system. Keys are normal forms.
#[derive(Debug, Clone)]
pub struct RewritingModel {
    presentation: Presentation,
}

impl RewritingModel {
    pub fn new(presentation: Presentation, assume_confluent: bool) -> Result<Self> {
        if !assume_confluent {
            return Err(Error::NotConfluentAsserted);
        }
        presentation.validate_rules()?;
        let model = RewritingModel { presentation };
        let identity = model.identity_key();
        for r in model.presentation.relators() {
            if model.eval(r) != identity {
                return Err(Error::RelatorNotTrivial(model.presentation.format_word(r)));
            }
        }
        model.smoke_test()?;
        Ok(model)
    }

    fn smoke_test(&self) -> Result<()> {
        let p = &self.presentation;
        if p.relators().is_empty() {
            return Ok(());
        }
        let alphabet = p.alphabet();
        let mut rng = ChaCha8Rng::seed_from_u64(SMOKE_TEST_SEED);
        let random_word = |rng: &mut ChaCha8Rng| -> Word {
            let len = rng.gen_range(0..=SMOKE_TEST_MAX_LEN);
            (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
        };
        for _ in 0..SMOKE_TEST_SAMPLES {
            let u = random_word(&mut rng);
            let v = random_word(&mut rng);
            let r = &p.relators()[rng.gen_range(0..p.relators().len())];
            let inserted = u.concat(r).concat(&v);
            let plain = u.concat(&v);
            if self.eval(&inserted) != self.eval(&plain) {
                return Err(Error::RelatorInsertionMismatch {
                    inserted: p.format_word(&inserted),
                    plain: p.format_word(&plain),
                });
            }
        }
        Ok(())
    }

    /// Free reduction interleaved with rule application until both are stuck.
    pub fn normal_form(&self, w: &Word) -> Word {
        let mut cur = w.free_reduce();
        loop {
            let next = self.presentation.rewrite_to_normal_form(&cur).free_reduce();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

impl GroupModel for RewritingModel {
    fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn eval(&self, w: &Word) -> ElementKey {
        word_key(&self.normal_form(w), self.presentation.rank())
    }

    fn name(&self) -> String {
        "rewrite".into()
    }
}
