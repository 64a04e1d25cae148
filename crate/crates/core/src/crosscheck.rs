//! Cross-validation of every reduction against the exact ball oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::oracles::Ball;
use crate::reductions::{
    bounded_from_length, delta_from_bounded, geodesic_from_delta, geodesic_from_length, length_from_bounded,
    length_from_geodesic, EnumeratorConfig,
};
use crate::word::{words_up_to, Word};

#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Every word up to this length is checked.
    pub max_len: usize,
    /// Extra random words, with lengths `max_len + 1 ..= max_len + 2`.
    pub samples: usize,
    pub seed: u64,
    /// Words up to this length go through [`geodesic_from_delta`]; `None` skips it.
    pub prop3_max_len: Option<usize>,
    pub enumerator: EnumeratorConfig,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_len: 5,
            samples: 1000,
            seed: 0,
            prop3_max_len: Some(4),
            enumerator: EnumeratorConfig::default(),
        }
    }
}

/// One line of the cross-check table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub model: String,
    pub check: &'static str,
    pub queries: u64,
    /// Answers that differ from the ball oracle.
    pub mismatches: u64,
    /// Queries that failed with an error.
    pub errors: u64,
    /// Oracle calls made by the reduction under test.
    pub calls: u64,
    /// Sum of per-query call budgets, when the reduction has one.
    pub budget: Option<u64>,
    /// Queries whose call count exceeded their own budget.
    pub violations: u64,
}

impl CheckRow {
    fn new(model: &str, check: &'static str, budgeted: bool) -> Self {
        CheckRow {
            model: model.to_string(),
            check,
            queries: 0,
            mismatches: 0,
            errors: 0,
            calls: 0,
            budget: budgeted.then_some(0),
            violations: 0,
        }
    }

    fn record(&mut self, outcome: Result<(bool, u64)>, budget: Option<u64>) {
        self.queries += 1;
        match outcome {
            Ok((ok, calls)) => {
                if !ok {
                    self.mismatches += 1;
                }
                self.calls += calls;
                if let (Some(total), Some(b)) = (self.budget.as_mut(), budget) {
                    *total += b;
                    if calls > b {
                        self.violations += 1;
                    }
                }
            }
            Err(_) => self.errors += 1,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.errors == 0 && self.violations == 0
    }
}

/// The words checked: all words up to `max_len`, then the seeded samples.
pub fn check_words(ball: &Ball, cfg: &CheckConfig) -> Vec<Word> {
    let alphabet = ball.alphabet();
    let mut words: Vec<Word> = words_up_to(alphabet, cfg.max_len).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let len = rng.gen_range(cfg.max_len + 1..=cfg.max_len + 2);
        words.push((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect());
    }
    words
}

pub fn cross_check(ball: &Ball, cfg: &CheckConfig) -> Vec<CheckRow> {
    let model = ball.model();
    let name = model.name();
    let alphabet = ball.alphabet().to_vec();
    let k = alphabet.len() as u64;
    let words = check_words(ball, cfg);

    let p3 = |u: &Word| geodesic_from_length(ball, u, &alphabet).map(|o| o.answer);
    let p4 = |u: &Word| length_from_geodesic(&p3, u).map(|o| o.answer);
    let p4_from_p5 = |u: &Word| length_from_bounded(ball, u).map(|o| o.answer);

    let mut len_rows = CheckRow::new(&name, "P4 from P5 (length_from_bounded)", true);
    let mut geo_rows = CheckRow::new(&name, "P3 from P4 (geodesic_from_length)", true);
    let mut l3_rows = CheckRow::new(&name, "P4 from P3 (length_from_geodesic)", true);
    let mut b4_rows = CheckRow::new(&name, "P5 from P4 (bounded_from_length)", true);
    let mut chain_rows = CheckRow::new(&name, "P3 from P4 from P5 (composed)", true);

    for w in &words {
        let truth = match ball.length_of(w) {
            Ok(l) => l,
            Err(_) => {
                for row in [
                    &mut len_rows,
                    &mut geo_rows,
                    &mut l3_rows,
                    &mut b4_rows,
                    &mut chain_rows,
                ] {
                    row.record(Err(crate::Error::RadiusExceeded { radius: ball.radius() }), None);
                }
                continue;
            }
        };
        let n = w.len() as u64;
        let m = truth as u64;

        len_rows.record(
            length_from_bounded(ball, w).map(|o| (o.answer == truth, o.stats.p5)),
            Some(n),
        );
        geo_rows.record(
            geodesic_from_length(ball, w, &alphabet)
                .map(|o| (o.answer.len() == truth && model.equal(&o.answer, w), o.stats.p4)),
            Some(1 + k * m),
        );
        l3_rows.record(
            length_from_geodesic(&p3, w).map(|o| (o.answer == truth, o.stats.p3)),
            Some(1),
        );
        for bound in -1..=w.len() as i64 {
            let expected = bound >= 0 && truth as i64 <= bound;
            b4_rows.record(
                bounded_from_length(&p4, w, bound).map(|o| (o.answer == expected, o.stats.p4)),
                Some(1),
            );
        }
        chain_rows.record(
            geodesic_from_length(&p4_from_p5, w, &alphabet)
                .map(|o| (o.answer.len() == truth && model.equal(&o.answer, w), o.stats.p4)),
            Some(1 + k * m),
        );
    }

    let mut delta_rows = CheckRow::new(&name, "P1 from P5 (delta_from_bounded)", true);
    for u in words_up_to(&alphabet, cfg.max_len) {
        if !matches!(ball.is_geodesic(&u), Ok(true)) {
            continue;
        }
        for &x in &alphabet {
            let outcome = ball
                .delta_of(&u, x)
                .and_then(|truth| delta_from_bounded(ball, &u, x).map(|o| (o.answer == truth, o.stats.p5)));
            delta_rows.record(outcome, Some(2));
        }
    }

    let mut rows = vec![len_rows, geo_rows, l3_rows, b4_rows, chain_rows, delta_rows];

    if let Some(limit) = cfg.prop3_max_len {
        let presentation = model.presentation();
        let mut prop3 = CheckRow::new(&name, "P3 from P2 (geodesic_from_delta)", false);
        for w in words_up_to(&alphabet, limit) {
            let outcome = ball.length_of(&w).and_then(|truth| {
                geodesic_from_delta(ball, presentation, &w, &cfg.enumerator)
                    .map(|o| (o.answer.len() == truth && model.equal(&o.answer, &w), o.stats.p2))
            });
            prop3.record(outcome, None);
        }
        rows.push(prop3);
    }
    rows
}

/// Fixed-width rendering of cross-check rows.
pub struct Table<'a>(pub &'a [CheckRow]);

impl fmt::Display for Table<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10} {:<36} {:>8} {:>10} {:>6} {:>9} {:>9} {:>10} status",
            "model", "check", "queries", "mismatch", "errors", "calls", "budget", "violations"
        )?;
        for r in self.0 {
            let budget = r.budget.map_or_else(|| "-".to_string(), |b| b.to_string());
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{:<10} {:<36} {:>8} {:>10} {:>6} {:>9} {:>9} {:>10} {}",
                r.model, r.check, r.queries, r.mismatches, r.errors, r.calls, budget, r.violations, status
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::models::FreeAbelian;

    #[test]
    fn small_run_passes() {
        let ball = Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), 5).unwrap();
        let cfg = CheckConfig {
            max_len: 3,
            samples: 20,
            prop3_max_len: Some(3),
            ..CheckConfig::default()
        };
        let rows = cross_check(&ball, &cfg);
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(CheckRow::passed), "{}", Table(&rows));
    }

    #[test]
    fn small_radius_shows_errors() {
        let ball = Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), 2).unwrap();
        let cfg = CheckConfig {
            max_len: 3,
            samples: 0,
            prop3_max_len: None,
            ..CheckConfig::default()
        };
        let rows = cross_check(&ball, &cfg);
        assert!(rows.iter().any(|r| r.errors > 0));
    }

    #[test]
    fn sampling_is_seeded() {
        let ball = Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), 1).unwrap();
        let cfg = CheckConfig {
            max_len: 1,
            samples: 5,
            ..CheckConfig::default()
        };
        assert_eq!(check_words(&ball, &cfg), check_words(&ball, &cfg));
        let other = CheckConfig { seed: 1, ..cfg.clone() };
        assert_ne!(check_words(&ball, &cfg), check_words(&ball, &other));
    }
}
