//! Spherical and geodesic growth by extending geodesics one letter at a time.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::models::GroupModel;
use crate::oracles::IncreaseOracle;
use crate::word::Word;

/// Default cap on the number of geodesic words held in one layer.
pub const DEFAULT_WORD_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthRow {
    pub length: usize,
    /// Geodesic words of this length.
    pub geodesics: u64,
    /// Elements at this distance from the identity.
    pub sphere: u64,
    /// Elements at distance at most `length`.
    pub ball: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    pub fn geodesic_counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.geodesics).collect()
    }

    pub fn sphere_sizes(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.sphere).collect()
    }

    pub fn ball_sizes(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.ball).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,geodesics,sphere,ball\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.length, r.geodesics, r.sphere, r.ball).unwrap();
        }
        out
    }
}

impl fmt::Display for GrowthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>6} {:>12} {:>12} {:>12}", "length", "geodesics", "sphere", "ball")?;
        for r in &self.rows {
            writeln!(f, "{:>6} {:>12} {:>12} {:>12}", r.length, r.geodesics, r.sphere, r.ball)?;
        }
        Ok(())
    }
}

/// Growth up to length `max_len`.
///
/// Layer `d+1` is every `u·x` with `u` in layer `d` and `ℓ(ux) > ℓ(u)`; for
/// geodesic `u` that is exactly the geodesics of length `d+1`. Sphere sizes
/// count distinct element keys per layer.
pub fn growth_series<O>(model: &dyn GroupModel, oracle: &O, max_len: usize, word_budget: usize) -> Result<GrowthTable>
where
    O: IncreaseOracle + ?Sized,
{
    let alphabet = model.presentation().alphabet();
    let mut layer = vec![Word::empty()];
    let mut rows = vec![GrowthRow {
        length: 0,
        geodesics: 1,
        sphere: 1,
        ball: 1,
    }];
    for d in 1..=max_len {
        let mut next = Vec::new();
        for u in &layer {
            for &x in &alphabet {
                if oracle.increases(u, x)? {
                    if next.len() >= word_budget {
                        return Err(Error::CapacityExceeded { limit: word_budget });
                    }
                    next.push(u.with(x));
                }
            }
        }
        let sphere = next.iter().map(|w| model.eval(w)).collect::<HashSet<_>>().len() as u64;
        let ball = rows[d - 1].ball + sphere;
        rows.push(GrowthRow {
            length: d,
            geodesics: next.len() as u64,
            sphere,
            ball,
        });
        layer = next;
    }
    Ok(GrowthTable { rows })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::automata::{abelian_geodesic_dfa, free_geodesic_dfa};
    use crate::models::{FreeAbelian, FreeGroup};
    use crate::oracles::Ball;

    #[test]
    fn zero_length_table() {
        let g = FreeGroup::new(2).unwrap();
        let t = growth_series(&g, &free_geodesic_dfa(2), 0, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(t.geodesic_counts(), vec![1]);
        assert_eq!(t.sphere_sizes(), vec![1]);
        assert_eq!(t.to_csv(), "length,geodesics,sphere,ball\n0,1,1,1\n");
    }

    #[test]
    fn csv_rows() {
        let g = FreeAbelian::new(2).unwrap();
        let t = growth_series(&g, &abelian_geodesic_dfa(2), 1, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(t.to_csv(), "length,geodesics,sphere,ball\n0,1,1,1\n1,4,4,5\n");
        let f = FreeGroup::new(2).unwrap();
        let t = growth_series(&f, &free_geodesic_dfa(2), 1, DEFAULT_WORD_BUDGET).unwrap();
        assert!(t.to_csv().ends_with("1,4,4,5\n"));
    }

    #[test]
    fn free_rank_two() {
        let g = FreeGroup::new(2).unwrap();
        let t = growth_series(&g, &free_geodesic_dfa(2), 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(t.geodesic_counts(), vec![1, 4, 12, 36]);
        assert_eq!(t.sphere_sizes(), vec![1, 4, 12, 36]);
    }

    #[test]
    fn infinite_cyclic_spheres_are_pairs() {
        let g = Arc::new(FreeAbelian::new(1).unwrap());
        let b = Ball::build(g.clone(), 7).unwrap();
        let t = growth_series(g.as_ref(), &b, 6, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(t.sphere_sizes(), vec![1, 2, 2, 2, 2, 2, 2]);
        assert_eq!(t.geodesic_counts(), vec![1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn word_budget() {
        let g = FreeGroup::new(2).unwrap();
        assert_eq!(
            growth_series(&g, &free_geodesic_dfa(2), 3, 20),
            Err(Error::CapacityExceeded { limit: 20 })
        );
    }
}
