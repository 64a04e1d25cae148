use std::sync::Arc;

use proptest::prelude::*;

use geodesy::automata::{abelian_geodesic_dfa, free_geodesic_dfa};
use geodesy::models::{BaumslagSolitar, FreeAbelian, FreeGroup, GroupModel, RewritingModel};
use geodesy::word::{words_up_to, Letter, Word};
use geodesy::{Ball, Presentation};

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(g, inv)| Letter::new(g, inv)).collect())
}

fn z3() -> RewritingModel {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/z3.grp")).unwrap();
    RewritingModel::new(Presentation::parse(&text).unwrap(), true).unwrap()
}

fn models() -> Vec<Box<dyn GroupModel>> {
    vec![
        Box::new(FreeGroup::new(2).unwrap()),
        Box::new(FreeAbelian::new(2).unwrap()),
        Box::new(BaumslagSolitar::new(2).unwrap()),
        Box::new(BaumslagSolitar::new(-3).unwrap()),
        Box::new(z3()),
    ]
}

proptest! {
    #[test]
    fn free_reduction_is_idempotent(w in word(3, 20)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!((w.len() - r.len()) % 2, 0);
    }

    #[test]
    fn word_times_inverse_reduces_to_empty(w in word(3, 20)) {
        prop_assert!((&w * &w.inverse()).free_reduce().is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn text_round_trip(w in word(4, 20)) {
        let p = Presentation::with_rank(4).unwrap();
        prop_assert_eq!(p.parse_word(&p.format_word(&w)).unwrap(), w);
    }

    #[test]
    fn model_group_laws(u in word(2, 10), v in word(2, 10)) {
        for m in models() {
            prop_assert_eq!(m.eval(&(&u * &u.inverse())), m.identity_key());
            prop_assert_eq!(m.eval(&u.free_reduce()), m.eval(&u));
            // equality is a congruence for concatenation
            let uv = &u * &v;
            prop_assert!(m.equal(&(&u.free_reduce() * &v), &uv));
        }
    }

    #[test]
    fn relator_insertion_is_invisible(w in word(2, 10), cut in 0usize..=10, r in 0usize..4) {
        for m in models() {
            let relators = m.presentation().relators();
            if relators.is_empty() {
                continue;
            }
            let rel = &relators[r % relators.len()];
            let cut = cut.min(w.len());
            let mut inserted: Vec<Letter> = w[..cut].to_vec();
            inserted.extend(rel.iter().copied());
            inserted.extend(w[cut..].iter().copied());
            prop_assert!(m.equal(&Word::from(inserted), &w), "{} relator {}", m.name(), rel);
        }
    }

    #[test]
    fn abelian_ignores_order(w in word(3, 12), seed in any::<u64>()) {
        let m = FreeAbelian::new(3).unwrap();
        let mut letters = w.letters().to_vec();
        // deterministic shuffle driven by the seed
        let n = letters.len();
        for i in (1..n).rev() {
            let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
            letters.swap(i, j);
        }
        prop_assert!(m.equal(&Word::from(letters), &w));
    }

    #[test]
    fn rewriting_reaches_a_fixpoint(w in word(1, 16)) {
        let m = z3();
        let nf = m.normal_form(&w);
        prop_assert!(nf.len() <= 1);
        prop_assert_eq!(m.normal_form(&nf), nf.clone());
        prop_assert_eq!(m.presentation().rewrite_to_normal_form(&nf), nf);
    }

    #[test]
    fn dfa_costs_one_lookup_per_letter(w in word(3, 30)) {
        for d in [free_geodesic_dfa(3), abelian_geodesic_dfa(3)] {
            prop_assert_eq!(d.run_counted(&w).1, w.len());
        }
    }

    #[test]
    fn acceptors_are_prefix_closed(w in word(2, 12)) {
        for d in [free_geodesic_dfa(2), abelian_geodesic_dfa(2)] {
            if d.run(&w) {
                for i in 0..=w.len() {
                    prop_assert!(d.run(&Word::from(w[..i].to_vec())));
                }
            }
        }
    }

    #[test]
    fn length_parity_in_even_groups(w in word(2, 6)) {
        let b = Ball::build(Arc::new(FreeAbelian::new(2).unwrap()), 6).unwrap();
        let l = b.length_of(&w).unwrap();
        prop_assert!(l <= w.len());
        prop_assert_eq!((w.len() - l) % 2, 0);
    }
}

#[test]
fn balls_are_deterministic() {
    for m in models() {
        let m: Arc<dyn GroupModel> = Arc::from(m);
        let a = Ball::build(m.clone(), 5).unwrap();
        let b = Ball::build(m, 5).unwrap();
        let pa: Vec<_> = a
            .parents()
            .map(|(k, p)| (k.clone(), p.map(|(q, x)| (q.clone(), x))))
            .collect();
        let pb: Vec<_> = b
            .parents()
            .map(|(k, p)| (k.clone(), p.map(|(q, x)| (q.clone(), x))))
            .collect();
        assert_eq!(pa, pb);
        assert_eq!(a.layer_sizes(), b.layer_sizes());
    }
}

#[test]
fn free_group_layers() {
    let b = Ball::build(Arc::new(FreeGroup::new(2).unwrap()), 6).unwrap();
    let expected: Vec<usize> = (0..=6u32)
        .map(|d| if d == 0 { 1 } else { 4 * 3usize.pow(d - 1) })
        .collect();
    assert_eq!(b.layer_sizes(), expected);
}

#[test]
fn oracle_answers_are_consistent() {
    for m in [
        Arc::new(FreeAbelian::new(2).unwrap()) as Arc<dyn GroupModel>,
        Arc::new(FreeGroup::new(2).unwrap()),
    ] {
        let b = Ball::build(m.clone(), 6).unwrap();
        for w in words_up_to(b.alphabet(), 5) {
            let l = b.length_of(&w).unwrap();
            let g = b.geodesic_of(&w).unwrap();
            assert_eq!(g.len(), l);
            assert!(m.equal(&g, &w));
            assert!(b.is_geodesic(&g).unwrap());
            assert_eq!(b.is_geodesic(&w).unwrap(), l == w.len());
            assert!(b.is_bounded(&w, l as i64).unwrap());
            assert!(!b.is_bounded(&w, l as i64 - 1).unwrap());
            if l == w.len() {
                for &x in b.alphabet() {
                    let d = b.delta_of(&w, x).unwrap();
                    assert_eq!(i64::from(d.value()), b.length_of(&w.with(x)).unwrap() as i64 - l as i64);
                }
            }
        }
    }
}

#[test]
fn cyclic_group_of_order_three() {
    let b = Ball::build(Arc::new(z3()), 4).unwrap();
    assert_eq!(b.layer_sizes(), vec![1, 2, 0, 0, 0]);
    let p = b.model().presentation().clone();
    for (w, l) in [("", 0), ("a", 1), ("aa", 1), ("aaa", 0), ("aaaa", 1), ("AA", 1)] {
        assert_eq!(b.length_of(&p.parse_word(w).unwrap()).unwrap(), l, "{w}");
    }
    assert_eq!(
        b.geodesic_of(&p.parse_word("aa").unwrap()).unwrap(),
        p.parse_word("A").unwrap()
    );
}
