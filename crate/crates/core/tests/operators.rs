use std::sync::OnceLock;

use proptest::prelude::*;
use shifted_crystal::ops::{
    apply, apply_to_tableau, critical_substrings, final_critical_substring, lattice_walk, primed_by_standardization,
    CriticalKind, Family, OpKind, Side,
};
use shifted_crystal::{Letter, RawWord, ShiftedTableau, SkewShape, Word};

fn op(family: Family, i: u8) -> OpKind {
    OpKind::new(family, i)
}

/// Tableaux of every skew shape with at most 6 cells, n = 2..=4.
fn corpus() -> &'static [ShiftedTableau] {
    static CORPUS: OnceLock<Vec<ShiftedTableau>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        SkewShape::all_up_to(6)
            .iter()
            .flat_map(|s| (2..=4).flat_map(move |n| ShiftedTableau::enumerate(s, n)))
            .collect()
    })
}

fn tableau() -> impl Strategy<Value = ShiftedTableau> {
    any::<prop::sample::Index>().prop_map(|ix| ix.get(corpus()).clone())
}

fn word() -> impl Strategy<Value = Word> {
    (2u8..=4).prop_flat_map(|n| {
        prop::collection::vec((1..=n, any::<bool>()), 0..9).prop_map(move |ls| {
            RawWord::new(n, ls.into_iter().map(|(v, p)| Letter::new(v, p)).collect()).unwrap().canonicalize()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lowering_and_raising_are_partial_inverses(t in tableau()) {
        for i in 1..t.n() {
            for (f, e) in [(Family::F, Family::E), (Family::FPrime, Family::EPrime)] {
                if let Some(u) = apply_to_tableau(op(f, i), &t).unwrap() {
                    prop_assert_eq!(apply_to_tableau(op(e, i), &u).unwrap(), Some(t.clone()));
                    prop_assert_eq!(Some(u.weight()), t.weight().lowered(i as usize));
                    prop_assert_eq!(u.shape(), t.shape());
                }
                if let Some(u) = apply_to_tableau(op(e, i), &t).unwrap() {
                    prop_assert_eq!(apply_to_tableau(op(f, i), &u).unwrap(), Some(t.clone()));
                    prop_assert_eq!(Some(u.weight()), t.weight().raised(i as usize));
                }
            }
        }
    }

    #[test]
    fn operators_on_words_invert(w in word()) {
        for i in 1..w.n() {
            for (f, e) in [(Family::F, Family::E), (Family::FPrime, Family::EPrime)] {
                if let Some(u) = apply(op(f, i), &w).unwrap() {
                    prop_assert_eq!(apply(op(e, i), &u).unwrap(), Some(w.clone()));
                }
            }
        }
    }

    #[test]
    fn eta_conjugates_lowering_to_raising(w in word()) {
        let n = w.n();
        for i in 1..n {
            for (f, e) in [(Family::F, Family::E), (Family::FPrime, Family::EPrime)] {
                let lhs = apply(op(f, i), &w.eta()).unwrap().map(|v| v.eta());
                prop_assert_eq!(lhs, apply(op(e, n - i), &w).unwrap());
            }
        }
    }

    #[test]
    fn primed_operators_keep_standardization(w in word()) {
        for i in 1..w.n() {
            for (f, side) in [(Family::FPrime, Side::Lower), (Family::EPrime, Side::Raise)] {
                let direct = apply(op(f, i), &w).unwrap();
                prop_assert_eq!(&direct, &primed_by_standardization(&w, i, side).unwrap());
                if let Some(v) = direct {
                    prop_assert_eq!(v.standardize(), w.standardize());
                }
            }
        }
    }

    #[test]
    fn walk_ignores_representative(w in word()) {
        for i in 1..w.n() {
            let base = lattice_walk(w.letters(), i);
            for r in w.representatives() {
                prop_assert_eq!(lattice_walk(r.letters(), i).points(), base.points());
            }
        }
    }

    #[test]
    fn final_substring_is_last_found(w in word()) {
        for i in 1..w.n() {
            for side in [Side::Lower, Side::Raise] {
                let all = critical_substrings(&w, i, side);
                let last = final_critical_substring(&w, i, side);
                prop_assert_eq!(all.is_empty(), last.is_none());
                if let Some(m) = last {
                    prop_assert!(all.iter().all(|a| (a.start(), a.len()) <= (m.start(), m.len())));
                }
            }
        }
    }
}

#[test]
fn operator_examples() {
    let w = |s: &str| Word::parse(2, s).unwrap();
    assert_eq!(apply(op(Family::FPrime, 1), &w("211")).unwrap(), Some(w("212'")));
    assert_eq!(apply(op(Family::EPrime, 1), &w("212'")).unwrap(), Some(w("211")));
    assert_eq!(apply(op(Family::F, 1), &w("211")).unwrap(), None);
    assert!(apply(op(Family::F, 2), &w("211")).is_err());
    assert!(apply(op(Family::F, 0), &w("211")).is_err());
}

#[test]
fn blocked_tableau_reports_type_five() {
    let t = ShiftedTableau::parse(3, "1 1 1 1 1 1 3 3 / 2 2 2 3 / 3 3").unwrap();
    assert_eq!(apply_to_tableau(op(Family::F, 2), &t).unwrap(), None);
    let m = final_critical_substring(&t.reading_word(), 2, Side::Lower).unwrap();
    assert_eq!(m.kind, CriticalKind::F5);
    assert!(m.kind.is_blocking());
}

#[test]
fn walk_example() {
    let w = Word::parse(2, "211'12'22'1'1'").unwrap();
    let walk = lattice_walk(w.letters(), 1);
    let dirs: String = walk.steps.iter().map(|s| s.dir.to_string()).collect();
    assert_eq!(dirs, "NEESNNWEE");
    assert_eq!(walk.endpoint(), (3, 2));
}
