mod common;

use centra::corpus::{builtin, make_alternating, make_sl, make_symmetric};
use centra::layer::*;
use centra::permcore::{direct_product, GroupHandle, Permutation};
use centra::subgrp::{centralizer, is_subnormal};
use centra::Error;
use common::Finite;
use proptest::prelude::*;

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn component_sets(f: &Finite, g: &GroupHandle) -> std::collections::HashSet<Vec<usize>> {
    components(g).unwrap().components.iter().map(|q| f.set_of_subgroup(q).ones().collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn components_match_exhaustive_search(gens in (5usize..=6).prop_flat_map(|d| prop::collection::vec(perm_strategy(d), 1..=2))) {
        let g = GroupHandle::new(gens[0].degree(), gens).unwrap();
        let f = Finite::new(&g);
        prop_assert_eq!(component_sets(&f, &g), f.components());
        let set = components(&g).unwrap();
        for q in &set.components {
            prop_assert!(is_quasisimple(q.group()).unwrap());
            prop_assert!(is_subnormal(&g, q).unwrap());
        }
        let fstar = generalized_fitting(&g).unwrap();
        prop_assert!(centralizer(&g, fstar.generators()).unwrap().is_subgroup_of(&fstar));
    }
}

#[test]
fn quasisimple_examples() {
    assert!(is_quasisimple(&make_sl(2, 5).unwrap()).unwrap());
    assert!(is_quasisimple(&make_alternating(5).unwrap()).unwrap());
    assert!(!is_quasisimple(&make_symmetric(5).unwrap()).unwrap());
    assert!(!is_quasisimple(&make_sl(2, 3).unwrap()).unwrap());
    assert!(!is_quasisimple(&GroupHandle::trivial(3).unwrap()).unwrap());
}

#[test]
fn component_examples() {
    let g = builtin("SL(2,5)xC7").unwrap();
    let set = components(&g).unwrap();
    assert_eq!(set.components.len(), 1);
    assert_eq!(set.components[0].order(), 120);
    assert_eq!(generalized_fitting(&g).unwrap().order(), 120 * 7);

    let g = builtin("A5xA5").unwrap();
    let set = components(&g).unwrap();
    assert_eq!(set.components.len(), 2);
    assert!(set.layer.is_whole());

    let g = builtin("S4xA5").unwrap();
    assert_eq!(components(&g).unwrap().components.len(), 1);
    assert_eq!(generalized_fitting(&g).unwrap().order(), 240);

    assert!(components(&builtin("GL(2,3)").unwrap()).unwrap().components.is_empty());
    let gl25 = builtin("GL(2,5)").unwrap();
    assert_eq!(components(&gl25).unwrap().components[0].order(), 120);
}

#[test]
fn induced_automorphism_examples() {
    let s5 = make_symmetric(5).unwrap();
    let a5 = components(&s5).unwrap().components[0].clone();
    assert_eq!(induced_automorphisms(&s5, &a5).unwrap().order(), 120);
    let report = check_indaut_lemma(&s5, &a5).unwrap();
    assert!(report.passed(), "{report:?}");

    let g = builtin("SL(2,5)xC7").unwrap();
    for q in components(&g).unwrap().components {
        let r = check_indaut_lemma(&g, &q).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.computed["aut_upstairs_order"], 60);
    }

    let a5 = make_alternating(5).unwrap();
    let p = direct_product(&a5, &make_symmetric(3).unwrap());
    let h = p.subgroup(p.generators()[..2].to_vec()).unwrap();
    assert!(matches!(check_indaut_lemma(&p, &p.as_subgroup()), Err(Error::NotAComponent)));
    assert!(check_indaut_lemma(&p, &h).unwrap().passed());
}
