use mucrit_core::hp::{criticality, factorization_check};
use mucrit_core::search::{diffset_search, run_sequential, sumset_search, DiffsetSearch, Verdict};
use mucrit_core::stepanov::{lemma5_lemma6_numeric, rat_all};
use mucrit_core::{FpSet, PrimeField};

#[test]
fn f41_difference_set_chain() {
    let f = PrimeField::new(41).unwrap();
    let a = FpSet::new(f, [0, 1, 9, 32, 40]);
    let rep = criticality(&a, &a.negated(), 20).unwrap();
    assert!(rep.critical);
    assert_eq!(rep.overlap, 5);
    assert!(factorization_check(&a, &a.negated(), 20).unwrap().ok);
    assert!(lemma5_lemma6_numeric(&a, 20).unwrap().ok());
    assert_eq!(rat_all(&a).unwrap(), (true, true));
    // the search recovers the same class
    let r = diffset_search(41, 20).unwrap();
    assert_eq!(r.witnesses.len(), 1);
    let found = FpSet::new(f, r.witnesses[0].set.iter().copied());
    assert!(criticality(&found, &found.negated(), 20).unwrap().critical);
}

#[test]
fn subgroup_of_order_six() {
    let r = diffset_search(13, 6).unwrap();
    assert!(r.witnesses.iter().all(|w| w.exact));
    let r = diffset_search(37, 6).unwrap();
    assert_eq!(r.verdict, Verdict::Found);
}

#[test]
fn sumset_results_are_reproducible() {
    let a = sumset_search(37, 4).unwrap();
    let b = sumset_search(37, 4).unwrap();
    assert_eq!(a, b);
    assert!(a.witnesses.iter().all(|w| w.a.len() == 2 && w.b.len() == 2 && w.critical));
}

#[test]
fn budgets_are_not_proofs() {
    let s = DiffsetSearch::for_subgroup(PrimeField::new(41).unwrap(), 20).unwrap().with_node_budget(1);
    let r = run_sequential(&s).unwrap();
    assert!(matches!(r.verdict, Verdict::Exhausted { .. }));
}
