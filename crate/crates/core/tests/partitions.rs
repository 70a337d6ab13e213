mod common;

use common::*;
use pencil_core::partitions::{
    gh_indices, onestep_majorized, theorem_indices_chain, theorem_indices_conj, Chain,
    HeadedPartition, Partition,
};

fn ch(v: &[usize]) -> Chain {
    Chain::new(v.to_vec()).unwrap()
}

#[test]
fn enumerators_count_correctly() {
    let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    // C(len + max, max)
    assert_eq!(chains(3, 2).len(), 10);
    assert_eq!(chains(0, 5).len(), 1);
    // 1x1: s, t (the constant pencil [1]) and [0]
    assert_eq!(all_invariants(1, 1).len(), 3);
}

fn assert_clean(t: Tally) {
    assert!(t.checked > 0);
    assert!(t.ok(), "{} of {} failed: {:#?}", t.failed, t.checked, t.failures);
}

#[test]
fn partition_laws_up_to_ten() {
    assert_clean(partition_laws(10));
}

#[test]
fn one_step_majorization_matches_conjugate_form() {
    assert_clean(propconj(5, 4));
}

#[test]
fn index_lemmas() {
    assert_clean(gh_lemma(5, 4));
    assert_clean(gh2_lemma(5, 4));
    assert_clean(partmin_lemma(5, 4));
    assert_clean(shift_lemma(8, 3));
}

#[test]
fn worked_index_examples() {
    let gh = gh_indices(&ch(&[2, 1, 1]), &ch(&[2, 1])).unwrap();
    assert_eq!((gh.g, gh.h), (1, 3));
    let gh = gh_indices(&ch(&[2, 2]), &ch(&[1])).unwrap();
    assert_eq!((gh.g, gh.h), (2, 1));
    let gh = gh_indices(&ch(&[1, 0]), &ch(&[1])).unwrap();
    assert_eq!((gh.g, gh.h), (0, 2));

    let c = ch(&[1]);
    let d = ch(&[0]);
    let ci = theorem_indices_chain(&c, &d).unwrap();
    assert_eq!((ci.ell, ci.f, ci.f_prime), (1, 1, 1));
    let r = HeadedPartition::from_chain(&c);
    let s = HeadedPartition::from_chain(&d);
    let ri = theorem_indices_conj(&r, &s).unwrap();
    assert_eq!((ri.x_idx, ri.e, ri.e_prime), (1, 1, 0));
}

#[test]
fn one_step_rejects_wrong_lengths() {
    assert!(onestep_majorized(&ch(&[1]), &ch(&[1])).is_err());
    assert!(onestep_majorized(&ch(&[2, 1]), &ch(&[1])).is_ok());
}

#[test]
fn partitions_serialize_as_plain_lists() {
    let p = Partition::new(vec![3, 1, 0]).unwrap();
    assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
    let back: Partition = serde_json::from_str("[3,1]").unwrap();
    assert_eq!(back, p);
    assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
}
