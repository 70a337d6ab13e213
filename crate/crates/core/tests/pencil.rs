use pencil_core::matrix::Matrix;
use pencil_core::pencil::{
    block_l, canonical_pencil, extract_invariants, jordan_block, random_equiv, random_invariants,
    random_rank_one, Eigenvalue, KroneckerInvariants, Pencil,
};
use pencil_core::ratpoly::{HomogPoly, Poly, Rat};

fn dims(seed: u64, max: usize) -> (usize, usize) {
    let p = 1 + (seed as usize * 7 + 3) % max;
    let q = 1 + (seed as usize * 5 + 1) % max;
    (p, q)
}

#[test]
fn round_trip_on_random_records() {
    for seed in 0..120 {
        let (p, q) = dims(seed, 8);
        let k = random_invariants(p, q, seed);
        let a = canonical_pencil(&k).unwrap();
        assert_eq!(extract_invariants(&a), k, "seed {seed}");
    }
}

#[test]
fn invariants_survive_strict_equivalence() {
    for seed in 0..60 {
        let (p, q) = dims(seed, 6);
        let k = random_invariants(p, q, 1000 + seed);
        let a = random_equiv(&canonical_pencil(&k).unwrap(), seed);
        assert_eq!(extract_invariants(&a), k, "seed {seed}");
    }
}

#[test]
fn transpose_swaps_minimal_indices() {
    for seed in 0..40 {
        let (p, q) = dims(seed, 6);
        let k = random_invariants(p, q, 2000 + seed);
        let a = random_equiv(&canonical_pencil(&k).unwrap(), seed);
        let kt = extract_invariants(&a.transpose());
        assert_eq!(kt, k.transpose());
        assert_eq!(kt.hif, k.hif);
    }
}

#[test]
fn rank_sum_identity_on_perturbed_pencils() {
    for seed in 0..40 {
        let (p, q) = dims(seed, 5);
        let a = canonical_pencil(&random_invariants(p, q, seed)).unwrap();
        let (_, pert) = random_rank_one(p, q, seed);
        let b = a.add(&pert).unwrap();
        let k = extract_invariants(&b);
        assert_eq!(k.validate(), Ok(()));
        assert_eq!(k.rank, b.normal_rank());
    }
}

#[test]
fn rank_drops_exactly_on_the_spectrum() {
    for seed in 0..40 {
        let (p, q) = dims(seed, 5);
        let k = random_invariants(p, q, 3000 + seed);
        let a = random_equiv(&canonical_pencil(&k).unwrap(), seed);
        let spec = k.spectrum();
        for v in -3..=3 {
            let lam = Eigenvalue::finite(v);
            let drops = a.eval(&lam).rank() < k.rank;
            assert_eq!(drops, spec.eigenvalues.contains(&lam), "seed {seed} at {v}");
        }
        let drops = a.eval(&Eigenvalue::Infinity).rank() < k.rank;
        assert_eq!(drops, spec.eigenvalues.contains(&Eigenvalue::Infinity));
    }
}

#[test]
fn canonical_examples() {
    let k = KroneckerInvariants::new(
        2,
        2,
        2,
        vec![HomogPoly::one(), HomogPoly::finite(Poly::monomial(2))],
        Default::default(),
        Default::default(),
    )
    .unwrap();
    assert_eq!(canonical_pencil(&k).unwrap(), jordan_block(&Rat::zero(), 2));

    let l1 = extract_invariants(&block_l(1));
    assert_eq!(canonical_pencil(&l1).unwrap(), Pencil::from_ints(&[&[0, 1]], &[&[1, 0]]));
}

#[test]
fn fractional_entries_are_handled() {
    // (1/2)(s - 1/3) scaled by a unimodular-free rational transform
    let a = Pencil::new(
        Matrix::from_rows(vec![vec![Rat::new(-1, 6)]]).unwrap(),
        Matrix::from_rows(vec![vec![Rat::new(1, 2)]]).unwrap(),
    )
    .unwrap();
    let k = extract_invariants(&a);
    assert_eq!(k.hif, vec![HomogPoly::finite(Poly::linear(&Rat::new(1, 3)))]);
    assert_eq!(k.spectrum().eigenvalues, vec![Eigenvalue::Finite(Rat::new(1, 3))]);
}
