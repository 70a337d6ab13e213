#![allow(dead_code)]

use pencil_core::partitions::{
    conj_majorized, conjugate, gh_indices, gh_sum_identity, onestep_majorized,
    pointwise_min_chain, shift_k_compare, theorem_indices_chain, theorem_indices_conj, Chain,
    HeadedPartition, Partition,
};
use pencil_core::pencil::{
    canonical_pencil, extract_invariants, random_equiv, random_equiv_rng, random_invariants_rng,
    Eigenvalue, KroneckerInvariants, Pencil,
};
use pencil_core::perturb::{decide_rank_one, decide_rank_one_conj, Answer};
use pencil_core::ratpoly::{HomogPoly, Poly};
use pencil_core::weyr::{weyr_direct, weyr_from_invariants};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Nonincreasing sequences of exactly `len` entries, each `<= max`, summing
/// to `total`.
pub fn nonincreasing_with_sum(len: usize, max: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, max: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total > len * max {
            return;
        }
        for v in (0..=max.min(total)).rev() {
            prefix.push(v);
            go(len - 1, v, total - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, total, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    nonincreasing_with_sum(n, n, n)
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect()
}

/// All chains of length `len` with entries `<= max`.
pub fn chains(len: usize, max: usize) -> Vec<Chain> {
    (0..=len * max)
        .flat_map(|t| nonincreasing_with_sum(len, max, t))
        .map(|v| Chain::new(v).unwrap())
        .collect()
}

/// Every invariant record of a `p x q` pencil whose eigenvalues lie in
/// `{0, inf}`: invariant factors `s^a t^k` with `a` and `k` nondecreasing.
pub fn all_invariants(p: usize, q: usize) -> Vec<KroneckerInvariants> {
    let mut out = Vec::new();
    for rank in 0..=p.min(q) {
        let (nc, nr) = (q - rank, p - rank);
        for deg in 0..=rank {
            let singular = rank - deg;
            if nc + nr == 0 && singular > 0 {
                continue;
            }
            for fin in 0..=deg {
                for a in nonincreasing_with_sum(rank, fin, fin) {
                    for k in nonincreasing_with_sum(rank, deg - fin, deg - fin) {
                        let hif: Vec<HomogPoly> = a
                            .iter()
                            .rev()
                            .zip(k.iter().rev())
                            .map(|(&a, &k)| HomogPoly::new(k, Poly::monomial(a)))
                            .collect();
                        for sc in 0..=singular {
                            for c in nonincreasing_with_sum(nc, sc, sc) {
                                for u in nonincreasing_with_sum(nr, singular - sc, singular - sc) {
                                    out.push(
                                        KroneckerInvariants::new(
                                            p,
                                            q,
                                            rank,
                                            hif.clone(),
                                            Chain::new(c.clone()).unwrap(),
                                            Chain::new(u).unwrap(),
                                        )
                                        .expect("enumerated record is valid"),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Cases checked and the first few failures of an exhaustive law check.
#[derive(Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub failures: Vec<String>,
    pub failed: usize,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.failures.extend(other.failures.into_iter().take(5));
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Involution, union/sum duality and majorization duality over all
/// partitions of `n <= max_n`.
pub fn partition_laws(max_n: usize) -> Tally {
    let mut t = Tally::default();
    let by_size: Vec<Vec<Partition>> = (0..=max_n).map(partitions_of).collect();
    let all: Vec<&Partition> = by_size.iter().flatten().collect();
    for a in &all {
        t.record(a.conjugate().conjugate() == **a, || format!("involution {a:?}"));
        t.record(a.conjugate().total() == a.total(), || format!("conjugate total {a:?}"));
    }
    for a in &all {
        for b in &all {
            let lhs = a.union(b).conjugate();
            let rhs = a.conjugate().sum(&b.conjugate());
            t.record(lhs == rhs, || format!("union/sum {a:?} {b:?}"));
        }
    }
    for same in &by_size {
        for a in same {
            for b in same {
                let forward = a.is_majorized_by(b);
                let back = b.conjugate().is_majorized_by(&a.conjugate());
                t.record(forward == back, || format!("majorization {a:?} {b:?}"));
            }
        }
    }
    t
}

/// `c ≺′ d` against `s ∠ r` for `c` of length `m + 1`, `d` of length `m`.
pub fn propconj(max_len: usize, max_entry: usize) -> Tally {
    let mut t = Tally::default();
    for m in 0..max_len {
        let longs = chains(m + 1, max_entry);
        let shorts = chains(m, max_entry);
        for c in &longs {
            let r = HeadedPartition::from_chain(c);
            for d in &shorts {
                let s = HeadedPartition::from_chain(d);
                let lhs = onestep_majorized(c, d).unwrap();
                t.record(lhs == conj_majorized(&s, &r), || format!("{c:?} vs {d:?}"));
            }
        }
    }
    t
}

/// `g = c_h` (asserted inside `gh_indices`) and the sum identity.
pub fn gh_lemma(max_len: usize, max_entry: usize) -> Tally {
    let mut t = Tally::default();
    for m in 0..max_len {
        for c in &chains(m + 1, max_entry) {
            for d in &chains(m, max_entry) {
                let gh = std::panic::catch_unwind(|| gh_indices(c, d).unwrap());
                t.record(gh.is_ok_and(|gh| gh.g == c.get(gh.h)), || format!("g = c_h for {c:?} {d:?}"));
                let (lhs, rhs) = gh_sum_identity(c, d).unwrap();
                t.record(lhs == rhs, || format!("sum identity {c:?} {d:?}: {lhs} vs {rhs}"));
            }
        }
    }
    t
}

/// `e = c_f` and `e′ = d_{f′}` for unequal chains of the same length.
pub fn gh2_lemma(max_len: usize, max_entry: usize) -> Tally {
    let mut t = Tally::default();
    for m in 1..=max_len {
        let all = chains(m, max_entry);
        for c in &all {
            for d in &all {
                if c == d {
                    continue;
                }
                let ci = theorem_indices_chain(c, d).unwrap();
                let r = HeadedPartition::from_chain(c);
                let s = HeadedPartition::from_chain(d);
                let ri = theorem_indices_conj(&r, &s).unwrap();
                let ok = ri.e == c.get(ci.f) && ri.e_prime == d.get(ci.f_prime);
                t.record(ok, || format!("{c:?} {d:?}: {ci:?} {ri:?}"));
            }
        }
    }
    t
}

/// Pointwise minimum commutes with conjugation.
pub fn partmin_lemma(max_len: usize, max_entry: usize) -> Tally {
    let mut t = Tally::default();
    for m in 1..=max_len {
        let all = chains(m, max_entry);
        for c in &all {
            for d in &all {
                let lhs = conjugate(&pointwise_min_chain(c, d).unwrap());
                let rhs = conjugate(c).min(&conjugate(d));
                t.record(lhs == rhs, || format!("{c:?} {d:?}"));
            }
        }
    }
    t
}

/// `a_j >= b_{j+k}` iff `p_j >= q_j - k` for the conjugates `p`, `q`.
pub fn shift_lemma(max_n: usize, max_k: usize) -> Tally {
    let mut t = Tally::default();
    let all: Vec<Partition> = (0..=max_n).flat_map(partitions_of).collect();
    for a in &all {
        let p = a.conjugate();
        for b in &all {
            let q = b.conjugate();
            for k in 0..=max_k {
                let n = p.length().max(q.length());
                let rhs = (1..=n).all(|j| p.get(j) + k >= q.get(j));
                t.record(shift_k_compare(a, b, k) == rhs, || format!("{a:?} {b:?} k={k}"));
            }
        }
    }
    t
}

/// A seeded random pencil, hidden behind a strict equivalence, together with
/// the invariants it was built from.
pub fn random_pencil(seed: u64, max: usize) -> (KroneckerInvariants, Pencil) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.random_range(1..=max);
    let q = rng.random_range(1..=max);
    let k = random_invariants_rng(p, q, &mut rng);
    let a = random_equiv_rng(&canonical_pencil(&k).unwrap(), &mut rng);
    (k, a)
}

/// `weyr_direct = weyr_from_invariants` at every eigenvalue, at infinity
/// and at the non-eigenvalue 7.
pub fn weyr_cross_check(count: u64, seed: u64, max: usize) -> Tally {
    let mut t = Tally::default();
    for s in seed..seed + count {
        let (_, a) = random_pencil(s, max);
        let k = extract_invariants(&a);
        let mut lambdas = k.spectrum().eigenvalues;
        lambdas.extend([Eigenvalue::Infinity, Eigenvalue::finite(7)]);
        lambdas.dedup();
        for lam in lambdas {
            let direct = weyr_direct(&a, &lam);
            let formula = weyr_from_invariants(&k, &lam);
            t.record(direct == formula, || format!("seed {s} at {lam}: {direct:?} vs {formula:?}"));
        }
    }
    t
}

/// `extract(canonical(K)) = K` for seeded random records.
pub fn round_trip(count: u64, seed: u64, max: usize) -> Tally {
    let mut t = Tally::default();
    for s in seed..seed + count {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let p = rng.random_range(1..=max);
        let q = rng.random_range(1..=max);
        let k = random_invariants_rng(p, q, &mut rng);
        let back = extract_invariants(&canonical_pencil(&k).unwrap());
        t.record(back == k, || format!("seed {s}: {k:?} came back as {back:?}"));
    }
    t
}

/// Invariants and Weyr characteristics survive `P A Q` for random unimodular
/// `P`, `Q`.
pub fn equivalence_invariance(count: u64, seed: u64, max: usize) -> Tally {
    let mut t = Tally::default();
    for s in seed..seed + count {
        let (k, a) = random_pencil(s, max);
        let b = random_equiv(&a, s ^ 0x5eed);
        t.record(extract_invariants(&b) == k, || format!("seed {s}: invariants changed"));
        for lam in [Eigenvalue::finite(0), Eigenvalue::Infinity] {
            t.record(weyr_direct(&a, &lam) == weyr_direct(&b, &lam), || {
                format!("seed {s}: Weyr at {lam} changed")
            });
        }
    }
    t
}

/// Both decision forms on every ordered pair of records of each size.
pub fn decision_agreement(max_p: usize, max_q: usize) -> (Tally, usize, usize) {
    let mut t = Tally::default();
    let (mut yes, mut no) = (0, 0);
    for p in 1..=max_p {
        for q in 1..=max_q {
            let all = all_invariants(p, q);
            for a in &all {
                for b in &all {
                    let x = decide_rank_one(a, b).unwrap();
                    let y = decide_rank_one_conj(a, b).unwrap();
                    match x.answer {
                        Answer::Yes => yes += 1,
                        Answer::No => no += 1,
                        Answer::OutOfScopeEquivalent => {}
                    }
                    t.record(x.answer == y.answer, || {
                        format!("{a:?} -> {b:?}: {:?} vs {:?}", x.case_tag, y.case_tag)
                    });
                }
            }
        }
    }
    (t, yes, no)
}
