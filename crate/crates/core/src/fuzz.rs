//! Seeded property fuzzing along random rank-one perturbations.
//!
//! Each trial draws an invariant record `K`, hides its canonical pencil
//! behind a random strict equivalence to get `A`, adds a random rank-one `P`
//! and checks every property the perturbation theory predicts for the pairs
//! `(A, A + P)` and `(A + P, A)`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::pencil::{
    canonical_pencil, extract_invariants, random_equiv_rng, random_invariants_rng,
    random_rank_one_rng, Eigenvalue, KroneckerInvariants, Pencil,
};
use crate::perturb::{
    bounds_profile, decide_rank_one, decide_rank_one_conj, eqintw_forms, interlaces,
    lemma_gap_bounds, Answer,
};
use crate::weyr::{weyr_direct, weyr_from_invariants};

/// Random rank-one pencils tried per reachable target in the witness search.
pub const WITNESS_TRIES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: usize,
    /// Largest row count; each trial draws `p` from `1..=rows`.
    pub rows: usize,
    /// Largest column count; each trial draws `q` from `1..=cols`.
    pub cols: usize,
    pub seed: u64,
}

/// The pencils of a failing trial, kept for dumping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub a: Pencil,
    pub p: Pencil,
    pub b: Pencil,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub seed: u64,
    pub property: String,
    pub detail: String,
    pub files: Vec<String>,
    #[serde(skip)]
    pub pencils: Option<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeedRange {
    pub start: u64,
    pub end: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Random targets the decision called reachable.
    pub witness_targets: usize,
    pub witness_attempts: usize,
    pub witness_hits: usize,
    /// Targets reached by at least one of the tried perturbations.
    pub witness_targets_hit: usize,
    pub witness_hit_rate: f64,
    /// Nonequivalent fuzzed pairs per decision case, both directions.
    pub decision_cases: BTreeMap<String, usize>,
    pub profile_cases: BTreeMap<String, usize>,
    pub gap_lemma_checked: usize,
    pub nonrational_pencils: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub trials: usize,
    pub seeds: SeedRange,
    pub violations: Vec<Violation>,
    pub diagnostics: Diagnostics,
}

#[derive(Default)]
struct TrialOutcome {
    violations: Vec<(String, String)>,
    pencils: Option<Counterexample>,
    decision_cases: Vec<String>,
    profile_cases: Vec<String>,
    gap_checked: usize,
    nonrational: bool,
    witness: Option<(usize, usize)>,
}

impl TrialOutcome {
    fn fail(&mut self, property: &str, detail: String) {
        self.violations.push((property.into(), detail));
    }
}

fn eigenvalues_to_check(ka: &KroneckerInvariants, kb: &KroneckerInvariants) -> BTreeSet<Eigenvalue> {
    let mut set: BTreeSet<Eigenvalue> = ka.spectrum().eigenvalues.into_iter().collect();
    set.extend(kb.spectrum().eigenvalues);
    set.insert(Eigenvalue::Infinity);
    set
}

/// All pair properties for the step `x -> y`; `dir` labels the details.
fn check_pair(
    x: &Pencil,
    y: &Pencil,
    kx: &KroneckerInvariants,
    ky: &KroneckerInvariants,
    dir: &str,
    out: &mut TrialOutcome,
) {
    let chain = decide_rank_one(kx, ky).expect("same size");
    let conj = decide_rank_one_conj(kx, ky).expect("same size");
    if kx != ky {
        out.decision_cases.extend(chain.case_tag.clone());
        if chain.answer != Answer::Yes {
            out.fail("soundness", format!("{dir}: not equivalent but decision {chain:?}"));
        }
    }
    if chain.answer != conj.answer {
        out.fail(
            "form-agreement",
            format!(
                "{dir}: chain form {:?}, conjugate form {:?}",
                chain.case_tag, conj.case_tag
            ),
        );
    }
    if !interlaces(&kx.hif, &ky.hif) {
        out.fail("interlacing", format!("{dir}: {:?} vs {:?}", kx.hif, ky.hif));
    }

    let profile = match bounds_profile(kx, ky) {
        Ok(pr) => {
            out.profile_cases.push(pr.case_tag.clone());
            Some(pr)
        }
        Err(e) => {
            out.fail("bounds", format!("{dir}: no profile: {e}"));
            None
        }
    };
    for lambda in eigenvalues_to_check(kx, ky) {
        let wx = weyr_direct(x, &lambda);
        let wy = weyr_direct(y, &lambda);
        for (w, k) in [(&wx, kx), (&wy, ky)] {
            let formula = weyr_from_invariants(k, &lambda);
            if &formula != w {
                out.fail(
                    "weyr-formula",
                    format!("at {lambda}: direct {w:?}, from invariants {formula:?}"),
                );
            }
        }
        if let Some(pr) = &profile {
            if let Some((i, diff)) = pr.first_violation(&wx, &wy) {
                out.fail(
                    "bounds",
                    format!(
                        "{dir}, case {} at {lambda}: difference {diff} at index {i} outside {:?} ({wx:?} vs {wy:?})",
                        pr.case_tag,
                        pr.interval(i)
                    ),
                );
            }
        }
        let (n_form, w_form) = eqintw_forms(kx, ky, &lambda);
        if !(n_form && w_form) {
            out.fail(
                "eqintw",
                format!("{dir} at {lambda}: multiplicity form {n_form}, Weyr form {w_form}"),
            );
        }
    }

    if let Ok(gap) = lemma_gap_bounds(kx, ky) {
        out.gap_checked += 1;
        if let Err(e) = gap.check(kx, ky) {
            out.fail("gap-lemma", format!("{dir}, {} form: {e}", gap.form));
        }
    }
}

/// Runs one trial; everything it draws comes from `seed`.
pub fn run_trial(seed: u64, rows: usize, cols: usize) -> Vec<Violation> {
    let out = trial(seed, rows, cols);
    collect(seed, out)
}

fn collect(seed: u64, out: TrialOutcome) -> Vec<Violation> {
    out.violations
        .into_iter()
        .map(|(property, detail)| Violation {
            seed,
            property,
            detail,
            files: Vec::new(),
            pencils: out.pencils.clone(),
        })
        .collect()
}

fn trial(seed: u64, rows: usize, cols: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.random_range(1..=rows);
    let q = rng.random_range(1..=cols);
    let k = random_invariants_rng(p, q, &mut rng);
    let a = random_equiv_rng(&canonical_pencil(&k).expect("pool eigenvalues are rational"), &mut rng);
    let (_, pert) = random_rank_one_rng(p, q, &mut rng);
    let b = a.add(&pert).expect("same size");

    let mut out = TrialOutcome::default();
    let ka = extract_invariants(&a);
    let kb = extract_invariants(&b);
    if ka != k {
        out.fail("round-trip", format!("drew {k:?}, extracted {ka:?}"));
    }
    out.nonrational = kb.spectrum().has_nonrational_content();

    // A = B + (-P) is a rank-one step as well
    check_pair(&a, &b, &ka, &kb, "A -> B", &mut out);
    check_pair(&b, &a, &kb, &ka, "B -> A", &mut out);

    // does a yes for a random target come with a perturbation that reaches it?
    let target = random_invariants_rng(p, q, &mut rng);
    if target != ka && decide_rank_one(&ka, &target).is_ok_and(|d| d.is_yes()) {
        let hits = (0..WITNESS_TRIES)
            .filter(|_| {
                let (_, cand) = random_rank_one_rng(p, q, &mut rng);
                extract_invariants(&a.add(&cand).expect("same size")) == target
            })
            .count();
        out.witness = Some((WITNESS_TRIES, hits));
    }

    if !out.violations.is_empty() {
        out.pencils = Some(Counterexample { a, p: pert, b });
    }
    out
}

/// Runs `trials` trials with seeds `seed, seed + 1, ...` in parallel. The
/// report lists violations in seed order, so it does not depend on
/// scheduling.
pub fn run_fuzz(config: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<(u64, TrialOutcome)> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| {
            let seed = config.seed.wrapping_add(t);
            (seed, trial(seed, config.rows, config.cols))
        })
        .collect();

    let mut diagnostics = Diagnostics::default();
    let mut violations = Vec::new();
    for (seed, out) in outcomes {
        for c in &out.decision_cases {
            *diagnostics.decision_cases.entry(c.clone()).or_default() += 1;
        }
        for c in &out.profile_cases {
            *diagnostics.profile_cases.entry(c.clone()).or_default() += 1;
        }
        diagnostics.gap_lemma_checked += out.gap_checked;
        diagnostics.nonrational_pencils += out.nonrational as usize;
        if let Some((tries, hits)) = out.witness {
            diagnostics.witness_targets += 1;
            diagnostics.witness_attempts += tries;
            diagnostics.witness_hits += hits;
            diagnostics.witness_targets_hit += (hits > 0) as usize;
        }
        violations.extend(collect(seed, out));
    }
    if diagnostics.witness_attempts > 0 {
        diagnostics.witness_hit_rate =
            diagnostics.witness_hits as f64 / diagnostics.witness_attempts as f64;
    }
    FuzzReport {
        trials: config.trials,
        seeds: SeedRange {
            start: config.seed,
            end: config.seed.wrapping_add(config.trials as u64),
        },
        violations,
        diagnostics,
    }
}
