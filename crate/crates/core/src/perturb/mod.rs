//! Reachability of one pencil from another by a rank-one perturbation, in
//! the chain form and the conjugate-partition form, and the per-index bounds
//! on Weyr differences along such perturbations.

mod bounds;
mod gap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{
    conj_majorized, onestep_majorized, theorem_indices_chain, theorem_indices_conj, Chain,
    HeadedPartition,
};
use crate::pencil::{Eigenvalue, KroneckerInvariants};
use crate::ratpoly::HomogPoly;
use crate::weyr::weyr_regular_part;

pub use bounds::{bounds_profile, check_bounds, BoundsProfile, RefinementFlags, Segment};
pub use gap::{lemma_gap_bounds, Divisibility, GapBounds, GapRange};

/// `ψ_{i-1} | φ_i | ψ_{i+1}` for `1 <= i <= min(len φ, len ψ)`, reading
/// `1` below index 1 and `0` past the end of each chain.
pub fn interlaces(phi: &[HomogPoly], psi: &[HomogPoly]) -> bool {
    let at = |h: &[HomogPoly], i: usize| {
        if i == 0 {
            HomogPoly::one()
        } else {
            h.get(i - 1).cloned().unwrap_or_else(HomogPoly::zero)
        }
    };
    let rho = phi.len().min(psi.len());
    (1..=rho).all(|i| {
        let f = at(phi, i);
        at(psi, i - 1).divides(&f) && f.divides(&at(psi, i + 1))
    })
}

/// The two invariant records of a pair with the index conventions applied
/// in one place. Both decision forms and the bound profiles read through it.
pub(crate) struct PairView<'a> {
    pub ka: &'a KroneckerInvariants,
    pub kb: &'a KroneckerInvariants,
    pub rho: usize,
    pub rho_prime: usize,
}

impl<'a> PairView<'a> {
    pub fn new(ka: &'a KroneckerInvariants, kb: &'a KroneckerInvariants) -> Result<Self> {
        if (ka.p, ka.q) != (kb.p, kb.q) {
            return Err(Error::SizeMismatch(ka.p, ka.q, kb.p, kb.q));
        }
        Ok(PairView {
            ka,
            kb,
            rho: ka.rank.min(kb.rank),
            rho_prime: ka.rank.max(kb.rank),
        })
    }

    pub fn phi(&self, i: usize) -> HomogPoly {
        self.ka.phi(i)
    }

    pub fn psi(&self, i: usize) -> HomogPoly {
        self.kb.phi(i)
    }

    pub fn interlace(&self) -> bool {
        interlaces(&self.ka.hif, &self.kb.hif)
    }

    /// `deg gcd(φ_i, ψ_i)`, undefined when both are zero.
    fn gcd_degree(&self, i: usize) -> Option<i64> {
        self.phi(i).gcd(&self.psi(i)).degree().ok().map(|d| d as i64)
    }

    /// `Σ_{i=1}^{n} deg gcd(φ_{i+1}, ψ_{i+1})`
    pub fn shifted_gcd_sum(&self, n: usize) -> Option<i64> {
        (1..=n).map(|i| self.gcd_degree(i + 1)).sum()
    }

    /// `Σ_{i=1}^{ρ} deg lcm(φ_i, ψ_i)`
    pub fn lcm_sum(&self) -> i64 {
        (1..=self.rho)
            .map(|i| {
                self.phi(i)
                    .lcm(&self.psi(i))
                    .degree()
                    .expect("factors up to ρ are nonzero") as i64
            })
            .sum()
    }

    /// `φ_j | ψ_j` for `1 <= j <= ρ`
    pub fn eqdivphi(&self) -> bool {
        (1..=self.rho).all(|j| self.phi(j).divides(&self.psi(j)))
    }

    /// `ψ_j | φ_j` for `1 <= j <= ρ`
    pub fn eqdivpsi(&self) -> bool {
        (1..=self.rho).all(|j| self.psi(j).divides(&self.phi(j)))
    }

    pub fn r(&self) -> HeadedPartition {
        HeadedPartition::from_chain(&self.ka.cmi)
    }

    pub fn s(&self) -> HeadedPartition {
        HeadedPartition::from_chain(&self.kb.cmi)
    }

    pub fn r_prime(&self) -> HeadedPartition {
        HeadedPartition::from_chain(&self.ka.rmi)
    }

    pub fn s_prime(&self) -> HeadedPartition {
        HeadedPartition::from_chain(&self.kb.rmi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    Yes,
    No,
    OutOfScopeEquivalent,
}

/// Every quantity computed on the way to a verdict. Fields that the
/// dispatched case does not use stay empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecisionTrace {
    pub rho: usize,
    pub rho_prime: usize,
    pub interlace: bool,
    pub deg_sum_a: usize,
    pub deg_sum_b: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_prime: Option<usize>,
    #[serde(rename = "G", skip_serializing_if = "Option::is_none")]
    pub g_value: Option<i64>,
    #[serde(rename = "G_bar", skip_serializing_if = "Option::is_none")]
    pub g_bar: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_idx: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_prime: Option<usize>,
    /// `Σ min` term of the bound on `G` (or `Ḡ`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_min: Option<i64>,
    /// `max` term of the bound on `G` (or `Ḡ`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_term: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_deg: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_deg: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lcm_sum: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcd_sum: Option<i64>,
    /// `c ≺′ d` and `u ≺′ v` (or `s ∠ r` and `s′ ∠ r′`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forward: Option<bool>,
    /// `d ≺′ c` and `v ≺′ u` (or `r ∠ s` and `r′ ∠ s′`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backward: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_window: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_window: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subcases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionResult {
    pub answer: Answer,
    #[serde(rename = "case")]
    pub case_tag: Option<String>,
    pub trace: DecisionTrace,
}

impl DecisionResult {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

fn verdict(ok: bool) -> Answer {
    if ok {
        Answer::Yes
    } else {
        Answer::No
    }
}

fn base_trace(v: &PairView) -> DecisionTrace {
    DecisionTrace {
        rho: v.rho,
        rho_prime: v.rho_prime,
        interlace: v.interlace(),
        deg_sum_a: v.ka.hif_degree_sum(),
        deg_sum_b: v.kb.hif_degree_sum(),
        ..Default::default()
    }
}

fn out_of_scope(trace: DecisionTrace) -> DecisionResult {
    DecisionResult {
        answer: Answer::OutOfScopeEquivalent,
        case_tag: None,
        trace,
    }
}

fn onestep(longer: &Chain, shorter: &Chain) -> bool {
    onestep_majorized(longer, shorter).unwrap_or(false)
}

fn chain_sum(c: &Chain) -> i64 {
    c.sum() as i64
}

fn sum_min(c: &Chain, d: &Chain) -> i64 {
    c.entries()
        .iter()
        .zip(d.entries())
        .map(|(a, b)| *a.min(b) as i64)
        .sum()
}

fn ext_value(c: &Chain, i: usize) -> i64 {
    c.at(i).finite().expect("index within the chain") as i64
}

/// Shared tail of case 4 in both forms: the two degree windows and the four
/// subcases (a) forward+x, (b) backward+y, (c) forward+y, (d) backward+x.
fn case_four(
    v: &PairView,
    mut trace: DecisionTrace,
    forward: bool,
    backward: bool,
    x: i64,
    y: i64,
    prefix: &str,
) -> DecisionResult {
    let lower = v.lcm_sum();
    trace.lcm_sum = Some(lower);
    trace.x_deg = Some(x);
    trace.y_deg = Some(y);
    trace.forward = Some(forward);
    trace.backward = Some(backward);
    let (mut x_window, mut y_window) = (false, false);
    if forward || backward {
        // the ranks differ here, so φ_{ρ+1} and ψ_{ρ+1} are not both zero
        let upper = v
            .shifted_gcd_sum(v.rho)
            .expect("one of the ranks exceeds ρ");
        trace.gcd_sum = Some(upper);
        x_window = lower <= x && x <= upper;
        y_window = lower <= y && y <= upper;
        trace.x_window = Some(x_window);
        trace.y_window = Some(y_window);
    }
    let subcases = [
        ("a", forward && x_window),
        ("b", backward && y_window),
        ("c", forward && y_window),
        ("d", backward && x_window),
    ];
    trace.subcases = subcases
        .iter()
        .filter(|(_, ok)| *ok)
        .map(|(t, _)| format!("{prefix}4{t}"))
        .collect();
    let tag = trace
        .subcases
        .first()
        .cloned()
        .unwrap_or_else(|| format!("{prefix}4"));
    DecisionResult {
        answer: verdict(trace.interlace && !trace.subcases.is_empty()),
        case_tag: Some(tag),
        trace,
    }
}

/// Decides whether some rank-one `P` makes `A + P` strictly equivalent to
/// `B`, from the chains of minimal indices. Equal inputs are outside the
/// theorem's hypothesis and are reported as such.
pub fn decide_rank_one(ka: &KroneckerInvariants, kb: &KroneckerInvariants) -> Result<DecisionResult> {
    let v = PairView::new(ka, kb)?;
    let mut trace = base_trace(&v);
    if ka == kb {
        return Ok(out_of_scope(trace));
    }
    let rho = v.rho as i64;
    let (c, d, u, w) = (&ka.cmi, &kb.cmi, &ka.rmi, &kb.rmi);
    let same_col = c == d;
    let same_row = u == w;
    let result = match (same_col, same_row) {
        (true, true) => DecisionResult {
            answer: verdict(trace.interlace),
            case_tag: Some("1".into()),
            trace,
        },
        (false, true) | (true, false) => {
            // case 3 is case 2 with the roles of columns and rows swapped
            let (tag, main, other, main_b) = if !same_col {
                ("2", c, u, d)
            } else {
                ("3", u, c, w)
            };
            let idx = theorem_indices_chain(main, main_b)?;
            let gcds = v.shifted_gcd_sum(v.rho.saturating_sub(1)).expect("indices below ρ");
            let g = rho - 1 - gcds - chain_sum(other);
            let smin = sum_min(main, main_b);
            let mx = ext_value(main, idx.f).max(ext_value(main_b, idx.f_prime));
            trace.ell = Some(idx.ell);
            trace.f = Some(idx.f);
            trace.f_prime = Some(idx.f_prime);
            if tag == "2" {
                trace.g_value = Some(g);
            } else {
                trace.g_bar = Some(g);
            }
            trace.sum_min = Some(smin);
            trace.max_term = Some(mx);
            DecisionResult {
                answer: verdict(trace.interlace && g <= smin + mx),
                case_tag: Some(tag.into()),
                trace,
            }
        }
        (false, false) => {
            let forward = onestep(c, d) && onestep(u, w);
            let backward = onestep(d, c) && onestep(w, u);
            let x = rho - chain_sum(c) - chain_sum(w);
            let y = rho - chain_sum(d) - chain_sum(u);
            case_four(&v, trace, forward, backward, x, y, "")
        }
    };
    Ok(result)
}

/// `Σ_{i=1}^{n} a_i` over the tail of a headed partition.
fn head_sum(a: &HeadedPartition, n: usize) -> i64 {
    a.tail_sum_to(n) as i64
}

/// The same decision stated through the conjugates of the minimal indices.
pub fn decide_rank_one_conj(
    ka: &KroneckerInvariants,
    kb: &KroneckerInvariants,
) -> Result<DecisionResult> {
    let v = PairView::new(ka, kb)?;
    let mut trace = base_trace(&v);
    if ka == kb {
        return Ok(out_of_scope(trace));
    }
    let rho = v.rho as i64;
    let (r, s, rp, sp) = (v.r(), v.s(), v.r_prime(), v.s_prime());
    let result = match (r == s, rp == sp) {
        (true, true) => DecisionResult {
            answer: verdict(trace.interlace),
            case_tag: Some("c1".into()),
            trace,
        },
        (false, true) | (true, false) => {
            let (tag, main, main_b, other) = if r != s {
                ("c2", &r, &s, &rp)
            } else {
                ("c3", &rp, &sp, &r)
            };
            let idx = theorem_indices_conj(main, main_b)?;
            let gcds = v.shifted_gcd_sum(v.rho.saturating_sub(1)).expect("indices below ρ");
            let g = rho - 1 - gcds - head_sum(other, v.rho);
            let smin: i64 = (1..=v.rho)
                .map(|i| main.get(i).min(main_b.get(i)) as i64)
                .sum();
            let mx = idx.e.max(idx.e_prime) as i64;
            trace.x_idx = Some(idx.x_idx);
            trace.e = Some(idx.e);
            trace.e_prime = Some(idx.e_prime);
            if tag == "c2" {
                trace.g_value = Some(g);
            } else {
                trace.g_bar = Some(g);
            }
            trace.sum_min = Some(smin);
            trace.max_term = Some(mx);
            DecisionResult {
                answer: verdict(trace.interlace && g <= smin + mx),
                case_tag: Some(tag.into()),
                trace,
            }
        }
        (false, false) => {
            let forward = conj_majorized(&s, &r) && conj_majorized(&sp, &rp);
            let backward = conj_majorized(&r, &s) && conj_majorized(&rp, &sp);
            let x = rho - head_sum(&r, v.rho) - head_sum(&sp, v.rho_prime);
            let y = rho - head_sum(&s, v.rho) - head_sum(&rp, v.rho_prime);
            case_four(&v, trace, forward, backward, x, y, "c")
        }
    };
    Ok(result)
}

/// Both readings of the interlacing of partial multiplicities at `lambda`:
/// `n_{i+δ+1}(B) <= n_i(A) <= n_{i+δ-1}(B)` with `δ = ρ_B - ρ_A`, and the
/// equivalent bound `δ - 1 <= w^R_i(B) - w^R_i(A) <= δ + 1`.
pub fn eqintw_forms(
    ka: &KroneckerInvariants,
    kb: &KroneckerInvariants,
    lambda: &Eigenvalue,
) -> (bool, bool) {
    let delta = kb.rank as i64 - ka.rank as i64;
    let na = ka.partial_multiplicities(lambda);
    let nb = kb.partial_multiplicities(lambda);
    // n_i = +inf below 1 and 0 past ρ
    let n_at = |n: &[usize], i: i64| -> Option<usize> {
        if i < 1 {
            None
        } else {
            Some(n.get(i as usize - 1).copied().unwrap_or(0))
        }
    };
    let top = na.len().max(nb.len()) as i64 + 2;
    let n_form = (1..=top).all(|i| {
        let mid = n_at(&na, i).expect("i >= 1");
        let low_ok = n_at(&nb, i + delta + 1).is_none_or(|lo| lo <= mid);
        let high_ok = n_at(&nb, i + delta - 1).is_none_or(|hi| mid <= hi);
        low_ok && high_ok
    });
    let wa = weyr_regular_part(ka, lambda);
    let wb = weyr_regular_part(kb, lambda);
    let w_top = wa.length().max(wb.length()) + 1;
    let w_form = (1..=w_top).all(|i| {
        let diff = wb.get(i) as i64 - wa.get(i) as i64;
        delta - 1 <= diff && diff <= delta + 1
    });
    (n_form, w_form)
}
