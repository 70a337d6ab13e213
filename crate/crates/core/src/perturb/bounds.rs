//! Per-index bounds on `w_i(λ, B) - w_i(λ, A)` along a rank-one
//! perturbation `B = A + P`.
//!
//! Every profile comes from `Δw_i = Δw^R_i + (s_{i-1} - r_{i-1})`: the
//! regular parts interlace with offset `δ = ρ_B - ρ_A`, and the singular
//! parts move by the amounts the conjugate chains allow.

use serde::Serialize;

use super::{decide_rank_one, Answer, PairView};
use crate::error::{Error, Result};
use crate::partitions::{theorem_indices_conj, HeadedPartition};
use crate::pencil::KroneckerInvariants;
use crate::weyr::WeyrSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefinementFlags {
    /// `φ_j | ψ_j` for `1 <= j <= ρ`
    pub eqdivphi: bool,
    /// `ψ_j | φ_j` for `1 <= j <= ρ`
    pub eqdivpsi: bool,
}

/// `lo <= Δw_i <= hi` for `from <= i <= to` (`to = None` means unbounded).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: usize,
    pub to: Option<usize>,
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    fn contains(&self, i: usize) -> bool {
        i >= self.from && self.to.is_none_or(|t| i <= t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsProfile {
    #[serde(rename = "case")]
    pub case_tag: String,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub segments: Vec<Segment>,
    pub flags: RefinementFlags,
}

impl BoundsProfile {
    pub fn interval(&self, i: usize) -> (i64, i64) {
        let s = self
            .segments
            .iter()
            .find(|s| s.contains(i))
            .expect("segments cover every index >= 1");
        (s.lo, s.hi)
    }

    /// First index where `wB_i - wA_i` leaves its interval, with the
    /// difference found there.
    pub fn first_violation(&self, wa: &WeyrSequence, wb: &WeyrSequence) -> Option<(usize, i64)> {
        let n = wa.length().max(wb.length());
        (1..=n).find_map(|i| {
            let diff = wb.get(i) as i64 - wa.get(i) as i64;
            let (lo, hi) = self.interval(i);
            (diff < lo || diff > hi).then_some((i, diff))
        })
    }
}

pub fn check_bounds(profile: &BoundsProfile, wa: &WeyrSequence, wb: &WeyrSequence) -> bool {
    profile.first_violation(wa, wb).is_none()
}

fn seg(from: usize, to: Option<usize>, lo: i64, hi: i64) -> Segment {
    Segment { from, to, lo, hi }
}

/// Head interval in the same-rank cases, tightened by whichever
/// divisibility holds.
fn same_rank_head(flags: RefinementFlags) -> (i64, i64) {
    match (flags.eqdivpsi, flags.eqdivphi) {
        (true, true) => (0, 0),
        (true, false) => (-1, 0),
        (false, true) => (0, 1),
        (false, false) => (-1, 1),
    }
}

/// `max{i >= 0 : hi_i > lo_i}` over two headed partitions whose heads
/// already satisfy `hi_0 > lo_0`.
fn last_excess(hi: &HeadedPartition, lo: &HeadedPartition) -> usize {
    let top = hi.support().max(lo.support());
    (0..=top).rev().find(|&i| hi.get(i) > lo.get(i)).unwrap_or(0)
}

/// The interval profile for pairs reachable by a rank-one perturbation
/// (or already equivalent).
pub fn bounds_profile(ka: &KroneckerInvariants, kb: &KroneckerInvariants) -> Result<BoundsProfile> {
    let decision = decide_rank_one(ka, kb)?;
    if decision.answer == Answer::No {
        return Err(Error::Precondition(format!(
            "B is not reachable from A by a rank-one perturbation (case {})",
            decision.case_tag.unwrap_or_default()
        )));
    }
    let v = PairView::new(ka, kb)?;
    let flags = RefinementFlags {
        eqdivphi: v.eqdivphi(),
        eqdivpsi: v.eqdivpsi(),
    };
    let profile = |tag: &str, a, b, segments| BoundsProfile {
        case_tag: tag.into(),
        a,
        b,
        segments,
        flags,
    };

    let (reg_a, reg_b) = (ka.is_regular(), kb.is_regular());
    if reg_a && reg_b {
        return Ok(profile("i", None, None, vec![seg(1, None, -1, 1)]));
    }
    if reg_a {
        let a = kb.cmi.get(1) + 1;
        return Ok(profile(
            "ii",
            Some(a),
            None,
            vec![seg(1, Some(a), -1, 1), seg(a + 1, None, -2, 0)],
        ));
    }
    if reg_b {
        let a = ka.cmi.get(1) + 1;
        return Ok(profile(
            "iii",
            Some(a),
            None,
            vec![seg(1, Some(a), -1, 1), seg(a + 1, None, 0, 2)],
        ));
    }

    let (r, s) = (v.r(), v.s());
    if ka.rank == kb.rank {
        let (lo, hi) = same_rank_head(flags);
        if r == s {
            return Ok(profile("iv-same-cmi", None, None, vec![seg(1, None, lo, hi)]));
        }
        let idx = theorem_indices_conj(&r, &s)?;
        let a = idx.x_idx;
        let b = idx.e.max(idx.e_prime) + 1;
        let (a_i, b_i) = (a as i64, b as i64);
        return Ok(profile(
            "iv-diff-cmi",
            Some(a),
            Some(b),
            vec![
                seg(1, Some(a), lo, hi),
                seg(a + 1, Some(b), -(a_i + 1), a_i + 1),
                seg(b + 1, None, -b_i, b_i),
            ],
        ));
    }
    if kb.rank == ka.rank + 1 {
        let a = last_excess(&r, &s) + 1;
        let hi = if flags.eqdivpsi { 0 } else { 1 };
        return Ok(profile(
            "iv-rank-up",
            Some(a),
            None,
            vec![seg(1, Some(a), -1, hi), seg(a + 1, None, 0, a as i64 + 1)],
        ));
    }
    if ka.rank == kb.rank + 1 {
        let a = last_excess(&s, &r) + 1;
        let lo = if flags.eqdivphi { 0 } else { -1 };
        return Ok(profile(
            "iv-rank-down",
            Some(a),
            None,
            vec![seg(1, Some(a), lo, 1), seg(a + 1, None, -(a as i64 + 1), 0)],
        ));
    }
    Err(Error::Precondition(format!(
        "normal ranks {} and {} differ by more than one",
        ka.rank, kb.rank
    )))
}
