//! Ranges for the differences of the conjugate chains `s_i - r_i` along a
//! realizable perturbation, together with the divisibilities forced when a
//! difference reaches the end of its range.

use serde::Serialize;

use super::{decide_rank_one, decide_rank_one_conj, Answer, PairView};
use crate::error::{Error, Result};
use crate::partitions::{theorem_indices_conj, HeadedPartition};
use crate::pencil::KroneckerInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Divisibility {
    /// `φ_j | ψ_j` for `1 <= j <= ρ`
    Eqdivphi,
    /// `ψ_j | φ_j` for `1 <= j <= ρ`
    Eqdivpsi,
}

/// `lo <= diff_i <= hi` on `from <= i <= to`; reaching `lo` (resp. `hi`)
/// forces `lo_implies` (resp. `hi_implies`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapRange {
    pub from: usize,
    pub to: Option<usize>,
    pub lo: i64,
    pub hi: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo_implies: Option<Divisibility>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi_implies: Option<Divisibility>,
}

impl GapRange {
    fn new(from: usize, to: Option<usize>, lo: i64, hi: i64) -> Self {
        GapRange {
            from,
            to,
            lo,
            hi,
            lo_implies: None,
            hi_implies: None,
        }
    }

    fn last(&self, top: usize) -> usize {
        self.to.unwrap_or(top).min(top)
    }
}

/// The ranges that apply to a pair. `diff_i` is `s_i - r_i`, except in the
/// rank-down form where it is `r_i - s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapBounds {
    pub form: String,
    pub ranges: Vec<GapRange>,
    /// Coarser same-rank shape: `0` up to `a′`, `±(a′+2)` up to `b′`,
    /// `±(b′+1)` beyond.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub three_range: Option<(usize, usize, Vec<GapRange>)>,
}

fn holds(d: Divisibility, v: &PairView) -> bool {
    match d {
        Divisibility::Eqdivphi => v.eqdivphi(),
        Divisibility::Eqdivpsi => v.eqdivpsi(),
    }
}

impl GapBounds {
    /// Checks every range against the actual chains of the pair, returning
    /// a description of the first failure.
    pub fn check(&self, ka: &KroneckerInvariants, kb: &KroneckerInvariants) -> std::result::Result<(), String> {
        let v = PairView::new(ka, kb).map_err(|e| e.to_string())?;
        let (r, s) = (v.r(), v.s());
        let flip = self.form == "rank-down";
        let diff = |i: usize| {
            let d = s.get(i) as i64 - r.get(i) as i64;
            if flip {
                -d
            } else {
                d
            }
        };
        // past both supports every difference is 0
        let top = r.support().max(s.support()) + 1;
        let extra = self.three_range.iter().flat_map(|(_, _, rs)| rs);
        for g in self.ranges.iter().chain(extra) {
            for i in g.from..=g.last(top) {
                let d = diff(i);
                if d < g.lo || d > g.hi {
                    return Err(format!("diff_{i} = {d} outside [{}, {}]", g.lo, g.hi));
                }
                let forced = [(d == g.lo, g.lo_implies), (d == g.hi, g.hi_implies)];
                for (hit, need) in forced {
                    if let (true, Some(need)) = (hit, need) {
                        if !holds(need, &v) {
                            return Err(format!("diff_{i} = {d} without {need:?}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn not_satisfied(why: &str) -> Error {
    Error::HypothesisNotSatisfied(why.into())
}

fn last_excess(hi: &HeadedPartition, lo: &HeadedPartition) -> usize {
    let top = hi.support().max(lo.support());
    (0..=top).rev().find(|&i| hi.get(i) > lo.get(i)).unwrap_or(0)
}

/// The gap ranges for a pair satisfying one of the lemma hypotheses: same
/// rank with `r != s`, `r′ = s′` and the degree condition on `G`; or a rank
/// change of one with the matching conjugate majorization and degree
/// window.
pub fn lemma_gap_bounds(ka: &KroneckerInvariants, kb: &KroneckerInvariants) -> Result<GapBounds> {
    let d = decide_rank_one_conj(ka, kb)?;
    if d.answer != Answer::Yes {
        return Err(not_satisfied("the pair is not a realizable rank-one step"));
    }
    let v = PairView::new(ka, kb)?;
    let (r, s) = (v.r(), v.s());
    match d.case_tag.as_deref() {
        Some("c2") => {
            let idx = theorem_indices_conj(&r, &s)?;
            let (x, e, ep) = (idx.x_idx, idx.e, idx.e_prime);
            let xi = x as i64;
            let mut ranges = Vec::new();
            if e > ep {
                let mut near = GapRange::new(x, Some(e), -xi - 1, -1);
                near.lo_implies = Some(Divisibility::Eqdivphi);
                let mut far = GapRange::new(e + 1, None, -xi, e as i64 + 1);
                far.hi_implies = Some(Divisibility::Eqdivpsi);
                ranges.extend([near, far]);
            } else {
                let mut near = GapRange::new(x, Some(ep), 1, xi + 1);
                near.hi_implies = Some(Divisibility::Eqdivpsi);
                let mut far = GapRange::new(ep + 1, None, -(ep as i64) - 1, xi);
                far.lo_implies = Some(Divisibility::Eqdivphi);
                ranges.extend([near, far]);
            }
            let a = x - 1;
            let b = e.max(ep);
            let (ai, bi) = (a as i64, b as i64);
            let mut three = vec![GapRange::new(a + 1, Some(b), -(ai + 2), ai + 2)];
            if a >= 1 {
                three.insert(0, GapRange::new(1, Some(a), 0, 0));
            }
            three.push(GapRange::new(b + 1, None, -(bi + 1), bi + 1));
            Ok(GapBounds {
                form: "same-rank".into(),
                ranges,
                three_range: Some((a, b, three)),
            })
        }
        Some(tag) if tag.starts_with("c4") => {
            let forward = d.trace.forward == Some(true);
            // The conjugate windows sum r, s only up to ρ and miss s_{ρ+1}
            // (or r_{ρ+1}); the chain form's windows use the full sums.
            let chain = decide_rank_one(ka, kb)?;
            let window = |w: Option<bool>| w == Some(true);
            let (x_ok, y_ok) = (window(chain.trace.x_window), window(chain.trace.y_window));
            let (form, g, need) = if forward {
                ("rank-up", last_excess(&r, &s), Divisibility::Eqdivpsi)
            } else {
                ("rank-down", last_excess(&s, &r), Divisibility::Eqdivphi)
            };
            // the y-window bounds the gap by g when going up, the x-window
            // when going down; the other window allows one more
            let tight = if forward { y_ok } else { x_ok };
            debug_assert!(x_ok || y_ok);
            let top = if tight { g } else { g + 1 } as i64;
            let mut range = GapRange::new(g + 1, None, 0, top);
            range.hi_implies = Some(need);
            Ok(GapBounds {
                form: form.into(),
                ranges: vec![range],
                three_range: None,
            })
        }
        _ => Err(not_satisfied(
            "needs same rank with r != s and r' = s', or a rank change of one",
        )),
    }
}
