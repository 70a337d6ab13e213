//! Chains, partitions and headed partitions of nonnegative integers, the
//! order relations between them, and the index quantities that drive the
//! rank-one perturbation criteria.
//!
//! Chains have a fixed length and use the sentinels `c_0 = +inf` and
//! `c_{m+1} = -inf` (see [`Chain::at`]); partitions are trimmed and read as 0
//! past their support. Neither sentinel is ever stored.

mod types;

use serde::Serialize;

use crate::error::{Error, Result};
pub use types::{Chain, Ext, HeadedPartition, Partition};

/// Conjugate of a chain, `k -> #{i : c_i >= k}` for `k >= 1`.
pub fn conjugate(c: &Chain) -> Partition {
    let first = c.entries().first().copied().unwrap_or(0);
    Partition::new(
        (1..=first)
            .map(|k| c.entries().iter().take_while(|&&x| x >= k).count())
            .collect(),
    )
    .expect("conjugate counts are nonincreasing")
}

pub fn union(a: &Partition, b: &Partition) -> Partition {
    a.union(b)
}

pub fn sum(a: &Partition, b: &Partition) -> Partition {
    a.sum(b)
}

/// True iff `a ≺ b`, i.e. `a` is majorized by `b`. Unequal totals give false.
pub fn majorizes(a: &Partition, b: &Partition) -> bool {
    a.is_majorized_by(b)
}

/// 1step-generalized majorization `longer ≺′ shorter`.
///
/// With `h = min{i : shorter_i < longer_i}` (where `shorter_{m+1} = -inf`, so
/// `h <= m + 1` always exists), holds iff `shorter_i = longer_{i+1}` for
/// `h <= i <= m`.
pub fn onestep_majorized(longer: &Chain, shorter: &Chain) -> Result<bool> {
    let m = shorter.len();
    if longer.len() != m + 1 {
        return Err(Error::LengthMismatch {
            what: "1step majorization needs the first chain one longer than the second",
            left: longer.len(),
            right: shorter.len(),
        });
    }
    let h = (1..=m + 1)
        .find(|&i| shorter.at(i) < longer.at(i))
        .expect("shorter_{m+1} = -inf is below every entry");
    Ok((h..=m).all(|i| shorter.get(i) == longer.get(i + 1)))
}

/// `s ∠ r`: `r_0 = s_0 + 1` and `r_i = s_i + 1` for `0 <= i <= g` with
/// `g = max{i >= 0 : r_i > s_i}`.
pub fn conj_majorized(s: &HeadedPartition, r: &HeadedPartition) -> bool {
    if r.head() != s.head() + 1 {
        return false;
    }
    let top = r.support().max(s.support());
    // r_0 > s_0, so g >= 0.
    let g = (0..=top).rev().find(|&i| r.get(i) > s.get(i)).unwrap_or(0);
    (0..=g).all(|i| r.get(i) == s.get(i) + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainIndices {
    pub ell: usize,
    pub f: usize,
    pub f_prime: usize,
}

/// `ℓ = max{i : c_i != d_i}`, `f = max{i <= ℓ : c_i < d_{i-1}}`,
/// `f′ = max{i <= ℓ : d_i < c_{i-1}}`; `c_0 = d_0 = +inf` makes `f, f′ >= 1`.
pub fn theorem_indices_chain(c: &Chain, d: &Chain) -> Result<ChainIndices> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            what: "chain indices need equal lengths",
            left: c.len(),
            right: d.len(),
        });
    }
    let ell = (1..=c.len())
        .rev()
        .find(|&i| c.get(i) != d.get(i))
        .ok_or(Error::EqualInputs)?;
    let f = (1..=ell)
        .rev()
        .find(|&i| c.at(i) < d.at(i - 1))
        .expect("i = 1 qualifies");
    let f_prime = (1..=ell)
        .rev()
        .find(|&i| d.at(i) < c.at(i - 1))
        .expect("i = 1 qualifies");
    Ok(ChainIndices { ell, f, f_prime })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjIndices {
    pub x_idx: usize,
    pub e: usize,
    pub e_prime: usize,
}

/// `x = min{i : r_i != s_i}`, `e = min{i >= x-1 : s_{i+1} >= r_{i+1}}`,
/// `e′ = min{i >= x-1 : r_{i+1} >= s_{i+1}}`. Needs `r != s` and equal heads.
pub fn theorem_indices_conj(r: &HeadedPartition, s: &HeadedPartition) -> Result<ConjIndices> {
    if r.head() != s.head() {
        return Err(Error::Precondition(format!(
            "conjugate indices need equal heads, got {} and {}",
            r.head(),
            s.head()
        )));
    }
    let top = r.support().max(s.support());
    let x_idx = (1..=top)
        .find(|&i| r.get(i) != s.get(i))
        .ok_or(Error::EqualInputs)?;
    // Both searches terminate by i = top, where r_{top+1} = s_{top+1} = 0.
    let e = (x_idx - 1..)
        .find(|&i| s.get(i + 1) >= r.get(i + 1))
        .unwrap();
    let e_prime = (x_idx - 1..)
        .find(|&i| r.get(i + 1) >= s.get(i + 1))
        .unwrap();
    Ok(ConjIndices {
        x_idx,
        e,
        e_prime,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GhIndices {
    pub g: usize,
    pub h: usize,
}

/// For `c` of length `m+1` and `d` of length `m`: `g = max{i : r_i > s_i}`
/// over the headed conjugates (heads `m+1`, `m`) and `h = min{i : d_i < c_i}`
/// with `d_{m+1} = -inf`. Asserts `g = c_h`.
pub fn gh_indices(c: &Chain, d: &Chain) -> Result<GhIndices> {
    let m = d.len();
    if c.len() != m + 1 {
        return Err(Error::LengthMismatch {
            what: "g/h indices need the first chain one longer than the second",
            left: c.len(),
            right: d.len(),
        });
    }
    let r = HeadedPartition::from_chain(c);
    let s = HeadedPartition::from_chain(d);
    let top = r.support().max(s.support());
    let g = (0..=top).rev().find(|&i| r.get(i) > s.get(i)).unwrap_or(0);
    let h = (1..=m + 1)
        .find(|&i| d.at(i) < c.at(i))
        .expect("d_{m+1} = -inf");
    assert_eq!(g, c.get(h), "g = c_h fails for c = {c:?}, d = {d:?}");
    Ok(GhIndices { g, h })
}

/// Both sides of `sum_{j=1}^{g} (r_j - s_j - 1) = sum_{j=h}^{m} (c_{j+1} - d_j)`.
pub fn gh_sum_identity(c: &Chain, d: &Chain) -> Result<(i64, i64)> {
    let GhIndices { g, h } = gh_indices(c, d)?;
    let r = conjugate(c);
    let s = conjugate(d);
    let lhs = (1..=g)
        .map(|j| r.get(j) as i64 - s.get(j) as i64 - 1)
        .sum();
    let rhs = (h..=d.len())
        .map(|j| c.get(j + 1) as i64 - d.get(j) as i64)
        .sum();
    Ok((lhs, rhs))
}

pub fn pointwise_min_chain(c: &Chain, d: &Chain) -> Result<Chain> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            what: "pointwise minimum needs equal lengths",
            left: c.len(),
            right: d.len(),
        });
    }
    Chain::new(
        c.entries()
            .iter()
            .zip(d.entries())
            .map(|(a, b)| *a.min(b))
            .collect(),
    )
}

/// `a_j >= b_{j+k}` for all `j >= 1`.
pub fn shift_k_compare(a: &Partition, b: &Partition, k: usize) -> bool {
    (1..=b.length()).all(|j| a.get(j) >= b.get(j + k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(v: &[usize]) -> Chain {
        Chain::new(v.to_vec()).unwrap()
    }

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn hp(head: usize, tail: &[usize]) -> HeadedPartition {
        HeadedPartition::new(head, pt(tail)).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&ch(&[3, 1])), pt(&[2, 1, 1]));
        assert_eq!(conjugate(&ch(&[0, 0, 0])), pt(&[]));
        assert_eq!(conjugate(&ch(&[2, 2])), pt(&[2, 2]));
    }

    #[test]
    fn union_sum_majorize_examples() {
        assert_eq!(union(&pt(&[2, 1]), &pt(&[3])), pt(&[3, 2, 1]));
        let a = pt(&[2, 1]);
        let b = pt(&[1, 1]);
        assert_eq!(union(&a, &b).conjugate(), pt(&[4, 1]));
        assert_eq!(sum(&a.conjugate(), &b.conjugate()), pt(&[4, 1]));
        assert!(majorizes(&pt(&[2, 2]), &pt(&[3, 1])));
        assert!(!majorizes(&pt(&[3, 1]), &pt(&[2, 2])));
        assert!(!majorizes(&pt(&[1]), &pt(&[2])));
    }

    #[test]
    fn onestep_examples() {
        assert!(onestep_majorized(&ch(&[3, 2, 1]), &ch(&[2, 1])).unwrap());
        assert!(!onestep_majorized(&ch(&[3, 1, 0]), &ch(&[2, 2])).unwrap());
        assert!(onestep_majorized(&ch(&[0, 0]), &ch(&[0])).unwrap());
        assert!(onestep_majorized(&ch(&[0]), &ch(&[])).unwrap());
        assert!(matches!(
            onestep_majorized(&ch(&[1]), &ch(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn conj_majorized_examples() {
        assert!(conj_majorized(&hp(2, &[2, 1]), &hp(3, &[3, 1])));
        // g = 2 and r_2 = 3 != s_2 + 1
        assert!(!conj_majorized(&hp(2, &[2, 1]), &hp(3, &[3, 3])));
        assert!(conj_majorized(&hp(0, &[]), &hp(1, &[])));
        // heads must differ by one
        assert!(!conj_majorized(&hp(2, &[1]), &hp(2, &[2])));
        // r = (3;3,1), s = (2;2,2): g = 1, pattern holds up to g
        assert!(conj_majorized(&hp(2, &[2, 2]), &hp(3, &[3, 1])));
    }

    #[test]
    fn chain_index_examples() {
        let idx = |c: &[usize], d: &[usize]| theorem_indices_chain(&ch(c), &ch(d)).unwrap();
        assert_eq!(idx(&[1], &[0]), ChainIndices { ell: 1, f: 1, f_prime: 1 });
        assert_eq!(idx(&[2, 1], &[2, 0]), ChainIndices { ell: 2, f: 2, f_prime: 2 });
        assert_eq!(idx(&[3, 0], &[1, 1]), ChainIndices { ell: 2, f: 2, f_prime: 2 });
        assert_eq!(
            theorem_indices_chain(&ch(&[1, 0]), &ch(&[1, 0])),
            Err(Error::EqualInputs)
        );
    }

    #[test]
    fn conj_index_examples() {
        let idx = |r: HeadedPartition, s: HeadedPartition| theorem_indices_conj(&r, &s).unwrap();
        assert_eq!(
            idx(hp(1, &[1]), hp(1, &[])),
            ConjIndices { x_idx: 1, e: 1, e_prime: 0 }
        );
        assert_eq!(
            idx(hp(2, &[2, 1]), hp(2, &[1, 1])),
            ConjIndices { x_idx: 1, e: 1, e_prime: 0 }
        );
        assert_eq!(
            idx(hp(2, &[1]), hp(2, &[2])),
            ConjIndices { x_idx: 1, e: 0, e_prime: 1 }
        );
        assert_eq!(
            theorem_indices_conj(&hp(2, &[1]), &hp(2, &[1])),
            Err(Error::EqualInputs)
        );
        assert!(theorem_indices_conj(&hp(2, &[1]), &hp(1, &[1])).is_err());
    }

    #[test]
    fn gh_examples() {
        assert_eq!(gh_indices(&ch(&[2, 1, 1]), &ch(&[2, 1])).unwrap(), GhIndices { g: 1, h: 3 });
        assert_eq!(gh_indices(&ch(&[2, 2]), &ch(&[1])).unwrap(), GhIndices { g: 2, h: 1 });
        assert_eq!(gh_indices(&ch(&[1, 0]), &ch(&[1])).unwrap(), GhIndices { g: 0, h: 2 });
        assert!(gh_indices(&ch(&[1]), &ch(&[1])).is_err());
    }

    #[test]
    fn pointwise_min_examples() {
        assert_eq!(pointwise_min_chain(&ch(&[3, 1]), &ch(&[2, 2])).unwrap(), ch(&[2, 1]));
        assert_eq!(pointwise_min_chain(&ch(&[0, 0]), &ch(&[5, 0])).unwrap(), ch(&[0, 0]));
        assert_eq!(
            conjugate(&ch(&[2, 1])),
            conjugate(&ch(&[3, 1])).min(&conjugate(&ch(&[2, 2])))
        );
        assert!(pointwise_min_chain(&ch(&[1]), &ch(&[1, 0])).is_err());
    }

    #[test]
    fn shift_compare_examples() {
        assert!(shift_k_compare(&pt(&[2, 1]), &pt(&[3, 2, 1]), 1));
        assert!(shift_k_compare(&pt(&[1]), &pt(&[3]), 1));
        assert!(!shift_k_compare(&pt(&[1]), &pt(&[3]), 0));
        assert!(shift_k_compare(&pt(&[]), &pt(&[]), 4));
        assert!(shift_k_compare(&pt(&[5, 2]), &pt(&[]), 0));
    }

    #[test]
    fn validation() {
        assert!(Chain::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 0, 0]).unwrap().parts(), &[2]);
        assert!(HeadedPartition::new(1, pt(&[2])).is_err());
        assert!(serde_json::from_str::<Chain>("[1,2]").is_err());
        let h: HeadedPartition = serde_json::from_str(r#"{"head":3,"tail":[2,1]}"#).unwrap();
        assert_eq!(h, hp(3, &[2, 1]));
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"head":3,"tail":[2,1]}"#);
    }
}
