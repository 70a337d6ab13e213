//! Jordan chains, the chain subspaces `L^ℓ_λ` and the generalized Weyr
//! characteristic, both directly from a pencil and from its invariants.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partitions::{HeadedPartition, Partition};
use crate::pencil::{Eigenvalue, KroneckerInvariants, Pencil};
use crate::ratpoly::Rat;

pub type WeyrSequence = Partition;

/// `(M, B)` such that a chain satisfies `M x_0 = 0` and `M x_i = -B x_{i-1}`.
fn chain_operators(a: &Pencil, lambda: &Eigenvalue) -> (Matrix, Matrix) {
    match lambda {
        Eigenvalue::Finite(_) => (a.eval(lambda), a.a1().clone()),
        Eigenvalue::Infinity => (a.a1().clone(), a.a0().clone()),
    }
}

/// Checks whether `vectors = (x_k, ..., x_0)` is a right Jordan chain of `a`
/// at `lambda`.
pub fn is_jordan_chain(a: &Pencil, lambda: &Eigenvalue, vectors: &[Vec<Rat>]) -> Result<bool> {
    if let Some(v) = vectors.iter().find(|v| v.len() != a.q()) {
        return Err(Error::Dimension(format!(
            "chain vector of length {}, pencil has {} columns",
            v.len(),
            a.q()
        )));
    }
    let Some(x0) = vectors.last() else {
        return Ok(false);
    };
    if x0.iter().all(Rat::is_zero) {
        return Ok(false);
    }
    let (m, b) = chain_operators(a, lambda);
    let chain: Vec<&Vec<Rat>> = vectors.iter().rev().collect();
    if m.mul_vec(x0).iter().any(|x| !x.is_zero()) {
        return Ok(false);
    }
    for w in chain.windows(2) {
        let lhs = m.mul_vec(w[1]);
        let rhs = b.mul_vec(w[0]);
        if lhs.iter().zip(&rhs).any(|(l, r)| !(l + r).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim L^ℓ_λ`. Stacking `(x_0, ..., x_{ℓ-1})`, the chain recurrences are
/// the kernel of the block lower-bidiagonal `K_ℓ` (diagonal `M`, subdiagonal
/// `B`). Chains shorter than `ℓ` embed by putting zeros in front, and every
/// chain vector `x_j` is the last vector of the chain `(x_j, ..., x_0)`, so
/// `L^ℓ` is the projection of `ker K_ℓ` onto its last block:
/// `q - rank K_ℓ + rank K'_ℓ` where `K'_ℓ` drops the last block column.
pub fn l_space_dim(a: &Pencil, lambda: &Eigenvalue, ell: usize) -> usize {
    if ell == 0 {
        return 0;
    }
    let (p, q) = (a.p(), a.q());
    let (m, b) = chain_operators(a, lambda);
    let mut k = Matrix::zeros(ell * p, ell * q);
    for i in 0..ell {
        k.set_block(i * p, i * q, &m);
        if i > 0 {
            k.set_block(i * p, (i - 1) * q, &b);
        }
    }
    let head: Vec<usize> = (0..(ell - 1) * q).collect();
    q + k.select_cols(&head).rank() - k.rank()
}

/// `w_i = dim L^i - dim L^{i-1}` for `1 <= i <= q`.
pub fn weyr_direct(a: &Pencil, lambda: &Eigenvalue) -> WeyrSequence {
    let mut w = Vec::with_capacity(a.q());
    let mut prev = 0;
    for i in 1..=a.q() {
        let d = l_space_dim(a, lambda, i);
        w.push(d - prev);
        prev = d;
        if d == a.q() {
            break;
        }
    }
    Partition::new(w).expect("Weyr characteristic must be nonincreasing")
}

/// Conjugate of the partial multiplicities at `lambda`.
pub fn weyr_regular_part(k: &KroneckerInvariants, lambda: &Eigenvalue) -> Partition {
    Partition::new(k.partial_multiplicities(lambda))
        .expect("partial multiplicities are nonincreasing")
        .conjugate()
}

/// `w(λ) = w^R(λ) + (r_0, r_1, ...)` with `(r_1, ...)` conjugate to the
/// column minimal indices and `r_0 = q - ρ`.
pub fn weyr_from_invariants(k: &KroneckerInvariants, lambda: &Eigenvalue) -> WeyrSequence {
    let wr = weyr_regular_part(k, lambda);
    let r = HeadedPartition::from_chain(&k.cmi);
    let n = wr.length().max(r.support() + 1);
    Partition::new((1..=n).map(|i| wr.get(i) + r.get(i - 1)).collect())
        .expect("sum of partitions")
}
