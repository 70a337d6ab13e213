use super::{KroneckerInvariants, Pencil};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ratpoly::Rat;

/// `J_{λ,k}(s) = (s - λ) I_k + superdiagonal ones`.
pub fn jordan_block(lambda: &Rat, k: usize) -> Pencil {
    let mut a0 = Matrix::identity(k).scale(&-lambda);
    for i in 1..k {
        a0[(i - 1, i)] = Rat::one();
    }
    Pencil::new(a0, Matrix::identity(k)).expect("square blocks")
}

/// `N_k(s) = I_k + s * superdiagonal`, a single infinite elementary divisor
/// of degree `k`.
pub fn block_n(k: usize) -> Pencil {
    let mut a1 = Matrix::zeros(k, k);
    for i in 1..k {
        a1[(i - 1, i)] = Rat::one();
    }
    Pencil::new(Matrix::identity(k), a1).expect("square blocks")
}

/// `L_k(s)`, `k x (k+1)` with `s` on the diagonal and ones on the
/// superdiagonal. `L_0` is a single zero column.
pub fn block_l(k: usize) -> Pencil {
    let mut a0 = Matrix::zeros(k, k + 1);
    let mut a1 = Matrix::zeros(k, k + 1);
    for i in 0..k {
        a1[(i, i)] = Rat::one();
        a0[(i, i + 1)] = Rat::one();
    }
    Pencil::new(a0, a1).expect("same shape")
}

/// `R_k = L_k^T`. `R_0` is a single zero row.
pub fn block_r(k: usize) -> Pencil {
    block_l(k).transpose()
}

/// The Kronecker canonical form with the given invariants: Jordan blocks for
/// every finite elementary divisor, then `N` blocks, then `L` and `R` blocks.
/// Fails if some finite invariant factor does not split over the rationals.
pub fn canonical_pencil(k: &KroneckerInvariants) -> Result<Pencil> {
    k.validate()?;
    let mut blocks = Vec::new();
    for h in &k.hif {
        let (roots, cofactor) = h.finite_part().rational_roots();
        if cofactor.degree().unwrap_or(0) > 0 {
            return Err(Error::NonSplitting(cofactor.to_string()));
        }
        for (lambda, mult) in &roots {
            blocks.push(jordan_block(lambda, *mult));
        }
    }
    for h in &k.hif {
        if h.inf_exp() > 0 {
            blocks.push(block_n(h.inf_exp()));
        }
    }
    blocks.extend(k.cmi.entries().iter().map(|&c| block_l(c)));
    blocks.extend(k.rmi.entries().iter().map(|&u| block_r(u)));
    let out = Pencil::direct_sum(&blocks);
    debug_assert_eq!((out.p(), out.q()), (k.p, k.q));
    Ok(out)
}
