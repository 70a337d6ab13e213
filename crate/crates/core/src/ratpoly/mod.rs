//! Exact rational scalars, dense polynomials over the rationals, and the
//! homogeneous invariant factor algebra built on top of them.
//!
//! Divisibility, gcd and lcm of homogeneous factors split componentwise into
//! the power of `t` and the finite part, so no factorization is ever needed
//! for them.

mod homog;
mod poly;
mod rat;

pub use homog::{hif_degree, hif_divides, hif_gcd, hif_lcm, HomogPoly};
pub use poly::Poly;
pub use rat::Rat;

pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    a.gcd(b)
}

pub fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    a.lcm(b)
}
