//! Exact Kronecker invariants of rational matrix pencils and their behaviour
//! under rank-one perturbations.

pub mod error;
pub mod fuzz;
pub mod matrix;
pub mod pencil;
pub mod perturb;
pub mod partitions;
pub mod ratpoly;
pub mod weyr;

pub use error::{Error, Result};
