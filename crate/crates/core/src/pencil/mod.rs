//! Matrix pencils `A0 + s*A1` over the rationals.

mod canonical;
mod extract;
mod invariants;
mod random;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ratpoly::{Poly, Rat};

pub use canonical::{block_l, block_n, block_r, canonical_pencil, jordan_block};
pub use extract::{column_minimal_indices, extract_invariants, smith_diagonal};
pub use invariants::KroneckerInvariants;
pub use random::{
    random_equiv, random_equiv_rng, random_invariants, random_invariants_rng, random_rank_one,
    random_rank_one_rng, Orientation, RankOneSpec,
};

/// A point of the projective line: a rational number or infinity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eigenvalue {
    Finite(Rat),
    Infinity,
}

impl Eigenvalue {
    pub fn finite(v: i64) -> Self {
        Eigenvalue::Finite(Rat::from_int(v))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Eigenvalue::Infinity)
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Finite(r) => write!(f, "{r}"),
            Eigenvalue::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Eigenvalue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Eigenvalue::Infinity);
        }
        s.parse::<Rat>()
            .map(Eigenvalue::Finite)
            .map_err(|_| Error::ParseEigenvalue(s.to_string()))
    }
}

impl Serialize for Eigenvalue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Eigenvalue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `A(s) = A0 + s*A1`, both `p x q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pencil {
    a0: Matrix,
    a1: Matrix,
}

impl Pencil {
    pub fn new(a0: Matrix, a1: Matrix) -> Result<Self> {
        if a0.rows() != a1.rows() || a0.cols() != a1.cols() {
            return Err(Error::SizeMismatch(a0.rows(), a0.cols(), a1.rows(), a1.cols()));
        }
        Ok(Pencil { a0, a1 })
    }

    pub fn zero(p: usize, q: usize) -> Self {
        Pencil {
            a0: Matrix::zeros(p, q),
            a1: Matrix::zeros(p, q),
        }
    }

    pub fn from_ints(a0: &[&[i64]], a1: &[&[i64]]) -> Self {
        Pencil::new(Matrix::from_ints(a0), Matrix::from_ints(a1)).expect("mismatched blocks")
    }

    pub fn p(&self) -> usize {
        self.a0.rows()
    }

    pub fn q(&self) -> usize {
        self.a0.cols()
    }

    pub fn a0(&self) -> &Matrix {
        &self.a0
    }

    pub fn a1(&self) -> &Matrix {
        &self.a1
    }

    pub fn transpose(&self) -> Pencil {
        Pencil {
            a0: self.a0.transpose(),
            a1: self.a1.transpose(),
        }
    }

    /// `A1 + t*A0`
    pub fn reversed(&self) -> Pencil {
        Pencil {
            a0: self.a1.clone(),
            a1: self.a0.clone(),
        }
    }

    /// `A(λ)`, with `A(∞) = A1`.
    pub fn eval(&self, lambda: &Eigenvalue) -> Matrix {
        match lambda {
            Eigenvalue::Finite(l) => &self.a0 + &self.a1.scale(l),
            Eigenvalue::Infinity => self.a1.clone(),
        }
    }

    /// Entries as degree-one polynomials in `s`.
    pub fn poly_entries(&self) -> Vec<Vec<Poly>> {
        (0..self.p())
            .map(|i| {
                (0..self.q())
                    .map(|j| Poly::new(vec![self.a0[(i, j)].clone(), self.a1[(i, j)].clone()]))
                    .collect()
            })
            .collect()
    }

    /// Rank over the rational function field. The rank of `A(λ)` is below the
    /// normal rank only at finite eigenvalues, of which there are at most
    /// `min(p, q)`, so the maximum over `min(p, q) + 3` points is exact.
    pub fn normal_rank(&self) -> usize {
        let n = self.p().min(self.q());
        let mut best = 0;
        for k in 0..(n as i64 + 3) {
            best = best.max(self.eval(&Eigenvalue::finite(k)).rank());
            if best == n {
                break;
            }
        }
        best
    }

    pub fn add(&self, other: &Pencil) -> Result<Pencil> {
        if self.p() != other.p() || self.q() != other.q() {
            return Err(Error::SizeMismatch(self.p(), self.q(), other.p(), other.q()));
        }
        Ok(Pencil {
            a0: &self.a0 + &other.a0,
            a1: &self.a1 + &other.a1,
        })
    }

    /// `P * A * Q` for constant matrices.
    pub fn transform(&self, left: &Matrix, right: &Matrix) -> Pencil {
        Pencil {
            a0: &(left * &self.a0) * right,
            a1: &(left * &self.a1) * right,
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[Pencil]) -> Pencil {
        let p = blocks.iter().map(Pencil::p).sum();
        let q = blocks.iter().map(Pencil::q).sum();
        let mut out = Pencil::zero(p, q);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.a0.set_block(r, c, &b.a0);
            out.a1.set_block(r, c, &b.a1);
            r += b.p();
            c += b.q();
        }
        out
    }

    /// Rational eigenvalues (finite ones from the last invariant factor, plus
    /// infinity when it has a `t` factor) and the count of eigenvalues, with
    /// multiplicity, that are not rational.
    pub fn spectrum(&self) -> Spectrum {
        extract_invariants(self).spectrum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pencil serialization")
    }

    pub fn from_json(s: &str) -> Result<Pencil> {
        serde_json::from_str(s).map_err(|e| Error::Dimension(e.to_string()))
    }
}

impl fmt::Debug for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pencil {}x{} [", self.p(), self.q())?;
        for row in self.poly_entries() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<Eigenvalue>,
    /// Eigenvalues (with multiplicity) outside the rationals; nonzero means
    /// the pencil has spectral content this crate does not certify.
    pub nonrational_degree: usize,
}

impl Spectrum {
    pub fn has_nonrational_content(&self) -> bool {
        self.nonrational_degree > 0
    }
}

#[derive(Serialize, Deserialize)]
struct PencilRepr {
    p: usize,
    q: usize,
    #[serde(rename = "A0")]
    a0: Vec<Vec<Rat>>,
    #[serde(rename = "A1")]
    a1: Vec<Vec<Rat>>,
}

impl Serialize for Pencil {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PencilRepr {
            p: self.p(),
            q: self.q(),
            a0: self.a0.to_rows(),
            a1: self.a1.to_rows(),
        }
        .serialize(serializer)
    }
}

fn matrix_from_repr(rows: Vec<Vec<Rat>>, p: usize, q: usize, name: &str) -> Result<Matrix> {
    if rows.len() != p || rows.iter().any(|r| r.len() != q) {
        return Err(Error::Dimension(format!("{name} is not {p}x{q}")));
    }
    if p == 0 {
        return Ok(Matrix::zeros(0, q));
    }
    Ok(Matrix::from_rows(rows).expect("checked shape"))
}

impl<'de> Deserialize<'de> for Pencil {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PencilRepr::deserialize(deserializer)?;
        if r.p == 0 || r.q == 0 {
            return Err(D::Error::custom("p and q must be positive"));
        }
        let a0 = matrix_from_repr(r.a0, r.p, r.q, "A0").map_err(D::Error::custom)?;
        let a1 = matrix_from_repr(r.a1, r.p, r.q, "A1").map_err(D::Error::custom)?;
        Ok(Pencil { a0, a1 })
    }
}
