use serde::{Deserialize, Deserializer, Serialize};

use super::{Eigenvalue, Spectrum};
use crate::error::{Error, Result};
use crate::partitions::Chain;
use crate::ratpoly::{HomogPoly, Rat};

/// Complete strict-equivalence invariants of a `p x q` pencil: the normal
/// rank, the homogeneous invariant factors `φ_1 | ... | φ_ρ`, and the column
/// and row minimal indices as nonincreasing chains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KroneckerInvariants {
    pub p: usize,
    pub q: usize,
    pub rank: usize,
    pub hif: Vec<HomogPoly>,
    pub cmi: Chain,
    pub rmi: Chain,
}

impl KroneckerInvariants {
    pub fn new(
        p: usize,
        q: usize,
        rank: usize,
        hif: Vec<HomogPoly>,
        cmi: Chain,
        rmi: Chain,
    ) -> Result<Self> {
        let k = KroneckerInvariants {
            p,
            q,
            rank,
            hif,
            cmi,
            rmi,
        };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInvariants(m));
        if self.rank > self.p.min(self.q) {
            return bad(format!("rank {} exceeds min({}, {})", self.rank, self.p, self.q));
        }
        if self.hif.len() != self.rank {
            return bad(format!("{} invariant factors for rank {}", self.hif.len(), self.rank));
        }
        if self.hif.iter().any(HomogPoly::is_zero) {
            return bad("zero invariant factor".into());
        }
        if let Some(i) = (1..self.hif.len()).find(|&i| !self.hif[i - 1].divides(&self.hif[i])) {
            return bad(format!("factor {} does not divide factor {}", i, i + 1));
        }
        if self.cmi.len() != self.q - self.rank {
            return bad(format!("expected {} column minimal indices", self.q - self.rank));
        }
        if self.rmi.len() != self.p - self.rank {
            return bad(format!("expected {} row minimal indices", self.p - self.rank));
        }
        let total = self.hif_degree_sum() + self.cmi.sum() + self.rmi.sum();
        if total != self.rank {
            return bad(format!("degrees and indices sum to {total}, rank is {}", self.rank));
        }
        Ok(())
    }

    /// `φ_i` with `φ_i = 1` for `i < 1` and `φ_i = 0` for `i > ρ`.
    pub fn phi(&self, i: usize) -> HomogPoly {
        if i == 0 {
            HomogPoly::one()
        } else {
            self.hif.get(i - 1).cloned().unwrap_or_else(HomogPoly::zero)
        }
    }

    pub fn hif_degree_sum(&self) -> usize {
        self.hif
            .iter()
            .map(|h| h.degree().expect("nonzero factor"))
            .sum()
    }

    pub fn is_regular(&self) -> bool {
        self.p == self.q && self.rank == self.p
    }

    /// Invariants of the transposed pencil.
    pub fn transpose(&self) -> KroneckerInvariants {
        KroneckerInvariants {
            p: self.q,
            q: self.p,
            rank: self.rank,
            hif: self.hif.clone(),
            cmi: self.rmi.clone(),
            rmi: self.cmi.clone(),
        }
    }

    /// Partial multiplicities `n_1 >= ... >= n_ρ` at `λ`: the exponent of
    /// `(s - λ)` (or of `t` at infinity) in `φ_ρ, φ_{ρ-1}, ..., φ_1`.
    pub fn partial_multiplicities(&self, lambda: &Eigenvalue) -> Vec<usize> {
        self.hif
            .iter()
            .rev()
            .map(|h| match lambda {
                Eigenvalue::Finite(l) => h.multiplicity_at(l),
                Eigenvalue::Infinity => h.inf_exp(),
            })
            .collect()
    }

    pub fn spectrum(&self) -> Spectrum {
        let nonrational_degree = self
            .hif
            .iter()
            .map(|h| h.finite_part().rational_roots().1.degree().unwrap_or(0))
            .sum();
        // every eigenvalue divides the last factor
        let mut eigenvalues = Vec::new();
        if let Some(last) = self.hif.last() {
            let (roots, _) = last.finite_part().rational_roots();
            eigenvalues.extend(roots.into_iter().map(|(r, _): (Rat, usize)| Eigenvalue::Finite(r)));
            if last.inf_exp() > 0 {
                eigenvalues.push(Eigenvalue::Infinity);
            }
        }
        Spectrum {
            eigenvalues,
            nonrational_degree,
        }
    }
}

#[derive(Deserialize)]
struct InvariantsRepr {
    p: usize,
    q: usize,
    rank: usize,
    hif: Vec<HomogPoly>,
    cmi: Chain,
    rmi: Chain,
}

impl<'de> Deserialize<'de> for KroneckerInvariants {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = InvariantsRepr::deserialize(deserializer)?;
        KroneckerInvariants::new(r.p, r.q, r.rank, r.hif, r.cmi, r.rmi)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::Poly;

    fn s_pow(k: usize) -> HomogPoly {
        HomogPoly::finite(Poly::monomial(k))
    }

    #[test]
    fn validation_catches_each_defect() {
        let ok = KroneckerInvariants::new(
            3,
            4,
            3,
            vec![HomogPoly::one(), HomogPoly::one(), s_pow(2)],
            Chain::new(vec![1]).unwrap(),
            Chain::empty(),
        );
        assert!(ok.is_ok());
        let wrong_sum = KroneckerInvariants::new(
            2,
            2,
            2,
            vec![HomogPoly::one(), s_pow(1)],
            Chain::empty(),
            Chain::empty(),
        );
        assert!(matches!(wrong_sum, Err(Error::InvalidInvariants(_))));
        let not_chain = KroneckerInvariants::new(
            2,
            2,
            2,
            vec![s_pow(1), HomogPoly::infinite(1)],
            Chain::empty(),
            Chain::empty(),
        );
        assert!(not_chain.is_err());
        let wrong_len = KroneckerInvariants::new(1, 2, 1, vec![HomogPoly::one()], Chain::empty(), Chain::empty());
        assert!(wrong_len.is_err());
    }

    #[test]
    fn json_round_trip() {
        let k = KroneckerInvariants::new(
            1,
            2,
            1,
            vec![HomogPoly::one()],
            Chain::new(vec![1]).unwrap(),
            Chain::empty(),
        )
        .unwrap();
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(
            s,
            r#"{"p":1,"q":2,"rank":1,"hif":[{"k":0,"alpha":["1"]}],"cmi":[1],"rmi":[]}"#
        );
        let back: KroneckerInvariants = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k);
        assert!(serde_json::from_str::<KroneckerInvariants>(
            r#"{"p":1,"q":2,"rank":1,"hif":[{"k":0,"alpha":["1"]}],"cmi":[0],"rmi":[]}"#
        )
        .is_err());
    }

    #[test]
    fn partial_multiplicities_read_in_reverse() {
        let k = KroneckerInvariants::new(
            2,
            2,
            2,
            vec![HomogPoly::new(0, Poly::monomial(1)), HomogPoly::new(1, Poly::monomial(2))],
            Chain::empty(),
            Chain::empty(),
        );
        // degrees 1 + 3 = 4 != 2, so this record is invalid
        assert!(k.is_err());
        let k = KroneckerInvariants::new(
            3,
            3,
            3,
            vec![HomogPoly::one(), HomogPoly::new(0, Poly::monomial(1)), HomogPoly::new(1, Poly::monomial(1))],
            Chain::empty(),
            Chain::empty(),
        )
        .unwrap();
        assert_eq!(k.partial_multiplicities(&Eigenvalue::finite(0)), vec![1, 1, 0]);
        assert_eq!(k.partial_multiplicities(&Eigenvalue::Infinity), vec![1, 0, 0]);
        assert_eq!(k.partial_multiplicities(&Eigenvalue::finite(3)), vec![0, 0, 0]);
    }
}
