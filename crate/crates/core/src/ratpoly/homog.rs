use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// A homogeneous invariant factor `t^k * t^deg(a) * a(s/t)`, stored as the
/// infinite exponent `k` and the monic finite part `a(s)`.
///
/// The zero value stands for the factors past the normal rank. It is
/// divisible by everything and divides only itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    inf_exp: usize,
    alpha: Poly,
}

impl HomogPoly {
    /// Builds `t^k * homog(alpha)`. `alpha` is made monic; a zero `alpha`
    /// yields the zero value regardless of `k`.
    pub fn new(inf_exp: usize, alpha: Poly) -> Self {
        if alpha.is_zero() {
            return HomogPoly::zero();
        }
        HomogPoly {
            inf_exp,
            alpha: alpha.monic(),
        }
    }

    pub fn one() -> Self {
        HomogPoly {
            inf_exp: 0,
            alpha: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        HomogPoly {
            inf_exp: 0,
            alpha: Poly::zero(),
        }
    }

    /// `t^k`
    pub fn infinite(k: usize) -> Self {
        HomogPoly::new(k, Poly::one())
    }

    /// `homog(alpha)` with no infinite part.
    pub fn finite(alpha: Poly) -> Self {
        HomogPoly::new(0, alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.inf_exp == 0 && self.alpha.is_one()
    }

    pub fn inf_exp(&self) -> usize {
        self.inf_exp
    }

    pub fn finite_part(&self) -> &Poly {
        &self.alpha
    }

    pub fn degree(&self) -> Result<usize> {
        self.alpha
            .degree()
            .map(|d| d + self.inf_exp)
            .ok_or(Error::DegreeOfZero)
    }

    pub fn divides(&self, other: &HomogPoly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        self.inf_exp <= other.inf_exp && self.alpha.divides(&other.alpha)
    }

    pub fn gcd(&self, other: &HomogPoly) -> HomogPoly {
        match (self.is_zero(), other.is_zero()) {
            (true, _) => other.clone(),
            (_, true) => self.clone(),
            _ => HomogPoly {
                inf_exp: self.inf_exp.min(other.inf_exp),
                alpha: self.alpha.gcd(&other.alpha),
            },
        }
    }

    pub fn lcm(&self, other: &HomogPoly) -> HomogPoly {
        if self.is_zero() || other.is_zero() {
            return HomogPoly::zero();
        }
        HomogPoly {
            inf_exp: self.inf_exp.max(other.inf_exp),
            alpha: self.alpha.lcm(&other.alpha),
        }
    }

    /// Exponent of `(s - λ t)` in the factor; for the zero value this is
    /// meaningless and panics.
    pub fn multiplicity_at(&self, lambda: &Rat) -> usize {
        self.alpha.root_multiplicity(lambda)
    }
}

pub fn hif_gcd(a: &HomogPoly, b: &HomogPoly) -> HomogPoly {
    a.gcd(b)
}

pub fn hif_lcm(a: &HomogPoly, b: &HomogPoly) -> HomogPoly {
    a.lcm(b)
}

pub fn hif_divides(a: &HomogPoly, b: &HomogPoly) -> bool {
    a.divides(b)
}

pub fn hif_degree(a: &HomogPoly) -> Result<usize> {
    a.degree()
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match (self.inf_exp, self.alpha.is_one()) {
            (0, true) => f.write_str("1"),
            (0, false) => write!(f, "{}", self.alpha),
            (1, true) => f.write_str("t"),
            (k, true) => write!(f, "t^{k}"),
            (1, false) => write!(f, "t*({})", self.alpha),
            (k, false) => write!(f, "t^{k}*({})", self.alpha),
        }
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct HomogRepr {
    k: usize,
    alpha: Poly,
}

impl Serialize for HomogPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HomogRepr {
            k: self.inf_exp,
            alpha: self.alpha.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = HomogRepr::deserialize(deserializer)?;
        if r.alpha.is_zero() && r.k != 0 {
            return Err(serde::de::Error::custom(
                "zero finite part with a nonzero infinite exponent",
            ));
        }
        Ok(HomogPoly::new(r.k, r.alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_minus(r: i64, k: usize) -> HomogPoly {
        HomogPoly::new(k, Poly::from_ints(&[-r, 1]))
    }

    #[test]
    fn unit_divides_everything() {
        assert!(hif_divides(&HomogPoly::one(), &s_minus(1, 2)));
        assert!(hif_divides(&HomogPoly::one(), &HomogPoly::zero()));
        assert!(hif_divides(&HomogPoly::zero(), &HomogPoly::zero()));
        assert!(!hif_divides(&HomogPoly::zero(), &HomogPoly::one()));
    }

    #[test]
    fn gcd_is_componentwise() {
        let a = HomogPoly::new(1, Poly::from_ints(&[0, 1]));
        let b = HomogPoly::new(0, Poly::from_ints(&[0, 0, 1]));
        assert_eq!(hif_gcd(&a, &b), HomogPoly::new(0, Poly::from_ints(&[0, 1])));
        assert_eq!(
            hif_lcm(&a, &b),
            HomogPoly::new(1, Poly::from_ints(&[0, 0, 1]))
        );
        assert_eq!(hif_gcd(&a, &HomogPoly::zero()), a);
        assert!(hif_lcm(&a, &HomogPoly::zero()).is_zero());
    }

    #[test]
    fn degree_counts_infinite_part() {
        assert_eq!(hif_degree(&s_minus(3, 2)).unwrap(), 3);
        assert_eq!(hif_degree(&HomogPoly::zero()), Err(Error::DegreeOfZero));
    }

    #[test]
    fn json_shape() {
        let h = s_minus(3, 2);
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"k":2,"alpha":["-3","1"]}"#
        );
        let back: HomogPoly = serde_json::from_str(r#"{"k":2,"alpha":["-6","2"]}"#).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<HomogPoly>(r#"{"k":1,"alpha":[]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s_minus(3, 2).to_string(), "t^2*(s - 3)");
        assert_eq!(HomogPoly::infinite(1).to_string(), "t");
        assert_eq!(HomogPoly::one().to_string(), "1");
    }
}
