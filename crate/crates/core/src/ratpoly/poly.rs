use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree with no trailing zero. The empty coefficient vector is the zero
/// polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `s - root`
    pub fn linear(root: &Rat) -> Self {
        Poly::new(vec![-root, Rat::one()])
    }

    /// `s^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        Poly { coeffs }
    }

    /// Product of `(s - root)^mult` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a Rat, usize)>) -> Self {
        let mut p = Poly::one();
        for (root, mult) in roots {
            let lin = Poly::linear(root);
            for _ in 0..mult {
                p = &p * &lin;
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rat::is_one)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// `self | other`. Zero divides only zero; everything divides zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.rem(self).is_zero()
    }

    /// Multiplicity of `root` as a root of `self`. Zero polynomial has no
    /// meaningful multiplicity; callers must not ask.
    pub fn root_multiplicity(&self, root: &Rat) -> usize {
        assert!(!self.is_zero(), "root multiplicity of the zero polynomial");
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = synthetic_division(&p, root);
            if !r.is_zero() {
                return m;
            }
            p = q;
            m += 1;
        }
    }

    /// Rational roots with multiplicities, sorted by root, plus the cofactor
    /// that carries no rational root.
    pub fn rational_roots(&self) -> (Vec<(Rat, usize)>, Poly) {
        assert!(!self.is_zero(), "rational roots of the zero polynomial");
        let mut rest = self.monic();
        let mut roots = Vec::new();

        let zero = Rat::zero();
        let m0 = rest.root_multiplicity(&zero);
        if m0 > 0 {
            rest = Poly::new(rest.coeffs[m0..].to_vec());
            roots.push((zero, m0));
        }
        if rest.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }

        // Primitive integer form: any rational root p/q has p | a_0, q | a_n.
        let ints = integer_coefficients(&rest);
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let nums = divisors(&a0);
        let dens = divisors(&an);
        let mut candidates: Vec<Rat> = Vec::new();
        for n in &nums {
            for d in &dens {
                candidates.push(Rat::new(n.clone(), d.clone()));
                candidates.push(Rat::new(-n.clone(), d.clone()));
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let m = rest.root_multiplicity(&c);
            if m > 0 {
                for _ in 0..m {
                    rest = synthetic_division(&rest, &c).0;
                }
                roots.push((c, m));
            }
        }
        roots.sort();
        (roots, rest)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        (self * other).div_rem(&g).0.monic()
    }
}

/// Divide by `(s - root)`; returns quotient and remainder value.
fn synthetic_division(p: &Poly, root: &Rat) -> (Poly, Rat) {
    let n = p.coeffs.len();
    if n == 0 {
        return (Poly::zero(), Rat::zero());
    }
    let mut quot = vec![Rat::zero(); n - 1];
    let mut carry = Rat::zero();
    for k in (0..n).rev() {
        let v = &p.coeffs[k] + &(&carry * root);
        if k == 0 {
            return (Poly::new(quot), v);
        }
        quot[k - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors by trial division. Fine for the coefficient sizes that
/// arise from small-integer pencils.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let mut out = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d != small / d {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        return out;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl std::ops::Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("s")?,
                _ => write!(f, "s^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Poly::new(Vec::<Rat>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(s^2 - s, s) = s
        assert_eq!(p(&[0, -1, 1]).gcd(&p(&[0, 1])), p(&[0, 1]));
        // gcd(p, 0) = monic p
        assert_eq!(p(&[2, 4]).gcd(&Poly::zero()), p(&[1, 2]).monic());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
        // coprime
        assert_eq!(p(&[0, 1]).gcd(&p(&[-1, 1])), Poly::one());
    }

    #[test]
    fn lcm_examples() {
        // lcm(s, s - 1) = s^2 - s
        assert_eq!(p(&[0, 1]).lcm(&p(&[-1, 1])), p(&[0, -1, 1]));
        assert_eq!(p(&[0, 1]).lcm(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, 0, -2, 5]);
        let b = p(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().is_none_or(|d| d < 1));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (s - 1/2)^2 (s + 3) s (s^2 + 1)
        let half = Rat::new(1, 2);
        let base = Poly::from_roots([(&half, 2), (&Rat::from_int(-3), 1), (&Rat::zero(), 1)]);
        let poly = &base * &p(&[1, 0, 1]);
        let (roots, rest) = poly.scale(&Rat::from_int(6)).rational_roots();
        assert_eq!(
            roots,
            vec![(Rat::from_int(-3), 1), (Rat::zero(), 1), (half, 2)]
        );
        assert_eq!(rest, p(&[1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -1, 1]).to_string(), "s^2 - s");
        assert_eq!(p(&[-3, 1]).to_string(), "s - 3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(vec![Rat::new(-3, 2)]).to_string(), "-3/2");
    }

    #[test]
    fn json_round_trip() {
        let q = Poly::new(vec![Rat::new(-3, 2), Rat::zero(), Rat::one()]);
        let j = serde_json::to_string(&q).unwrap();
        assert_eq!(j, r#"["-3/2","0","1"]"#);
        assert_eq!(serde_json::from_str::<Poly>(&j).unwrap(), q);
        // trailing zeros are trimmed on input
        assert_eq!(serde_json::from_str::<Poly>(r#"["1","0"]"#).unwrap(), Poly::one());
    }
}
