use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer extended by both infinities, used for the sentinel conventions
/// `c_0 = +inf` and `c_{m+1} = -inf` on chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(usize),
    PosInf,
}

impl Ext {
    pub fn finite(self) -> Option<usize> {
        match self {
            Ext::Fin(v) => Some(v),
            _ => None,
        }
    }
}

fn check_nonincreasing(v: &[usize]) -> Result<()> {
    if v.windows(2).all(|w| w[0] >= w[1]) {
        Ok(())
    } else {
        Err(Error::NotNonincreasing(v.to_vec()))
    }
}

/// A fixed-length nonincreasing sequence of nonnegative integers. The length
/// is part of the value: `(1)` and `(1, 0)` are different chains.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Chain(Vec<usize>);

impl Chain {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        check_nonincreasing(&entries)?;
        Ok(Chain(entries))
    }

    /// Sorts the entries into nonincreasing order first.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Chain(entries)
    }

    pub fn empty() -> Self {
        Chain(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        Chain(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-based access with `c_0 = +inf` and `c_i = -inf` past the end.
    pub fn at(&self, i: usize) -> Ext {
        if i == 0 {
            Ext::PosInf
        } else {
            self.0.get(i - 1).map_or(Ext::NegInf, |&v| Ext::Fin(v))
        }
    }

    /// 1-based access for indices known to be in range.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl TryFrom<Vec<usize>> for Chain {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Chain::new(v)
    }
}

impl From<Chain> for Vec<usize> {
    fn from(c: Chain) -> Self {
        c.0
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain{:?}", self.0)
    }
}

/// A partition: nonincreasing, finitely supported. Stored without trailing
/// zeros; reads past the stored parts return 0.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        check_nonincreasing(&parts)?;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-based access, zero beyond the stored parts (and at index 0, which
    /// is never meaningful for a plain partition).
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `k -> #{i : a_i >= k}`
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().take_while(|&&a| a >= k).count())
                .collect(),
        )
    }

    /// Multiset union, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Componentwise sum.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.length().max(other.length());
        Partition((1..=n).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &Partition) -> Partition {
        let n = self.length().min(other.length());
        Partition((1..=n).map(|i| self.get(i).min(other.get(i))).collect())
    }

    /// `self ≺ other`: equal totals and every prefix sum of `self` is at most
    /// the corresponding prefix sum of `other`.
    pub fn is_majorized_by(&self, other: &Partition) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let n = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.get(i);
            b += other.get(i);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.0)
    }
}

/// A partition with a distinguished term in position 0, written
/// `(r_0; r_1, r_2, ...)`. Built from a chain, the head is the chain length
/// (all entries are `>= 0`) and the tail is the conjugate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HeadedRepr", into = "HeadedRepr")]
pub struct HeadedPartition {
    head: usize,
    tail: Partition,
}

#[derive(Serialize, Deserialize)]
struct HeadedRepr {
    head: usize,
    tail: Partition,
}

impl HeadedPartition {
    pub fn new(head: usize, tail: Partition) -> Result<Self> {
        if head < tail.get(1) {
            return Err(Error::HeadTooSmall {
                head,
                first: tail.get(1),
            });
        }
        Ok(HeadedPartition { head, tail })
    }

    pub fn from_chain(c: &Chain) -> Self {
        HeadedPartition {
            head: c.len(),
            tail: super::conjugate(c),
        }
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    /// Index 0 is the head; indices past the tail read 0.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            self.head
        } else {
            self.tail.get(i)
        }
    }

    /// Last index that can hold a nonzero value.
    pub fn support(&self) -> usize {
        self.tail.length()
    }

    /// `sum_{i=1}^{n} r_i`
    pub fn tail_sum_to(&self, n: usize) -> usize {
        (1..=n).map(|i| self.get(i)).sum()
    }
}

impl TryFrom<HeadedRepr> for HeadedPartition {
    type Error = Error;
    fn try_from(r: HeadedRepr) -> Result<Self> {
        HeadedPartition::new(r.head, r.tail)
    }
}

impl From<HeadedPartition> for HeadedRepr {
    fn from(h: HeadedPartition) -> Self {
        HeadedRepr {
            head: h.head,
            tail: h.tail,
        }
    }
}

impl fmt::Debug for HeadedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.head)?;
        for (i, p) in self.tail.parts().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
