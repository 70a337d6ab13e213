//! Seeded generators for invariant records, strict equivalences and
//! rank-one pencils.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Eigenvalue, KroneckerInvariants, Pencil};
use crate::matrix::Matrix;
use crate::partitions::Chain;
use crate::ratpoly::{HomogPoly, Poly, Rat};

const FINITE_POOL: [i64; 5] = [0, 1, -1, 2, -2];

fn pool_draw<R: Rng + ?Sized>(rng: &mut R) -> Eigenvalue {
    let i = rng.random_range(0..=FINITE_POOL.len());
    FINITE_POOL
        .get(i)
        .map_or(Eigenvalue::Infinity, |&v| Eigenvalue::finite(v))
}

/// A random valid invariant record for a `p x q` pencil whose finite
/// eigenvalues lie in `{0, ±1, ±2}`, possibly with infinite ones.
pub fn random_invariants(p: usize, q: usize, seed: u64) -> KroneckerInvariants {
    random_invariants_rng(p, q, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_invariants_rng<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> KroneckerInvariants {
    let rank = rng.random_range(0..=p.min(q));
    let slots = (p - rank) + (q - rank);
    let degree = if slots == 0 {
        rank
    } else {
        rng.random_range(0..=rank)
    };

    // elementary divisors per eigenvalue, at most `rank` blocks each
    let mut blocks: BTreeMap<Eigenvalue, Vec<usize>> = BTreeMap::new();
    let mut left = degree;
    while left > 0 {
        let size = rng.random_range(1..=left);
        let ev = pool_draw(rng);
        let list = blocks.entry(ev).or_default();
        if list.len() < rank {
            list.push(size);
        } else {
            let i = rng.random_range(0..list.len());
            list[i] += size;
        }
        left -= size;
    }
    let mut finite = vec![Poly::one(); rank];
    let mut inf = vec![0usize; rank];
    for (ev, mut sizes) in blocks {
        sizes.sort_unstable();
        // largest block goes to φ_ρ, next to φ_{ρ-1}, ...
        for (offset, &n) in sizes.iter().rev().enumerate() {
            let i = rank - 1 - offset;
            match &ev {
                Eigenvalue::Finite(l) => {
                    finite[i] = &finite[i] * &Poly::from_roots([(l, n)]);
                }
                Eigenvalue::Infinity => inf[i] = n,
            }
        }
    }
    let hif = finite
        .into_iter()
        .zip(inf)
        .map(|(a, k)| HomogPoly::new(k, a))
        .collect();

    let mut spread = vec![0usize; slots];
    for _ in 0..rank - degree {
        let i = rng.random_range(0..slots);
        spread[i] += 1;
    }
    let rmi = spread.split_off(q - rank);
    let k = KroneckerInvariants {
        p,
        q,
        rank,
        hif,
        cmi: Chain::from_unsorted(spread),
        rmi: Chain::from_unsorted(rmi),
    };
    debug_assert_eq!(k.validate(), Ok(()));
    k
}

fn nonzero_multiplier<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    let v = rng.random_range(1..=3);
    if rng.random_bool(0.5) {
        v
    } else {
        -v
    }
}

/// A random unimodular integer matrix: a product of transvections with
/// multipliers in `[-3, 3]` and row swaps.
pub fn random_unimodular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..n + 1 {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        if rng.random_bool(0.2) {
            let mut rows = m.to_rows();
            rows.swap(i, j);
            m = Matrix::from_rows(rows).expect("square");
        } else {
            let c = Rat::from_int(nonzero_multiplier(rng));
            for col in 0..n {
                let v = &m[(j, col)] * &c;
                m[(i, col)] += &v;
            }
        }
    }
    m
}

/// `P * A * Q` for random unimodular `P`, `Q`.
pub fn random_equiv(a: &Pencil, seed: u64) -> Pencil {
    random_equiv_rng(a, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_equiv_rng<R: Rng + ?Sized>(a: &Pencil, rng: &mut R) -> Pencil {
    let left = random_unimodular(a.p(), rng);
    let right = random_unimodular(a.q(), rng);
    a.transform(&left, &right)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// `(a + s b) c^T`
    ColumnForm,
    /// `w (a + s b)^T`
    RowForm,
}

/// A rank-one pencil given by a degree-one vector `a + s b` and a constant
/// vector, multiplied in the order given by the orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOneSpec {
    pub orientation: Orientation,
    pub degree1_vector: (Vec<Rat>, Vec<Rat>),
    pub constant_vector: Vec<Rat>,
}

fn outer(u: &[Rat], v: &[Rat]) -> Matrix {
    let mut m = Matrix::zeros(u.len(), v.len());
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            m[(i, j)] = a * b;
        }
    }
    m
}

impl RankOneSpec {
    pub fn pencil(&self) -> Pencil {
        let (a, b) = &self.degree1_vector;
        let c = &self.constant_vector;
        match self.orientation {
            Orientation::ColumnForm => Pencil::new(outer(a, c), outer(b, c)),
            Orientation::RowForm => Pencil::new(outer(c, a), outer(c, b)),
        }
        .expect("consistent vector lengths")
    }
}

fn small_vec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Rat> {
    (0..n).map(|_| Rat::from_int(rng.random_range(-3..=3))).collect()
}

fn nonzero_vec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Rat> {
    loop {
        let v = small_vec(n, rng);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A random `p x q` pencil of normal rank one with small integer entries.
pub fn random_rank_one(p: usize, q: usize, seed: u64) -> (RankOneSpec, Pencil) {
    random_rank_one_rng(p, q, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_rank_one_rng<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> (RankOneSpec, Pencil) {
    let orientation = if rng.random_bool(0.5) {
        Orientation::ColumnForm
    } else {
        Orientation::RowForm
    };
    let (long, short) = match orientation {
        Orientation::ColumnForm => (p, q),
        Orientation::RowForm => (q, p),
    };
    let degree1_vector = loop {
        let a = small_vec(long, rng);
        let b = small_vec(long, rng);
        if a.iter().chain(&b).any(|x| !x.is_zero()) {
            break (a, b);
        }
    };
    let spec = RankOneSpec {
        orientation,
        degree1_vector,
        constant_vector: nonzero_vec(short, rng),
    };
    let pencil = spec.pencil();
    assert_eq!(pencil.normal_rank(), 1, "rank-one generator");
    (spec, pencil)
}
