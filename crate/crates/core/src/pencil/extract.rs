use super::{KroneckerInvariants, Pencil};
use crate::matrix::Matrix;
use crate::partitions::Chain;
use crate::ratpoly::{HomogPoly, Poly, Rat};

/// Nonzero diagonal of the Smith normal form of a polynomial matrix, monic
/// and in divisibility order. Its length is the rank over the rational
/// function field.
pub fn smith_diagonal(mut m: Vec<Vec<Poly>>) -> Vec<Poly> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_degree_entry(&m, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut m, t, pi, pj);
        loop {
            let mut dirty = false;
            let pivot = m[t][t].clone();
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let (quo, rem) = m[i][t].div_rem(&pivot);
                for j in t..cols {
                    if !m[t][j].is_zero() {
                        m[i][j] = &m[i][j] - &(&quo * &m[t][j]);
                    }
                }
                debug_assert_eq!(m[i][t], rem);
                dirty |= !rem.is_zero();
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let (quo, rem) = m[t][j].div_rem(&pivot);
                for i in t..rows {
                    if !m[i][t].is_zero() {
                        m[i][j] = &m[i][j] - &(&m[i][t] * &quo);
                    }
                }
                dirty |= !rem.is_zero();
            }
            if dirty {
                // a remainder of lower degree than the pivot is left in row or column t
                let line = (t + 1..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_degree_entry(&m, line).expect("nonzero remainder");
                move_to_pivot(&mut m, t, pi, pj);
                continue;
            }
            // row and column are clear; the pivot must divide the rest
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !pivot.divides(&m[i][j])));
            match offender {
                Some(i) => {
                    for j in t + 1..cols {
                        m[t][j] = &m[t][j] + &m[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].monic());
    }
    diag
}

fn min_degree_entry(
    m: &[Vec<Poly>],
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    cells
        .filter(|&(i, j)| !m[i][j].is_zero())
        .min_by_key(|&(i, j)| m[i][j].degree())
}

fn move_to_pivot(m: &mut [Vec<Poly>], t: usize, i: usize, j: usize) {
    m.swap(t, i);
    for row in m.iter_mut() {
        row.swap(t, j);
    }
}

/// Column minimal indices, nonincreasing. Kernel vectors of `A(s)` of degree
/// at most `k` are exactly the kernel of the block matrix `S_k` with `A0` on
/// the diagonal and `A1` on the subdiagonal, so `μ_k = dim ker S_k` counts
/// `Σ_{c_i <= k} (k + 1 - c_i)` and second differences give the counts.
pub fn column_minimal_indices(a: &Pencil, rank: usize) -> Chain {
    let (p, q) = (a.p(), a.q());
    let needed = q - rank;
    let mut found = Vec::with_capacity(needed);
    let (mut mu1, mut mu2) = (0i64, 0i64); // μ_{k-1}, μ_{k-2}
    let mut k = 0;
    while found.len() < needed {
        let mut s = Matrix::zeros((k + 2) * p, (k + 1) * q);
        for b in 0..=k {
            s.set_block(b * p, b * q, a.a0());
            s.set_block((b + 1) * p, b * q, a.a1());
        }
        let mu = ((k + 1) * q - s.rank()) as i64;
        let count = mu - 2 * mu1 + mu2;
        debug_assert!(count >= 0);
        found.extend(std::iter::repeat_n(k, count as usize));
        mu2 = mu1;
        mu1 = mu;
        k += 1;
        debug_assert!(k <= rank + 1, "minimal indices exceed the rank");
    }
    Chain::from_unsorted(found)
}

/// Full set of strict-equivalence invariants.
pub fn extract_invariants(a: &Pencil) -> KroneckerInvariants {
    let finite = smith_diagonal(a.poly_entries());
    let reversed = smith_diagonal(a.reversed().poly_entries());
    let rank = finite.len();
    debug_assert_eq!(rank, reversed.len());
    let hif = finite
        .into_iter()
        .zip(&reversed)
        .map(|(alpha, rev)| HomogPoly::new(rev.root_multiplicity(&Rat::zero()), alpha))
        .collect();
    let cmi = column_minimal_indices(a, rank);
    let rmi = column_minimal_indices(&a.transpose(), rank);
    let k = KroneckerInvariants {
        p: a.p(),
        q: a.q(),
        rank,
        hif,
        cmi,
        rmi,
    };
    debug_assert_eq!(k.validate(), Ok(()));
    k
}
