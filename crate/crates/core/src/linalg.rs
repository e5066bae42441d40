//! Exact linear algebra over ℚ, just enough for span membership and rank.

use num_traits::Zero;

use crate::series::Rational;

/// Row-reduces `rows` in place and returns the pivot columns.
fn row_reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a set of equal-length vectors.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows, len).len()
}

/// Coefficients `c` with `Σ c_i basis_i = target`, if `target` lies in the
/// span. When the basis is dependent, free coefficients are zero.
pub fn solve_in_span(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let k = basis.len();
    // equations: one per coordinate, unknowns are the k coefficients
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &col) in pivots.iter().enumerate() {
        sol[col] = rows[row][k].clone();
    }
    Some(sol)
}
