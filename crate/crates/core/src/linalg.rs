//! Small exact linear algebra over the active field.

use crate::field::{Coeff, Field};

/// Row-reduce in place, returning the rank.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut rows: Vec<Vec<Coeff>>, k: &Field) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len()).find(|&r| !k.is_zero(&rows[r][col]));
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv = k.inv(&rows[rank][col].clone());
        for c in col..ncols {
            rows[rank][c] = k.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !k.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = k.mul(&factor, &rows[rank][c]);
                    rows[r][c] = k.sub(&rows[r][c], &delta);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the solution space of the linear system rows·x = rhs.
/// Returns None when the system is inconsistent.
pub fn solution_dimension(
    rows: &[Vec<Coeff>],
    rhs: &[Coeff],
    nvars: usize,
    k: &Field,
) -> Option<usize> {
    let homogeneous: Vec<Vec<Coeff>> = rows.to_vec();
    let r = rank(homogeneous, k);
    let augmented: Vec<Vec<Coeff>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut aug = row.clone();
            aug.push(b.clone());
            aug
        })
        .collect();
    if rank(augmented, k) != r {
        return None;
    }
    Some(nvars - r)
}

/// Determinant sign test: is the square matrix singular?
pub fn is_singular(matrix: &[Vec<Coeff>], k: &Field) -> bool {
    rank(matrix.to_vec(), k) < matrix.len()
}
