//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Outcome of solving `A y = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    /// Solvable with `nullity` free parameters; `particular` sets every free
    /// variable to zero.
    Family {
        particular: Vec<Rational>,
        nullity: usize,
    },
}

/// Solve `matrix * y = rhs`, where `matrix` has `rows.len() == rhs.len()` rows
/// of `unknowns` entries each.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational], unknowns: usize) -> LinearSolution {
    assert_eq!(matrix.len(), rhs.len(), "row count must match rhs length");
    let mut rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), unknowns, "ragged matrix");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = Rational::one() / &rows[rank][col];
        for v in rows[rank].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    if rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return LinearSolution::Inconsistent;
    }

    let mut solution = vec![Rational::zero(); unknowns];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = rows[r][unknowns].clone();
    }
    if rank == unknowns {
        LinearSolution::Unique(solution)
    } else {
        LinearSolution::Family {
            particular: solution,
            nullity: unknowns - rank,
        }
    }
}
