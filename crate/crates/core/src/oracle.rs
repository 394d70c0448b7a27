//! Brute-force decomposition by exact Gaussian elimination on the full
//! system `Σ c(p) rep(p)_{i,j} = X_{i,j}` over every coordinate `(i, j)`.
//!
//! Independent of the entry selectors; used to validate [`crate::solver`].

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::basis::{self, Caps, Side};
use crate::error::{Error, Result};
use crate::solver::{CoefficientVector, Invariant, Scalar};
use crate::tensor;

/// Solves for `c` with `Σ c(p) rep(p) = X`, or reports `Inconsistent` when
/// `X` is outside the span.
pub fn oracle_full_solve(x: &Invariant, side: Side, caps: &Caps) -> Result<CoefficientVector> {
    let basis = basis::enumerate_basis(side, x.n, x.r, caps)?.elements;
    let size = basis.len();

    // coefficient pattern of every coordinate touched by some basis matrix
    let mut patterns: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (k, p) in basis.iter().enumerate() {
        let m = tensor::rep_matrix(side, p, x.n, x.r, caps)?;
        for (col, &row) in m.mapping.iter().enumerate() {
            patterns.entry((row, col)).or_default().push(k);
        }
    }
    // coordinates outside every support give 0 = X_{i,j}
    if x.iter().any(|(key, _)| !patterns.contains_key(&key)) {
        return Err(Error::Inconsistent);
    }
    // equal rows need equal right-hand sides; keep one of each
    let mut distinct: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (&(row, col), pattern) in &patterns {
        let value = x.get_ranked(row, col);
        match distinct.get(pattern) {
            Some(seen) if *seen != value => return Err(Error::Inconsistent),
            Some(_) => {}
            None => {
                distinct.insert(pattern.clone(), value);
            }
        }
    }

    let mut rows: Vec<Vec<Scalar>> = distinct
        .into_iter()
        .map(|(pattern, value)| {
            let mut row = vec![Scalar::zero(); size + 1];
            for k in pattern {
                row[k] = Scalar::one();
            }
            row[size] = value;
            row
        })
        .collect();

    let values = eliminate(&mut rows, size)?;
    CoefficientVector::new(basis, values)
}

/// Reduced row echelon form on an augmented matrix with `unknowns` columns
/// plus the right-hand side.
fn eliminate(rows: &mut [Vec<Scalar>], unknowns: usize) -> Result<Vec<Scalar>> {
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::RankDeficient);
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot).skip(col) {
                *v -= &factor * p;
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::Inconsistent);
    }
    Ok(rows[..unknowns].iter().map(|row| row[unknowns].clone()).collect())
}
