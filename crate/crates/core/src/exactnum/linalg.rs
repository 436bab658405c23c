//! Dense elimination over any [`Field`].

use super::Field;
use crate::error::{Error, Result};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division performed is exact in the underlying integral domain, so
/// intermediate entries stay minors of the input rather than accumulating
/// nested fractions.
pub fn determinant<F: Field>(matrix: &[Vec<F>]) -> F {
    let n = matrix.len();
    if n == 0 {
        return F::one();
    }
    let mut m: Vec<Vec<F>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = F::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return F::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = cross.div(&prev);
            }
            m[i][k] = F::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Solves `matrix * x = rhs` for each right-hand side by Gauss-Jordan
/// elimination with first-nonzero pivoting.
pub fn solve_many<F: Field>(matrix: &[Vec<F>], rhs: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let n = matrix.len();
    let cols = n + rhs.len();
    let mut m: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row = matrix[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for e in &mut m[k][k..cols] {
            *e = e.div(&pivot);
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            let pivot_row = m[k].clone();
            for (e, pk) in m[i][k..cols].iter_mut().zip(&pivot_row[k..cols]) {
                *e = e.sub(&factor.mul(pk));
            }
        }
    }
    Ok((0..rhs.len())
        .map(|r| (0..n).map(|i| m[i][n + r].clone()).collect())
        .collect())
}

pub fn solve<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> Result<Vec<F>> {
    Ok(solve_many(matrix, &[rhs.to_vec()])?.remove(0))
}
