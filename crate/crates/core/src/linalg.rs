//! Exact integer determinants.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
pub fn determinant(matrix: &[Vec<i64>]) -> Result<i64> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InternalInvariantFailure(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .zip(a[i][k].checked_mul(a[k][j]))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)?;
                // exact by Sylvester's identity
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    let det = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
    i64::try_from(det).map_err(|_| Error::Overflow)
}
