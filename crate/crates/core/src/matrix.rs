//! Exact determinants by fraction-free Bareiss elimination.
//!
//! Rational matrices are cleared to integers row by row (multiplying each
//! row by the lcm of its denominators), eliminated over `BigInt` with exact
//! divisions only, and the accumulated scale is divided back out. This
//! avoids both rational-arithmetic blowup and the vanishing interior minors
//! that would break condensation-style recurrences.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Determinant of a square integer matrix by Bareiss elimination.
///
/// The input is consumed as a row-major vector of rows.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev_pivot = BigInt::one();
    for t in 0..n - 1 {
        if m[t][t].is_zero() {
            // Find a row below with a nonzero entry in this column.
            match (t + 1..n).find(|&row| !m[row][t].is_zero()) {
                Some(row) => {
                    m.swap(t, row);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for row in t + 1..n {
            for col in t + 1..n {
                let numer = &m[t][t] * &m[row][col] - &m[row][t] * &m[t][col];
                // Exact by the Bareiss identity.
                m[row][col] = numer / &prev_pivot;
            }
            m[row][t] = BigInt::zero();
        }
        prev_pivot = m[t][t].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a square rational matrix: clear denominators per row,
/// run integer Bareiss, restore the scale.
pub fn rational_determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    debug_assert!(rows.iter().all(|row| row.len() == n));
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut cleared = Vec::with_capacity(n);
    for row in rows {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        cleared.push(
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect::<Vec<BigInt>>(),
        );
        scale *= lcm;
    }
    let det = bareiss_determinant(cleared);
    Rational::from_big(BigRational::new(det, scale))
}
