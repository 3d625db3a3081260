//! The three-dimensional array of solid minors of a square matrix.
//!
//! `W[i][j][k]` is the determinant of the `k x k` contiguous submatrix whose
//! top-left corner is `(i, j)`. The array is extended to all integer
//! indices: the `k = 0` plane is identically one, the `k = -1` plane
//! identically zero, and everything else outside the stored pyramid is zero.
//! With that padding the entries satisfy the octahedron recurrence
//! `W_ij^k W_(i+1)(j+1)^k = W_i(j+1)^k W_(i+1)j^k + W_ij^(k+1) W_(i+1)(j+1)^(k-1)`
//! everywhere (Desnanot-Jacobi inside the pyramid, vanishing terms outside),
//! and quotients of vertically adjacent entries toggle like labelings do.
//!
//! Minors are computed independently by fraction-free elimination, never by
//! condensation: interior minors of the matrices arising here legitimately
//! vanish, so the recurrence is a verified invariant, not an algorithm.

use alloc::vec::Vec;

use crate::matrix::rational_determinant;
use crate::rational::{parallel_sum, Rational};

/// All solid minors of an `n x n` rational matrix, zero-padded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorArray {
    n: usize,
    /// `planes[k-1][i-1][j-1]` holds the k-minor at `(i, j)`,
    /// for `1 <= i, j <= n - k + 1`.
    planes: Vec<Vec<Vec<Rational>>>,
}

impl MinorArray {
    /// Computes every solid minor of the matrix by Bareiss elimination.
    pub fn from_matrix(matrix: &[Vec<Rational>]) -> MinorArray {
        let n = matrix.len();
        debug_assert!(matrix.iter().all(|row| row.len() == n));
        let mut planes = Vec::with_capacity(n);
        for k in 1..=n {
            let side = n - k + 1;
            let mut plane = Vec::with_capacity(side);
            for i in 1..=side {
                let mut row = Vec::with_capacity(side);
                for j in 1..=side {
                    let sub: Vec<Vec<Rational>> = (0..k)
                        .map(|di| matrix[i - 1 + di][j - 1..j - 1 + k].to_vec())
                        .collect();
                    row.push(rational_determinant(&sub));
                }
                plane.push(row);
            }
            planes.push(plane);
        }
        MinorArray { n, planes }
    }

    /// Side length of the underlying matrix.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The entry at `(i, j, k)` under the extended conventions.
    pub fn get(&self, i: i64, j: i64, k: i64) -> Rational {
        match k {
            0 => Rational::one(),
            -1 => Rational::zero(),
            k if k < -1 || k > self.n as i64 => Rational::zero(),
            k => {
                let side = self.n as i64 - k + 1;
                if (1..=side).contains(&i) && (1..=side).contains(&j) {
                    self.planes[(k - 1) as usize][(i - 1) as usize][(j - 1) as usize].clone()
                } else {
                    Rational::zero()
                }
            }
        }
    }

    /// Entries of the stored pyramid as `(i, j, k, value)`.
    pub fn stored_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.planes.iter().enumerate().flat_map(|(k0, plane)| {
            plane.iter().enumerate().flat_map(move |(i0, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j0, v)| (i0 + 1, j0 + 1, k0 + 1, v))
            })
        })
    }

    /// A copy with one stored entry shifted by `delta`, for sensitivity
    /// tests of the recurrence checks.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Rational) -> MinorArray {
        let mut out = self.clone();
        let entry = &mut out.planes[k - 1][i - 1][j - 1];
        *entry = &*entry + delta;
        out
    }

    /// Verifies the octahedron recurrence at every lattice position whose
    /// six entries lie in the extended array, reporting each violation.
    pub fn octahedron_violations(&self) -> Vec<OctahedronViolation> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for k in 0..=n {
            for i in 0..=n + 1 {
                for j in 0..=n + 1 {
                    let lhs = &self.get(i, j, k) * &self.get(i + 1, j + 1, k);
                    let rhs = &(&self.get(i, j + 1, k) * &self.get(i + 1, j, k))
                        + &(&self.get(i, j, k + 1) * &self.get(i + 1, j + 1, k - 1));
                    if lhs != rhs {
                        out.push(OctahedronViolation { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        out
    }

    /// The quotient `W^(j-1)_(k+2, i+k+1) / W^(j)_(k+1, i+k+1)`, or `None`
    /// when the denominator vanishes.
    pub fn toggle_quotient(&self, i: i64, j: i64, k: i64) -> Option<Rational> {
        let denom = self.get(k + 1, i + k + 1, j);
        if denom.is_zero() {
            return None;
        }
        Some(&self.get(k + 2, i + k + 1, j - 1) / &denom)
    }

    /// Verifies that the quotients of vertically adjacent entries satisfy
    /// the toggle relation
    /// `z_ij^k = (z_i(j-1)^k + z_(i-1)j^k) (z_(i+1)j^(k-1) || z_i(j+1)^(k-1)) / z_ij^(k-1)`
    /// wherever all participating quotients are defined, dropping an
    /// undefined term from the parallel combine.
    pub fn array_toggle_violations(&self) -> Vec<ArrayToggleViolation> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for k in 1..=n {
            for i in 0..=n {
                for j in 0..=n {
                    let (Some(lhs), Some(left), Some(below), Some(prev)) = (
                        self.toggle_quotient(i, j, k),
                        self.toggle_quotient(i, j - 1, k),
                        self.toggle_quotient(i - 1, j, k),
                        self.toggle_quotient(i, j, k - 1),
                    ) else {
                        continue;
                    };
                    if prev.is_zero() {
                        continue;
                    }
                    let upper = match (
                        self.toggle_quotient(i + 1, j, k - 1),
                        self.toggle_quotient(i, j + 1, k - 1),
                    ) {
                        (Some(a), Some(b)) => {
                            if a.is_positive() && b.is_positive() {
                                parallel_sum(&a, &b).expect("positive parallel sum")
                            } else if (&a + &b).is_zero() {
                                continue;
                            } else {
                                &(&a * &b) / &(&a + &b)
                            }
                        }
                        (Some(a), None) => a,
                        (None, Some(b)) => b,
                        (None, None) => continue,
                    };
                    let rhs = &(&(&left + &below) * &upper) / &prev;
                    if lhs != rhs {
                        out.push(ArrayToggleViolation { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        out
    }
}

/// A failed instance of the octahedron recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctahedronViolation {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// A failed instance of the quotient toggle relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayToggleViolation {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_all;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn small_array() -> MinorArray {
        // Path matrix of the primes example, frozen from independent
        // computations; the graph-derived version is tested in `paths`.
        let rows = [
            parse_all(&["1", "1/2", "1/6", "0", "0"]).unwrap(),
            parse_all(&["0", "1", "8/15", "1/35", "0"]).unwrap(),
            parse_all(&["0", "0", "1", "18/77", "1/143"]).unwrap(),
            parse_all(&["0", "0", "0", "1", "1/13"]).unwrap(),
            parse_all(&["0", "0", "0", "0", "1"]).unwrap(),
        ];
        MinorArray::from_matrix(&rows)
    }

    #[test]
    fn frozen_minor_values() {
        let w = small_array();
        assert_eq!(w.get(1, 3, 2), rat("1/210"));
        assert_eq!(w.get(2, 4, 2), rat("1/5005"));
        assert_eq!(w.get(2, 3, 2), rat("37/385"));
        assert_eq!(w.get(1, 3, 3), rat("1/30030"));
        assert_eq!(w.get(3, 3, 1), Rational::one());
        assert_eq!(w.get(1, 2, 4), Rational::zero());
        // Extended conventions.
        assert_eq!(w.get(-3, 100, 0), Rational::one());
        assert_eq!(w.get(2, 2, -1), Rational::zero());
        assert_eq!(w.get(6, 1, 1), Rational::zero());
        assert_eq!(w.get(1, 1, 6), Rational::zero());
    }

    #[test]
    fn octahedron_holds_and_perturbation_breaks_it() {
        let w = small_array();
        assert!(w.octahedron_violations().is_empty());
        let broken = w.perturbed(2, 3, 1, &Rational::one());
        assert!(!broken.octahedron_violations().is_empty());
    }

    #[test]
    fn octahedron_on_degenerate_rectangle() {
        // 1x1 rectangle: 2x2 path matrix.
        let rows = [
            parse_all(&["1", "1/5"]).unwrap(),
            parse_all(&["0", "1"]).unwrap(),
        ];
        let w = MinorArray::from_matrix(&rows);
        assert!(w.octahedron_violations().is_empty());
        assert!(w.array_toggle_violations().is_empty());
    }

    #[test]
    fn array_toggle_holds_on_primes_array() {
        let w = small_array();
        assert!(w.array_toggle_violations().is_empty());
        let broken = w.perturbed(2, 3, 2, &rat("1/7"));
        assert!(!broken.array_toggle_violations().is_empty());
    }

    #[test]
    fn desnanot_jacobi_on_seeded_integer_matrices() {
        // The octahedron check over a full minor array is exactly the
        // Desnanot-Jacobi identity, padding included.
        let mut state = 0xfeedu64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        for n in 1..=6 {
            for _ in 0..10 {
                let rows: Vec<Vec<Rational>> = (0..n)
                    .map(|_| (0..n).map(|_| Rational::from_int(next())).collect())
                    .collect();
                let w = MinorArray::from_matrix(&rows);
                assert!(w.octahedron_violations().is_empty(), "n = {n}");
            }
        }
    }
}
