//! Closed-form evaluation of iterated birational rowmotion.
//!
//! For a positive labeling `x` with `y = transfer_inverse(x)`, every entry
//! of every power of rowmotion applied to `y` is a quotient of two solid
//! minors of the path matrix, or the reciprocal of such a quotient at the
//! antipodal cell. A [`PowerTable`] computes the minor array once and
//! answers arbitrary signed exponents from it:
//!
//! * exponents in `[i+j-r-s, 0]` read the quotient directly under the cell,
//! * exponents in `(0, i+j)` reflect to the antipodal cell and invert,
//! * everything else reduces modulo `r + s` first.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::Birational;
use crate::dynamics::{self, Labeling};
use crate::error::{Error, Result};
use crate::minors::MinorArray;
use crate::paths::GrGraph;
use crate::poset::{Cell, Rect};
use crate::rational::Rational;

/// Shared minor array answering all power queries for one labeling.
#[derive(Debug, Clone)]
pub struct PowerTable {
    rect: Rect,
    minors: MinorArray,
}

impl PowerTable {
    /// Builds the table for a positive labeling.
    pub fn new(x: &Labeling) -> Result<PowerTable> {
        let g = GrGraph::new(x)?;
        Ok(PowerTable {
            rect: x.rect(),
            minors: g.minor_array(),
        })
    }

    /// Assembles a table from a prebuilt minor array. The array must belong
    /// to the labeling the queries are about; no consistency check is done.
    pub fn from_parts(rect: Rect, minors: MinorArray) -> PowerTable {
        PowerTable { rect, minors }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn minors(&self) -> &MinorArray {
        &self.minors
    }

    fn period(&self) -> i64 {
        (self.rect.rows() + self.rect.cols()) as i64
    }

    /// The direct route: for `i+j-r-s <= exponent <= 0` the entry is the
    /// quotient of the two minors under the cell.
    pub fn power_direct(&self, cell: Cell, exponent: i64) -> Result<Rational> {
        self.rect.check_cell(cell)?;
        let ij = (cell.i + cell.j) as i64;
        if exponent > 0 || exponent < ij - self.period() {
            return Err(Error::ExponentOutOfWindow(format!(
                "exponent {exponent} outside [{}, 0] at ({}, {}); use `power`",
                ij - self.period(),
                cell.i,
                cell.j
            )));
        }
        let m = -exponent;
        let numer = self.minors.get(m + 2, cell.i as i64 + m + 1, cell.j as i64 - 1);
        let denom = self.minors.get(m + 1, cell.i as i64 + m + 1, cell.j as i64);
        if denom.is_zero() {
            return Err(Error::DivisionByZero(format!(
                "minor ({}, {}, {})",
                m + 1,
                cell.i as i64 + m + 1,
                cell.j
            )));
        }
        Ok(&numer / &denom)
    }

    /// The reflected route: for `0 < exponent < i+j` the entry is the
    /// reciprocal of the antipodal entry at exponent `exponent - i - j + 1`.
    pub fn power_reflected(&self, cell: Cell, exponent: i64) -> Result<Rational> {
        self.rect.check_cell(cell)?;
        let ij = (cell.i + cell.j) as i64;
        if exponent <= 0 || exponent >= ij {
            return Err(Error::ExponentOutOfWindow(format!(
                "exponent {exponent} outside (0, {ij}) at ({}, {}); use `power`",
                cell.i, cell.j
            )));
        }
        let antipode = Cell::new(
            self.rect.rows() + 1 - cell.i,
            self.rect.cols() + 1 - cell.j,
        );
        let reflected = self.power_direct(antipode, exponent - ij + 1)?;
        reflected
            .recip()
            .map_err(|_| Error::DivisionByZero("reflected entry is zero".into()))
    }

    /// The entry of `rho^exponent(transfer_inverse(x))` at `cell`, for any
    /// integer exponent. Reduces modulo `r + s` into the window
    /// `[i+j-r-s, i+j-1]`, preferring the direct route on the boundary.
    pub fn power(&self, cell: Cell, exponent: i64) -> Result<Rational> {
        self.rect.check_cell(cell)?;
        let ij = (cell.i + cell.j) as i64;
        let lo = ij - self.period();
        let reduced = lo + (exponent - lo).rem_euclid(self.period());
        if reduced <= 0 {
            self.power_direct(cell, reduced)
        } else {
            self.power_reflected(cell, reduced)
        }
    }

    /// The whole labeling `rho^exponent(transfer_inverse(x))`.
    pub fn power_labeling(&self, exponent: i64) -> Result<Labeling> {
        let values: Result<Vec<Rational>> = self
            .rect
            .cells()
            .map(|c| self.power(c, exponent))
            .collect();
        Labeling::from_row_major(self.rect, values?)
    }
}

/// A mismatch between the shifted minor array and the original one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftViolation {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub shifted: Rational,
    pub original: Rational,
}

/// Checks that one inverse rowmotion step shifts the whole minor array one
/// step down the diagonal: the array of
/// `transfer . rowmotion_inverse . transfer_inverse (x)` at `(i, j, k)`
/// equals the array of `x` at `(i+1, j+1, k)` for `1 <= i, j <= r+s-k`.
pub fn array_shift_violations(x: &Labeling) -> Result<Vec<ShiftViolation>> {
    let alg = Birational;
    let w = GrGraph::new(x)?.minor_array();
    let shifted_labeling = dynamics::transfer(
        &dynamics::rowmotion_inverse(&dynamics::transfer_inverse(x, &alg)?, &alg)?,
        &alg,
    )?;
    let w_shifted = GrGraph::new(&shifted_labeling)?.minor_array();
    let n = (x.rect().rows() + x.rect().cols()) as i64;
    let mut out = Vec::new();
    for k in 1..n {
        for i in 1..=n - k {
            for j in 1..=n - k {
                let shifted = w_shifted.get(i, j, k);
                let original = w.get(i + 1, j + 1, k);
                if shifted != original {
                    out.push(ShiftViolation {
                        i,
                        j,
                        k,
                        shifted,
                        original,
                    });
                }
            }
        }
    }
    Ok(out)
}
