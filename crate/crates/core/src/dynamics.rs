//! Toggle dynamics on labeled rectangles, generic over a [`ToggleAlgebra`].
//!
//! A [`Labeling`] assigns a carrier value to every cell. The toggle at `p`
//! replaces the value there by
//! `(combine-above over upper covers) (x) (combine-below over lower covers)
//! (/) old`, with the algebra's units standing in for empty combines.
//! Rowmotion is the toggle sweep from top to bottom along any linear
//! extension; its inverse sweeps bottom to top. Partial rowmotion restricts
//! the sweep to an interval.
//!
//! The transfer map and its dual are the other two basic moves:
//! `transfer(x)_p = x_p (/) combine-below(lower covers)` and the dual uses
//! upper covers. Their inverses are computed by a single sweep (bottom-up
//! resp. top-down), not by chain enumeration.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Birational, ToggleAlgebra};
use crate::error::{Error, Result};
use crate::poset::{Cell, Interval, Rect};
use crate::rational::Rational;

/// An assignment of algebra values to every cell of a rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    rect: Rect,
    values: Vec<Rational>,
}

impl Labeling {
    /// Builds a labeling from row-major values.
    pub fn from_row_major(rect: Rect, values: Vec<Rational>) -> Result<Self> {
        if values.len() != rect.cell_count() {
            return Err(Error::IndexOutOfRange(format!(
                "expected {} values, got {}",
                rect.cell_count(),
                values.len()
            )));
        }
        Ok(Labeling { rect, values })
    }

    /// The constant labeling.
    pub fn constant(rect: Rect, value: Rational) -> Self {
        Labeling {
            rect,
            values: alloc::vec![value; rect.cell_count()],
        }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn get(&self, c: Cell) -> &Rational {
        &self.values[self.rect.index(c)]
    }

    pub fn set(&mut self, c: Cell, value: Rational) {
        let idx = self.rect.index(c);
        self.values[idx] = value;
    }

    /// Checks every value against the algebra's carrier.
    pub fn check_carrier<A: ToggleAlgebra + ?Sized>(&self, alg: &A) -> Result<()> {
        for c in self.rect.cells() {
            alg.check_value(self.get(c)).map_err(|e| {
                Error::NonPositive(format!("cell ({}, {}): {e}", c.i, c.j))
            })?;
        }
        Ok(())
    }

    /// The transposed labeling on the transposed rectangle.
    pub fn transpose(&self) -> Labeling {
        let rect_t = self.rect.transpose();
        let mut values = Vec::with_capacity(self.values.len());
        for c in rect_t.cells() {
            values.push(self.get(Cell::new(c.j, c.i)).clone());
        }
        Labeling {
            rect: rect_t,
            values,
        }
    }

    /// Product of all labels, `w_R` in the birational algebra.
    pub fn product_of_all(&self) -> Rational {
        crate::rational::product(self.values.iter())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, &Rational)> {
        self.rect.cells().map(move |c| (c, self.get(c)))
    }
}

fn toggled_value<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, p: Cell, alg: &A) -> Rational {
    let rect = labeling.rect();
    let above = alg.fold_above(rect.upper_covers(p).map(|q| labeling.get(q)));
    let below = alg.fold_below(rect.lower_covers(p).map(|q| labeling.get(q)));
    alg.quotient(&alg.product(&above, &below), labeling.get(p))
}

/// The toggle at `p`: only that coordinate changes. Involutive.
pub fn toggle<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, p: Cell, alg: &A) -> Result<Labeling> {
    labeling.rect().check_cell(p)?;
    labeling.check_carrier(alg)?;
    let mut next = labeling.clone();
    next.set(p, toggled_value(labeling, p, alg));
    Ok(next)
}

fn sweep<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, order: &[Cell], alg: &A) -> Labeling {
    let mut current = labeling.clone();
    for &p in order {
        let value = toggled_value(&current, p, alg);
        current.set(p, value);
    }
    current
}

/// Rowmotion: toggles from top to bottom along the canonical extension.
pub fn rowmotion<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, alg: &A) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    Ok(sweep(
        labeling,
        &Interval::full(labeling.rect()).extension_top_down(),
        alg,
    ))
}

/// Inverse rowmotion: toggles from bottom to top.
pub fn rowmotion_inverse<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    Ok(sweep(
        labeling,
        &Interval::full(labeling.rect()).extension_bottom_up(),
        alg,
    ))
}

/// Rowmotion along an arbitrary toggle order, used to test that the result
/// does not depend on the choice of linear extension.
pub fn rowmotion_with_order<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    order: &[Cell],
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    Ok(sweep(labeling, order, alg))
}

/// Partial rowmotion: toggles exactly the cells of `interval`, top to
/// bottom; coordinates outside it are untouched.
pub fn partial_rowmotion<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    interval: Interval,
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    Ok(sweep(labeling, &interval.extension_top_down(), alg))
}

/// Inverse partial rowmotion: the bottom-to-top sweep over `interval`.
pub fn partial_rowmotion_inverse<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    interval: Interval,
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    Ok(sweep(labeling, &interval.extension_bottom_up(), alg))
}

/// The transfer map: `x_p (/) (combine-below over lower covers of x)`.
pub fn transfer<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, alg: &A) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    let rect = labeling.rect();
    let mut out = labeling.clone();
    for p in rect.cells() {
        let below = alg.fold_below(rect.lower_covers(p).map(|q| labeling.get(q)));
        out.set(p, alg.quotient(labeling.get(p), &below));
    }
    Ok(out)
}

/// Inverse transfer map, computed bottom-up:
/// `y_p = x_p (x) (combine-below over lower covers of y)`.
///
/// In the birational algebra `y_{ij}` is the total weight of the maximal
/// chains of `[i] x [j]`.
pub fn transfer_inverse<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    let rect = labeling.rect();
    let mut out = labeling.clone();
    for p in rect.linear_extension() {
        let below = alg.fold_below(rect.lower_covers(p).map(|q| out.get(q)));
        out.set(p, alg.product(labeling.get(p), &below));
    }
    Ok(out)
}

/// The dual transfer map: `x_p (/) (combine-below over upper covers of x)`.
pub fn dual_transfer<A: ToggleAlgebra + ?Sized>(labeling: &Labeling, alg: &A) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    let rect = labeling.rect();
    let mut out = labeling.clone();
    for p in rect.cells() {
        let above = alg.fold_below(rect.upper_covers(p).map(|q| labeling.get(q)));
        out.set(p, alg.quotient(labeling.get(p), &above));
    }
    Ok(out)
}

/// Inverse dual transfer map, computed top-down:
/// `z_p = x_p (x) (combine-below over upper covers of z)`.
///
/// In the birational algebra `z_{ij}` is the total weight of the maximal
/// chains of `[i, r] x [j, s]`.
pub fn dual_transfer_inverse<A: ToggleAlgebra + ?Sized>(
    labeling: &Labeling,
    alg: &A,
) -> Result<Labeling> {
    labeling.check_carrier(alg)?;
    let rect = labeling.rect();
    let mut out = labeling.clone();
    let mut order = rect.linear_extension();
    order.reverse();
    for p in order {
        let above = alg.fold_below(rect.upper_covers(p).map(|q| out.get(q)));
        out.set(p, alg.product(labeling.get(p), &above));
    }
    Ok(out)
}

/// Lazily memoized powers of birational rowmotion applied to a base
/// labeling.
///
/// Exponents are reduced modulo `r + s` only after [`OrbitTable::verify_period`]
/// has confirmed the period for this base; until then every power is
/// computed by iterating toggles.
pub struct OrbitTable {
    base: Labeling,
    powers: BTreeMap<i64, Labeling>,
    period_verified: bool,
}

impl OrbitTable {
    pub fn new(base: Labeling) -> Result<Self> {
        base.check_carrier(&Birational)?;
        let mut powers = BTreeMap::new();
        powers.insert(0, base.clone());
        Ok(OrbitTable {
            base,
            powers,
            period_verified: false,
        })
    }

    pub fn base(&self) -> &Labeling {
        &self.base
    }

    fn period(&self) -> i64 {
        (self.base.rect().rows() + self.base.rect().cols()) as i64
    }

    /// Recomputes one full period of rowmotion and checks it returns to the
    /// base; afterwards exponents are normalized modulo `r + s`.
    pub fn verify_period(&mut self) -> Result<bool> {
        let mut current = self.base.clone();
        for _ in 0..self.period() {
            current = rowmotion(&current, &Birational)?;
        }
        self.period_verified = current == self.base;
        Ok(self.period_verified)
    }

    pub fn period_verified(&self) -> bool {
        self.period_verified
    }

    /// The labeling `rho^k(base)`, memoized.
    pub fn power(&mut self, k: i64) -> Result<Labeling> {
        let key = if self.period_verified {
            k.rem_euclid(self.period())
        } else {
            k
        };
        if let Some(found) = self.powers.get(&key) {
            return Ok(found.clone());
        }
        // Walk from the nearest cached exponent on the right side of zero.
        let mut current = self.base.clone();
        let mut at = 0i64;
        while at < key {
            current = rowmotion(&current, &Birational)?;
            at += 1;
            self.powers.entry(at).or_insert_with(|| current.clone());
        }
        while at > key {
            current = rowmotion_inverse(&current, &Birational)?;
            at -= 1;
            self.powers.entry(at).or_insert_with(|| current.clone());
        }
        Ok(current)
    }
}
