//! A toggle-based RSK map on labeled rectangles, its Greene-style
//! characterization, inversion, and reconstruction from chain sums.
//!
//! The map composes the inverse transfer map with inverse partial rowmotion
//! on the shrinking intervals `[r-1] x [s-1], [r-2] x [s-2], ...`; it is
//! generic over the toggle algebra, so the tropical instance gives the
//! piecewise-linear map from the chain polytope to the order polytope.
//!
//! What pins the map down is the border identity: for a border cell
//! `(i, j)` and `1 <= k <= min(i, j)`, the product of the `k` image entries
//! down the diagonal from `(i, j)` equals the total weight `w^(k)` of the
//! `k`-path families of `[i] x [j]`; at the corner the full-diagonal
//! product is the product of all labels. Those weights in turn are
//! determinants in single-band chain sums, which is why the border chain
//! sums determine the labeling completely.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Birational, ToggleAlgebra, Tropical};
use crate::dynamics::{self, Labeling};
use crate::error::{Error, Result};
use crate::matrix::rational_determinant;
use crate::minors::MinorArray;
use crate::paths::{enumerate_interval_collections, w_interval_from, GrGraph};
use crate::poset::{Cell, Interval, Rect};
use crate::rational::Rational;

/// Number of interval stages after the transfer step.
fn stage_count(rect: Rect) -> usize {
    rect.rows().min(rect.cols()) - 1
}

/// The RSK image of a labeling: inverse transfer, then inverse partial
/// rowmotion over `[r-d] x [s-d]` for `d = 1 ..= min(r,s)-1`.
pub fn birational_rsk<A: ToggleAlgebra + ?Sized>(x: &Labeling, alg: &A) -> Result<Labeling> {
    let rect = x.rect();
    let mut image = dynamics::transfer_inverse(x, alg)?;
    for d in 1..=stage_count(rect) {
        let stage = Interval::new(rect, 1, rect.rows() - d, 1, rect.cols() - d)?;
        image = dynamics::partial_rowmotion_inverse(&image, stage, alg)?;
    }
    Ok(image)
}

/// Inverse of [`birational_rsk`]: partial rowmotion over the growing
/// intervals, then the transfer map.
pub fn rsk_inverse<A: ToggleAlgebra + ?Sized>(image: &Labeling, alg: &A) -> Result<Labeling> {
    let rect = image.rect();
    let mut current = image.clone();
    for d in (1..=stage_count(rect)).rev() {
        let stage = Interval::new(rect, 1, rect.rows() - d, 1, rect.cols() - d)?;
        current = dynamics::partial_rowmotion(&current, stage, alg)?;
    }
    dynamics::transfer(&current, alg)
}

/// The same map computed cell by cell: assign
/// `y_p = x_p (x) combine-below(lower covers of y)` along a linear
/// extension, then toggle every element strictly below `p` in its file.
pub fn rsk_by_file_toggles<A: ToggleAlgebra + ?Sized>(x: &Labeling, alg: &A) -> Result<Labeling> {
    rsk_by_file_toggles_with_order(x, &x.rect().linear_extension(), alg)
}

/// File-toggle scan along a caller-chosen linear extension; the result does
/// not depend on the choice.
pub fn rsk_by_file_toggles_with_order<A: ToggleAlgebra + ?Sized>(
    x: &Labeling,
    order: &[Cell],
    alg: &A,
) -> Result<Labeling> {
    x.check_carrier(alg)?;
    let rect = x.rect();
    if order.len() != rect.cell_count() {
        return Err(Error::IndexOutOfRange(
            "toggle order must list every cell once".into(),
        ));
    }
    let mut assigned: Vec<Option<Rational>> = alloc::vec![None; rect.cell_count()];
    let value = |assigned: &[Option<Rational>], c: Cell| {
        assigned[rect.index(c)].clone().expect("assigned value")
    };
    for &p in order {
        let below = alg.fold_below(
            rect.lower_covers(p)
                .map(|q| assigned[rect.index(q)].as_ref().expect("extension order"))
                .collect::<Vec<_>>()
                .into_iter(),
        );
        assigned[rect.index(p)] = Some(alg.product(x.get(p), &below));
        // Toggle the cells strictly below p in the same file; none of them
        // are adjacent to each other, so the order does not matter.
        let mut q = p;
        while q.i > 1 && q.j > 1 {
            q = Cell::new(q.i - 1, q.j - 1);
            let above = alg.fold_above(
                rect.upper_covers(q)
                    .map(|u| value(&assigned, u))
                    .collect::<Vec<_>>()
                    .iter(),
            );
            let below = alg.fold_below(
                rect.lower_covers(q)
                    .map(|u| value(&assigned, u))
                    .collect::<Vec<_>>()
                    .iter(),
            );
            let toggled = alg.quotient(&alg.product(&above, &below), &value(&assigned, q));
            assigned[rect.index(q)] = Some(toggled);
        }
    }
    let values = assigned
        .into_iter()
        .map(|v| v.expect("every cell assigned"))
        .collect();
    Labeling::from_row_major(rect, values)
}

/// A failed border identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreeneViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub product: Rational,
    pub expected: Rational,
}

fn border_cells(rect: Rect) -> Vec<Cell> {
    rect.cells()
        .filter(|c| c.i == rect.rows() || c.j == rect.cols())
        .collect()
}

/// Checks the border identity for a positive labeling, with the family
/// weights read from a caller-supplied minor array (so a deliberately
/// corrupted array surfaces as violations).
pub fn greene_violations_with(x: &Labeling, minors: &MinorArray) -> Result<Vec<GreeneViolation>> {
    let rect = x.rect();
    let image = birational_rsk(x, &Birational)?;
    let mut out = Vec::new();
    for border in border_cells(rect) {
        let (i, j) = (border.i, border.j);
        let diag_len = i.min(j);
        let mut product = Rational::one();
        for k in 1..=diag_len {
            product = &product * image.get(Cell::new(i - k + 1, j - k + 1));
            let expected = w_interval_from(
                minors,
                rect,
                Interval::lower_left(rect, i, j)?,
                k,
            )?;
            if product != expected {
                out.push(GreeneViolation {
                    i,
                    j,
                    k,
                    product: product.clone(),
                    expected,
                });
            }
        }
        // At the corner the diagonal exhausts the rectangle and the next
        // family weight degenerates to the product of all labels.
        if i == rect.rows() && j == rect.cols() {
            let expected = x.product_of_all();
            if product != expected {
                out.push(GreeneViolation {
                    i,
                    j,
                    k: diag_len + 1,
                    product,
                    expected,
                });
            }
        }
    }
    Ok(out)
}

/// Checks the border identity against the labeling's own minor array.
pub fn greene_violations(x: &Labeling) -> Result<Vec<GreeneViolation>> {
    let minors = GrGraph::new(x)?.minor_array();
    greene_violations_with(x, &minors)
}

/// Tropical counterpart: diagonal sums of the tropical image against the
/// maximum family weight from the enumeration oracle.
pub fn tropical_greene_violations(x: &Labeling, alg: &Tropical) -> Result<Vec<GreeneViolation>> {
    let rect = x.rect();
    let image = birational_rsk(x, alg)?;
    let mut out = Vec::new();
    for border in border_cells(rect) {
        let (i, j) = (border.i, border.j);
        let diag_len = i.min(j);
        let mut sum = Rational::zero();
        for k in 1..=diag_len {
            sum = &sum + image.get(Cell::new(i - k + 1, j - k + 1));
            let interval = Interval::lower_left(rect, i, j)?;
            let families = enumerate_interval_collections(interval, k)?;
            let expected = families
                .iter()
                .map(|family| {
                    family
                        .paths
                        .iter()
                        .flatten()
                        .fold(Rational::zero(), |acc, &c| &acc + x.get(c))
                })
                .reduce(Rational::max)
                .ok_or_else(|| Error::MalformedCollection("no families".into()))?;
            if sum != expected {
                out.push(GreeneViolation {
                    i,
                    j,
                    k,
                    product: sum.clone(),
                    expected,
                });
            }
        }
        if i == rect.rows() && j == rect.cols() {
            let expected = rect
                .cells()
                .fold(Rational::zero(), |acc, c| &acc + x.get(c));
            if sum != expected {
                out.push(GreeneViolation {
                    i,
                    j,
                    k: diag_len + 1,
                    product: sum,
                    expected,
                });
            }
        }
    }
    Ok(out)
}

/// The single-band chain sums that determine a labeling: `rows[(u, v)]` is
/// the maximal-chain weight of `[u, v] x [s]`, `cols[(u, v)]` that of
/// `[r] x [u, v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSumProfile {
    pub rect: Rect,
    pub rows: BTreeMap<(usize, usize), Rational>,
    pub cols: BTreeMap<(usize, usize), Rational>,
}

/// Computes the profile of a positive labeling.
pub fn chain_sum_profile(x: &Labeling) -> Result<ChainSumProfile> {
    let rect = x.rect();
    let minors = GrGraph::new(x)?.minor_array();
    let mut rows = BTreeMap::new();
    for u in 1..=rect.rows() {
        for v in u..=rect.rows() {
            let band = Interval::new(rect, u, v, 1, rect.cols())?;
            rows.insert((u, v), w_interval_from(&minors, rect, band, 1)?);
        }
    }
    let mut cols = BTreeMap::new();
    for u in 1..=rect.cols() {
        for v in u..=rect.cols() {
            let band = Interval::new(rect, 1, rect.rows(), u, v)?;
            cols.insert((u, v), w_interval_from(&minors, rect, band, 1)?);
        }
    }
    Ok(ChainSumProfile { rect, rows, cols })
}

impl ChainSumProfile {
    fn row_band(&self, u: usize, v: usize) -> Result<Rational> {
        self.rows
            .get(&(u, v))
            .cloned()
            .ok_or_else(|| Error::InconsistentProfile(format!("missing row band ({u}, {v})")))
    }

    fn col_band(&self, u: usize, v: usize) -> Result<Rational> {
        self.cols
            .get(&(u, v))
            .cloned()
            .ok_or_else(|| Error::InconsistentProfile(format!("missing column band ({u}, {v})")))
    }

    /// `w^(k)` of the sub-rectangle `[i] x [j]` where `(i, j)` lies on the
    /// border, as a `k x k` determinant in band sums: entry `(a, b)` is the
    /// single-path sum over the window `[a, j-k+b]`.
    fn family_weight(&self, i: usize, j: usize, k: usize) -> Result<Rational> {
        if k == 0 {
            return Ok(Rational::one());
        }
        let band = |a: usize, b: usize| -> Result<Rational> {
            if a > b {
                return Ok(Rational::zero());
            }
            if j == self.rect.cols() && i < self.rect.rows() {
                // Tall border: path sums run over row windows.
                self.row_band(a, b)
            } else {
                self.col_band(a, b)
            }
        };
        let span = if j == self.rect.cols() && i < self.rect.rows() {
            i
        } else {
            j
        };
        let mut matrix = Vec::with_capacity(k);
        for a in 1..=k {
            let mut row = Vec::with_capacity(k);
            for b in 1..=k {
                row.push(band(a, span - k + b)?);
            }
            matrix.push(row);
        }
        Ok(rational_determinant(&matrix))
    }
}

/// Recovers the unique positive labeling with the given border chain sums:
/// every RSK entry is a quotient of band determinants, and inverting RSK
/// returns the labeling. The profile is re-derived from the result as a
/// consistency check.
pub fn reconstruct_from_chain_sums(profile: &ChainSumProfile, rect: Rect) -> Result<Labeling> {
    if profile.rect != rect {
        return Err(Error::InconsistentProfile(format!(
            "profile is for [{}] x [{}]",
            profile.rect.rows(),
            profile.rect.cols()
        )));
    }
    let mut image = Labeling::constant(rect, Rational::one());
    for c in rect.cells() {
        let d = (rect.rows() - c.i).min(rect.cols() - c.j);
        let (i, j) = (c.i + d, c.j + d);
        let numer = profile.family_weight(i, j, d + 1)?;
        let denom = profile.family_weight(i, j, d)?;
        if denom.is_zero() || numer.is_zero() {
            return Err(Error::InconsistentProfile(format!(
                "vanishing band determinant at border ({i}, {j})"
            )));
        }
        let entry = &numer / &denom;
        if !entry.is_positive() {
            return Err(Error::InconsistentProfile(format!(
                "recovered entry at ({}, {}) is not positive",
                c.i, c.j
            )));
        }
        image.set(c, entry);
    }
    let x = rsk_inverse(&image, &Birational)?;
    x.check_carrier(&Birational)
        .map_err(|e| Error::InconsistentProfile(format!("recovered labeling invalid: {e}")))?;
    let back = chain_sum_profile(&x)?;
    if &back != profile {
        return Err(Error::InconsistentProfile(
            "profile does not arise from a positive labeling".into(),
        ));
    }
    Ok(x)
}

/// A chain-sum identity that failed between a labeling and its inverse
/// rowmotion shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainShiftViolation {
    pub detail: String,
}

/// Checks that one conjugated inverse rowmotion step shifts every band
/// family weight one step: `w^(k)` of `[r] x [u, v]` on `x` equals `w^(k)`
/// of `[r] x [u-1, v-1]` on the shifted labeling, and the reflected row
/// version likewise.
pub fn chain_shift_violations(x: &Labeling) -> Result<Vec<ChainShiftViolation>> {
    let alg = Birational;
    let shifted = dynamics::transfer(
        &dynamics::rowmotion_inverse(&dynamics::transfer_inverse(x, &alg)?, &alg)?,
        &alg,
    )?;
    let mut out = Vec::new();
    column_shift_violations(x, &shifted, &mut out)?;
    column_shift_violations(&x.transpose(), &shifted.transpose(), &mut out)?;
    Ok(out)
}

fn column_shift_violations(
    x: &Labeling,
    shifted: &Labeling,
    out: &mut Vec<ChainShiftViolation>,
) -> Result<()> {
    let rect = x.rect();
    let w_x = GrGraph::new(x)?.minor_array();
    let w_shifted = GrGraph::new(shifted)?.minor_array();
    for u in 2..=rect.cols() {
        for v in u..=rect.cols() {
            for k in 0..=v - u + 1 {
                let from = Interval::new(rect, 1, rect.rows(), u, v)?;
                let to = Interval::new(rect, 1, rect.rows(), u - 1, v - 1)?;
                let lhs = w_interval_from(&w_x, rect, from, k)?;
                let rhs = w_interval_from(&w_shifted, rect, to, k)?;
                if lhs != rhs {
                    out.push(ChainShiftViolation {
                        detail: format!(
                            "band [{u}, {v}] at k = {k} on [{}] x [{}]: {lhs} vs {rhs}",
                            rect.rows(),
                            rect.cols()
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Recomputes the off-diagonal-file RSK entries of the shifted labeling
/// from the chain sums of the original one and compares them with the
/// direct computation; files with `j - i = s - r` are excluded because
/// their band windows would leave the rectangle.
pub fn chain_shift_rsk_violations(x: &Labeling) -> Result<Vec<ChainShiftViolation>> {
    let alg = Birational;
    let shifted = dynamics::transfer(
        &dynamics::rowmotion_inverse(&dynamics::transfer_inverse(x, &alg)?, &alg)?,
        &alg,
    )?;
    let image = birational_rsk(&shifted, &Birational)?;
    let mut out = Vec::new();
    lower_file_violations(x, &image, &mut out)?;
    lower_file_violations(&x.transpose(), &image.transpose(), &mut out)?;
    Ok(out)
}

/// Handles cells with `j - i < s - r`; callers pass the transpose for the
/// other side.
fn lower_file_violations(
    x: &Labeling,
    shifted_image: &Labeling,
    out: &mut Vec<ChainShiftViolation>,
) -> Result<()> {
    let rect = x.rect();
    let (r, s) = (rect.rows() as i64, rect.cols() as i64);
    let minors = GrGraph::new(x)?.minor_array();
    for c in rect.cells() {
        let file = c.j as i64 - c.i as i64;
        if file >= s - r {
            continue;
        }
        let d = rect.rows() - c.i;
        let jj = c.j + d;
        debug_assert!(jj < rect.cols());
        let band = Interval::new(rect, 1, rect.rows(), 2, jj + 1)?;
        let numer = w_interval_from(&minors, rect, band, d + 1)?;
        let denom = w_interval_from(&minors, rect, band, d)?;
        if denom.is_zero() {
            return Err(Error::DivisionByZero(format!(
                "band weight at ({}, {})",
                c.i, c.j
            )));
        }
        let expected = &numer / &denom;
        if shifted_image.get(c) != &expected {
            out.push(ChainShiftViolation {
                detail: format!(
                    "entry ({}, {}): direct {} vs chain sums {expected}",
                    c.i,
                    c.j,
                    shifted_image.get(c)
                ),
            });
        }
    }
    Ok(())
}
