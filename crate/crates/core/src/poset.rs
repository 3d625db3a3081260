//! The rectangle poset `[r] x [s]` and its combinatorial dynamics:
//! order ideals, toggles, rowmotion, antichains and 0/1 Stanley-Thomas words.
//!
//! Cells are 1-based pairs `(i, j)` ordered componentwise; covers are unit
//! steps in one coordinate. The rank of `(i, j)` is `i + j` (so the minimum
//! element has rank 2) and its file is `j - i`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The product of two chains with `r` rows and `s` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    r: usize,
    s: usize,
}

/// A 1-based cell `(i, j)` of a rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }

    pub fn rank(&self) -> usize {
        self.i + self.j
    }

    pub fn file(&self) -> i64 {
        self.j as i64 - self.i as i64
    }

    /// Componentwise order: `self` is weakly below `other`.
    pub fn leq(&self, other: &Cell) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn comparable(&self, other: &Cell) -> bool {
        self.leq(other) || other.leq(self)
    }

    /// True when the two cells form a cover pair in either direction.
    pub fn covers_or_covered_by(&self, other: &Cell) -> bool {
        let di = self.i.abs_diff(other.i);
        let dj = self.j.abs_diff(other.j);
        di + dj == 1
    }
}

impl Rect {
    pub fn new(r: usize, s: usize) -> Self {
        assert!(r >= 1 && s >= 1, "rectangle needs at least one row and column");
        Rect { r, s }
    }

    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.s
    }

    pub fn cell_count(&self) -> usize {
        self.r * self.s
    }

    pub fn transpose(&self) -> Rect {
        Rect { r: self.s, s: self.r }
    }

    pub fn contains(&self, c: Cell) -> bool {
        (1..=self.r).contains(&c.i) && (1..=self.s).contains(&c.j)
    }

    pub fn check_cell(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!(
                "cell ({}, {}) not in [{}] x [{}]",
                c.i, c.j, self.r, self.s
            )))
        }
    }

    /// Row-major position of a cell, used for bitsets and labelings.
    pub fn index(&self, c: Cell) -> usize {
        debug_assert!(self.contains(c));
        (c.i - 1) * self.s + (c.j - 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.r).flat_map(move |i| (1..=self.s).map(move |j| Cell::new(i, j)))
    }

    pub fn lower_covers(&self, c: Cell) -> impl Iterator<Item = Cell> {
        let mut out = Vec::with_capacity(2);
        if c.i > 1 {
            out.push(Cell::new(c.i - 1, c.j));
        }
        if c.j > 1 {
            out.push(Cell::new(c.i, c.j - 1));
        }
        out.into_iter()
    }

    pub fn upper_covers(&self, c: Cell) -> impl Iterator<Item = Cell> {
        let mut out = Vec::with_capacity(2);
        if c.i < self.r {
            out.push(Cell::new(c.i + 1, c.j));
        }
        if c.j < self.s {
            out.push(Cell::new(c.i, c.j + 1));
        }
        out.into_iter()
    }

    /// The canonical linear extension: increasing rank, increasing row
    /// within each rank. Any linear extension gives the same rowmotion;
    /// this one is the fixed default.
    pub fn linear_extension(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort_by_key(|c| (c.rank(), c.i));
        cells
    }
}

/// An axis-aligned interval `[i1, i2] x [j1, j2]` of a rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub i1: usize,
    pub i2: usize,
    pub j1: usize,
    pub j2: usize,
}

impl Interval {
    pub fn new(rect: Rect, i1: usize, i2: usize, j1: usize, j2: usize) -> Result<Self> {
        if i1 >= 1 && i1 <= i2 && i2 <= rect.rows() && j1 >= 1 && j1 <= j2 && j2 <= rect.cols() {
            Ok(Interval { i1, i2, j1, j2 })
        } else {
            Err(Error::IndexOutOfRange(format!(
                "interval [{i1},{i2}] x [{j1},{j2}] not in [{}] x [{}]",
                rect.rows(),
                rect.cols()
            )))
        }
    }

    /// The whole rectangle as an interval.
    pub fn full(rect: Rect) -> Self {
        Interval {
            i1: 1,
            i2: rect.rows(),
            j1: 1,
            j2: rect.cols(),
        }
    }

    /// The lower-left subrectangle `[i] x [j]`.
    pub fn lower_left(rect: Rect, i: usize, j: usize) -> Result<Self> {
        Interval::new(rect, 1, i, 1, j)
    }

    pub fn rows(&self) -> usize {
        self.i2 - self.i1 + 1
    }

    pub fn cols(&self) -> usize {
        self.j2 - self.j1 + 1
    }

    pub fn contains(&self, c: Cell) -> bool {
        (self.i1..=self.i2).contains(&c.i) && (self.j1..=self.j2).contains(&c.j)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.i1..=self.i2)
            .flat_map(move |i| (self.j1..=self.j2).map(move |j| Cell::new(i, j)))
    }

    /// True when the interval touches the boundary the way the minor-quotient
    /// formula needs: `(i1 = 1 or j2 = s) and (j1 = 1 or i2 = r)`.
    pub fn corner_anchored(&self, rect: Rect) -> bool {
        (self.i1 == 1 || self.j2 == rect.cols()) && (self.j1 == 1 || self.i2 == rect.rows())
    }

    /// Top-to-bottom linear extension of the interval's cells.
    pub fn extension_top_down(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort_by_key(|c| (core::cmp::Reverse(c.rank()), c.i));
        cells
    }

    /// Bottom-to-top linear extension of the interval's cells.
    pub fn extension_bottom_up(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort_by_key(|c| (c.rank(), c.i));
        cells
    }
}

/// A downward-closed set of cells, stored as a bitset in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    rect: Rect,
    bits: u64,
}

impl OrderIdeal {
    pub fn empty(rect: Rect) -> Self {
        assert!(rect.cell_count() <= 64, "bitset ideals support at most 64 cells");
        OrderIdeal { rect, bits: 0 }
    }

    pub fn full(rect: Rect) -> Self {
        let mut ideal = OrderIdeal::empty(rect);
        ideal.bits = if rect.cell_count() == 64 {
            u64::MAX
        } else {
            (1u64 << rect.cell_count()) - 1
        };
        ideal
    }

    /// Builds an ideal from its member cells, checking downward closure.
    pub fn from_cells(rect: Rect, cells: &[Cell]) -> Result<Self> {
        let mut ideal = OrderIdeal::empty(rect);
        for &c in cells {
            rect.check_cell(c)?;
            ideal.bits |= 1u64 << rect.index(c);
        }
        for c in rect.cells() {
            if ideal.contains(c) {
                for below in rect.lower_covers(c) {
                    if !ideal.contains(below) {
                        return Err(Error::IndexOutOfRange(format!(
                            "cell set is not downward closed at ({}, {})",
                            c.i, c.j
                        )));
                    }
                }
            }
        }
        Ok(ideal)
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.rect.contains(c) && (self.bits >> self.rect.index(c)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.rect.cells().filter(|&c| self.contains(c)).collect()
    }

    fn insert(&mut self, c: Cell) {
        self.bits |= 1u64 << self.rect.index(c);
    }

    fn remove(&mut self, c: Cell) {
        self.bits &= !(1u64 << self.rect.index(c));
    }

    /// The maximal elements of the ideal.
    pub fn maximal_antichain(&self) -> Antichain {
        let cells = self
            .rect
            .cells()
            .filter(|&c| {
                self.contains(c) && self.rect.upper_covers(c).all(|up| !self.contains(up))
            })
            .collect();
        Antichain { cells }
    }
}

/// A set of pairwise-incomparable cells, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    cells: Vec<Cell>,
}

impl Antichain {
    pub fn new(rect: Rect, mut cells: Vec<Cell>) -> Result<Self> {
        for &c in &cells {
            rect.check_cell(c)?;
        }
        cells.sort();
        cells.dedup();
        for (idx, a) in cells.iter().enumerate() {
            for b in &cells[idx + 1..] {
                if a.comparable(b) {
                    return Err(Error::NotAntichain);
                }
            }
        }
        Ok(Antichain { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The downward closure of the antichain.
    pub fn ideal(&self, rect: Rect) -> OrderIdeal {
        let mut ideal = OrderIdeal::empty(rect);
        for c in rect.cells() {
            if self.cells.iter().any(|top| c.leq(top)) {
                ideal.insert(c);
            }
        }
        ideal
    }
}

/// All order ideals of the rectangle, each exactly once.
///
/// Ideals correspond to weakly decreasing column-height vectors, so the
/// enumeration walks those vectors; the count is `C(r+s, r)`. Refuses
/// rectangles with more than 30 cells.
pub fn enumerate_order_ideals(rect: Rect) -> Result<Vec<OrderIdeal>> {
    if rect.cell_count() > 30 {
        return Err(Error::SizeGuard(format!(
            "order-ideal enumeration limited to 30 cells, got {}",
            rect.cell_count()
        )));
    }
    let mut out = Vec::new();
    let mut heights = alloc::vec![0usize; rect.cols()];
    fn walk(rect: Rect, col: usize, max: usize, heights: &mut Vec<usize>, out: &mut Vec<OrderIdeal>) {
        if col == rect.cols() {
            let mut ideal = OrderIdeal::empty(rect);
            for (j0, &h) in heights.iter().enumerate() {
                for i in 1..=h {
                    ideal.insert(Cell::new(i, j0 + 1));
                }
            }
            out.push(ideal);
            return;
        }
        for h in (0..=max).rev() {
            heights[col] = h;
            walk(rect, col + 1, h, heights, out);
        }
    }
    walk(rect, 0, rect.rows(), &mut heights, &mut out);
    Ok(out)
}

/// The toggle at `p`: add or remove `p` exactly when the result is still an
/// order ideal, otherwise do nothing. Involutive by construction.
pub fn toggle(ideal: &OrderIdeal, p: Cell) -> OrderIdeal {
    let rect = ideal.rect();
    debug_assert!(rect.contains(p));
    let mut next = *ideal;
    if ideal.contains(p) {
        if rect.upper_covers(p).all(|up| !ideal.contains(up)) {
            next.remove(p);
        }
    } else if rect.lower_covers(p).all(|down| ideal.contains(down)) {
        next.insert(p);
    }
    next
}

/// Rowmotion as the ideal generated by the minimal elements of the
/// complement.
pub fn rowmotion_by_complement(ideal: &OrderIdeal) -> OrderIdeal {
    let rect = ideal.rect();
    let generators: Vec<Cell> = rect
        .cells()
        .filter(|&c| {
            !ideal.contains(c) && rect.lower_covers(c).all(|down| ideal.contains(down))
        })
        .collect();
    let mut next = OrderIdeal::empty(rect);
    for c in rect.cells() {
        if generators.iter().any(|g| c.leq(g)) {
            next.insert(c);
        }
    }
    next
}

/// Rowmotion as the top-to-bottom toggle sweep along a linear extension.
pub fn rowmotion_by_toggles(ideal: &OrderIdeal, extension: &[Cell]) -> OrderIdeal {
    let mut current = *ideal;
    for &p in extension.iter().rev() {
        current = toggle(&current, p);
    }
    current
}

/// Rowmotion; the two definitions agree, this uses the toggle sweep.
pub fn rowmotion(ideal: &OrderIdeal) -> OrderIdeal {
    rowmotion_by_toggles(ideal, &ideal.rect().linear_extension())
}

/// Inverse rowmotion: the bottom-to-top toggle sweep.
pub fn rowmotion_inverse(ideal: &OrderIdeal) -> OrderIdeal {
    let mut current = *ideal;
    for &p in ideal.rect().linear_extension().iter() {
        current = toggle(&current, p);
    }
    current
}

/// The 0/1 Stanley-Thomas word of an antichain: bit `i` (for `i <= r`) is 1
/// iff the antichain meets row `i`, bit `r+j` is 1 iff it misses column `j`.
/// The word always has exactly `s` ones.
pub fn stanley_thomas_word(antichain: &Antichain, rect: Rect) -> Vec<u8> {
    let mut word = alloc::vec![0u8; rect.rows() + rect.cols()];
    for i in 1..=rect.rows() {
        if antichain.cells().iter().any(|c| c.i == i) {
            word[i - 1] = 1;
        }
    }
    for j in 1..=rect.cols() {
        if !antichain.cells().iter().any(|c| c.j == j) {
            word[rect.rows() + j - 1] = 1;
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(i: usize, j: usize) -> Cell {
        Cell::new(i, j)
    }

    /// Brute-force oracle: filter all subsets for downward closure.
    fn ideals_by_subset_filter(rect: Rect) -> Vec<u64> {
        assert!(rect.cell_count() <= 16);
        let mut out = Vec::new();
        'subsets: for bits in 0u64..(1 << rect.cell_count()) {
            for c in rect.cells() {
                if (bits >> rect.index(c)) & 1 == 1 {
                    for below in rect.lower_covers(c) {
                        if (bits >> rect.index(below)) & 1 == 0 {
                            continue 'subsets;
                        }
                    }
                }
            }
            out.push(bits);
        }
        out
    }

    fn binomial(n: usize, k: usize) -> usize {
        let mut acc = 1usize;
        for t in 0..k {
            acc = acc * (n - t) / (t + 1);
        }
        acc
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_order_ideals(Rect::new(1, 1)).unwrap().len(), 2);
        assert_eq!(enumerate_order_ideals(Rect::new(2, 3)).unwrap().len(), 10);
        assert_eq!(enumerate_order_ideals(Rect::new(2, 2)).unwrap().len(), 6);
        assert!(enumerate_order_ideals(Rect::new(6, 6)).is_err());
    }

    #[test]
    fn enumeration_matches_subset_filter() {
        for (r, s) in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 4), (1, 5)] {
            let rect = Rect::new(r, s);
            let mut listed: Vec<u64> = enumerate_order_ideals(rect)
                .unwrap()
                .iter()
                .map(|ideal| ideal.bits)
                .collect();
            listed.sort_unstable();
            let mut filtered = ideals_by_subset_filter(rect);
            filtered.sort_unstable();
            assert_eq!(listed, filtered);
            assert_eq!(listed.len(), binomial(r + s, r));
        }
    }

    #[test]
    fn toggle_cases() {
        let rect = Rect::new(2, 3);
        let empty = OrderIdeal::empty(rect);
        let toggled = toggle(&empty, cell(1, 1));
        assert!(toggled.contains(cell(1, 1)));
        assert_eq!(toggled.len(), 1);

        // Adding (2,2) to {(1,1)} breaks closure, so nothing happens.
        let small = OrderIdeal::from_cells(rect, &[cell(1, 1)]).unwrap();
        assert_eq!(toggle(&small, cell(2, 2)), small);

        for ideal in enumerate_order_ideals(rect).unwrap() {
            for p in rect.cells() {
                assert_eq!(toggle(&toggle(&ideal, p), p), ideal, "involution at {p:?}");
            }
        }
    }

    #[test]
    fn toggle_commutation_iff_not_cover_pair() {
        let rect = Rect::new(3, 3);
        let ideals = enumerate_order_ideals(rect).unwrap();
        for p in rect.cells() {
            for q in rect.cells() {
                if p == q {
                    continue;
                }
                let commute = ideals
                    .iter()
                    .all(|ideal| toggle(&toggle(ideal, p), q) == toggle(&toggle(ideal, q), p));
                assert_eq!(
                    commute,
                    !p.covers_or_covered_by(&q),
                    "commutation mismatch for {p:?}, {q:?}"
                );
            }
        }
    }

    #[test]
    fn rowmotion_definitions_agree_and_have_order() {
        for (r, s) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (5, 5)] {
            let rect = Rect::new(r, s);
            for ideal in enumerate_order_ideals(rect).unwrap() {
                assert_eq!(rowmotion(&ideal), rowmotion_by_complement(&ideal));
                let mut current = ideal;
                for _ in 0..r + s {
                    current = rowmotion(&current);
                }
                assert_eq!(current, ideal, "order of rowmotion on {r}x{s}");
                assert_eq!(rowmotion_inverse(&rowmotion(&ideal)), ideal);
            }
        }
    }

    #[test]
    fn rowmotion_small_cases() {
        let rect = Rect::new(2, 3);
        let empty = OrderIdeal::empty(rect);
        let image = rowmotion(&empty);
        assert_eq!(image.cells(), alloc::vec![cell(1, 1)]);
        assert!(rowmotion(&OrderIdeal::full(rect)).is_empty());
    }

    #[test]
    fn extension_independence() {
        let rect = Rect::new(3, 3);
        // Reverse the order of cells within each rank.
        let mut alt = rect.linear_extension();
        alt.sort_by_key(|c| (c.rank(), core::cmp::Reverse(c.i)));
        for ideal in enumerate_order_ideals(rect).unwrap() {
            assert_eq!(
                rowmotion_by_toggles(&ideal, &rect.linear_extension()),
                rowmotion_by_toggles(&ideal, &alt)
            );
        }
    }

    #[test]
    fn canonical_extension_examples() {
        assert_eq!(
            Rect::new(2, 2).linear_extension(),
            alloc::vec![cell(1, 1), cell(1, 2), cell(2, 1), cell(2, 2)]
        );
        assert_eq!(
            Rect::new(1, 3).linear_extension(),
            alloc::vec![cell(1, 1), cell(1, 2), cell(1, 3)]
        );
    }

    #[test]
    fn stanley_thomas_examples() {
        let rect = Rect::new(2, 3);
        let empty = Antichain::new(rect, alloc::vec![]).unwrap();
        assert_eq!(stanley_thomas_word(&empty, rect), alloc::vec![0, 0, 1, 1, 1]);

        let two = Antichain::new(rect, alloc::vec![cell(1, 2), cell(2, 1)]).unwrap();
        assert_eq!(stanley_thomas_word(&two, rect), alloc::vec![1, 1, 0, 0, 1]);

        assert!(Antichain::new(rect, alloc::vec![cell(1, 1), cell(1, 2)]).is_err());
    }

    #[test]
    fn stanley_thomas_word_is_a_bijection() {
        use std::collections::BTreeSet;
        for (r, s) in [(2, 2), (2, 3), (3, 3), (4, 4), (3, 4)] {
            let rect = Rect::new(r, s);
            let ideals = enumerate_order_ideals(rect).unwrap();
            let words: BTreeSet<Vec<u8>> = ideals
                .iter()
                .map(|ideal| stanley_thomas_word(&ideal.maximal_antichain(), rect))
                .collect();
            assert_eq!(words.len(), ideals.len(), "words must be distinct");
            for word in &words {
                assert_eq!(word.iter().filter(|&&b| b == 1).count(), s);
            }
            assert_eq!(words.len(), binomial(r + s, s));
        }
    }

    #[test]
    fn antichain_ideal_round_trip() {
        let rect = Rect::new(3, 3);
        for ideal in enumerate_order_ideals(rect).unwrap() {
            let antichain = ideal.maximal_antichain();
            assert_eq!(antichain.ideal(rect), ideal);
        }
        let rect23 = Rect::new(2, 3);
        let ideal = OrderIdeal::from_cells(rect23, &[cell(1, 1), cell(1, 2), cell(2, 1)]).unwrap();
        assert_eq!(
            ideal.maximal_antichain().cells(),
            &[cell(1, 2), cell(2, 1)]
        );
    }

    #[test]
    fn word_rotates_under_rowmotion() {
        // Orientation pinned once: rowmotion rotates the word one step to
        // the right (entry k moves to k+1, the last wraps to the front).
        for (r, s) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
            let rect = Rect::new(r, s);
            for ideal in enumerate_order_ideals(rect).unwrap() {
                let word = stanley_thomas_word(&ideal.maximal_antichain(), rect);
                let next = stanley_thomas_word(&rowmotion(&ideal).maximal_antichain(), rect);
                let mut rotated = word.clone();
                rotated.rotate_right(1);
                assert_eq!(next, rotated);
            }
        }
    }
}
