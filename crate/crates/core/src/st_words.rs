//! Birational and generalized Stanley-Thomas words.
//!
//! The classic word of a positive labeling lists the row products followed
//! by the inverse column products. The generalized words track the orbit of
//! a top-boundary entry of `transfer_inverse(x)` under inverse rowmotion;
//! each of them also has a closed chain form: a prefix of maximal-chain
//! weights over shifted row bands, then rank-window sums of inverse weights.
//! Conjugating rowmotion by the transfer map rotates every such word one
//! step to the right.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Birational;
use crate::closed_form::PowerTable;
use crate::dynamics::{self, Labeling};
use crate::error::{Error, Result};
use crate::paths::{w_interval_from, GrGraph};
use crate::poset::{Cell, Interval};
use crate::rational::Rational;

/// Which word a value sequence is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    /// Row products then inverse column products.
    Classic,
    /// Orbit of the rightmost entry of row `i`.
    Row(usize),
    /// Orbit of the topmost entry of column `j`.
    Col(usize),
}

/// A length `r+s` sequence of positive rationals attached to a labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StWord {
    pub kind: WordKind,
    pub entries: Vec<Rational>,
}

impl StWord {
    /// The word rotated one step to the right.
    pub fn rotated_right(&self) -> StWord {
        let mut entries = self.entries.clone();
        entries.rotate_right(1);
        StWord {
            kind: self.kind,
            entries,
        }
    }
}

/// The classic word: `w_i = prod_j x_ij` for `i <= r`, then
/// `w_(r+j) = prod_i 1/x_ij` for each column `j`.
pub fn birational_st(x: &Labeling) -> Result<StWord> {
    x.check_carrier(&Birational)?;
    let rect = x.rect();
    let mut entries = Vec::with_capacity(rect.rows() + rect.cols());
    for i in 1..=rect.rows() {
        let row = (1..=rect.cols()).fold(Rational::one(), |acc, j| &acc * x.get(Cell::new(i, j)));
        entries.push(row);
    }
    for j in 1..=rect.cols() {
        let col = (1..=rect.rows()).fold(Rational::one(), |acc, i| &acc * x.get(Cell::new(i, j)));
        entries.push(col.recip()?);
    }
    Ok(StWord {
        kind: WordKind::Classic,
        entries,
    })
}

/// Sum of inverse weights over all sequences of cells at consecutive ranks
/// `a ..= b` with strictly increasing row indices.
///
/// Computed by a rank-by-rank sweep; an empty sequence family is an error
/// because its sum is not a positive rational.
pub fn omega(x: &Labeling, a: usize, b: usize) -> Result<Rational> {
    x.check_carrier(&Birational)?;
    let rect = x.rect();
    let max_rank = rect.rows() + rect.cols();
    if !(2..=max_rank).contains(&a) || a > b || b > max_rank {
        return Err(Error::IndexOutOfRange(format!(
            "rank window [{a}, {b}] outside [2, {max_rank}]"
        )));
    }
    let cells_at_rank =
        |t: usize| -> Vec<Cell> { rect.cells().filter(|c| c.rank() == t).collect() };
    // reaching[c] = sum over sequences ending at cell c of the inverse
    // product of their weights.
    let mut reaching: Vec<(Cell, Rational)> = cells_at_rank(a)
        .into_iter()
        .map(|c| -> Result<(Cell, Rational)> { Ok((c, x.get(c).recip()?)) })
        .collect::<Result<_>>()?;
    for t in a + 1..=b {
        let mut next = Vec::new();
        for c in cells_at_rank(t) {
            let incoming = reaching
                .iter()
                .filter(|(prev, _)| prev.i < c.i)
                .fold(Rational::zero(), |acc, (_, v)| &acc + v);
            if !incoming.is_zero() {
                next.push((c, &incoming / x.get(c)));
            }
        }
        reaching = next;
    }
    let total = reaching
        .iter()
        .fold(Rational::zero(), |acc, (_, v)| &acc + v);
    if total.is_zero() {
        return Err(Error::EmptyOmegaFamily(format!("rank window [{a}, {b}]")));
    }
    Ok(total)
}

/// The row word as the orbit `rho^(-k)(transfer_inverse(x))` at `(i, s)`.
pub fn st_row_orbit(x: &Labeling, i: usize) -> Result<StWord> {
    let rect = x.rect();
    rect.check_cell(Cell::new(i, 1))?;
    let table = PowerTable::new(x)?;
    let cell = Cell::new(i, rect.cols());
    let entries = (0..rect.rows() + rect.cols())
        .map(|k| table.power(cell, -(k as i64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(StWord {
        kind: WordKind::Row(i),
        entries,
    })
}

/// The row word in closed chain form: maximal-chain weights of the row
/// bands `[k+1, k+i] x [s]` for `0 <= k <= r-i`, then the rank-window sums
/// `omega(a, a + r - i)` for `a = 2 ..= i+s`.
pub fn st_row_chain_form(x: &Labeling, i: usize) -> Result<StWord> {
    let rect = x.rect();
    rect.check_cell(Cell::new(i, 1))?;
    let (r, s) = (rect.rows(), rect.cols());
    let minors = GrGraph::new(x)?.minor_array();
    let mut entries = Vec::with_capacity(r + s);
    for k in 0..=r - i {
        let band = Interval::new(rect, k + 1, k + i, 1, s)?;
        entries.push(w_interval_from(&minors, rect, band, 1)?);
    }
    for a in 2..=i + s {
        entries.push(omega(x, a, a + r - i)?);
    }
    Ok(StWord {
        kind: WordKind::Row(i),
        entries,
    })
}

/// The column word, which is the row word of the transposed labeling.
pub fn st_col_orbit(x: &Labeling, j: usize) -> Result<StWord> {
    let word = st_row_orbit(&x.transpose(), j)?;
    Ok(StWord {
        kind: WordKind::Col(j),
        entries: word.entries,
    })
}

/// Chain form of the column word, via the transpose.
pub fn st_col_chain_form(x: &Labeling, j: usize) -> Result<StWord> {
    let word = st_row_chain_form(&x.transpose(), j)?;
    Ok(StWord {
        kind: WordKind::Col(j),
        entries: word.entries,
    })
}

/// Computes a generalized word both ways (orbit and chain form) and insists
/// they agree.
pub fn generalized_st(x: &Labeling, kind: WordKind) -> Result<StWord> {
    let (orbit, chain) = match kind {
        WordKind::Classic => {
            let classic = birational_st(x)?;
            let orbit = st_row_orbit(x, 1)?;
            (
                StWord {
                    kind: WordKind::Classic,
                    entries: orbit.entries,
                },
                classic,
            )
        }
        WordKind::Row(i) => (st_row_orbit(x, i)?, st_row_chain_form(x, i)?),
        WordKind::Col(j) => (st_col_orbit(x, j)?, st_col_chain_form(x, j)?),
    };
    if orbit.entries != chain.entries {
        return Err(Error::InconsistentProfile(format!(
            "orbit and chain forms of {kind:?} disagree"
        )));
    }
    Ok(orbit)
}

/// A word that failed to rotate under conjugated rowmotion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationViolation {
    pub kind: WordKind,
    pub detail: String,
}

/// Checks that `transfer . rowmotion . transfer_inverse` rotates the
/// classic word and every generalized word one step to the right.
pub fn cyclic_shift_violations(x: &Labeling) -> Result<Vec<RotationViolation>> {
    let alg = Birational;
    let shifted = dynamics::transfer(
        &dynamics::rowmotion(&dynamics::transfer_inverse(x, &alg)?, &alg)?,
        &alg,
    )?;
    let rect = x.rect();
    let mut kinds = alloc::vec![WordKind::Classic];
    kinds.extend((1..=rect.rows()).map(WordKind::Row));
    kinds.extend((1..=rect.cols()).map(WordKind::Col));
    let mut out = Vec::new();
    for kind in kinds {
        let word = |labeling: &Labeling| -> Result<StWord> {
            match kind {
                WordKind::Classic => birational_st(labeling),
                WordKind::Row(i) => st_row_orbit(labeling, i),
                WordKind::Col(j) => st_col_orbit(labeling, j),
            }
        };
        let before = word(x)?;
        let after = word(&shifted)?;
        if after.entries != before.rotated_right().entries {
            out.push(RotationViolation {
                kind,
                detail: format!(
                    "expected right rotation of {:?}, got {:?}",
                    before.entries, after.entries
                ),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::test_support::{primes_2x3, seeded_labeling};
    use crate::poset::Rect;
    use crate::rational::parse_all;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Explicit enumeration oracle for the rank-window sums.
    fn omega_oracle(x: &Labeling, a: usize, b: usize) -> Option<Rational> {
        let rect = x.rect();
        let ranks: Vec<Vec<Cell>> = (a..=b)
            .map(|t| rect.cells().filter(|c| c.rank() == t).collect())
            .collect();
        fn rec(
            x: &Labeling,
            ranks: &[Vec<Cell>],
            level: usize,
            min_row: usize,
            acc: Rational,
            total: &mut Option<Rational>,
        ) {
            if level == ranks.len() {
                *total = Some(match total.take() {
                    None => acc,
                    Some(t) => &t + &acc,
                });
                return;
            }
            for &c in &ranks[level] {
                if c.i > min_row || level == 0 {
                    let next = &acc / x.get(c);
                    rec(x, ranks, level + 1, c.i, next, total);
                }
            }
        }
        let mut total = None;
        rec(x, &ranks, 0, 0, Rational::one(), &mut total);
        total
    }

    #[test]
    fn classic_word_examples() {
        let x = primes_2x3();
        let word = birational_st(&x).unwrap();
        assert_eq!(
            word.entries,
            parse_all(&["110", "273", "1/6", "1/35", "1/143"]).unwrap()
        );

        let tiny = Labeling::from_row_major(Rect::new(1, 1), alloc::vec![rat("5")]).unwrap();
        assert_eq!(
            birational_st(&tiny).unwrap().entries,
            parse_all(&["5", "1/5"]).unwrap()
        );
    }

    #[test]
    fn classic_word_is_the_first_row_word() {
        let x = primes_2x3();
        assert_eq!(
            birational_st(&x).unwrap().entries,
            st_row_orbit(&x, 1).unwrap().entries
        );
        let bigger = seeded_labeling(Rect::new(3, 4), 13);
        assert_eq!(
            birational_st(&bigger).unwrap().entries,
            st_row_orbit(&bigger, 1).unwrap().entries
        );
    }

    #[test]
    fn omega_examples() {
        let rect = Rect::new(3, 3);
        let x = seeded_labeling(rect, 3);
        let inv = |c: Cell| x.get(c).recip().unwrap();
        assert_eq!(
            omega(&x, 2, 3).unwrap(),
            &inv(Cell::new(1, 1)) * &inv(Cell::new(2, 1))
        );
        let expected_34 = &(&(&inv(Cell::new(1, 2)) * &inv(Cell::new(2, 2)))
            + &(&inv(Cell::new(1, 2)) * &inv(Cell::new(3, 1))))
            + &(&inv(Cell::new(2, 1)) * &inv(Cell::new(3, 1)));
        assert_eq!(omega(&x, 3, 4).unwrap(), expected_34);
        // Single-rank windows sum the inverse labels on the rank.
        for a in 2..=6 {
            let by_hand = rect
                .cells()
                .filter(|c| c.rank() == a)
                .fold(Rational::zero(), |acc, c| &acc + &inv(c));
            assert_eq!(omega(&x, a, a).unwrap(), by_hand);
        }
        assert!(omega(&x, 1, 2).is_err());
        // Strictly increasing rows over more ranks than rows is impossible.
        assert!(matches!(
            omega(&x, 2, 6),
            Err(Error::EmptyOmegaFamily(_))
        ));
    }

    #[test]
    fn omega_matches_enumeration() {
        for (r, s) in [(2, 3), (3, 3), (3, 4)] {
            let rect = Rect::new(r, s);
            let x = seeded_labeling(rect, 19);
            for a in 2..=r + s {
                for b in a..=r + s {
                    match (omega(&x, a, b), omega_oracle(&x, a, b)) {
                        (Ok(fast), Some(slow)) => assert_eq!(fast, slow, "window [{a}, {b}]"),
                        (Err(Error::EmptyOmegaFamily(_)), None) => {}
                        (fast, slow) => panic!("window [{a}, {b}]: {fast:?} vs {slow:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn chain_form_structure_on_3x3() {
        // For the middle row of a 3x3 square the chain form is two band
        // weights followed by four rank-window sums.
        let rect = Rect::new(3, 3);
        let x = seeded_labeling(rect, 23);
        let word = st_row_chain_form(&x, 2).unwrap();
        let minors = GrGraph::new(&x).unwrap().minor_array();
        let band = |i1: usize, i2: usize| {
            w_interval_from(
                &minors,
                rect,
                Interval::new(rect, i1, i2, 1, 3).unwrap(),
                1,
            )
            .unwrap()
        };
        let expected = alloc::vec![
            band(1, 2),
            band(2, 3),
            omega(&x, 2, 3).unwrap(),
            omega(&x, 3, 4).unwrap(),
            omega(&x, 4, 5).unwrap(),
            omega(&x, 5, 6).unwrap(),
        ];
        assert_eq!(word.entries, expected);
    }

    #[test]
    fn orbit_and_chain_forms_agree() {
        for (r, s) in [(1, 1), (2, 3), (3, 3), (3, 4), (4, 4)] {
            let rect = Rect::new(r, s);
            for seed in 0..3 {
                let x = seeded_labeling(rect, seed * 7 + 1);
                for i in 1..=r {
                    assert_eq!(
                        st_row_orbit(&x, i).unwrap().entries,
                        st_row_chain_form(&x, i).unwrap().entries,
                        "row {i} on {r}x{s}"
                    );
                    assert!(generalized_st(&x, WordKind::Row(i)).is_ok());
                }
                for j in 1..=s {
                    assert_eq!(
                        st_col_orbit(&x, j).unwrap().entries,
                        st_col_chain_form(&x, j).unwrap().entries,
                        "col {j} on {r}x{s}"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_labels_count_chains_and_rank_sequences() {
        // With all labels one, band weights count maximal chains and the
        // rank-window sums count northwest sequences; the oracle is the
        // authority for both counts.
        let rect = Rect::new(3, 3);
        let x = Labeling::constant(rect, Rational::one());
        let word = st_row_chain_form(&x, 2).unwrap();
        // Maximal chains of a 2x3 band: binomial(3, 1).
        assert_eq!(word.entries[0], rat("3"));
        assert_eq!(word.entries[1], rat("3"));
        for (idx, a) in (2..=5).enumerate() {
            assert_eq!(
                word.entries[2 + idx],
                omega_oracle(&x, a, a + 1).unwrap(),
                "rank window [{a}, {}]",
                a + 1
            );
        }
    }

    #[test]
    fn words_rotate_right_under_conjugated_rowmotion() {
        for (r, s) in [(1, 1), (2, 3), (3, 3), (2, 4), (4, 4)] {
            let rect = Rect::new(r, s);
            for seed in 0..3 {
                let x = seeded_labeling(rect, seed + 100);
                assert!(cyclic_shift_violations(&x).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn inverse_shift_rotates_left_matching_printed_labeling() {
        // One inverse step of conjugated rowmotion rotates the classic word
        // one step left.
        let x = primes_2x3();
        let alg = Birational;
        let z = dynamics::transfer(
            &dynamics::rowmotion_inverse(&dynamics::transfer_inverse(&x, &alg).unwrap(), &alg)
                .unwrap(),
            &alg,
        )
        .unwrap();
        let word_z = birational_st(&z).unwrap();
        assert_eq!(
            word_z.entries,
            parse_all(&["273", "1/6", "1/35", "1/143", "110"]).unwrap()
        );
        // Spot values of the shifted labeling itself.
        assert_eq!(
            &(z.get(Cell::new(1, 1)) * z.get(Cell::new(2, 1))),
            &rat("35")
        );
    }

    #[test]
    fn full_period_of_rotations_returns_the_word() {
        let x = seeded_labeling(Rect::new(2, 3), 8);
        let alg = Birational;
        let mut current = x.clone();
        for _ in 0..5 {
            current = dynamics::transfer(
                &dynamics::rowmotion(&dynamics::transfer_inverse(&current, &alg).unwrap(), &alg)
                    .unwrap(),
                &alg,
            )
            .unwrap();
        }
        assert_eq!(
            birational_st(&current).unwrap().entries,
            birational_st(&x).unwrap().entries
        );
    }
}
