//! The two-operation bundles toggles are generic over.
//!
//! A [`ToggleAlgebra`] packages the four binary operations a toggle needs —
//! combine-below, combine-above, product, quotient — together with the two
//! unit values used for empty combines. Running the same generic code over
//! [`Birational`] and [`Tropical`] yields birational and piecewise-linear
//! dynamics respectively: swapping `(+, ||, *, /)` for `(max, min, +, -)`
//! is exactly the tropicalization dictionary.

use alloc::format;

use crate::error::{Error, Result};
use crate::rational::{parallel_sum, Rational};

/// Operations and units for a toggle: `combine_below` folds the values of
/// lower covers, `combine_above` those of upper covers, and the toggled value
/// is `combine_above(..) (x) combine_below(..) (/) old`.
///
/// Both combines must be associative and commutative; `product` must be
/// associative and commutative with `quotient` as its inverse.
pub trait ToggleAlgebra {
    fn combine_below(&self, a: &Rational, b: &Rational) -> Rational;
    fn combine_above(&self, a: &Rational, b: &Rational) -> Rational;
    fn product(&self, a: &Rational, b: &Rational) -> Rational;
    fn quotient(&self, a: &Rational, b: &Rational) -> Rational;
    /// Value of an empty combine-below.
    fn unit_below(&self) -> Rational;
    /// Value of an empty combine-above.
    fn unit_above(&self) -> Rational;
    /// Checks that a value lies in the instance's carrier.
    fn check_value(&self, v: &Rational) -> Result<()>;

    /// Folds `combine_below` over an iterator, falling back to the unit.
    fn fold_below<'a>(&self, values: impl Iterator<Item = &'a Rational>) -> Rational {
        let mut acc: Option<Rational> = None;
        for v in values {
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => self.combine_below(&a, v),
            });
        }
        acc.unwrap_or_else(|| self.unit_below())
    }

    /// Folds `combine_above` over an iterator, falling back to the unit.
    fn fold_above<'a>(&self, values: impl Iterator<Item = &'a Rational>) -> Rational {
        let mut acc: Option<Rational> = None;
        for v in values {
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => self.combine_above(&a, v),
            });
        }
        acc.unwrap_or_else(|| self.unit_above())
    }
}

/// Subtraction-free rational operations on strictly positive values:
/// ordinary sum below, parallel sum above, multiplication and division,
/// with both empty combines equal to one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Birational;

impl ToggleAlgebra for Birational {
    fn combine_below(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn combine_above(&self, a: &Rational, b: &Rational) -> Rational {
        // Positivity of the carrier makes the parallel sum total.
        parallel_sum(a, b).expect("parallel sum of carrier values")
    }

    fn product(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn quotient(&self, a: &Rational, b: &Rational) -> Rational {
        a / b
    }

    fn unit_below(&self) -> Rational {
        Rational::one()
    }

    fn unit_above(&self) -> Rational {
        Rational::one()
    }

    fn check_value(&self, v: &Rational) -> Result<()> {
        if v.is_positive() {
            Ok(())
        } else {
            Err(Error::NonPositive(format!("label {v}")))
        }
    }
}

/// Max-plus operations on all rationals: `max` below, `min` above, addition
/// and subtraction, with an empty `max` equal to zero and an empty `min`
/// equal to a configurable ceiling.
///
/// Ceiling one gives the piecewise-linear toggle on the order polytope;
/// ceiling zero is the naive tropicalization of the birational toggle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tropical {
    ceiling: Rational,
}

impl Tropical {
    pub fn with_ceiling(ceiling: Rational) -> Self {
        Tropical { ceiling }
    }

    pub fn ceiling(&self) -> &Rational {
        &self.ceiling
    }
}

impl Default for Tropical {
    /// The order-polytope instance, ceiling one.
    fn default() -> Self {
        Tropical {
            ceiling: Rational::one(),
        }
    }
}

impl ToggleAlgebra for Tropical {
    fn combine_below(&self, a: &Rational, b: &Rational) -> Rational {
        a.clone().max(b.clone())
    }

    fn combine_above(&self, a: &Rational, b: &Rational) -> Rational {
        a.clone().min(b.clone())
    }

    fn product(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn quotient(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn unit_below(&self) -> Rational {
        Rational::zero()
    }

    fn unit_above(&self) -> Rational {
        self.ceiling.clone()
    }

    fn check_value(&self, _v: &Rational) -> Result<()> {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn birational_ops() {
        let alg = Birational;
        assert_eq!(alg.combine_below(&rat("2"), &rat("3")), rat("5"));
        assert_eq!(alg.combine_above(&rat("2"), &rat("3")), rat("6/5"));
        assert_eq!(alg.quotient(&rat("1"), &rat("5")), rat("1/5"));
        assert_eq!(alg.unit_below(), Rational::one());
        assert!(alg.check_value(&rat("-1")).is_err());
        assert!(alg.check_value(&rat("0")).is_err());
        assert!(alg.check_value(&rat("1/7")).is_ok());
    }

    #[test]
    fn tropical_ops() {
        let alg = Tropical::default();
        assert_eq!(alg.combine_below(&rat("-2"), &rat("1/3")), rat("1/3"));
        assert_eq!(alg.combine_above(&rat("-2"), &rat("1/3")), rat("-2"));
        assert_eq!(alg.product(&rat("2"), &rat("3")), rat("5"));
        assert_eq!(alg.quotient(&rat("2"), &rat("3")), rat("-1"));
        assert_eq!(alg.unit_below(), Rational::zero());
        assert_eq!(alg.unit_above(), Rational::one());
        assert!(alg.check_value(&rat("-7/2")).is_ok());

        let ceiling_zero = Tropical::with_ceiling(Rational::zero());
        assert_eq!(ceiling_zero.unit_above(), Rational::zero());
    }

    #[test]
    fn empty_folds_use_units() {
        let alg = Birational;
        assert_eq!(alg.fold_below(core::iter::empty()), Rational::one());
        let trop = Tropical::default();
        assert_eq!(trop.fold_below(core::iter::empty()), Rational::zero());
        assert_eq!(trop.fold_above(core::iter::empty()), Rational::one());
    }
}
