//! Ordered abelian groups used as value groups of the model space.
//!
//! Two instantiations ship: the rationals themselves, and pairs of rationals
//! ordered lexicographically. The second one is non-Archimedean: `(0, 1)` is
//! positive but smaller than every positive multiple of `(1, 0)`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

/// Exact rational numbers, the scalar field of every module action.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand for building a rational from a numerator and denominator.
pub fn q(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Shorthand for an integral rational.
pub fn qi(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// A totally ordered abelian group that is also a module over the rationals.
///
/// The order must be compatible with addition and with multiplication by
/// positive rationals.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Ord
    + Hash
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;

    /// Multiplication by a rational, acting diagonally.
    fn scale(&self, factor: &Rational) -> Self;

    /// Embedding of the rationals, `q ↦ q·1`.
    fn from_rational(value: Rational) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn scale_int(&self, factor: i64) -> Self {
        self.scale(&Rational::from_integer(factor as i128))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn from_rational(value: Rational) -> Self {
        value
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// `ℚ × ℚ` with lexicographic order: the first component dominates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lex(pub Rational, pub Rational);

impl Lex {
    pub fn new(major: Rational, minor: Rational) -> Self {
        Lex(major, minor)
    }

    /// The positive infinitesimal `(0, 1)`.
    pub fn epsilon() -> Self {
        Lex(<Rational as Zero>::zero(), Rational::one())
    }
}

impl Add for Lex {
    type Output = Lex;
    fn add(self, rhs: Lex) -> Lex {
        Lex(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl Sub for Lex {
    type Output = Lex;
    fn sub(self, rhs: Lex) -> Lex {
        Lex(self.0 - rhs.0, self.1 - rhs.1)
    }
}

impl Neg for Lex {
    type Output = Lex;
    fn neg(self) -> Lex {
        Lex(-self.0, -self.1)
    }
}

impl fmt::Display for Lex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl Scalar for Lex {
    fn zero() -> Self {
        Lex(<Rational as Zero>::zero(), <Rational as Zero>::zero())
    }

    fn scale(&self, factor: &Rational) -> Self {
        Lex(self.0 * factor, self.1 * factor)
    }

    fn from_rational(value: Rational) -> Self {
        Lex(value, <Rational as Zero>::zero())
    }
}

/// Floor of a rational as an integer.
pub fn floor(value: &Rational) -> i128 {
    value.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn ceil(value: &Rational) -> i128 {
    value.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_is_non_archimedean() {
        let eps = Lex::epsilon();
        let one = Lex::from_rational(qi(1));
        assert!(eps.is_positive());
        for k in 1..50 {
            assert!(eps.scale_int(k * 1000) < one);
        }
        assert!(Lex(qi(-1), qi(5)) < Lex(qi(0), qi(-5)));
    }

    #[test]
    fn abs_is_max_of_value_and_negation() {
        let a = Lex(qi(0), q(-3, 2));
        assert_eq!(a.abs(), Lex(qi(0), q(3, 2)));
        assert_eq!(Scalar::abs(&q(-7, 3)), q(7, 3));
    }

    #[test]
    fn rounding() {
        assert_eq!(floor(&q(-1, 2)), -1);
        assert_eq!(ceil(&q(-1, 2)), 0);
        assert_eq!(floor(&qi(3)), 3);
    }
}
