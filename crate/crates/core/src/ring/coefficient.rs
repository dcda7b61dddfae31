use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExponentVector;

/// Arbitrary-precision rationals; the default ground field.
pub type Rational = BigRational;

/// Ground difference field `K`: exact field arithmetic plus the action of
/// the shift operators on field elements.
///
/// `shift` must be a ring homomorphism, `shift(0)` the identity, and
/// `shift(μ) ∘ shift(ν) = shift(μ + ν)`.
pub trait DifferenceField:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// `θ^by` applied to `self`.
    fn shift(&self, by: &ExponentVector) -> Self;

    /// Whether every shift acts as the identity (a field of constants).
    fn has_trivial_shift() -> bool {
        false
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `a · x`. Overridable where a cheaper path exists.
    fn product(a: &Self, x: &Self) -> Self {
        a.clone() * x.clone()
    }

    /// `a · x + b · y`. Overridable where a cheaper path exists.
    fn linear_combination(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        a.clone() * x.clone() + b.clone() * y.clone()
    }

    /// A rough measure of storage size, used to decide when to
    /// renormalize. The default treats every element alike.
    fn size(&self) -> u64 {
        0
    }

    /// A nonzero `c` such that `c · coeffs` is cheap to compute with.
    /// The default is `1`; the rationals clear denominators and content.
    fn content_scale<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        let _ = coeffs;
        Self::one()
    }
}

/// The rationals as a field of constants.
impl DifferenceField for BigRational {
    fn shift(&self, _by: &ExponentVector) -> Self {
        self.clone()
    }

    fn has_trivial_shift() -> bool {
        true
    }

    fn size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    // Integral operands skip the gcd normalization that dominates
    // BigRational arithmetic; integers are already in lowest terms.
    fn product(a: &Self, x: &Self) -> Self {
        if x.is_integer() {
            if a.is_integer() {
                return BigRational::new_raw(a.numer() * x.numer(), BigInt::one());
            }
            // removing content: the division is usually exact
            let (q, r) = (a.numer() * x.numer()).div_rem(a.denom());
            if r.is_zero() {
                return BigRational::new_raw(q, BigInt::one());
            }
        }
        a * x
    }

    fn linear_combination(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        if [a, x, b, y].iter().all(|v| v.is_integer()) {
            BigRational::new_raw(a.numer() * x.numer() + b.numer() * y.numer(), BigInt::one())
        } else {
            a * x + b * y
        }
    }

    fn content_scale<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Self {
        let coeffs: Vec<&Self> = coeffs.filter(|c| !c.is_zero()).collect();
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| if c.denom().is_one() { l } else { l.lcm(c.denom()) });
        let mut content = BigInt::zero();
        for c in &coeffs {
            content = content.gcd(&(c.numer() * (&denom / c.denom())));
            if content.is_one() {
                break;
            }
        }
        if content.is_zero() {
            return Self::one();
        }
        BigRational::new(denom, content)
    }
}

/// Shorthand for small integer literals.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
