use std::fmt;
use std::ops::Add;

/// Exponent `μ` of a shift operator `θ^μ = θ_1^μ_1 ⋯ θ_n^μ_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(components: Vec<u32>) -> Self {
        Self(components)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `θ_index^power`.
    pub fn pure_power(n: usize, index: usize, power: u32) -> Self {
        let mut v = vec![0; n];
        v[index] = power;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|μ|`
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other - self` when it is componentwise nonnegative.
    pub fn quotient_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Self(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `θ^μ ∘ y^k`. The derived `Ord` is a canonical storage order only; use a
/// [`Ranking`](super::Ranking) for the mathematical one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DifferenceMonomial {
    indeterminate: usize,
    exponent: ExponentVector,
}

impl DifferenceMonomial {
    /// `indeterminate` is zero-based.
    pub fn new(indeterminate: usize, exponent: impl Into<ExponentVector>) -> Self {
        Self {
            indeterminate,
            exponent: exponent.into(),
        }
    }

    pub fn indeterminate(&self) -> usize {
        self.indeterminate
    }

    pub fn exponent(&self) -> &ExponentVector {
        &self.exponent
    }

    /// `deg_i`
    pub fn degree_in(&self, i: usize) -> u32 {
        self.exponent.get(i)
    }

    /// `deg`
    pub fn total_degree(&self) -> u64 {
        self.exponent.total_degree()
    }

    /// `θ^γ ∘ self`
    pub fn shifted(&self, by: &ExponentVector) -> Self {
        Self {
            indeterminate: self.indeterminate,
            exponent: &self.exponent + by,
        }
    }

    /// The `γ` with `other = θ^γ ∘ self`, if any.
    pub fn divides(&self, other: &Self) -> Option<ExponentVector> {
        if self.indeterminate != other.indeterminate {
            return None;
        }
        self.exponent.quotient_into(&other.exponent)
    }
}

impl fmt::Display for DifferenceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}{}", self.indeterminate + 1, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility() {
        let u = DifferenceMonomial::new(0, vec![3, 1, 0, 0]);
        let w = DifferenceMonomial::new(0, vec![3, 1, 5, 0]);
        assert_eq!(u.divides(&w), Some(ExponentVector::new(vec![0, 0, 5, 0])));
        assert_eq!(w.divides(&u), None);
        assert_eq!(u.divides(&DifferenceMonomial::new(1, vec![3, 1, 5, 0])), None);
        assert_eq!(u.divides(&u), Some(ExponentVector::zero(4)));
    }

    #[test]
    fn shift_adds_exponents() {
        let u = DifferenceMonomial::new(1, vec![1, 2]);
        let s = u.shifted(&ExponentVector::pure_power(2, 1, 3));
        assert_eq!(s, DifferenceMonomial::new(1, vec![1, 5]));
        assert_eq!(s.total_degree(), 6);
    }
}
