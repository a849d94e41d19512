//! Semiring abstraction and the scalar instances.
//!
//! Every element type used in temporal quantities implements [`Element`]
//! (it knows its own zero, which encodes absence). Types that also carry a
//! unit and the two operations implement [`Semiring`]; closed ones add a
//! [`StarSemiring::star`].

mod count;
mod generalized;
mod geodetic;
mod length;

use std::fmt::Debug;

pub use count::Count;
pub use generalized::Generalized;
pub use geodetic::Geodetic;
pub use length::{length_tolerance, set_length_tolerance, Length};

use crate::time::Time;

/// A value that can live inside a temporal quantity.
pub trait Element: Clone + PartialEq + Debug + Send + Sync {
    /// The value describing absence.
    fn zero() -> Self;

    fn is_zero(&self) -> bool;
}

/// `(A, ⊕, ⊙, 0, 1)`: `⊕` commutative and associative with neutral `0`,
/// `⊙` associative with two-sided unit `1`, `⊙` distributing over `⊕`, and `0`
/// absorbing for `⊙`.
pub trait Semiring: Element {
    fn one() -> Self;

    fn add(&self, rhs: &Self) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    /// `1 ⊕ c = 1` for every `c`; closures then reduce to the unit.
    const ABSORPTIVE: bool = false;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("closure diverged: {0}")]
pub struct ClosureDiverged(pub String);

/// A closed semiring: `a* = 1 ⊕ a ⊙ a* = ⊕_{k≥0} a^k`.
pub trait StarSemiring: Semiring {
    fn star(&self) -> Result<Self, ClosureDiverged>;
}

/// Left-fold of `⊕` over an iterator, starting from zero.
pub fn sum<S: Semiring>(items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::zero(), |acc, x| acc.add(&x))
}

// (min, +) over ℤ ∪ {∞}. Used for arrival times and latencies.
impl Element for Time {
    fn zero() -> Self {
        Time::INFINITY
    }

    fn is_zero(&self) -> bool {
        self.is_infinite()
    }
}

impl Semiring for Time {
    fn one() -> Self {
        Time::ZERO
    }

    fn add(&self, rhs: &Self) -> Self {
        (*self).min(*rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
}

// Boolean semiring, used for presence.
impl Element for bool {
    fn zero() -> Self {
        false
    }

    fn is_zero(&self) -> bool {
        !*self
    }
}

impl Semiring for bool {
    fn one() -> Self {
        true
    }

    fn add(&self, rhs: &Self) -> Self {
        *self || *rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        *self && *rhs
    }

    const ABSORPTIVE: bool = true;
}

impl StarSemiring for bool {
    fn star(&self) -> Result<Self, ClosureDiverged> {
        Ok(true)
    }
}

// Real (+, ×). Betweenness values and raw link weights.
impl Element for f64 {
    fn zero() -> Self {
        0.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Semiring for f64 {
    fn one() -> Self {
        1.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

// Plain "present or absent" values, e.g. raw link weights before they are
// interpreted in some semiring.
impl<T: Clone + PartialEq + Debug + Send + Sync> Element for Option<T> {
    fn zero() -> Self {
        None
    }

    fn is_zero(&self) -> bool {
        self.is_none()
    }
}

/// Inner semirings that can be built from a raw numeric link weight.
pub trait FromWeight: Semiring {
    fn from_weight(w: f64) -> Result<Self, String>;
}

impl FromWeight for Count {
    fn from_weight(w: f64) -> Result<Self, String> {
        if w >= 0.0 && w.fract() == 0.0 && w < u64::MAX as f64 {
            Ok(Count::Finite(w as u64))
        } else {
            Err(format!("{w} is not a non-negative integer count"))
        }
    }
}

impl FromWeight for Length {
    fn from_weight(w: f64) -> Result<Self, String> {
        Length::try_from_f64(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn time_is_min_plus() {
        let a = Time::new(3);
        let b = Time::new(5);
        assert_eq!(a.add(&b), a);
        assert_eq!(a.mul(&b), Time::new(8));
        assert_eq!(a.mul(&Time::zero()), Time::INFINITY);
        assert_eq!(a.mul(&Time::one()), a);
    }

    #[test]
    fn from_weight_rejects_fractional_counts() {
        assert_eq!(Count::from_weight(3.0), Ok(Count::Finite(3)));
        assert!(Count::from_weight(1.5).is_err());
        assert!(Count::from_weight(-1.0).is_err());
        assert_eq!(Length::from_weight(2.0), Ok(Length::Int(2)));
        assert_eq!(Length::from_weight(2.5), Ok(Length::Real(2.5)));
    }
}
