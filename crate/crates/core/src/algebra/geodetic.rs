use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{ClosureDiverged, Count, Element, Length, Semiring, StarSemiring};

/// Geodetic semiring on `(length, count)` pairs: the length of the shortest
/// paths and how many of them there are.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Geodetic {
    length: Length,
    count: Count,
}

impl Geodetic {
    /// Canonical: an infinite length always carries count 0.
    pub fn new(length: Length, count: Count) -> Geodetic {
        if length.is_infinite() || count.is_zero() {
            Geodetic::zero()
        } else {
            Geodetic { length, count }
        }
    }

    pub fn length(&self) -> Length {
        self.length
    }

    pub fn count(&self) -> Count {
        self.count
    }
}

impl Element for Geodetic {
    fn zero() -> Self {
        Geodetic { length: Length::Infinite, count: Count::zero() }
    }

    fn is_zero(&self) -> bool {
        self.length.is_infinite()
    }
}

impl Semiring for Geodetic {
    fn one() -> Self {
        Geodetic { length: Length::one(), count: Count::one() }
    }

    fn add(&self, rhs: &Self) -> Self {
        match self.length.partial_cmp(&rhs.length) {
            Some(Ordering::Less) => *self,
            Some(Ordering::Greater) => *rhs,
            _ => Geodetic::new(self.length, self.count.add(&rhs.count)),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Geodetic::new(self.length.mul(&rhs.length), self.count.mul(&rhs.count))
    }
}

impl StarSemiring for Geodetic {
    /// `(0, ∞)` for a zero-length loop that exists, `(0, 1)` otherwise.
    fn star(&self) -> Result<Self, ClosureDiverged> {
        if self.length == Length::Int(0) && !self.count.is_zero() {
            Ok(Geodetic { length: Length::Int(0), count: Count::Infinite })
        } else {
            Ok(Geodetic::one())
        }
    }
}
