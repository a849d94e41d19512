use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ClosureDiverged, Element, Semiring, StarSemiring};

/// The combinatorial semiring `(ℕ ∪ {∞}, +, ·, 0, 1)`.
///
/// Arithmetic saturates at `Infinite`; `0 · ∞ = 0` keeps zero absorbing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn to_f64(self) -> f64 {
        match self {
            Count::Finite(n) => n as f64,
            Count::Infinite => f64::INFINITY,
        }
    }
}

impl From<u64> for Count {
    fn from(n: u64) -> Count {
        Count::Finite(n)
    }
}

impl Element for Count {
    fn zero() -> Self {
        Count::Finite(0)
    }

    fn is_zero(&self) -> bool {
        *self == Count::Finite(0)
    }
}

impl Semiring for Count {
    fn one() -> Self {
        Count::Finite(1)
    }

    fn add(&self, rhs: &Self) -> Self {
        match (*self, *rhs) {
            (Count::Finite(a), Count::Finite(b)) => a.checked_add(b).map_or(Count::Infinite, Count::Finite),
            _ => Count::Infinite,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Count::zero();
        }
        match (*self, *rhs) {
            (Count::Finite(a), Count::Finite(b)) => a.checked_mul(b).map_or(Count::Infinite, Count::Finite),
            _ => Count::Infinite,
        }
    }
}

impl StarSemiring for Count {
    /// `Σ_{k≥0} a^k`: one for zero, divergent otherwise.
    fn star(&self) -> Result<Self, ClosureDiverged> {
        Ok(if self.is_zero() { Count::one() } else { Count::Infinite })
    }
}

impl fmt::Debug for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(n) => s.serialize_u64(*n),
            Count::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Count, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Count::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(Count::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("unexpected count {s:?}"))),
        }
    }
}
