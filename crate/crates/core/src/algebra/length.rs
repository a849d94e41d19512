use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ClosureDiverged, Element, Semiring, StarSemiring};

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3D71_9799_812D_EA11); // 1e-12

/// Absolute tolerance used when comparing real-valued lengths.
pub fn length_tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(AtomicOrdering::Relaxed))
}

/// Process-wide. Integer lengths are always compared exactly.
pub fn set_length_tolerance(eps: f64) {
    assert!(eps >= 0.0 && eps.is_finite(), "tolerance must be a finite non-negative number");
    TOLERANCE_BITS.store(eps.to_bits(), AtomicOrdering::Relaxed);
}

/// Non-negative path length, the shortest-paths semiring `(ℝ₀⁺ ∪ {∞}, min, +, ∞, 0)`.
///
/// Lengths stay exact integers as long as every input is integral.
#[derive(Clone, Copy)]
pub enum Length {
    Int(u64),
    Real(f64),
    Infinite,
}

impl Length {
    pub fn try_from_f64(x: f64) -> Result<Length, String> {
        if x.is_nan() || x < 0.0 {
            return Err(format!("{x} is not a non-negative length"));
        }
        if x.is_infinite() {
            return Ok(Length::Infinite);
        }
        if x.fract() == 0.0 && x < u64::MAX as f64 {
            Ok(Length::Int(x as u64))
        } else {
            Ok(Length::Real(x))
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Length::Int(n) => n as f64,
            Length::Real(x) => x,
            Length::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Length::Infinite)
    }

    fn compare(self, other: Length) -> Ordering {
        match (self, other) {
            (Length::Infinite, Length::Infinite) => Ordering::Equal,
            (Length::Infinite, _) => Ordering::Greater,
            (_, Length::Infinite) => Ordering::Less,
            (Length::Int(a), Length::Int(b)) => a.cmp(&b),
            (a, b) => {
                let (x, y) = (a.to_f64(), b.to_f64());
                if (x - y).abs() <= length_tolerance() {
                    Ordering::Equal
                } else {
                    x.total_cmp(&y)
                }
            }
        }
    }
}

impl PartialEq for Length {
    fn eq(&self, other: &Length) -> bool {
        self.compare(*other) == Ordering::Equal
    }
}

impl PartialOrd for Length {
    fn partial_cmp(&self, other: &Length) -> Option<Ordering> {
        Some(self.compare(*other))
    }
}

impl Element for Length {
    fn zero() -> Self {
        Length::Infinite
    }

    fn is_zero(&self) -> bool {
        self.is_infinite()
    }
}

impl Semiring for Length {
    fn one() -> Self {
        Length::Int(0)
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.compare(*rhs) == Ordering::Greater {
            *rhs
        } else {
            *self
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (*self, *rhs) {
            (Length::Infinite, _) | (_, Length::Infinite) => Length::Infinite,
            (Length::Int(a), Length::Int(b)) => a.checked_add(b).map_or(Length::Infinite, Length::Int),
            (a, b) => Length::Real(a.to_f64() + b.to_f64()),
        }
    }

    const ABSORPTIVE: bool = true;
}

impl StarSemiring for Length {
    fn star(&self) -> Result<Self, ClosureDiverged> {
        Ok(Length::one())
    }
}

impl fmt::Debug for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Int(n) => write!(f, "{n}"),
            Length::Real(x) => write!(f, "{x}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Int(n) => s.serialize_u64(*n),
            Length::Real(x) => s.serialize_f64(*x),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Length, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(f64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(x) => Length::try_from_f64(x).map_err(serde::de::Error::custom),
            Raw::S(s) if s == "inf" => Ok(Length::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("unexpected length {s:?}"))),
        }
    }
}
