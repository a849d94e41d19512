use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::{Serialize, Serializer};

/// A point on the integer time line, or the distinguished `+∞`.
///
/// `Time` doubles as the `(min, +)` semiring used for arrival values and
/// latencies: its zero is `+∞` (never / absent) and its unit is `0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Time(i64);

impl Time {
    pub const INFINITY: Time = Time(i64::MAX);
    pub const ZERO: Time = Time(0);

    pub const fn new(t: i64) -> Time {
        Time(t)
    }

    pub fn is_finite(self) -> bool {
        self.0 != i64::MAX
    }

    pub fn is_infinite(self) -> bool {
        self.0 == i64::MAX
    }

    pub fn finite(self) -> Option<i64> {
        self.is_finite().then_some(self.0)
    }

    /// Raw value; `i64::MAX` for infinity.
    pub fn raw(self) -> i64 {
        self.0
    }
}

impl Add for Time {
    type Output = Time;

    fn add(self, rhs: Time) -> Time {
        if self.is_infinite() || rhs.is_infinite() {
            return Time::INFINITY;
        }
        match self.0.checked_add(rhs.0) {
            Some(v) if v != i64::MAX => Time(v),
            _ => Time::INFINITY,
        }
    }
}

impl From<i64> for Time {
    fn from(t: i64) -> Time {
        Time(t)
    }
}

impl fmt::Debug for Time {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Time {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.finite() {
            Some(t) => write!(f, "{t}"),
            None => f.write_str("inf"),
        }
    }
}

impl Serialize for Time {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.finite() {
            Some(t) => s.serialize_i64(t),
            None => s.serialize_str("inf"),
        }
    }
}

impl<'de> serde::Deserialize<'de> for Time {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Time, D::Error> {
        struct TimeVisitor;

        impl Visitor<'_> for TimeVisitor {
            type Value = Time;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer time or \"inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Time, E> {
                if v == i64::MAX {
                    return Err(E::custom("time out of range"));
                }
                Ok(Time(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Time, E> {
                i64::try_from(v).ok().filter(|&v| v != i64::MAX).map(Time).ok_or_else(|| E::custom("time out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Time, E> {
                match v {
                    "inf" => Ok(Time::INFINITY),
                    _ => Err(E::custom(format!("unexpected time {v:?}"))),
                }
            }
        }

        d.deserialize_any(TimeVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_saturates() {
        assert_eq!(Time::new(3) + Time::INFINITY, Time::INFINITY);
        assert_eq!(Time::INFINITY + Time::new(-3), Time::INFINITY);
        assert_eq!(Time::new(i64::MAX - 1) + Time::new(5), Time::INFINITY);
        assert_eq!(Time::new(2) + Time::new(3), Time::new(5));
    }

    #[test]
    fn serde_round_trip() {
        let xs = vec![Time::new(4), Time::INFINITY];
        let s = serde_json::to_string(&xs).unwrap();
        assert_eq!(s, r#"[4,"inf"]"#);
        let back: Vec<Time> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, xs);
    }
}
