use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{ClosureDiverged, Element, Semiring, StarSemiring};
use crate::time::Time;

/// Generalized geodetic value `(τ, a)` over an inner semiring `A`.
///
/// `⊞` keeps the earlier time (adding inner values on ties), `⊠` adds times and
/// multiplies inner values. Kept canonical: `τ = ∞` forces `a` to the inner zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "(Time, A)", from = "(Time, A)")]
#[serde(bound(serialize = "A: Clone + Serialize", deserialize = "A: Semiring + Deserialize<'de>"))]
pub struct Generalized<A> {
    pub time: Time,
    pub value: A,
}

impl<A: Semiring> Generalized<A> {
    pub fn new(time: Time, value: A) -> Self {
        if time.is_infinite() {
            Self::zero()
        } else {
            Generalized { time, value }
        }
    }
}

// Serialized as a `[time, value]` pair.
impl<A> From<Generalized<A>> for (Time, A) {
    fn from(g: Generalized<A>) -> Self {
        (g.time, g.value)
    }
}

impl<A: Semiring> From<(Time, A)> for Generalized<A> {
    fn from((time, value): (Time, A)) -> Self {
        Generalized::new(time, value)
    }
}

impl<A: Semiring> Element for Generalized<A> {
    fn zero() -> Self {
        Generalized { time: Time::INFINITY, value: A::zero() }
    }

    fn is_zero(&self) -> bool {
        self.time.is_infinite()
    }
}

impl<A: Semiring> Semiring for Generalized<A> {
    fn one() -> Self {
        Generalized { time: Time::ZERO, value: A::one() }
    }

    fn add(&self, rhs: &Self) -> Self {
        match self.time.cmp(&rhs.time) {
            Ordering::Less => self.clone(),
            Ordering::Greater => rhs.clone(),
            Ordering::Equal => Generalized::new(self.time, self.value.add(&rhs.value)),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Generalized::new(self.time + rhs.time, self.value.mul(&rhs.value))
    }
}

impl<A: StarSemiring> StarSemiring for Generalized<A> {
    fn star(&self) -> Result<Self, ClosureDiverged> {
        match self.time.finite() {
            None => Ok(Self::one()),
            Some(t) if t > 0 => Ok(Self::one()),
            Some(0) => Ok(Generalized { time: Time::ZERO, value: self.value.star()? }),
            Some(t) => Err(ClosureDiverged(format!("negative cycle time {t}"))),
        }
    }
}
