//! Traveling semirings: a first-arrival function paired with an inner-semiring
//! value per begin time (journey counts, lengths, ...).
//!
//! Addition keeps whichever side arrives first and combines inner values on
//! ties. Multiplication chains: `(x ⋄ y)(t) = (g(f(t)), n(t) ⊙ m(f(t)))`.
//!
//! Multiplication distributes over addition from the left only. When two
//! summands arrive at different times but the right factor maps both to the
//! same arrival, `(x ⊕ y) ⋄ h` drops the later one's contribution while
//! `x ⋄ h ⊕ y ⋄ h` counts it. Matrix closures therefore go through an exact
//! lifted carrier; see [`crate::matrix`].

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::{ClosureDiverged, Element, Generalized, Semiring, StarSemiring};
use crate::first_arrival::{check_latency, suffix_scan, LatencyError, StepFun};
use crate::time::Time;
use crate::tq::TemporalQuantity;

#[derive(Debug, Clone, PartialEq)]
pub enum TravelFun<A> {
    /// Never arrive.
    Zero,
    /// `t ↦ (t, a)`: arrive immediately, with inner value `a`. The unit is
    /// `Identity(1)`; sums of units give scaled identities.
    Identity(A),
    /// Per begin time, `(first arrival, inner value)`.
    Steps(TemporalQuantity<Generalized<A>>),
}

impl<A: Semiring> TravelFun<A> {
    pub fn unit() -> Self {
        TravelFun::Identity(A::one())
    }

    pub fn identity(a: A) -> Self {
        if a.is_zero() {
            TravelFun::Zero
        } else {
            TravelFun::Identity(a)
        }
    }

    /// Wraps a body, dropping pairs whose inner value is zero.
    pub fn steps(body: TemporalQuantity<Generalized<A>>) -> Self {
        let body = if body.iter().any(|(_, g)| g.value.is_zero()) {
            body.map(|g| if g.value.is_zero() { Generalized::zero() } else { g.clone() })
        } else {
            body
        };
        if body.is_empty() {
            TravelFun::Zero
        } else {
            TravelFun::Steps(body)
        }
    }

    pub fn evaluate(&self, t: Time) -> Generalized<A> {
        match self {
            TravelFun::Zero => Generalized::zero(),
            TravelFun::Identity(a) => Generalized::new(t, a.clone()),
            TravelFun::Steps(body) => match t.finite() {
                Some(t) => body.at(t),
                None => Generalized::zero(),
            },
        }
    }

    /// The first-arrival projection.
    pub fn first_component(&self) -> StepFun {
        match self {
            TravelFun::Zero => StepFun::Zero,
            TravelFun::Identity(_) => StepFun::Unit,
            TravelFun::Steps(body) => StepFun::steps(body.map(|g| g.time)),
        }
    }

    pub fn body(&self) -> Option<&TemporalQuantity<Generalized<A>>> {
        match self {
            TravelFun::Steps(b) => Some(b),
            _ => None,
        }
    }

    pub fn is_expanding(&self) -> bool {
        self.first_component().is_expanding()
    }
}

/// `(f, n)(t) = ⊞_{τ ≥ t} (τ + a(τ), i(τ))`: the first arrival from `t` on and
/// the inner sum over departures achieving it.
///
/// Without `info`, every departure carries the inner unit.
pub fn count_arrival<A: Semiring>(
    latency: &TemporalQuantity<Time>,
    info: Option<&TemporalQuantity<A>>,
    origin: Option<i64>,
) -> Result<TravelFun<A>, LatencyError> {
    check_latency(latency)?;
    let body = suffix_scan(latency, origin, |t, l, best: &Generalized<A>| {
        let i = info.map_or_else(A::one, |q| q.at(t));
        if i.is_zero() {
            best.clone()
        } else {
            Generalized::new(Time::new(t) + *l, i).add(best)
        }
    });
    Ok(TravelFun::steps(body))
}

/// Arrive-first addition.
pub fn t_sum<A: Semiring>(x: &TravelFun<A>, y: &TravelFun<A>) -> TravelFun<A> {
    match (x, y) {
        (TravelFun::Zero, o) | (o, TravelFun::Zero) => o.clone(),
        (TravelFun::Identity(a), TravelFun::Identity(b)) => TravelFun::identity(a.add(b)),
        // An expanding function never arrives at its own begin time.
        (i @ TravelFun::Identity(_), _) | (_, i @ TravelFun::Identity(_)) => i.clone(),
        (TravelFun::Steps(a), TravelFun::Steps(b)) => TravelFun::steps(a.zip_with(b, |p, q| p.add(q))),
    }
}

/// Chained multiplication: follow `x`, then `y` from wherever `x` arrived.
pub fn t_prod<A: Semiring>(x: &TravelFun<A>, y: &TravelFun<A>) -> TravelFun<A> {
    match (x, y) {
        (TravelFun::Zero, _) | (_, TravelFun::Zero) => TravelFun::Zero,
        (TravelFun::Identity(a), TravelFun::Identity(b)) => TravelFun::identity(a.mul(b)),
        (TravelFun::Identity(a), TravelFun::Steps(b)) => TravelFun::steps(b.map(|g| Generalized::new(g.time, a.mul(&g.value)))),
        (TravelFun::Steps(a), y) => TravelFun::steps(a.map(|g| {
            let r = y.evaluate(g.time);
            Generalized::new(r.time, g.value.mul(&r.value))
        })),
    }
}

impl<A: Semiring> Element for TravelFun<A> {
    fn zero() -> Self {
        TravelFun::Zero
    }

    fn is_zero(&self) -> bool {
        matches!(self, TravelFun::Zero)
    }
}

impl<A: Semiring> Semiring for TravelFun<A> {
    fn one() -> Self {
        TravelFun::unit()
    }

    fn add(&self, rhs: &Self) -> Self {
        t_sum(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        t_prod(self, rhs)
    }
}

impl<A: StarSemiring> StarSemiring for TravelFun<A> {
    fn star(&self) -> Result<Self, ClosureDiverged> {
        match self {
            TravelFun::Zero => Ok(TravelFun::unit()),
            TravelFun::Identity(a) => Ok(TravelFun::identity(a.star()?)),
            TravelFun::Steps(_) if self.is_expanding() => Ok(TravelFun::unit()),
            TravelFun::Steps(_) => Err(ClosureDiverged(format!("non-expanding cycle {self:?}"))),
        }
    }
}

impl<A: Semiring + Serialize> Serialize for TravelFun<A> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TravelFun::Zero => s.collect_seq(std::iter::empty::<()>()),
            TravelFun::Identity(a) if *a == A::one() => s.serialize_str("identity"),
            TravelFun::Identity(a) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("identity", a)?;
                m.end()
            }
            TravelFun::Steps(b) => b.serialize(s),
        }
    }
}
