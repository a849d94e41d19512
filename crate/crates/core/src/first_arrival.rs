//! The first-arrival semiring: increasing, expanding step functions mapping a
//! begin time to the earliest reachable arrival time.
//!
//! `⊕` is the pointwise minimum and `f ⊙ g = g ∘ f` (first follow `f`, then
//! `g`). The identity function has no piecewise-constant encoding, so it is
//! the symbolic [`StepFun::Unit`].

use serde::ser::Serializer;
use serde::Serialize;

use crate::algebra::{ClosureDiverged, Element, Semiring, StarSemiring};
use crate::time::Time;
use crate::tq::{Builder, TemporalQuantity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatencyError {
    #[error("latency {latency} at time {time} is not a positive integer")]
    NonPositiveLatency { time: i64, latency: Time },
}

pub(crate) fn check_latency(latency: &TemporalQuantity<Time>) -> Result<(), LatencyError> {
    for (s, _, l) in latency.triples() {
        if l.finite().is_none_or(|v| v < 1) {
            return Err(LatencyError::NonPositiveLatency { time: s, latency: *l });
        }
    }
    Ok(())
}

/// Right-to-left scan over every time point of `q`'s support.
///
/// `step(t, q(t), best)` folds the point into the running value of everything
/// later. Gaps between pieces take the value of the next point after them and
/// the result is extended back to `origin` (default: the first piece's start);
/// anything before `origin` is dropped.
pub(crate) fn suffix_scan<L: Element, V: Element>(
    q: &TemporalQuantity<L>,
    origin: Option<i64>,
    mut step: impl FnMut(i64, &L, &V) -> V,
) -> TemporalQuantity<V> {
    let Some(span) = q.span() else {
        return TemporalQuantity::empty();
    };
    let origin = origin.unwrap_or(span.start);

    let mut rev: Vec<(i64, i64, V)> = Vec::new();
    let mut best = V::zero();
    let mut next_start: Option<i64> = None;
    for (iv, l) in q.iter().rev() {
        if let Some(ns) = next_start {
            if iv.end < ns {
                rev.push((iv.end, ns, best.clone()));
            }
        }
        for t in (iv.start..iv.end).rev() {
            best = step(t, l, &best);
            rev.push((t, t + 1, best.clone()));
        }
        next_start = Some(iv.start);
    }
    if origin < span.start {
        rev.push((origin, span.start, best));
    }

    let mut b = Builder::default();
    for (s, e, v) in rev.into_iter().rev() {
        if e > origin {
            b.push(s.max(origin), e, v);
        }
    }
    b.finish()
}

/// Per-time-point arrival `t + a(t)` of a latency quantity.
pub fn arrival(latency: &TemporalQuantity<Time>) -> Result<TemporalQuantity<Time>, LatencyError> {
    check_latency(latency)?;
    Ok(TemporalQuantity::from_sorted(latency.points().map(|(t, l)| (t, t + 1, Time::new(t) + *l))))
}

/// `f(t) = min_{τ ≥ t} (τ + a(τ))`, starting at the first departure.
pub fn first_arrival(latency: &TemporalQuantity<Time>) -> Result<StepFun, LatencyError> {
    first_arrival_from(latency, None)
}

/// [`first_arrival`] defined from `origin` on (typically the network lifetime
/// start), so begin times before the first departure are covered too.
pub fn first_arrival_from(latency: &TemporalQuantity<Time>, origin: Option<i64>) -> Result<StepFun, LatencyError> {
    check_latency(latency)?;
    let body = suffix_scan(latency, origin, |t, l, best: &Time| (Time::new(t) + *l).min(*best));
    Ok(StepFun::steps(body))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepFun {
    /// Never arrive.
    Zero,
    /// The identity `t ↦ t`.
    Unit,
    Steps(TemporalQuantity<Time>),
}

impl StepFun {
    /// Wraps a body; an empty body is `Zero`.
    pub fn steps(body: TemporalQuantity<Time>) -> StepFun {
        if body.is_empty() {
            StepFun::Zero
        } else {
            StepFun::Steps(body)
        }
    }

    pub fn evaluate(&self, t: Time) -> Time {
        match self {
            StepFun::Zero => Time::INFINITY,
            StepFun::Unit => t,
            StepFun::Steps(body) => match t.finite() {
                Some(t) => body.at(t),
                None => Time::INFINITY,
            },
        }
    }

    pub fn body(&self) -> Option<&TemporalQuantity<Time>> {
        match self {
            StepFun::Steps(b) => Some(b),
            _ => None,
        }
    }

    /// Later pieces never arrive earlier.
    pub fn is_nondecreasing(&self) -> bool {
        self.body().is_none_or(|b| b.iter().zip(b.iter().skip(1)).all(|((_, x), (_, y))| x <= y))
    }

    /// Every begin time `t` of a piece arrives strictly after `t`.
    pub fn is_expanding(&self) -> bool {
        self.body().is_none_or(|b| b.iter().all(|(iv, v)| *v >= Time::new(iv.end)))
    }

    pub fn is_valid(&self) -> bool {
        self.is_nondecreasing() && self.is_expanding()
    }
}

/// Pointwise minimum. `Unit` absorbs every expanding function.
pub fn fa_sum(f: &StepFun, g: &StepFun) -> StepFun {
    let r = match (f, g) {
        (StepFun::Zero, x) | (x, StepFun::Zero) => x.clone(),
        (StepFun::Unit, _) | (_, StepFun::Unit) => StepFun::Unit,
        (StepFun::Steps(a), StepFun::Steps(b)) => StepFun::steps(a.zip_with(b, |x, y| *x.min(y))),
    };
    debug_assert!(r.is_valid() || !(f.is_valid() && g.is_valid()));
    r
}

/// Composition `g ∘ f`: follow `f`, then `g`.
pub fn fa_prod(f: &StepFun, g: &StepFun) -> StepFun {
    let r = match (f, g) {
        (StepFun::Zero, _) | (_, StepFun::Zero) => StepFun::Zero,
        (StepFun::Unit, x) | (x, StepFun::Unit) => x.clone(),
        (StepFun::Steps(a), g) => StepFun::steps(a.map(|v| g.evaluate(*v))),
    };
    debug_assert!(r.is_expanding() || !(f.is_expanding() && g.is_expanding()));
    r
}

impl Element for StepFun {
    fn zero() -> Self {
        StepFun::Zero
    }

    fn is_zero(&self) -> bool {
        matches!(self, StepFun::Zero)
    }
}

impl Semiring for StepFun {
    fn one() -> Self {
        StepFun::Unit
    }

    fn add(&self, rhs: &Self) -> Self {
        fa_sum(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        fa_prod(self, rhs)
    }

    const ABSORPTIVE: bool = true;
}

impl StarSemiring for StepFun {
    fn star(&self) -> Result<Self, ClosureDiverged> {
        if self.is_expanding() {
            Ok(StepFun::Unit)
        } else {
            Err(ClosureDiverged(format!("non-expanding cycle {self:?}")))
        }
    }
}

impl Serialize for StepFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            StepFun::Zero => TemporalQuantity::<Time>::empty().serialize(s),
            StepFun::Unit => s.serialize_str("identity"),
            StepFun::Steps(b) => b.serialize(s),
        }
    }
}
