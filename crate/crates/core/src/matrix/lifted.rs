//! Exact carrier for traveling closures.
//!
//! Summing traveling elements keeps only the earliest arrival, which loses the
//! information the right factor of a later product may need (right
//! distributivity fails). An [`ArrivalProfile`] keeps, per begin time, every
//! reachable arrival together with the inner sum of the walks reaching it.
//! With that extra information both distributive laws hold, so Fletcher's
//! elimination is exact; projecting to the earliest entry afterwards gives
//! the `⊕` over all walks of the chained walk products.

use crate::algebra::{ClosureDiverged, Element, Generalized, Semiring, StarSemiring};
use crate::time::Time;
use crate::tq::TemporalQuantity;
use crate::traveling::TravelFun;

/// Arrival time → inner value, sorted by time, no zero values.
#[derive(Clone, Debug, PartialEq)]
pub struct Spread<A>(Vec<(Time, A)>);

impl<A: Semiring> Spread<A> {
    fn single(t: Time, a: A) -> Self {
        if a.is_zero() || t.is_infinite() {
            Spread(Vec::new())
        } else {
            Spread(vec![(t, a)])
        }
    }

    fn merge(&self, other: &Self) -> Self {
        let (xs, ys) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(xs.len() + ys.len());
        let (mut i, mut j) = (0, 0);
        while i < xs.len() || j < ys.len() {
            let next = match (xs.get(i), ys.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    (x.0, x.1.add(&y.1))
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    x.clone()
                }
                (Some(x), None) => {
                    i += 1;
                    x.clone()
                }
                (_, Some(y)) => {
                    j += 1;
                    y.clone()
                }
                (None, None) => unreachable!(),
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        Spread(out)
    }

    fn scale_left(&self, c: &A) -> Self {
        Spread(self.0.iter().map(|(t, v)| (*t, c.mul(v))).filter(|(_, v)| !v.is_zero()).collect())
    }

    /// Earliest arrival and its value.
    pub fn first(&self) -> Generalized<A> {
        self.0.first().map_or_else(Generalized::zero, |(t, v)| Generalized::new(*t, v.clone()))
    }

    pub fn entries(&self) -> &[(Time, A)] {
        &self.0
    }
}

impl<A: Semiring> Element for Spread<A> {
    fn zero() -> Self {
        Spread(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// A scaled identity plus, per begin time, the spread of reachable arrivals.
#[derive(Clone, Debug, PartialEq)]
pub struct ArrivalProfile<A> {
    pub ident: A,
    pub body: TemporalQuantity<Spread<A>>,
}

impl<A: Semiring> ArrivalProfile<A> {
    pub fn lift(x: &TravelFun<A>) -> Self {
        match x {
            TravelFun::Zero => Self::zero(),
            TravelFun::Identity(a) => ArrivalProfile { ident: a.clone(), body: TemporalQuantity::empty() },
            TravelFun::Steps(b) => ArrivalProfile { ident: A::zero(), body: b.map(|g| Spread::single(g.time, g.value.clone())) },
        }
    }

    /// Keeps only the earliest arrival per begin time.
    pub fn project(&self) -> TravelFun<A> {
        if !self.ident.is_zero() {
            return TravelFun::Identity(self.ident.clone());
        }
        TravelFun::steps(self.body.map(Spread::first))
    }

    /// `{(t, ident)} ∪ body(t)`.
    fn spread_at(&self, t: Time) -> Spread<A> {
        let own = Spread::single(t, self.ident.clone());
        match self.body.get(t.raw()) {
            Some(s) => own.merge(s),
            None => own,
        }
    }
}

impl<A: Semiring> Element for ArrivalProfile<A> {
    fn zero() -> Self {
        ArrivalProfile { ident: A::zero(), body: TemporalQuantity::empty() }
    }

    fn is_zero(&self) -> bool {
        self.ident.is_zero() && self.body.is_empty()
    }
}

impl<A: Semiring> Semiring for ArrivalProfile<A> {
    fn one() -> Self {
        ArrivalProfile { ident: A::one(), body: TemporalQuantity::empty() }
    }

    fn add(&self, rhs: &Self) -> Self {
        ArrivalProfile { ident: self.ident.add(&rhs.ident), body: self.body.zip_with(&rhs.body, Spread::merge) }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let composed =
            self.body.map(|s| s.0.iter().fold(Spread::zero(), |acc, (a, c)| acc.merge(&rhs.spread_at(*a).scale_left(c))));
        let body = if self.ident.is_zero() {
            composed
        } else {
            let scaled = rhs.body.map(|s| s.scale_left(&self.ident));
            composed.zip_with(&scaled, Spread::merge)
        };
        ArrivalProfile { ident: self.ident.mul(&rhs.ident), body }
    }
}

impl<A: Semiring> StarSemiring for ArrivalProfile<A> {
    /// `⊕_k x^k`. Arrivals grow with every power, so the series is finite
    /// unless `x` contains an identity part.
    fn star(&self) -> Result<Self, ClosureDiverged> {
        if !self.ident.is_zero() {
            return Err(ClosureDiverged("cycle with zero travel time".into()));
        }
        let bound = self.body.span().map_or(0, |s| s.len()) + 2;
        let mut acc = Self::one();
        let mut p = self.clone();
        for _ in 0..bound {
            if p.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&p);
            p = p.mul(self);
        }
        if p.is_zero() {
            Ok(acc)
        } else {
            Err(ClosureDiverged("powers of a cycle do not vanish".into()))
        }
    }
}
