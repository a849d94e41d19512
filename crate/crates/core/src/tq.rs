//! Temporal quantities: piecewise-constant functions of integer time, stored as
//! sorted, disjoint half-open intervals `[start, end)` with semiring values.
//!
//! Absence is the value's zero and is never stored. Adjacent pieces with equal
//! values are merged, so two quantities describing the same function are
//! structurally equal.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, Semiring};

/// Half-open integer interval `[start, end)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub start: i64,
    pub end: i64,
}

impl Interval {
    pub fn new(start: i64, end: i64) -> Result<Interval, TqError> {
        if start < end {
            Ok(Interval { start, end })
        } else {
            Err(TqError::InvalidInterval { start, end })
        }
    }

    pub fn contains(&self, t: i64) -> bool {
        self.start <= t && t < self.end
    }

    pub fn len(&self) -> i64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (start < end).then_some(Interval { start, end })
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.intersect(other).is_some()
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.start, self.end)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TqError {
    #[error("invalid interval [{start},{end}): start must be < end")]
    InvalidInterval { start: i64, end: i64 },
    #[error("intervals {first} and {second} overlap with different values")]
    Overlap { first: Interval, second: Interval },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TemporalQuantity<V> {
    items: Vec<(Interval, V)>,
}

impl<V: Element> Default for TemporalQuantity<V> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<V: Element> TemporalQuantity<V> {
    /// The zero quantity.
    pub fn empty() -> Self {
        TemporalQuantity { items: Vec::new() }
    }

    /// Canonicalizes raw `(start, end, value)` triples in any order.
    ///
    /// Overlapping triples are accepted only when they carry the same value.
    pub fn normalize(raw: impl IntoIterator<Item = (i64, i64, V)>) -> Result<Self, TqError> {
        let mut raw: Vec<(Interval, V)> =
            raw.into_iter().map(|(s, e, v)| Interval::new(s, e).map(|iv| (iv, v))).collect::<Result<_, _>>()?;
        raw.sort_by_key(|(iv, _)| (iv.start, iv.end));

        let mut merged: Vec<(Interval, V)> = Vec::with_capacity(raw.len());
        for (iv, v) in raw {
            if let Some((last, lv)) = merged.last_mut() {
                if iv.start < last.end {
                    if *lv != v {
                        return Err(TqError::Overlap { first: *last, second: iv });
                    }
                    last.end = last.end.max(iv.end);
                    continue;
                }
            }
            merged.push((iv, v));
        }
        Ok(Self::from_sorted(merged.into_iter().map(|(iv, v)| (iv.start, iv.end, v))))
    }

    /// Builds from pieces that are already sorted and disjoint, dropping zeros
    /// and merging equal neighbours.
    pub(crate) fn from_sorted(pieces: impl IntoIterator<Item = (i64, i64, V)>) -> Self {
        let mut b = Builder::default();
        for (s, e, v) in pieces {
            b.push(s, e, v);
        }
        b.finish()
    }

    /// `v` on `iv`, absent elsewhere.
    pub fn constant(iv: Interval, v: V) -> Self {
        Self::from_sorted([(iv.start, iv.end, v)])
    }

    pub fn get(&self, t: i64) -> Option<&V> {
        let idx = self.items.partition_point(|(iv, _)| iv.end <= t);
        self.items.get(idx).filter(|(iv, _)| iv.start <= t).map(|(_, v)| v)
    }

    /// Value at `t`; zero where nothing is stored.
    pub fn at(&self, t: i64) -> V {
        self.get(t).cloned().unwrap_or_else(V::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &(Interval, V)> + ExactSizeIterator {
        self.items.iter()
    }

    /// `(start, end, value)` triples.
    pub fn triples(&self) -> impl Iterator<Item = (i64, i64, &V)> {
        self.items.iter().map(|(iv, v)| (iv.start, iv.end, v))
    }

    /// Every stored time point with its value.
    pub fn points(&self) -> impl Iterator<Item = (i64, &V)> {
        self.items.iter().flat_map(|(iv, v)| (iv.start..iv.end).map(move |t| (t, v)))
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Smallest interval containing every stored piece.
    pub fn span(&self) -> Option<Interval> {
        match (self.items.first(), self.items.last()) {
            (Some((a, _)), Some((b, _))) => Some(Interval { start: a.start, end: b.end }),
            _ => None,
        }
    }

    pub fn map<W: Element>(&self, mut f: impl FnMut(&V) -> W) -> TemporalQuantity<W> {
        TemporalQuantity::from_sorted(self.items.iter().map(|(iv, v)| (iv.start, iv.end, f(v))))
    }

    /// Like [`map`](Self::map) but the function also sees the piece's interval.
    pub fn map_pieces<W: Element>(&self, mut f: impl FnMut(Interval, &V) -> W) -> TemporalQuantity<W> {
        TemporalQuantity::from_sorted(self.items.iter().map(|(iv, v)| (iv.start, iv.end, f(*iv, v))))
    }

    /// Pointwise combination over the common refinement of both partitions.
    ///
    /// `f` sees the zero of either side where that side is absent. It is only
    /// evaluated inside the span of the two supports, so `f(0, 0)` should be 0.
    pub fn zip_with<W: Element, X: Element>(
        &self,
        other: &TemporalQuantity<W>,
        mut f: impl FnMut(&V, &W) -> X,
    ) -> TemporalQuantity<X> {
        let mut cuts: Vec<i64> = self
            .items
            .iter()
            .flat_map(|(iv, _)| [iv.start, iv.end])
            .chain(other.items.iter().flat_map(|(iv, _)| [iv.start, iv.end]))
            .collect();
        cuts.sort_unstable();
        cuts.dedup();

        let zv = V::zero();
        let zw = W::zero();
        let (mut i, mut j) = (0, 0);
        let mut b = Builder::default();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            while i < self.items.len() && self.items[i].0.end <= lo {
                i += 1;
            }
            while j < other.items.len() && other.items[j].0.end <= lo {
                j += 1;
            }
            let a = self.items.get(i).filter(|(iv, _)| iv.start <= lo).map_or(&zv, |(_, v)| v);
            let c = other.items.get(j).filter(|(iv, _)| iv.start <= lo).map_or(&zw, |(_, v)| v);
            b.push(lo, hi, f(a, c));
        }
        b.finish()
    }

    /// The part of the quantity inside `iv`.
    pub fn restrict(&self, iv: Interval) -> Self {
        Self::from_sorted(self.items.iter().filter_map(|(p, v)| p.intersect(&iv).map(|x| (x.start, x.end, v.clone()))))
    }

    pub fn into_pieces(self) -> Vec<(Interval, V)> {
        self.items
    }
}

/// Incremental canonical builder; pieces must arrive in time order.
pub(crate) struct Builder<V> {
    items: Vec<(Interval, V)>,
}

impl<V> Default for Builder<V> {
    fn default() -> Self {
        Builder { items: Vec::new() }
    }
}

impl<V: Element> Builder<V> {
    pub(crate) fn push(&mut self, start: i64, end: i64, v: V) {
        if start >= end || v.is_zero() {
            return;
        }
        if let Some((last, lv)) = self.items.last_mut() {
            debug_assert!(last.end <= start, "pieces out of order");
            if last.end == start && *lv == v {
                last.end = end;
                return;
            }
        }
        self.items.push((Interval { start, end }, v));
    }

    pub(crate) fn finish(self) -> TemporalQuantity<V> {
        TemporalQuantity { items: self.items }
    }
}

/// Pointwise `⊕`.
pub fn tq_add<V: Semiring>(a: &TemporalQuantity<V>, b: &TemporalQuantity<V>) -> TemporalQuantity<V> {
    a.zip_with(b, |x, y| x.add(y))
}

/// Pointwise `⊙`; zero outside the intersection of the supports.
pub fn tq_mul<V: Semiring>(a: &TemporalQuantity<V>, b: &TemporalQuantity<V>) -> TemporalQuantity<V> {
    a.zip_with(b, |x, y| x.mul(y))
}

impl<V: fmt::Debug> fmt::Debug for TemporalQuantity<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (iv, v)) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {}, {:?})", iv.start, iv.end, v)?;
        }
        f.write_str("]")
    }
}

impl<V: Serialize> Serialize for TemporalQuantity<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.items.len()))?;
        for (iv, v) in &self.items {
            seq.serialize_element(&(iv.start, iv.end, v))?;
        }
        seq.end()
    }
}

impl<'de, V: Element + Deserialize<'de>> Deserialize<'de> for TemporalQuantity<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<(i64, i64, V)>::deserialize(d)?;
        TemporalQuantity::normalize(raw).map_err(de::Error::custom)
    }
}
