//! Seeded generators and law checkers shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tqnet::algebra::{Count, Generalized, Geodetic, Length, Semiring, StarSemiring};
use tqnet::first_arrival::{first_arrival_from, StepFun};
use tqnet::tq::TemporalQuantity;
use tqnet::traveling::{count_arrival, TravelFun};
use tqnet::Time;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn count(r: &mut impl Rng) -> Count {
    if r.gen_bool(0.1) {
        Count::Infinite
    } else {
        Count::Finite(r.gen_range(0..5))
    }
}

pub fn length(r: &mut impl Rng) -> Length {
    match r.gen_range(0..10) {
        0 => Length::Infinite,
        1..=3 => Length::try_from_f64(r.gen_range(0..12) as f64 * 0.25).unwrap(),
        _ => Length::Int(r.gen_range(0..6)),
    }
}

pub fn geodetic(r: &mut impl Rng) -> Geodetic {
    Geodetic::new(length(r), count(r))
}

pub fn time(r: &mut impl Rng) -> Time {
    if r.gen_bool(0.1) {
        Time::INFINITY
    } else {
        Time::new(r.gen_range(-4..8))
    }
}

pub fn generalized(r: &mut impl Rng) -> Generalized<Count> {
    Generalized::new(time(r), count(r))
}

/// Random latency over `[0, span)`, each point active with probability 1/2.
pub fn latency(r: &mut impl Rng, span: i64, max: i64) -> TemporalQuantity<Time> {
    let mut pts = Vec::new();
    for t in 0..span {
        if r.gen_bool(0.5) {
            pts.push((t, t + 1, Time::new(r.gen_range(1..=max))));
        }
    }
    TemporalQuantity::normalize(pts).unwrap()
}

pub fn step_fun(r: &mut impl Rng) -> StepFun {
    match r.gen_range(0..10) {
        0 => StepFun::Zero,
        1 => StepFun::Unit,
        _ => first_arrival_from(&latency(r, 10, 4), Some(0)).unwrap(),
    }
}

pub fn travel_with<A: Semiring>(r: &mut impl Rng, mut inner: impl FnMut(&mut dyn rand::RngCore) -> A) -> TravelFun<A> {
    match r.gen_range(0..12) {
        0 => TravelFun::Zero,
        1 => TravelFun::unit(),
        2 => TravelFun::Identity(inner(r as &mut dyn rand::RngCore)),
        _ => {
            let lat = latency(r, 8, 3);
            let info = TemporalQuantity::normalize(
                lat.points().map(|(t, _)| (t, t + 1, inner(r as &mut dyn rand::RngCore))).collect::<Vec<_>>(),
            )
            .unwrap();
            count_arrival(&lat, Some(&info), Some(0)).unwrap()
        }
    }
}

pub fn travel_count(r: &mut impl Rng) -> TravelFun<Count> {
    travel_with(r, |r| Count::Finite(r.gen_range(1..3)))
}

pub fn travel_length(r: &mut impl Rng) -> TravelFun<Length> {
    travel_with(r, |r| Length::Int(r.gen_range(0..4)))
}

pub fn tq_count(r: &mut impl Rng) -> TemporalQuantity<Count> {
    let mut pts = Vec::new();
    for t in 0..12 {
        if r.gen_bool(0.5) {
            pts.push((t, t + 1, Count::Finite(r.gen_range(1..4))));
        }
    }
    TemporalQuantity::normalize(pts).unwrap()
}

/// Semiring axioms other than right distributivity and absorption, which
/// are checked separately because they do not hold for every instance.
pub fn core_law_violations<S: Semiring>(a: &S, b: &S, c: &S) -> Vec<&'static str> {
    let (zero, one) = (S::zero(), S::one());
    let checks = [
        ("add commutative", a.add(b) == b.add(a)),
        ("add associative", a.add(b).add(c) == a.add(&b.add(c))),
        ("add identity", a.add(&zero) == *a),
        ("mul associative", a.mul(b).mul(c) == a.mul(&b.mul(c))),
        ("mul left identity", one.mul(a) == *a),
        ("mul right identity", a.mul(&one) == *a),
        ("left annihilation", zero.mul(a) == zero),
        ("right annihilation", a.mul(&zero) == zero),
        ("left distributive", a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c))),
    ];
    checks.into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect()
}

pub fn right_distributive<S: Semiring>(a: &S, b: &S, c: &S) -> bool {
    a.add(b).mul(c) == a.mul(c).add(&b.mul(c))
}

pub fn unit_absorbs<S: Semiring>(a: &S) -> bool {
    S::one().add(a) == S::one()
}

/// `a* = 1 ⊕ a ⊙ a*` whenever the star exists.
pub fn star_fixpoint<S: StarSemiring>(a: &S) -> bool {
    match a.star() {
        Ok(s) => s == S::one().add(&a.mul(&s)),
        Err(_) => true,
    }
}
