//! Printed values for the two-edge example: per-time arrivals, first
//! arrivals, counted arrivals and the traveling operations on them.

use tqnet::algebra::Count;
use tqnet::first_arrival::{arrival, fa_prod, fa_sum, first_arrival, StepFun};
use tqnet::netio::fixtures::{tq_a, tq_b};
use tqnet::traveling::{count_arrival, t_prod, t_sum, TravelFun};
use tqnet::{Generalized, TemporalQuantity, Time};

fn steps(raw: &[(i64, i64, i64)]) -> StepFun {
    StepFun::steps(TemporalQuantity::normalize(raw.iter().map(|&(s, e, t)| (s, e, Time::new(t)))).unwrap())
}

fn tf(raw: &[(i64, i64, (i64, u64))]) -> TravelFun<Count> {
    TravelFun::steps(
        TemporalQuantity::normalize(raw.iter().map(|&(s, e, (a, c))| (s, e, Generalized::new(Time::new(a), Count::Finite(c)))))
            .unwrap(),
    )
}

fn per_point(q: &TemporalQuantity<Time>) -> Vec<i64> {
    q.points().map(|(_, t)| t.raw()).collect()
}

#[test]
fn arrivals() {
    assert_eq!(per_point(&arrival(&tq_a()).unwrap()), vec![4, 4, 5, 7, 7, 8]);
    assert_eq!(per_point(&arrival(&tq_b()).unwrap()), vec![6, 5, 7, 8, 7, 8]);
}

#[test]
fn first_arrivals() {
    assert_eq!(first_arrival(&tq_b()).unwrap(), steps(&[(1, 3, 5), (3, 6, 7), (6, 7, 8)]));
    assert_eq!(first_arrival(&tq_a()).unwrap(), steps(&[(1, 3, 4), (3, 4, 5), (4, 6, 7), (6, 7, 8)]));
    assert_eq!(first_arrival(&tq_b()).unwrap().evaluate(Time::new(2)), Time::new(5));
}

#[test]
fn first_arrival_operations() {
    let (a, b) = (first_arrival(&tq_a()).unwrap(), first_arrival(&tq_b()).unwrap());
    assert_eq!(fa_sum(&a, &b), steps(&[(1, 3, 4), (3, 4, 5), (4, 6, 7), (6, 7, 8)]));
    assert_eq!(fa_prod(&a, &b), steps(&[(1, 4, 7)]));
}

#[test]
fn counted_arrivals() {
    assert_eq!(
        count_arrival::<Count>(&tq_a(), None, None).unwrap(),
        tf(&[(1, 2, (4, 2)), (2, 3, (4, 1)), (3, 4, (5, 1)), (4, 5, (7, 2)), (5, 6, (7, 1)), (6, 7, (8, 1))])
    );
    assert_eq!(
        count_arrival::<Count>(&tq_b(), None, None).unwrap(),
        tf(&[(1, 3, (5, 1)), (3, 4, (7, 2)), (4, 6, (7, 1)), (6, 7, (8, 1))])
    );
}

#[test]
fn traveling_operations() {
    let a = count_arrival::<Count>(&tq_a(), None, None).unwrap();
    let b = count_arrival::<Count>(&tq_b(), None, None).unwrap();
    assert_eq!(
        t_sum(&a, &b),
        tf(&[(1, 2, (4, 2)), (2, 3, (4, 1)), (3, 4, (5, 1)), (4, 5, (7, 3)), (5, 6, (7, 2)), (6, 7, (8, 2))])
    );
    assert_eq!(t_prod(&a, &b), tf(&[(1, 2, (7, 2)), (2, 4, (7, 1))]));
}
