//! Closures against brute-force enumeration, and the triangle journey table.

mod common;

use std::collections::BTreeMap;

use common::rng;

use tqnet::netio::fixtures;
use tqnet::netio::random::{random_network, RandomParams};
use tqnet::oracle::{oracle_check, Counts, Oracle};
use tqnet::{Exec, Time};

#[test]
fn closures_match_enumeration_on_random_networks() {
    let r = &mut rng(2024);
    let mut comparisons = 0;
    for trial in 0..200 {
        let net = random_network(r, &RandomParams::default());
        let report = oracle_check(&net, Exec::Parallel).unwrap();
        assert!(report.mismatches.is_empty(), "trial {trial}: {:?}\n{}", report.mismatches, net.to_json());
        comparisons += report.comparisons;

        // The first-arrival closure alone agrees with the foremost table too.
        let fa = net.first_arrival_matrix().unwrap().closure(Exec::Parallel).unwrap();
        let o = Oracle::new(&net);
        let lt = net.lifetime();
        for u in 0..net.node_count() {
            for v in 0..net.node_count() {
                for t in lt.start..lt.end {
                    assert_eq!(fa.get(u, v).evaluate(Time::new(t)), o.foremost_arrival(u, v, t), "trial {trial}");
                }
            }
        }
    }
    assert!(comparisons > 10_000);
}

type Row = (&'static str, &'static str, &'static str, &'static [(i64, i64)]);

/// Per (ordered pair, direct or via), the earliest arrival for each first departure.
#[allow(clippy::type_complexity)]
fn journey_table() -> BTreeMap<(String, String, &'static str), Vec<(i64, i64)>> {
    let net = fixtures::triangle();
    let o = Oracle::new(&net);
    let ids = net.node_ids();
    let mut table = BTreeMap::new();
    for u in 0..3 {
        for v in (0..3).filter(|&v| v != u) {
            let mut best: BTreeMap<(&str, i64), i64> = BTreeMap::new();
            for j in o.enumerate_journeys(u, v, 1, None) {
                let kind = if j.hops.len() == 1 { "direct" } else { "via" };
                let e = best.entry((kind, j.first_departure().unwrap())).or_insert(i64::MAX);
                *e = (*e).min(j.arrival());
            }
            for ((kind, d), a) in best {
                table.entry((ids[u].clone(), ids[v].clone(), kind)).or_insert_with(Vec::new).push((d, a));
            }
        }
    }
    table
}

#[test]
fn triangle_journey_table() {
    let expected: &[Row] = &[
        ("u", "v", "direct", &[(2, 5), (7, 9)]),
        ("u", "v", "via", &[(1, 5), (5, 8)]),
        ("u", "z", "direct", &[(1, 4), (5, 6)]),
        ("u", "z", "via", &[(1, 8), (2, 8)]),
        ("v", "u", "direct", &[(2, 5), (7, 9)]),
        ("v", "u", "via", &[(4, 6)]),
        ("v", "z", "direct", &[(4, 5), (6, 8)]),
        ("v", "z", "via", &[(2, 6)]),
        ("z", "u", "direct", &[(1, 4), (5, 6)]),
        ("z", "u", "via", &[(4, 9)]),
        ("z", "v", "direct", &[(4, 5), (6, 8)]),
        ("z", "v", "via", &[(1, 8), (5, 9)]),
    ];
    let table = journey_table();
    let rows: usize = expected.iter().map(|e| e.3.len()).sum();
    assert_eq!(rows, 21);
    assert_eq!(table.len(), expected.len());
    for &(u, v, kind, pairs) in expected {
        assert_eq!(table[&(u.to_string(), v.to_string(), kind)], pairs, "{u} -> {v} {kind}");
    }
}

#[test]
fn revisiting_walk_from_z_to_v() {
    let net = fixtures::triangle();
    let o = Oracle::new(&net);
    let walk = o.enumerate_journeys(2, 1, 1, None).into_iter().find(|j| j.nodes() == vec![2, 0, 2, 1]).unwrap();
    assert_eq!((walk.first_departure(), walk.arrival()), (Some(1), 8));
}

#[test]
fn parallel_links_split_the_counts() {
    let net = fixtures::parallel_links();
    let report = oracle_check(&net, Exec::Sequential).unwrap();
    assert!(report.mismatches.is_empty());
    let flagged: Vec<_> = report.warnings.iter().map(|w| (w.from.as_str(), w.to.as_str(), w.begin, w.counts)).collect();
    assert_eq!(flagged, vec![("u", "w", 1, Counts { foremost: 2, ubiquitous: 1, chained: 1 })]);

    let o = Oracle::new(&net);
    let c = o.counts_from(0, 2)[2];
    assert_eq!(c, Counts { foremost: 1, ubiquitous: 1, chained: 1 });
}

#[test]
fn empty_network_is_trivially_equal() {
    let net = tqnet::TemporalNetwork::new(tqnet::Interval::new(1, 4).unwrap());
    let report = oracle_check(&net, Exec::Sequential).unwrap();
    assert_eq!(report.comparisons, 0);
    assert!(report.mismatches.is_empty() && report.warnings.is_empty());
}
