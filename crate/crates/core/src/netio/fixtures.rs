//! Small reference networks and latency quantities used in tests, the bench
//! and the shipped `fixtures/*.json` files.

use super::TemporalNetwork;
use crate::time::Time;
use crate::tq::{Interval, TemporalQuantity};

fn latency(raw: &[(i64, i64, i64)]) -> TemporalQuantity<Time> {
    TemporalQuantity::normalize(raw.iter().map(|&(s, e, v)| (s, e, Time::new(v)))).expect("valid fixture")
}

/// `(source, target, directed, latency pieces)`.
type LinkSpec<'a> = (&'a str, &'a str, bool, &'a [(i64, i64, i64)]);

fn build(lifetime: (i64, i64), nodes: &[&str], links: &[LinkSpec]) -> TemporalNetwork {
    let mut net = TemporalNetwork::new(Interval::new(lifetime.0, lifetime.1).expect("valid lifetime"));
    for n in nodes {
        net.add_node(n).expect("unique ids");
    }
    for &(s, t, directed, lat) in links {
        net.add_link(s, t, directed, latency(lat), None).expect("known nodes");
    }
    net
}

/// Latency of edge `a` in the two-edge example.
pub fn tq_a() -> TemporalQuantity<Time> {
    latency(&[(1, 2, 3), (2, 4, 2), (4, 5, 3), (5, 7, 2)])
}

/// Latency of edge `b` in the two-edge example.
pub fn tq_b() -> TemporalQuantity<Time> {
    latency(&[(1, 2, 5), (2, 3, 3), (3, 5, 4), (5, 7, 2)])
}

/// Three nodes, three undirected edges, lifetime `[1, 10)`.
pub fn triangle() -> TemporalNetwork {
    build(
        (1, 10),
        &["u", "v", "z"],
        &[
            ("u", "v", false, &[(2, 3, 3), (7, 8, 2)]),
            ("u", "z", false, &[(1, 2, 3), (5, 6, 1)]),
            ("v", "z", false, &[(4, 5, 1), (6, 7, 2)]),
        ],
    )
}

/// Center `u` with leaves `p1..p5`; every edge has latency 5 on `[1, 10)`.
pub fn star() -> TemporalNetwork {
    let leaves: Vec<String> = (1..=5).map(|k| format!("p{k}")).collect();
    let mut nodes = vec!["u"];
    nodes.extend(leaves.iter().map(String::as_str));
    let links: Vec<_> = leaves.iter().map(|p| ("u", p.as_str(), false, &[(1, 10, 5)][..])).collect();
    build((1, 10), &nodes, &links)
}

/// Path `u - v - z` with edge `a = {u,v}` carrying [`tq_a`] and `b = {v,z}`
/// carrying [`tq_b`].
pub fn two_edges() -> TemporalNetwork {
    let mut net = build((1, 10), &["u", "v", "z"], &[]);
    net.add_link("u", "v", false, tq_a(), None).expect("known nodes");
    net.add_link("v", "z", false, tq_b(), None).expect("known nodes");
    net
}

/// Two parallel `u → v` links (arriving at 3 and at 5) feeding a single
/// `v → w` departure at 5: both routes reach `w` at 6, but only the first
/// goes through a foremost stage.
pub fn parallel_links() -> TemporalNetwork {
    build(
        (1, 8),
        &["u", "v", "w"],
        &[("u", "v", true, &[(1, 2, 2)]), ("u", "v", true, &[(2, 3, 3)]), ("v", "w", true, &[(5, 6, 1)])],
    )
}
