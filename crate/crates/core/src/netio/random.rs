//! Seeded random small networks for differential testing.

use rand::Rng;

use super::TemporalNetwork;
use crate::time::Time;
use crate::tq::{Interval, TemporalQuantity};

#[derive(Debug, Clone, Copy)]
pub struct RandomParams {
    pub max_nodes: usize,
    pub max_links: usize,
    /// Lifetime length is drawn from `3..=max_span`.
    pub max_span: i64,
    pub max_latency: i64,
    /// Chance that a link departs at any given time point.
    pub density: f64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { max_nodes: 5, max_links: 8, max_span: 12, max_latency: 4, density: 0.3 }
    }
}

/// Between 2 and `max_nodes` nodes, lifetime starting at 1, up to `max_links`
/// links (directed or not) with per-time-point departures.
pub fn random_network<R: Rng>(rng: &mut R, p: &RandomParams) -> TemporalNetwork {
    let n = rng.gen_range(2..=p.max_nodes.max(2));
    let span = rng.gen_range(3..=p.max_span.max(3));
    let lifetime = Interval::new(1, 1 + span).expect("positive span");
    let mut net = TemporalNetwork::new(lifetime);
    for k in 0..n {
        net.add_node(&format!("n{k}")).expect("unique ids");
    }
    for _ in 0..rng.gen_range(0..=p.max_links) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let mut pieces = Vec::new();
        for t in lifetime.start..lifetime.end {
            if rng.gen_bool(p.density) {
                pieces.push((t, t + 1, Time::new(rng.gen_range(1..=p.max_latency))));
            }
        }
        if pieces.is_empty() {
            continue;
        }
        let directed = rng.gen_bool(0.5);
        let lat = TemporalQuantity::normalize(pieces).expect("disjoint points");
        net.add_link(&format!("n{a}"), &format!("n{b}"), directed, lat, None).expect("known nodes");
    }
    net
}
