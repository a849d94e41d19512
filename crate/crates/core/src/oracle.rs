//! Brute-force journey enumeration: the ground truth for foremost arrivals
//! and journey counts, and the engine behind betweenness with exclusion.
//!
//! A dated journey is a sequence of hops `(departure, link, direction)`; a hop
//! may depart at any active time point of its link that is not before the
//! arrival at its tail. Latencies are at least 1, so departures strictly
//! increase and no journey has more hops than the lifetime has time points.

use serde::Serialize;

use crate::algebra::{Count, Element};
use crate::exec::Exec;
use crate::netio::{Export, TemporalNetwork};
use crate::time::Time;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("through node {0:?} must differ from both endpoints")]
    ThroughEndpoint(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Hop {
    pub departure: i64,
    pub link: usize,
    /// Undirected link traversed from its target to its source.
    pub reversed: bool,
    pub from: usize,
    pub to: usize,
    pub arrival: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DatedJourney {
    pub begin: i64,
    pub origin: usize,
    pub hops: Vec<Hop>,
}

impl DatedJourney {
    /// `v₀ … v_k`.
    pub fn nodes(&self) -> Vec<usize> {
        std::iter::once(self.origin).chain(self.hops.iter().map(|h| h.to)).collect()
    }

    pub fn destination(&self) -> usize {
        self.hops.last().map_or(self.origin, |h| h.to)
    }

    /// Final arrival; the begin time for the empty journey.
    pub fn arrival(&self) -> i64 {
        self.hops.last().map_or(self.begin, |h| h.arrival)
    }

    pub fn first_departure(&self) -> Option<i64> {
        self.hops.first().map(|h| h.departure)
    }

    pub fn duration(&self) -> i64 {
        self.arrival() - self.begin
    }

    /// Arrival minus first departure.
    pub fn strict_duration(&self) -> Option<i64> {
        self.first_departure().map(|d| self.arrival() - d)
    }

    /// Time spent at each intermediate node.
    pub fn waiting_times(&self) -> Vec<i64> {
        self.hops.windows(2).map(|w| w[1].departure - w[0].arrival).collect()
    }

    /// Arrival times at `v₀ … v_k`, starting from `start` at `v₀`.
    fn times_from(&self, start: i64) -> Vec<i64> {
        std::iter::once(start).chain(self.hops.iter().map(|h| h.arrival)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct JourneyClass {
    /// Earliest possible arrival for its begin time.
    pub foremost: bool,
    /// Every stage `v_i → v_j` (begun at the arrival at `v_i`) is foremost.
    pub ubiquitous: bool,
    /// Every hop arrives at the first arrival between its two nodes from the
    /// previous arrival, and the journey is foremost: what the traveling
    /// closure counts.
    pub chained: bool,
    /// Waits only where the node is present.
    pub regular: bool,
}

/// Per-destination journey counts for one begin time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Counts {
    pub foremost: u64,
    pub ubiquitous: u64,
    pub chained: u64,
}

#[derive(Debug, Clone, Copy)]
struct Departure {
    departure: i64,
    link: usize,
    reversed: bool,
    to: usize,
    arrival: i64,
}

/// Precomputed tables over one network. Read-only after construction.
pub struct Oracle<'a> {
    net: &'a TemporalNetwork,
    n: usize,
    start: i64,
    /// Begin times `start ..= end` are tabulated.
    rows: usize,
    /// Per node, outgoing departures sorted by `(departure, link, reversed)`.
    out: Vec<Vec<Departure>>,
    /// `[src][t - start][dst]` foremost arrival.
    foremost: Vec<Time>,
    /// `[x][y][t - start]` first arrival over the direct arcs `x → y`.
    direct: Vec<Time>,
}

impl<'a> Oracle<'a> {
    pub fn new(net: &'a TemporalNetwork) -> Self {
        let n = net.node_count();
        let lt = net.lifetime();
        let rows = (lt.end - lt.start + 1) as usize;

        let mut out: Vec<Vec<Departure>> = vec![Vec::new(); n];
        for a in net.arcs() {
            for (d, l) in a.latency.points() {
                let arrival = (Time::new(d) + *l).raw();
                out[a.from].push(Departure { departure: d, link: a.link, reversed: a.reversed, to: a.to, arrival });
            }
        }
        for o in &mut out {
            o.sort_by_key(|d| (d.departure, d.link, d.reversed));
        }

        let mut direct = vec![Time::INFINITY; n * n * rows];
        for (x, deps) in out.iter().enumerate() {
            for d in deps {
                let base = (x * n + d.to) * rows;
                let upto = ((d.departure - lt.start + 1).max(0) as usize).min(rows);
                for r in &mut direct[base..base + upto] {
                    *r = (*r).min(Time::new(d.arrival));
                }
            }
        }

        // Connection scan: departures in time order, each relaxes its head if
        // its tail was reached in time. Arrivals exceed departures, so one
        // pass suffices.
        let mut conns: Vec<(usize, Departure)> =
            out.iter().enumerate().flat_map(|(x, v)| v.iter().map(move |d| (x, *d))).collect();
        conns.sort_by_key(|(_, d)| d.departure);
        let mut foremost = vec![Time::INFINITY; n * rows * n];
        for src in 0..n {
            for r in 0..rows {
                let t = lt.start + r as i64;
                let row = &mut foremost[(src * rows + r) * n..(src * rows + r + 1) * n];
                row[src] = Time::new(t);
                for (x, d) in &conns {
                    if d.departure >= t && row[*x].finite().is_some_and(|a| a <= d.departure) {
                        row[d.to] = row[d.to].min(Time::new(d.arrival));
                    }
                }
            }
        }

        Oracle { net, n, start: lt.start, rows, out, foremost, direct }
    }

    pub fn network(&self) -> &TemporalNetwork {
        self.net
    }

    fn row_of(&self, t: i64) -> Option<usize> {
        let r = t.max(self.start) - self.start;
        (r < self.rows as i64).then_some(r as usize)
    }

    /// `T(u, v, t)`: earliest arrival at `v` leaving `u` no earlier than `t`.
    pub fn foremost_arrival(&self, u: usize, v: usize, t: i64) -> Time {
        if u == v {
            return Time::new(t);
        }
        match self.row_of(t) {
            Some(r) => self.foremost[(u * self.rows + r) * self.n + v],
            None => Time::INFINITY,
        }
    }

    /// First arrival at `v` over a single direct hop from `u`, departing no
    /// earlier than `t`.
    pub fn direct_arrival(&self, u: usize, v: usize, t: i64) -> Time {
        match self.row_of(t) {
            Some(r) => self.direct[(u * self.n + v) * self.rows + r],
            None => Time::INFINITY,
        }
    }

    /// Depth-first over all journeys from `u` with first departure ≥ `begin`,
    /// in lexicographic hop order. `visit` sees every prefix (including the
    /// empty one) and returns whether to extend it.
    pub fn walk(&self, u: usize, begin: i64, max_hops: usize, mut visit: impl FnMut(&[Hop]) -> bool) {
        let mut hops = Vec::new();
        if visit(&hops) {
            self.walk_rec(u, begin, max_hops, &mut hops, &mut visit);
        }
    }

    fn walk_rec(&self, x: usize, time: i64, left: usize, hops: &mut Vec<Hop>, visit: &mut impl FnMut(&[Hop]) -> bool) {
        if left == 0 {
            return;
        }
        let deps = &self.out[x];
        let from = deps.partition_point(|d| d.departure < time);
        for d in &deps[from..] {
            hops.push(Hop { departure: d.departure, link: d.link, reversed: d.reversed, from: x, to: d.to, arrival: d.arrival });
            if visit(hops) {
                self.walk_rec(d.to, d.arrival, left - 1, hops, visit);
            }
            hops.pop();
        }
    }

    pub fn default_max_hops(&self) -> usize {
        self.net.lifetime().len().max(0) as usize
    }

    /// Every journey `u → v` with first departure ≥ `begin`, revisits included.
    pub fn enumerate_journeys(&self, u: usize, v: usize, begin: i64, max_hops: Option<usize>) -> Vec<DatedJourney> {
        let mut out = Vec::new();
        self.walk(u, begin, max_hops.unwrap_or_else(|| self.default_max_hops()), |hops| {
            let dest = hops.last().map_or(u, |h| h.to);
            if dest == v {
                out.push(DatedJourney { begin, origin: u, hops: hops.to_vec() });
            }
            true
        });
        out
    }

    pub fn classify(&self, j: &DatedJourney) -> JourneyClass {
        let nodes = j.nodes();
        let times = j.times_from(j.begin);
        let k = nodes.len() - 1;
        let foremost = Time::new(j.arrival()) == self.foremost_arrival(j.origin, j.destination(), j.begin);
        let ubiquitous =
            (0..=k).all(|i| (i + 1..=k).all(|m| Time::new(times[m]) == self.foremost_arrival(nodes[i], nodes[m], times[i])));
        let chained = foremost
            && j.hops.iter().enumerate().all(|(i, h)| Time::new(h.arrival) == self.direct_arrival(h.from, h.to, times[i]));
        JourneyClass { foremost, ubiquitous, chained, regular: self.is_regular(j) }
    }

    fn is_regular(&self, j: &DatedJourney) -> bool {
        let present = |x: usize, from: i64, to: i64| (from..to).all(|t| self.net.nodes()[x].presence.at(t));
        let mut at = j.begin;
        j.hops.iter().all(|h| {
            let ok = present(h.from, at, h.departure);
            at = h.arrival;
            ok
        })
    }

    /// Counts per destination of journeys from `u` with begin `t`.
    pub fn counts_from(&self, u: usize, t: i64) -> Vec<Counts> {
        let targets: Vec<Time> = (0..self.n).map(|v| self.foremost_arrival(u, v, t)).collect();
        let horizon = targets.iter().filter_map(|x| x.finite()).max().unwrap_or(t);
        let mut counts = vec![Counts::default(); self.n];
        let max_hops = self.default_max_hops();
        self.walk(u, t, max_hops, |hops| {
            let j = DatedJourney { begin: t, origin: u, hops: hops.to_vec() };
            let dest = j.destination();
            if Time::new(j.arrival()) == targets[dest] {
                let c = self.classify(&j);
                counts[dest].foremost += 1;
                counts[dest].ubiquitous += c.ubiquitous as u64;
                counts[dest].chained += c.chained as u64;
            }
            j.arrival() < horizon
        });
        counts
    }

    pub fn count_foremost_at(&self, u: usize, v: usize, t: i64) -> u64 {
        self.counts_from(u, t)[v].foremost
    }

    pub fn count_ubiquitous_at(&self, u: usize, v: usize, t: i64) -> u64 {
        self.counts_from(u, t)[v].ubiquitous
    }

    pub fn count_chained_at(&self, u: usize, v: usize, t: i64) -> u64 {
        self.counts_from(u, t)[v].chained
    }

    /// Distinct dated journeys `u → w` (by hop sequence, first departure
    /// anywhere in the lifetime) that are ubiquitous foremost for the begin
    /// time equal to their own first departure `d`.
    ///
    /// With `through = Some(v)` only journeys visiting `v` are counted, and
    /// "foremost" means the earliest arrival among such journeys,
    /// `T(v, w, T(u, v, d))`. Stages between distinct nodes other than the
    /// whole journey must be globally foremost; stages from a node back to
    /// itself are not constrained.
    pub fn count_distinct_ubiquitous(&self, u: usize, w: usize, through: Option<usize>) -> u64 {
        let mut count = 0;
        self.walk(u, self.start, self.default_max_hops(), |hops| {
            let Some(first) = hops.first() else { return true };
            let d = first.departure;
            let last = hops.last().expect("non-empty");
            let visited_through = through.is_none_or(|v| hops[..hops.len() - 1].iter().any(|h| h.to == v));
            if last.to == w && visited_through && self.stages_foremost(u, d, hops) {
                let target = match through {
                    Some(v) => match self.foremost_arrival(u, v, d).finite() {
                        Some(tv) => self.foremost_arrival(v, w, tv),
                        None => Time::INFINITY,
                    },
                    None => self.foremost_arrival(u, w, d),
                };
                if Time::new(last.arrival) == target {
                    count += 1;
                }
            }
            // Any extension keeps the stage u → last.to, so it must already be foremost.
            last.to == u || Time::new(last.arrival) == self.foremost_arrival(u, last.to, d)
        });
        count
    }

    /// Stage condition for all pairs `i < j` except the whole journey and
    /// pairs of equal nodes, with `v₀` left at `d`.
    fn stages_foremost(&self, u: usize, d: i64, hops: &[Hop]) -> bool {
        let j = DatedJourney { begin: d, origin: u, hops: hops.to_vec() };
        let nodes = j.nodes();
        let times = j.times_from(d);
        let k = nodes.len() - 1;
        (0..=k).all(|i| {
            (i + 1..=k).all(|m| {
                (i == 0 && m == k)
                    || nodes[i] == nodes[m]
                    || Time::new(times[m]) == self.foremost_arrival(nodes[i], nodes[m], times[i])
            })
        })
    }
}

fn index(net: &TemporalNetwork, id: &str) -> Result<usize, OracleError> {
    net.node_index(id).ok_or_else(|| OracleError::UnknownNode(id.to_string()))
}

pub fn enumerate_journeys(
    net: &TemporalNetwork,
    u: &str,
    v: &str,
    begin: i64,
    max_hops: Option<usize>,
) -> Result<Vec<DatedJourney>, OracleError> {
    let (u, v) = (index(net, u)?, index(net, v)?);
    Ok(Oracle::new(net).enumerate_journeys(u, v, begin, max_hops))
}

pub fn foremost_arrival(net: &TemporalNetwork, u: &str, v: &str, t: i64) -> Result<Time, OracleError> {
    let (u, v) = (index(net, u)?, index(net, v)?);
    Ok(Oracle::new(net).foremost_arrival(u, v, t))
}

pub fn count_ubiquitous_at(net: &TemporalNetwork, u: &str, v: &str, t: i64) -> Result<u64, OracleError> {
    let (u, v) = (index(net, u)?, index(net, v)?);
    Ok(Oracle::new(net).count_ubiquitous_at(u, v, t))
}

pub fn count_chained_at(net: &TemporalNetwork, u: &str, v: &str, t: i64) -> Result<u64, OracleError> {
    let (u, v) = (index(net, u)?, index(net, v)?);
    Ok(Oracle::new(net).count_chained_at(u, v, t))
}

pub fn count_distinct_ubiquitous(net: &TemporalNetwork, u: &str, w: &str, through: Option<&str>) -> Result<u64, OracleError> {
    let (ui, wi) = (index(net, u)?, index(net, w)?);
    let through = match through {
        Some(v) if v == u || v == w => return Err(OracleError::ThroughEndpoint(v.to_string())),
        Some(v) => Some(index(net, v)?),
        None => None,
    };
    Ok(Oracle::new(net).count_distinct_ubiquitous(ui, wi, through))
}

/// A journey with node labels, derived times and its classification.
#[derive(Debug, Clone, Serialize)]
pub struct JourneyRecord {
    pub begin: i64,
    pub nodes: Vec<String>,
    pub hops: Vec<HopRecord>,
    pub arrival: i64,
    pub duration: i64,
    pub strict_duration: Option<i64>,
    pub waiting: Vec<i64>,
    pub class: JourneyClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct HopRecord {
    pub from: String,
    pub to: String,
    pub link: usize,
    pub departure: i64,
    pub arrival: i64,
}

impl JourneyRecord {
    pub fn new(oracle: &Oracle<'_>, j: &DatedJourney) -> Self {
        let id = |x: usize| oracle.network().nodes()[x].id.clone();
        JourneyRecord {
            begin: j.begin,
            nodes: j.nodes().into_iter().map(id).collect(),
            hops: j
                .hops
                .iter()
                .map(|h| HopRecord { from: id(h.from), to: id(h.to), link: h.link, departure: h.departure, arrival: h.arrival })
                .collect(),
            arrival: j.arrival(),
            duration: j.duration(),
            strict_duration: j.strict_duration(),
            waiting: j.waiting_times(),
            class: oracle.classify(j),
        }
    }
}

/// One row per hop (a single hop-less row for the empty journey).
impl Export for [JourneyRecord] {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["journey", "begin", "hop", "from", "to", "departure", "arrival", "foremost", "ubiquitous", "chained", "regular"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for (k, j) in self.iter().enumerate() {
            let flags = [j.class.foremost, j.class.ubiquitous, j.class.chained, j.class.regular].map(|b| b.to_string());
            let mut push = |hop: String, from: &str, to: &str, dep: String, arr: String| {
                let mut r = vec![k.to_string(), j.begin.to_string(), hop, from.to_string(), to.to_string(), dep, arr];
                r.extend(flags.iter().cloned());
                rows.push(r);
            };
            if j.hops.is_empty() {
                push(String::new(), &j.nodes[0], &j.nodes[0], String::new(), j.arrival.to_string());
            }
            for (i, h) in j.hops.iter().enumerate() {
                push(i.to_string(), &h.from, &h.to, h.departure.to_string(), h.arrival.to_string());
            }
        }
        rows
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// A disagreement between the closure and the enumeration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub from: String,
    pub to: String,
    pub begin: i64,
    pub what: &'static str,
    pub closure: String,
    pub oracle: String,
}

/// `(u, v, t)` where foremost, pairwise-ubiquitous and chained counts differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Divergence {
    pub from: String,
    pub to: String,
    pub begin: i64,
    pub counts: Counts,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub networks: usize,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
    pub warnings: Vec<Divergence>,
}

impl CheckReport {
    pub fn merge(&mut self, other: CheckReport) {
        self.networks += other.networks;
        self.comparisons += other.comparisons;
        self.mismatches.extend(other.mismatches);
        self.warnings.extend(other.warnings);
    }
}

/// Compares the traveling closure (combinatorial inner) with enumeration for
/// every ordered pair and every begin time in the lifetime.
pub fn oracle_check(net: &TemporalNetwork, exec: Exec) -> Result<CheckReport, crate::algebra::ClosureDiverged> {
    let closure = net.travel_matrix::<Count>().map_err(|e| crate::algebra::ClosureDiverged(e.to_string()))?.closure(exec)?;
    let oracle = Oracle::new(net);
    let ids = net.node_ids();
    let lt = net.lifetime();
    let per_source = exec.map(net.node_count(), |u| {
        let mut r = CheckReport::default();
        for t in lt.start..lt.end {
            let counts = oracle.counts_from(u, t);
            for (v, c) in counts.iter().enumerate() {
                let e = closure.get(u, v).evaluate(Time::new(t));
                let f = oracle.foremost_arrival(u, v, t);
                let n = if e.is_zero() { Count::zero() } else { e.value };
                r.comparisons += 1;
                let mut mismatch = |what, closure: String, oracle: String| {
                    r.mismatches.push(Mismatch { from: ids[u].clone(), to: ids[v].clone(), begin: t, what, closure, oracle })
                };
                if e.time != f {
                    mismatch("arrival", e.time.to_string(), f.to_string());
                }
                if n != Count::Finite(c.chained) {
                    mismatch("count", n.to_string(), c.chained.to_string());
                }
                if !(c.foremost == c.ubiquitous && c.ubiquitous == c.chained) {
                    r.warnings.push(Divergence { from: ids[u].clone(), to: ids[v].clone(), begin: t, counts: *c });
                }
            }
        }
        r
    });
    let mut report = CheckReport { networks: 1, ..CheckReport::default() };
    for r in per_source {
        report.merge(r);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netio::fixtures;

    /// Earliest arrival per first departure.
    fn pairs(js: &[DatedJourney]) -> Vec<(i64, i64)> {
        let mut best = std::collections::BTreeMap::new();
        for j in js {
            let e = best.entry(j.first_departure().unwrap()).or_insert(i64::MAX);
            *e = (*e).min(j.arrival());
        }
        best.into_iter().collect()
    }

    #[test]
    fn triangle_u_to_v() {
        let net = fixtures::triangle();
        let js = enumerate_journeys(&net, "u", "v", 1, None).unwrap();
        let direct: Vec<_> = js.iter().filter(|j| j.hops.len() == 1).cloned().collect();
        assert_eq!(pairs(&direct), vec![(2, 5), (7, 9)]);
        let via: Vec<_> = js.iter().filter(|j| j.nodes() == vec![0, 2, 1]).cloned().collect();
        assert_eq!(pairs(&via), vec![(1, 5), (5, 8)]);
    }

    #[test]
    fn revisiting_walk_is_enumerated() {
        let net = fixtures::triangle();
        let js = enumerate_journeys(&net, "z", "v", 1, None).unwrap();
        assert!(js.iter().any(|j| j.nodes() == vec![2, 0, 2, 1] && j.first_departure() == Some(1) && j.arrival() == 8));
    }

    #[test]
    fn empty_journey() {
        let net = fixtures::triangle();
        let js = enumerate_journeys(&net, "u", "u", 3, Some(0)).unwrap();
        assert_eq!(js.len(), 1);
        assert!(js[0].hops.is_empty());
        assert_eq!(js[0].arrival(), 3);
    }

    #[test]
    fn foremost_values() {
        let net = fixtures::triangle();
        assert_eq!(foremost_arrival(&net, "u", "v", 1).unwrap(), Time::new(5));
        assert_eq!(foremost_arrival(&net, "u", "v", 6).unwrap(), Time::new(9));
        assert_eq!(foremost_arrival(&net, "u", "u", 4).unwrap(), Time::new(4));
        assert!(matches!(foremost_arrival(&net, "u", "q", 1), Err(OracleError::UnknownNode(_))));
    }

    #[test]
    fn classification() {
        let net = fixtures::two_edges();
        let o = Oracle::new(&net);
        // u -> v departing 3 (arrive 5), v -> z departing 5 (arrive 7).
        let j = o
            .enumerate_journeys(0, 2, 1, None)
            .into_iter()
            .find(|j| j.hops.len() == 2 && j.hops[0].departure == 3 && j.hops[1].departure == 5)
            .unwrap();
        let c = o.classify(&j);
        assert!(c.foremost && !c.ubiquitous);

        let tri = fixtures::triangle();
        let o = Oracle::new(&tri);
        let j = o.enumerate_journeys(0, 1, 1, None).into_iter().find(|j| j.nodes() == vec![0, 2, 1] && j.arrival() == 5).unwrap();
        let c = o.classify(&j);
        assert!(c.ubiquitous && c.chained && c.regular);
    }

    #[test]
    fn counts() {
        assert_eq!(count_chained_at(&fixtures::two_edges(), "u", "z", 1).unwrap(), 2);
        assert_eq!(count_ubiquitous_at(&fixtures::triangle(), "u", "v", 1).unwrap(), 2);
        let empty = TemporalNetwork::new(crate::tq::Interval::new(1, 5).unwrap());
        let mut two = empty.clone();
        two.add_node("a").unwrap();
        two.add_node("b").unwrap();
        assert_eq!(count_ubiquitous_at(&two, "a", "b", 1).unwrap(), 0);
    }

    #[test]
    fn distinct_ubiquitous() {
        let net = fixtures::triangle();
        assert_eq!(count_distinct_ubiquitous(&net, "u", "v", Some("z")).unwrap(), 2);
        assert_eq!(count_distinct_ubiquitous(&net.remove_node("z").unwrap(), "u", "v", None).unwrap(), 2);
        assert_eq!(count_distinct_ubiquitous(&net, "v", "u", Some("z")).unwrap(), 1);
        assert!(matches!(count_distinct_ubiquitous(&net, "v", "u", Some("u")), Err(OracleError::ThroughEndpoint(_))));
    }

    #[test]
    fn triangle_check_is_clean() {
        let r = oracle_check(&fixtures::triangle(), Exec::Sequential).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        assert!(r.warnings.is_empty(), "{:?}", r.warnings);
        assert_eq!(r.comparisons, 3 * 3 * 9);
    }

    #[test]
    fn parallel_links_flags_the_non_foremost_stage() {
        let net = fixtures::parallel_links();
        let r = oracle_check(&net, Exec::Sequential).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        let w = r.warnings.iter().find(|d| d.from == "u" && d.to == "w" && d.begin == 1).unwrap();
        assert_eq!(w.counts, Counts { foremost: 2, ubiquitous: 1, chained: 1 });
    }
}
