//! Temporal network model, JSON format, validation and result export.
//!
//! File format:
//!
//! ```json
//! {
//!   "lifetime": {"start": 1, "end": 10},
//!   "nodes": [{"id": "u"}, {"id": "v", "presence": [[1, 10]]}],
//!   "links": [{"source": "u", "target": "v", "directed": false,
//!              "latency": [[2, 3, 3], [7, 8, 2]], "info": [[2, 3, 1.5]]}]
//! }
//! ```
//!
//! Intervals are half-open `[start, end)`. Omitted presence means the whole
//! lifetime; omitted info means every departure carries the inner unit.

mod export;
pub mod fixtures;
pub mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use export::{export_results, Export, Format};

use crate::algebra::{Element, FromWeight, Semiring};
use crate::first_arrival::{fa_sum, first_arrival_from, LatencyError, StepFun};
use crate::matrix::SquareMatrix;
use crate::time::Time;
use crate::tq::{Interval, TemporalQuantity, TqError};
use crate::traveling::{count_arrival, t_sum, TravelFun};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NetError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("network is invalid: {}", join(.0))]
    Validation(Vec<Violation>),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("unsupported format {0:?} (expected csv or json)")]
    UnsupportedFormat(String),
    #[error("link {link}: {message}")]
    Weight { link: usize, message: String },
    #[error(transparent)]
    Latency(#[from] LatencyError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A link is active while an endpoint is absent.
    Consistency,
    NonPositiveLatency,
    InvalidWeight,
    /// Data lying entirely outside the lifetime.
    OutsideLifetime,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub entity: String,
    pub interval: Interval,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Consistency => "active while an endpoint is absent",
            ViolationKind::NonPositiveLatency => "latency below 1",
            ViolationKind::InvalidWeight => "negative or non-finite info weight",
            ViolationKind::OutsideLifetime => "outside the lifetime",
        };
        write!(f, "{} on {}: {}", self.entity, self.interval, what)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: String,
    pub presence: TemporalQuantity<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub source: usize,
    pub target: usize,
    pub directed: bool,
    pub latency: TemporalQuantity<Time>,
    pub info: Option<TemporalQuantity<Option<f64>>>,
}

/// One traversal direction of a link, restricted to the lifetime.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub link: usize,
    pub from: usize,
    pub to: usize,
    /// Traverses an undirected link from target to source.
    pub reversed: bool,
    pub latency: TemporalQuantity<Time>,
    pub info: Option<TemporalQuantity<Option<f64>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TemporalNetwork {
    lifetime: Interval,
    nodes: Vec<Node>,
    links: Vec<Link>,
}

impl TemporalNetwork {
    pub fn new(lifetime: Interval) -> Self {
        TemporalNetwork { lifetime, nodes: Vec::new(), links: Vec::new() }
    }

    /// Adds a node present over the whole lifetime; returns its index.
    pub fn add_node(&mut self, id: &str) -> Result<usize, NetError> {
        let presence = TemporalQuantity::constant(self.lifetime, true);
        self.add_node_with_presence(id, presence)
    }

    pub fn add_node_with_presence(&mut self, id: &str, presence: TemporalQuantity<bool>) -> Result<usize, NetError> {
        if self.node_index(id).is_some() {
            return Err(NetError::Schema(format!("duplicate node id {id:?}")));
        }
        self.nodes.push(Node { id: id.to_string(), presence });
        Ok(self.nodes.len() - 1)
    }

    pub fn add_link(
        &mut self,
        source: &str,
        target: &str,
        directed: bool,
        latency: TemporalQuantity<Time>,
        info: Option<TemporalQuantity<Option<f64>>>,
    ) -> Result<usize, NetError> {
        let source = self.require(source)?;
        let target = self.require(target)?;
        self.links.push(Link { source, target, directed, latency, info });
        Ok(self.links.len() - 1)
    }

    fn require(&self, id: &str) -> Result<usize, NetError> {
        self.node_index(id).ok_or_else(|| NetError::UnknownNode(id.to_string()))
    }

    pub fn lifetime(&self) -> Interval {
        self.lifetime
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn node_ids(&self) -> Vec<String> {
        self.nodes.iter().map(|n| n.id.clone()).collect()
    }

    fn link_name(&self, k: usize) -> String {
        let l = &self.links[k];
        let arrow = if l.directed { "->" } else { "-" };
        format!("link {k} ({}{arrow}{})", self.nodes[l.source].id, self.nodes[l.target].id)
    }

    /// Every violation of positivity, weight sanity, the lifetime bounds and
    /// the consistency condition (a link is active only while both endpoints
    /// are present). Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let lt = self.lifetime;
        for n in &self.nodes {
            for (iv, _) in n.presence.iter() {
                if !iv.overlaps(&lt) {
                    out.push(Violation { kind: ViolationKind::OutsideLifetime, entity: format!("node {}", n.id), interval: *iv });
                }
            }
        }
        for (k, l) in self.links.iter().enumerate() {
            let name = self.link_name(k);
            for (iv, lat) in l.latency.iter() {
                if lat.finite().is_none_or(|v| v < 1) {
                    out.push(Violation { kind: ViolationKind::NonPositiveLatency, entity: name.clone(), interval: *iv });
                }
                if !iv.overlaps(&lt) {
                    out.push(Violation { kind: ViolationKind::OutsideLifetime, entity: name.clone(), interval: *iv });
                }
            }
            for (iv, w) in l.info.iter().flat_map(|q| q.iter()) {
                if w.is_some_and(|w| !(w.is_finite() && w >= 0.0)) {
                    out.push(Violation { kind: ViolationKind::InvalidWeight, entity: name.clone(), interval: *iv });
                }
            }
            let mut ends = vec![l.source];
            if l.target != l.source {
                ends.push(l.target);
            }
            for e in ends {
                let bad = l.latency.zip_with(&self.nodes[e].presence, |lat, present| !lat.is_zero() && !*present);
                for (iv, _) in bad.iter() {
                    out.push(Violation {
                        kind: ViolationKind::Consistency,
                        entity: format!("{name} at node {}", self.nodes[e].id),
                        interval: *iv,
                    });
                }
            }
        }
        out
    }

    /// The network without `id` and every link incident to it.
    pub fn remove_node(&self, id: &str) -> Result<TemporalNetwork, NetError> {
        let v = self.require(id)?;
        let remap = |x: usize| if x > v { x - 1 } else { x };
        let mut nodes = self.nodes.clone();
        nodes.remove(v);
        let links = self
            .links
            .iter()
            .filter(|l| l.source != v && l.target != v)
            .map(|l| Link { source: remap(l.source), target: remap(l.target), ..l.clone() })
            .collect();
        Ok(TemporalNetwork { lifetime: self.lifetime, nodes, links })
    }

    /// The same network with nodes listed in a different order: new index `k`
    /// is old index `perm[k]`.
    pub fn permute_nodes(&self, perm: &[usize]) -> TemporalNetwork {
        assert_eq!(perm.len(), self.nodes.len());
        let mut inv = vec![0; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        TemporalNetwork {
            lifetime: self.lifetime,
            nodes: perm.iter().map(|&p| self.nodes[p].clone()).collect(),
            links: self.links.iter().map(|l| Link { source: inv[l.source], target: inv[l.target], ..l.clone() }).collect(),
        }
    }

    /// Directed traversals; undirected links give two arcs sharing the
    /// latency. Departures outside the lifetime are dropped.
    pub fn arcs(&self) -> Vec<Arc> {
        let lt = self.lifetime;
        let mut out = Vec::new();
        for (k, l) in self.links.iter().enumerate() {
            let latency = l.latency.restrict(lt);
            let info = l.info.as_ref().map(|q| q.restrict(lt));
            let arc = |from, to, reversed| Arc { link: k, from, to, reversed, latency: latency.clone(), info: info.clone() };
            out.push(arc(l.source, l.target, false));
            if !l.directed && l.source != l.target {
                out.push(arc(l.target, l.source, true));
            }
        }
        out
    }

    /// Entry `(u, v)`: the first-arrival function over all arcs `u → v`.
    pub fn first_arrival_matrix(&self) -> Result<SquareMatrix<StepFun>, NetError> {
        let mut m: SquareMatrix<StepFun> = SquareMatrix::zero(self.node_ids());
        for a in self.arcs() {
            let f = first_arrival_from(&a.latency, Some(self.lifetime.start))?;
            let cur = m.get(a.from, a.to).clone();
            m.set(a.from, a.to, fa_sum(&cur, &f));
        }
        Ok(m)
    }

    /// Entry `(u, v)`: the traveling function over all arcs `u → v`, with info
    /// weights read into the inner semiring `A`.
    pub fn travel_matrix<A: FromWeight>(&self) -> Result<SquareMatrix<TravelFun<A>>, NetError> {
        let mut m: SquareMatrix<TravelFun<A>> = SquareMatrix::zero(self.node_ids());
        for a in self.arcs() {
            let info = match &a.info {
                None => None,
                Some(q) => Some(weights::<A>(q).map_err(|message| NetError::Weight { link: a.link, message })?),
            };
            let f = count_arrival(&a.latency, info.as_ref(), Some(self.lifetime.start))?;
            let cur = m.get(a.from, a.to).clone();
            m.set(a.from, a.to, t_sum(&cur, &f));
        }
        Ok(m)
    }

    /// Walks are at most as long as the lifetime, plus one round to confirm.
    pub fn iteration_bound(&self) -> usize {
        self.lifetime.len() as usize + 2
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&RawNetwork::from(self)).expect("serializable");
        s.push('\n');
        s
    }
}

fn weights<A: Semiring + FromWeight>(q: &TemporalQuantity<Option<f64>>) -> Result<TemporalQuantity<A>, String> {
    let pieces = q
        .triples()
        .map(|(s, e, w)| A::from_weight(w.expect("stored weights are present")).map(|a| (s, e, a)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TemporalQuantity::from_sorted(pieces))
}

/// Parses and validates a network document.
pub fn parse_network(bytes: &[u8]) -> Result<TemporalNetwork, NetError> {
    let net = parse_network_unvalidated(bytes)?;
    let v = net.validate();
    if v.is_empty() {
        Ok(net)
    } else {
        Err(NetError::Validation(v))
    }
}

/// Parses a document and resolves references without checking the
/// consistency condition or latency positivity.
pub fn parse_network_unvalidated(bytes: &[u8]) -> Result<TemporalNetwork, NetError> {
    let raw: RawNetwork = serde_json::from_slice(bytes).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => NetError::Schema(e.to_string()),
        _ => NetError::Parse(e.to_string()),
    })?;
    raw.resolve()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLifetime {
    start: i64,
    end: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    presence: Option<Vec<(i64, i64)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLink {
    source: String,
    target: String,
    directed: bool,
    latency: Vec<(i64, i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    info: Option<Vec<(i64, i64, f64)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNetwork {
    lifetime: RawLifetime,
    nodes: Vec<RawNode>,
    links: Vec<RawLink>,
}

fn schema(what: &str, e: TqError) -> NetError {
    NetError::Schema(format!("{what}: {e}"))
}

impl RawNetwork {
    fn resolve(self) -> Result<TemporalNetwork, NetError> {
        let lifetime = Interval::new(self.lifetime.start, self.lifetime.end).map_err(|e| schema("lifetime", e))?;
        let mut net = TemporalNetwork::new(lifetime);
        for n in self.nodes {
            let presence = match n.presence {
                None => TemporalQuantity::constant(lifetime, true),
                Some(p) => TemporalQuantity::normalize(p.into_iter().map(|(s, e)| (s, e, true)))
                    .map_err(|e| schema(&format!("node {:?} presence", n.id), e))?,
            };
            net.add_node_with_presence(&n.id, presence)?;
        }
        for (k, l) in self.links.into_iter().enumerate() {
            let latency = TemporalQuantity::normalize(l.latency.into_iter().map(|(s, e, v)| (s, e, Time::new(v))))
                .map_err(|e| schema(&format!("link {k} latency"), e))?;
            let info = l
                .info
                .map(|i| TemporalQuantity::normalize(i.into_iter().map(|(s, e, v)| (s, e, Some(v)))))
                .transpose()
                .map_err(|e| schema(&format!("link {k} info"), e))?;
            net.add_link(&l.source, &l.target, l.directed, latency, info).map_err(|e| match e {
                NetError::UnknownNode(id) => NetError::Schema(format!("link {k} references unknown node {id:?}")),
                other => other,
            })?;
        }
        Ok(net)
    }
}

impl From<&TemporalNetwork> for RawNetwork {
    fn from(net: &TemporalNetwork) -> Self {
        let full = TemporalQuantity::constant(net.lifetime, true);
        RawNetwork {
            lifetime: RawLifetime { start: net.lifetime.start, end: net.lifetime.end },
            nodes: net
                .nodes
                .iter()
                .map(|n| RawNode {
                    id: n.id.clone(),
                    presence: (n.presence != full).then(|| n.presence.triples().map(|(s, e, _)| (s, e)).collect()),
                })
                .collect(),
            links: net
                .links
                .iter()
                .map(|l| RawLink {
                    source: net.nodes[l.source].id.clone(),
                    target: net.nodes[l.target].id.clone(),
                    directed: l.directed,
                    latency: l.latency.triples().map(|(s, e, v)| (s, e, v.raw())).collect(),
                    info: l.info.as_ref().map(|q| q.triples().filter_map(|(s, e, w)| w.map(|w| (s, e, w))).collect()),
                })
                .collect(),
        }
    }
}
