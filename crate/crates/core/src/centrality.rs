//! First-arrival betweenness: a time-dependent variant computed from the
//! traveling closure, and a lifetime-aggregate variant "with exclusion"
//! computed by journey enumeration.
//!
//! Both use the static normalization `1/((n−1)(n−2))`.

use serde::Serialize;

use crate::algebra::{ClosureDiverged, Count, Element};
use crate::exec::Exec;
use crate::netio::{Export, TemporalNetwork, Violation};
use crate::oracle::Oracle;
use crate::time::Time;
use crate::tq::{Builder, TemporalQuantity};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CentralityError {
    #[error("network fails validation ({} violations)", .0.len())]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Diverged(#[from] ClosureDiverged),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeSeries {
    pub node: String,
    pub values: TemporalQuantity<f64>,
}

/// Per node, betweenness as a function of the begin time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TemporalBetweenness {
    pub normalization: f64,
    pub nodes: Vec<NodeSeries>,
}

impl TemporalBetweenness {
    pub fn get(&self, node: &str) -> Option<&TemporalQuantity<f64>> {
        self.nodes.iter().find(|s| s.node == node).map(|s| &s.values)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeValue {
    pub node: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExclusionBetweenness {
    pub normalization: f64,
    pub nodes: Vec<NodeValue>,
}

impl ExclusionBetweenness {
    pub fn get(&self, node: &str) -> Option<f64> {
        self.nodes.iter().find(|s| s.node == node).map(|s| s.value)
    }
}

fn normalization(n: usize) -> f64 {
    if n < 3 {
        0.0
    } else {
        1.0 / ((n - 1) * (n - 2)) as f64
    }
}

fn check(net: &TemporalNetwork) -> Result<(), CentralityError> {
    let v = net.validate();
    if v.is_empty() {
        Ok(())
    } else {
        Err(CentralityError::Invalid(v))
    }
}

/// `b_v(t) = c · Σ n_uv(t)·n_vw(f_uv(t)) / n_uw(t)` over ordered pairs of
/// distinct `u, w ≠ v`, counting only through-journeys that reach `w` as
/// early as possible.
pub fn temp_between(net: &TemporalNetwork, exec: Exec) -> Result<TemporalBetweenness, CentralityError> {
    check(net)?;
    let n = net.node_count();
    let ids = net.node_ids();
    let c = normalization(n);
    if n < 3 {
        let nodes = ids.into_iter().map(|node| NodeSeries { node, values: TemporalQuantity::empty() }).collect();
        return Ok(TemporalBetweenness { normalization: c, nodes });
    }
    let b = net.travel_matrix::<Count>().map_err(|e| ClosureDiverged(e.to_string()))?.closure(exec)?;
    let lt = net.lifetime();
    let nodes = exec.map(n, |v| {
        let mut out = Builder::default();
        for t in lt.start..lt.end {
            let at = Time::new(t);
            let mut sum = 0.0;
            for u in (0..n).filter(|&u| u != v) {
                let uv = b.get(u, v).evaluate(at);
                let Some(f_uv) = uv.time.finite() else { continue };
                for w in (0..n).filter(|&w| w != v && w != u) {
                    let uw = b.get(u, w).evaluate(at);
                    if uw.is_zero() {
                        continue;
                    }
                    let vw = b.get(v, w).evaluate(Time::new(f_uv));
                    if vw.time == uw.time {
                        sum += uv.value.to_f64() * vw.value.to_f64() / uw.value.to_f64();
                    }
                }
            }
            out.push(t, t + 1, sum * c);
        }
        NodeSeries { node: ids[v].clone(), values: out.finish() }
    });
    Ok(TemporalBetweenness { normalization: c, nodes })
}

/// `b_excl(v) = c · Σ N_thru / (N_thru + N_wo)`, where `N_thru` counts the
/// distinct ubiquitous foremost journeys `u → w` through `v` and `N_wo` those
/// of the network without `v`. Pairs with no journeys at all are omitted.
pub fn between_time_ex(net: &TemporalNetwork, exec: Exec) -> Result<ExclusionBetweenness, CentralityError> {
    check(net)?;
    let n = net.node_count();
    let ids = net.node_ids();
    let c = normalization(n);
    let full = Oracle::new(net);
    let nodes = exec.map(n, |v| {
        let reduced = net.remove_node(&ids[v]).expect("node exists");
        let without = Oracle::new(&reduced);
        let mut sum = 0.0;
        for u in (0..n).filter(|&u| u != v) {
            for w in (0..n).filter(|&w| w != v && w != u) {
                let thru = full.count_distinct_ubiquitous(u, w, Some(v));
                // Indices above v shift down by one in the reduced network.
                let shift = |x: usize| if x > v { x - 1 } else { x };
                let wo = without.count_distinct_ubiquitous(shift(u), shift(w), None);
                if thru + wo > 0 {
                    sum += thru as f64 / (thru + wo) as f64;
                }
            }
        }
        NodeValue { node: ids[v].clone(), value: sum * c }
    });
    Ok(ExclusionBetweenness { normalization: c, nodes })
}

/// `node,start,end,value`; nodes with an empty series contribute no rows.
impl Export for TemporalBetweenness {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["node", "start", "end", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.nodes
            .iter()
            .flat_map(|s| {
                s.values.triples().map(|(a, e, v)| vec![s.node.clone(), a.to_string(), e.to_string(), format!("{v:.4}")])
            })
            .collect()
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `node,value`.
impl Export for ExclusionBetweenness {
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["node", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.nodes.iter().map(|s| vec![s.node.clone(), format!("{:.4}", s.value)]).collect()
    }

    fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}
