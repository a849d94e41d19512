//! Betweenness goldens, a brute-force cross-check and structural properties.

mod common;

use common::rng;
use rand::Rng;

use tqnet::centrality::{between_time_ex, temp_between};
use tqnet::netio::random::{random_network, RandomParams};
use tqnet::netio::{export_results, fixtures, Format};
use tqnet::oracle::{DatedJourney, Oracle};
use tqnet::{Exec, TemporalNetwork};

fn assert_series(got: &tqnet::TemporalQuantity<f64>, want: &[(i64, i64, f64)]) {
    let got: Vec<_> = got.triples().map(|(s, e, v)| (s, e, *v)).collect();
    assert_eq!(got.len(), want.len(), "{got:?}");
    for (g, w) in got.iter().zip(want) {
        assert_eq!((g.0, g.1), (w.0, w.1), "{got:?}");
        assert!((g.2 - w.2).abs() < 1e-9, "{got:?}");
    }
}

#[test]
fn triangle_goldens() {
    let net = fixtures::triangle();
    let b = temp_between(&net, Exec::Parallel).unwrap();
    assert_series(b.get("z").unwrap(), &[(1, 2, 0.25), (3, 5, 1.0), (5, 6, 0.5)]);
    assert!(b.get("u").unwrap().is_empty() && b.get("v").unwrap().is_empty());

    let e = between_time_ex(&net, Exec::Parallel).unwrap();
    for id in ["u", "v", "z"] {
        assert!((e.get(id).unwrap() - 5.0 / 12.0).abs() < 1e-9);
    }
}

#[test]
fn star_goldens() {
    let net = fixtures::star();
    let b = temp_between(&net, Exec::Parallel).unwrap();
    assert_series(b.get("u").unwrap(), &[(1, 5, 1.0)]);
    let e = between_time_ex(&net, Exec::Parallel).unwrap();
    assert!((e.get("u").unwrap() - 1.0).abs() < 1e-9);
    for n in b.nodes.iter().filter(|n| n.node != "u") {
        assert!(n.values.is_empty());
        assert_eq!(e.get(&n.node), Some(0.0));
    }
}

/// The ratio evaluated directly: among the ubiquitous foremost journeys
/// `u → w` for begin `t`, the share passing through `v`.
fn brute_force(net: &TemporalNetwork, v: usize, t: i64) -> f64 {
    let o = Oracle::new(net);
    let n = net.node_count();
    let mut sum = 0.0;
    for u in (0..n).filter(|&u| u != v) {
        for w in (0..n).filter(|&w| w != u && w != v) {
            let best = o.foremost_arrival(u, w, t);
            let good: Vec<DatedJourney> = o
                .enumerate_journeys(u, w, t, None)
                .into_iter()
                .filter(|j| !j.hops.is_empty() && tqnet::Time::new(j.arrival()) == best && o.classify(j).ubiquitous)
                .collect();
            if good.is_empty() {
                continue;
            }
            let through = good.iter().filter(|j| j.nodes()[1..j.hops.len()].contains(&v)).count();
            sum += through as f64 / good.len() as f64;
        }
    }
    sum / ((n - 1) * (n - 2)) as f64
}

#[test]
fn triangle_matches_brute_force() {
    let net = fixtures::triangle();
    let b = temp_between(&net, Exec::Sequential).unwrap();
    for (v, series) in b.nodes.iter().enumerate() {
        for t in net.lifetime().start..net.lifetime().end {
            let got = series.values.get(t).copied().unwrap_or(0.0);
            assert!((got - brute_force(&net, v, t)).abs() < 1e-9, "{} at {t}", series.node);
        }
    }
}

#[test]
fn values_are_within_unit_interval() {
    let r = &mut rng(31);
    for _ in 0..40 {
        let net = random_network(r, &RandomParams::default());
        let b = temp_between(&net, Exec::Parallel).unwrap();
        assert!(b.nodes.iter().flat_map(|n| n.values.triples()).all(|(_, _, v)| *v > 0.0 && *v <= 1.0 + 1e-12));
        let e = between_time_ex(&net, Exec::Parallel).unwrap();
        assert!(e.nodes.iter().all(|n| (0.0..=1.0 + 1e-12).contains(&n.value)));
    }
}

#[test]
fn relabeling_is_equivariant() {
    let r = &mut rng(32);
    let mut nets = vec![fixtures::triangle(), fixtures::star()];
    nets.extend((0..20).map(|_| random_network(r, &RandomParams::default())));
    for net in nets {
        let n = net.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let moved = net.permute_nodes(&perm);
        let (a, b) = (temp_between(&net, Exec::Parallel).unwrap(), temp_between(&moved, Exec::Parallel).unwrap());
        let (x, y) = (between_time_ex(&net, Exec::Parallel).unwrap(), between_time_ex(&moved, Exec::Parallel).unwrap());
        for id in net.node_ids() {
            assert_eq!(a.get(&id), b.get(&id), "{id}");
            assert!((x.get(&id).unwrap() - y.get(&id).unwrap()).abs() < 1e-12, "{id}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let net = fixtures::triangle();
    let once = |exec| {
        let mut out = export_results(&temp_between(&net, exec).unwrap(), Format::Json);
        out.extend(export_results(&between_time_ex(&net, exec).unwrap(), Format::Csv));
        out
    };
    let first = once(Exec::Parallel);
    assert_eq!(first, once(Exec::Parallel));
    assert_eq!(first, once(Exec::Sequential));
}
