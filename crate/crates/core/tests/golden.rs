//! Frozen values. Counts for the tightness family follow from
//! m = 5·C(q,2) + 5·q²; chromatic numbers are cross-checked against a
//! brute-force partition search.

use gemfive::basic::basic_graph;
use gemfive::engine::color;
use gemfive::generators::{random_instance_with_family, tightness_family, Family, InstanceParams};
use gemfive::oracles::{chi_exact, clique_number};
use gemfive::Graph;

fn chi_brute(g: &Graph) -> usize {
    // smallest k with a proper k-coloring, colors assigned in first-use order
    fn fits(g: &Graph, v: usize, k: usize, col: &mut Vec<usize>, used: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| col[u] != c || !g.has_edge(u, v)) {
                col.push(c);
                if fits(g, v + 1, k, col, used.max(c + 1)) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    (0..=g.n()).find(|&k| fits(g, 0, k, &mut Vec::new(), 0)).unwrap()
}

#[test]
fn tightness_counts() {
    for (q, m) in [(1, 5), (2, 25), (3, 60), (4, 110)] {
        let g = tightness_family(q).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5 * q, m));
    }
}

#[test]
fn basic_graph_invariants() {
    // (n, m, Δ); every basic graph has ω = χ = 3 except G1 = C5 with ω = 2
    let expect = [(5, 5, 2), (6, 8, 3), (7, 10, 4), (7, 11, 4), (8, 13, 5), (8, 14, 4), (8, 13, 4), (8, 14, 4), (9, 16, 5), (9, 18, 4)];
    for (k, &(n, m, delta)) in (1..=10).zip(expect.iter()) {
        let g = &basic_graph(k).unwrap().graph;
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (n, m, delta), "G{k}");
        assert_eq!(clique_number(g), if k == 1 { 2 } else { 3 }, "G{k}");
        assert_eq!(chi_exact(g, 20).unwrap(), 3, "G{k}");
        assert_eq!(chi_brute(g), 3, "G{k}");
        assert!(color(g).unwrap().count() <= 4, "G{k}");
    }
}

#[test]
fn g10_unit_bags_use_three() {
    let g = &basic_graph(10).unwrap().graph;
    assert_eq!(color(g).unwrap().count(), 3);
}

#[test]
fn corpus_is_seed_stable() {
    let p = InstanceParams::default();
    let got: Vec<(Family, usize, usize)> = (0..3)
        .map(|s| {
            let (g, f) = random_instance_with_family(s, p);
            (f, g.n(), g.edge_count())
        })
        .collect();
    assert_eq!(
        got,
        vec![(Family::CographExpansion, 13, 30), (Family::InducedSubgraph, 11, 22), (Family::InducedSubgraph, 18, 72)]
    );
}
