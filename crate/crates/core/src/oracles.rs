//! Exact ground truth: maximum cliques, chromatic number, coloring checks,
//! good stable sets and the Reed-bound check.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for [`chi_exact`].
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Environment variable overriding [`DEFAULT_EXACT_LIMIT`].
pub const EXACT_LIMIT_ENV: &str = "GEMFIVE_EXACT_LIMIT";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exact-solver limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// The exact-solver vertex limit, honoring `GEMFIVE_EXACT_LIMIT`.
pub fn exact_limit() -> usize {
    std::env::var(EXACT_LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_EXACT_LIMIT)
}

/// `⌈5ω/4⌉`.
pub fn bound54(omega: usize) -> usize {
    (5 * omega).div_ceil(4)
}

/// `⌈(Δ+ω+1)/2⌉`.
pub fn reed_bound(delta: usize, omega: usize) -> usize {
    (delta + omega + 1).div_ceil(2)
}

// Bron–Kerbosch with Tomita pivoting. `visit` sees each maximal clique and
// returns the size below which branches may be pruned.
fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: VertexSet, x: VertexSet, floor: usize, visit: &mut dyn FnMut(&[usize]) -> usize) -> usize {
    let mut floor = floor;
    if p.is_empty() {
        if x.is_empty() {
            floor = floor.max(visit(r));
        }
        return floor;
    }
    if r.len() + p.len() < floor {
        return floor;
    }
    let pux = &p | &x;
    let pivot = pux.iter().max_by_key(|&u| g.neighbors(u).intersection_len(&p)).unwrap();
    let mut p = p;
    let mut x = x;
    for v in (&p - g.neighbors(pivot)).iter() {
        r.push(v);
        floor = bron_kerbosch(g, r, &p & g.neighbors(v), &x & g.neighbors(v), floor, visit);
        r.pop();
        p.remove(v);
        x.insert(v);
        if r.len() + p.len() < floor {
            break;
        }
    }
    floor
}

/// A maximum clique; ties resolve to the first one found.
pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, &g.vertices())
}

/// A maximum clique of `G[s]`, as host ids.
pub fn max_clique_within(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut best: Vec<usize> = Vec::new();
    let mut visit = |r: &[usize]| {
        if r.len() > best.len() {
            best = r.to_vec();
        }
        // only strictly larger cliques are interesting from here on
        best.len() + 1
    };
    bron_kerbosch(g, &mut Vec::new(), s.clone(), g.empty_set(), 0, &mut visit);
    g.set(best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

pub fn clique_number_within(g: &Graph, s: &VertexSet) -> usize {
    max_clique_within(g, s).len()
}

/// Every clique of size ω(G).
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    let omega = clique_number(g);
    let mut out = Vec::new();
    let mut visit = |r: &[usize]| {
        if r.len() == omega {
            out.push(g.set(r.iter().copied()));
        }
        omega
    };
    bron_kerbosch(g, &mut Vec::new(), g.vertices(), g.empty_set(), omega, &mut visit);
    out
}

/// Every maximal clique, each as a vertex set.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut visit = |r: &[usize]| {
        out.push(g.set(r.iter().copied()));
        0
    };
    bron_kerbosch(g, &mut Vec::new(), g.vertices(), g.empty_set(), 0, &mut visit);
    out
}

/// Stable and meeting every clique of size ω(G).
pub fn is_good_stable_set(g: &Graph, s: &VertexSet) -> bool {
    if !g.is_stable(s) {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    maximum_cliques(g).iter().all(|k| k.intersects(s))
}

/// Total, proper, and uses exactly colors `0..count`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && c.colors().iter().all(|&x| x < c.count()) && g.edges().all(|(u, v)| c.color(u) != c.color(v))
}

/// Chromatic number by branch and bound; refuses graphs above `limit` vertices.
pub fn chi_exact(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge { n: g.n(), limit });
    }
    Ok(optimal_coloring(g).count())
}

/// χ(G) ≤ ⌈(Δ+ω+1)/2⌉, with χ computed exactly.
pub fn reed_check(g: &Graph, limit: usize) -> Result<bool, OracleError> {
    let chi = chi_exact(g, limit)?;
    Ok(chi <= reed_bound(g.max_degree(), clique_number(g)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: Option<usize>,
    pub delta: usize,
    pub bound54: usize,
    pub reed: usize,
}

impl OracleReport {
    pub fn compute(g: &Graph, limit: usize) -> Self {
        let omega = clique_number(g);
        let delta = g.max_degree();
        OracleReport {
            n: g.n(),
            m: g.edge_count(),
            omega,
            chi: chi_exact(g, limit).ok(),
            delta,
            bound54: bound54(omega),
            reed: reed_bound(delta, omega),
        }
    }
}

/// An optimal coloring (exactly χ colors), no size limit.
///
/// DSATUR branch and bound: the greedy DSATUR coloring is the first upper
/// bound, ω the lower bound, and the search stops as soon as they meet.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring::empty();
    }
    let lower = clique_number(g);
    let mut state = Dsatur::new(g);
    let greedy = state.greedy();
    let mut best = greedy.clone();
    let mut best_k = greedy.iter().max().unwrap() + 1;
    if best_k > lower {
        let mut state = Dsatur::new(g);
        state.branch(0, lower, &mut best, &mut best_k);
    }
    Coloring::from_assignment(best)
}

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    // neighbor_colors[v][c] = colored neighbors of v with color c
    neighbor_colors: Vec<Vec<u16>>,
    saturation: Vec<usize>,
    colored: usize,
}

const NONE: usize = usize::MAX;

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Dsatur { g, color: vec![NONE; n], neighbor_colors: vec![vec![0; n + 1]; n], saturation: vec![0; n], colored: 0 }
    }

    fn pick(&self) -> usize {
        let mut best = NONE;
        let mut key = (0, 0);
        for v in 0..self.g.n() {
            if self.color[v] != NONE {
                continue;
            }
            let uncolored_deg = self.g.neighbors(v).iter().filter(|&w| self.color[w] == NONE).count();
            let k = (self.saturation[v], uncolored_deg);
            if best == NONE || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.colored += 1;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        self.colored -= 1;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn greedy(&mut self) -> Vec<usize> {
        while self.colored < self.g.n() {
            let v = self.pick();
            let c = (0..).find(|&c| self.neighbor_colors[v][c] == 0).unwrap();
            self.assign(v, c);
        }
        self.color.clone()
    }

    // `used` = number of colors in the current partial coloring.
    fn branch(&mut self, used: usize, lower: usize, best: &mut Vec<usize>, best_k: &mut usize) {
        if *best_k <= lower {
            return;
        }
        if self.colored == self.g.n() {
            if used < *best_k {
                *best_k = used;
                best.clone_from(&self.color);
            }
            return;
        }
        let v = self.pick();
        let limit = (used + 1).min(*best_k - 1);
        for c in 0..limit {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.branch(used.max(c + 1), lower, best, best_k);
            self.unassign(v);
            if *best_k <= lower {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::complete(4)), 4);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::new(3)), 1);
        assert_eq!(clique_number(&Graph::new(0)), 0);
        assert_eq!(maximum_cliques(&Graph::cycle(5)).len(), 5);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_exact(&Graph::cycle(5), 20), Ok(3));
        assert_eq!(chi_exact(&Graph::complete(6), 20), Ok(6));
        assert_eq!(chi_exact(&Graph::new(0), 20), Ok(0));
        assert_eq!(chi_exact(&Graph::new(21), 20), Err(OracleError::TooLarge { n: 21, limit: 20 }));
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        assert!(verify_coloring(&c5, &Coloring::from_assignment(vec![0, 1, 0, 1, 2])));
        assert!(!verify_coloring(&c5, &Coloring::from_assignment(vec![0, 0, 1, 0, 1])));
        assert!(!verify_coloring(&c5, &Coloring::from_assignment(vec![0, 1, 0, 1])));
    }

    #[test]
    fn good_stable_set_examples() {
        let c5 = Graph::cycle(5);
        // {v1, v3} misses the edge v4v5
        assert!(!is_good_stable_set(&c5, &c5.set([0, 2])));
        let k2 = Graph::complete(2);
        assert!(is_good_stable_set(&k2, &k2.set([0])));
        assert!(!is_good_stable_set(&k2, &k2.set([0, 1])));
    }

    #[test]
    fn reed_examples() {
        assert_eq!(reed_check(&Graph::complete(4), 20), Ok(true));
        assert_eq!(reed_check(&Graph::cycle(5), 20), Ok(true));
        assert_eq!(reed_bound(2, 2), 3);
    }

    #[test]
    #[allow(clippy::manual_div_ceil)]
    fn bound_arithmetic() {
        for w in 0..200 {
            assert_eq!(bound54(w), (5 * w + 3) / 4);
            if w >= 1 {
                assert!(bound54(w) > w);
            }
        }
    }

    #[test]
    fn report_fields() {
        let r = OracleReport::compute(&Graph::cycle(5), 20);
        assert_eq!((r.omega, r.chi, r.delta, r.bound54, r.reed), (2, Some(3), 2, 3, 3));
    }
}
