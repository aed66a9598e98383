//! Induced-pattern search (P4, P5, gem, C5), class membership and
//! homogeneous-set queries.
//!
//! Every search is an ordered-tuple DFS that tries candidates in ascending
//! id order, so the first hit is the lexicographically least realizing
//! tuple. Candidate sets are maintained with bitset masks.

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    P4,
    P5,
    Gem,
    C5,
}

impl Pattern {
    pub fn size(self) -> usize {
        match self {
            Pattern::P4 => 4,
            _ => 5,
        }
    }

    /// Adjacency between tuple positions `i` and `j`.
    fn adjacent(self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        match self {
            Pattern::P4 | Pattern::P5 => b == a + 1,
            Pattern::Gem => b == a + 1 && b <= 3 || b == 4,
            Pattern::C5 => b == a + 1 || (a == 0 && b == 4),
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Pattern::P4 => Graph::path(4),
            Pattern::P5 => Graph::path(5),
            Pattern::Gem => Graph::gem(),
            Pattern::C5 => Graph::cycle(5),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::P4 => "P4",
            Pattern::P5 => "P5",
            Pattern::Gem => "gem",
            Pattern::C5 => "C5",
        };
        f.write_str(s)
    }
}

/// An ordered tuple realizing a pattern: path order for paths, path order
/// then apex for the gem, cyclic order for C5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternHit {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl PatternHit {
    /// Re-checks that the tuple induces exactly the named pattern in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.pattern.size();
        if self.vertices.len() != k || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let (u, v) = (self.vertices[i], self.vertices[j]);
                if u == v || g.has_edge(u, v) != self.pattern.adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PatternHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{} {}", self.pattern, ids.join(" "))
    }
}

/// Lexicographically least tuple inducing `pattern`, if any.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<PatternHit> {
    find_induced_within(g, pattern, &g.vertices())
}

/// Same as [`find_induced`] restricted to `G[within]`; ids stay host ids.
pub fn find_induced_within(g: &Graph, pattern: Pattern, within: &VertexSet) -> Option<PatternHit> {
    let k = pattern.size();
    if within.len() < k {
        return None;
    }
    let mut tuple = Vec::with_capacity(k);
    if search(g, pattern, within, &mut tuple) {
        Some(PatternHit { pattern, vertices: tuple })
    } else {
        None
    }
}

fn search(g: &Graph, pattern: Pattern, within: &VertexSet, tuple: &mut Vec<usize>) -> bool {
    let i = tuple.len();
    if i == pattern.size() {
        return true;
    }
    let mut cand = within.clone();
    for (j, &t) in tuple.iter().enumerate() {
        cand.remove(t);
        if pattern.adjacent(i, j) {
            cand.intersect_with(g.neighbors(t));
        } else {
            cand.difference_with(g.neighbors(t));
        }
        if cand.is_empty() {
            return false;
        }
    }
    for v in cand.iter() {
        tuple.push(v);
        if search(g, pattern, within, tuple) {
            return true;
        }
        tuple.pop();
    }
    false
}

/// `Ok(())` when `g` has no induced P5 and no induced gem; otherwise the
/// least witness (P5 is searched first).
pub fn check_p5_gem_free(g: &Graph) -> Result<(), PatternHit> {
    for p in [Pattern::P5, Pattern::Gem] {
        if let Some(hit) = find_induced(g, p) {
            return Err(hit);
        }
    }
    Ok(())
}

pub fn is_p5_gem_free(g: &Graph) -> bool {
    check_p5_gem_free(g).is_ok()
}

pub fn is_p4_free(g: &Graph) -> bool {
    find_induced(g, Pattern::P4).is_none()
}

/// `G[s]` has no induced P4.
pub fn is_p4_free_within(g: &Graph, s: &VertexSet) -> bool {
    find_induced_within(g, Pattern::P4, s).is_none()
}

/// Every vertex outside `x` is complete or anticomplete to `x`.
pub fn is_homogeneous(g: &Graph, x: &VertexSet) -> bool {
    homogeneity_violation(g, x).is_none()
}

/// An outside vertex that sees part, but not all, of `x`.
pub fn homogeneity_violation(g: &Graph, x: &VertexSet) -> Option<usize> {
    let k = x.len();
    (0..g.n()).filter(|v| !x.contains(*v)).find(|&v| {
        let seen = g.neighbors(v).intersection_len(x);
        seen != 0 && seen != k
    })
}

/// Connected components of `G[s]` as host vertex sets.
pub fn components_of(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    g.components_within(s)
}
