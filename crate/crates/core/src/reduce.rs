//! Contraction of P4-free homogeneous sets to cliques, and lifting colorings
//! back through a chain of contractions.
//!
//! Contracting `X` keeps the `ω(G[X])` least ids of `X` as a clique with the
//! outside neighborhood of `X` and deletes the rest of `X`. A coloring of the
//! contracted graph lifts by coloring `G[X]` optimally and giving color class
//! `j` the color of the `j`-th kept vertex.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::decompose::{Decomposition, ExpansionCert, HPartition};
use crate::detect;
use crate::graph::{Graph, VertexSet};
use crate::oracles::clique_number_within;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("graph is not P4-free")]
    NotP4Free,
    #[error("set is empty or the whole vertex set")]
    NotProper,
    #[error("set is not homogeneous (vertex {0} splits it)")]
    NotHomogeneous(usize),
    #[error("set is already a clique; contracting it would not shrink the graph")]
    NoShrink,
}

/// Optimal coloring of a P4-free graph (exactly `ω` colors) by recursing on
/// components and co-components.
pub fn cograph_color(g: &Graph) -> Result<Coloring, ReduceError> {
    if !detect::is_p4_free(g) {
        return Err(ReduceError::NotP4Free);
    }
    let co = g.complement();
    let mut colors = vec![0; g.n()];
    cograph_rec(g, &co, &g.vertices(), 0, &mut colors);
    Ok(Coloring::from_dense(colors).expect("cograph coloring is dense"))
}

// Colors `s` with colors `base..base+k` and returns `k`.
fn cograph_rec(g: &Graph, co: &Graph, s: &VertexSet, base: usize, colors: &mut [usize]) -> usize {
    if s.len() <= 1 {
        if let Some(v) = s.first() {
            colors[v] = base;
        }
        return s.len();
    }
    let comps = g.components_within(s);
    if comps.len() > 1 {
        return comps.iter().map(|c| cograph_rec(g, co, c, base, colors)).max().unwrap();
    }
    // a connected cograph on two or more vertices has a disconnected complement
    let mut used = 0;
    for c in co.components_within(s) {
        used += cograph_rec(g, co, &c, base + used, colors);
    }
    used
}

/// One contraction, in the ids of the graph it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftStep {
    /// The contracted set.
    pub x: VertexSet,
    /// The kept vertices of `x` (least ids), which form the replacement clique.
    pub clique: Vec<usize>,
    /// `G[X]`, vertices in ascending order of `x`.
    pub inner: Graph,
    /// `map[new] = old` for the vertices of the contracted graph.
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LiftChain {
    pub steps: Vec<LiftStep>,
}

impl LiftChain {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Re-applies every step to `g`, which should reproduce the reduced graph.
    pub fn replay(&self, g: &Graph) -> Result<Graph, ReduceError> {
        let mut cur = g.clone();
        for s in &self.steps {
            cur = contract(&cur, &s.x)?.0;
        }
        Ok(cur)
    }
}

/// `G/X`: replaces the P4-free homogeneous set `x` by a clique of size `ω(G[X])`.
pub fn contract(g: &Graph, x: &VertexSet) -> Result<(Graph, LiftStep), ReduceError> {
    if x.is_empty() || x.len() == g.n() {
        return Err(ReduceError::NotProper);
    }
    if let Some(v) = detect::homogeneity_violation(g, x) {
        return Err(ReduceError::NotHomogeneous(v));
    }
    if !detect::is_p4_free_within(g, x) {
        return Err(ReduceError::NotP4Free);
    }
    let omega = clique_number_within(g, x);
    if omega == x.len() {
        return Err(ReduceError::NoShrink);
    }
    let clique: Vec<usize> = x.iter().take(omega).collect();
    let mut h = g.clone();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            h.add_edge(u, v);
        }
    }
    let dropped = x - &g.set(clique.iter().copied());
    let reduced = h.without(&dropped);
    let step = LiftStep { x: x.clone(), clique, inner: g.induced(x).graph, map: reduced.map };
    Ok((reduced.graph, step))
}

fn reindex(s: &VertexSet, map: &[usize], old_n: usize) -> VertexSet {
    let mut inv = vec![usize::MAX; old_n];
    for (new, &old) in map.iter().enumerate() {
        inv[old] = new;
    }
    VertexSet::from_iter(map.len(), s.iter().filter(|&v| inv[v] != usize::MAX).map(|v| inv[v]))
}

/// Contracts every non-clique bag of an expansion, or A1..A5 and every
/// component of A7 of an H-partition, giving a clique expansion or an H*
/// member with the same ω and χ.
pub fn reduce_to_star(g: &Graph, d: &Decomposition) -> Result<(Graph, Decomposition, LiftChain), ReduceError> {
    let mut cur = g.clone();
    let mut chain = LiftChain::default();
    // the sets to keep track of, and which of them get contracted
    let (mut sets, targets): (Vec<VertexSet>, Vec<bool>) = match d {
        Decomposition::Expansion(e) => (e.bags.clone(), vec![true; e.bags.len()]),
        Decomposition::H(h) => {
            let mut sets = h.sets.to_vec();
            let comps = h.a7_components(g);
            let mut t = vec![true, true, true, true, true, false, false];
            t.extend(comps.iter().map(|_| true));
            sets.extend(comps);
            (sets, t)
        }
    };
    for i in 0..sets.len() {
        if !targets[i] || cur.is_clique(&sets[i]) {
            continue;
        }
        let (next, step) = contract(&cur, &sets[i])?;
        let old_n = cur.n();
        for s in sets.iter_mut() {
            *s = reindex(s, &step.map, old_n);
        }
        chain.steps.push(step);
        cur = next;
    }
    let out = match d {
        Decomposition::Expansion(e) => Decomposition::Expansion(ExpansionCert { base: e.base, bags: sets }),
        Decomposition::H(_) => {
            let seven: [VertexSet; 7] = std::array::from_fn(|i| sets[i].clone());
            Decomposition::H(HPartition { sets: seven })
        }
    };
    Ok((cur, out, chain))
}

/// Lifts a proper coloring of the reduced graph back to the original graph.
/// Properness and the number of colors are preserved.
pub fn lift(c: &Coloring, chain: &LiftChain) -> Coloring {
    let mut colors = c.colors().to_vec();
    for step in chain.steps.iter().rev() {
        let old_n = step.x.len() + step.map.len() - step.clique.len();
        let mut out = vec![usize::MAX; old_n];
        for (new, &old) in step.map.iter().enumerate() {
            out[old] = colors[new];
        }
        let inner = cograph_color(&step.inner).expect("stored set is P4-free");
        let palette: Vec<usize> = step.clique.iter().map(|&v| out[v]).collect();
        for (i, v) in step.x.iter().enumerate() {
            out[v] = palette[inner.color(i)];
        }
        colors = out;
    }
    Coloring::from_dense(colors).expect("lifted coloring keeps every color")
}
