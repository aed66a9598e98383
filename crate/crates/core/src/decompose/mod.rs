//! Structure of connected (P5, gem)-free graphs containing an induced C5:
//! either a member of class H or a P4-free expansion of one of G1–G10.
//!
//! A maximal C5 blow-up `A1..A5` is grown from the least induced C5, every
//! other vertex is sorted into `Y1..Y5` or `R`, and the case is read off the
//! nonempty `Y` sets and `R`. Expansion certificates are then recovered by
//! refining `(A1..A5, Y_i, R)` into modules, merging twin modules and
//! matching the quotient against the basic graphs.

mod claims;

pub use claims::{verify_claims, ClaimCheck, ClaimReport};

use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::basic::{basic_graph, BASIC_COUNT};
use crate::detect::{self, Pattern, PatternHit};
use crate::graph::{find_isomorphism, Graph, VertexSet};

/// `(i + d) mod 5`, for writing `A_{i-2}` as `at(i, 3)`.
#[inline]
pub(crate) fn at(i: usize, d: usize) -> usize {
    (i + d) % 5
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupPartition {
    pub a: [VertexSet; 5],
    pub y: [VertexSet; 5],
    pub r: VertexSet,
}

impl BlowupPartition {
    pub fn a_union(&self) -> VertexSet {
        let mut u = self.a[0].clone();
        for s in &self.a[1..] {
            u.union_with(s);
        }
        u
    }

    /// Indices `i` with `Y_i` nonempty.
    pub fn nonempty_y(&self) -> Vec<usize> {
        (0..5).filter(|&i| !self.y[i].is_empty()).collect()
    }

    /// `y ∈ Y_i` is complete to both `A_{i-2}` and `A_{i+2}`.
    pub fn is_pure(&self, g: &Graph, i: usize, y: usize) -> bool {
        let n = g.neighbors(y);
        self.a[at(i, 2)].is_subset(n) && self.a[at(i, 3)].is_subset(n)
    }
}

/// Which branch of the case analysis a blow-up partition falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// `R` empty, nonempty `Y` indices pairwise two apart.
    A,
    /// `R` empty, two nonempty `Y` with consecutive indices.
    B,
    /// `R` nonempty, one `Y` nonempty.
    C,
    /// `R` nonempty, two `Y` nonempty.
    D,
}

impl Case {
    pub fn of(bp: &BlowupPartition) -> Case {
        let ys = bp.nonempty_y();
        let consecutive = ys.iter().any(|&i| ys.contains(&at(i, 1)));
        match (bp.r.is_empty(), ys.len()) {
            (true, _) if consecutive => Case::B,
            (true, _) => Case::A,
            (false, 0 | 1) => Case::C,
            (false, _) => Case::D,
        }
    }

    fn candidates(self) -> &'static [usize] {
        match self {
            Case::A => &[1, 2, 3, 4, 5, 6, 9],
            Case::B => &[8, 9, 10],
            Case::C => &[],
            Case::D => &[7],
        }
    }
}

/// Seven sets `A1..A7` of a class-H partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPartition {
    pub sets: [VertexSet; 7],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionCert {
    /// Basic graph id `1..=10`.
    pub base: usize,
    /// `bags[i]` stands for vertex `x_{i+1}` of the basic graph.
    pub bags: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposition {
    Expansion(ExpansionCert),
    H(HPartition),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("sets do not partition the vertex set")]
    NotPartition,
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("set {set} contains an induced P4: {hit}")]
    NotP4Free { set: usize, hit: PatternHit },
    #[error("sets {0} and {1} should be complete")]
    NotComplete(usize, usize),
    #[error("sets {0} and {1} should be anticomplete")]
    NotAnticomplete(usize, usize),
    #[error("component of A7 is not homogeneous (vertex {0} splits it)")]
    NotHomogeneous(usize),
    #[error("set {0} is not a clique")]
    NotClique(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not (P5,gem)-free: {0}")]
    NotInClass(PatternHit),
    #[error(transparent)]
    BadBase(#[from] crate::basic::BasicIdError),
    #[error("expected {expected} bags, got {got}")]
    BagCount { expected: usize, got: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not (P5,gem)-free: {0}")]
    NotInClass(PatternHit),
    #[error("graph has no induced C5")]
    NoC5,
    #[error("seed is not an induced C5")]
    BadSeed,
    #[error("vertex {vertex} fits neither Y nor R; neighbors per A_i: {profile:?}")]
    Structural { vertex: usize, profile: [(usize, usize); 5] },
    #[error("case {case:?}: quotient on {parts} modules matches no basic graph")]
    NoMatch { case: Case, parts: usize },
    #[error("certificate failed validation: {0}")]
    Invalid(#[from] CertError),
}

fn partition_check(g: &Graph, sets: &[VertexSet]) -> Result<(), CertError> {
    let mut seen = g.empty_set();
    for s in sets {
        if s.intersects(&seen) {
            return Err(CertError::NotPartition);
        }
        seen.union_with(s);
    }
    if seen.len() != g.n() {
        return Err(CertError::NotPartition);
    }
    Ok(())
}

fn p4_free_check(g: &Graph, sets: &[VertexSet]) -> Result<(), CertError> {
    for (i, s) in sets.iter().enumerate() {
        if let Some(hit) = detect::find_induced_within(g, Pattern::P4, s) {
            return Err(CertError::NotP4Free { set: i + 1, hit });
        }
    }
    Ok(())
}

// A1–A6 adjacency in class H (0-based), complete and anticomplete pairs.
const H_COMPLETE: [(usize, usize); 8] = [(0, 1), (0, 4), (0, 5), (2, 1), (2, 3), (2, 5), (3, 4), (3, 5)];
const H_ANTI: [(usize, usize); 12] =
    [(0, 2), (0, 3), (0, 6), (2, 4), (2, 6), (3, 1), (3, 6), (1, 4), (1, 5), (1, 6), (4, 5), (4, 6)];

impl HPartition {
    pub fn a7_components(&self, g: &Graph) -> Vec<VertexSet> {
        g.components_within(&self.sets[6])
    }

    /// Checks membership in H (or H* with `star`): connected, (P5, gem)-free,
    /// seven nonempty P4-free sets with the prescribed adjacency, and every
    /// component of A7 homogeneous.
    pub fn validate(&self, g: &Graph, star: bool) -> Result<(), CertError> {
        self.validate_structure(g, star)?;
        detect::check_p5_gem_free(g).map_err(CertError::NotInClass)
    }

    /// [`HPartition::validate`] without the (P5, gem)-freeness check.
    pub fn validate_structure(&self, g: &Graph, star: bool) -> Result<(), CertError> {
        partition_check(g, &self.sets)?;
        if let Some(i) = self.sets.iter().position(VertexSet::is_empty) {
            return Err(CertError::EmptySet(i + 1));
        }
        if !g.is_connected() {
            return Err(CertError::Disconnected);
        }
        p4_free_check(g, &self.sets)?;
        for (a, b) in H_COMPLETE {
            if !g.is_complete_to(&self.sets[a], &self.sets[b]) {
                return Err(CertError::NotComplete(a + 1, b + 1));
            }
        }
        for (a, b) in H_ANTI {
            if !g.is_anticomplete_to(&self.sets[a], &self.sets[b]) {
                return Err(CertError::NotAnticomplete(a + 1, b + 1));
            }
        }
        let comps = self.a7_components(g);
        for c in &comps {
            if let Some(v) = detect::homogeneity_violation(g, c) {
                return Err(CertError::NotHomogeneous(v));
            }
        }
        if star {
            for i in 0..5 {
                if !g.is_clique(&self.sets[i]) {
                    return Err(CertError::NotClique(i + 1));
                }
            }
            if !comps.iter().all(|c| g.is_clique(c)) {
                return Err(CertError::NotClique(7));
            }
        }
        Ok(())
    }
}

impl ExpansionCert {
    /// The graph obtained by collapsing every bag to one vertex.
    pub fn collapse(&self, g: &Graph) -> Graph {
        let k = self.bags.len();
        let mut q = Graph::new(k);
        for i in 0..k {
            for j in i + 1..k {
                if g.is_complete_to(&self.bags[i], &self.bags[j]) {
                    q.add_edge(i, j);
                }
            }
        }
        q
    }

    /// Bags partition V, are nonempty and P4-free, and bag adjacency is
    /// exactly that of the basic graph.
    pub fn validate(&self, g: &Graph) -> Result<(), CertError> {
        let base = &basic_graph(self.base)?.graph;
        if self.bags.len() != base.n() {
            return Err(CertError::BagCount { expected: base.n(), got: self.bags.len() });
        }
        partition_check(g, &self.bags)?;
        if let Some(i) = self.bags.iter().position(VertexSet::is_empty) {
            return Err(CertError::EmptySet(i + 1));
        }
        p4_free_check(g, &self.bags)?;
        for i in 0..self.bags.len() {
            for j in i + 1..self.bags.len() {
                if base.has_edge(i, j) {
                    if !g.is_complete_to(&self.bags[i], &self.bags[j]) {
                        return Err(CertError::NotComplete(i + 1, j + 1));
                    }
                } else if !g.is_anticomplete_to(&self.bags[i], &self.bags[j]) {
                    return Err(CertError::NotAnticomplete(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    pub fn is_clique_expansion(&self, g: &Graph) -> bool {
        self.bags.iter().all(|b| g.is_clique(b))
    }
}

fn one_based(s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

impl Decomposition {
    pub fn kind(&self) -> &'static str {
        match self {
            Decomposition::Expansion(_) => "expansion",
            Decomposition::H(_) => "H",
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CertError> {
        match self {
            Decomposition::Expansion(e) => e.validate(g),
            Decomposition::H(h) => h.validate(g, false),
        }
    }

    fn validate_structure(&self, g: &Graph) -> Result<(), CertError> {
        match self {
            Decomposition::Expansion(e) => e.validate(g),
            Decomposition::H(h) => h.validate_structure(g, false),
        }
    }

    /// The certificate as JSON, with 1-based vertex ids.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Decomposition::Expansion(e) => json!({
                "kind": "expansion",
                "base": e.base,
                "bags": e.bags.iter().map(one_based).collect::<Vec<_>>(),
            }),
            Decomposition::H(h) => json!({
                "kind": "H",
                "A": h.sets.iter().map(one_based).collect::<Vec<_>>(),
            }),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Grows a maximal C5 blow-up around `seed`.
///
/// Vertices are tried in ascending id order, cycling `i = 1..5`, and move
/// into `A_i` when complete to `A_{i±1}` and anticomplete to `A_{i±2}`,
/// until a full pass adds nothing.
pub fn grow_blowup(g: &Graph, seed: &PatternHit) -> Result<[VertexSet; 5], DecomposeError> {
    if seed.pattern != Pattern::C5 || !seed.verify(g) {
        return Err(DecomposeError::BadSeed);
    }
    let mut a: [VertexSet; 5] = std::array::from_fn(|i| g.set([seed.vertices[i]]));
    let mut inside = g.set(seed.vertices.iter().copied());
    loop {
        let mut grew = false;
        for i in 0..5 {
            for v in 0..g.n() {
                if inside.contains(v) {
                    continue;
                }
                let n = g.neighbors(v);
                if a[at(i, 1)].is_subset(n)
                    && a[at(i, 4)].is_subset(n)
                    && !n.intersects(&a[at(i, 2)])
                    && !n.intersects(&a[at(i, 3)])
                {
                    a[i].insert(v);
                    inside.insert(v);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(a);
        }
    }
}

/// Sorts every vertex outside `A` into some `Y_i` or `R`.
pub fn classify_outside(g: &Graph, a: [VertexSet; 5]) -> Result<BlowupPartition, DecomposeError> {
    let mut inside = g.empty_set();
    for s in &a {
        inside.union_with(s);
    }
    let mut y: [VertexSet; 5] = std::array::from_fn(|_| g.empty_set());
    let mut r = g.empty_set();
    for v in 0..g.n() {
        if inside.contains(v) {
            continue;
        }
        let n = g.neighbors(v);
        let profile: [(usize, usize); 5] = std::array::from_fn(|i| (n.intersection_len(&a[i]), a[i].len()));
        if profile.iter().all(|&(k, _)| k == 0) {
            r.insert(v);
            continue;
        }
        let full = |j: usize| profile[j].0 == profile[j].1;
        let some = |j: usize| profile[j].0 > 0;
        let fits: Vec<usize> = (0..5)
            .filter(|&i| {
                full(i)
                    && !some(at(i, 1))
                    && !some(at(i, 4))
                    && some(at(i, 2))
                    && some(at(i, 3))
                    && (full(at(i, 2)) || full(at(i, 3)))
            })
            .collect();
        match fits[..] {
            [i] => {
                y[i].insert(v);
            }
            _ => return Err(DecomposeError::Structural { vertex: v, profile }),
        }
    }
    Ok(BlowupPartition { a, y, r })
}

/// The blow-up partition grown from the least induced C5.
pub fn blowup_partition(g: &Graph) -> Result<BlowupPartition, DecomposeError> {
    check_preconditions(g)?;
    blowup_partition_unchecked(g)
}

fn blowup_partition_unchecked(g: &Graph) -> Result<BlowupPartition, DecomposeError> {
    let seed = detect::find_induced(g, Pattern::C5).ok_or(DecomposeError::NoC5)?;
    classify_outside(g, grow_blowup(g, &seed)?)
}

fn check_preconditions(g: &Graph) -> Result<(), DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    detect::check_p5_gem_free(g).map_err(DecomposeError::NotInClass)
}

/// A decomposition of a connected (P5, gem)-free graph with an induced C5,
/// validated before it is returned.
pub fn decompose(g: &Graph) -> Result<Decomposition, DecomposeError> {
    decompose_traced(g).map(|(_, _, d)| d)
}

/// [`decompose`], also returning the blow-up partition and the case.
pub fn decompose_traced(g: &Graph) -> Result<(BlowupPartition, Case, Decomposition), DecomposeError> {
    check_preconditions(g)?;
    let out = decompose_core(g)?;
    out.2.validate(g)?;
    Ok(out)
}

/// [`decompose`] for a graph already known to be (P5, gem)-free, e.g. an
/// induced subgraph of one. Skips the class check on input and certificate.
pub fn decompose_unchecked(g: &Graph) -> Result<Decomposition, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let (_, _, d) = decompose_core(g)?;
    d.validate_structure(g)?;
    Ok(d)
}

fn decompose_core(g: &Graph) -> Result<(BlowupPartition, Case, Decomposition), DecomposeError> {
    let bp = blowup_partition_unchecked(g)?;
    let case = Case::of(&bp);
    let d = match case {
        Case::C => {
            let i = bp.nonempty_y().first().copied().unwrap_or(0);
            let sets = [
                bp.a[i].clone(),
                bp.a[at(i, 1)].clone(),
                bp.a[at(i, 2)].clone(),
                bp.a[at(i, 3)].clone(),
                bp.a[at(i, 4)].clone(),
                bp.y[i].clone(),
                bp.r.clone(),
            ];
            Decomposition::H(HPartition { sets })
        }
        _ => Decomposition::Expansion(match_expansion(g, &bp, case)?),
    };
    Ok((bp, case, d))
}

/// Coarsest refinement of `parts` into sets that every outside vertex sees
/// completely or not at all.
pub fn refine_to_modules(g: &Graph, parts: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut parts: Vec<VertexSet> = parts.into_iter().filter(|p| !p.is_empty()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i < parts.len() {
            let splitter = (0..g.n()).filter(|v| !parts[i].contains(*v)).find_map(|v| {
                let inn = &parts[i] & g.neighbors(v);
                (!inn.is_empty() && inn.len() < parts[i].len()).then_some(inn)
            });
            if let Some(inn) = splitter {
                let out = &parts[i] - &inn;
                parts[i] = inn;
                parts.push(out);
                changed = true;
            } else {
                i += 1;
            }
        }
    }
    parts
}

/// Repeatedly merges two modules with identical adjacency to all others.
fn merge_twins(g: &Graph, mut parts: Vec<VertexSet>) -> Vec<VertexSet> {
    let adj = |parts: &[VertexSet], a: usize, b: usize| g.has_edge(parts[a].first().unwrap(), parts[b].first().unwrap());
    'outer: loop {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if (0..parts.len()).filter(|&k| k != i && k != j).all(|k| adj(&parts, i, k) == adj(&parts, j, k)) {
                    let pj = parts.remove(j);
                    parts[i].union_with(&pj);
                    continue 'outer;
                }
            }
        }
        return parts;
    }
}

fn match_expansion(g: &Graph, bp: &BlowupPartition, case: Case) -> Result<ExpansionCert, DecomposeError> {
    let mut initial: Vec<VertexSet> = bp.a.to_vec();
    initial.extend(bp.y.iter().cloned());
    initial.push(bp.r.clone());
    let parts = merge_twins(g, refine_to_modules(g, initial));
    let cert = ExpansionCert { base: 0, bags: parts };
    let quotient = cert.collapse(g);
    let order = case.candidates().iter().copied().chain((1..=BASIC_COUNT).filter(|k| !case.candidates().contains(k)));
    for k in order {
        let base = &basic_graph(k).expect("valid id").graph;
        if let Some(map) = find_isomorphism(&quotient, base) {
            let mut bags = vec![g.empty_set(); base.n()];
            for (p, &target) in map.iter().enumerate() {
                bags[target] = cert.bags[p].clone();
            }
            if !case.candidates().contains(&k) {
                log::warn!("case {case:?} matched G{k}, outside its expected list");
            }
            return Ok(ExpansionCert { base: k, bags });
        }
    }
    Err(DecomposeError::NoMatch { case, parts: quotient.n() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{expansion, random_hstar, tightness_family, Bag, Cotree, ExpansionSpec};

    #[test]
    fn c5_is_g1() {
        let g = Graph::cycle(5);
        let bp = blowup_partition(&g).unwrap();
        assert!(bp.a.iter().all(|s| s.len() == 1));
        match decompose(&g).unwrap() {
            Decomposition::Expansion(e) => assert_eq!(e.base, 1),
            d => panic!("{d}"),
        }
    }

    #[test]
    fn tightness_two_gives_full_bags() {
        let g = tightness_family(2).unwrap();
        let bp = blowup_partition(&g).unwrap();
        assert!(bp.a.iter().all(|s| s.len() == 2));
        assert!(bp.r.is_empty() && bp.nonempty_y().is_empty());
        let Decomposition::Expansion(e) = decompose(&g).unwrap() else { panic!() };
        assert_eq!(e.base, 1);
        assert!(e.bags.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn every_unit_basic_graph_round_trips() {
        for k in 1..=10 {
            let g = basic_graph(k).unwrap().graph.clone();
            let d = decompose(&g).unwrap();
            let Decomposition::Expansion(e) = d else { panic!("G{k} gave H") };
            assert!(find_isomorphism(&e.collapse(&g), &basic_graph(k).unwrap().graph).is_some(), "G{k} -> G{}", e.base);
        }
    }

    #[test]
    fn g7_expansion_is_case_d() {
        let e = expansion(&ExpansionSpec::cliques(7, &[2, 1, 2, 1, 3, 2, 2, 1])).unwrap();
        let (bp, case, d) = decompose_traced(&e.graph).unwrap();
        assert_eq!(case, Case::D);
        assert_eq!(bp.nonempty_y().len(), 2);
        assert!(matches!(d, Decomposition::Expansion(ExpansionCert { base: 7, .. })));
    }

    #[test]
    fn cograph_bags_are_recovered() {
        let t = Cotree::Union(vec![Cotree::Leaf, Cotree::Join(vec![Cotree::Leaf, Cotree::Leaf])]);
        let spec = ExpansionSpec { base: 2, bags: vec![Bag::Cograph(t), Bag::Clique(1), Bag::Clique(2), Bag::Clique(1), Bag::Clique(1), Bag::Clique(1)] };
        let e = expansion(&spec).unwrap();
        let Decomposition::Expansion(c) = decompose(&e.graph).unwrap() else { panic!() };
        assert_eq!(c.base, 2);
        assert!(c.bags.contains(&e.bags[0]));
    }

    #[test]
    fn hstar_decomposes_to_h() {
        for seed in 0..10 {
            let (g, p) = random_hstar(seed, 12).unwrap();
            p.validate(&g, true).unwrap();
            match decompose(&g) {
                Ok(d) => d.validate(&g).unwrap(),
                Err(e) => panic!("seed {seed}: {e}"),
            }
        }
    }

    #[test]
    fn h_validator_rejects_injected_edge() {
        let (mut g, p) = random_hstar(1, 10).unwrap();
        let (u, v) = (p.sets[0].first().unwrap(), p.sets[2].first().unwrap());
        g.add_edge(u, v);
        assert_eq!(p.validate(&g, true), Err(CertError::NotAnticomplete(1, 3)));
    }

    #[test]
    fn injected_pendant_is_structural() {
        // a vertex seeing only A1 of a C5 creates a P5
        let mut g = Graph::new(6);
        for (u, v) in Graph::cycle(5).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(0, 5);
        assert!(!detect::is_p5_gem_free(&g));
        let seed = detect::find_induced(&g, Pattern::C5).unwrap();
        let a = grow_blowup(&g, &seed).unwrap();
        assert!(matches!(classify_outside(&g, a), Err(DecomposeError::Structural { vertex: 5, .. })));
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(decompose(&Graph::complete(4)).unwrap_err(), DecomposeError::NoC5);
        assert_eq!(decompose(&Graph::new(2)).unwrap_err(), DecomposeError::Disconnected);
        assert!(matches!(decompose(&Graph::path(5)), Err(DecomposeError::NotInClass(_))));
    }

    #[test]
    fn json_is_one_based() {
        let d = decompose(&Graph::cycle(5)).unwrap();
        let v = d.to_json();
        assert_eq!(v["kind"], "expansion");
        assert_eq!(v["base"], 1);
        let all: Vec<u64> = v["bags"].as_array().unwrap().iter().flat_map(|b| b.as_array().unwrap().iter().map(|x| x.as_u64().unwrap())).collect();
        assert!(all.iter().all(|&x| (1..=5).contains(&x)));
    }
}
