//! Coloring (P5, gem)-free graphs with at most `⌈5ω/4⌉` colors.
//!
//! Each level of the recursion either splits into components, colors a
//! perfect graph exactly, or decomposes the graph, contracts it to a clique
//! expansion of a basic graph or a member of H*, and applies one step of the
//! matching case procedure. Steps recurse on strictly smaller induced
//! subgraphs. Every level checks its own output against the bound; a
//! violation, or a case procedure that finds nothing to do, is recorded as a
//! fallback in the [`Trace`].

mod expansion;
mod hstar;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::decompose::{decompose_unchecked, CertError, Decomposition, ExpansionCert, HPartition};
use crate::detect::{self, Pattern, PatternHit};
use crate::graph::{Graph, Induced, VertexSet};
use crate::oracles::{bound54, clique_number, is_good_stable_set, maximal_cliques, optimal_coloring, verify_coloring};
use crate::reduce::{lift, reduce_to_star};

/// Largest graph on which the fallback search enumerates maximal stable sets.
pub const FALLBACK_STABLE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTarget {
    pub omega: usize,
    pub bound: usize,
}

impl BoundTarget {
    pub fn new(omega: usize) -> Self {
        let bound = bound54(omega);
        assert!(bound >= omega && (omega == 0 || bound > omega));
        BoundTarget { omega, bound }
    }

    pub fn of(g: &Graph) -> Self {
        Self::new(clique_number(g))
    }
}

/// A coloring tool together with the witness it needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ToolCase {
    /// A vertex of degree at most `bound - 1`.
    LowDegreeVertex(usize),
    /// A stable set meeting every maximum clique.
    GoodStableSet(VertexSet),
    /// A stable set whose removal leaves a perfect graph.
    PerfectRemainder(VertexSet),
    /// `t ≥ 5` disjoint stable sets whose removal lowers ω by at least `t - 1`.
    StableFamily(Vec<VertexSet>),
}

impl ToolCase {
    pub fn name(&self) -> &'static str {
        match self {
            ToolCase::LowDegreeVertex(_) => "low-degree",
            ToolCase::GoodStableSet(_) => "good-stable-set",
            ToolCase::PerfectRemainder(_) => "perfect-remainder",
            ToolCase::StableFamily(_) => "stable-family",
        }
    }

    /// Checks the witness on `g`. Perfection of the remainder is tested as
    /// the absence of an induced C5, which suffices inside the class.
    pub fn verify(&self, g: &Graph) -> Result<(), ToolError> {
        let target = BoundTarget::of(g);
        let in_range = |s: &VertexSet| {
            if s.universe() == g.n() {
                Ok(())
            } else {
                Err(ToolError::Universe { got: s.universe(), n: g.n() })
            }
        };
        match self {
            ToolCase::LowDegreeVertex(v) => {
                if *v >= g.n() {
                    return Err(ToolError::OutOfRange(*v));
                }
                let degree = g.degree(*v);
                if degree + 1 > target.bound {
                    return Err(ToolError::Degree { v: *v, degree, max: target.bound - 1 });
                }
            }
            ToolCase::GoodStableSet(s) => {
                in_range(s)?;
                if !g.is_stable(s) {
                    return Err(ToolError::NotStable);
                }
                if s.is_empty() || !is_good_stable_set(g, s) {
                    return Err(ToolError::NotGood);
                }
            }
            ToolCase::PerfectRemainder(s) => {
                in_range(s)?;
                if !g.is_stable(s) {
                    return Err(ToolError::NotStable);
                }
                if detect::find_induced(&g.without(s).graph, Pattern::C5).is_some() {
                    return Err(ToolError::NotPerfect);
                }
            }
            ToolCase::StableFamily(sets) => {
                if sets.len() < 5 {
                    return Err(ToolError::TooFew(sets.len()));
                }
                let mut union = g.empty_set();
                for s in sets {
                    in_range(s)?;
                    if !g.is_stable(s) {
                        return Err(ToolError::NotStable);
                    }
                    if s.intersects(&union) {
                        return Err(ToolError::Overlap);
                    }
                    union.union_with(s);
                }
                let left = clique_number(&g.without(&union).graph);
                let max = (target.omega + 1).saturating_sub(sets.len());
                if left > max {
                    return Err(ToolError::OmegaTooLarge { left, max });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToolError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("set over {got} vertices used on a graph with {n}")]
    Universe { got: usize, n: usize },
    #[error("vertex {v} has degree {degree}, more than {max}")]
    Degree { v: usize, degree: usize, max: usize },
    #[error("set is not stable")]
    NotStable,
    #[error("stable set misses a maximum clique")]
    NotGood,
    #[error("remainder still contains an induced C5")]
    NotPerfect,
    #[error("{0} stable sets given, at least 5 needed")]
    TooFew(usize),
    #[error("stable sets overlap")]
    Overlap,
    #[error("remainder has clique number {left}, more than {max}")]
    OmegaTooLarge { left: usize, max: usize },
    #[error("copy extension: {0}")]
    BadCopy(&'static str),
    #[error("explicit coloring is not proper or exceeds the bound")]
    BadDirect,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph is not (P5,gem)-free: {0}")]
    NotInClass(PatternHit),
    #[error(transparent)]
    Tool(#[from] ToolError),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error("certificate bags are not all cliques")]
    NotCliqueExpansion,
}

/// What one recursion level did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Event {
    pub depth: usize,
    pub n: usize,
    pub omega: usize,
    /// e.g. `perfect`, `components`, `G3:copy`, `H*:low-degree`, `fallback:...`.
    pub route: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub events: Vec<Event>,
    /// Levels where the case procedures did not produce a valid step or the
    /// result broke the bound.
    pub fallbacks: usize,
    #[serde(skip)]
    depth: usize,
}

impl Trace {
    fn log(&mut self, g: &Graph, omega: usize, route: impl Into<String>) {
        self.events.push(Event { depth: self.depth, n: g.n(), omega, route: route.into() });
    }

    /// Number of events whose route starts with `prefix`.
    pub fn count(&self, prefix: &str) -> usize {
        self.events.iter().filter(|e| e.route.starts_with(prefix)).count()
    }
}

/// One step of a case procedure, in the ids of the graph it applies to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Tool(ToolCase),
    /// Color `g∖target` recursively, then give `target[i]` the color of
    /// `source[i]`.
    Copy { target: VertexSet, source: Vec<usize> },
    /// A complete coloring, checked before use.
    Direct(Coloring),
}

/// Colors a (P5, gem)-free graph with at most `⌈5ω/4⌉` colors.
pub fn color(g: &Graph) -> Result<Coloring, EngineError> {
    color_traced(g).map(|(c, _)| c)
}

/// [`color`], also returning what every recursion level did.
pub fn color_traced(g: &Graph) -> Result<(Coloring, Trace), EngineError> {
    detect::check_p5_gem_free(g).map_err(EngineError::NotInClass)?;
    let mut trace = Trace::default();
    let c = color_rec(g, &mut trace);
    Ok((c, trace))
}

/// Applies one tool after verifying its witness. `g` must be (P5, gem)-free;
/// recursive calls go through the engine.
pub fn apply_tool(g: &Graph, tc: &ToolCase) -> Result<Coloring, ToolError> {
    run_tool(g, tc, &mut Trace::default())
}

/// Colors a clique expansion of a basic graph by its case procedure.
pub fn color_expansion(g: &Graph, cert: &ExpansionCert) -> Result<(Coloring, Trace), EngineError> {
    cert.validate(g)?;
    if !cert.is_clique_expansion(g) {
        return Err(EngineError::NotCliqueExpansion);
    }
    let target = BoundTarget::of(g);
    let mut trace = Trace::default();
    let c = run_plan(g, target, expansion::plan(g, cert, target), &mut trace);
    Ok((c, trace))
}

/// Colors a member of H* by its case procedure.
pub fn color_hstar(g: &Graph, part: &HPartition) -> Result<(Coloring, Trace), EngineError> {
    part.validate(g, true)?;
    let target = BoundTarget::of(g);
    let mut trace = Trace::default();
    let c = run_plan(g, target, hstar::plan(g, part, target), &mut trace);
    Ok((c, trace))
}

fn run_plan(g: &Graph, target: BoundTarget, plan: Option<(String, Step)>, t: &mut Trace) -> Coloring {
    let c = match plan {
        Some((label, step)) => {
            t.log(g, target.omega, label);
            execute(g, step, t).map_err(|e| e.to_string())
        }
        None => Err("no rule applied".to_string()),
    };
    let c = c.unwrap_or_else(|reason| fallback_search(g, target, t, &reason));
    checked(g, c, target, t)
}

pub(crate) fn color_rec(g: &Graph, t: &mut Trace) -> Coloring {
    t.depth += 1;
    let c = color_level(g, t);
    t.depth -= 1;
    c
}

fn color_level(g: &Graph, t: &mut Trace) -> Coloring {
    if g.n() == 0 {
        return Coloring::empty();
    }
    let comps = g.components();
    if comps.len() > 1 {
        t.log(g, 0, "components");
        let mut out = vec![0; g.n()];
        for comp in &comps {
            let sub = g.induced(comp);
            let c = color_rec(&sub.graph, t);
            for (i, &v) in sub.map.iter().enumerate() {
                out[v] = c.color(i);
            }
        }
        return Coloring::from_assignment(out);
    }
    let target = BoundTarget::of(g);
    if detect::find_induced(g, Pattern::C5).is_none() {
        t.log(g, target.omega, "perfect");
        return optimal_coloring(g);
    }
    let c = match structured(g, target, t) {
        Ok(c) => c,
        Err(reason) => fallback_search(g, target, t, &reason),
    };
    checked(g, c, target, t)
}

fn structured(g: &Graph, target: BoundTarget, t: &mut Trace) -> Result<Coloring, String> {
    let d = decompose_unchecked(g).map_err(|e| format!("decompose: {e}"))?;
    let (star, d, chain) = reduce_to_star(g, &d).map_err(|e| format!("reduce: {e}"))?;
    let planned = match &d {
        Decomposition::Expansion(e) => expansion::plan(&star, e, target),
        Decomposition::H(h) => hstar::plan(&star, h, target),
    };
    let (label, step) = planned.ok_or_else(|| format!("{}: no rule applied", d.kind()))?;
    t.log(g, target.omega, &label);
    let c = execute(&star, step, t).map_err(|e| format!("{label}: {e}"))?;
    Ok(lift(&c, &chain))
}

fn checked(g: &Graph, c: Coloring, target: BoundTarget, t: &mut Trace) -> Coloring {
    if verify_coloring(g, &c) && c.count() <= target.bound {
        return c;
    }
    log::warn!("level with n={} produced {} colors against bound {}; recoloring exactly", g.n(), c.count(), target.bound);
    t.fallbacks += 1;
    t.log(g, target.omega, "fallback:bound");
    optimal_coloring(g)
}

// Exhaustive tool search for when the case procedures come up empty.
fn fallback_search(g: &Graph, target: BoundTarget, t: &mut Trace, reason: &str) -> Coloring {
    log::warn!("case procedure failed on n={} (ω={}): {reason}", g.n(), target.omega);
    t.fallbacks += 1;
    t.log(g, target.omega, format!("fallback:{reason}"));
    if let Some(v) = (0..g.n()).min_by_key(|&v| g.degree(v)).filter(|&v| g.degree(v) < target.bound) {
        if let Ok(c) = run_tool(g, &ToolCase::LowDegreeVertex(v), t) {
            return c;
        }
    }
    if g.n() <= FALLBACK_STABLE_LIMIT {
        let good = maximal_cliques(&g.complement()).into_iter().find(|s| is_good_stable_set(g, s));
        if let Some(s) = good {
            if let Ok(c) = run_tool(g, &ToolCase::GoodStableSet(s), t) {
                return c;
            }
        }
    }
    optimal_coloring(g)
}

fn execute(g: &Graph, step: Step, t: &mut Trace) -> Result<Coloring, ToolError> {
    match step {
        Step::Tool(tc) => run_tool(g, &tc, t),
        Step::Copy { target, source } => copy_extension(g, &target, &source, t),
        Step::Direct(c) => {
            if verify_coloring(g, &c) && c.count() <= BoundTarget::of(g).bound {
                Ok(c)
            } else {
                Err(ToolError::BadDirect)
            }
        }
    }
}

// Colors of `rest` written back into host ids; vertices outside `rest` are unset.
fn spread(host_n: usize, rest: &Induced, c: &Coloring) -> Vec<usize> {
    let mut out = vec![usize::MAX; host_n];
    for (i, &v) in rest.map.iter().enumerate() {
        out[v] = c.color(i);
    }
    out
}

fn run_tool(g: &Graph, tc: &ToolCase, t: &mut Trace) -> Result<Coloring, ToolError> {
    tc.verify(g)?;
    let removed = match tc {
        ToolCase::LowDegreeVertex(v) => vec![g.set([*v])],
        ToolCase::GoodStableSet(s) | ToolCase::PerfectRemainder(s) => vec![s.clone()],
        ToolCase::StableFamily(sets) => sets.clone(),
    };
    let mut union = g.empty_set();
    for s in &removed {
        union.union_with(s);
    }
    let rest = g.without(&union);
    let c = match tc {
        ToolCase::PerfectRemainder(_) => optimal_coloring(&rest.graph),
        _ => color_rec(&rest.graph, t),
    };
    let mut out = spread(g.n(), &rest, &c);
    match tc {
        ToolCase::LowDegreeVertex(v) => {
            let used: VertexSet = VertexSet::from_iter(g.n() + 1, g.neighbors(*v).iter().map(|u| out[u]));
            out[*v] = (0..).find(|&k| !used.contains(k)).unwrap();
        }
        _ => {
            for (i, s) in removed.iter().enumerate() {
                for v in s.iter() {
                    out[v] = c.count() + i;
                }
            }
        }
    }
    Ok(Coloring::from_assignment(out))
}

fn copy_extension(g: &Graph, target: &VertexSet, source: &[usize], t: &mut Trace) -> Result<Coloring, ToolError> {
    let src = g.set(source.iter().copied());
    if target.is_empty() || !g.is_clique(target) {
        return Err(ToolError::BadCopy("target is not a nonempty clique"));
    }
    if src.len() != source.len() || !g.is_clique(&src) {
        return Err(ToolError::BadCopy("source is not a clique"));
    }
    if src.len() < target.len() {
        return Err(ToolError::BadCopy("source is smaller than target"));
    }
    if src.intersects(target) || !g.is_anticomplete_to(target, &src) {
        return Err(ToolError::BadCopy("source meets or sees the target"));
    }
    let outside = &g.neighborhood(target) - target;
    if !source.iter().all(|&s| outside.is_subset(g.neighbors(s))) {
        return Err(ToolError::BadCopy("source does not see every neighbor of the target"));
    }
    let rest = g.without(target);
    let c = color_rec(&rest.graph, t);
    let mut out = spread(g.n(), &rest, &c);
    for (v, &s) in target.iter().zip(source) {
        out[v] = out[s];
    }
    Ok(Coloring::from_assignment(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::generators::{expansion, tightness_family, ExpansionSpec};
    use crate::oracles::{bound54, chi_exact, clique_number};
    use crate::reduce::cograph_color;

    fn assert_within(g: &Graph, c: &Coloring) {
        assert!(verify_coloring(g, c));
        assert!(c.count() <= BoundTarget::of(g).bound, "{} colors", c.count());
    }

    #[test]
    fn bound_target() {
        assert_eq!(BoundTarget::new(0).bound, 0);
        assert_eq!(BoundTarget::new(2).bound, 3);
        assert_eq!(BoundTarget::new(4).bound, 5);
        assert_eq!(BoundTarget::new(6).bound, 8);
    }

    #[test]
    fn c5_gets_three_colors() {
        let (c, t) = color_traced(&Graph::cycle(5)).unwrap();
        assert_eq!(c.count(), 3);
        assert_eq!(t.fallbacks, 0);
    }

    #[test]
    fn tightness_two_gets_five() {
        let g = tightness_family(2).unwrap();
        let (c, t) = color_traced(&g).unwrap();
        assert_eq!(c.count(), 5);
        assert!(verify_coloring(&g, &c));
        assert_eq!(t.fallbacks, 0);
        assert_eq!(chi_exact(&g, 20), Ok(5));
    }

    #[test]
    fn cograph_uses_omega() {
        let g = Graph::complete(4).complement();
        assert_eq!(color(&g).unwrap().count(), 1);
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(color(&g).unwrap().count(), cograph_color(&g).unwrap().count());
    }

    #[test]
    fn rejects_p5() {
        assert!(matches!(color(&Graph::path(5)), Err(EngineError::NotInClass(_))));
    }

    #[test]
    fn isolated_vertex_takes_color_zero() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let c = apply_tool(&g, &ToolCase::LowDegreeVertex(5)).unwrap();
        assert_within(&g, &c);
        assert_eq!(c.color(5), 0);
    }

    #[test]
    fn bad_witnesses_are_rejected() {
        let g = Graph::cycle(5);
        assert_eq!(apply_tool(&g, &ToolCase::GoodStableSet(g.set([0, 1]))), Err(ToolError::NotStable));
        assert_eq!(apply_tool(&g, &ToolCase::GoodStableSet(g.set([0]))), Err(ToolError::NotGood));
        assert_eq!(apply_tool(&g, &ToolCase::StableFamily(vec![g.set([0]); 3])), Err(ToolError::TooFew(3)));
        assert_eq!(apply_tool(&g, &ToolCase::LowDegreeVertex(7)), Err(ToolError::OutOfRange(7)));
        // K3,3: ω = 2, bound 3, every degree 3
        let k = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_eq!(apply_tool(&k, &ToolCase::LowDegreeVertex(0)), Err(ToolError::Degree { v: 0, degree: 3, max: 2 }));
    }

    #[test]
    fn g2_good_stable_set() {
        let e = expansion(&ExpansionSpec::cliques(2, &[2, 1, 3, 1, 2, 1])).unwrap();
        let g = &e.graph;
        let s = g.set([e.bags[1].first().unwrap(), e.bags[4].first().unwrap(), e.bags[5].first().unwrap()]);
        let c = apply_tool(g, &ToolCase::GoodStableSet(s)).unwrap();
        assert_within(g, &c);
    }

    #[test]
    fn g1_family_and_singleton() {
        let e = expansion(&ExpansionSpec::cliques(1, &[3, 2, 3, 2, 3])).unwrap();
        let Decomposition::Expansion(cert) = decompose(&e.graph).unwrap() else { panic!() };
        let (c, t) = color_expansion(&e.graph, &cert).unwrap();
        assert_within(&e.graph, &c);
        assert_eq!(t.count("G1:stable-family"), 1);
        assert_eq!(t.fallbacks, 0);
        let e = expansion(&ExpansionSpec::cliques(1, &[1, 2, 3, 2, 3])).unwrap();
        let Decomposition::Expansion(cert) = decompose(&e.graph).unwrap() else { panic!() };
        let (c, t) = color_expansion(&e.graph, &cert).unwrap();
        assert_within(&e.graph, &c);
        assert_eq!(t.count("G1:perfect-remainder"), 1);
    }

    #[test]
    fn g7_residual_family() {
        // |Q3| = |Q6| = q/2, |Q7| = q - |Q1|, |Q8| = q - |Q2|, |Q5| = |Q1|, |Q4| = |Q2|
        let e = expansion(&ExpansionSpec::cliques(7, &[1, 1, 2, 1, 1, 2, 3, 3])).unwrap();
        let Decomposition::Expansion(cert) = decompose(&e.graph).unwrap() else { panic!() };
        assert_eq!(cert.base, 7);
        let (c, t) = color_expansion(&e.graph, &cert).unwrap();
        assert_within(&e.graph, &c);
        assert_eq!(t.count("G7:stable-family"), 1, "{:?}", t.events);
        assert_eq!(t.fallbacks, 0);
    }

    fn expansion_route(base: usize, sizes: &[usize]) -> (Coloring, Trace) {
        let e = expansion(&ExpansionSpec::cliques(base, sizes)).unwrap();
        let Decomposition::Expansion(cert) = decompose(&e.graph).unwrap() else { panic!() };
        assert_eq!(cert.base, base);
        let (c, t) = color_expansion(&e.graph, &cert).unwrap();
        assert_within(&e.graph, &c);
        assert_eq!(t.fallbacks, 0, "{:?}", t.events);
        (c, t)
    }

    #[test]
    fn g3_residual_family() {
        let (_, t) = expansion_route(3, &[2, 2, 1, 2, 2, 1, 2]);
        assert_eq!(t.count("G3:stable-family"), 1, "{:?}", t.events);
    }

    #[test]
    fn g9_blocks_q4() {
        let (c, t) = expansion_route(9, &[2, 2, 2, 2, 1, 1, 1, 1, 2]);
        assert_eq!(c.count(), 5);
        assert_eq!(t.count("G9:blocks"), 1, "{:?}", t.events);
    }

    #[test]
    fn g9_blocks_every_subcase() {
        let cases: [[usize; 9]; 8] = [
            [4, 4, 4, 4, 2, 2, 2, 2, 4],
            [4, 4, 4, 4, 1, 3, 3, 1, 4],
            [4, 4, 4, 4, 3, 1, 1, 3, 4],
            [4, 4, 4, 4, 3, 3, 1, 1, 4],
            [3, 3, 3, 3, 1, 1, 2, 2, 3],
            [3, 3, 3, 3, 1, 2, 2, 1, 3],
            [3, 3, 3, 3, 2, 1, 1, 2, 3],
            [3, 3, 3, 3, 2, 2, 1, 1, 3],
        ];
        for sizes in cases {
            let (c, t) = expansion_route(9, &sizes);
            assert_eq!(t.count("G9:blocks"), 1, "{sizes:?}: {:?}", t.events);
            assert_eq!(c.count(), bound54(2 * sizes[0]), "{sizes:?}");
        }
    }

    // H* with the given sizes of A1..A5, A6 as disjoint cliques, and each
    // component of A7 a clique complete to one A6 clique.
    fn hstar(a: [usize; 5], a6: &[usize], ts: &[(usize, usize)]) -> (Graph, HPartition) {
        let mut sizes: Vec<usize> = a.to_vec();
        sizes.extend(a6);
        sizes.extend(ts.iter().map(|t| t.0));
        let n = sizes.iter().sum();
        let mut blocks = Vec::new();
        let mut next = 0;
        for s in &sizes {
            blocks.push((next..next + s).collect::<Vec<_>>());
            next += s;
        }
        let mut g = Graph::new(n);
        let join = |g: &mut Graph, x: &[usize], y: &[usize]| {
            for &u in x {
                for &v in y {
                    if u != v {
                        g.add_edge(u, v);
                    }
                }
            }
        };
        for b in &blocks {
            join(&mut g, b, b);
        }
        let a6_all: Vec<usize> = blocks[5..5 + a6.len()].concat();
        for (i, j) in [(0, 1), (0, 4), (2, 1), (2, 3), (3, 4)] {
            join(&mut g, &blocks[i], &blocks[j]);
        }
        for i in [0, 2, 3] {
            join(&mut g, &blocks[i], &a6_all);
        }
        for (j, &(_, part)) in ts.iter().enumerate() {
            join(&mut g, &blocks[5 + a6.len() + j], &blocks[5 + part]);
        }
        let mut sets: Vec<VertexSet> = blocks[..5].iter().map(|b| g.set(b.iter().copied())).collect();
        sets.push(g.set(a6_all));
        sets.push(g.set(blocks[5 + a6.len()..].concat()));
        let part = HPartition { sets: std::array::from_fn(|i| sets[i].clone()) };
        part.validate(&g, true).unwrap();
        (g, part)
    }

    #[test]
    fn hstar_low_degree_branch() {
        let (g, part) = hstar([1, 3, 1, 1, 3], &[2, 1], &[(3, 1)]);
        let (c, t) = color_hstar(&g, &part).unwrap();
        assert_within(&g, &c);
        assert_eq!(t.count("H*:low-degree"), 1, "{:?}", t.events);
        assert_eq!(t.fallbacks, 0);
    }

    #[test]
    fn hstar_family_branch() {
        let (g, part) = hstar([2, 4, 2, 2, 4], &[2, 1], &[(5, 1)]);
        assert_eq!(clique_number(&g), 6);
        let (c, t) = color_hstar(&g, &part).unwrap();
        assert_within(&g, &c);
        assert_eq!(t.count("H*:stable-family"), 1, "{:?}", t.events);
        assert_eq!(t.fallbacks, 0);
        let (c, t) = color_traced(&g).unwrap();
        assert_within(&g, &c);
        assert_eq!(t.fallbacks, 0);
    }

    #[test]
    fn hstar_copy_onto_a2() {
        let (g, part) = hstar([1, 1, 1, 1, 2], &[2], &[(1, 0)]);
        let (c, t) = color_hstar(&g, &part).unwrap();
        assert_within(&g, &c);
        assert!(t.events[0].route == "H*:copy");
    }

    #[test]
    fn minimal_hstar_matches_exact() {
        let (g, part) = hstar([1, 1, 1, 1, 1], &[1], &[(1, 0)]);
        assert_eq!(g.n(), 7);
        let (c, _) = color_hstar(&g, &part).unwrap();
        assert_within(&g, &c);
        assert_eq!(chi_exact(&g, 20), Ok(3));
        assert_eq!(c.count(), 3);
    }

    #[test]
    fn g10_unit_bags() {
        let g = crate::basic::basic_graph(10).unwrap().graph.clone();
        let (c, t) = color_traced(&g).unwrap();
        assert_within(&g, &c);
        assert!(c.count() <= 4);
        assert_eq!(t.fallbacks, 0);
    }
}
