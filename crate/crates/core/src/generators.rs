//! Graph families: expansions of the basic graphs, H and H* instances, the
//! tightness family, and a seeded corpus of random (P5, gem)-free graphs.
//!
//! Everything here is a deterministic function of its seed and parameters
//! (ChaCha8 streams).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::basic::{basic_graph, BasicIdError};
use crate::decompose::HPartition;
use crate::detect;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error(transparent)]
    BadBase(#[from] BasicIdError),
    #[error("expected {expected} bags for G{base}, got {got}")]
    BagCount { base: usize, expected: usize, got: usize },
    #[error("bag {0} is empty")]
    EmptyBag(usize),
    #[error("tightness family needs q >= 1")]
    ZeroQ,
    #[error("budget {budget} is below the minimum {min}")]
    Budget { budget: usize, min: usize },
    #[error("no (P5,gem)-free adjacency found")]
    Exhausted,
}

/// A union/join tree describing a P4-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Cotree {
    Leaf,
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn size(&self) -> usize {
        match self {
            Cotree::Leaf => 1,
            Cotree::Union(c) | Cotree::Join(c) => c.iter().map(Cotree::size).sum(),
        }
    }

    /// Adds the edges of this cotree on `ids` (which must have `size()` entries).
    fn realize(&self, g: &mut Graph, ids: &[usize]) {
        let (Cotree::Union(children) | Cotree::Join(children)) = self else { return };
        let mut parts = Vec::with_capacity(children.len());
        let mut at = 0;
        for c in children {
            let s = &ids[at..at + c.size()];
            c.realize(g, s);
            parts.push(s);
            at += c.size();
        }
        if matches!(self, Cotree::Join(_)) {
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    for &u in parts[i] {
                        for &v in parts[j] {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.size());
        let ids: Vec<usize> = (0..g.n()).collect();
        self.realize(&mut g, &ids);
        g
    }

    /// A random cotree on exactly `n` leaves, alternating union and join
    /// below a root of kind `join_root`.
    pub fn random<R: Rng>(rng: &mut R, n: usize, join_root: bool) -> Cotree {
        if n <= 1 {
            return Cotree::Leaf;
        }
        let k = rng.gen_range(2..=n.min(4));
        // random composition of n into k positive parts
        let mut cuts: Vec<usize> = (1..n).collect::<Vec<_>>().choose_multiple(rng, k - 1).copied().collect();
        cuts.sort_unstable();
        let mut sizes = Vec::with_capacity(k);
        let mut prev = 0;
        for c in cuts.into_iter().chain(std::iter::once(n)) {
            sizes.push(c - prev);
            prev = c;
        }
        let children = sizes.into_iter().map(|s| Cotree::random(rng, s, !join_root)).collect();
        if join_root {
            Cotree::Join(children)
        } else {
            Cotree::Union(children)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Bag {
    Clique(usize),
    Cograph(Cotree),
}

impl Bag {
    pub fn size(&self) -> usize {
        match self {
            Bag::Clique(n) => *n,
            Bag::Cograph(t) => t.size(),
        }
    }

    fn realize(&self, g: &mut Graph, ids: &[usize]) {
        match self {
            Bag::Clique(_) => {
                for (i, &u) in ids.iter().enumerate() {
                    for &v in &ids[i + 1..] {
                        g.add_edge(u, v);
                    }
                }
            }
            Bag::Cograph(t) => t.realize(g, ids),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionSpec {
    pub base: usize,
    pub bags: Vec<Bag>,
}

impl ExpansionSpec {
    pub fn cliques(base: usize, sizes: &[usize]) -> Self {
        ExpansionSpec { base, bags: sizes.iter().map(|&s| Bag::Clique(s)).collect() }
    }
}

/// A generated expansion: bag `i` holds the vertices standing for base vertex `i`.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: Graph,
    pub bags: Vec<VertexSet>,
}

/// Expands an arbitrary base graph; bags get consecutive ids in base order.
pub fn expand(base: &Graph, bags: &[Bag]) -> Result<Expansion, GenError> {
    if let Some(i) = bags.iter().position(|b| b.size() == 0) {
        return Err(GenError::EmptyBag(i));
    }
    let n: usize = bags.iter().map(Bag::size).sum();
    let mut g = Graph::new(n);
    let mut ranges = Vec::with_capacity(bags.len());
    let mut at = 0;
    for b in bags {
        let ids: Vec<usize> = (at..at + b.size()).collect();
        b.realize(&mut g, &ids);
        ranges.push(ids);
        at += b.size();
    }
    for (a, b) in base.edges() {
        for &u in &ranges[a] {
            for &v in &ranges[b] {
                g.add_edge(u, v);
            }
        }
    }
    let bags = ranges.into_iter().map(|r| g.set(r)).collect();
    Ok(Expansion { graph: g, bags })
}

/// The expansion of `G_base` described by `spec`.
pub fn expansion(spec: &ExpansionSpec) -> Result<Expansion, GenError> {
    let b = basic_graph(spec.base)?;
    if spec.bags.len() != b.order() {
        return Err(GenError::BagCount { base: spec.base, expected: b.order(), got: spec.bags.len() });
    }
    expand(&b.graph, &spec.bags)
}

/// C5 with every vertex blown up into a clique of size `q`.
pub fn tightness_family(q: usize) -> Result<Graph, GenError> {
    if q == 0 {
        return Err(GenError::ZeroQ);
    }
    Ok(expansion(&ExpansionSpec::cliques(1, &[q; 5]))?.graph)
}

/// A cograph bag on `n` vertices with a random root kind.
pub fn random_bag<R: Rng>(rng: &mut R, n: usize) -> Bag {
    let join = rng.gen_bool(0.5);
    Bag::Cograph(Cotree::random(rng, n, join))
}

/// A seeded random expansion of `G_base` with bags of size `1..=max_bag`;
/// clique bags, or random cograph bags with `cograph` set.
pub fn seeded_expansion(seed: u64, base: usize, max_bag: usize, cograph: bool) -> Result<Expansion, GenError> {
    basic_graph(base)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = random_sizes(&mut rng, base, max_bag);
    let bags = sizes.iter().map(|&n| if cograph { random_bag(&mut rng, n) } else { Bag::Clique(n) }).collect();
    expansion(&ExpansionSpec { base, bags })
}

/// Random bag sizes in `1..=max` for `G_base`.
pub fn random_sizes<R: Rng>(rng: &mut R, base: usize, max: usize) -> Vec<usize> {
    let m = basic_graph(base).map(|b| b.order()).unwrap_or(0);
    (0..m).map(|_| rng.gen_range(1..=max.max(1))).collect()
}

// The class-H adjacency between the seven sets, besides A6–A7.
const H_COMPLETE: [(usize, usize); 8] = [(0, 1), (0, 4), (0, 5), (2, 1), (2, 3), (2, 5), (3, 4), (3, 5)];

fn split_sizes<R: Rng>(rng: &mut R, total: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![1; parts];
    for _ in parts..total {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    sizes
}

/// A random member of H on `budget` vertices.
///
/// With `star` set, A1..A5 and the components of A7 are cliques (class H*);
/// otherwise they are random P4-free graphs (components of A7 connected).
/// A6 is always a random P4-free graph. Each (A6 vertex, A7 component) pair
/// is complete or anticomplete; the sampled adjacency is rejection-tested for
/// connectivity and (P5, gem)-freeness up to 1000 times before falling back
/// to A7 complete to A6, then anticomplete.
pub fn random_h(seed: u64, budget: usize, star: bool) -> Result<(Graph, HPartition), GenError> {
    if budget < 7 {
        return Err(GenError::Budget { budget, min: 7 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = split_sizes(&mut rng, budget, 7);
    let mut bags: Vec<Bag> = Vec::new();
    for &s in &sizes[..5] {
        bags.push(if star { Bag::Clique(s) } else { random_bag(&mut rng, s) });
    }
    bags.push(random_bag(&mut rng, sizes[5]));
    let ncomp = rng.gen_range(1..=sizes[6].min(3));
    let comps = split_sizes(&mut rng, sizes[6], ncomp);
    for &s in &comps {
        bags.push(if star { Bag::Clique(s) } else { Bag::Cograph(Cotree::random(&mut rng, s, true)) });
    }
    let mut base = Graph::new(bags.len());
    for (a, b) in H_COMPLETE {
        base.add_edge(a, b);
    }
    let skeleton = expand(&base, &bags)?;
    let a6 = skeleton.bags[5].to_vec();
    let comp_sets: Vec<VertexSet> = skeleton.bags[6..].to_vec();
    let mut sets: Vec<VertexSet> = skeleton.bags[..6].to_vec();
    let mut a7 = skeleton.graph.empty_set();
    for c in &comp_sets {
        a7.union_with(c);
    }
    sets.push(a7);
    let partition = HPartition { sets: sets.try_into().expect("seven sets") };

    let with_links = |links: &dyn Fn(usize, usize) -> bool| {
        let mut g = skeleton.graph.clone();
        for &u in &a6 {
            for (ci, c) in comp_sets.iter().enumerate() {
                if links(u, ci) {
                    for v in c.iter() {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    };
    for _ in 0..1000 {
        let p: f64 = rng.gen_range(0.2..0.9);
        let choice: Vec<Vec<bool>> = a6.iter().map(|_| comp_sets.iter().map(|_| rng.gen_bool(p)).collect()).collect();
        let g = with_links(&|u, ci| choice[a6.iter().position(|&x| x == u).unwrap()][ci]);
        if g.is_connected() && detect::is_p5_gem_free(&g) {
            return Ok((g, partition));
        }
    }
    for fallback in [true, false] {
        let g = with_links(&|_, _| fallback);
        if detect::is_p5_gem_free(&g) {
            return Ok((g, partition));
        }
    }
    Err(GenError::Exhausted)
}

/// A random H* instance on `budget` vertices.
pub fn random_hstar(seed: u64, budget: usize) -> Result<(Graph, HPartition), GenError> {
    random_h(seed, budget, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    CliqueExpansion,
    CographExpansion,
    HStar,
    H,
    Tightness,
    Cograph,
    InducedSubgraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub max_n: usize,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams { max_n: 40 }
    }
}

/// A connected (P5, gem)-free graph with at most `params.max_n` vertices,
/// drawn from a family picked by the seed.
pub fn random_instance(seed: u64, params: InstanceParams) -> Graph {
    random_instance_with_family(seed, params).0
}

/// Like [`random_instance`], also naming the family used.
pub fn random_instance_with_family(seed: u64, params: InstanceParams) -> (Graph, Family) {
    let max_n = params.max_n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_9e3c_0ffe_e000);
    let family = *[
        Family::CliqueExpansion,
        Family::CliqueExpansion,
        Family::CographExpansion,
        Family::CographExpansion,
        Family::HStar,
        Family::H,
        Family::Tightness,
        Family::Cograph,
        Family::InducedSubgraph,
        Family::InducedSubgraph,
    ]
    .choose(&mut rng)
    .unwrap();
    let g = build_family(&mut rng, family, max_n).unwrap_or_else(|| Graph::cycle(5.min(max_n)));
    let g = largest_component(&g);
    debug_assert!(g.n() <= max_n);
    debug_assert!(detect::is_p5_gem_free(&g));
    (g, family)
}

fn random_expansion<R: Rng>(rng: &mut R, max_n: usize, cograph: bool) -> Option<Graph> {
    let k = rng.gen_range(1..=10);
    let m = basic_graph(k).ok()?.order();
    if m > max_n {
        return None;
    }
    let cap = (max_n / m).clamp(1, 5);
    let mut sizes: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=cap)).collect();
    while sizes.iter().sum::<usize>() > max_n {
        let i = sizes.iter().enumerate().max_by_key(|(_, &s)| s).map(|(i, _)| i)?;
        sizes[i] -= 1;
    }
    let bags = sizes
        .iter()
        .map(|&s| if cograph && s > 1 { random_bag(rng, s) } else { Bag::Clique(s) })
        .collect();
    Some(expansion(&ExpansionSpec { base: k, bags }).ok()?.graph)
}

fn build_family<R: Rng>(rng: &mut R, family: Family, max_n: usize) -> Option<Graph> {
    match family {
        Family::CliqueExpansion => random_expansion(rng, max_n, false),
        Family::CographExpansion => random_expansion(rng, max_n, true),
        Family::HStar | Family::H => {
            if max_n < 7 {
                return None;
            }
            let budget = rng.gen_range(7..=max_n.min(24));
            random_h(rng.gen(), budget, family == Family::HStar).ok().map(|(g, _)| g)
        }
        Family::Tightness => {
            let q = rng.gen_range(1..=(max_n / 5).clamp(1, 6));
            tightness_family(q).ok()
        }
        Family::Cograph => {
            let n = rng.gen_range(1..=max_n.min(20));
            Some(Cotree::random(rng, n, true).graph())
        }
        Family::InducedSubgraph => {
            let inner = *[Family::CliqueExpansion, Family::CographExpansion, Family::HStar, Family::H].choose(rng).unwrap();
            let g = build_family(rng, inner, max_n)?;
            let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.8)).collect();
            if keep.is_empty() {
                return None;
            }
            Some(g.induced(&g.set(keep)).graph)
        }
    }
}

fn largest_component(g: &Graph) -> Graph {
    match g.components().into_iter().max_by_key(|c| (c.len(), std::cmp::Reverse(c.first()))) {
        Some(c) if c.len() < g.n() => g.induced(&c).graph,
        _ => g.clone(),
    }
}
