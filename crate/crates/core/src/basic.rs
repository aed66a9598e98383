//! The ten basic graphs G1–G10 and the structural facts their coloring
//! arguments rely on.
//!
//! Vertices are `x1..xm` (ids `0..m`); G10 is `u1..u9` with `u_i ~ u_{i±1}`
//! and `u_i ~ u_{i±3}` (mod 9). Each definition carries a list of [`Constraint`]s
//! which [`validate_spec`] checks, so any drift in the adjacency data is
//! caught before the rest of the crate relies on it.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::detect::{self, Pattern};
use crate::graph::{find_isomorphism, Graph, VertexSet};
use crate::oracles::maximal_cliques;

pub const BASIC_COUNT: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("basic graph id {0} out of range 1..=10")]
pub struct BasicIdError(pub usize);

/// A proof-derived assertion about a basic graph. Vertex numbers are 1-based
/// (`3` means `x3`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Constraint {
    /// The set is stable.
    Stable(Vec<usize>),
    /// The set is a clique.
    Clique(Vec<usize>),
    /// `N(x_v)` is exactly the set.
    Neighborhood { vertex: usize, equals: Vec<usize> },
    /// `x_small` and `x_big` are non-adjacent and `N(x_small) ⊆ N(x_big)`:
    /// a coloring of `G \ Q_small` extends by reusing the colors of `Q_big`.
    Dominated { small: usize, big: usize },
    /// The stable set meets every maximal clique except the listed ones
    /// (which must be cliques).
    GoodUnless { set: Vec<usize>, except: Vec<Vec<usize>> },
    /// The stable sets together meet every maximal clique outside `except`
    /// exactly four times, and each `twice` clique exactly twice.
    FourfoldCover { sets: Vec<Vec<usize>>, except: Vec<Vec<usize>>, twice: Vec<Vec<usize>> },
    /// Every maximal clique is one of the listed sets.
    MaximalCliquesAmong(Vec<Vec<usize>>),
    /// Bags sharing a color block are non-adjacent.
    BlockColoring(Vec<(usize, &'static str)>),
    /// `u_i ~ u_j` iff `j - i ∈ {±1, ±3} (mod 9)`.
    CirculantRule,
    /// No two vertices have the same neighborhood outside each other.
    TwinFree,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn xs(v: &[usize]) -> String {
            let s: Vec<String> = v.iter().map(|i| format!("x{i}")).collect();
            format!("{{{}}}", s.join(","))
        }
        fn qs(v: &[usize]) -> String {
            let s: String = v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("");
            format!("Q{s}")
        }
        match self {
            Constraint::Stable(s) => write!(f, "{} stable", xs(s)),
            Constraint::Clique(s) => write!(f, "{} clique", xs(s)),
            Constraint::Neighborhood { vertex, equals } => write!(f, "N(x{vertex}) = {}", xs(equals)),
            Constraint::Dominated { small, big } => write!(f, "N(x{small}) within N(x{big})"),
            Constraint::GoodUnless { set, except } => {
                let ex: Vec<String> = except.iter().map(|c| qs(c)).collect();
                write!(f, "{} good unless [{}] are q-cliques", xs(set), ex.join(" "))
            }
            Constraint::FourfoldCover { sets, .. } => {
                let s: Vec<String> = sets.iter().map(|c| xs(c)).collect();
                write!(f, "{} meet every q-clique four times", s.join(" "))
            }
            Constraint::MaximalCliquesAmong(cs) => {
                let s: Vec<String> = cs.iter().map(|c| qs(c)).collect();
                write!(f, "maximal cliques among [{}]", s.join(" "))
            }
            Constraint::BlockColoring(a) => {
                let s: Vec<String> = a.iter().map(|(v, b)| format!("Q{v}:{b}")).collect();
                write!(f, "block coloring {} proper", s.join(" "))
            }
            Constraint::CirculantRule => f.write_str("edges u_i u_(i+1) and u_i u_(i+3) mod 9"),
            Constraint::TwinFree => f.write_str("twin-free"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasicGraphSpec {
    pub id: usize,
    pub graph: Graph,
    pub constraints: Vec<Constraint>,
}

impl BasicGraphSpec {
    /// Vertex count of G_k.
    pub fn order(&self) -> usize {
        self.graph.n()
    }
}

/// `G_k` for `1 ≤ k ≤ 10`.
pub fn basic_graph(k: usize) -> Result<&'static BasicGraphSpec, BasicIdError> {
    if !(1..=BASIC_COUNT).contains(&k) {
        return Err(BasicIdError(k));
    }
    Ok(&all_basic_graphs()[k - 1])
}

pub fn all_basic_graphs() -> &'static [BasicGraphSpec] {
    static SPECS: OnceLock<Vec<BasicGraphSpec>> = OnceLock::new();
    SPECS.get_or_init(|| (1..=BASIC_COUNT).map(build).collect())
}

fn edges_of(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = pairs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    let g = Graph::from_edges(n, &e);
    g.with_labels((1..=n).map(|i| format!("x{i}")).collect())
}

fn v(s: &[usize]) -> Vec<usize> {
    s.to_vec()
}

fn vv(s: &[&[usize]]) -> Vec<Vec<usize>> {
    s.iter().map(|x| x.to_vec()).collect()
}

fn good(set: &[usize], except: &[&[usize]]) -> Constraint {
    Constraint::GoodUnless { set: v(set), except: vv(except) }
}

fn with(base: &[&[usize]], extra: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vv(base);
    out.push(extra.to_vec());
    out
}

fn good_after(set: &[usize], base: &[&[usize]], extra: &[usize]) -> Constraint {
    Constraint::GoodUnless { set: v(set), except: with(base, extra) }
}

fn build(k: usize) -> BasicGraphSpec {
    use Constraint::*;
    let (graph, mut constraints) = match k {
        1 => (
            edges_of(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
            (1..=5)
                .map(|i| Neighborhood { vertex: i, equals: vec![(i + 3) % 5 + 1, i % 5 + 1] })
                .collect(),
        ),
        2 => (
            edges_of(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (3, 6), (4, 6)]),
            vec![Stable(v(&[2, 5, 6])), good(&[2, 5, 6], &[])],
        ),
        3 => {
            let ex: &[&[usize]] = &[&[1, 6], &[2, 3]];
            (
                edges_of(7, &[(1, 2), (1, 5), (1, 6), (2, 3), (2, 7), (3, 4), (3, 6), (4, 5), (4, 6), (4, 7)]),
                vec![
                    Neighborhood { vertex: 5, equals: v(&[1, 4]) },
                    Dominated { small: 5, big: 6 },
                    Dominated { small: 7, big: 3 },
                    Clique(v(&[1, 5])),
                    Clique(v(&[4, 5])),
                    Clique(v(&[1, 2])),
                    Clique(v(&[4, 7])),
                    Clique(v(&[2, 7])),
                    good_after(&[2, 4], ex, &[1, 5]),
                    good_after(&[1, 3, 7], ex, &[4, 5]),
                    good_after(&[3, 5, 7], ex, &[1, 2]),
                    good_after(&[2, 5, 6], ex, &[4, 7]),
                    good_after(&[1, 4], ex, &[2, 7]),
                    Stable(v(&[1, 3, 7])),
                    Stable(v(&[1, 4])),
                    Stable(v(&[5, 6, 7])),
                    Stable(v(&[2, 4])),
                    Stable(v(&[2, 5])),
                    FourfoldCover {
                        sets: vv(&[&[1, 3, 7], &[1, 4], &[5, 6, 7], &[2, 4], &[2, 5]]),
                        except: vv(ex),
                        twice: vec![],
                    },
                ],
            )
        }
        4 | 5 => {
            let mut e = vec![(1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 7), (3, 4), (3, 6), (4, 5), (4, 6), (4, 7)];
            let mut set = vec![2, 5, 6];
            if k == 5 {
                e.extend([(1, 8), (3, 8)]);
                set.push(8);
            }
            (
                edges_of(if k == 4 { 7 } else { 8 }, &e),
                vec![
                    Neighborhood { vertex: 5, equals: v(&[1, 4]) },
                    Dominated { small: 5, big: 7 },
                    Dominated { small: 5, big: 6 },
                    Clique(v(&[4, 5])),
                    Clique(v(&[1, 5])),
                    Stable(set.clone()),
                    good(&set, &[&[4, 7], &[1, 6]]),
                ],
            )
        }
        6 => {
            let ex: &[&[usize]] = &[&[1, 6], &[1, 5], &[6, 8]];
            (
                edges_of(
                    8,
                    &[(1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 7), (2, 8), (3, 4), (3, 6), (4, 5), (4, 6), (4, 7), (5, 8), (6, 8)],
                ),
                vec![
                    Neighborhood { vertex: 8, equals: v(&[2, 5, 6]) },
                    Dominated { small: 8, big: 1 },
                    Dominated { small: 5, big: 6 },
                    Clique(v(&[3, 4, 6])),
                    Clique(v(&[1, 2, 7])),
                    good_after(&[1, 4, 8], ex, &[2, 3]),
                    good_after(&[3, 5, 7], ex, &[2, 8]),
                    good_after(&[2, 4], ex, &[5, 8]),
                    good_after(&[3, 7, 8], ex, &[4, 5]),
                    good_after(&[2, 5, 6], ex, &[4, 7]),
                ],
            )
        }
        7 => {
            let ex: &[&[usize]] = &[&[2, 5], &[1, 4]];
            let family: &[&[usize]] = &[&[1, 2, 3], &[4, 5, 6], &[3, 6], &[1, 7], &[5, 7], &[2, 8], &[4, 8]];
            let mut all = vv(family);
            all.extend(vv(ex));
            (
                edges_of(8, &[(1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 5), (2, 8), (3, 6), (4, 5), (4, 6), (4, 8), (5, 6), (5, 7)]),
                vec![
                    Neighborhood { vertex: 7, equals: v(&[1, 5]) },
                    Dominated { small: 7, big: 2 },
                    Dominated { small: 8, big: 5 },
                    MaximalCliquesAmong(all),
                    good_after(&[6, 7, 8], ex, &[1, 2, 3]),
                    good_after(&[3, 7, 8], ex, &[4, 5, 6]),
                    good_after(&[1, 5, 8], ex, &[3, 6]),
                    good_after(&[3, 5, 8], ex, &[1, 7]),
                    good_after(&[1, 6, 8], ex, &[5, 7]),
                    good_after(&[3, 4, 7], ex, &[2, 8]),
                    good_after(&[2, 6, 7], ex, &[4, 8]),
                    Stable(v(&[6, 7, 8])),
                    Stable(v(&[1, 5, 8])),
                    Stable(v(&[3, 5, 8])),
                    Stable(v(&[3, 4, 7])),
                    Stable(v(&[1, 6, 8])),
                    Stable(v(&[2, 6, 7])),
                    FourfoldCover {
                        sets: vv(&[&[3, 4, 7], &[1, 6, 8], &[3, 5, 8], &[2, 6, 7], &[7, 8]]),
                        except: vv(ex),
                        twice: vv(ex),
                    },
                ],
            )
        }
        8 => {
            let ex: &[&[usize]] = &[&[7, 8], &[3, 7], &[2, 8]];
            (
                edges_of(
                    8,
                    &[(1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (5, 7), (6, 8), (7, 8)],
                ),
                vec![
                    Neighborhood { vertex: 2, equals: v(&[1, 3, 8]) },
                    Dominated { small: 2, big: 7 },
                    Dominated { small: 3, big: 8 },
                    Clique(v(&[1, 5, 7])),
                    Clique(v(&[4, 6, 8])),
                    good_after(&[1, 3, 8], ex, &[4, 5]),
                    good_after(&[2, 4, 7], ex, &[1, 6]),
                    good_after(&[3, 5, 6], ex, &[1, 2]),
                    good_after(&[2, 5, 6], ex, &[3, 4]),
                    good_after(&[1, 4], ex, &[2, 3]),
                ],
            )
        }
        9 => {
            let ex: &[&[usize]] = &[&[2, 8], &[3, 7], &[7, 8], &[4, 5], &[1, 6]];
            let mut c = vec![
                Dominated { small: 2, big: 7 },
                Dominated { small: 3, big: 8 },
                Dominated { small: 9, big: 5 },
                Dominated { small: 9, big: 6 },
                Clique(v(&[1, 5, 7])),
                Clique(v(&[4, 6, 8])),
                good_after(&[2, 4, 7], ex, &[1, 9]),
                good_after(&[1, 3, 8], ex, &[4, 9]),
                good_after(&[3, 5, 6, 9], ex, &[1, 2]),
                good_after(&[2, 5, 6, 9], ex, &[3, 4]),
                good_after(&[1, 4], ex, &[2, 3]),
            ];
            for blocks in G9_BLOCK_COLORINGS {
                c.push(BlockColoring(blocks.to_vec()));
            }
            (
                edges_of(
                    9,
                    &[
                        (1, 2),
                        (1, 5),
                        (1, 6),
                        (1, 7),
                        (1, 9),
                        (2, 3),
                        (2, 8),
                        (3, 4),
                        (3, 7),
                        (4, 5),
                        (4, 6),
                        (4, 8),
                        (4, 9),
                        (5, 7),
                        (6, 8),
                        (7, 8),
                    ],
                ),
                c,
            )
        }
        10 => {
            let mut e = Vec::new();
            for i in 0..9 {
                e.push((i + 1, (i + 1) % 9 + 1));
                e.push((i + 1, (i + 3) % 9 + 1));
            }
            let g = edges_of(9, &e).with_labels((1..=9).map(|i| format!("u{i}")).collect());
            let mut c = vec![CirculantRule];
            for i in 0..9 {
                let at = |d: usize| (i + d) % 9 + 1;
                c.push(good(&[at(4), at(6), at(8)], &[&[at(0), at(1)], &[at(1), at(2)], &[at(2), at(3)]]));
            }
            (g, c)
        }
        _ => unreachable!(),
    };
    constraints.push(Constraint::TwinFree);
    BasicGraphSpec { id: k, graph, constraints }
}

/// The explicit block colorings of clique expansions of G9 with all of
/// `|Q1|,|Q2|,|Q3|,|Q4|,|Q9|` equal to `q/2`: `q = 4k` in sub-cases (i)–(iii)
/// then `q = 4k+2` in sub-cases (i)–(iii). `z` is the extra singleton block.
pub const G9_BLOCK_COLORINGS: [[(usize, &str); 9]; 6] = [
    [(1, "AB"), (2, "CD"), (3, "EA"), (4, "BC"), (9, "DE"), (5, "E"), (6, "D"), (7, "CD"), (8, "AE")],
    [(1, "AB"), (2, "CD"), (3, "EA"), (4, "BC"), (9, "DE"), (5, "E"), (6, "DE"), (7, "CD"), (8, "A")],
    [(1, "AB"), (2, "CD"), (3, "EA"), (4, "BC"), (9, "DE"), (5, "DE"), (6, "DE"), (7, "C"), (8, "A")],
    [(1, "CD"), (2, "AE"), (3, "BD"), (4, "CE"), (9, "ABz"), (5, "B"), (6, "A"), (7, "AE"), (8, "BD")],
    [(1, "CD"), (2, "AE"), (3, "BD"), (4, "CE"), (9, "ABz"), (5, "B"), (6, "AB"), (7, "AE"), (8, "D")],
    [(1, "CD"), (2, "AE"), (3, "BD"), (4, "CE"), (9, "ABz"), (5, "AB"), (6, "AB"), (7, "E"), (8, "D")],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub basic: usize,
    pub check: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    /// Observations that do not fail validation but deserve a reader's eye.
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn ids(g: &Graph, one_based: &[usize]) -> VertexSet {
    g.set(one_based.iter().map(|i| i - 1))
}

fn check_constraint(g: &Graph, c: &Constraint, maximal: &[VertexSet]) -> bool {
    match c {
        Constraint::Stable(s) => g.is_stable(&ids(g, s)),
        Constraint::Clique(s) => g.is_clique(&ids(g, s)),
        Constraint::Neighborhood { vertex, equals } => *g.neighbors(vertex - 1) == ids(g, equals),
        Constraint::Dominated { small, big } => {
            let (a, b) = (small - 1, big - 1);
            !g.has_edge(a, b) && g.neighbors(a).is_subset(g.neighbors(b))
        }
        Constraint::GoodUnless { set, except } => {
            let s = ids(g, set);
            let ex: Vec<VertexSet> = except.iter().map(|e| ids(g, e)).collect();
            g.is_stable(&s)
                && ex.iter().all(|e| g.is_clique(e))
                && maximal.iter().filter(|m| !ex.contains(m)).all(|m| m.intersects(&s))
        }
        Constraint::FourfoldCover { sets, except, twice } => {
            let sets: Vec<VertexSet> = sets.iter().map(|e| ids(g, e)).collect();
            let ex: Vec<VertexSet> = except.iter().map(|e| ids(g, e)).collect();
            let hits = |c: &VertexSet| sets.iter().filter(|s| s.intersects(c)).count();
            sets.iter().all(|s| g.is_stable(s))
                && maximal.iter().filter(|m| !ex.contains(m)).all(|m| hits(m) == 4)
                && twice.iter().all(|t| hits(&ids(g, t)) == 2)
        }
        Constraint::MaximalCliquesAmong(list) => {
            let list: Vec<VertexSet> = list.iter().map(|e| ids(g, e)).collect();
            maximal.iter().all(|m| list.contains(m))
        }
        Constraint::BlockColoring(assign) => assign.iter().enumerate().all(|(i, (a, ba))| {
            assign[i + 1..].iter().all(|(b, bb)| !g.has_edge(a - 1, b - 1) || !ba.chars().any(|c| bb.contains(c)))
        }),
        Constraint::CirculantRule => {
            g.n() == 9
                && (0..9).all(|i| (0..9).filter(|&j| j != i).all(|j| g.has_edge(i, j) == matches!((j + 9 - i) % 9, 1 | 3 | 6 | 8)))
        }
        Constraint::TwinFree => (0..g.n()).all(|u| {
            (u + 1..g.n()).all(|w| {
                let mut a = g.neighbors(u).clone();
                let mut b = g.neighbors(w).clone();
                a.remove(w);
                b.remove(u);
                a != b
            })
        }),
    }
}

/// Checks one basic graph definition: (P5, gem)-freeness, an induced C5, and every constraint.
pub fn validate_spec(spec: &BasicGraphSpec) -> Vec<CheckResult> {
    let g = &spec.graph;
    let mut out = Vec::new();
    let mut push = |check: String, passed: bool| out.push(CheckResult { basic: spec.id, check, passed });
    match detect::check_p5_gem_free(g) {
        Ok(()) => push("(P5,gem)-free".into(), true),
        Err(hit) => push(format!("(P5,gem)-free: found {hit}"), false),
    }
    let c5 = detect::find_induced(g, Pattern::C5).is_some();
    push(if c5 { "contains an induced C5".into() } else { "contains no induced C5".into() }, c5);
    let maximal = maximal_cliques(g);
    for c in &spec.constraints {
        push(c.to_string(), check_constraint(g, c, &maximal));
    }
    out
}

/// Validates all ten basic graphs and notes isomorphic pairs.
pub fn validate_basic_graphs() -> ValidationReport {
    let specs = all_basic_graphs();
    let mut report = ValidationReport::default();
    for spec in specs {
        report.checks.extend(validate_spec(spec));
    }
    for a in 0..specs.len() {
        for b in a + 1..specs.len() {
            if find_isomorphism(&specs[a].graph, &specs[b].graph).is_some() {
                report.notes.push(format!(
                    "G{} and G{} are isomorphic as unlabeled graphs; their labelings differ and each satisfies its own constraints",
                    a + 1,
                    b + 1
                ));
            }
        }
    }
    report
}
