//! Case procedures for clique expansions of G1..G10.
//!
//! Bags are 1-based as in the basic graphs. `(i, r)` names the `r`-th least
//! vertex of `Q_i`, so `(3, 1)` is `x'_3`. Rules are tried in order and the
//! first one that applies gives the step.

use super::{BoundTarget, Step, ToolCase};
use crate::basic::G9_BLOCK_COLORINGS;
use crate::coloring::Coloring;
use crate::decompose::ExpansionCert;
use crate::graph::{Graph, VertexSet};

type Pick = (usize, usize);

enum Rule {
    /// Some bag is a single vertex: removing it leaves a perfect graph.
    SingletonPerfect,
    /// `Copy(a, b)`: if `|Q_a| ≤ |Q_b|`, color `G∖Q_a` and reuse `Q_b`'s colors.
    Copy(usize, usize),
    /// Unless the union of the bags is a q-clique, the picked vertices form
    /// a good stable set.
    UnlessQ(&'static [usize], &'static [usize]),
    Good(&'static [usize]),
    Family(&'static [&'static [Pick]]),
    Blocks,
    Observation,
}

use Rule::*;

const G1: &[Rule] =
    &[SingletonPerfect, Family(&[&[(1, 0), (3, 0)], &[(2, 0), (4, 0)], &[(3, 1), (5, 0)], &[(4, 1), (1, 1)], &[(5, 1), (2, 1)]])];
const G2: &[Rule] = &[Good(&[2, 5, 6])];
const G3: &[Rule] = &[
    Copy(5, 6),
    Copy(7, 3),
    UnlessQ(&[1, 5], &[2, 4]),
    UnlessQ(&[4, 5], &[1, 3, 7]),
    UnlessQ(&[1, 2], &[3, 5, 7]),
    UnlessQ(&[4, 7], &[2, 5, 6]),
    UnlessQ(&[2, 7], &[1, 4]),
    Family(&[&[(1, 0), (3, 0), (7, 0)], &[(1, 1), (4, 0)], &[(5, 0), (6, 0), (7, 1)], &[(2, 0), (4, 1)], &[(2, 1), (5, 1)]]),
];
const G4: &[Rule] = &[Copy(5, 7), Copy(5, 6), Good(&[2, 5, 6])];
const G5: &[Rule] = &[Copy(5, 7), Copy(5, 6), Good(&[2, 5, 6, 8])];
const G6: &[Rule] = &[
    Copy(8, 1),
    Copy(5, 6),
    UnlessQ(&[2, 3], &[1, 4, 8]),
    UnlessQ(&[2, 8], &[3, 5, 7]),
    UnlessQ(&[5, 8], &[2, 4]),
    UnlessQ(&[4, 5], &[3, 7, 8]),
    Good(&[2, 5, 6]),
];
// Copy(7, 4) and Copy(8, 1) are the images of the first two under the
// automorphism (12)(45)(78); without them Q14 can still be a q-clique.
const G7: &[Rule] = &[
    Copy(7, 2),
    Copy(8, 5),
    Copy(7, 4),
    Copy(8, 1),
    UnlessQ(&[1, 2, 3], &[6, 7, 8]),
    UnlessQ(&[4, 5, 6], &[3, 7, 8]),
    UnlessQ(&[3, 6], &[1, 5, 8]),
    UnlessQ(&[1, 7], &[3, 5, 8]),
    UnlessQ(&[5, 7], &[1, 6, 8]),
    UnlessQ(&[2, 8], &[3, 4, 7]),
    UnlessQ(&[4, 8], &[2, 6, 7]),
    Family(&[
        &[(3, 0), (4, 0), (7, 0)],
        &[(1, 0), (6, 0), (8, 0)],
        &[(3, 1), (5, 0), (8, 1)],
        &[(6, 1), (2, 0), (7, 1)],
        &[(7, 2), (8, 2)],
    ]),
];
const G8: &[Rule] = &[
    Copy(2, 7),
    Copy(3, 8),
    UnlessQ(&[4, 5], &[1, 3, 8]),
    UnlessQ(&[1, 6], &[2, 4, 7]),
    UnlessQ(&[1, 2], &[3, 5, 6]),
    UnlessQ(&[3, 4], &[2, 5, 6]),
    Good(&[1, 4]),
];
const G9: &[Rule] = &[
    Copy(2, 7),
    Copy(3, 8),
    Copy(9, 5),
    Copy(9, 6),
    UnlessQ(&[1, 9], &[2, 4, 7]),
    UnlessQ(&[4, 9], &[1, 3, 8]),
    UnlessQ(&[1, 2], &[3, 5, 6, 9]),
    UnlessQ(&[3, 4], &[2, 5, 6, 9]),
    UnlessQ(&[2, 3], &[1, 4]),
    Blocks,
];
const G10: &[Rule] = &[Observation];

const RULES: [&[Rule]; 10] = [G1, G2, G3, G4, G5, G6, G7, G8, G9, G10];

// The automorphism of G9 that swaps the two halves; maps the sub-case with
// |Q6|, |Q7| small onto the one with |Q5|, |Q8| small.
const G9_MIRROR: [usize; 10] = [0, 4, 3, 2, 1, 6, 5, 8, 7, 9];

struct Bags<'a> {
    g: &'a Graph,
    q: usize,
    bags: &'a [VertexSet],
}

impl Bags<'_> {
    fn size(&self, i: usize) -> usize {
        self.bags[i - 1].len()
    }

    fn pick(&self, (i, r): Pick) -> Option<usize> {
        self.bags[i - 1].iter().nth(r)
    }

    fn picks(&self, ps: impl IntoIterator<Item = Pick>) -> Option<VertexSet> {
        let vs: Option<Vec<usize>> = ps.into_iter().map(|p| self.pick(p)).collect();
        vs.map(|vs| self.g.set(vs))
    }

    fn firsts(&self, bags: &[usize]) -> Option<VertexSet> {
        self.picks(bags.iter().map(|&i| (i, 0)))
    }

    fn is_q(&self, bags: &[usize]) -> bool {
        bags.iter().map(|&i| self.size(i)).sum::<usize>() == self.q
    }
}

/// The first step of the case procedure for `cert.base` that applies.
pub(super) fn plan(g: &Graph, cert: &ExpansionCert, target: BoundTarget) -> Option<(String, Step)> {
    let b = Bags { g, q: target.omega, bags: &cert.bags };
    for rule in RULES[cert.base - 1] {
        if let Some((name, step)) = apply(&b, rule, target) {
            return Some((format!("G{}:{name}", cert.base), step));
        }
    }
    None
}

fn apply(b: &Bags, rule: &Rule, target: BoundTarget) -> Option<(&'static str, Step)> {
    let good = |s: VertexSet| ("good-stable-set", Step::Tool(ToolCase::GoodStableSet(s)));
    match rule {
        SingletonPerfect => {
            let i = (1..=b.bags.len()).find(|&i| b.size(i) == 1)?;
            Some(("perfect-remainder", Step::Tool(ToolCase::PerfectRemainder(b.bags[i - 1].clone()))))
        }
        Copy(a, src) => (b.size(*a) <= b.size(*src))
            .then(|| ("copy", Step::Copy { target: b.bags[a - 1].clone(), source: b.bags[src - 1].to_vec() })),
        UnlessQ(union, s) => {
            if b.is_q(union) {
                None
            } else {
                b.firsts(s).map(good)
            }
        }
        Good(s) => b.firsts(s).map(good),
        Family(sets) => {
            let sets: Option<Vec<VertexSet>> = sets.iter().map(|s| b.picks(s.iter().copied())).collect();
            sets.map(|sets| ("stable-family", Step::Tool(ToolCase::StableFamily(sets))))
        }
        Blocks => g9_blocks(b, target).map(|c| ("blocks", Step::Direct(c))),
        Observation => {
            // three consecutive non-q edges Q_{i,i+1}, Q_{i+1,i+2}, Q_{i+2,i+3}
            let at = |i: usize| i % 9 + 1;
            let i = (0..9).find(|&i| (0..3).all(|d| !b.is_q(&[at(i + d), at(i + d + 1)])))?;
            b.firsts(&[at(i + 4), at(i + 6), at(i + 8)]).map(good)
        }
    }
}

// Explicit coloring once |Q1| = |Q2| = |Q3| = |Q4| = |Q9| = q/2.
fn g9_blocks(b: &Bags, target: BoundTarget) -> Option<Coloring> {
    let q = b.q;
    if !q.is_multiple_of(2) || [1, 2, 3, 4, 9].iter().any(|&i| b.size(i) != q / 2) {
        return None;
    }
    let k = q / 4;
    let (first_row, sizes) = if q.is_multiple_of(4) { (0, [k, k, k, k, k, 0]) } else { (3, [k, k, k, k + 1, k + 1, 1]) };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for s in sizes {
        blocks.push((next..next + s).collect());
        next += s;
    }
    debug_assert_eq!(next, target.bound);
    let s = |i| b.size(i);
    let (row, mirror) = if s(5) <= k && s(6) <= k {
        (0, false)
    } else if s(5) <= k && s(8) <= k {
        (1, false)
    } else if s(6) <= k && s(7) <= k {
        (1, true)
    } else if s(7) <= k && s(8) <= k {
        (2, false)
    } else {
        return None;
    };
    let mut out = vec![usize::MAX; b.g.n()];
    for &(bag, names) in &G9_BLOCK_COLORINGS[first_row + row] {
        let bag = if mirror { G9_MIRROR[bag] } else { bag };
        let palette: Vec<usize> = names.chars().flat_map(|ch| blocks[block_index(ch)].iter().copied()).collect();
        if palette.len() < s(bag) {
            return None;
        }
        for (v, &c) in b.bags[bag - 1].iter().zip(&palette) {
            out[v] = c;
        }
    }
    Some(Coloring::from_assignment(out))
}

fn block_index(ch: char) -> usize {
    match ch {
        'A' => 0,
        'B' => 1,
        'C' => 2,
        'D' => 3,
        'E' => 4,
        _ => 5,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::basic_graph;
    use crate::graph::find_isomorphism;

    #[test]
    fn g9_mirror_is_an_automorphism() {
        let g = &basic_graph(9).unwrap().graph;
        for (u, v) in g.edges() {
            assert!(g.has_edge(G9_MIRROR[u + 1] - 1, G9_MIRROR[v + 1] - 1));
        }
        assert!(find_isomorphism(g, g).is_some());
    }

    #[test]
    fn every_base_has_rules() {
        assert_eq!(RULES.len(), crate::basic::BASIC_COUNT);
        assert!(RULES.iter().all(|r| !r.is_empty()));
    }
}
