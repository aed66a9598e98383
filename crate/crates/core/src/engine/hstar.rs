//! Case procedure for members of H*.
//!
//! `A1..A5` and the components `T_j` of `A7` are cliques. `x_i` is the least
//! vertex of `A_i`, `x'_i` the next one, and `t_j^r` the `r`-th least vertex
//! of `T_j`.

use super::{BoundTarget, Step, ToolCase};
use crate::decompose::HPartition;
use crate::graph::{Graph, VertexSet};
use crate::oracles::{is_good_stable_set, max_clique_within};

pub(super) fn plan(g: &Graph, part: &HPartition, target: BoundTarget) -> Option<(String, Step)> {
    let (name, step) = choose(g, part, target)?;
    Some((format!("H*:{name}"), step))
}

fn choose(g: &Graph, part: &HPartition, target: BoundTarget) -> Option<(&'static str, Step)> {
    let a = &part.sets;
    let q = target.omega;
    let ts = part.a7_components(g);

    // A6 is complete to A1 ∪ A3 = N(A2) and to A1 ∪ A4 = N(A5)
    let a6 = max_clique_within(g, &a[5]);
    for i in [1, 4] {
        if a[i].len() <= a6.len() {
            return Some(("copy", Step::Copy { target: a[i].clone(), source: a6.to_vec() }));
        }
    }

    let x = |i: usize, r: usize| a[i - 1].iter().nth(r);
    // x_i for the listed i (1-based) together with t_j^r of every T_j
    let with_t = |xs: &[(usize, usize)], r: usize| -> Option<VertexSet> {
        let mut vs: Vec<usize> = xs.iter().map(|&(i, k)| x(i, k)).collect::<Option<_>>()?;
        for t in &ts {
            vs.push(t.iter().nth(r)?);
        }
        Some(g.set(vs))
    };
    let good = |s: VertexSet| ("good-stable-set", Step::Tool(ToolCase::GoodStableSet(s)));

    let s = with_t(&[(2, 0), (5, 0)], 0)?;
    if is_good_stable_set(g, &s) {
        return Some(good(s));
    }
    let is_q = |i: usize, j: usize| a[i - 1].len() + a[j - 1].len() == q;
    let dichotomies: [((usize, usize), [usize; 2]); 4] =
        [((1, 2), [3, 5]), ((1, 5), [2, 4]), ((2, 3), [1, 4]), ((4, 5), [1, 3])];
    for ((i, j), [u, v]) in dichotomies {
        if !is_q(i, j) {
            return with_t(&[(u, 0), (v, 0)], 0).map(good);
        }
    }

    let size_a = a[0].len();
    let a34 = &a[2] | &a[3];
    if let Some(t) = ts.iter().find(|t| t.len() <= 2 * size_a) {
        return Some(("copy", Step::Copy { target: t.clone(), source: a34.to_vec() }));
    }
    if size_a == 1 {
        return Some(("low-degree", Step::Tool(ToolCase::LowDegreeVertex(x(2, 0)?))));
    }
    let family = vec![
        with_t(&[(1, 0), (3, 0)], 0)?,
        with_t(&[(3, 1), (5, 0)], 1)?,
        with_t(&[(2, 0), (5, 1)], 2)?,
        with_t(&[(2, 1), (4, 0)], 3)?,
        g.set([x(1, 1)?, x(4, 1)?]),
    ];
    Some(("stable-family", Step::Tool(ToolCase::StableFamily(family))))
}
