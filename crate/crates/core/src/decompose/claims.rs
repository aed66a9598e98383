//! Re-checks every structural assertion made about a blow-up partition of a
//! (P5, gem)-free graph. Claims are numbered in the order they are proved:
//! 1 partition, 2 P4-free pieces, 3 `Y_{i-1}`/`Y_{i+1}` anticomplete,
//! 4 one pure vertex makes `Y_i` pure, 5 `Y_i` complete to one far side,
//! 6 the `A'`/`A''` split, 7 items (a)–(f) for `Y_{i±2}` both nonempty,
//! 8 components of `R` homogeneous, 9 edges between `R` and `Y`.

use serde::Serialize;

use super::{at, BlowupPartition};
use crate::detect::{self, Pattern};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: usize,
    pub item: String,
    pub passed: bool,
    /// Offending vertices when the check fails.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub checks: Vec<ClaimCheck>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, claim: usize, item: String, witness: Option<Vec<usize>>) {
        self.checks.push(ClaimCheck { claim, item, passed: witness.is_none(), witness: witness.unwrap_or_default() });
    }
}

// A non-edge between the sets, if they are not complete.
fn missing_edge(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<Vec<usize>> {
    a.iter().find_map(|u| (b - g.neighbors(u)).iter().find(|&v| v != u).map(|v| vec![u, v]))
}

// An edge between the sets, if they are not anticomplete.
fn present_edge(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<Vec<usize>> {
    a.iter().find_map(|u| (b & g.neighbors(u)).first().map(|v| vec![u, v]))
}

fn nonempty(s: &VertexSet) -> Option<Vec<usize>> {
    (!s.is_empty()).then(|| s.to_vec())
}

/// Checks every claim that applies to `bp`; no early exit.
pub fn verify_claims(g: &Graph, bp: &BlowupPartition) -> ClaimReport {
    let mut rep = ClaimReport::default();
    let (a, y, r) = (&bp.a, &bp.y, &bp.r);
    let a_all = bp.a_union();

    // 1: partition and definitions
    let mut seen = g.empty_set();
    let mut overlap = None;
    for s in a.iter().chain(y.iter()).chain(std::iter::once(r)) {
        if overlap.is_none() {
            overlap = (s & &seen).first().map(|v| vec![v]);
        }
        seen.union_with(s);
    }
    rep.push(1, "sets are disjoint".into(), overlap);
    rep.push(1, "sets cover V".into(), nonempty(&seen.complement()));
    for i in 0..5 {
        rep.push(1, format!("A{} complete to A{}", i + 1, at(i, 1) + 1), missing_edge(g, &a[i], &a[at(i, 1)]));
        rep.push(1, format!("A{} anticomplete to A{}", i + 1, at(i, 2) + 1), present_edge(g, &a[i], &a[at(i, 2)]));
    }
    let outside = &seen - &a_all;
    let addable = outside.iter().find(|&v| {
        let n = g.neighbors(v);
        (0..5).any(|i| {
            a[at(i, 1)].is_subset(n) && a[at(i, 4)].is_subset(n) && !n.intersects(&a[at(i, 2)]) && !n.intersects(&a[at(i, 3)])
        })
    });
    rep.push(1, "A is maximal".into(), addable.map(|v| vec![v]));
    rep.push(1, "R has no neighbor in A".into(), present_edge(g, r, &a_all));
    for i in 0..5 {
        let bad = y[i].iter().find(|&v| {
            let n = g.neighbors(v);
            !(a[i].is_subset(n)
                && !n.intersects(&a[at(i, 1)])
                && !n.intersects(&a[at(i, 4)])
                && n.intersects(&a[at(i, 2)])
                && n.intersects(&a[at(i, 3)])
                && (a[at(i, 2)].is_subset(n) || a[at(i, 3)].is_subset(n)))
        });
        rep.push(1, format!("Y{} membership", i + 1), bad.map(|v| vec![v]));
    }

    // 2
    for (name, sets) in [("A", a), ("Y", y)] {
        for (i, s) in sets.iter().enumerate() {
            let hit = detect::find_induced_within(g, Pattern::P4, s).map(|h| h.vertices);
            rep.push(2, format!("{name}{} is P4-free", i + 1), hit);
        }
    }

    // 3
    for i in 0..5 {
        rep.push(
            3,
            format!("Y{} anticomplete to Y{}", at(i, 4) + 1, at(i, 1) + 1),
            present_edge(g, &y[at(i, 4)], &y[at(i, 1)]),
        );
    }

    // 4, 5, 6
    for i in 0..5 {
        if y[i].is_empty() {
            continue;
        }
        let pure: Vec<usize> = y[i].iter().filter(|&v| bp.is_pure(g, i, v)).collect();
        let impure = y[i].iter().find(|&v| !bp.is_pure(g, i, v));
        let w = match (pure.first(), impure) {
            (Some(&p), Some(q)) => Some(vec![p, q]),
            _ => None,
        };
        rep.push(4, format!("Y{} all pure or none", i + 1), w);

        let plus = g.is_complete_to(&y[i], &a[at(i, 2)]);
        let minus = g.is_complete_to(&y[i], &a[at(i, 3)]);
        rep.push(5, format!("Y{} complete to A{} or A{}", i + 1, at(i, 2) + 1, at(i, 3) + 1), (!plus && !minus).then(|| y[i].to_vec()));

        for (complete_side, split_side) in [(at(i, 3), at(i, 2)), (at(i, 2), at(i, 3))] {
            if !g.is_complete_to(&y[i], &a[complete_side]) {
                continue;
            }
            let prime = &g.neighborhood(&y[i]) & &a[split_side];
            let second = &a[split_side] - &prime;
            rep.push(6, format!("Y{}: A'{} anticomplete to A''{}", i + 1, split_side + 1, split_side + 1), present_edge(g, &prime, &second));
            rep.push(6, format!("Y{} complete to A'{}", i + 1, split_side + 1), missing_edge(g, &y[i], &prime));
        }
    }

    // 7
    for i in 0..5 {
        let (ym, yp) = (&y[at(i, 3)], &y[at(i, 2)]);
        if ym.is_empty() || yp.is_empty() {
            continue;
        }
        let tag = |s: &str| format!("Y{},Y{} ({s})", at(i, 3) + 1, at(i, 2) + 1);
        let am = &g.neighborhood(ym) & &a[i];
        let ap = &g.neighborhood(yp) & &a[i];
        let both = &am | &ap;
        let rest = &a[i] - &both;
        rep.push(7, tag("a: complete"), missing_edge(g, ym, yp));
        rep.push(7, tag("a: A-, A+ disjoint"), nonempty(&(&am & &ap)));
        rep.push(7, tag("a: A-, A+ anticomplete"), present_edge(g, &am, &ap));
        rep.push(7, tag("b"), present_edge(g, &rest, &both));
        rep.push(7, tag("c: minus side"), missing_edge(g, ym, &(&a[at(i, 1)] | &am)));
        rep.push(7, tag("c: plus side"), missing_edge(g, yp, &(&a[at(i, 4)] | &ap)));
        rep.push(7, tag("d"), nonempty(&(&y[at(i, 4)] | &y[at(i, 1)])));
        rep.push(7, tag("e"), y[i].iter().find(|&v| !bp.is_pure(g, i, v)).map(|v| vec![v]));
        let f = (!rest.is_empty() && !y[i].is_empty()).then(|| vec![rest.first().unwrap(), y[i].first().unwrap()]);
        rep.push(7, tag("f"), f);
    }

    // 8
    for c in g.components_within(r) {
        let w = detect::homogeneity_violation(g, &c).map(|v| vec![v]);
        rep.push(8, format!("R component at {} homogeneous", c.first().unwrap()), w);
    }

    // 9
    for i in 0..5 {
        let Some((rv, yv)) = r.iter().find_map(|rv| (&y[i] & g.neighbors(rv)).first().map(|yv| (rv, yv))) else { continue };
        let tag = |s: &str| format!("R-Y{} edge ({s})", i + 1);
        let impure = y[i].iter().filter(|&v| g.neighbors(v).intersects(r)).find(|&v| !bp.is_pure(g, i, v));
        rep.push(9, tag("endpoint pure"), impure.map(|v| vec![v]));
        rep.push(9, tag("neighbors' Y empty"), nonempty(&(&y[at(i, 4)] | &y[at(i, 1)])));
        let far: Vec<usize> = [at(i, 2), at(i, 3)].into_iter().filter(|&j| !y[j].is_empty()).collect();
        rep.push(9, tag("at most one far Y"), (far.len() > 1).then(|| vec![rv, yv]));
        if !far.is_empty() {
            let mut target = y[i].clone();
            for &j in &far {
                target.union_with(&y[j]);
            }
            rep.push(9, tag("R complete to the Y sets"), missing_edge(g, r, &target));
        }
    }

    let ys = bp.nonempty_y().len();
    let cap = if r.is_empty() { 3 } else { 2 };
    rep.push(0, format!("at most {cap} Y sets nonempty"), (ys > cap).then(Vec::new));
    rep
}
