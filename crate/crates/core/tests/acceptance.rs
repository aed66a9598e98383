//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output; exits nonzero on any FAIL.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gemfive::basic::{all_basic_graphs, basic_graph, validate_basic_graphs};
use gemfive::decompose::{decompose, decompose_traced, verify_claims, Decomposition};
use gemfive::detect::is_p5_gem_free;
use gemfive::engine::{color, color_traced};
use gemfive::generators::{random_instance, seeded_expansion, tightness_family, InstanceParams};
use gemfive::graph::find_isomorphism;
use gemfive::oracles::{bound54, chi_exact, clique_number, max_clique, optimal_coloring, reed_bound, verify_coloring};
use gemfive::reduce::{lift, reduce_to_star};
use gemfive::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tightness() -> Outcome {
    for q in 1..=4 {
        let g = tightness_family(q).map_err(|e| e.to_string())?;
        let omega = clique_number(&g);
        let delta = g.max_degree();
        ensure(omega == 2 * q, || format!("q={q}: ω={omega}, expected {}", 2 * q))?;
        ensure(delta == 3 * q - 1, || format!("q={q}: Δ={delta}, expected {}", 3 * q - 1))?;
        if q <= 3 {
            let expected = (5 * q).div_ceil(2);
            let chi = chi_exact(&g, 20).map_err(|e| e.to_string())?;
            let used = color(&g).map_err(|e| e.to_string())?;
            ensure(chi == expected, || format!("q={q}: χ={chi}, expected {expected}"))?;
            ensure(verify_coloring(&g, &used), || format!("q={q}: improper coloring"))?;
            ensure(used.count() == expected, || format!("q={q}: color() used {}, expected {expected}", used.count()))?;
        }
    }
    Ok("q=1..4 ω=2q, Δ=3q-1; q=1..3 χ = colors = ⌈5q/2⌉".into())
}

fn bound_suite() -> Outcome {
    let params = InstanceParams { max_n: 40 };
    let mut largest = 0;
    for seed in 0..500 {
        let g = random_instance(seed, params);
        ensure(g.n() <= 40, || format!("seed {seed}: n={}", g.n()))?;
        largest = largest.max(g.n());
        ensure(is_p5_gem_free(&g), || format!("seed {seed}: not (P5,gem)-free"))?;
        let (c, trace) = color_traced(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_coloring(&g, &c), || format!("seed {seed}: improper"))?;
        let omega = max_clique(&g).len();
        ensure(c.count() <= bound54(omega), || format!("seed {seed}: {} colors, bound {}", c.count(), bound54(omega)))?;
        ensure(trace.fallbacks == 0, || format!("seed {seed}: {} fallbacks", trace.fallbacks))?;
    }
    Ok(format!("500 instances, largest n={largest}, 0 violations, 0 fallbacks"))
}

fn reed() -> Outcome {
    let params = InstanceParams { max_n: 18 };
    let mut count = 0;
    for seed in 0..120 {
        let g = random_instance(seed, params);
        ensure(g.n() <= 18, || format!("seed {seed}: n={}", g.n()))?;
        let chi = chi_exact(&g, 18).map_err(|e| e.to_string())?;
        let rb = reed_bound(g.max_degree(), clique_number(&g));
        ensure(chi <= rb, || format!("seed {seed}: χ={chi} > {rb}"))?;
        count += 1;
    }
    let t = tightness_family(2).map_err(|e| e.to_string())?;
    let chi = chi_exact(&t, 20).map_err(|e| e.to_string())?;
    let rb = reed_bound(t.max_degree(), clique_number(&t));
    ensure(chi == rb, || format!("tightness(2): χ={chi}, Reed bound {rb}"))?;
    Ok(format!("{count} instances with n ≤ 18, 0 violations; tightness(2) χ = {chi} = bound"))
}

fn decomposition() -> Outcome {
    for k in 1..=10 {
        for seed in 0..50 {
            let e = seeded_expansion(seed, k, 3, false).map_err(|e| e.to_string())?;
            let g = &e.graph;
            let (bp, _, d) = decompose_traced(g).map_err(|err| format!("G{k} seed {seed}: {err}"))?;
            match &d {
                Decomposition::Expansion(c) => {
                    let base = &basic_graph(c.base).unwrap().graph;
                    ensure(find_isomorphism(&c.collapse(g), base).is_some(), || {
                        format!("G{k} seed {seed}: collapse not isomorphic to G{}", c.base)
                    })?;
                }
                Decomposition::H(h) => h.validate(g, false).map_err(|err| format!("G{k} seed {seed}: {err}"))?,
            }
            let rep = verify_claims(g, &bp);
            ensure(rep.passed(), || format!("G{k} seed {seed}: {:?}", rep.failures().next()))?;
        }
    }
    Ok("10 basic graphs × 50 size vectors, all certificates valid, all claims pass".into())
}

fn reduction() -> Outcome {
    let mut done = 0;
    let mut contracted = 0;
    let mut seed = 0;
    while done < 100 {
        seed += 1;
        let k = (seed % 10 + 1) as usize;
        let e = seeded_expansion(seed, k, 3, true).map_err(|e| e.to_string())?;
        let g = &e.graph;
        if g.n() > 16 {
            continue;
        }
        let d = decompose(g).map_err(|err| format!("seed {seed}: {err}"))?;
        let (star, _, chain) = reduce_to_star(g, &d).map_err(|err| format!("seed {seed}: {err}"))?;
        let (w0, w1) = (clique_number(g), clique_number(&star));
        let (c0, c1) = (chi_exact(g, 16).unwrap(), chi_exact(&star, 16).unwrap());
        ensure(w0 == w1, || format!("seed {seed}: ω {w0} -> {w1}"))?;
        ensure(c0 == c1, || format!("seed {seed}: χ {c0} -> {c1}"))?;
        let col = optimal_coloring(&star);
        let up = lift(&col, &chain);
        ensure(verify_coloring(g, &up), || format!("seed {seed}: lifted coloring improper"))?;
        ensure(up.count() == col.count(), || format!("seed {seed}: lift changed {} -> {}", col.count(), up.count()))?;
        contracted += usize::from(!chain.is_empty());
        done += 1;
    }
    Ok(format!("100 expansions with n ≤ 16 ({contracted} needed contraction), ω and χ unchanged, lifts exact"))
}

fn transcription() -> Outcome {
    let rep = validate_basic_graphs();
    ensure(rep.passed(), || format!("{:?}", rep.failures().map(|c| format!("G{} {}", c.basic, c.check)).collect::<Vec<_>>()))?;
    let g10 = &basic_graph(10).unwrap().graph;
    let mut rule = Graph::new(9);
    for i in 0..9 {
        rule.add_edge(i, (i + 1) % 9);
        rule.add_edge(i, (i + 3) % 9);
    }
    let edges = |g: &Graph| g.edges().collect::<Vec<_>>();
    ensure(edges(g10) == edges(&rule), || "G10 differs from the u_i u_{i+1}, u_i u_{i+3} rule".into())?;
    ensure(all_basic_graphs().len() == 10, || "expected ten basic graphs".into())?;
    Ok(format!("{} checks over G1..G10 pass, G10 edge rule exact", rep.checks.len()))
}

// χ by enumerating every partition of the vertices into color classes
// (restricted growth strings), independent of the branch-and-bound solver.
fn chi_by_partitions(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, assign: &mut Vec<usize>, used: usize, best: &mut usize) {
        if v == g.n() {
            *best = (*best).min(used);
            return;
        }
        for c in 0..=used {
            if (0..v).any(|u| assign[u] == c && g.has_edge(u, v)) {
                continue;
            }
            assign.push(c);
            rec(g, v + 1, assign, used.max(c + 1), best);
            assign.pop();
        }
    }
    let mut best = g.n();
    rec(g, 0, &mut Vec::new(), 0, &mut best);
    best
}

fn oracle_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let n = rng.gen_range(0..=9);
        let p = rng.gen_range(0.1..0.9);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let exact = chi_exact(&g, 9).map_err(|e| e.to_string())?;
        let brute = chi_by_partitions(&g);
        ensure(exact == brute, || format!("graph {i} (n={n}): chi_exact {exact}, enumeration {brute}"))?;
    }
    Ok("200 random graphs with n ≤ 9 agree".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("tightness reproduction", tightness),
        ("bound property suite", bound_suite),
        ("Reed corollary", reed),
        ("decomposition soundness", decomposition),
        ("reduction exactness", reduction),
        ("transcription gate", transcription),
        ("oracle cross-check", oracle_cross_check),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
