//! `gemfive`: recognize, decompose and color (P5, gem)-free graphs.
//!
//! Exit codes: 0 success, 1 property or class violation, 2 usage or I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use gemfive::basic::{basic_graph, validate_basic_graphs};
use gemfive::decompose::{decompose_traced, verify_claims, Decomposition};
use gemfive::detect::{self, Pattern};
use gemfive::engine::{color_traced, BoundTarget};
use gemfive::generators::{random_hstar, random_instance, seeded_expansion, tightness_family, InstanceParams};
use gemfive::graph::{parse_graph, write_graph};
use gemfive::oracles::{chi_exact, exact_limit, reed_bound, verify_coloring, OracleReport};
use gemfive::Graph;

const OK: u8 = 0;
const VIOLATION: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "gemfive", version, about = "Color (P5, gem)-free graphs with at most ⌈5ω/4⌉ colors")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check (P5, gem)-freeness; prints a witness if the graph is outside the class.
    Detect {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the decomposition certificate of a connected graph with a C5.
    Decompose {
        file: PathBuf,
        /// Also re-check the structural claims on the blow-up partition.
        #[arg(long)]
        claims: bool,
    },
    /// Color the graph and report colors used against the bound.
    Color {
        file: PathBuf,
        /// Re-verify properness and the bound; exit 1 on violation.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
    },
    /// n, m, ω, Δ, exact χ (if small enough) and both bounds.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated instance.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Basic graph id for `gk`.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Bag size for `tight`, largest bag for `gk`.
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Vertex budget for `hstar` and `random`.
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        /// Random cograph bags instead of cliques for `gk`.
        #[arg(long)]
        cograph: bool,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The basic graphs G1..G10.
    Basics {
        #[command(subcommand)]
        cmd: BasicsCmd,
    },
    /// Run the property corpus over a seed range.
    Suite {
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, default_value_t = 100)]
        to: u64,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        /// Corrupt every coloring before checking it (tests the checker).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand)]
enum BasicsCmd {
    /// Check every recorded constraint of the basic graphs.
    Validate,
    /// Print one basic graph as an edge file.
    Dump { k: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Gk,
    Hstar,
    Tight,
    Random,
}

#[derive(Debug, Serialize)]
struct RunReport {
    seed: Option<u64>,
    n: usize,
    m: usize,
    omega: usize,
    bound: usize,
    colors: usize,
    chi: Option<usize>,
    kind: String,
    fallbacks: usize,
    elapsed_ms: f64,
    status: String,
}

impl RunReport {
    fn line(&self) -> String {
        let mut parts = Vec::new();
        if let Some(s) = self.seed {
            parts.push(format!("seed={s}"));
        }
        parts.push(format!("n={} m={} omega={} bound={} colors={}", self.n, self.m, self.omega, self.bound, self.colors));
        parts.push(format!("chi={}", self.chi.map_or("-".to_string(), |c| c.to_string())));
        parts.push(format!(
            "kind={} fallbacks={} elapsed_ms={:.3} status={}",
            self.kind, self.fallbacks, self.elapsed_ms, self.status
        ));
        parts.join(" ")
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let code = match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            USAGE
        }
    };
    ExitCode::from(code)
}

fn read(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cmd: Cmd) -> Result<u8, String> {
    match cmd {
        Cmd::Detect { file, json } => detect_cmd(&read(&file)?, json),
        Cmd::Decompose { file, claims } => decompose_cmd(&read(&file)?, claims),
        Cmd::Color { file, certify, json } => color_cmd(&read(&file)?, certify, json),
        Cmd::Oracle { file, json } => {
            let r = OracleReport::compute(&read(&file)?, exact_limit());
            if json {
                println!("{}", serde_json::to_string(&r).unwrap());
            } else {
                let chi = r.chi.map_or("-".to_string(), |c| c.to_string());
                println!(
                    "n={} m={} omega={} chi={chi} delta={} bound54={} reed={}",
                    r.n, r.m, r.omega, r.delta, r.bound54, r.reed
                );
            }
            Ok(OK)
        }
        Cmd::Gen { family, seed, k, q, max_n, cograph, out } => {
            let g = match family {
                GenFamily::Gk => seeded_expansion(seed, k, q, cograph).map(|e| e.graph),
                GenFamily::Hstar => random_hstar(seed, max_n).map(|(g, _)| g),
                GenFamily::Tight => tightness_family(q),
                GenFamily::Random => Ok(random_instance(seed, InstanceParams { max_n })),
            }
            .map_err(|e| e.to_string())?;
            let text = write_graph(&g);
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(OK)
        }
        Cmd::Basics { cmd: BasicsCmd::Validate } => {
            let rep = validate_basic_graphs();
            for c in &rep.checks {
                println!("G{} {} {}", c.basic, if c.passed { "PASS" } else { "FAIL" }, c.check);
            }
            for note in &rep.notes {
                println!("note: {note}");
            }
            Ok(if rep.passed() { OK } else { VIOLATION })
        }
        Cmd::Basics { cmd: BasicsCmd::Dump { k } } => {
            let spec = basic_graph(k).map_err(|e| e.to_string())?;
            print!("{}", write_graph(&spec.graph));
            Ok(OK)
        }
        Cmd::Suite { from, to, max_n, json, inject_fault } => suite_cmd(from, to, max_n, json, inject_fault),
    }
}

fn detect_cmd(g: &Graph, json: bool) -> Result<u8, String> {
    let hit = detect::check_p5_gem_free(g).err();
    if json {
        let witness = hit.as_ref().map(|h| h.vertices.iter().map(|v| v + 1).collect::<Vec<_>>());
        let pattern = hit.as_ref().map(|h| h.pattern.to_string());
        println!("{}", json!({ "p5_gem_free": hit.is_none(), "pattern": pattern, "witness": witness }));
    } else {
        match &hit {
            None => println!("p5_gem_free=true"),
            Some(h) => println!("p5_gem_free=false witness={h}"),
        }
    }
    Ok(if hit.is_none() { OK } else { VIOLATION })
}

fn decompose_cmd(g: &Graph, claims: bool) -> Result<u8, String> {
    let (bp, case, d) = match decompose_traced(g) {
        Ok(x) => x,
        Err(e) => {
            println!("error={e}");
            return Ok(VIOLATION);
        }
    };
    println!("case={case:?}");
    println!("{d}");
    if claims {
        let rep = verify_claims(g, &bp);
        for c in rep.failures() {
            println!("claim {} FAIL {} witness={:?}", c.claim, c.item, c.witness.iter().map(|v| v + 1).collect::<Vec<_>>());
        }
        println!("claims_checked={} claims_passed={}", rep.checks.len(), rep.passed());
        if !rep.passed() {
            return Ok(VIOLATION);
        }
    }
    Ok(OK)
}

// What the top level of the graph looks like, for reports.
fn kind_of(g: &Graph) -> String {
    if g.n() == 0 {
        return "empty".into();
    }
    if !g.is_connected() {
        return "disconnected".into();
    }
    if detect::find_induced(g, Pattern::C5).is_none() {
        return "perfect".into();
    }
    match decompose_traced(g) {
        Ok((_, _, Decomposition::Expansion(e))) => format!("G{}", e.base),
        Ok((_, _, Decomposition::H(_))) => "H".into(),
        Err(_) => "undecomposed".into(),
    }
}

fn color_cmd(g: &Graph, certify: bool, json: bool) -> Result<u8, String> {
    if let Err(hit) = detect::check_p5_gem_free(g) {
        println!("p5_gem_free=false witness={hit}");
        return Ok(VIOLATION);
    }
    let start = Instant::now();
    let (c, trace) = color_traced(g).map_err(|e| e.to_string())?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let target = BoundTarget::of(g);
    let ok = verify_coloring(g, &c) && c.count() <= target.bound;
    let report = RunReport {
        seed: None,
        n: g.n(),
        m: g.edge_count(),
        omega: target.omega,
        bound: target.bound,
        colors: c.count(),
        chi: chi_exact(g, exact_limit()).ok(),
        kind: kind_of(g),
        fallbacks: trace.fallbacks,
        elapsed_ms,
        status: if ok { "ok" } else { "violation" }.into(),
    };
    if json {
        let colors: Vec<usize> = c.colors().to_vec();
        println!("{}", json!({ "report": report, "coloring": colors }));
    } else {
        for (v, &k) in c.colors().iter().enumerate() {
            println!("{}:{}", v + 1, k);
        }
        println!("{}", report.line());
    }
    Ok(if certify && !ok { VIOLATION } else { OK })
}

fn suite_cmd(from: u64, to: u64, max_n: usize, json: bool, inject_fault: bool) -> Result<u8, String> {
    let limit = exact_limit();
    let (mut passed, mut failed, mut fallbacks) = (0usize, 0usize, 0usize);
    for seed in from..to {
        let g = random_instance(seed, InstanceParams { max_n });
        let start = Instant::now();
        let mut problems: Vec<String> = Vec::new();
        if let Err(hit) = detect::check_p5_gem_free(&g) {
            problems.push(format!("not-in-class({hit})"));
        }
        let target = BoundTarget::of(&g);
        let (colors, fb, chi) = match color_traced(&g) {
            Err(e) => {
                problems.push(format!("color({e})"));
                (0, 0, None)
            }
            Ok((mut c, trace)) => {
                if inject_fault {
                    c = corrupt(&g, c.into_colors());
                }
                if !verify_coloring(&g, &c) {
                    problems.push("improper".into());
                }
                if c.count() > target.bound {
                    problems.push("over-bound".into());
                }
                let chi = chi_exact(&g, limit).ok();
                if let Some(chi) = chi {
                    if chi > c.count() {
                        problems.push("below-chi".into());
                    }
                    if chi > reed_bound(g.max_degree(), target.omega) {
                        problems.push("reed".into());
                    }
                }
                (c.count(), trace.fallbacks, chi)
            }
        };
        for comp in g.components() {
            let h = g.induced(&comp).graph;
            if detect::find_induced(&h, Pattern::C5).is_none() {
                continue;
            }
            match decompose_traced(&h) {
                Ok((bp, _, _)) if !verify_claims(&h, &bp).passed() => problems.push("claims".into()),
                Ok(_) => {}
                Err(e) => problems.push(format!("decompose({e})")),
            }
        }
        fallbacks += fb;
        let report = RunReport {
            seed: Some(seed),
            n: g.n(),
            m: g.edge_count(),
            omega: target.omega,
            bound: target.bound,
            colors,
            chi,
            kind: kind_of(&g),
            fallbacks: fb,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            status: if problems.is_empty() { "ok".into() } else { problems.join(",") },
        };
        if problems.is_empty() {
            passed += 1;
        } else {
            failed += 1;
        }
        if json {
            println!("{}", serde_json::to_string(&report).unwrap());
        } else {
            println!("{}", report.line());
        }
    }
    println!("suite passed={passed} failed={failed} fallbacks={fallbacks}");
    Ok(if failed == 0 { OK } else { VIOLATION })
}

// Gives the first edge's endpoints the same color.
fn corrupt(g: &Graph, mut colors: Vec<usize>) -> gemfive::Coloring {
    if let Some((u, v)) = g.edges().next() {
        colors[v] = colors[u];
    }
    gemfive::Coloring::from_assignment(colors)
}
