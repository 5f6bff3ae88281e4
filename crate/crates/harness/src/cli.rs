//! The `suntrap` command line.
//!
//! Exit codes: 0 success, 1 violations (or failed extractions) found, 2 usage
//! or input error.

use std::io::{Read, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use suntrap_core::coloring::{
    chi, clique_number, find_triangle, liberality_violation_within, non_degeneracy_violation_within,
};
use suntrap_core::format::{parse_graphs, to_graph6};
use suntrap_core::structures::{
    find_4_sunspot, find_bull, find_net, find_t_sun, flap_violation_within, holes_within,
    BullWitness, FlapWitness, NetWitness, SunWitness, SunspotWitness,
};
use suntrap_core::witness::extract::{extract_from_subgraph, extract_witness, ExtractError};
use suntrap_core::witness::generators::parse_words;
use suntrap_core::witness::theorem_constant;
use suntrap_core::{Graph, Hole};

use crate::campaign::LemmaId;
use crate::corpus::{Corpus, CorpusSpec};
use crate::enumerate::Predicate;
use crate::report::{recheck, verify_campaign, Report, RunOptions};

pub const DEFAULT_MAX_N: usize = 64;
pub const MAX_N_ENV: &str = "SUNTRAP_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "suntrap",
    version,
    about = "Suns, sunspots, flaps and flares on small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for campaigns.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Per-graph time limit in seconds; graphs over it are reported as skipped.
    #[arg(long, global = true)]
    pub timeout_per_graph: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural summary of each graph in a graph6 or edge-list file (`-` for stdin).
    Analyze {
        file: String,
        /// Smallest sun length reported.
        #[arg(long, default_value_t = 5)]
        ell: usize,
    },
    /// Run a verification campaign.
    Verify {
        lemma: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// exhaustive | random:MODEL:N:COUNT | file:PATH | generated[:KIND,KIND...]
        #[arg(long, default_value = "exhaustive")]
        corpus: String,
        /// Corpus filter; defaults to the campaign's hypotheses.
        #[arg(long)]
        predicate: Option<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<String>,
    },
    /// Re-verify every violation recorded in a report file.
    Recheck { report: String },
    /// Run the witness-extraction pipeline on each graph of a file.
    Extract {
        file: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        tau: Option<usize>,
        /// Start at the hole search, treating the whole graph as the flapless subgraph.
        #[arg(long)]
        skip_pipeline: bool,
    },
    /// Emit a named graph as graph6, e.g. `generate t-sun 6`.
    Generate {
        #[arg(required = true, num_args = 1..)]
        kind: Vec<String>,
    },
    /// Print the theorem constants for a threshold.
    Constants {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        tau: Option<usize>,
    },
}

pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Usage or input problems; reported on stderr with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 2 {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Usage> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { file, ell } => analyze(g, io, file, *ell),
        Command::Verify {
            lemma,
            nmax,
            corpus,
            predicate,
            report,
        } => verify(
            g,
            io,
            lemma,
            *nmax,
            corpus,
            predicate.as_deref(),
            report.as_deref(),
        ),
        Command::Recheck { report } => recheck_cmd(g, io, report),
        Command::Extract {
            file,
            ell,
            tau,
            skip_pipeline,
        } => extract(g, io, file, *ell, *tau, *skip_pipeline),
        Command::Generate { kind } => generate(g, io, kind),
        Command::Constants { ell, tau } => {
            let c = theorem_constant(*ell, *tau)?;
            if g.json {
                let v = json!({"ell": c.ell, "tau": c.tau, "c": c.c, "pipeline_threshold": c.pipeline_threshold()});
                writeln!(io.out, "{v}")?;
            } else {
                writeln!(io.out, "ell = {}\ntau = {}\nc = {}", c.ell, c.tau, c.c)?;
            }
            Ok(0)
        }
    }
}

fn read_graphs(io: &mut Io, file: &str) -> Result<Vec<Graph>, Usage> {
    let text = if file == "-" {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Usage(format!("{file}: {e}")))?
    };
    let graphs = parse_graphs(&text).map_err(|e| Usage(format!("{file}: {e}")))?;
    let cap = max_n();
    if let Some(g) = graphs.iter().find(|g| g.n() > cap) {
        return Err(Usage(format!(
            "{file}: graph on {} vertices exceeds the cap {cap} (raise it with {MAX_N_ENV})",
            g.n()
        )));
    }
    Ok(graphs)
}

#[derive(Debug, Serialize)]
struct HoleSummary {
    count: usize,
    shortest: Option<usize>,
    longest: Option<usize>,
    /// `(length, count)` pairs, ascending.
    by_length: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    m: usize,
    omega: usize,
    chi: usize,
    triangle_free: bool,
    triangle: Option<(usize, usize, usize)>,
    sunspot: Option<SunspotWitness>,
    net: Option<NetWitness>,
    bull: Option<BullWitness>,
    sun_min_t: usize,
    sun: Option<SunWitness>,
    liberal: bool,
    liberal_violation: Option<(usize, usize)>,
    non_degenerate: bool,
    non_degenerate_violation: Option<usize>,
    flapless: bool,
    flap: Option<(Hole, FlapWitness)>,
    holes: HoleSummary,
}

fn analysis(g: &Graph, ell: usize) -> Analysis {
    let all = g.vertices();
    let mut by_length: Vec<(usize, usize)> = Vec::new();
    if g.n() >= 4 {
        for h in holes_within(g, all, 4, g.n()).expect("valid window") {
            match by_length.iter_mut().find(|(l, _)| *l == h.length()) {
                Some(e) => e.1 += 1,
                None => by_length.push((h.length(), 1)),
            }
        }
    }
    by_length.sort_unstable();
    let triangle = find_triangle(g);
    let liberal_violation = liberality_violation_within(g, all);
    let non_degenerate_violation = non_degeneracy_violation_within(g, all);
    let flap = flap_violation_within(g, all);
    Analysis {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        omega: clique_number(g),
        chi: chi(g),
        triangle_free: triangle.is_none(),
        triangle,
        sunspot: find_4_sunspot(g),
        net: find_net(g),
        bull: find_bull(g),
        sun_min_t: ell,
        sun: find_t_sun(g, ell),
        liberal: liberal_violation.is_none(),
        liberal_violation,
        non_degenerate: non_degenerate_violation.is_none(),
        non_degenerate_violation,
        flapless: flap.is_none(),
        flap,
        holes: HoleSummary {
            count: by_length.iter().map(|e| e.1).sum(),
            shortest: by_length.first().map(|e| e.0),
            longest: by_length.last().map(|e| e.0),
            by_length,
        },
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(g: &GlobalOpts, io: &mut Io, file: &str, ell: usize) -> Result<i32, Usage> {
    if ell < 4 {
        return Err(Usage(format!("--ell must be at least 4, got {ell}")));
    }
    for graph in read_graphs(io, file)? {
        let a = analysis(&graph, ell);
        if g.json {
            writeln!(io.out, "{}", serde_json::to_string(&a)?)?;
            continue;
        }
        let holes: Vec<String> = a
            .holes
            .by_length
            .iter()
            .map(|(l, c)| format!("{c}x{l}"))
            .collect();
        writeln!(io.out, "graph {}", a.graph6)?;
        writeln!(
            io.out,
            "  n = {}, m = {}, omega = {}, chi = {}",
            a.n, a.m, a.omega, a.chi
        )?;
        writeln!(io.out, "  triangle-free: {}", yes(a.triangle_free))?;
        writeln!(
            io.out,
            "  4-sunspot: {}",
            a.sunspot.map_or("none".into(), |s| format!("{s:?}"))
        )?;
        writeln!(
            io.out,
            "  net: {}, bull: {}",
            yes(a.net.is_some()),
            yes(a.bull.is_some())
        )?;
        writeln!(
            io.out,
            "  sun with t >= {}: {}",
            ell,
            a.sun.as_ref().map_or("none".into(), |s| format!(
                "t = {} on cycle {:?}",
                s.t(),
                s.cycle
            ))
        )?;
        writeln!(io.out, "  liberal: {}", yes(a.liberal))?;
        writeln!(io.out, "  non-degenerate: {}", yes(a.non_degenerate))?;
        writeln!(io.out, "  flapless: {}", yes(a.flapless))?;
        writeln!(
            io.out,
            "  holes: {} ({})",
            a.holes.count,
            if holes.is_empty() {
                "none".into()
            } else {
                holes.join(", ")
            }
        )?;
    }
    Ok(0)
}

fn verify(
    g: &GlobalOpts,
    io: &mut Io,
    lemma: &str,
    nmax: usize,
    corpus: &str,
    predicate: Option<&str>,
    report_path: Option<&str>,
) -> Result<i32, Usage> {
    let lemma: LemmaId = lemma.parse().map_err(Usage)?;
    let predicate = match predicate {
        Some(p) => p.parse::<Predicate>().map_err(Usage)?,
        None => lemma.default_predicate(),
    };
    let spec: CorpusSpec = corpus.parse()?;
    let corpus = Corpus::load(spec.descriptor(nmax, predicate, g.seed))?;
    let opts = RunOptions {
        jobs: g.jobs,
        timeout_per_graph: timeout(g)?,
        seed: g.seed,
    };
    let report = verify_campaign(lemma, &corpus, opts);
    let json = report.to_json();
    if let Some(path) = report_path {
        std::fs::write(path, format!("{json}\n")).map_err(|e| Usage(format!("{path}: {e}")))?;
    }
    if g.json {
        writeln!(io.out, "{json}")?;
    } else {
        let s = &report.summary;
        writeln!(io.out, "campaign {} on {}", lemma, report.corpus)?;
        writeln!(
            io.out,
            "  graphs {}: holds {}, violated {}, not applicable {}, skipped {}",
            s.graphs, s.holds, s.violated, s.not_applicable, s.skipped
        )?;
        writeln!(
            io.out,
            "  instances checked {}, instances not applicable {}",
            s.instances_checked, s.instances_not_applicable
        )?;
        if s.skipped > 0 {
            writeln!(io.out, "  WARNING: {} graphs skipped on timeout", s.skipped)?;
        }
        for e in report.entries.iter().filter(|e| {
            matches!(
                e.outcome.verdict,
                crate::campaign::GraphVerdict::Violated { .. }
            )
        }) {
            writeln!(io.out, "  violated: #{} {}", e.index, e.graph6)?;
        }
    }
    Ok(if report.summary.violated > 0 { 1 } else { 0 })
}

fn timeout(g: &GlobalOpts) -> Result<Option<Duration>, Usage> {
    g.timeout_per_graph
        .map(|s| {
            Duration::try_from_secs_f64(s)
                .map_err(|_| Usage(format!("bad --timeout-per-graph {s}")))
        })
        .transpose()
}

fn recheck_cmd(g: &GlobalOpts, io: &mut Io, path: &str) -> Result<i32, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?;
    let report = Report::from_json(&text).map_err(|e| Usage(format!("{path}: {e}")))?;
    let outcomes = recheck(&report)?;
    let unconfirmed: Vec<usize> = outcomes
        .iter()
        .filter(|o| !o.confirmed)
        .map(|o| o.index)
        .collect();
    if g.json {
        writeln!(
            io.out,
            "{}",
            json!({"campaign": report.campaign, "violations": outcomes})
        )?;
    } else {
        writeln!(
            io.out,
            "{}: {} violations recorded, {} confirmed",
            report.campaign,
            outcomes.len(),
            outcomes.len() - unconfirmed.len()
        )?;
    }
    if !unconfirmed.is_empty() {
        return Err(Usage(format!(
            "witnesses of entries {unconfirmed:?} do not re-verify"
        )));
    }
    Ok(if outcomes.is_empty() { 0 } else { 1 })
}

fn extract_error_json(e: &ExtractError) -> serde_json::Value {
    let mut v = json!({"ok": false, "stage": e.stage(), "error": e.to_string()});
    match e {
        ExtractError::NoWitness { trace, .. } => v["trace"] = json!(trace),
        ExtractError::Diagnostic {
            trace, flap, flare, ..
        } => {
            v["trace"] = json!(trace);
            v["flap"] = json!(flap);
            v["flare"] = json!(flare);
        }
        _ => {}
    }
    v
}

fn extract(
    g: &GlobalOpts,
    io: &mut Io,
    file: &str,
    ell: usize,
    tau: Option<usize>,
    skip_pipeline: bool,
) -> Result<i32, Usage> {
    theorem_constant(ell, tau)?;
    let mut failed = false;
    for graph in read_graphs(io, file)? {
        let result = if skip_pipeline {
            extract_from_subgraph(&graph, graph.vertices(), ell)
        } else {
            extract_witness(&graph, ell, tau)
        };
        match result {
            Ok(r) => {
                if g.json {
                    writeln!(
                        io.out,
                        "{}",
                        json!({"ok": true, "witness": r.witness, "trace": r.trace})
                    )?;
                } else {
                    writeln!(io.out, "graph {}: {:?}", to_graph6(&graph), r.witness)?;
                }
            }
            Err(e) => {
                failed = true;
                if g.json {
                    writeln!(io.out, "{}", extract_error_json(&e))?;
                } else {
                    writeln!(io.out, "graph {}: {e}", to_graph6(&graph))?;
                }
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn generate(g: &GlobalOpts, io: &mut Io, words: &[String]) -> Result<i32, Usage> {
    let words: Vec<&str> = words.iter().flat_map(|w| w.split_whitespace()).collect();
    let kind = parse_words(&words)?;
    let graph = kind.build()?;
    if g.json {
        let v = json!({"kind": kind.to_string(), "n": graph.n(), "m": graph.edge_count(), "graph6": to_graph6(&graph)});
        writeln!(io.out, "{v}")?;
    } else {
        writeln!(io.out, "{}", to_graph6(&graph))?;
    }
    Ok(0)
}
