//! `ordram`: command-line access to arrowing, constructions, refuting
//! colorings, classifiers, densities and random scans.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ordered_ramsey::arrow::{self, enumerate_minimal, minimality, ArrowError, Minimality};
use ordered_ramsey::classify::{
    caterpillar_pair_verdict, monotone_matching_finite, ramsey_finite_connected, ramsey_finite_structural_filter,
    ramsey_forest_case, ramsey_pseudoforest_connected, Answer, Verdict,
};
use ordered_ramsey::coloring::EdgeColoring;
use ordered_ramsey::construct::{
    self, build_caterpillar, build_forest_ramsey, build_pseudoforest_ramsey_monotone_p3, verify_determiner,
    ConstructError, DeterminerSide, ForestBuildOptions,
};
use ordered_ramsey::density::{density_m, density_m2_asym, density_m2_total};
use ordered_ramsey::random::{run_threshold_scan, scan_to_csv, RandomError, ThresholdExperiment};
use ordered_ramsey::refute::{
    applicable_forest_cases, applicable_pseudoforest_cases, refute_forest, refute_pseudoforest, ForestCase,
    PseudoforestCase,
};
use ordered_ramsey::search::{BranchOrder, SearchOptions};
use ordered_ramsey::structure::{is_connected, is_forest, is_pseudoforest, DefiningSequence};
use ordered_ramsey::{ArrowVerdict, OrderedGraph};

/// Graphs up to this many edges are checked exhaustively after construction.
const VERIFY_EDGE_LIMIT: usize = 16;

#[derive(Parser)]
#[command(name = "ordram", version, about = "Ramsey properties of ordered graphs")]
struct Cli {
    /// Structured output.
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for each exhaustive search.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,
    /// Worker threads for the coloring search.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    /// First pattern (red side): a file or an inline graph such as 'n=3;e=1-2,2-3'.
    #[arg(short = 'H', long = "h", value_name = "GRAPH")]
    h: String,
    /// Second pattern (blue side); also accepted as -H2.
    #[arg(long = "h2", value_name = "GRAPH")]
    h2: String,
}

#[derive(Subcommand)]
enum Command {
    /// Report the classifier verdicts that apply to a graph or a pair.
    Classify {
        #[arg(short = 'H', long = "h", value_name = "GRAPH")]
        h: String,
        #[arg(long = "h2", value_name = "GRAPH")]
        h2: Option<String>,
    },
    /// Decide F -> (H, H').
    Arrows {
        #[arg(short = 'F', long = "f", value_name = "GRAPH")]
        f: String,
        #[command(flatten)]
        pair: Pair,
        /// Search edges in index order, so a witness is the lexicographically least one.
        #[arg(long)]
        lex: bool,
    },
    /// Decide whether F is a minimal Ramsey graph of (H, H').
    Minimal {
        #[arg(short = 'F', long = "f", value_name = "GRAPH")]
        f: String,
        #[command(flatten)]
        pair: Pair,
    },
    /// List all minimal Ramsey graphs of (H, H') up to a size bound.
    Enumerate {
        #[arg(short = 'H', long = "h", value_name = "GRAPH")]
        h: String,
        /// Defaults to H.
        #[arg(long = "h2", value_name = "GRAPH")]
        h2: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        max_e: Option<usize>,
    },
    /// Build an explicit graph.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Color F with no red H and no blue H'.
    Refute {
        #[arg(short = 'F', long = "f", value_name = "GRAPH")]
        f: String,
        #[command(flatten)]
        pair: Pair,
        /// Case number; defaults to the first that applies.
        #[arg(long)]
        case: Option<u8>,
        /// Use the pseudoforest cases instead of the forest cases.
        #[arg(long)]
        pseudoforest: bool,
    },
    /// Density m, 2-density m2, or the asymmetric m2(G, H').
    Density {
        #[arg(short = 'G', long = "g", value_name = "GRAPH")]
        g: String,
        #[arg(long)]
        two: bool,
        /// Second graph for the asymmetric 2-density.
        #[arg(long = "h2", value_name = "GRAPH")]
        h2: Option<String>,
    },
    /// Frequency of G(n, p) -> (H, H) over a grid of p.
    RandomScan {
        #[arg(short = 'H', long = "h", value_name = "GRAPH")]
        h: String,
        #[arg(short = 'n', long, default_value_t = 10)]
        n: usize,
        /// Comma-separated probabilities.
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")]
        p: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a coloring against a pair, or a candidate determiner.
    Verify {
        #[arg(short = 'F', long = "f", value_name = "GRAPH")]
        f: String,
        #[arg(short = 'H', long = "h", value_name = "GRAPH")]
        h: Option<String>,
        #[arg(long = "h2", value_name = "GRAPH")]
        h2: Option<String>,
        /// Coloring file: one 'u v R|B' line per edge.
        #[arg(long)]
        coloring: Option<String>,
        /// Check F as a 'left' or 'right' determiner instead.
        #[arg(long)]
        determiner: Option<String>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        d: Option<String>,
        /// Segment index i (left) or start index j (right).
        #[arg(long)]
        index: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// A forest arrowing (H, H').
    ForestRamsey {
        #[command(flatten)]
        pair: Pair,
        /// Largest complete graph tried for the matching case.
        #[arg(long, default_value_t = 24)]
        ramsey_cap: usize,
    },
    /// The pseudoforest arrowing (monotone P3, monotone P3).
    Pseudoforest,
    /// The right caterpillar with a defining sequence.
    Caterpillar {
        #[arg(long)]
        d: String,
    },
    /// Left determiner for (S_s, H_i(d)).
    LeftDeterminer {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: String,
        #[arg(long)]
        i: usize,
    },
    /// Right determiner for (S_s, H_i^j(d)).
    RightDeterminer {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: String,
        #[arg(long)]
        j: usize,
    },
    /// The chain graph with long edges over Γ'' and n copies of Γ'.
    Gamma {
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value = "2,1,1")]
        d: String,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Index of the trailing left determiner.
        #[arg(long, default_value_t = 1)]
        tail: usize,
    },
    /// The chain graph joined to extra vertices by a complete bipartite graph.
    #[command(name = "f-n")]
    FN {
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value = "1,2,1")]
        d: String,
        #[arg(long, default_value_t = 3)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Members of the level-j pointed-union family.
    FamilyFj {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: String,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
}

enum Failure {
    /// Bad input or usage: exit 1.
    Input(String),
    /// Undecided within the budget: exit 2.
    Budget(String),
}

impl From<ArrowError> for Failure {
    fn from(e: ArrowError) -> Self {
        match e {
            ArrowError::BudgetExceeded(b) => Failure::Budget(b.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Arrow(a) => a.into(),
            ConstructError::RamseyNumber(arrow::RamseyNumberError::Arrow(a)) => a.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

fn load_graph(arg: &str) -> Result<OrderedGraph, Failure> {
    let (text, origin) = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
        (text, arg.to_string())
    } else {
        (arg.to_string(), "inline graph".to_string())
    };
    text.parse().map_err(|e| Failure::Input(format!("{origin}: {e}")))
}

fn parse_sequence(text: &str) -> Result<DefiningSequence, Failure> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let d = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Input(format!("bad defining sequence '{text}'")))?;
    DefiningSequence::new(d).map_err(|e| Failure::Input(format!("bad defining sequence '{text}': {e}")))
}

fn verdict_json(question: &str, v: &Verdict) -> Value {
    json!({
        "question": question,
        "answer": v.answer.to_string(),
        "basis": v.basis.tag(),
        "case": v.case,
        "swapped": v.swapped,
        "reason": v.reason,
        "sequence": v.sequence.as_ref().map(|d| d.as_slice().to_vec()),
    })
}

fn classify(h: &OrderedGraph, h2: Option<&OrderedGraph>) -> Result<Output, Failure> {
    if h.edge_count() == 0 || h2.is_some_and(|g| g.edge_count() == 0) {
        return Err(Failure::Input("graphs must have at least one edge".into()));
    }
    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();
    match h2 {
        None => {
            if is_connected(h) {
                verdicts.push((
                    "ramsey-finite",
                    ramsey_finite_connected(h).expect("connected with an edge"),
                ));
            } else {
                verdicts.push(("ramsey-finite", ramsey_finite_structural_filter(h)));
            }
        }
        Some(h2) => {
            if is_forest(h) && is_forest(h2) {
                verdicts.push(("forest-ramsey-graph", ramsey_forest_case(h, h2).expect("edges checked")));
            }
            if is_connected(h) && is_connected(h2) {
                verdicts.push((
                    "pseudoforest-ramsey-graph",
                    ramsey_pseudoforest_connected(h, h2).expect("connected"),
                ));
            }
            match caterpillar_pair_verdict(h, h2) {
                Ok(v) => verdicts.push(("ramsey-finite", v)),
                Err(_) => verdicts.push(("ramsey-finite", monotone_matching_finite(h, h2))),
            }
        }
    }
    let text = verdicts.iter().map(|(q, v)| format!("{q}: {v}\n")).collect();
    let code = if verdicts.iter().any(|(_, v)| v.answer == Answer::Unknown) {
        2
    } else {
        0
    };
    let json = json!({ "command": "classify", "verdicts": verdicts.iter().map(|(q, v)| verdict_json(q, v)).collect::<Vec<_>>() });
    Ok(Output { text, json, code })
}

fn arrows_cmd(f: &OrderedGraph, h: &OrderedGraph, h2: &OrderedGraph, opts: &SearchOptions) -> Result<Output, Failure> {
    let cert = arrow::arrows(f, h, h2, opts)?;
    let mut text = match cert.verdict {
        ArrowVerdict::Arrows => "ARROWS\n".to_string(),
        ArrowVerdict::NotArrows => "NOT_ARROWS\n".to_string(),
    };
    if let Some(w) = &cert.witness {
        text.push_str("# witness coloring: no red H, no blue H'\n");
        text.push_str(&w.to_text());
    }
    let json = json!({
        "command": "arrows",
        "verdict": if cert.arrows() { "ARROWS" } else { "NOT_ARROWS" },
        "witness": cert.witness.as_ref().map(|w| w.to_text()),
        "nodes": cert.stats.nodes,
        "red_copies": cert.stats.red_copies,
        "blue_copies": cert.stats.blue_copies,
    });
    Ok(Output::ok(text, json))
}

fn minimal_cmd(f: &OrderedGraph, h: &OrderedGraph, h2: &OrderedGraph, opts: &SearchOptions) -> Result<Output, Failure> {
    let m = minimality(f, h, h2, opts)?;
    let (word, detail) = match m {
        Minimality::Minimal => ("MINIMAL", String::new()),
        Minimality::DoesNotArrow => ("NOT_ARROWS", String::new()),
        Minimality::RemovableEdge(u, v) => ("NOT_MINIMAL", format!("edge {} {} can be removed", u + 1, v + 1)),
        Minimality::RemovableVertex(v) => ("NOT_MINIMAL", format!("vertex {} can be removed", v + 1)),
    };
    let text = if detail.is_empty() {
        format!("{word}\n")
    } else {
        format!("{word}\n# {detail}\n")
    };
    Ok(Output::ok(
        text,
        json!({ "command": "minimal", "verdict": word, "detail": detail }),
    ))
}

fn enumerate_cmd(
    h: &OrderedGraph,
    h2: &OrderedGraph,
    max_n: usize,
    max_e: Option<usize>,
    opts: &SearchOptions,
) -> Result<Output, Failure> {
    if max_n > 8 {
        return Err(Failure::Input(format!(
            "--max-n {max_n} exceeds the supported bound of 8"
        )));
    }
    let e = enumerate_minimal(h, h2, max_n, max_e, opts)?;
    let mut text: String = e.graphs.iter().map(|g| format!("{}\n", g.to_inline())).collect();
    if !e.complete {
        text.push_str(&format!(
            "# incomplete: {} candidates undecided within the budget\n",
            e.undecided
        ));
    }
    let json = json!({
        "command": "enumerate",
        "graphs": e.graphs.iter().map(|g| g.to_inline()).collect::<Vec<_>>(),
        "complete": e.complete,
        "undecided": e.undecided,
    });
    Ok(Output {
        text,
        json,
        code: if e.complete { 0 } else { 2 },
    })
}

/// Exhaustive check of a built graph against `(h, h2)` when it is small.
fn check_built(g: &OrderedGraph, h: &OrderedGraph, h2: &OrderedGraph, opts: &SearchOptions) -> Result<String, Failure> {
    if g.edge_count() > VERIFY_EDGE_LIMIT {
        return Ok(format!(
            "UNVERIFIED ({} edges exceed the exhaustive limit of {VERIFY_EDGE_LIMIT})",
            g.edge_count()
        ));
    }
    if arrow::does_arrow(g, h, h2, opts)? {
        Ok(format!("verified: arrows {} and {}", h.to_inline(), h2.to_inline()))
    } else {
        Err(Failure::Input("constructed graph failed verification".into()))
    }
}

fn construct_cmd(kind: &ConstructKind, opts: &SearchOptions) -> Result<Output, Failure> {
    let (name, params, graphs, status): (&str, String, Vec<OrderedGraph>, String) = match kind {
        ConstructKind::ForestRamsey { pair, ramsey_cap } => {
            let (h, h2) = (load_graph(&pair.h)?, load_graph(&pair.h2)?);
            let build = ForestBuildOptions {
                search: *opts,
                ramsey_cap: *ramsey_cap,
            };
            let (g, case) = build_forest_ramsey(&h, &h2, &build)?;
            let status = check_built(&g, &h, &h2, opts)?;
            let params = format!("H={} H'={} case={}", h.to_inline(), h2.to_inline(), case.number());
            ("forest Ramsey graph", params, vec![g], status)
        }
        ConstructKind::Pseudoforest => {
            let g = build_pseudoforest_ramsey_monotone_p3();
            let p3 = OrderedGraph::monotone_path(3);
            let status = check_built(&g, &p3, &p3, opts)?;
            (
                "pseudoforest Ramsey graph for two monotone P3",
                String::new(),
                vec![g],
                status,
            )
        }
        ConstructKind::Caterpillar { d } => {
            let d = parse_sequence(d)?;
            (
                "right caterpillar",
                format!("d={d}"),
                vec![build_caterpillar(&d)],
                "by definition".into(),
            )
        }
        ConstructKind::LeftDeterminer { s, d, i } => {
            let d = parse_sequence(d)?;
            determiner(*s, &d, DeterminerSide::Left { i: *i }, opts)?
        }
        ConstructKind::RightDeterminer { s, d, j } => {
            let d = parse_sequence(d)?;
            determiner(*s, &d, DeterminerSide::Right { j: *j }, opts)?
        }
        ConstructKind::Gamma { s, d, j, n, tail } => {
            let d = parse_sequence(d)?;
            let g = construct::gamma_n(*s, &d, *j, *n, *tail)?;
            let status = check_built(&g.graph, &OrderedGraph::right_star(*s), &build_caterpillar(&d), opts)?;
            let (u, v) = g.gamma2_edge;
            let params = format!("s={s} d={d} j={j} n={n} tail={tail} long-edge={} {}", u + 1, v + 1);
            ("long-edge chain over determiners", params, vec![g.graph], status)
        }
        ConstructKind::FN { s, d, j, n } => {
            let d = parse_sequence(d)?;
            let g = construct::f_n(*s, &d, *j, *n)?;
            let status = check_built(&g.graph, &OrderedGraph::right_star(*s), &build_caterpillar(&d), opts)?;
            let one = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",");
            let params = format!(
                "s={s} d={d} j={j} n={n} gammas={} U={} W={}",
                one(&g.gammas),
                one(&g.u_vertices),
                one(&g.w_vertices)
            );
            (
                "determiner chain with complete bipartite join",
                params,
                vec![g.graph],
                status,
            )
        }
        ConstructKind::FamilyFj { s, d, level, limit } => {
            let d = parse_sequence(d)?;
            let fam = construct::family_fj(*s, &d, *level, *limit)?;
            let status = if fam.complete {
                "complete".to_string()
            } else {
                format!("truncated at {limit} members")
            };
            (
                "pointed-union family",
                format!("s={s} d={d} level={level}"),
                fam.members,
                status,
            )
        }
    };
    let mut text = format!("# construction: {name}\n");
    if !params.is_empty() {
        text.push_str(&format!("# parameters: {params}\n"));
    }
    text.push_str(&format!("# status: {status}\n"));
    if graphs.len() == 1 {
        text.push_str(&graphs[0].to_text());
    } else {
        for g in &graphs {
            text.push_str(&format!("{}\n", g.to_inline()));
        }
    }
    let json = json!({
        "command": "construct",
        "construction": name,
        "parameters": params,
        "status": status,
        "graphs": graphs.iter().map(|g| g.to_inline()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn determiner(
    s: usize,
    d: &DefiningSequence,
    side: DeterminerSide,
    opts: &SearchOptions,
) -> Result<(&'static str, String, Vec<OrderedGraph>, String), Failure> {
    let (name, g, params) = match side {
        DeterminerSide::Left { i } => (
            "left determiner",
            construct::left_determiner(s, d, i)?,
            format!("s={s} d={d} i={i}"),
        ),
        DeterminerSide::Right { j } => (
            "right determiner",
            construct::right_determiner(s, d, j)?,
            format!("s={s} d={d} j={j}"),
        ),
    };
    construct::good_coloring(s, d, side)?;
    let status = if g.edge_count() > VERIFY_EDGE_LIMIT {
        format!(
            "UNVERIFIED ({} edges exceed the exhaustive limit of {VERIFY_EDGE_LIMIT})",
            g.edge_count()
        )
    } else if verify_determiner(&g, s, d, side, opts)?.holds() {
        "verified: forcing and good coloring".to_string()
    } else {
        return Err(Failure::Input("constructed determiner failed verification".into()));
    };
    Ok((name, params, vec![g], status))
}

fn refute_cmd(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    case: Option<u8>,
    pseudo: bool,
) -> Result<Output, Failure> {
    let (k, coloring) = if pseudo || !is_forest(f) {
        if !is_pseudoforest(f) {
            return Err(Failure::Input("F is not a pseudoforest".into()));
        }
        let c = match case {
            Some(k) => {
                PseudoforestCase::from_number(k).ok_or_else(|| Failure::Input(format!("no pseudoforest case {k}")))?
            }
            None => *applicable_pseudoforest_cases(h, h2)
                .first()
                .ok_or_else(|| Failure::Input("no pseudoforest case applies to this pair".into()))?,
        };
        (
            c.number(),
            refute_pseudoforest(f, h, h2, c).map_err(|e| Failure::Input(e.to_string()))?,
        )
    } else {
        let c = match case {
            Some(k) => ForestCase::from_number(k).ok_or_else(|| Failure::Input(format!("no forest case {k}")))?,
            None => *applicable_forest_cases(h, h2)
                .first()
                .ok_or_else(|| Failure::Input("no forest case applies to this pair".into()))?,
        };
        (
            c.number(),
            refute_forest(f, h, h2, c).map_err(|e| Failure::Input(e.to_string()))?,
        )
    };
    let kind = if pseudo || !is_forest(f) {
        "pseudoforest"
    } else {
        "forest"
    };
    let text = format!("# {kind} case {k}: no red H, no blue H'\n{}", coloring.to_text());
    Ok(Output::ok(
        text,
        json!({ "command": "refute", "kind": kind, "case": k, "coloring": coloring.to_text() }),
    ))
}

fn density_cmd(g: &OrderedGraph, two: bool, h2: Option<&OrderedGraph>) -> Result<Output, Failure> {
    let fail = |e: ordered_ramsey::density::DensityError| Failure::Input(e.to_string());
    let (kind, value, note) = match h2 {
        Some(h2) => ("m2_asym", density_m2_asym(g, h2).map_err(fail)?, None),
        None if two => {
            let (v, conv) = density_m2_total(g).map_err(fail)?;
            ("m2", v, conv.then_some("single edge: conventional value"))
        }
        None => ("m", density_m(g).map_err(fail)?, None),
    };
    let mut text = format!("{value}\n");
    if let Some(n) = note {
        text.push_str(&format!("# {n}\n"));
    }
    let json =
        json!({ "command": "density", "kind": kind, "value": value.to_string(), "conventional": note.is_some() });
    Ok(Output::ok(text, json))
}

fn random_cmd(exp: &ThresholdExperiment) -> Result<Output, Failure> {
    let rows = run_threshold_scan(exp).map_err(|e| match e {
        RandomError::Arrow(a) => Failure::from(a),
        other => Failure::Input(other.to_string()),
    })?;
    let json = json!({
        "command": "random-scan",
        "rows": rows.iter().map(|r| json!({
            "p": r.p, "trials": r.trials, "arrows": r.arrows, "not_arrows": r.not_arrows, "unknown": r.unknown,
        })).collect::<Vec<_>>(),
    });
    let code = if rows.iter().any(|r| r.unknown > 0) { 2 } else { 0 };
    Ok(Output {
        text: scan_to_csv(&rows),
        json,
        code,
    })
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    f: &OrderedGraph,
    h: Option<String>,
    h2: Option<String>,
    coloring: Option<String>,
    determiner: Option<String>,
    s: Option<usize>,
    d: Option<String>,
    index: Option<usize>,
    opts: &SearchOptions,
) -> Result<Output, Failure> {
    if let Some(side) = determiner {
        let need = |what: &str| Failure::Input(format!("--determiner needs --{what}"));
        let (s, d, index) = (
            s.ok_or_else(|| need("s"))?,
            parse_sequence(&d.ok_or_else(|| need("d"))?)?,
            index.ok_or_else(|| need("index"))?,
        );
        let side = match side.as_str() {
            "left" => DeterminerSide::Left { i: index },
            "right" => DeterminerSide::Right { j: index },
            other => {
                return Err(Failure::Input(format!(
                    "--determiner must be 'left' or 'right', got '{other}'"
                )))
            }
        };
        let report = verify_determiner(f, s, &d, side, opts)?;
        let word = if report.holds() { "VALID" } else { "INVALID" };
        let text = format!(
            "{word}\n# forcing: {}\n# good coloring: {}\n",
            report.forcing, report.has_good_coloring
        );
        let json = json!({
            "command": "verify", "verdict": word, "forcing": report.forcing,
            "good_coloring": report.has_good_coloring, "nodes": report.nodes,
        });
        return Ok(Output::ok(text, json));
    }
    let (Some(h), Some(h2), Some(path)) = (h, h2, coloring) else {
        return Err(Failure::Input(
            "verify needs -H, -H2 and --coloring, or --determiner".into(),
        ));
    };
    let (h, h2) = (load_graph(&h)?, load_graph(&h2)?);
    let text = std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let c = EdgeColoring::parse(f, &text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let (word, detail) = match c.check_avoids(&h, &h2) {
        Ok(()) => ("VALID", String::new()),
        Err(v) => {
            let at: Vec<String> = v.embedding.0.iter().map(|x| (x + 1).to_string()).collect();
            let which = if v.color == ordered_ramsey::Color::Red {
                "red H"
            } else {
                "blue H'"
            };
            ("INVALID", format!("{which} on vertices {}", at.join(" ")))
        }
    };
    let text = if detail.is_empty() {
        format!("{word}\n")
    } else {
        format!("{word}\n# {detail}\n")
    };
    Ok(Output::ok(
        text,
        json!({ "command": "verify", "verdict": word, "detail": detail }),
    ))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let opts = SearchOptions {
        budget: cli.budget,
        threads: cli.threads.max(1),
        order: BranchOrder::MostConstrained,
    };
    match cli.command {
        Command::Classify { h, h2 } => {
            let h2 = h2.as_deref().map(load_graph).transpose()?;
            classify(&load_graph(&h)?, h2.as_ref())
        }
        Command::Arrows { f, pair, lex } => {
            let opts = SearchOptions {
                order: if lex { BranchOrder::Lexicographic } else { opts.order },
                ..opts
            };
            arrows_cmd(&load_graph(&f)?, &load_graph(&pair.h)?, &load_graph(&pair.h2)?, &opts)
        }
        Command::Minimal { f, pair } => {
            minimal_cmd(&load_graph(&f)?, &load_graph(&pair.h)?, &load_graph(&pair.h2)?, &opts)
        }
        Command::Enumerate { h, h2, max_n, max_e } => {
            let h = load_graph(&h)?;
            let h2 = match h2 {
                Some(x) => load_graph(&x)?,
                None => h.clone(),
            };
            enumerate_cmd(&h, &h2, max_n, max_e, &opts)
        }
        Command::Construct { kind } => construct_cmd(&kind, &opts),
        Command::Refute {
            f,
            pair,
            case,
            pseudoforest,
        } => refute_cmd(
            &load_graph(&f)?,
            &load_graph(&pair.h)?,
            &load_graph(&pair.h2)?,
            case,
            pseudoforest,
        ),
        Command::Density { g, two, h2 } => {
            let h2 = h2.as_deref().map(load_graph).transpose()?;
            density_cmd(&load_graph(&g)?, two, h2.as_ref())
        }
        Command::RandomScan { h, n, p, trials, seed } => {
            let exp = ThresholdExperiment {
                h: load_graph(&h)?,
                n,
                p_grid: p,
                trials,
                seed,
                search: opts,
            };
            random_cmd(&exp)
        }
        Command::Verify {
            f,
            h,
            h2,
            coloring,
            determiner,
            s,
            d,
            index,
        } => verify_cmd(&load_graph(&f)?, h, h2, coloring, determiner, s, d, index, &opts),
    }
}

/// `-H2` is a two-letter short flag, which the parser does not support.
fn normalize_args(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| if a == "-H2" { "--h2".to_string() } else { a }).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args())) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            if json {
                println!("{}", json!({ "verdict": "UNKNOWN", "reason": msg }));
            } else {
                println!("UNKNOWN\n# {msg}");
            }
            ExitCode::from(2)
        }
    }
}
