//! Batch command-line front end: every pipeline as a subcommand with file
//! input and JSON (or plain text) reports.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use boxhom::bridge::{
    check_condition_a, check_condition_b, chromatic_lower_bound, generating_cofibration,
    pushout_retract_check, CofibrationKind,
};
use boxhom::complex::{
    barycentric_subdivision, boundary_simplex, full_simplex, horn, strong_collapse_complex,
    ndr_builder, ComplexCollapseDecision,
};
use boxhom::error::Error;
use boxhom::graph::{fold_analysis, random_graph, Graph, GraphHom, DEFAULT_BUDGET};
use boxhom::group::Side;
use boxhom::hom::{box_complex, pi0_hom, pi0_sing_with_budget, HomPoset};
use boxhom::homology::{reduced_betti, DEFAULT_MAX_DIM};
use boxhom::io;
use boxhom::poset::{strong_collapse_decide, CollapseDecision};

#[derive(Parser)]
#[command(name = "boxhom", about = "Hom and box complexes of graphs, strong collapse, and homological bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Backtracking node budget for enumeration commands.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Top homological dimension reported.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Group action file (generators in image notation).
    #[arg(long, global = true)]
    group: Option<PathBuf>,
    /// Run subgroup-parametrized commands over the whole subgroup lattice.
    #[arg(long, global = true)]
    subgroup_all: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized generators.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a standard graph or complex family.
    Gen {
        /// complete, cycle, path, one, sigma, kneser, random, simplex, boundary, horn
        family: String,
        params: Vec<String>,
    },
    /// Hom poset of two graphs: size and component count.
    Hom { g: PathBuf, h: PathBuf },
    /// Box poset of a graph.
    Box { g: PathBuf },
    /// Fold a graph to its stiff core.
    Core { g: PathBuf },
    /// Strong collapse of a poset or complex, optionally equivariant.
    Collapse {
        input: PathBuf,
        /// Target subobject in the same format; omitted collapses fully.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Barycentric subdivision of a complex.
    Sd {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// NDR neighborhood of a pair of complexes.
    Ndr {
        k: PathBuf,
        l: PathBuf,
        #[arg(long, default_value_t = 2)]
        subdivisions: usize,
    },
    /// First unit condition checker (requires --group).
    CheckA { t: PathBuf },
    /// Second unit condition checker (requires --group).
    CheckB { t: PathBuf },
    /// Homological chromatic lower bound.
    Bound { g: PathBuf },
    /// pi0 of the singular object vs the Hom poset.
    SingPi0 { t: PathBuf, g: PathBuf },
    /// Generating cofibration endpoints (requires --group).
    Gencof {
        t: PathBuf,
        #[arg(long, default_value_t = 3)]
        subdivisions: usize,
        #[arg(long, default_value_t = 1)]
        dimension: usize,
        /// Horn index; boundary inclusion when omitted.
        #[arg(long)]
        horn: Option<usize>,
    },
    /// Reduced GF(2) Betti numbers of a complex.
    Betti { input: PathBuf },
    /// Pushout of Y <- H c G along an attachment, with retract check.
    Pushout {
        g: PathBuf,
        h: PathBuf,
        y: PathBuf,
        /// Attachment file: one `map <h-vertex> <y-vertex>` line per vertex.
        attach: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{report}"),
                Format::Text => println!("{}", render_text(&report)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => 2u8,
                Error::Parse(_) => 3u8,
                Error::Precondition(_) | Error::Structural(_) => 4u8,
            })
        }
    }
}

fn render_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, val)| format!("{k}: {}", compact(val)))
            .collect::<Vec<_>>()
            .join("\n"),
        other => compact(other),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    let text = read(path)?;
    if text.lines().any(|l| l.trim_start().starts_with("p ")) {
        io::parse_dimacs(&text)
    } else {
        io::parse_graph(&text)
    }
}

fn require_group(cli: &Cli, side: Side, carrier: &[String]) -> Result<boxhom::Action, Error> {
    let Some(path) = &cli.group else {
        return Err(Error::Precondition("this command needs --group".into()));
    };
    let action = io::parse_group_action(&read(path)?, side)?;
    if action.points() != carrier {
        return Err(Error::Precondition(
            "group file carrier does not match the input's vertex set".into(),
        ));
    }
    Ok(action)
}

fn parse_num(s: &str, what: &str) -> Result<usize, Error> {
    s.parse().map_err(|_| Error::Parse(format!("bad {what}: {s:?}")))
}

fn run(cli: &Cli) -> Result<Value, Error> {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let max_dim = cli.max_dim.unwrap_or(DEFAULT_MAX_DIM);
    match &cli.command {
        Command::Gen { family, params } => gen(cli, family, params),
        Command::Hom { g, h } => {
            let g = load_graph(g)?;
            let h = load_graph(h)?;
            let hp = HomPoset::enumerate(&g, &h)?;
            Ok(json!({
                "elements": hp.len(),
                "components": hp.components().len(),
                "graph_maps": hp.elements.iter().filter(|e| e.to_hom().is_some()).count(),
            }))
        }
        Command::Box { g } => {
            let g = load_graph(g)?;
            let bx = box_complex(&g)?;
            Ok(json!({
                "elements": bx.pairs.len(),
                "components": bx.poset.pi0().len(),
            }))
        }
        Command::Core { g } => {
            let g = load_graph(g)?;
            let rep = fold_analysis(&g);
            Ok(json!({
                "core_vertices": rep.core.labels(),
                "folds": rep.fold_sequence.iter().map(|s| json!({
                    "removed": s.removed, "witness": s.witness,
                })).collect::<Vec<_>>(),
                "stiff": rep.fold_sequence.is_empty(),
            }))
        }
        Command::Collapse { input, target } => collapse(cli, input, target.as_deref()),
        Command::Sd { input, iterations } => {
            let k = io::parse_complex(&read(input)?)?;
            let (sd, _) = barycentric_subdivision(&k, None, *iterations)?;
            Ok(match cli.format {
                Format::Json => io::complex_to_json(&sd),
                Format::Text => Value::String(io::complex_to_text(&sd)),
            })
        }
        Command::Ndr { k, l, subdivisions } => {
            let kk = io::parse_complex(&read(k)?)?;
            let ll = io::parse_complex(&read(l)?)?;
            let action = match &cli.group {
                Some(p) => Some(io::parse_group_action(&read(p)?, Side::Left)?),
                None => None,
            };
            let res = ndr_builder(&kk, &ll, action.as_ref(), *subdivisions)?;
            Ok(json!({
                "verdict": "OK",
                "radius": res.radius,
                "sd_vertices": res.sd_k.vertex_count(),
                "a_vertices": res.a.vertex_count(),
                "certificate": res.certificate,
            }))
        }
        Command::CheckA { t } => {
            let t = load_graph(t)?;
            let action = require_group(cli, Side::Right, t.labels())?;
            let rep = check_condition_a(&t, &action)?;
            serde_json::to_value(rep).map_err(|e| Error::Structural(e.to_string()))
        }
        Command::CheckB { t } => {
            let t = load_graph(t)?;
            let action = require_group(cli, Side::Right, t.labels())?;
            let rep = check_condition_b(&t, &action)?;
            serde_json::to_value(rep).map_err(|e| Error::Structural(e.to_string()))
        }
        Command::Bound { g } => {
            let g = load_graph(g)?;
            let rep = chromatic_lower_bound(&g, max_dim)?;
            Ok(json!({
                "bound": rep.bound,
                "betti": rep.betti,
                "capped": rep.capped,
                "note": rep.note,
            }))
        }
        Command::SingPi0 { t, g } => {
            let t = load_graph(t)?;
            let g = load_graph(g)?;
            let ps = pi0_sing_with_budget(&t, &g, budget)?;
            let ph = pi0_hom(&t, &g)?;
            Ok(json!({ "pi0_sing": ps, "pi0_hom": ph, "agree": ps == ph }))
        }
        Command::Gencof { t, subdivisions, dimension, horn } => {
            let t = load_graph(t)?;
            let action = require_group(cli, Side::Right, t.labels())?;
            let kind = match horn {
                Some(r) => CofibrationKind::Horn(*r),
                None => CofibrationKind::Boundary,
            };
            let subgroups = if cli.subgroup_all {
                action.group.subgroup_lattice()
            } else {
                vec![vec![action.group.identity()]]
            };
            let mut rows = Vec::new();
            for sub in &subgroups {
                let c = generating_cofibration(&t, &action, sub, *subdivisions, *dimension, kind)?;
                rows.push(json!({
                    "subgroup": sub.iter().map(|&g| action.group.label(g).to_string()).collect::<Vec<_>>(),
                    "domain_vertices": c.domain.vertex_count(),
                    "codomain_vertices": c.codomain.vertex_count(),
                    "injective": c.map.is_injective(),
                }));
            }
            Ok(json!({ "cofibrations": rows }))
        }
        Command::Betti { input } => {
            let k = io::parse_complex(&read(input)?)?;
            Ok(json!({ "betti": reduced_betti(&k, max_dim) }))
        }
        Command::Pushout { g, h, y, attach } => {
            let g = load_graph(g)?;
            let h = load_graph(h)?;
            let y = load_graph(y)?;
            let f = parse_attachment(&read(attach)?, &h, &y)?;
            let (x, cert) = pushout_retract_check(&g, &h, &y, &f)?;
            Ok(json!({
                "verdict": if cert.is_some() { "RETRACT" } else { "NO_RETRACT" },
                "pushout": io::graph_to_json(&x),
            }))
        }
    }
}

fn parse_attachment(text: &str, h: &Graph, y: &Graph) -> Result<GraphHom, Error> {
    let mut map = vec![usize::MAX; h.vertex_count()];
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let ["map", from, to] = fields.as_slice() else {
            return Err(Error::Parse(format!("line {}: expected `map <from> <to>`", n + 1)));
        };
        let i = h
            .index_of(from)
            .ok_or_else(|| Error::Parse(format!("unknown subgraph vertex {from:?}")))?;
        let j = y
            .index_of(to)
            .ok_or_else(|| Error::Parse(format!("unknown target vertex {to:?}")))?;
        map[i] = j;
    }
    if map.contains(&usize::MAX) {
        return Err(Error::Parse("attachment must map every subgraph vertex".into()));
    }
    GraphHom::new(h, y, map)
}

fn gen(cli: &Cli, family: &str, params: &[String]) -> Result<Value, Error> {
    let p = |i: usize, what: &str| -> Result<usize, Error> {
        params
            .get(i)
            .ok_or_else(|| Error::Parse(format!("missing {what}")))
            .and_then(|s| parse_num(s, what))
    };
    enum Out {
        G(Graph),
        K(boxhom::SimplicialComplex),
    }
    let out = match family {
        "complete" => Out::G(Graph::complete(p(0, "size")?)),
        "cycle" => Out::G(Graph::cycle(p(0, "length")?)),
        "path" => {
            let n = p(0, "length")?;
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            Out::G(Graph::path(&labels))
        }
        "one" => Out::G(Graph::one()),
        "sigma" => Out::G(Graph::sigma(p(0, "dimension")?)),
        "kneser" => Out::G(Graph::stable_kneser(p(0, "n")?, p(1, "k")?)?),
        "random" => {
            let n = p(0, "size")?;
            let permille = p(1, "edge permille")? as u32;
            Out::G(random_graph(n, permille, cli.seed.unwrap_or(0)))
        }
        "simplex" => Out::K(full_simplex(p(0, "dimension")?)),
        "boundary" => Out::K(boundary_simplex(p(0, "dimension")?)),
        "horn" => Out::K(horn(p(0, "dimension")?, p(1, "missing face")?)?),
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    Ok(match (out, cli.format) {
        (Out::G(g), Format::Json) => io::graph_to_json(&g),
        (Out::G(g), Format::Text) => Value::String(io::graph_to_text(&g)),
        (Out::K(k), Format::Json) => io::complex_to_json(&k),
        (Out::K(k), Format::Text) => Value::String(io::complex_to_text(&k)),
    })
}

fn collapse(cli: &Cli, input: &Path, target: Option<&Path>) -> Result<Value, Error> {
    let text = read(input)?;
    let is_complex = text.trim_start().starts_with("s ")
        || (text.trim_start().starts_with('{') && text.contains("simplices"));
    if is_complex {
        let k = io::parse_complex(&text)?;
        let l = match target {
            Some(p) => io::parse_complex(&read(p)?)?,
            None => single_vertex_target(&k)?,
        };
        let action = match &cli.group {
            Some(p) => Some(io::parse_group_action(&read(p)?, Side::Left)?),
            None => None,
        };
        let out = strong_collapse_complex(&k, &l, action.as_ref())?;
        Ok(json!({
            "verdict": match out.decision {
                ComplexCollapseDecision::Yes => "YES",
                ComplexCollapseDecision::Stuck => "STUCK",
            },
            "residue_vertices": out.residue.labels(),
            "certificate": out.certificate,
        }))
    } else {
        let p = io::parse_poset(&text)?;
        let tgt: Option<BTreeSet<String>> = match target {
            Some(path) => {
                Some(io::parse_poset(&read(path)?)?.labels().iter().cloned().collect())
            }
            None => None,
        };
        let action = match &cli.group {
            Some(path) => Some(io::parse_group_action(&read(path)?, Side::Left)?),
            None => None,
        };
        let out = strong_collapse_decide(&p, tgt.as_ref(), action.as_ref())?;
        Ok(json!({
            "verdict": match out.decision {
                CollapseDecision::Yes => "YES",
                CollapseDecision::No => "NO",
            },
            "residue": out.residue.labels(),
            "certificate": out.certificate,
        }))
    }
}

fn single_vertex_target(k: &boxhom::SimplicialComplex) -> Result<boxhom::SimplicialComplex, Error> {
    let first = k
        .labels()
        .first()
        .ok_or_else(|| Error::Precondition("cannot collapse the empty complex".into()))?;
    boxhom::SimplicialComplex::from_maximal(&[first.clone()], &[vec![first.clone()]])
}
