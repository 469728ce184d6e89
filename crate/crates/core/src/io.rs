//! Plain-text and JSON readers and writers for graphs, posets, complexes,
//! and generator-based group actions, plus DIMACS edge-list import.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{close_permutations, Action, Side};
use crate::poset::Poset;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(n, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((n + 1, line.split_whitespace().collect()))
        }
    })
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

// ---- graphs --------------------------------------------------------------

/// `v <label>` and `e <a> <b>` lines; loops as `e x x`.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (n, fields) in content_lines(text) {
        match fields.as_slice() {
            ["v", label] => vertices.push((*label).to_string()),
            ["e", a, b] => edges.push(((*a).to_string(), (*b).to_string())),
            _ => return Err(parse_err(format!("line {n}: expected `v <label>` or `e <a> <b>`"))),
        }
    }
    for (a, b) in &edges {
        for l in [a, b] {
            if !vertices.contains(l) {
                return Err(parse_err(format!("edge endpoint {l:?} is not a declared vertex")));
            }
        }
    }
    Graph::new(&vertices, &edges).map_err(|e| parse_err(e.to_string()))
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = String::new();
    for l in g.labels() {
        out.push_str(&format!("v {l}\n"));
    }
    for (i, j) in g.edge_pairs() {
        out.push_str(&format!("e {} {}\n", g.label(i), g.label(j)));
    }
    out
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let vertices: Vec<String> = as_string_array(v.get("vertices"), "vertices")?;
    let mut edges = Vec::new();
    let raw = v
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing `edges` array"))?;
    for e in raw {
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            parse_err("each edge must be a two-element array")
        })?;
        let a = pair[0].as_str().ok_or_else(|| parse_err("edge labels must be strings"))?;
        let b = pair[1].as_str().ok_or_else(|| parse_err("edge labels must be strings"))?;
        edges.push((a.to_string(), b.to_string()));
    }
    Graph::new(&vertices, &edges).map_err(|e| parse_err(e.to_string()))
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g
        .edge_pairs()
        .iter()
        .map(|&(i, j)| json!([g.label(i), g.label(j)]))
        .collect();
    json!({ "vertices": g.labels(), "edges": edges })
}

/// Accepts either the text format or the JSON mirror.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_json(text) {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

/// DIMACS edge list: `p edge <n> <m>` then `e <i> <j>` with 1-based
/// vertex numbers. Loops are rejected here.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (line_no, fields) in content_lines(text) {
        match fields.as_slice() {
            ["c", ..] => {}
            ["p", "edge", nv, _m] | ["p", "col", nv, _m] => {
                n = Some(nv.parse().map_err(|_| parse_err(format!("line {line_no}: bad vertex count")))?);
            }
            ["e", a, b] => {
                let a: usize = a.parse().map_err(|_| parse_err(format!("line {line_no}: bad endpoint")))?;
                let b: usize = b.parse().map_err(|_| parse_err(format!("line {line_no}: bad endpoint")))?;
                if a == b {
                    return Err(parse_err(format!("line {line_no}: loops are not allowed in DIMACS input")));
                }
                edges.push((a.to_string(), b.to_string()));
            }
            _ => return Err(parse_err(format!("line {line_no}: unrecognized DIMACS line"))),
        }
    }
    let n = n.ok_or_else(|| parse_err("missing `p edge` header"))?;
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    for (a, b) in &edges {
        for l in [a, b] {
            let i: usize = l.parse().unwrap();
            if i == 0 || i > n {
                return Err(parse_err(format!("vertex {i} outside 1..={n}")));
            }
        }
    }
    Graph::new(&vertices, &edges).map_err(|e| parse_err(e.to_string()))
}

// ---- posets --------------------------------------------------------------

/// `el <label>` and `le <a> <b>` cover lines; the reflexive-transitive
/// closure is applied.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut elements: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    for (n, fields) in content_lines(text) {
        match fields.as_slice() {
            ["el", label] => elements.push((*label).to_string()),
            ["le", a, b] => covers.push(((*a).to_string(), (*b).to_string())),
            _ => return Err(parse_err(format!("line {n}: expected `el <label>` or `le <a> <b>`"))),
        }
    }
    for (a, b) in &covers {
        for l in [a, b] {
            if !elements.contains(l) {
                return Err(parse_err(format!("relation endpoint {l:?} is not a declared element")));
            }
        }
    }
    let erefs: Vec<&str> = elements.iter().map(|s| s.as_str()).collect();
    let crefs: Vec<(&str, &str)> = covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Poset::new(&erefs, &crefs).map_err(|e| parse_err(e.to_string()))
}

pub fn poset_to_text(p: &Poset) -> String {
    let mut out = String::new();
    for l in p.labels() {
        out.push_str(&format!("el {l}\n"));
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            if a != b && p.leq(a, b) {
                // emit covers only
                let is_cover = !(0..p.len()).any(|c| c != a && c != b && p.leq(a, c) && p.leq(c, b));
                if is_cover {
                    out.push_str(&format!("le {} {}\n", p.label(a), p.label(b)));
                }
            }
        }
    }
    out
}

// ---- complexes -----------------------------------------------------------

/// `s <label> <label> ...` lines, one maximal simplex each.
pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let mut simplices: Vec<Vec<String>> = Vec::new();
    for (n, fields) in content_lines(text) {
        match fields.split_first() {
            Some((&"s", rest)) if !rest.is_empty() => {
                simplices.push(rest.iter().map(|s| s.to_string()).collect());
            }
            _ => return Err(parse_err(format!("line {n}: expected `s <label> ...`"))),
        }
    }
    let vertices: BTreeSet<String> = simplices.iter().flatten().cloned().collect();
    let labels: Vec<String> = vertices.into_iter().collect();
    SimplicialComplex::from_maximal(&labels, &simplices).map_err(|e| parse_err(e.to_string()))
}

pub fn complex_to_text(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for s in k.maximal_label_sets() {
        let members: Vec<String> = s.into_iter().collect();
        out.push_str(&format!("s {}\n", members.join(" ")));
    }
    out
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let raw = v
        .get("simplices")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing `simplices` array"))?;
    let mut simplices = Vec::new();
    for s in raw {
        let arr = s.as_array().ok_or_else(|| parse_err("each simplex must be an array"))?;
        let mut simplex = Vec::new();
        for l in arr {
            simplex.push(l.as_str().ok_or_else(|| parse_err("vertex labels must be strings"))?.to_string());
        }
        simplices.push(simplex);
    }
    let vertices: BTreeSet<String> = simplices.iter().flatten().cloned().collect();
    let labels: Vec<String> = vertices.into_iter().collect();
    SimplicialComplex::from_maximal(&labels, &simplices).map_err(|e| parse_err(e.to_string()))
}

pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    let simplices: Vec<Value> = k
        .maximal_label_sets()
        .into_iter()
        .map(|s| Value::Array(s.into_iter().map(Value::String).collect()))
        .collect();
    json!({ "simplices": simplices })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if looks_like_json(text) {
        parse_complex_json(text)
    } else {
        parse_complex_text(text)
    }
}

// ---- group actions -------------------------------------------------------

/// Text format: one `points <label> ...` line declaring the carrier, then
/// one `gen <image> ...` line per generator listing images in carrier
/// order. The closure under composition is the acting group.
pub fn parse_group_action_text(text: &str, side: Side) -> Result<Action> {
    let mut points: Option<Vec<String>> = None;
    let mut gens: Vec<Vec<String>> = Vec::new();
    for (n, fields) in content_lines(text) {
        match fields.split_first() {
            Some((&"points", rest)) if !rest.is_empty() => {
                if points.is_some() {
                    return Err(parse_err(format!("line {n}: duplicate `points` line")));
                }
                points = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            Some((&"gen", rest)) => gens.push(rest.iter().map(|s| s.to_string()).collect()),
            _ => return Err(parse_err(format!("line {n}: expected `points ...` or `gen ...`"))),
        }
    }
    let points = points.ok_or_else(|| parse_err("missing `points` line"))?;
    build_action(points, gens, side)
}

pub fn parse_group_action_json(text: &str, side: Side) -> Result<Action> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let points = as_string_array(v.get("points"), "points")?;
    let raw = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing `generators` array"))?;
    let mut gens = Vec::new();
    for g in raw {
        gens.push(as_string_array(Some(g), "generator")?);
    }
    build_action(points, gens, side)
}

pub fn parse_group_action(text: &str, side: Side) -> Result<Action> {
    if looks_like_json(text) {
        parse_group_action_json(text, side)
    } else {
        parse_group_action_text(text, side)
    }
}

fn build_action(points: Vec<String>, gens: Vec<Vec<String>>, side: Side) -> Result<Action> {
    let mut sorted = points.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != points.len() {
        return Err(parse_err("carrier labels must be distinct"));
    }
    let mut perms = Vec::new();
    for g in &gens {
        if g.len() != points.len() {
            return Err(parse_err("each generator must list one image per carrier point"));
        }
        let mut perm = Vec::new();
        for img in g {
            // the image of the i-th declared point, reindexed to sorted order
            let target = sorted
                .iter()
                .position(|l| l == img)
                .ok_or_else(|| parse_err(format!("image {img:?} is not a carrier point")))?;
            perm.push(target);
        }
        // reorder the permutation domain from declaration order to sorted order
        let mut reordered = vec![usize::MAX; perm.len()];
        for (decl_idx, &target) in perm.iter().enumerate() {
            let src = sorted.iter().position(|l| l == &points[decl_idx]).unwrap();
            reordered[src] = target;
        }
        perms.push(reordered);
    }
    close_permutations(&sorted, &perms, side).map_err(|e| match e {
        Error::Budget { .. } => e,
        other => parse_err(other.to_string()),
    })
}

fn as_string_array(v: Option<&Value>, what: &str) -> Result<Vec<String>> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(format!("missing `{what}` array")))?;
    arr.iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_err(format!("`{what}` entries must be strings")))
        })
        .collect()
}
