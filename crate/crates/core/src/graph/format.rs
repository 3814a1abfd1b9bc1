//! Line-oriented text formats.
//!
//! Multiway cut instance:
//! ```text
//! c <comment>
//! p mwc <n> <m> <k>
//! e <u> <v>
//! t <v>
//! ```
//! Separator instance: header `p sep <n> <m>`, with `x <v>` / `y <v>` lines
//! in place of `t` lines. Ids are 0-based.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Graph, MwcInstance, SeparatorInstance, VertexSet};
use crate::error::{ParseError, ParseErrorKind};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Mwc,
    Sep,
}

struct Parsed {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    sets: [Vec<usize>; 2],
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_usize(tok: Option<&str>, line: usize, raw: &str) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line, ParseErrorKind::Malformed(raw.to_string())))
}

fn parse(text: &str, kind: Kind) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_seen = HashSet::new();
    let mut sets: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut set_seen: [HashSet<usize>; 2] = [HashSet::new(), HashSet::new()];
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        if tag == "c" {
            continue;
        }
        if tag == "p" {
            if header.is_some() {
                return Err(err(line, ParseErrorKind::DuplicateHeader));
            }
            let expected = match kind {
                Kind::Mwc => "mwc",
                Kind::Sep => "sep",
            };
            if toks.next() != Some(expected) {
                return Err(err(line, ParseErrorKind::Malformed(raw.to_string())));
            }
            let n = parse_usize(toks.next(), line, raw)?;
            let m = parse_usize(toks.next(), line, raw)?;
            let k = match kind {
                Kind::Mwc => parse_usize(toks.next(), line, raw)?,
                Kind::Sep => 0,
            };
            if toks.next().is_some() {
                return Err(err(line, ParseErrorKind::Malformed(raw.to_string())));
            }
            header = Some((n, m, k, line));
            continue;
        }
        let Some((n, _, _, _)) = header else {
            return Err(err(line, ParseErrorKind::MissingHeader));
        };
        let check = |id: usize| {
            if id < n {
                Ok(id)
            } else {
                Err(err(line, ParseErrorKind::VertexOutOfRange { id, n }))
            }
        };
        let set_index = match (kind, tag) {
            (_, "e") => None,
            (Kind::Mwc, "t") | (Kind::Sep, "x") => Some(0),
            (Kind::Sep, "y") => Some(1),
            _ => return Err(err(line, ParseErrorKind::Malformed(raw.to_string()))),
        };
        match set_index {
            None => {
                let u = check(parse_usize(toks.next(), line, raw)?)?;
                let v = check(parse_usize(toks.next(), line, raw)?)?;
                if toks.next().is_some() {
                    return Err(err(line, ParseErrorKind::Malformed(raw.to_string())));
                }
                if u == v {
                    return Err(err(line, ParseErrorKind::SelfLoop(u)));
                }
                if !edge_seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge(u, v)));
                }
                edges.push((u, v));
            }
            Some(i) => {
                let v = check(parse_usize(toks.next(), line, raw)?)?;
                if toks.next().is_some() {
                    return Err(err(line, ParseErrorKind::Malformed(raw.to_string())));
                }
                if !set_seen[i].insert(v) {
                    return Err(err(line, ParseErrorKind::DuplicateVertex(v)));
                }
                sets[i].push(v);
            }
        }
    }

    let Some((n, m, k, header_line)) = header else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingHeader));
    };
    if m != edges.len() {
        return Err(err(
            header_line,
            ParseErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    Ok(Parsed { n, k, edges, sets })
}

fn build_graph(p: &Parsed) -> Graph {
    Graph::from_edges(p.n, p.edges.iter().copied()).expect("edges validated while parsing")
}

/// Parses the multiway cut instance format. Adjacent terminals are accepted;
/// see [`MwcInstance::is_feasible`].
pub fn parse_instance(text: &str) -> Result<MwcInstance, ParseError> {
    let p = parse(text, Kind::Mwc)?;
    let graph = build_graph(&p);
    let terminals = VertexSet::from_vertices(p.n, p.sets[0].iter().copied());
    Ok(MwcInstance::new(graph, terminals, p.k).expect("universe matches"))
}

/// Parses the separator instance format. Empty or overlapping `x`/`y` sets
/// are reported as malformed on the header line.
pub fn parse_separator_instance(text: &str) -> Result<SeparatorInstance, ParseError> {
    let p = parse(text, Kind::Sep)?;
    let graph = build_graph(&p);
    let source = VertexSet::from_vertices(p.n, p.sets[0].iter().copied());
    let sink = VertexSet::from_vertices(p.n, p.sets[1].iter().copied());
    SeparatorInstance::new(graph, source, sink).map_err(|e| {
        err(
            text.lines()
                .position(|l| l.trim_start().starts_with('p'))
                .map_or(1, |i| i + 1),
            ParseErrorKind::Malformed(e.to_string()),
        )
    })
}

fn write_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
}

pub fn write_instance(inst: &MwcInstance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "p mwc {} {} {}",
        g.vertex_count(),
        g.edge_count(),
        inst.k()
    );
    write_edges(&mut out, g);
    for t in inst.terminals().iter() {
        let _ = writeln!(out, "t {t}");
    }
    out
}

pub fn write_separator_instance(si: &SeparatorInstance) -> String {
    let g = si.graph();
    let mut out = String::new();
    let _ = writeln!(out, "p sep {} {}", g.vertex_count(), g.edge_count());
    write_edges(&mut out, g);
    for x in si.source().iter() {
        let _ = writeln!(out, "x {x}");
    }
    for y in si.sink().iter() {
        let _ = writeln!(out, "y {y}");
    }
    out
}
