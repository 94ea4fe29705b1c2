//! Plain-text graph files.
//!
//! ```text
//! c optional comment lines
//! p sg <n> <m>
//! e <u> <v> <+|->
//! ```
//!
//! Vertex ids in files are 1-based; they are shifted to 0-based here and
//! nowhere else.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_sign(token: &str) -> Option<Sign> {
    match token {
        "+" | "+1" => Some(Sign::Positive),
        "-" | "-1" | "\u{2212}" => Some(Sign::Negative),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second problem line"));
                }
                if tokens.len() != 4 || tokens[1] != "sg" {
                    return Err(parse_err(line_no, "expected `p sg <n> <m>`"));
                }
                let n = tokens[2]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{}`", tokens[2])))?;
                let m = tokens[3]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad edge count `{}`", tokens[3])))?;
                header = Some((n, m, line_no));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line_no, "edge line before the problem line"));
                };
                if tokens.len() != 4 {
                    return Err(parse_err(line_no, "expected `e <u> <v> <+|->`"));
                }
                let mut ends = [0usize; 2];
                for (k, tok) in tokens[1..3].iter().enumerate() {
                    let id: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad vertex id `{tok}`")))?;
                    if id == 0 || id > n {
                        return Err(parse_err(line_no, format!("vertex {id} outside 1..={n}")));
                    }
                    ends[k] = id - 1;
                }
                let sign = parse_sign(tokens[3])
                    .ok_or_else(|| parse_err(line_no, format!("bad sign `{}`", tokens[3])))?;
                edges.push((ends[0], ends[1], sign));
                lines.push(line_no);
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m, header_line)) = header else {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing problem line",
        ));
    };
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    SignedGraph::new(n, edges).map_err(|e| match e {
        Error::SelfLoop { index, u, .. } => {
            parse_err(lines[index], format!("self-loop at vertex {}", u + 1))
        }
        Error::DuplicateEdge { index, u, v } => {
            parse_err(lines[index], format!("repeated pair {} {}", u + 1, v + 1))
        }
        other => other,
    })
}

/// Serializes with edges in sorted order. Each comment string becomes one
/// `c` line.
pub fn write_graph(g: &SignedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            out.push_str("c ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("p sg {} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v, s) in g.edges() {
        out.push_str(&format!("e {} {} {}\n", u + 1, v + 1, s.symbol()));
    }
    out
}
