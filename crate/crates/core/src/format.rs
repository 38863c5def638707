//! Text formats for graphs: graph6 (short-header form only) and a plain
//! edge list.
//!
//! graph6: one header byte `n + 63` for `1 <= n <= 62`, then the upper
//! triangle of the adjacency matrix in column order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), …`) packed six bits per byte, most significant first,
//! zero-padded, each byte offset by 63.
//!
//! Edge list: a leading `n <count>` line, then one `u v` pair per line with
//! 0-based indices. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Graph6("order-0 graphs are not accepted".into()));
    }
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} needs a long-form header (max {GRAPH6_MAX_ORDER})")));
    }
    let mut out = Vec::with_capacity(1 + bit_count(n).div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some((pos, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} at position {pos} is outside 63..=126")));
    }
    if head == 126 {
        return Err(Error::Graph6(format!(
            "long-form header (order above {GRAPH6_MAX_ORDER}) is not supported"
        )));
    }
    let n = (head - OFFSET) as usize;
    if n == 0 {
        return Err(Error::Graph6("order-0 graphs are not accepted".into()));
    }
    let body = &bytes[1..];
    let expected = bit_count(n).div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut bits = body.iter().flat_map(|&b| (0..6).rev().map(move |s| (b - OFFSET) >> s & 1 == 1));
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if bits.next().expect("length checked") {
                g.add_edge(i, j)?;
            }
        }
    }
    if bits.any(|b| b) {
        return Err(Error::Graph6("padding bits are not zero".into()));
    }
    Ok(g)
}

/// A graph6 line that failed to decode.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StreamIssue {
    pub line: usize,
    pub message: String,
}

/// Decodes one graph per line, skipping blank lines and an optional
/// `>>graph6<<` header. Lines are numbered from 1; bad lines are returned as
/// issues rather than aborting the stream.
pub fn decode_graph6_lines(text: &str) -> (Vec<(usize, Graph)>, Vec<StreamIssue>) {
    let mut graphs = Vec::new();
    let mut issues = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        match decode_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => issues.push(StreamIssue { line: i + 1, message: e.to_string() }),
        }
    }
    (graphs, issues)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (&mut graph, fields.as_slice()) {
            (None, ["n", count]) => {
                let n: usize = count.parse().map_err(|_| err(format!("bad order {count:?}")))?;
                if n == 0 {
                    return Err(err("order-0 graphs are not accepted".into()));
                }
                graph = Some(Graph::from_edges(n, &[]).map_err(|e| err(e.to_string()))?);
            }
            (None, _) => return Err(err("expected a leading \"n <count>\" line".into())),
            (Some(g), [u, v]) => {
                let u: usize = u.parse().map_err(|_| err(format!("bad vertex {u:?}")))?;
                let v: usize = v.parse().map_err(|_| err(format!("bad vertex {v:?}")))?;
                g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            (Some(_), _) => return Err(err(format!("expected \"u v\", found {line:?}"))),
        }
    }
    graph.ok_or(Error::EdgeList { line: 0, msg: "missing \"n <count>\" line".into() })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
