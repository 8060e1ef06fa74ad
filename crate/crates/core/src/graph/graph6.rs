//! graph6 encoding: printable bytes 63..=126 carrying six bits each, a
//! size header, then the upper triangle of the adjacency matrix column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), zero-padded to a
//! multiple of six bits.

use std::io::BufRead;

use super::{Graph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(parse_error(
            offset,
            format!("byte {b:#04x} is outside the printable range 63..=126"),
        )),
        None => Err(parse_error(offset, "unexpected end of input in size header")),
    }
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let at = |i: usize| i + skip;

    let first = sextet(bytes, 0).map_err(|e| relocate(e, skip))?;
    let (order, header_len) = if bytes[0] != LONG_HEADER {
        (first as usize, 1)
    } else {
        if bytes.get(1) == Some(&LONG_HEADER) {
            return Err(parse_error(
                at(1),
                format!("8-byte size headers are not supported (max order {MAX_ORDER})"),
            ));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i).map_err(|e| relocate(e, skip))? as usize;
        }
        if n < 63 {
            return Err(parse_error(at(1), format!("non-minimal size header for order {n}")));
        }
        (n, 4)
    };
    if order == 0 {
        return Err(parse_error(at(0), "order 0 graphs are not supported"));
    }
    if order > MAX_ORDER {
        return Err(Error::Capability {
            what: "graph6 order",
            requested: order,
            limit: MAX_ORDER,
        });
    }

    let pairs = order * (order - 1) / 2;
    let data_len = pairs.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != data_len {
        let offset = header_len + data.len().min(data_len);
        return Err(parse_error(
            at(offset),
            format!("order {order} needs {data_len} data bytes, found {}", data.len()),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; order];
    let mut k = 0usize;
    for j in 1..order {
        for i in 0..j {
            let byte = header_len + k / 6;
            let value = sextet(bytes, byte).map_err(|e| relocate(e, skip))?;
            if value >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = header_len + data_len - 1;
        let value = bytes[last] - BIAS;
        let pad_bits = 6 - pairs % 6;
        if value & ((1 << pad_bits) - 1) != 0 {
            return Err(parse_error(at(last), "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

fn relocate(e: Error, skip: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + skip,
            reason,
        },
        other => other,
    }
}

/// Encodes `g` in graph6 (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// One non-comment line of a graph6 corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Line {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Reads a corpus with one graph per line. Text from `#` to the end of a
/// line is a comment, and lines left blank are skipped. Graphs are parsed lazily, one line at a time.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph6Line>> {
    reader.lines().enumerate().filter_map(|(idx, line)| match line {
        Err(e) => Some(Err(Error::from(e))),
        Ok(text) => {
            let t = text.split('#').next().unwrap_or_default().trim();
            if t.is_empty() {
                None
            } else {
                let graph = parse_graph6(t);
                Some(Ok(Graph6Line {
                    line: idx + 1,
                    text: t.to_string(),
                    graph,
                }))
            }
        }
    })
}
