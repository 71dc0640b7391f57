//! graph6 encoding for graphs on at most 32 vertices.
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte
//! (most significant first), each byte offset by 63 and the last one
//! zero-padded.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} is outside the printable range 63..=126")]
    InvalidByte(u8),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(err(0, Graph6ErrorKind::Empty));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::InvalidByte(bytes[pos])));
    }
    if head == 126 {
        // Long-form header: n >= 63.
        return Err(err(0, Graph6ErrorKind::TooManyVertices(63)));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(err(0, Graph6ErrorKind::TooManyVertices(n)));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(err(1 + body.len().min(expected), Graph6ErrorKind::WrongLength { expected, found: body.len() }));
    }

    let mut adj = vec![0u32; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected, Graph6ErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_adjacency(&adj).expect("decoded adjacency is symmetric and loop-free"))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// A line of a graph6 stream that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct LineError {
    /// 1-based.
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

/// Reads a graph6 stream, one graph per line; blank lines are skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> std::io::Result<Vec<Result<Graph, LineError>>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_graph6(line.trim()).map_err(|source| LineError { line: i + 1, source }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    /// Bit-level decoder written independently of `parse_graph6`: expands
    /// every body byte into six bits, then walks the column order.
    fn reference_edges(code: &str) -> (usize, Vec<(usize, usize)>) {
        let b = code.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<u8> = b[1..].iter().flat_map(|&c| (0..6).rev().map(move |s| ((c - 63) >> s) & 1)).collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn small_codes() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn d_code_matches_reference_decoder() {
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = reference_edges("D?{");
        assert_eq!(n, 5);
        // '?' contributes nothing, '{' = 60 = 111100 covers bits 6..=9.
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        let expected: Vec<Edge> = edges.iter().map(|&(a, b)| Edge::new(a, b)).collect();
        assert_eq!(g.edges(), expected);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn c5_round_trip() {
        let c5 = Graph::cycle(5);
        let code = to_graph6(&c5);
        let (n, edges) = reference_edges(&code);
        assert_eq!(n, 5);
        assert_eq!(edges.len(), 5);
        assert_eq!(parse_graph6(&code).unwrap(), c5);
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);
        let e = parse_graph6("D?{ ").unwrap_err();
        assert_eq!((e.offset, e.kind), (3, Graph6ErrorKind::InvalidByte(b' ')));
        let e = parse_graph6("D?").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::WrongLength { expected: 2, found: 1 });
        let e = parse_graph6("D?{?").unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_graph6("~??").unwrap_err();
        assert_eq!((e.offset, e.kind), (0, Graph6ErrorKind::TooManyVertices(63)));
        // 'a' = 97 -> n = 34.
        assert_eq!(parse_graph6("a").unwrap_err().kind, Graph6ErrorKind::TooManyVertices(34));
        // K2 with a padding bit set.
        assert_eq!(parse_graph6("A`").unwrap_err().kind, Graph6ErrorKind::NonZeroPadding);
    }

    #[test]
    fn stream_reader_tracks_lines() {
        let input = "A_\n\nD?{\nbad line\n";
        let rows = read_graph6(input.as_bytes()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].is_ok() && rows[1].is_ok());
        assert_eq!(rows[2].as_ref().unwrap_err().line, 4);
    }
}
