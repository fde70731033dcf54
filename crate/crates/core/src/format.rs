//! graph6 and plain edge-list serialization.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Supported text formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_GRAPH6_N: u64 = (1 << 36) - 1;

pub fn parse(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edgelist(text),
    }
}

pub fn serialize(graph: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => to_graph6(graph).into_bytes(),
        Format::EdgeList => to_edgelist(graph).into_bytes(),
    }
}

/// Guesses the format: edge lists start with a decimal vertex count line.
pub fn detect(text: &[u8]) -> Format {
    let first = text
        .split(|&b| b == b'\n')
        .map(|l| l.trim_ascii())
        .find(|l| !l.is_empty() && !l.starts_with(b"#"));
    match first {
        Some(line) if line.iter().all(u8::is_ascii_digit) => Format::EdgeList,
        _ => Format::Graph6,
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(GRAPH6_HEADER.as_bytes()) {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(parse_err(format!("invalid graph6 byte 0x{b:02x}")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err("truncated graph6 size header"));
        }
        (decode_size(&bytes[1..4])?, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err("truncated graph6 size header"));
        }
        (decode_size(&bytes[2..8])?, &bytes[8..])
    };
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| parse_err(format!("graph6 order {n} too large")))?
        / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, expected {expected} for {n} vertices",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(parse_err("nonzero graph6 padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<usize> {
    let n = bytes
        .iter()
        .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS));
    usize::try_from(n).map_err(|_| parse_err(format!("graph6 order {n} too large")))
}

/// graph6 encoding without header or trailing newline.
pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.n();
    assert!(n as u64 <= MAX_GRAPH6_N, "graph too large for graph6");
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | graph.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_edgelist(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|_| parse_err("edge list is not UTF-8"))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err("missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(format!("line {lineno}: expected \"u v\"")));
        };
        let index = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(format!("line {lineno}: bad vertex index {s:?}")))
        };
        edges.push((index(u)?, index(v)?));
    }
    Graph::from_edges(n, edges)
}

/// Edge list with a vertex-count header and one `u v` line per edge, `u < v`.
pub fn to_edgelist(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.n());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn graph6_known_strings() {
        let g = parse_graph6(b"DQc").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_round_trip_d_string() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn graph6_header_and_whitespace() {
        let g = parse_graph6(b">>graph6<<C~\n").unwrap();
        assert_eq!(g, complete(4));
    }

    #[test]
    fn graph6_long_size_header() {
        let g = path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6(b"").is_err());
        assert!(parse_graph6(b"D?").is_err());
        // 'A' encodes n=2 with one data bit; '_' sets a padding bit
        assert!(parse_graph6(b"A`").is_err());
        assert!(parse_graph6(b"A_").is_ok());
        assert!(parse_graph6(b"C\x7f").is_err());
    }

    #[test]
    fn edgelist_parse() {
        let g = parse_edgelist(b"3\n0 1\n1 2").unwrap();
        assert_eq!(g, path(3));
        let g = parse_edgelist(b"# header\n3 # count\n\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(parse_edgelist(b"3\n0 0"), Err(Error::SelfLoop(0)));
        assert!(matches!(
            parse_edgelist(b"3\n0 3"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_edgelist(b"3\n0 1\n1 0"),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(parse_edgelist(b"x\n0 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_edgelist(b"3\n0 1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_edgelist(b""), Err(Error::Parse(_))));
    }

    #[test]
    fn edgelist_serialize() {
        assert_eq!(to_edgelist(&path(3)), "3\n0 1\n1 2\n");
    }

    #[test]
    fn detection() {
        assert_eq!(detect(b"3\n0 1\n"), Format::EdgeList);
        assert_eq!(detect(b"# c\n3\n"), Format::EdgeList);
        assert_eq!(detect(b"DQc\n"), Format::Graph6);
        assert_eq!(detect(b">>graph6<<DQc"), Format::Graph6);
    }
}
