//! graph6 and edge-list encodings.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::set::MAX_VERTICES;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Graph6 {
        offset,
        message: message.into(),
    })
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits in the final byte must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return g6_err(base, "empty input");
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return g6_err(base + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126"));
        }
    }

    let (n, header_len) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return g6_err(base + bytes.len(), "truncated vertex-count header");
        }
        if bytes[1] == 126 {
            return g6_err(base + 1, "eight-byte vertex counts are not supported");
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return g6_err(base, format!("vertex count {n} outside 1..={MAX_VERTICES}"));
    }

    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < need {
        return g6_err(
            base + bytes.len(),
            format!("truncated payload: expected {need} bytes, found {}", payload.len()),
        );
    }
    if payload.len() > need {
        return g6_err(
            base + header_len + need,
            format!("{} trailing bytes after the payload", payload.len() - need),
        );
    }

    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..need * 6 {
        if bit(k) {
            return g6_err(base + header_len + k / 6, "nonzero padding bits");
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

impl Graph {
    /// Canonical graph6 encoding (no header, no newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }

    pub fn to_edge_list_document(&self) -> EdgeListDocument {
        EdgeListDocument {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// `{"n": 4, "edges": [[0, 1], [1, 2]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeListDocument {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

/// Parses the JSON edge-list document.
pub fn parse_edge_list(doc: &str) -> Result<Graph> {
    let parsed: EdgeListDocument = serde_json::from_str(doc).map_err(|e| {
        Error::Input(format!("edge-list document, line {} column {}: {e}", e.line(), e.column()))
    })?;
    parsed.to_graph()
}

/// Accepts either encoding: JSON documents start with `{`, anything else is
/// read as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn k3_decodes() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.to_graph6(), "Bw");
    }

    #[test]
    fn five_vertex_code_round_trips() {
        for code in ["D?{", "Dhc", "D~{", "D??"] {
            assert_eq!(parse_graph6(code).unwrap().to_graph6(), code);
        }
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("Bwww") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
        // K_3 with a padding bit set
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn long_header_for_large_n() {
        let g = generate(GraphKind::Path(64)).unwrap();
        let code = g.to_graph6();
        assert!(code.starts_with('~'));
        assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn edge_list_examples() {
        let k2 = parse_edge_list(r#"{"n": 2, "edges": [[0, 1]]}"#).unwrap();
        assert_eq!(k2, generate(GraphKind::Complete(2)).unwrap());
        let c4 = parse_edge_list(r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#).unwrap();
        assert_eq!(c4, generate(GraphKind::Cycle(4)).unwrap());
        let house =
            parse_edge_list(r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,0],[4,0],[4,1]]}"#).unwrap();
        assert_eq!(house, generate(GraphKind::House).unwrap());
    }

    #[test]
    fn edge_list_rejects_bad_endpoints() {
        assert!(parse_edge_list(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(parse_edge_list(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(parse_edge_list(r#"{"n":2"#).is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph("Bw").unwrap().edge_count(), 3);
        assert_eq!(parse_graph(" {\"n\":1,\"edges\":[]}").unwrap().n(), 1);
    }
}
