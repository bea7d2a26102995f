//! graph6 and plain edge-list readers/writers.
//!
//! graph6 follows McKay's byte layout: an `N(n)` size header, then the upper
//! triangle of the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`), packed six bits per byte with 63 added.
//!
//! Edge lists are one `u v` pair per line, 0-based, whitespace separated.
//! Lines starting with `#` are comments; a comment of the form
//! `# vertices N` fixes the vertex count (otherwise it is `max index + 1`).

use std::str::FromStr;

use super::Multigraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edge_list" | "edge-list" | "edges" | "el" => Ok(Format::EdgeList),
            other => Err(Error::InvalidArgument(format!("unknown graph format {other:?}"))),
        }
    }
}

impl Format {
    /// Guess from a file extension: `.g6`/`.graph6` is graph6, anything else
    /// is an edge list.
    pub fn from_extension(ext: Option<&str>) -> Self {
        match ext.map(str::to_ascii_lowercase).as_deref() {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Multigraph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

const G6_HEADER: &[u8] = b">>graph6<<";

fn parse_graph6(text: &[u8]) -> Result<Multigraph> {
    let mut start = 0;
    if text.starts_with(G6_HEADER) {
        start = G6_HEADER.len();
    }
    let mut end = text.len();
    while end > start && text[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let body = &text[start..end];
    if body.is_empty() {
        return Err(parse_err(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                start + i,
                format!("byte {b:#04x} outside graph6 range 63..=126"),
            ));
        }
    }
    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(parse_err(start + body.len(), "truncated 8-byte size header"));
        }
        (read_sextets(&body[2..8]), 8)
    } else {
        if body.len() < 4 {
            return Err(parse_err(start + body.len(), "truncated 4-byte size header"));
        }
        (read_sextets(&body[1..4]), 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        let offset = start + header_len + data.len().min(need);
        return Err(parse_err(
            offset,
            format!(
                "length mismatch: {n} vertices need {need} data bytes, found {}",
                data.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(parse_err(start + header_len + need - 1, "nonzero padding bits"));
        }
    }
    Multigraph::new(n, edges)
}

fn read_sextets(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn encode_graph6(g: &Multigraph) -> Result<String> {
    if let Some(edge) = g.first_parallel_edge() {
        return Err(Error::ParallelEdges { edge });
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::InvalidArgument("too many vertices for graph6".into()));
    }
    let mut adj = std::collections::HashSet::new();
    for &(u, v) in g.edges() {
        adj.insert((u.min(v), u.max(v)));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj.contains(&(i, j)));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn parse_edge_list(text: &[u8]) -> Result<Multigraph> {
    let text = std::str::from_utf8(text).map_err(|e| parse_err(e.valid_up_to(), "input is not UTF-8"))?;
    let mut edges = Vec::new();
    let mut declared: Option<usize> = None;
    let mut max_index: Option<usize> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                let value = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| parse_err(line_start, "malformed header: expected `# vertices N`"))?;
                declared = Some(value);
            }
            continue;
        }
        let mut fields = Vec::with_capacity(2);
        let mut pos = 0;
        for token in line.split_whitespace() {
            let rel = line[pos..].find(token).expect("token comes from line") + pos;
            pos = rel + token.len();
            let at = line_start + rel;
            let value: usize = token
                .parse()
                .map_err(|_| parse_err(at, format!("expected a vertex index, found {token:?}")))?;
            fields.push((value, at));
        }
        if fields.len() != 2 {
            return Err(parse_err(
                line_start,
                format!("expected two vertex indices per line, found {}", fields.len()),
            ));
        }
        let ((u, _), (v, at_v)) = (fields[0], fields[1]);
        if u == v {
            return Err(parse_err(at_v, format!("loop edge at vertex {u}")));
        }
        max_index = Some(max_index.unwrap_or(0).max(u).max(v));
        edges.push(((u, v), fields[0].1.max(at_v)));
    }
    let inferred = max_index.map_or(0, |m| m + 1);
    let n = match declared {
        Some(d) => {
            if let Some(&((u, v), at)) = edges.iter().find(|((u, v), _)| *u >= d || *v >= d) {
                return Err(parse_err(
                    at,
                    format!("vertex index out of range: edge ({u},{v}) with {d} declared vertices"),
                ));
            }
            d
        }
        None => inferred,
    };
    Multigraph::new(n, edges.into_iter().map(|(e, _)| e).collect())
}

/// Edge-list text that [`parse_graph`] reads back to the same labeled graph,
/// edge order included.
pub fn encode_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("# vertices {}\n", g.vertex_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_graph(b"0 1\n1 2\n2 0", Format::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        let g = parse_graph(b"0 1\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1)]);
        let g = parse_graph(b"# a comment\n# vertices 5\n\n3 4\n", Format::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 5);
    }

    #[test]
    fn edge_list_errors_carry_offsets() {
        match parse_graph(b"0 1\n2 2\n", Format::EdgeList) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        match parse_graph(b"0 1\n1 x\n", Format::EdgeList) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        match parse_graph(b"0 1 2\n", Format::EdgeList) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("{other:?}"),
        }
        match parse_graph(b"# vertices 3\n0 1\n1 7\n", Format::EdgeList) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 19),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph(b"# vertices x\n", Format::EdgeList).is_err());
    }

    #[test]
    fn graph6_small_known_string() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = parse_graph(b"DQc", Format::Graph6).unwrap();
        let mut e: Vec<_> = g.edges().to_vec();
        e.sort();
        assert_eq!(e, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_trivial_round_trips() {
        let tri = Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let s = encode_graph6(&tri).unwrap();
        assert_eq!(s, "Bw");
        assert_eq!(parse_graph(s.as_bytes(), Format::Graph6).unwrap().edges(), tri.edges());
        let one = Multigraph::new(1, vec![]).unwrap();
        let s = encode_graph6(&one).unwrap();
        assert_eq!(s, "@");
        assert_eq!(parse_graph(s.as_bytes(), Format::Graph6).unwrap(), one);
        let with_header = parse_graph(b">>graph6<<Bw\n", Format::Graph6).unwrap();
        assert_eq!(with_header.edge_count(), 3);
    }

    #[test]
    fn graph6_large_header() {
        let n = 70;
        let g = Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        let back = parse_graph(s.as_bytes(), Format::Graph6).unwrap();
        assert_eq!(back.vertex_count(), n);
        assert_eq!(back.edge_count(), n);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph(b"Bww", Format::Graph6),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph(b"I", Format::Graph6),
            Err(Error::Parse { offset: 1, .. })
        ));
        // 3 bits used, low padding bits set
        assert!(matches!(
            parse_graph(b"B\x7e", Format::Graph6),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph(b"B\x20", Format::Graph6),
            Err(Error::Parse { offset: 1, .. })
        ));
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(encode_graph6(&digon), Err(Error::ParallelEdges { edge: 1 }));
    }

    #[test]
    fn edge_list_round_trip_keeps_order() {
        let g = Multigraph::new(4, vec![(2, 3), (0, 1), (1, 0), (3, 0)])
            .unwrap()
            .with_name("x");
        let back = parse_graph(encode_edge_list(&g).as_bytes(), Format::EdgeList).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.vertex_count(), 4);
    }
}
