//! Text formats for graphs: graph6 (short form) and a plain edge list.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest vertex count representable in short-form graph6.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    /// Header `"n m"`, then one `"u v"` line per edge, 0-indexed.
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(Error::MalformedInput {
                offset: 0,
                message: format!("unknown graph format {s:?}"),
            }),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edgelist",
        })
    }
}

fn malformed(offset: usize, message: impl Into<String>) -> Error {
    Error::MalformedInput {
        offset,
        message: message.into(),
    }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count for short-form graph6",
            size: n,
            limit: GRAPH6_MAX_N,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or_else(|| malformed(0, "empty graph6 string"))?;
    if first == b'~' {
        return Err(malformed(0, "long-form graph6 (n > 62) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(malformed(0, "graph6 byte out of range"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return Err(malformed(
            offset,
            format!("graph6 for {n} vertices needs {expected} bytes, found {}", bytes.len()),
        ));
    }
    let mut data = Vec::with_capacity(bytes.len() - 1);
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(malformed(pos, "graph6 byte out of range"));
        }
        data.push(b - 63);
    }
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    for k in bits..data.len() * 6 {
        if bit(k) {
            return Err(malformed(1 + k / 6, "nonzero padding bits"));
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

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    // tokens with their byte offsets
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, &text[s..]));
    }
    let number = |(offset, tok): (usize, &str)| {
        tok.parse::<usize>()
            .map_err(|_| malformed(offset, format!("expected a nonnegative integer, found {tok:?}")))
    };
    if tokens.len() < 2 {
        return Err(malformed(text.len(), "missing \"n m\" header"));
    }
    let n = number(tokens[0])?;
    if n > MAX_VERTICES {
        return Err(malformed(tokens[0].0, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    let m = number(tokens[1])?;
    let body = &tokens[2..];
    if body.len() != 2 * m {
        let offset = body.get(2 * m).map_or(text.len(), |t| t.0);
        return Err(malformed(offset, format!("header announces {m} edges, found {} tokens", body.len())));
    }
    let mut g_edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for pair in body.chunks(2) {
        let (u, v) = (number(pair[0])?, number(pair[1])?);
        for (tok, w) in [(pair[0], u), (pair[1], v)] {
            if w >= n {
                return Err(malformed(tok.0, format!("vertex {w} out of range for n = {n}")));
            }
        }
        if u == v {
            return Err(malformed(pair[0].0, "self-loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(malformed(pair[0].0, "repeated edge"));
        }
        g_edges.push((u, v));
    }
    Graph::from_edges(n, g_edges)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => from_graph6(text.trim_end_matches(['\n', '\r'])),
        GraphFormat::EdgeList => from_edge_list(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => Ok(to_edge_list(g)),
    }
}

/// Edge list if the text has inner whitespace, graph6 otherwise.
pub fn detect_format(text: &str) -> GraphFormat {
    if text.trim().contains(char::is_whitespace) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

/// Graphs serialize as graph6 strings.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = to_graph6(self).map_err(serde::ser::Error::custom)?;
        s.serialize_str(&text)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_graph6(&s).map_err(serde::de::Error::custom)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let text = to_graph6(&g).unwrap();
            prop_assert_eq!(from_graph6(&text).unwrap(), g.clone());
            prop_assert_eq!(to_graph6(&from_graph6(&text).unwrap()).unwrap(), text);
            prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
