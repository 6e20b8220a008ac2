//! Bit-exact graph6 parsing and serialization, plus exhaustive enumeration of
//! labeled connected graphs for corpus-driven verification.
//!
//! graph6 encodes the upper adjacency triangle column by column (bit `x_0` is
//! the pair `(0,1)`, then `(0,2)`, `(1,2)`, `(0,3)`, ...), six bits per byte,
//! each byte offset by 63 into printable ASCII. Writing supports the
//! single-byte size form (`n <= 62`); parsing also accepts the extended size
//! forms and the optional `>>graph6<<` header.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

pub const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G6Error {
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("truncated line: expected {expected} bytes, got {got}")]
    TruncatedLine { expected: usize, got: usize },
    #[error("trailing data after position {pos}")]
    TrailingData { pos: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("order {0} exceeds the supported cap of {MAX_VERTICES}")]
    OrderExceedsCap(usize),
    #[error("order {0} too large for the single-byte graph6 size form (n <= 62)")]
    TooLarge(usize),
    #[error("enumeration supports 2 <= n <= 7, got {0}")]
    VertexCapExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parses one graph6 line into a labeled graph.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, G6Error> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let line = match line {
        [rest @ .., b'\n'] => rest,
        other => other,
    };
    if line.is_empty() {
        return Err(G6Error::TruncatedLine { expected: 1, got: 0 });
    }
    for (pos, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(G6Error::BadChar { pos, byte: b });
        }
    }
    let (n, pos) = parse_order(line)?;
    if n > MAX_VERTICES {
        return Err(G6Error::OrderExceedsCap(n));
    }
    let expected = pos + if n >= 2 { data_len(n) } else { 0 };
    if line.len() < expected {
        return Err(G6Error::TruncatedLine {
            expected,
            got: line.len(),
        });
    }
    if line.len() > expected {
        return Err(G6Error::TrailingData { pos: expected });
    }

    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let total_bits = if n >= 2 { n * (n - 1) / 2 } else { 0 };
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = line[pos + bit_index / 6];
            let bit = (byte - 63) >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge_unchecked(i, j);
            }
            bit_index += 1;
            if bit_index == total_bits {
                break 'cols;
            }
        }
    }
    // padding bits in the final data byte must be zero
    if total_bits % 6 != 0 {
        let last = line[expected - 1] - 63;
        let pad_bits = 6 - total_bits % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(G6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Decodes the size prefix, returning `(n, bytes consumed)`.
fn parse_order(line: &[u8]) -> Result<(usize, usize), G6Error> {
    if line[0] != 126 {
        return Ok(((line[0] - 63) as usize, 1));
    }
    if line.len() >= 2 && line[1] != 126 {
        if line.len() < 4 {
            return Err(G6Error::TruncatedLine {
                expected: 4,
                got: line.len(),
            });
        }
        let n = line[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Ok((n, 4));
    }
    if line.len() < 8 {
        return Err(G6Error::TruncatedLine {
            expected: 8,
            got: line.len(),
        });
    }
    let n = line[2..8]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, 8))
}

/// Inverse of [`parse_graph6`] for `n <= 62`; emits zero padding bits.
pub fn write_graph6(g: &Graph) -> Result<String, G6Error> {
    let n = g.n();
    if n > 62 {
        return Err(G6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n.max(1)));
    out.push(n as u8 + 63);
    if n >= 2 {
        let mut acc = 0u8;
        let mut bits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(g.has_edge(i, j));
                bits += 1;
                if bits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push((acc << (6 - bits)) + 63);
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Streams every labeled connected graph on `n` vertices, in lexicographic
/// edge-bitmask order. Supported for `2 <= n <= 7` (beyond that the mask
/// space is out of desk scale).
pub fn enumerate_labeled_connected(n: usize) -> Result<ConnectedGraphs, G6Error> {
    if !(2..=7).contains(&n) {
        return Err(G6Error::VertexCapExceeded(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
    })
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let limit = 1u64 << self.pairs.len();
        while self.next_mask < limit {
            let mask = self.next_mask;
            self.next_mask += 1;
            let mut g = Graph::empty(self.n).expect("n <= 7");
            for (bit, &(i, j)) in self.pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.add_edge_unchecked(i, j);
                }
            }
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fixed_vectors() {
        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));

        let k4 = parse_graph6(b"C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);

        let empty3 = parse_graph6(b"B?").unwrap();
        assert_eq!(empty3.n(), 3);
        assert_eq!(empty3.edge_count(), 0);

        assert_eq!(parse_graph6(b"?").unwrap().n(), 0);
        assert_eq!(parse_graph6(b"@").unwrap().n(), 1);
    }

    #[test]
    fn parse_header_and_newline() {
        let g = parse_graph6(b">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn write_fixed_vectors() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2).unwrap(), "A_");
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        let k4 = Graph::from_edge_list(4, &edges).unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::empty(3).unwrap()).unwrap(), "B?");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph6(b"A\x20"),
            Err(G6Error::BadChar { pos: 1, byte: 0x20 })
        ));
        assert!(matches!(parse_graph6(b"C"), Err(G6Error::TruncatedLine { .. })));
        assert!(matches!(parse_graph6(b"A_~"), Err(G6Error::TrailingData { .. })));
        // K2 with a nonzero padding bit: 'o' = 63 + 0b010000
        assert_eq!(parse_graph6(b"Ao"), Err(G6Error::NonzeroPadding));
        assert!(matches!(parse_graph6(b""), Err(G6Error::TruncatedLine { .. })));
        assert!(matches!(parse_graph6(b"\x7f_"), Err(G6Error::BadChar { .. })));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_connected(2).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_connected(3).unwrap().count(), 4);
        assert_eq!(enumerate_labeled_connected(4).unwrap().count(), 38);
        assert_eq!(enumerate_labeled_connected(5).unwrap().count(), 728);
        assert!(enumerate_labeled_connected(8).is_err());
        assert!(enumerate_labeled_connected(1).is_err());
    }

    #[test]
    fn round_trip_small() {
        for n in 2..=5 {
            for g in enumerate_labeled_connected(n).unwrap() {
                let line = write_graph6(&g).unwrap();
                assert_eq!(parse_graph6(line.as_bytes()).unwrap(), g);
            }
        }
    }
}
