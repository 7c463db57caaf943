//! graph6 interchange format.
//!
//! One graph per printable-ASCII line: a size header (`n + 63`, or `~`
//! followed by three 6-bit groups for `n >= 63`), then the upper triangle
//! of the adjacency matrix read column by column, packed into 6-bit
//! groups, each offset by 63. This is the format small-graph corpora are
//! conventionally distributed in, so encoding is bit-exact.

use crate::graph::{Graph, MAX_VERTICES};
use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 size header")]
    BadHeader,
    #[error("graph6 order {0} out of the supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("byte {byte:#04x} at position {index} outside printable range 63..=126")]
    InvalidByte { index: usize, byte: u8 },
    #[error("graph6 body has {got} bytes, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("nonzero padding bits in final graph6 group")]
    NonzeroPadding,
}

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // Long form: '~' then 18 bits of n in three 6-bit groups.
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 line. Leading and trailing ASCII whitespace is
/// ignored; everything else must be exact.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_matches(|c: char| c.is_ascii_whitespace()).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { index, byte });
        }
    }

    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        if bytes[1] == 126 {
            // 36-bit form encodes n > 258047, far past our cap.
            return Err(Graph6Error::BadHeader);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::OrderOutOfRange(n));
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            got: body.len(),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit_index = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit_index / 6] - 63;
            if byte & (1 << (5 - bit_index % 6)) != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit_index += 1;
        }
    }
    // Padding bits after the triangle must all be zero.
    if bit_count % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(adj))
}
