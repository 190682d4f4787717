//! graph6 codec: compact ASCII interchange format for simple graphs.
//!
//! A graph6 line is an order prefix followed by the upper-triangle adjacency
//! bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
//! groups, each offset by 63 into the printable range. Orders up to 62 use a
//! single prefix byte `n+63`; larger orders use `~` plus an 18-bit group (or
//! `~~` plus a 36-bit group, parsed but never emitted here since the graph
//! type caps at 64 vertices). The optional `>>graph6<<` header is tolerated.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

/// Errors from [`parse_graph6`], carrying byte positions where meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at position {position} (must be 63..=126)")]
    InvalidByte { position: usize, byte: u8 },
    #[error("graph6 order prefix truncated: {found} bytes where {expected} are required")]
    OrderTruncated { expected: usize, found: usize },
    #[error("graph6 order 0 cannot be represented as a graph")]
    OrderZero,
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    OrderTooLarge(u64),
    #[error("graph6 body has {found} bytes where {expected} are required")]
    BodyLength { expected: usize, found: usize },
}

/// Decodes one graph6 line. The `>>graph6<<` header and a trailing newline
/// are tolerated; everything else must be exact.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut s = input;
    let mut base = 0;
    if let Some(rest) = s.strip_prefix(b">>graph6<<") {
        s = rest;
        base = input.len() - rest.len();
    }
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    if s.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in s.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { position: base + i, byte: b });
        }
    }

    // Order prefix: one byte, or '~' + 3 bytes (18 bits), or '~~' + 6 bytes.
    let (order, body) = if s[0] == b'~' {
        if s.len() >= 2 && s[1] == b'~' {
            if s.len() < 8 {
                return Err(Graph6Error::OrderTruncated { expected: 8, found: s.len() });
            }
            (decode_group(&s[2..8]), &s[8..])
        } else {
            if s.len() < 4 {
                return Err(Graph6Error::OrderTruncated { expected: 4, found: s.len() });
            }
            (decode_group(&s[1..4]), &s[4..])
        }
    } else {
        (u64::from(s[0] - 63), &s[1..])
    };
    if order == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if order > MAX_VERTICES as u64 {
        return Err(Graph6Error::OrderTooLarge(order));
    }
    let n = order as usize;

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { expected, found: body.len() });
    }

    let mut adj = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[idx / 6] - 63;
            if group >> (5 - idx % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    Ok(Graph::from_rows(n, adj))
}

/// Encodes a graph as its canonical graph6 line (shortest order prefix, zero
/// padding bits). Round-trips bit-exactly with [`parse_graph6`].
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * (n - 1) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        for shift in [12u32, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Big-endian value of consecutive 6-bit groups.
fn decode_group(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0, |acc, &b| acc << 6 | u64::from(b - 63))
}
