//! graph6 encoding and decoding.
//!
//! The format packs the column-major upper triangle of the adjacency matrix
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, big-endian
//! within each group, zero-padded at the end, with 63 added to every group to
//! make it printable. The size prefix is `chr(63+n)` for `n <= 62` and
//! `'~'` followed by three printable bytes holding `n` in 18 bits otherwise.
//!
//! The parser is strict: it rejects oversized-size encodings of small `n`,
//! trailing bytes, and nonzero padding bits, always naming the byte offset.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::{upper_triangle_pairs, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid size byte 0x{byte:02x} at offset {offset}")]
    BadSizeByte { byte: u8, offset: usize },
    #[error("truncated size block at offset {offset}")]
    TruncatedSize { offset: usize },
    #[error("non-canonical multi-byte size for n = {n} at offset 0")]
    NonCanonicalSize { n: usize },
    #[error("graph on {n} vertices exceeds the supported cap of {cap}")]
    TooLarge { n: u64, cap: usize },
    #[error("invalid edge-data byte 0x{byte:02x} at offset {offset}")]
    BadDataByte { byte: u8, offset: usize },
    #[error("truncated edge data at offset {offset}: expected {expected} data bytes, found {found}")]
    TruncatedData { offset: usize, expected: usize, found: usize },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("non-canonical padding bits set at offset {offset}")]
    PaddingBits { offset: usize },
}

fn data_byte_count(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses a single graph6 line (no header, no trailing newline).
pub fn parse(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;

    let (n, header_len) = match first {
        126 => {
            if bytes.get(1) == Some(&126) {
                // 8-byte size form starts at n = 258048, far beyond the cap.
                let mut n: u64 = 0;
                for (i, &b) in bytes.iter().enumerate().skip(2).take(6) {
                    if !(63..=126).contains(&b) {
                        return Err(Graph6Error::BadSizeByte { byte: b, offset: i });
                    }
                    n = n << 6 | u64::from(b - 63);
                }
                if bytes.len() < 8 {
                    return Err(Graph6Error::TruncatedSize { offset: bytes.len() });
                }
                return if n < 258048 {
                    Err(Graph6Error::NonCanonicalSize { n: n as usize })
                } else {
                    Err(Graph6Error::TooLarge { n, cap: MAX_VERTICES })
                };
            }
            let mut n: usize = 0;
            for i in 1..4 {
                let b = *bytes.get(i).ok_or(Graph6Error::TruncatedSize { offset: i })?;
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error::BadSizeByte { byte: b, offset: i });
                }
                n = n << 6 | usize::from(b - 63);
            }
            if n <= 62 {
                return Err(Graph6Error::NonCanonicalSize { n });
            }
            (n, 4)
        }
        63..=125 => (usize::from(first - 63), 1),
        _ => return Err(Graph6Error::BadSizeByte { byte: first, offset: 0 }),
    };

    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n: n as u64, cap: MAX_VERTICES });
    }

    let expected = data_byte_count(n);
    let found = bytes.len() - header_len;
    if found < expected {
        return Err(Graph6Error::TruncatedData { offset: bytes.len(), expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage { offset: header_len + expected });
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut pos = upper_triangle_pairs(n);
    for (byte_idx, &b) in bytes[header_len..].iter().enumerate() {
        let offset = header_len + byte_idx;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadDataByte { byte: b, offset });
        }
        let group = b - 63;
        for j in 0..6 {
            let k = byte_idx * 6 + j;
            let bit = group >> (5 - j) & 1;
            if k < bit_count {
                let pair = pos.next().expect("pair iterator matches bit count");
                if bit == 1 {
                    edges.push(pair);
                }
            } else if bit != 0 {
                return Err(Graph6Error::PaddingBits { offset });
            }
        }
    }

    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Encodes a graph as a canonical graph6 string (zero padding bits).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + (n >> 12 & 0x3f) as u8);
        out.push(63 + (n >> 6 & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }

    let mut group: u8 = 0;
    let mut used = 0;
    for (i, j) in upper_triangle_pairs(n) {
        group = group << 1 | u8::from(g.has_edge(i, j));
        used += 1;
        if used == 6 {
            out.push(63 + group);
            group = 0;
            used = 0;
        }
    }
    if used > 0 {
        out.push(63 + (group << (6 - used)));
    }

    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
