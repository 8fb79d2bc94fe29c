//! Encoding and decoding of graphs in graph6 format.
//!
//! graph6 stores the order, then the upper triangle of the adjacency matrix
//! in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per printable byte with an offset of 63. The optional `>>graph6<<` header
//! is accepted on input and never emitted.

use thiserror::Error;

use crate::graph::Graph;

/// Errors from graph6 parsing and encoding, with byte offsets into the input
/// (after any header has been stripped the offsets still refer to the
/// original string).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed length field at byte {offset}: {reason}")]
    BadLength { offset: usize, reason: String },
    #[error("character {byte:#04x} at byte {offset} is outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("input ends at byte {offset}: expected {expected} adjacency bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final adjacency byte at byte {offset}")]
    BadPadding { offset: usize },
    #[error("graph of order {order} exceeds the single-byte graph6 encoder limit of 62")]
    OrderTooLarge { order: usize },
}

const HEADER: &str = ">>graph6<<";

/// Decodes a graph6 string into a [`Graph`].
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let (body, base) = match input.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (input, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter {
                offset: base + i,
                byte: b,
            });
        }
    }

    let (order, data_start) = decode_order(bytes, base)?;
    let bit_count = order * order.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let data = &bytes[data_start - base..];
    if data.len() < needed {
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            expected: needed,
            found: data.len(),
        });
    }
    if data.len() > needed {
        return Err(Graph6Error::TrailingGarbage {
            offset: data_start + needed,
        });
    }

    let mut g = Graph::new(order);
    let mut bit = 0usize;
    for v in 1..order {
        for u in 0..v {
            let byte = data[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(u, v).expect("decoded edge in range");
            }
            bit += 1;
        }
    }
    // Reject set padding bits so that every graph has exactly one encoding.
    if needed > 0 {
        let last = data[needed - 1] - 63;
        let used = bit_count - 6 * (needed - 1);
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::BadPadding {
                offset: data_start + needed - 1,
            });
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, base + 1));
    }
    // 126 introduces an 18-bit order in 3 bytes; 126 126 a 36-bit order in 6.
    let (count, skip) = if bytes.len() >= 2 && bytes[1] == 126 {
        (6, 2)
    } else {
        (3, 1)
    };
    if bytes.len() < skip + count {
        return Err(Graph6Error::BadLength {
            offset: base + bytes.len(),
            reason: format!("extended length field needs {count} bytes"),
        });
    }
    let mut order: u64 = 0;
    for &b in &bytes[skip..skip + count] {
        order = (order << 6) | u64::from(b - 63);
    }
    if order > 1 << 20 {
        return Err(Graph6Error::BadLength {
            offset: base,
            reason: format!("order {order} is unreasonably large"),
        });
    }
    Ok((order as usize, base + skip + count))
}

/// Encodes a graph of order at most 62 as a graph6 string (no header).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 62 {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    let mut out = vec![63 + n as u8];
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bit_count.div_ceil(6)];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    out.extend(data.iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
