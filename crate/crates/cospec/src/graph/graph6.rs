//! graph6 records: printable ASCII encoding of the upper adjacency triangle.
//!
//! Layout: an optional `>>graph6<<` header, a size field (one byte `n+63` for
//! n ≤ 62, `~` plus three 6-bit bytes for n ≤ 258047, `~~` plus six 6-bit
//! bytes beyond), then the bits b(0,1), b(0,2), b(1,2), b(0,3), … — the upper
//! triangle read column by column — packed six per byte, most significant
//! first, zero-padded to a byte boundary, each byte offset by 63.

use super::Graph;

/// Hard cap on parsed vertex counts; a graph6 record can legally describe
/// billions of vertices, but the packed adjacency matrix must fit in memory.
pub const MAX_GRAPH6_VERTICES: usize = 1 << 14;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 record at offset {offset}: expected {expected} data bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: u64, max: usize },
}

/// Parses one graph6 record. Tolerates the standard header and non-canonical
/// (over-long) size encodings; rejects bad bytes, truncation, and trailing
/// data, each with the byte offset of the fault.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let rec = &bytes[base..];
    if rec.is_empty() {
        return Err(Graph6Error::Empty);
    }
    // Byte validity is checked before any structural errors, so a corrupt
    // byte is always reported as itself rather than as a length mismatch.
    if let Some(i) = rec.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset: base + i, byte: rec[i] });
    }

    let check = |i: usize| -> Result<u8, Graph6Error> {
        match rec.get(i) {
            None => Err(Graph6Error::Truncated {
                offset: base + i,
                expected: 1,
                found: 0,
            }),
            Some(&b) if !(63..=126).contains(&b) => {
                Err(Graph6Error::InvalidByte { offset: base + i, byte: b })
            }
            Some(&b) => Ok(b),
        }
    };

    // Size field.
    let (n, mut pos) = {
        let b0 = check(0)?;
        if b0 < 126 {
            ((b0 - 63) as u64, 1)
        } else {
            let b1 = check(1)?;
            if b1 < 126 {
                let mut n: u64 = 0;
                for i in 1..4 {
                    n = n << 6 | (check(i)? - 63) as u64;
                }
                (n, 4)
            } else {
                let mut n: u64 = 0;
                for i in 2..8 {
                    n = n << 6 | (check(i)? - 63) as u64;
                }
                (n, 8)
            }
        }
    };
    if n > MAX_GRAPH6_VERTICES as u64 {
        return Err(Graph6Error::TooManyVertices { n, max: MAX_GRAPH6_VERTICES });
    }
    let n = n as usize;

    let bit_count = n * n.saturating_sub(1) / 2;
    let data_bytes = bit_count.div_ceil(6);
    let found = rec.len().saturating_sub(pos);
    if found < data_bytes {
        return Err(Graph6Error::Truncated {
            offset: base + rec.len(),
            expected: data_bytes,
            found,
        });
    }
    if found > data_bytes {
        return Err(Graph6Error::TrailingData { offset: base + pos + data_bytes });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = check(pos + bit / 6)?;
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == bit_count {
                break 'outer;
            }
        }
    }
    // Validate any remaining data bytes (possible only when n < 2).
    pos += data_bytes;
    debug_assert_eq!(pos, rec.len());
    Ok(g)
}

/// Writes the canonical graph6 record for the labeled graph: shortest size
/// form, zero padding bits.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
