//! graph6 codec and a plain edge-list text reader.
//!
//! graph6 packs the upper adjacency triangle in column-major order
//! `(0,1),(0,2),(1,2),(0,3),...` into 6-bit groups, big-endian within each
//! group and zero-padded at the end; every payload byte stores `63 + value`.
//! The size header is one byte `63 + n` for `n <= 62` and `'~'` followed by
//! three 6-bit bytes for larger graphs.

use crate::error::ParseError;
use crate::graph::{Graph, MAX_VERTICES};

/// Upper-triangle vertex pairs in graph6 bit order.
pub fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn check_printable(bytes: &[u8], start: usize) -> Result<(), ParseError> {
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::NonPrintable {
                offset: start + k,
                byte: b,
            });
        }
    }
    Ok(())
}

/// Decodes the size header, returning `(n, header_len)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), ParseError> {
    match bytes[0] {
        126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // 8-byte form, 36-bit size
                if bytes.len() < 8 {
                    return Err(ParseError::BadSizeHeader { offset: 0 });
                }
                check_printable(&bytes[2..8], 2)?;
                let mut n = 0usize;
                for &b in &bytes[2..8] {
                    n = n << 6 | (b - 63) as usize;
                }
                Ok((n, 8))
            } else {
                // 4-byte form, 18-bit size
                if bytes.len() < 4 {
                    return Err(ParseError::BadSizeHeader { offset: 0 });
                }
                check_printable(&bytes[1..4], 1)?;
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    n = n << 6 | (b - 63) as usize;
                }
                Ok((n, 4))
            }
        }
        63..=125 => Ok(((bytes[0] - 63) as usize, 1)),
        b => Err(ParseError::NonPrintable { offset: 0, byte: b }),
    }
}

/// Parses one graph6 line. Trailing ASCII whitespace is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let (n, header_len) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(ParseError::UnsupportedSize {
            n,
            max: MAX_VERTICES,
        });
    }
    let payload = &bytes[header_len..];
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() < expected {
        return Err(ParseError::Truncated {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(ParseError::TrailingData {
            offset: header_len + expected,
        });
    }
    check_printable(payload, header_len)?;

    let mut g = Graph::empty_unchecked(n);
    for (k, (u, v)) in colex_pairs(n).enumerate() {
        let value = payload[k / 6] - 63;
        if value >> (5 - k % 6) & 1 == 1 {
            g.insert_edge(u, v).expect("colex pairs are in range");
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding; `parse_graph6` inverts it exactly.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 4-byte header covers every n this crate can construct
        out.push(126);
        out.push(63 + (n >> 12 & 0x3f) as u8);
        out.push(63 + (n >> 6 & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut value = 0u8;
    let mut filled = 0u8;
    for (u, v) in colex_pairs(n) {
        value = value << 1 | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(63 + value);
            value = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (value << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads the `u v` edge-list text format: one pair per line, 0-indexed,
/// `#` starts a comment. A first line holding a single integer fixes the
/// vertex count; otherwise it is `max endpoint + 1`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    let mut first_significant = true;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_field = |s: &str| -> Result<usize, ParseError> {
            s.parse().map_err(|_| ParseError::BadEdgeLine {
                line: line_no,
                message: format!("expected a vertex index, got {s:?}"),
            })
        };
        match fields.as_slice() {
            [single] if first_significant => header = Some(parse_field(single)?),
            [u, v] => pairs.push((line_no, parse_field(u)?, parse_field(v)?)),
            _ => {
                return Err(ParseError::BadEdgeLine {
                    line: line_no,
                    message: format!("expected `u v`, got {line:?}"),
                })
            }
        }
        first_significant = false;
    }

    let n = match header {
        Some(n) => n,
        None => match pairs.iter().map(|&(_, u, v)| u.max(v) + 1).max() {
            Some(n) => n,
            None => return Err(ParseError::Empty),
        },
    };
    if n > MAX_VERTICES {
        return Err(ParseError::UnsupportedSize {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty_unchecked(n);
    for (line, u, v) in pairs {
        g.insert_edge(u, v).map_err(|e| ParseError::BadEdgeLine {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}
