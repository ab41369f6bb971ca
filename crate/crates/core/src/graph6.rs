//! The graph6 text format: a size field followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use crate::error::GraphError;
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const LONG: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

fn check_byte(b: u8, offset: usize) -> Result<u8, GraphError> {
    if (BIAS..=LONG).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(err(offset, format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated; byte offsets in errors count from the first byte
/// after the header.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, start) = parse_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[start..];
    if payload.len() != expected {
        return Err(err(
            start,
            format!("payload has {} bytes, a graph on {n} vertices needs {expected}", payload.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    let mut values = Vec::with_capacity(payload.len());
    for (i, &b) in payload.iter().enumerate() {
        values.push(check_byte(b, start + i)?);
    }
    for j in 1..n {
        for i in 0..j {
            let byte = values[k / 6];
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if bits % 6 != 0 {
        let last = values[values.len() - 1];
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + values.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let first = check_byte(bytes[0], 0)?;
    if bytes[0] != LONG {
        return Ok((first as usize, 1));
    }
    let (digits, start) = if bytes.get(1) == Some(&LONG) { (6, 2) } else { (3, 1) };
    if bytes.len() < start + digits {
        return Err(err(bytes.len(), "truncated size field"));
    }
    let mut n = 0usize;
    for (i, &b) in bytes[start..start + digits].iter().enumerate() {
        n = (n << 6) | check_byte(b, start + i)? as usize;
    }
    let min = if digits == 3 { 63 } else { 258_048 };
    if n < min {
        return Err(err(0, format!("size {n} uses a longer size field than needed")));
    }
    Ok((n, start + digits))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([LONG, LONG]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses a multi-line graph6 document, skipping blank lines and headers.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, GraphError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != HEADER)
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
