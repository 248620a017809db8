//! nauty's graph6 encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix in column-major order, six bits per printable byte.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed size prefix at byte {offset}")]
    BadSizePrefix { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("nonzero padding bits in byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph has {n} vertices; at most 64 are supported")]
    TooManyVertices { n: usize },
    #[error("graph6 record for a graph with no vertices")]
    NoVertices,
    #[error("expected {expected} bytes of adjacency data, found {found} (starting at offset {offset})")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
}

fn sextet(line: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match line.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&byte) => Err(Graph6Error::InvalidByte { offset, byte }),
        None => Err(Graph6Error::BadSizePrefix { offset }),
    }
}

/// Decodes the size prefix, returning `(n, prefix_len)`.
fn parse_size(line: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *line.first().ok_or(Graph6Error::Empty)?;
    if first != 126 {
        return Ok((sextet(line, 0)? as usize, 1));
    }
    if line.get(1) == Some(&126) {
        if line.len() < 8 {
            return Err(Graph6Error::BadSizePrefix { offset: line.len() });
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | sextet(line, i)?;
        }
        if n < 258_048 {
            return Err(Graph6Error::BadSizePrefix { offset: 0 });
        }
        return Ok((n as usize, 8));
    }
    if line.len() < 4 {
        return Err(Graph6Error::BadSizePrefix { offset: line.len() });
    }
    let mut n = 0u64;
    for i in 1..4 {
        n = n << 6 | sextet(line, i)?;
    }
    if n < 63 {
        return Err(Graph6Error::BadSizePrefix { offset: 0 });
    }
    Ok((n as usize, 4))
}

/// Parses one graph6 record (no header, no line terminator).
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, start) = parse_size(line)?;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &line[start..];
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: start,
            expected,
            found: body.len(),
        });
    }
    let mut adj = vec![0u64; n];
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0usize;
    for (idx, &b) in body.iter().enumerate() {
        let offset = start + idx;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let bit = v >> shift & 1;
            if k >= bits {
                if bit != 0 {
                    return Err(Graph6Error::NonzeroPadding { offset });
                }
                continue;
            }
            if bit == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph { n, adj })
}

pub(super) fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n;
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}
