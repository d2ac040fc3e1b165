//! graph6 encoding.
//!
//! The order `n` is written as the single byte `n + 63` for `n <= 62`, or as
//! `126` followed by three 6-bit groups for `63 <= n <= 64`. The upper
//! triangle of the adjacency matrix follows in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most significant
//! bit first, each byte offset by 63 and the last one zero-padded.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 line. A trailing newline is tolerated.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} at offset {i} outside 63..=126")));
    }
    let (n, payload) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, ..] => return Err(malformed("orders above 64 are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(malformed("truncated order field")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(malformed(format!("order {n} outside 1..=64")));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return Err(malformed(format!("truncated payload: {} of {need} bytes", payload.len())));
    }
    if payload.len() > need {
        return Err(malformed(format!("trailing bytes after {need}-byte payload")));
    }

    let mut rows = [0u64; MAX_VERTICES];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (0b100000 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = payload[need - 1] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(n, &rows))
}
