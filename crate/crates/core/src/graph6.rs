//! The graph6 text format for graphs on up to 62 vertices.
//!
//! A record is the byte `n + 63`, followed by the upper triangle of the
//! adjacency matrix in column-major order — bits `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...` — packed into 6-bit groups (most significant bit first),
//! each group offset by 63, with zero padding in the final group. The
//! multi-byte size forms for `n > 62` are not supported.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Pairs `(i, j)`, `i < j < n`, in the bit order of the format.
pub(crate) fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_prefix(HEADER).unwrap_or(line).trim_end();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, msg: "empty record".into() });
    }
    if bytes[0] == 126 {
        return Err(Error::Capability(
            "multi-byte graph6 size forms (n > 62) are not supported".into(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::Graph6 {
            offset: 0,
            msg: format!("size byte {} out of range 63..=125", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let group_count = bit_count.div_ceil(6);
    if bytes.len() < 1 + group_count {
        return Err(Error::Graph6 {
            offset: bytes.len(),
            msg: format!(
                "truncated record: need {} data byte(s) for n = {n}, got {}",
                group_count,
                bytes.len() - 1
            ),
        });
    }
    if bytes.len() > 1 + group_count {
        return Err(Error::Graph6 {
            offset: 1 + group_count,
            msg: "trailing garbage after record".into(),
        });
    }
    let mut bits = Vec::with_capacity(group_count * 6);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset: 1 + k,
                msg: format!("data byte {b} out of range 63..=126"),
            });
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(Error::Graph6 {
            offset: bytes.len() - 1,
            msg: "nonzero padding bits".into(),
        });
    }
    let edges = pair_order(n)
        .zip(&bits)
        .filter(|(_, &set)| set)
        .map(|(e, _)| e);
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Capability(format!(
            "graph6 single-byte size form is limited to 62 vertices, got {n}"
        )));
    }
    let mut out = vec![(n as u8) + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in pair_order(n) {
        group = group << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("bytes 63..=126 are ASCII"))
}
