//! The graph6 text encoding (one graph, no trailing newline).
//!
//! The upper triangle of the adjacency matrix is written column by column,
//! `(0,1), (0,2), (1,2), (0,3), …`, six bits per printable byte with 63
//! added. The vertex count precedes it as one byte (`n ≤ 62`) or as `~`
//! followed by three bytes.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let (bytes, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    let err = |offset: usize, reason| Error::Graph6 {
        offset: base + offset,
        reason,
    };
    let sixbits = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b @ 63..=126) => Ok((b - 63) as usize),
            Some(_) => Err(err(i, "byte outside the printable range 63..=126")),
            None => Err(err(i, "unexpected end of input")),
        }
    };

    match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(b':') => return Err(err(0, "sparse6 input is not supported")),
        Some(b'&') => return Err(err(0, "digraph6 input is not supported")),
        _ => {}
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::Capacity {
                what: "graph6 input",
                requested: 258_048,
                limit: MAX_VERTICES,
            });
        }
        let n = (sixbits(1)? << 12) | (sixbits(2)? << 6) | sixbits(3)?;
        if n <= 62 {
            return Err(err(0, "non-canonical size prefix"));
        }
        (n, 4)
    } else {
        (sixbits(0)?, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 input",
            requested: n,
            limit: MAX_VERTICES,
        });
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let data_len = pairs.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(err(bytes.len(), "unexpected end of input"));
    }
    if bytes.len() > pos + data_len {
        return Err(err(pos + data_len, "trailing bytes after graph"));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                chunk = sixbits(pos)?;
                pos += 1;
            }
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && chunk & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err(pos - 1, "non-zero padding bits"));
    }
    Graph::from_edges(n, &edges)
}
