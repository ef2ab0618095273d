//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! The canonical form of a graph is the relabeling minimizing the adjacency
//! bit string (in the column-major pair order shared with the graph6 codec),
//! taken over all `n!` vertex permutations. Enumeration walks every labeled
//! graph and keeps the canonical ones, which is tractable only for `n <= 6`;
//! larger corpora must arrive as graph6 files.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::pair_order;

pub const MAX_ENUMERATE_N: usize = 6;
const MAX_CANONICAL_N: usize = 8;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn edge_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for &(i, j) in g.edges() {
        mask |= 1u64 << pair_index(i, j);
    }
    mask
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_order(n)
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("mask encodes a valid simple graph")
}

/// Bit-string comparison key: bit 0 of the mask is the most significant
/// position, so smaller key = lexicographically smaller adjacency string.
fn lex_key(mask: u64, bit_count: usize) -> u64 {
    if bit_count == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - bit_count)
    }
}

/// Permutation tables: for each vertex permutation, where each edge bit goes.
fn edge_permutations(n: usize) -> Vec<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = pair_order(n).collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            pairs
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (perm[i], perm[j]);
                    pair_index(a.min(b), a.max(b))
                })
                .collect()
        })
        .collect()
}

fn apply_edge_perm(mask: u64, table: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        out |= 1u64 << table[k];
        m &= m - 1;
    }
    out
}

/// Canonical relabeling of an arbitrary graph. Brute force over all vertex
/// permutations, so only graphs with up to 8 vertices are accepted.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::Capability(format!(
            "canonical labeling is brute force and capped at {MAX_CANONICAL_N} vertices, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let bit_count = n * (n - 1) / 2;
    let mask = edge_mask(g);
    let mut best_mask = mask;
    let mut best_key = lex_key(mask, bit_count);
    for table in edge_permutations(n) {
        let m2 = apply_edge_perm(mask, &table);
        let key = lex_key(m2, bit_count);
        if key < best_key {
            best_key = key;
            best_mask = m2;
        }
    }
    Ok(graph_from_mask(n, best_mask))
}

/// All graphs on exactly `n` vertices, one canonical representative per
/// isomorphism class, in increasing canonical order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n < 1 {
        return Err(Error::Parameter("enumeration needs n >= 1".into()));
    }
    if n > MAX_ENUMERATE_N {
        return Err(Error::Capability(format!(
            "exhaustive enumeration is capped at n = {MAX_ENUMERATE_N}; supply larger graphs as a graph6 file"
        )));
    }
    if n == 1 {
        return Ok(vec![Graph::new(1, [])?]);
    }
    let bit_count = n * (n - 1) / 2;
    let tables = edge_permutations(n);
    let mut canonical: Vec<(u64, u64)> = Vec::new();
    'masks: for mask in 0u64..(1u64 << bit_count) {
        let key = lex_key(mask, bit_count);
        for table in &tables {
            if lex_key(apply_edge_perm(mask, table), bit_count) < key {
                continue 'masks;
            }
        }
        canonical.push((key, mask));
    }
    canonical.sort_unstable();
    Ok(canonical
        .into_iter()
        .map(|(_, mask)| graph_from_mask(n, mask))
        .collect())
}
