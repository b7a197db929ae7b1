//! Exact clique counting.
//!
//! Vertices are relabelled along a degeneracy order so that every clique is
//! found exactly once from its earliest vertex, extending only through
//! "forward" neighbours. A candidate set that is itself a clique is closed off
//! with binomial coefficients instead of being walked.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::graph::{degeneracy, Graph};

/// Number of `k`-cliques for each `k = 0 … ω(G)`.
///
/// Always trimmed: the last entry is non-zero, so two vectors are equal iff
/// every count agrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueVector {
    counts: Vec<BigUint>,
}

impl CliqueVector {
    /// Trims trailing zeros. An all-zero input becomes `[1]` (the empty
    /// clique always exists).
    pub fn from_counts(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(BigUint::from(1u8));
        }
        CliqueVector { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `cliques(G, k)`; zero beyond the clique number.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// `cliques(G)`, the empty clique included.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn clique_number(&self) -> usize {
        self.counts.len() - 1
    }

    /// Component-wise sum, for combining partial counts.
    pub fn add(&self, other: &CliqueVector) -> CliqueVector {
        let len = self.counts.len().max(other.counts.len());
        let counts = (0..len).map(|k| self.get(k) + other.get(k)).collect();
        CliqueVector::from_counts(counts)
    }
}

/// Per-size counters in machine words, spilling into big integers when a
/// word would overflow.
struct Tally {
    small: Vec<u128>,
    big: Vec<BigUint>,
}

impl Tally {
    fn new(len: usize) -> Self {
        Tally {
            small: vec![0; len],
            big: vec![BigUint::zero(); len],
        }
    }

    #[inline]
    fn add(&mut self, k: usize, x: u128) {
        match self.small[k].checked_add(x) {
            Some(s) => self.small[k] = s,
            None => {
                self.big[k] += self.small[k];
                self.small[k] = x;
            }
        }
    }

    fn into_counts(self) -> Vec<BigUint> {
        self.big
            .into_iter()
            .zip(self.small)
            .map(|(b, s)| b + s)
            .collect()
    }
}

/// A graph prepared for counting: relabelled along a degeneracy order with
/// forward neighbourhoods precomputed.
///
/// Roots are independent, so callers may split `0..n` into ranges, count them
/// separately (possibly in parallel) and [`CliqueVector::add`] the results.
pub struct CliqueCounter {
    forward: Vec<VertexSet>,
    /// `pascal[s][j] = C(s, j)`; exact in `u128` for `s ≤ 128`.
    pascal: Vec<Vec<u128>>,
    depth_bound: usize,
}

impl CliqueCounter {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let (d, order) = degeneracy(g);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut forward = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            let p = pos[v];
            forward[p] = g
                .neighbors(v)
                .iter()
                .map(|u| pos[u])
                .filter(|&q| q > p)
                .collect();
        }
        let max_fwd = forward.iter().map(VertexSet::len).max().unwrap_or(0);
        debug_assert!(max_fwd <= d);
        let mut pascal: Vec<Vec<u128>> = Vec::with_capacity(max_fwd + 1);
        for s in 0..=max_fwd {
            let mut row = vec![1u128; s + 1];
            for j in 1..s {
                row[j] = pascal[s - 1][j - 1] + pascal[s - 1][j];
            }
            pascal.push(row);
        }
        CliqueCounter {
            forward,
            pascal,
            depth_bound: max_fwd + 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.forward.len()
    }

    /// Cliques whose earliest vertex (in degeneracy order) lies in `roots`.
    /// The empty clique is counted only when `roots` starts at 0.
    pub fn count_roots(&self, roots: Range<usize>) -> CliqueVector {
        let mut tally = Tally::new(self.depth_bound);
        if roots.start == 0 {
            tally.add(0, 1);
        }
        for r in roots {
            self.extend(self.forward[r], 1, usize::MAX, &mut tally);
        }
        CliqueVector::from_counts(tally.into_counts())
    }

    /// Only cliques of size exactly `k`, pruning deeper branches.
    pub fn count_roots_k(&self, roots: Range<usize>, k: usize) -> BigUint {
        if k == 0 {
            return BigUint::from((roots.start == 0) as u8);
        }
        if k > self.depth_bound {
            return BigUint::zero();
        }
        let mut tally = Tally::new(self.depth_bound.max(k + 1));
        for r in roots {
            self.extend(self.forward[r], 1, k, &mut tally);
        }
        tally.into_counts().swap_remove(k)
    }

    /// Counts the clique reached at `depth` and every extension of it by
    /// vertices of `cand` (all of which are adjacent to the whole clique and
    /// later in the order). Nothing beyond `max_depth` is recorded.
    fn extend(&self, cand: VertexSet, depth: usize, max_depth: usize, tally: &mut Tally) {
        tally.add(depth, 1);
        if depth == max_depth || cand.is_empty() {
            return;
        }
        let size = cand.len();
        if cand.iter().all(|v| (self.forward[v] & cand) == cand.above(v)) {
            let row = &self.pascal[size];
            let top = size.min(max_depth - depth);
            for j in 1..=top {
                tally.add(depth + j, row[j]);
            }
            return;
        }
        for v in cand.iter() {
            self.extend(cand & self.forward[v], depth + 1, max_depth, tally);
        }
    }
}

/// Exact clique vector of `g`.
pub fn clique_vector(g: &Graph) -> CliqueVector {
    let counter = CliqueCounter::new(g);
    counter.count_roots(0..counter.vertex_count())
}

/// `cliques(G, k)`.
pub fn count_cliques_k(g: &Graph, k: usize) -> BigUint {
    let counter = CliqueCounter::new(g);
    counter.count_roots_k(0..counter.vertex_count(), k)
}

/// The clique number `ω(G)`.
pub fn max_clique(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            rest.remove(v);
            grow(g, rest & g.neighbors(v), size + 1, best);
        }
    }
    let mut best = 0;
    grow(g, g.vertices(), 0, &mut best);
    best
}

/// All `k`-cliques, each as a vertex set, in lexicographic order of their
/// sorted vertex lists.
pub fn list_k_cliques(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn walk(g: &Graph, clique: VertexSet, cand: VertexSet, need: usize, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(clique);
            return;
        }
        for v in cand.iter() {
            let mut next = clique;
            next.insert(v);
            walk(g, next, cand.above(v) & g.neighbors(v), need - 1, out);
        }
    }
    let mut out = Vec::new();
    walk(g, VertexSet::EMPTY, g.vertices(), k, &mut out);
    out
}
