//! Slow, obviously-correct reference implementations. They only use the
//! adjacency predicate of `Graph`, never the engines under test.

#![allow(dead_code)]

use ktminor_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random order and density from a seed.
pub fn random_graph_upto(n_max: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let n = rng.gen_range(1..=n_max);
    let p = rng.gen_range(0.05..0.95);
    random_graph(n, p, seed)
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Clique counts by checking every vertex subset, untrimmed, length n + 1.
pub fn brute_clique_counts(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 20);
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_clique(g, &vs) {
            counts[vs.len()] += 1;
        }
    }
    counts
}

fn connected(g: &Graph, block: &[usize]) -> bool {
    let mut seen = vec![block[0]];
    let mut stack = vec![block[0]];
    while let Some(u) = stack.pop() {
        for &v in block {
            if !seen.contains(&v) && g.has_edge(u, v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == block.len()
}

/// `K_t` minor by trying every way to put vertices into `t` labelled-by-first
/// -appearance blocks or leave them out.
pub fn naive_has_minor(g: &Graph, t: usize) -> bool {
    fn go(g: &Graph, t: usize, v: usize, blocks: &mut Vec<Vec<usize>>) -> bool {
        if v == g.n() {
            return blocks.len() == t
                && blocks.iter().all(|b| connected(g, b))
                && (0..t).all(|i| {
                    (i + 1..t).all(|j| blocks[i].iter().any(|&u| blocks[j].iter().any(|&w| g.has_edge(u, w))))
                });
        }
        if go(g, t, v + 1, blocks) {
            return true;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            let hit = go(g, t, v + 1, blocks);
            blocks[i].pop();
            if hit {
                return true;
            }
        }
        if blocks.len() < t {
            blocks.push(vec![v]);
            let hit = go(g, t, v + 1, blocks);
            blocks.pop();
            if hit {
                return true;
            }
        }
        false
    }
    if t == 0 {
        return true;
    }
    go(g, t, 0, &mut Vec::new())
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
pub fn brute_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 1u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let min_deg = vs
            .iter()
            .map(|&u| vs.iter().filter(|&&w| g.has_edge(u, w)).count())
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    best
}

/// Coefficients of `Π (1 + p·x)`: entry `k` is `e_k(parts)`.
pub fn poly_expand(parts: &[usize]) -> Vec<u128> {
    let mut coeffs = vec![1u128];
    for &p in parts {
        let mut next = vec![0u128; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * p as u128;
        }
        coeffs = next;
    }
    coeffs
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every partition of `n` into positive parts, non-increasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
