//! Generators for the extremal families: ℓ-trees, complete multipartite and
//! Turán graphs, and `(H, k)`-cockades.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::cliques::list_k_cliques;
use crate::error::{Error, Result};
use crate::graph::{paste_mapped, Graph};

/// Part sizes of a complete multipartite graph, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    /// Sorts `parts` into non-increasing order. Every part must be positive.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Argument("a multipartite graph needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::Argument("part sizes must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultipartiteSpec { parts })
    }

    /// `K_{c×2}`.
    pub fn pairs(c: usize) -> Result<Self> {
        Self::new(vec![2; c])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total vertex count.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn c(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Average part size `n / c`.
    pub fn average_part_size(&self) -> Ratio<usize> {
        Ratio::new(self.n(), self.c())
    }

    /// `⌊(n+c)/2⌋ ≤ n − n₁ + 1`.
    pub fn is_balanced(&self) -> bool {
        (self.n() + self.c()) / 2 < self.n() - self.largest() + 2
    }

    /// `min{⌊(n+c)/2⌋ + 1, n − n₁ + 2}`: the graph has no `K_t` minor for
    /// this `t` but does have a `K_{t−1}` minor.
    pub fn minor_free_order(&self) -> usize {
        ((self.n() + self.c()) / 2 + 1).min(self.n() - self.largest() + 2)
    }

    /// `Π (nᵢ + 1)`, the total number of cliques.
    pub fn total_cliques(&self) -> num_bigint::BigUint {
        self.parts
            .iter()
            .map(|&p| num_bigint::BigUint::from(p + 1))
            .product()
    }
}

/// `K_{n₁,…,n_c}` with part `i` occupying a consecutive block of indices,
/// parts in the spec's (non-increasing) order.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> Result<Graph> {
    complete_multipartite_parts(spec.parts())
}

/// Like [`complete_multipartite`] but keeps the parts in the given order.
pub fn complete_multipartite_parts(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "complete multipartite graph",
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    let all = VertexSet::full(n);
    let mut adj = Vec::with_capacity(n);
    let mut start = 0;
    for &p in parts {
        let block = all - VertexSet::full(start) - !VertexSet::full(start + p);
        adj.extend(core::iter::repeat(all - block).take(p));
        start += p;
    }
    Graph::from_adjacency(adj)
}

/// The Turán graph: complete `(t−1)`-partite on `n` vertices, the first
/// `n mod (t−1)` parts one larger. Empty parts are dropped, so `n ≤ t−1`
/// gives `K_n`.
pub fn turan_graph(n: usize, t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::Argument("Turán graph needs t ≥ 2"));
    }
    let r = t - 1;
    let parts: Vec<usize> = (0..r)
        .map(|i| n / r + usize::from(i < n % r))
        .filter(|&p| p > 0)
        .collect();
    complete_multipartite_parts(&parts)
}

/// An ℓ-tree on `n` vertices.
///
/// Starts from `K_ℓ` on vertices `0..ℓ`. Without a seed, vertex `v` is joined
/// to the `ℓ` vertices before it (a path-like ℓ-tree). With a seed, each new
/// vertex picks a uniformly random ℓ-clique among those created so far.
pub fn ell_tree(ell: usize, n: usize, seed: Option<u64>) -> Result<Graph> {
    if ell == 0 {
        return Err(Error::Argument("ℓ-trees need ℓ ≥ 1"));
    }
    if n < ell {
        return Err(Error::Argument("an ℓ-tree has at least ℓ vertices"));
    }
    let mut edges = Vec::new();
    for j in 1..ell {
        edges.extend((0..j).map(|i| (i, j)));
    }
    match seed {
        None => {
            for v in ell..n {
                edges.extend((v - ell..v).map(|u| (u, v)));
            }
        }
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut cliques: Vec<Vec<usize>> = vec![(0..ell).collect()];
            for v in ell..n {
                let base = cliques[rng.gen_range(0..cliques.len())].clone();
                edges.extend(base.iter().map(|&u| (u, v)));
                for skip in 0..ell {
                    let mut next = base.clone();
                    next[skip] = v;
                    cliques.push(next);
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Which clique of the growing cockade receives the next copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PasteChoice {
    /// The lexicographically least `k`-clique of the original base copy.
    #[default]
    BaseLeast,
    /// The least `k`-clique of the most recent copy that contains one of the
    /// vertices it introduced (falls back to `BaseLeast` when `|H| = k`).
    Chain,
    /// A uniformly random `k`-clique of the whole cockade so far.
    Seeded(u64),
}

/// `copies` copies of `base` glued along `k`-cliques.
#[derive(Clone, Debug)]
pub struct CockadeSpec {
    pub base: Graph,
    pub k: usize,
    pub copies: usize,
    pub paste_choice: PasteChoice,
}

impl CockadeSpec {
    pub fn new(base: Graph, k: usize, copies: usize) -> Self {
        CockadeSpec {
            base,
            k,
            copies,
            paste_choice: PasteChoice::default(),
        }
    }

    pub fn with_choice(mut self, choice: PasteChoice) -> Self {
        self.paste_choice = choice;
        self
    }

    /// `|V(H)| + (copies − 1)(|V(H)| − k)`.
    pub fn vertex_count(&self) -> usize {
        self.base.n() + (self.copies.saturating_sub(1)) * (self.base.n().saturating_sub(self.k))
    }
}

/// Builds the `(H, k)`-cockade described by `spec`.
///
/// Each new copy of `H` is attached through its own lexicographically least
/// `k`-clique; `spec.paste_choice` decides the clique it lands on.
pub fn cockade(spec: &CockadeSpec) -> Result<Graph> {
    if spec.copies == 0 {
        return Err(Error::Argument("a cockade has at least one copy"));
    }
    let h_cliques = list_k_cliques(&spec.base, spec.k);
    let Some(&h_least) = h_cliques.first() else {
        return Err(Error::Precondition("base graph has no k-clique"));
    };
    if spec.vertex_count() > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "cockade",
            requested: spec.vertex_count(),
            limit: MAX_VERTICES,
        });
    }
    let attach: Vec<usize> = h_least.iter().collect();
    let mut rng = match spec.paste_choice {
        PasteChoice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    let mut g = spec.base.clone();
    let mut newest: Option<(Vec<usize>, VertexSet)> = None;
    for _ in 1..spec.copies {
        let target: Vec<usize> = match (spec.paste_choice, &newest) {
            (PasteChoice::Seeded(_), _) => {
                let all = list_k_cliques(&g, spec.k);
                let rng = rng.as_mut().expect("seeded choice has an rng");
                all[rng.gen_range(0..all.len())].iter().collect()
            }
            (PasteChoice::Chain, Some((image, fresh))) => {
                let mut mapped: Vec<Vec<usize>> = h_cliques
                    .iter()
                    .map(|c| {
                        let mut m: Vec<usize> = c.iter().map(|v| image[v]).collect();
                        m.sort_unstable();
                        m
                    })
                    .filter(|m| m.iter().any(|v| fresh.contains(*v)))
                    .collect();
                mapped.sort();
                mapped.into_iter().next().unwrap_or_else(|| attach.clone())
            }
            _ => attach.clone(),
        };
        let before = g.n();
        let (next, image) = paste_mapped(&g, &spec.base, &target, &attach)?;
        let fresh = VertexSet::full(next.n()) - VertexSet::full(before);
        g = next;
        newest = Some((image, fresh));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{clique_vector, max_clique};
    use crate::graph::complete_graph;
    use num_bigint::BigUint;

    #[test]
    fn spec_normalises_and_derives() {
        let s = MultipartiteSpec::new(vec![2, 3, 2, 3, 2]).unwrap();
        assert_eq!(s.parts(), [3, 3, 2, 2, 2]);
        assert_eq!((s.n(), s.c(), s.largest()), (12, 5, 3));
        assert_eq!(s.average_part_size(), Ratio::new(12, 5));
        assert!(s.is_balanced());
        assert_eq!(s.minor_free_order(), 9);
        assert_eq!(s.total_cliques(), BigUint::from(432u32));

        let star = MultipartiteSpec::new(vec![1, 3]).unwrap();
        assert!(!star.is_balanced());
        assert_eq!(star.minor_free_order(), 3);

        assert!(MultipartiteSpec::new(vec![]).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn multipartite_examples() {
        let g = complete_multipartite(&MultipartiteSpec::pairs(5).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 40));
        let k3 = complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(k3, complete_graph(3).unwrap());
        let g = complete_multipartite(&MultipartiteSpec::new(vec![3, 3, 2, 2, 2]).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 57));
        assert_eq!(clique_vector(&g).get(4), BigUint::from(156u32));
    }

    #[test]
    fn turan_examples() {
        let g = turan_graph(10, 3).unwrap();
        assert_eq!(g.edge_count(), 25);
        assert_eq!(g, complete_multipartite_parts(&[5, 5]).unwrap());
        let g = turan_graph(9, 4).unwrap();
        assert_eq!(clique_vector(&g).get(3), BigUint::from(27u32));
        assert_eq!(turan_graph(4, 5).unwrap(), complete_graph(4).unwrap());
        assert_eq!(max_clique(&turan_graph(12, 5).unwrap()), 4);
        // Remainder goes to the first parts.
        assert_eq!(turan_graph(7, 4).unwrap(), complete_multipartite_parts(&[3, 2, 2]).unwrap());
        assert!(turan_graph(3, 1).is_err());
        assert_eq!(turan_graph(0, 3).unwrap().n(), 0);
    }

    #[test]
    fn ell_tree_examples() {
        let g = ell_tree(2, 5, None).unwrap();
        let cv = clique_vector(&g);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(cv.get(3), BigUint::from(3u8));
        assert_eq!(cv.total(), BigUint::from(16u8));

        for seed in [None, Some(3)] {
            let tree = ell_tree(1, 9, seed).unwrap();
            assert_eq!(tree.edge_count(), 8);
            assert_eq!(tree.components().len(), 1);
        }

        assert_eq!(ell_tree(4, 4, None).unwrap(), complete_graph(4).unwrap());
        assert!(ell_tree(3, 2, None).is_err());
        assert!(ell_tree(0, 2, None).is_err());
    }

    #[test]
    fn seeds_change_shape_not_counts() {
        let a = ell_tree(3, 15, Some(1)).unwrap();
        let b = ell_tree(3, 15, Some(2)).unwrap();
        let c = ell_tree(3, 15, None).unwrap();
        assert!(a != b || b != c);
        assert_eq!(clique_vector(&a), clique_vector(&b));
        assert_eq!(clique_vector(&b), clique_vector(&c));
        assert_eq!(ell_tree(3, 15, Some(1)).unwrap(), a);
    }

    #[test]
    fn cockade_examples() {
        let k2x5 = complete_multipartite(&MultipartiteSpec::pairs(5).unwrap()).unwrap();
        let g = cockade(&CockadeSpec::new(k2x5.clone(), 5, 2)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 70));

        let single = cockade(&CockadeSpec::new(k2x5.clone(), 5, 1)).unwrap();
        assert_eq!(single, k2x5);

        let h = complete_multipartite(&MultipartiteSpec::new(vec![1, 2, 2, 2, 2, 2]).unwrap()).unwrap();
        let g = cockade(&CockadeSpec::new(h, 6, 3)).unwrap();
        assert_eq!(g.n(), 21);
    }

    #[test]
    fn cockade_rules_agree_on_counts() {
        let k2x5 = complete_multipartite(&MultipartiteSpec::pairs(5).unwrap()).unwrap();
        let spec = CockadeSpec::new(k2x5, 5, 4);
        let base = cockade(&spec).unwrap();
        for choice in [PasteChoice::Chain, PasteChoice::Seeded(7), PasteChoice::Seeded(8)] {
            let g = cockade(&spec.clone().with_choice(choice)).unwrap();
            assert_eq!(g.n(), 25);
            assert_eq!(clique_vector(&g), clique_vector(&base));
        }
        let chain = cockade(&spec.clone().with_choice(PasteChoice::Chain)).unwrap();
        assert_ne!(chain, base);
    }

    #[test]
    fn cockade_errors() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            cockade(&CockadeSpec::new(p3.clone(), 3, 2)),
            Err(Error::Precondition(_))
        ));
        assert!(cockade(&CockadeSpec::new(p3, 2, 0)).is_err());
        let k20 = complete_graph(20).unwrap();
        assert!(matches!(
            cockade(&CockadeSpec::new(k20, 1, 10)),
            Err(Error::Capacity { .. })
        ));
    }
}
