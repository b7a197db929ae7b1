//! Simple undirected graphs stored as a symmetric bit matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the neighbourhood `N(v)`. The matrix is always symmetric and
/// loop-free; constructors are the only place it is mutated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

fn check_capacity(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what,
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity("graph", n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Loops are rejected, repeated edges
    /// collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Argument("self-loops are not allowed"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood sets, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        check_capacity("graph", adj.len())?;
        let n = adj.len();
        let all = VertexSet::full(n);
        for (v, nb) in adj.iter().enumerate() {
            if !nb.is_subset(&all) {
                let bad = (*nb - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if nb.contains(v) {
                return Err(Error::Argument("self-loops are not allowed"));
            }
            if nb.iter().any(|u| !adj[u].contains(v)) {
                return Err(Error::Argument("adjacency is not symmetric"));
            }
        }
        Ok(Graph { adj })
    }

    /// The graph on `n ≤ 64` vertices whose edges are the set bits of `mask`
    /// under [`Graph::pair_index`] (colex order of pairs, the order graph6
    /// uses).
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        if n * n.saturating_sub(1) / 2 > 64 {
            return Err(Error::Capacity {
                what: "pair mask",
                requested: n,
                limit: 11,
            });
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Position of the pair `{i, j}` (`i < j`) in colex order.
    #[inline]
    pub fn pair_index(i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        j * (j - 1) / 2 + i
    }

    #[inline]
    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.above(u).iter().map(move |v| (u, v)))
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// True if `set` is pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set - VertexSet::singleton(v)).is_subset(&self.adj[v]))
    }

    /// True if `set` induces a connected subgraph (the empty set is not
    /// connected).
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        self.component_within(start, set) == set
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// Induced subgraph on `set`, relabelled `0..|set|` in index order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        if let Some(last) = set.last() {
            self.check_vertex(last)?;
        }
        let verts: Vec<usize> = set.iter().collect();
        let mut relabel = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            relabel[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & set).iter().map(|u| relabel[u]).collect())
            .collect();
        Ok(Graph { adj })
    }

    /// `G(v) = G[N(v)]`, relabelled so that relative index order is kept.
    pub fn neighborhood_subgraph(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.adj[v])
    }

    /// `G − v`, with later vertices shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices() - VertexSet::singleton(v))
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Argument("self-loops are not allowed"));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::Argument("permutation length differs from vertex count"));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::Argument("not a permutation"));
            }
            seen.insert(p);
        }
        let mut g = Graph::empty(self.n())?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut g = Graph::empty(off + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    check_capacity("complete graph", n)?;
    let all = VertexSet::full(n);
    Ok(Graph {
        adj: (0..n).map(|v| all - VertexSet::singleton(v)).collect(),
    })
}

/// Pastes `g2` onto `g1` by identifying `map2[i]` with `map1[i]`.
///
/// Both lists must induce cliques of the same size `r`. The result keeps the
/// vertices of `g1` in place and appends the unidentified vertices of `g2`
/// in their original order, giving `n1 + n2 − r` vertices.
pub fn paste(g1: &Graph, g2: &Graph, map1: &[usize], map2: &[usize]) -> Result<Graph> {
    paste_mapped(g1, g2, map1, map2).map(|(g, _)| g)
}

/// [`paste`], also returning where each vertex of `g2` ended up.
pub fn paste_mapped(
    g1: &Graph,
    g2: &Graph,
    map1: &[usize],
    map2: &[usize],
) -> Result<(Graph, Vec<usize>)> {
    if map1.len() != map2.len() {
        return Err(Error::Argument("identification lists differ in length"));
    }
    let as_set = |g: &Graph, map: &[usize]| -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for &v in map {
            g.check_vertex(v)?;
            if s.contains(v) {
                return Err(Error::Argument("identification list repeats a vertex"));
            }
            s.insert(v);
        }
        Ok(s)
    };
    let s1 = as_set(g1, map1)?;
    let s2 = as_set(g2, map2)?;
    if !g1.is_clique(s1) || !g2.is_clique(s2) {
        return Err(Error::Precondition("pasting sets must be cliques"));
    }
    let r = map1.len();
    let n = g1.n() + g2.n() - r;
    check_capacity("pasted graph", n)?;

    let mut image = vec![usize::MAX; g2.n()];
    for (&a, &b) in map1.iter().zip(map2) {
        image[b] = a;
    }
    let mut next = g1.n();
    for slot in image.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }

    let mut g = Graph::empty(n)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(image[u], image[v]);
    }
    Ok((g, image))
}

/// Degeneracy and a witnessing elimination order.
///
/// Repeatedly removes a vertex of minimum remaining degree (lowest index on
/// ties). Every vertex has at most `d` neighbours later in `order`.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut alive = g.vertices();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| deg[v])
            .expect("alive set is non-empty");
        d = d.max(deg[v]);
        alive.remove(v);
        for u in (g.neighbors(v) & alive).iter() {
            deg[u] -= 1;
        }
        order.push(v);
    }
    (d, order)
}
