//! Exact `K_t` minor testing for small graphs.
//!
//! A `K_t` minor inside a connected component can always be grown until its
//! branch sets cover the whole component (an unused vertex adjacent to a
//! branch set can join it). So the search looks, per component, for a
//! partition of all its vertices into exactly `t` connected, pairwise
//! adjacent blocks. Vertices are placed in breadth-first order, each into an
//! existing block or a fresh one (fresh blocks are numbered in creation
//! order, which removes block-relabelling symmetry).
//!
//! A partial placement is abandoned when
//! - too few vertices remain to open the missing blocks,
//! - a piece of a disconnected block has no unplaced neighbour left,
//! - two non-adjacent blocks have no unplaced neighbour between them, or
//! - blocks are still missing and some block has no unplaced neighbour.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::constructions::MultipartiteSpec;

/// Default exact-search limit on the vertex count.
pub const DEFAULT_SEARCH_CAP: usize = 14;

/// Disjoint connected vertex sets, pairwise joined by an edge: a certificate
/// for a `K_t` minor with `t = branch_sets.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.branch_sets.iter().map(|s| s.iter().collect()).collect()
    }
}

/// Checks that `model` is a valid complete-graph minor model in `g`.
pub fn verify_minor_model(g: &Graph, model: &MinorModel) -> Result<bool> {
    for set in &model.branch_sets {
        if let Some(v) = set.last().filter(|&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut used = VertexSet::EMPTY;
    for set in &model.branch_sets {
        if set.intersects(&used) || !g.is_connected_set(*set) {
            return Ok(false);
        }
        used |= *set;
    }
    let reach: Vec<VertexSet> = model
        .branch_sets
        .iter()
        .map(|s| neighbourhood_of(g, *s))
        .collect();
    for (i, a) in reach.iter().enumerate() {
        for b in &model.branch_sets[i + 1..] {
            if !a.intersects(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn neighbourhood_of(g: &Graph, set: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in set.iter() {
        out |= g.neighbors(v);
    }
    out
}

/// The standard `K_{⌊3c/2⌋}` model in `K_{c×2}` (part `i` is `{2i, 2i+1}`):
/// a singleton `{2i}` from every part, plus the remaining vertices matched
/// across consecutive parts.
pub fn kc2_minor_witness(c: usize) -> Result<MinorModel> {
    if c < 2 {
        return Err(Error::Argument("K_{c×2} witness needs c ≥ 2"));
    }
    let mut branch_sets: Vec<VertexSet> = (0..c).map(|i| VertexSet::singleton(2 * i)).collect();
    for j in 0..c / 2 {
        branch_sets.push([4 * j + 1, 4 * j + 3].into_iter().collect());
    }
    Ok(MinorModel { branch_sets })
}

/// `t` with `K_{n₁,…,n_c}` free of `K_t` minors but containing `K_{t−1}`.
pub fn multipartite_minor_free_order(spec: &MultipartiteSpec) -> usize {
    spec.minor_free_order()
}

/// One unit of independent search work: a component together with a fixed
/// placement of its first few vertices.
#[derive(Clone, Debug)]
pub struct MinorTask {
    component: usize,
    prefix: Vec<u8>,
}

/// Exact minor search with a configurable vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct MinorSearch {
    pub cap: usize,
}

impl Default for MinorSearch {
    fn default() -> Self {
        MinorSearch {
            cap: DEFAULT_SEARCH_CAP,
        }
    }
}

struct Prepared<'g> {
    g: &'g Graph,
    t: usize,
    /// Component vertex lists in breadth-first order.
    orders: Vec<Vec<usize>>,
}

impl MinorSearch {
    pub fn new(cap: usize) -> Self {
        MinorSearch { cap }
    }

    fn check_cap(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::Capacity {
                what: "exact minor search",
                requested: g.n(),
                limit: self.cap,
            });
        }
        Ok(())
    }

    fn prepare<'g>(&self, g: &'g Graph, t: usize) -> Result<Prepared<'g>> {
        self.check_cap(g)?;
        let orders = g
            .components()
            .into_iter()
            .filter(|c| c.len() >= t && could_contract_to(g, *c, t))
            .map(|c| bfs_order(g, c))
            .collect();
        Ok(Prepared { g, t, orders })
    }

    /// Searches for a `K_t` minor; `Some(model)` iff one exists.
    pub fn has_kt_minor(&self, g: &Graph, t: usize) -> Result<Option<MinorModel>> {
        if t == 0 {
            self.check_cap(g)?;
            return Ok(Some(MinorModel { branch_sets: Vec::new() }));
        }
        let p = self.prepare(g, t)?;
        let stop = AtomicBool::new(false);
        for order in &p.orders {
            let mut dfs = Dfs::new(p.g, order, p.t, &stop);
            if dfs.run(0) {
                return Ok(Some(dfs.model()));
            }
        }
        Ok(None)
    }

    /// Splits the search for a `K_t` minor into independent tasks by fixing
    /// the placement of the first `depth` vertices of each component.
    pub fn tasks(&self, g: &Graph, t: usize, depth: usize) -> Result<Vec<MinorTask>> {
        if t == 0 {
            self.check_cap(g)?;
            return Ok(Vec::new());
        }
        let p = self.prepare(g, t)?;
        let mut out = Vec::new();
        for (ci, order) in p.orders.iter().enumerate() {
            let d = depth.min(order.len());
            let mut prefix = Vec::with_capacity(d);
            growth_prefixes(d, t, 0, &mut prefix, &mut |pre| {
                out.push(MinorTask {
                    component: ci,
                    prefix: pre.to_vec(),
                })
            });
        }
        Ok(out)
    }

    /// Runs one task from [`MinorSearch::tasks`]. Returns early (with `None`)
    /// once `stop` is set.
    pub fn run_task(
        &self,
        g: &Graph,
        t: usize,
        task: &MinorTask,
        stop: &AtomicBool,
    ) -> Result<Option<MinorModel>> {
        let p = self.prepare(g, t)?;
        let order = &p.orders[task.component];
        let mut dfs = Dfs::new(g, order, t, stop);
        for (i, &b) in task.prefix.iter().enumerate() {
            dfs.place(i, b as usize);
        }
        if !dfs.feasible(task.prefix.len()) {
            return Ok(None);
        }
        if dfs.run(task.prefix.len()) {
            stop.store(true, Ordering::Relaxed);
            return Ok(Some(dfs.model()));
        }
        Ok(None)
    }

    /// Largest `t` with a `K_t` minor, and a model for it.
    ///
    /// Tries `t` downwards from an edge-count upper bound, so the first
    /// success is the answer.
    pub fn hadwiger_number(&self, g: &Graph) -> Result<(usize, MinorModel)> {
        self.check_cap(g)?;
        for t in (1..=hadwiger_upper_bound(g)).rev() {
            if let Some(model) = self.has_kt_minor(g, t)? {
                return Ok((t, model));
            }
        }
        Ok((0, MinorModel { branch_sets: Vec::new() }))
    }
}

/// `K_t` minor test with the default cap.
pub fn has_kt_minor(g: &Graph, t: usize) -> Result<Option<MinorModel>> {
    MinorSearch::default().has_kt_minor(g, t)
}

/// Hadwiger number with the default cap.
pub fn hadwiger_number(g: &Graph) -> Result<usize> {
    MinorSearch::default().hadwiger_number(g).map(|(t, _)| t)
}

/// Largest `t` that some component has the vertices and edges to contract
/// to `K_t`; an upper bound on the Hadwiger number.
pub fn hadwiger_upper_bound(g: &Graph) -> usize {
    g.components()
        .into_iter()
        .map(|c| contraction_upper_bound(g, c))
        .max()
        .unwrap_or(0)
}

fn edges_within(g: &Graph, set: VertexSet) -> usize {
    set.iter().map(|v| (g.neighbors(v) & set).len()).sum::<usize>() / 2
}

/// Contracting a connected `s`-vertex set down to `t` vertices takes `s − t`
/// contractions, each destroying at least one edge, and `K_t` needs `C(t,2)`.
fn could_contract_to(g: &Graph, comp: VertexSet, t: usize) -> bool {
    let s = comp.len();
    t <= s && t * (t - 1) / 2 + (s - t) <= edges_within(g, comp)
}

fn contraction_upper_bound(g: &Graph, comp: VertexSet) -> usize {
    (1..=comp.len())
        .rev()
        .find(|&t| could_contract_to(g, comp, t))
        .unwrap_or(0)
}

fn bfs_order(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let start = comp.first().expect("components are non-empty");
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for u in (g.neighbors(v) & comp).iter() {
            if !seen.contains(u) {
                seen.insert(u);
                order.push(u);
            }
        }
    }
    order
}

/// Restricted-growth strings of length `len` using at most `t` labels.
fn growth_prefixes(len: usize, t: usize, used: usize, buf: &mut Vec<u8>, emit: &mut impl FnMut(&[u8])) {
    if buf.len() == len {
        emit(buf);
        return;
    }
    for b in 0..(used + 1).min(t) {
        buf.push(b as u8);
        growth_prefixes(len, t, used.max(b + 1), buf, emit);
        buf.pop();
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    order: &'a [usize],
    t: usize,
    blocks: Vec<VertexSet>,
    reach: Vec<VertexSet>,
    open: usize,
    unplaced: VertexSet,
    stop: &'a AtomicBool,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, order: &'a [usize], t: usize, stop: &'a AtomicBool) -> Self {
        Dfs {
            g,
            order,
            t,
            blocks: vec![VertexSet::EMPTY; t],
            reach: vec![VertexSet::EMPTY; t],
            open: 0,
            unplaced: order.iter().copied().collect(),
            stop,
        }
    }

    fn place(&mut self, i: usize, b: usize) {
        let v = self.order[i];
        if b == self.open {
            self.open += 1;
        }
        self.blocks[b].insert(v);
        self.reach[b] |= self.g.neighbors(v);
        self.unplaced.remove(v);
    }

    fn unplace(&mut self, i: usize, b: usize, saved_reach: VertexSet) {
        let v = self.order[i];
        self.blocks[b].remove(v);
        self.reach[b] = saved_reach;
        self.unplaced.insert(v);
        if self.blocks[b].is_empty() {
            self.open -= 1;
        }
    }

    /// Necessary conditions for completing the placement of `order[i..]`.
    fn feasible(&self, i: usize) -> bool {
        let remaining = self.order.len() - i;
        if self.open + remaining < self.t {
            return false;
        }
        let free = self.unplaced;
        for b in 0..self.open {
            let block = self.blocks[b];
            let grows = self.reach[b].intersects(&free);
            if self.open < self.t && !grows {
                return false;
            }
            if !self.g.is_connected_set(block) {
                if !grows {
                    return false;
                }
                // Every piece must still be able to reach the rest.
                let mut rest = block;
                while let Some(v) = rest.first() {
                    let piece = self.g.component_within(v, block);
                    if piece != block && !neighbourhood_of(self.g, piece).intersects(&free) {
                        return false;
                    }
                    rest = rest - piece;
                }
            }
            for c in b + 1..self.open {
                if !self.reach[b].intersects(&self.blocks[c])
                    && !self.reach[b].intersects(&free)
                    && !self.reach[c].intersects(&free)
                {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&self) -> bool {
        self.open == self.t
            && self.blocks.iter().all(|b| self.g.is_connected_set(*b))
            && (0..self.t).all(|a| (a + 1..self.t).all(|b| self.reach[a].intersects(&self.blocks[b])))
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.complete();
        }
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let choices = (self.open + 1).min(self.t);
        // Fresh block first: positives need all t blocks opened.
        for b in (0..choices).rev() {
            let saved = self.reach[b];
            self.place(i, b);
            if self.feasible(i + 1) && self.run(i + 1) {
                return true;
            }
            self.unplace(i, b, saved);
        }
        false
    }

    fn model(&self) -> MinorModel {
        MinorModel {
            branch_sets: self.blocks.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_multipartite, complete_multipartite_parts, ell_tree};
    use crate::graph::complete_graph;

    fn mp(parts: &[usize]) -> Graph {
        complete_multipartite_parts(parts).unwrap()
    }

    #[test]
    fn k2x5_minor_examples() {
        let g = mp(&[2, 2, 2, 2, 2]);
        assert!(has_kt_minor(&g, 8).unwrap().is_none());
        let model = has_kt_minor(&g, 7).unwrap().unwrap();
        assert_eq!(model.order(), 7);
        assert!(verify_minor_model(&g, &model).unwrap());
    }

    #[test]
    fn small_hadwiger_numbers() {
        assert_eq!(hadwiger_number(&mp(&[2, 2, 2])).unwrap(), 4);
        for n in 0..=8 {
            assert_eq!(hadwiger_number(&complete_graph(n).unwrap()).unwrap(), n);
        }
        assert_eq!(hadwiger_number(&Graph::empty(3).unwrap()).unwrap(), 1);
        assert!(has_kt_minor(&complete_graph(5).unwrap(), 5).unwrap().is_some());
        // Planar 2-trees: K_4 minor free.
        assert_eq!(hadwiger_number(&ell_tree(2, 12, Some(4)).unwrap()).unwrap(), 3);
    }

    #[test]
    fn k9_minor_free_witnesses() {
        assert!(has_kt_minor(&mp(&[1, 2, 2, 2, 2, 2]), 9).unwrap().is_none());
        assert!(has_kt_minor(&mp(&[1, 2, 2, 2, 2, 2]), 8).unwrap().is_some());
        assert_eq!(hadwiger_number(&mp(&[3, 3, 2, 2, 2])).unwrap(), 8);
    }

    #[test]
    fn kc2_witnesses_verify() {
        for c in 2..=12 {
            let g = complete_multipartite(&MultipartiteSpec::pairs(c).unwrap()).unwrap();
            let w = kc2_minor_witness(c).unwrap();
            assert_eq!(w.order(), 3 * c / 2);
            assert!(verify_minor_model(&g, &w).unwrap(), "c = {c}");
        }
        assert!(kc2_minor_witness(1).is_err());
    }

    #[test]
    fn verify_rejects_bad_models() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let far = MinorModel {
            branch_sets: vec![VertexSet::singleton(0), VertexSet::singleton(3)],
        };
        assert!(!verify_minor_model(&p4, &far).unwrap());
        let overlapping = MinorModel {
            branch_sets: vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()],
        };
        assert!(!verify_minor_model(&p4, &overlapping).unwrap());
        let disconnected = MinorModel {
            branch_sets: vec![[0, 2].into_iter().collect(), VertexSet::singleton(1)],
        };
        assert!(!verify_minor_model(&p4, &disconnected).unwrap());
        let out_of_range = MinorModel {
            branch_sets: vec![VertexSet::singleton(9)],
        };
        assert!(verify_minor_model(&p4, &out_of_range).is_err());
        let k4 = complete_graph(4).unwrap();
        let singles = MinorModel {
            branch_sets: (0..4).map(VertexSet::singleton).collect(),
        };
        assert!(verify_minor_model(&k4, &singles).unwrap());
    }

    #[test]
    fn refuses_beyond_cap() {
        let g = complete_graph(15).unwrap();
        assert!(matches!(has_kt_minor(&g, 3), Err(Error::Capacity { .. })));
        assert!(MinorSearch::new(20).has_kt_minor(&g, 15).unwrap().is_some());
    }

    #[test]
    fn tasks_cover_the_search() {
        let g = mp(&[2, 2, 2, 2, 2]);
        let search = MinorSearch::default();
        for t in [7, 8] {
            let stop = AtomicBool::new(false);
            let tasks = search.tasks(&g, t, 4).unwrap();
            assert!(tasks.len() > 1);
            let found = tasks
                .iter()
                .find_map(|task| search.run_task(&g, t, task, &stop).unwrap());
            assert_eq!(found.is_some(), t == 7);
        }
    }

    #[test]
    fn disconnected_host() {
        let g = complete_graph(4).unwrap().disjoint_union(&complete_graph(5).unwrap()).unwrap();
        let m = has_kt_minor(&g, 5).unwrap().unwrap();
        assert!(verify_minor_model(&g, &m).unwrap());
        assert!(has_kt_minor(&g, 6).unwrap().is_none());
    }
}
