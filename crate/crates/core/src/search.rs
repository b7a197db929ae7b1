//! Computer searches: the multipartite conjecture scan, the three family
//! scans, the λ-scan over the `K_{c×2}` inequality, and the exhaustive
//! small-`n` oracle with the theorem suite built on it.
//!
//! Every scan is split into independent pieces (part counts, family members,
//! popcount layers, mask stripes) whose partial results merge, so callers can
//! run the pieces on as many threads as they like.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;
use core::time::Duration;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{self, k222_condition};
use crate::cliques::clique_vector;
use crate::constructions::MultipartiteSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::math::pow2;
use crate::minors::MinorSearch;

/// One of the three families the multipartite scan singles out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_{c×2}`.
    Kc2,
    /// `K_{1,c×2}`.
    K1c2,
    /// `K_{1,1,c×2}`.
    K11c2,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Kc2, Family::K1c2, Family::K11c2];

    /// The member with `c` parts of size two.
    pub fn spec(self, c: usize) -> MultipartiteSpec {
        let mut parts = vec![2; c];
        match self {
            Family::Kc2 => {}
            Family::K1c2 => parts.push(1),
            Family::K11c2 => parts.extend([1, 1]),
        }
        MultipartiteSpec::new(parts).expect("family members have positive parts")
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::Kc2 => "K_{c×2}",
            Family::K1c2 => "K_{1,c×2}",
            Family::K11c2 => "K_{1,1,c×2}",
        }
    }

    /// Parses `kc2`, `k1c2` or `k11c2`.
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "kc2" => Some(Family::Kc2),
            "k1c2" => Some(Family::K1c2),
            "k11c2" => Some(Family::K11c2),
            _ => None,
        }
    }

    /// Whether `spec` is a member of this family.
    pub fn contains(self, spec: &MultipartiteSpec) -> bool {
        let parts = spec.parts();
        let ones = parts.iter().filter(|&&p| p == 1).count();
        let twos = parts.iter().filter(|&&p| p == 2).count();
        let want = match self {
            Family::Kc2 => 0,
            Family::K1c2 => 1,
            Family::K11c2 => 2,
        };
        ones == want && twos >= 1 && ones + twos == parts.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    Multipartite,
    Family(Family),
    FamilyUnion,
    UnbalancedSample,
}

impl ScanKind {
    pub fn tag(self) -> &'static str {
        match self {
            ScanKind::Multipartite => "multipartite",
            ScanKind::Family(Family::Kc2) => "family:kc2",
            ScanKind::Family(Family::K1c2) => "family:k1c2",
            ScanKind::Family(Family::K11c2) => "family:k11c2",
            ScanKind::FamilyUnion => "family:union",
            ScanKind::UnbalancedSample => "unbalanced-sample",
        }
    }
}

/// A complete multipartite graph with more cliques than `2^{t−2}(n−t+3)`,
/// where `t` is its own minor-free order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub t: usize,
    pub spec: MultipartiteSpec,
    pub n: usize,
    pub cliques: BigUint,
    pub bound: BigUint,
    /// The graph is `K_s`-minor-free for every `s ≥ t`, and the bound for `s`
    /// is non-decreasing up to `s = n + 2`; it is still beaten for every
    /// `s` in `t..=violated_up_to`.
    pub violated_up_to: usize,
}

impl Violation {
    fn new(spec: &MultipartiteSpec, t: usize, cliques: BigUint) -> Self {
        let n = spec.n();
        let bound = bound_total(n, t);
        let mut hi = t;
        while hi < n + 2 && cliques > bound_total(n, hi + 1) {
            hi += 1;
        }
        Violation {
            t,
            spec: spec.clone(),
            n,
            cliques,
            bound,
            violated_up_to: hi,
        }
    }

    /// Recomputes both sides from the spec alone.
    pub fn recheck(&self) -> bool {
        let t = self.spec.minor_free_order();
        let cliques = self.spec.total_cliques();
        t == self.t
            && cliques == self.cliques
            && bound_total(self.spec.n(), t) == self.bound
            && cliques > self.bound
    }
}

fn bound_total(n: usize, t: usize) -> BigUint {
    pow2(t as u64 - 2) * (n + 3 - t)
}

/// Outcome of a multipartite scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub kind: ScanKind,
    /// Candidates have minor-free order `3 ≤ t ≤ t_max`.
    pub t_max: usize,
    pub candidates_examined: u64,
    /// Sorted by `(t, n, parts)`.
    pub violations: Vec<Violation>,
    /// Largest minor-free order among candidates that satisfy the bound.
    pub max_clean_t: Option<usize>,
    pub runtime: Option<Duration>,
}

impl SearchReport {
    pub fn new(kind: ScanKind, t_max: usize) -> Self {
        SearchReport {
            kind,
            t_max,
            candidates_examined: 0,
            violations: Vec::new(),
            max_clean_t: None,
            runtime: None,
        }
    }

    /// Least `t` among the violations.
    pub fn minimal_violating_t(&self) -> Option<usize> {
        self.violations.iter().map(|v| v.t).min()
    }

    /// Least `t0` such that every candidate of order in `t0..=t_max`
    /// violates, provided some candidate does.
    pub fn persistent_violation_t(&self) -> Option<usize> {
        self.violations
            .iter()
            .map(|v| v.t)
            .filter(|&t| self.max_clean_t.map_or(true, |clean| t > clean))
            .min()
    }

    /// Least `t0` such that for every `s` in `t0..=t_max` some violating
    /// graph is `K_s`-minor-free and beats the bound for `s`.
    pub fn covered_from_t(&self) -> Option<usize> {
        let mut covered = vec![false; self.t_max + 1];
        for v in &self.violations {
            for s in v.t..=v.violated_up_to.min(self.t_max) {
                covered[s] = true;
            }
        }
        if !covered[self.t_max] {
            return None;
        }
        let mut t0 = self.t_max;
        while t0 > 3 && covered[t0 - 1] {
            t0 -= 1;
        }
        Some(t0)
    }

    fn record(&mut self, spec_parts: &[usize], t: usize, cliques: Option<BigUint>) {
        self.candidates_examined += 1;
        match cliques {
            Some(c) => {
                let spec = MultipartiteSpec::new(spec_parts.to_vec()).expect("candidate parts are positive");
                self.violations.push(Violation::new(&spec, t, c));
            }
            None => self.max_clean_t = self.max_clean_t.max(Some(t)),
        }
    }

    /// Combines partial results of the same scan.
    pub fn merge(&mut self, other: SearchReport) {
        self.candidates_examined += other.candidates_examined;
        self.violations.extend(other.violations);
        self.violations
            .sort_by(|a, b| (a.t, a.n, a.spec.parts()).cmp(&(b.t, b.n, b.spec.parts())));
        self.max_clean_t = self.max_clean_t.max(other.max_clean_t);
        self.runtime = match (self.runtime, other.runtime) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
    }
}

/// `Some(Π(p+1))` if it exceeds `2^{t−2}(n−t+3)`, else `None`. Machine words
/// first, big integers only when a word would overflow.
fn violation_count(parts: &[usize], n: usize, t: usize) -> Option<BigUint> {
    let small = parts
        .iter()
        .try_fold(1u128, |acc, &p| acc.checked_mul(p as u128 + 1))
        .zip(1u128.checked_shl(t as u32 - 2).and_then(|b| b.checked_mul((n + 3 - t) as u128)));
    match small {
        Some((prod, bound)) => (prod > bound).then(|| BigUint::from(prod)),
        None => {
            let prod: BigUint = parts.iter().map(|&p| BigUint::from(p + 1)).product();
            (prod > bound_total(n, t)).then_some(prod)
        }
    }
}

/// One unit of the multipartite scan: all candidates with `c` parts and
/// `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultipartiteTask {
    pub c: usize,
    pub n: usize,
}

/// The scan over balanced complete multipartite graphs with average part
/// size below three.
///
/// A balanced spec has `t = ⌊(n+c)/2⌋ + 1`, so `t ≤ t_max` bounds both `c`
/// and `n`; `n < 3c` is the average condition and `n₁ ≤ n + 1 − ⌊(n+c)/2⌋`
/// the balance condition.
#[derive(Clone, Copy, Debug)]
pub struct MultipartiteScan {
    pub t_max: usize,
}

impl MultipartiteScan {
    pub fn new(t_max: usize) -> Result<Self> {
        if t_max < 3 {
            return Err(Error::Argument("t_max must be at least 3"));
        }
        Ok(MultipartiteScan { t_max })
    }

    /// All non-empty tasks, smallest `c` first.
    pub fn tasks(&self) -> Vec<MultipartiteTask> {
        let mut out = Vec::new();
        for c in 2.. {
            if c + 1 > self.t_max {
                break;
            }
            for n in c..3 * c {
                if (n + c) / 2 + 1 > self.t_max {
                    break;
                }
                out.push(MultipartiteTask { c, n });
            }
        }
        out
    }

    pub fn run_task(&self, task: MultipartiteTask) -> SearchReport {
        let MultipartiteTask { c, n } = task;
        let h = (n + c) / 2;
        let t = h + 1;
        let mut report = SearchReport::new(ScanKind::Multipartite, self.t_max);
        let mut parts = Vec::with_capacity(c);
        partitions(n, c, n + 1 - h, &mut parts, &mut |p| {
            report.record(p, t, violation_count(p, n, t));
        });
        report
    }
}

/// Calls `f` on every partition of `n` into exactly `c` positive parts, each
/// at most `max_part`, listed non-increasing.
fn partitions(n: usize, c: usize, max_part: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if c == 0 {
        if n == 0 {
            f(buf);
        }
        return;
    }
    let hi = max_part.min(n + 1 - c);
    let lo = n.div_ceil(c);
    for p in (lo..=hi).rev() {
        buf.push(p);
        partitions(n - p, c - 1, p, buf, f);
        buf.pop();
    }
}

/// Checks every balanced spec with average part size below three and
/// minor-free order `t ≤ t_max` against `2^{t−2}(n−t+3)`.
pub fn multipartite_conjecture_scan(t_max: usize) -> Result<SearchReport> {
    let scan = MultipartiteScan::new(t_max)?;
    let mut report = SearchReport::new(ScanKind::Multipartite, t_max);
    for task in scan.tasks() {
        report.merge(scan.run_task(task));
    }
    Ok(report)
}

/// Checks each family member of order `3 ≤ t ≤ t_max`.
pub fn family_threshold_scan(family: Family, t_max: usize) -> Result<SearchReport> {
    if t_max < 3 {
        return Err(Error::Argument("t_max must be at least 3"));
    }
    let mut report = SearchReport::new(ScanKind::Family(family), t_max);
    for c in 1.. {
        let spec = family.spec(c);
        let t = spec.minor_free_order();
        if t > t_max {
            break;
        }
        if t < 3 {
            continue;
        }
        report.record(spec.parts(), t, violation_count(spec.parts(), spec.n(), t));
    }
    Ok(report)
}

/// The three family scans merged.
pub fn family_union_scan(t_max: usize) -> Result<SearchReport> {
    let mut report = SearchReport::new(ScanKind::FamilyUnion, t_max);
    for family in Family::ALL {
        report.merge(family_threshold_scan(family, t_max)?);
    }
    Ok(report)
}

/// Draws `count` random unbalanced specs with `n ≤ n_max` and minor-free
/// order at least 3, and checks each against the bound.
pub fn unbalanced_sample_scan(count: usize, n_max: usize, seed: u64) -> Result<SearchReport> {
    if n_max < 3 {
        return Err(Error::Argument("n_max must be at least 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SearchReport::new(ScanKind::UnbalancedSample, n_max + 2);
    while (report.candidates_examined as usize) < count {
        let n = rng.gen_range(3..=n_max);
        // A random composition of n: each gap between consecutive units is
        // a cut with probability q.
        let q: f64 = rng.gen();
        let mut parts = vec![1usize];
        for _ in 1..n {
            if rng.gen_bool(q) {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        let spec = MultipartiteSpec::new(parts)?;
        let t = spec.minor_free_order();
        if spec.is_balanced() || t < 3 {
            continue;
        }
        report.record(spec.parts(), t, violation_count(spec.parts(), n, t));
    }
    Ok(report)
}

/// The λ-scan row for one even `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRow {
    pub c: usize,
    /// Least `k` such that the inequality holds for every `k'` in `k..=c`.
    pub k_min: usize,
    /// Every `k` in `1..=c` where the inequality fails.
    pub failing: Vec<usize>,
    /// Every `k` in `1..=c` where both sides are equal.
    pub equal: Vec<usize>,
}

impl LambdaRow {
    /// `k_min / c`.
    pub fn ratio(&self) -> Ratio<usize> {
        Ratio::new(self.k_min, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    pub c_max: usize,
    pub rows: Vec<LambdaRow>,
}

/// Evaluates the `K_{c×2}` inequality for every even `c` in `4..=c_max` and
/// every `k` in `1..=c`.
pub fn lambda_scan(c_max: usize) -> Result<LambdaReport> {
    if c_max < 4 || c_max % 2 != 0 {
        return Err(Error::Argument("c_max must be even and at least 4"));
    }
    let rows = (4..=c_max).step_by(2).map(lambda_row).collect::<Result<_>>()?;
    Ok(LambdaReport { c_max, rows })
}

fn lambda_row(c: usize) -> Result<LambdaRow> {
    let mut failing = Vec::new();
    let mut equal = Vec::new();
    for k in 1..=c {
        let cond = k222_condition(c, k)?;
        if !cond.holds {
            failing.push(k);
        } else if cond.lhs == cond.rhs {
            equal.push(k);
        }
    }
    let k_min = failing.last().map_or(1, |&k| k + 1);
    Ok(LambdaRow { c, k_min, failing, equal })
}

/// Largest `n` the exhaustive oracle accepts, without and with the slow flag.
pub const EXHAUSTIVE_DEFAULT_MAX_N: usize = 6;
pub const EXHAUSTIVE_SLOW_MAX_N: usize = 7;

/// Maximum of one quantity over the `K_t`-minor-free graphs, with the least
/// edge mask attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: BigUint,
    pub mask: u64,
}

impl Extremum {
    fn offer(&mut self, value: &BigUint, mask: u64) {
        if *value > self.value || (*value == self.value && mask < self.mask) {
            self.value = value.clone();
            self.mask = mask;
        }
    }
}

/// Per-`k` and total maxima over all labeled `K_t`-minor-free graphs on `n`
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveTable {
    pub n: usize,
    pub t: usize,
    /// Indexed by `k = 0..t` (no `K_t`-minor-free graph has a `t`-clique).
    pub per_k: Vec<Extremum>,
    pub total: Extremum,
    /// Edge-maximal graphs whose clique vectors were computed.
    pub maximal_graphs: u64,
}

impl ExhaustiveTable {
    fn empty(n: usize, t: usize) -> Self {
        let zero = Extremum {
            value: BigUint::zero(),
            mask: u64::MAX,
        };
        ExhaustiveTable {
            n,
            t,
            per_k: vec![zero.clone(); t],
            total: zero,
            maximal_graphs: 0,
        }
    }

    pub fn merge(&mut self, other: &ExhaustiveTable) {
        for (a, b) in self.per_k.iter_mut().zip(&other.per_k) {
            a.offer(&b.value, b.mask);
        }
        self.total.offer(&other.total.value, other.total.mask);
        self.maximal_graphs += other.maximal_graphs;
    }

    /// graph6 text of the graph with edge mask `mask` on `n` vertices.
    pub fn graph6(&self, mask: u64) -> String {
        graph6::encode(&Graph::from_pair_mask(self.n, mask).expect("n is within the oracle limit"))
    }
}

/// The exhaustive oracle: every labeled graph on `n` vertices is classified
/// by `K_t`-minor containment, one popcount layer at a time, then the clique
/// vectors of the edge-maximal minor-free graphs are maximized.
///
/// Containing a `K_t` minor is inherited by supergraphs, so a graph is
/// searched only when none of its one-edge-smaller subgraphs already has a
/// minor.
pub struct ExhaustiveRun {
    n: usize,
    t: usize,
    pairs: usize,
    has_minor: Vec<u64>,
    search: MinorSearch,
}

impl ExhaustiveRun {
    pub fn new(n: usize, t: usize, allow_slow: bool) -> Result<Self> {
        let limit = if allow_slow {
            EXHAUSTIVE_SLOW_MAX_N
        } else {
            EXHAUSTIVE_DEFAULT_MAX_N
        };
        if n > limit {
            return Err(Error::Capacity {
                what: "exhaustive graph enumeration",
                requested: n,
                limit,
            });
        }
        if t == 0 {
            return Err(Error::Argument("need t ≥ 1"));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        let words = (1usize << pairs).div_ceil(64);
        Ok(ExhaustiveRun {
            n,
            t,
            pairs,
            has_minor: vec![0; words],
            search: MinorSearch::default(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of vertex pairs, hence of popcount layers minus one.
    pub fn pairs(&self) -> usize {
        self.pairs
    }

    /// Number of labeled graphs, `2^{C(n,2)}`.
    pub fn graph_count(&self) -> u64 {
        1u64 << self.pairs
    }

    fn flag(&self, mask: u64) -> bool {
        self.has_minor[(mask / 64) as usize] >> (mask % 64) & 1 == 1
    }

    /// All edge masks with `edges` edges, ascending.
    pub fn layer(&self, edges: usize) -> Vec<u64> {
        let mut out = Vec::new();
        if edges > self.pairs {
            return out;
        }
        if edges == 0 {
            out.push(0);
            return out;
        }
        let end = 1u64 << self.pairs;
        let mut m = (1u64 << edges) - 1;
        while m < end {
            out.push(m);
            // Next mask with the same popcount.
            let low = m & m.wrapping_neg();
            let ripple = m + low;
            m = ripple | (((m ^ ripple) >> 2) / low);
        }
        out
    }

    /// Minor containment for masks of one layer; the previous layer must
    /// already be committed.
    pub fn classify(&self, masks: &[u64]) -> Result<Vec<bool>> {
        masks
            .iter()
            .map(|&mask| {
                let mut bits = mask;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    if self.flag(mask ^ b) {
                        return Ok(true);
                    }
                    bits ^= b;
                }
                let g = Graph::from_pair_mask(self.n, mask)?;
                Ok(self.search.has_kt_minor(&g, self.t)?.is_some())
            })
            .collect()
    }

    pub fn commit(&mut self, masks: &[u64], has_minor: &[bool]) {
        for (&mask, &flag) in masks.iter().zip(has_minor) {
            if flag {
                self.has_minor[(mask / 64) as usize] |= 1 << (mask % 64);
            }
        }
    }

    /// Classifies every graph, layer by layer, on the calling thread.
    pub fn classify_all(&mut self) -> Result<()> {
        for edges in 0..=self.pairs {
            let masks = self.layer(edges);
            let flags = self.classify(&masks)?;
            self.commit(&masks, &flags);
        }
        Ok(())
    }

    fn is_maximal_free(&self, mask: u64) -> bool {
        if self.flag(mask) {
            return false;
        }
        (0..self.pairs).all(|b| mask >> b & 1 == 1 || self.flag(mask | 1 << b))
    }

    /// Maxima over the masks in `range`; needs every layer committed.
    pub fn maxima(&self, range: Range<u64>) -> ExhaustiveTable {
        let mut table = ExhaustiveTable::empty(self.n, self.t);
        for mask in range {
            if !self.is_maximal_free(mask) {
                continue;
            }
            table.maximal_graphs += 1;
            let g = Graph::from_pair_mask(self.n, mask).expect("checked at construction");
            let cv = clique_vector(&g);
            for (k, slot) in table.per_k.iter_mut().enumerate() {
                slot.offer(&cv.get(k), mask);
            }
            table.total.offer(&cv.total(), mask);
        }
        table
    }
}

/// Runs the exhaustive oracle on the calling thread.
pub fn exhaustive_extremal(n: usize, t: usize, allow_slow: bool) -> Result<ExhaustiveTable> {
    let mut run = ExhaustiveRun::new(n, t, allow_slow)?;
    run.classify_all()?;
    Ok(run.maxima(0..run.graph_count()))
}

/// What [`verify_theorem_suite`] checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Values of `t`, each in `3..=9`.
    pub ts: Vec<usize>,
    pub n_max: usize,
    /// Compare against the exhaustive oracle for `n ≤ oracle_n_max`.
    pub oracle: bool,
    pub oracle_n_max: usize,
    pub allow_slow: bool,
    /// Build each witness and count its cliques.
    pub attainment: bool,
    /// Also confirm by minor search that witnesses with at most this many
    /// vertices are `K_t`-minor-free.
    pub minor_check_n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ts: vec![3, 4, 5],
            n_max: 6,
            oracle: true,
            oracle_n_max: EXHAUSTIVE_DEFAULT_MAX_N,
            allow_slow: false,
            attainment: true,
            minor_check_n_max: 0,
        }
    }
}

/// A value that disagreed with its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    pub t: usize,
    pub n: usize,
    /// `None` for the total clique count.
    pub k: Option<usize>,
    pub source: &'static str,
    pub expected: BigUint,
    pub got: BigUint,
    /// graph6 of the graph the value came from.
    pub graph6: Option<String>,
}

impl VerifyFailure {
    /// A command line reproducing the closed-form side.
    pub fn reproducer(&self) -> String {
        match self.k {
            Some(k) => format!("bound --t {} --k {} --n {}", self.t, k, self.n),
            None => format!("bound --t {} --total --n {}", self.t, self.n),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: u64,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, failure: VerifyFailure) {
        self.checks += 1;
        if failure.expected != failure.got {
            self.failures.push(failure);
        }
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Cross-checks the closed forms against the exhaustive oracle (small `n`)
/// and against witness constructions (every `n ≤ n_max`).
pub fn verify_theorem_suite(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for &t in &config.ts {
        if config.oracle {
            for n in 1..=config.n_max.min(config.oracle_n_max) {
                let table = exhaustive_extremal(n, t, config.allow_slow)?;
                report.merge(verify_against_oracle(&table)?);
            }
        }
        if config.attainment {
            for n in 1..=config.n_max {
                report.merge(verify_attainment(n, t, config.minor_check_n_max)?);
            }
        }
    }
    Ok(report)
}

/// Compares one oracle table with the closed forms, including the
/// `K_{t−1}` row against `n − t + 2`.
pub fn verify_against_oracle(table: &ExhaustiveTable) -> Result<VerifyReport> {
    let (n, t) = (table.n, table.t);
    let mut report = VerifyReport::default();
    for k in 1..t {
        let row = &table.per_k[k];
        report.check(VerifyFailure {
            t,
            n,
            k: Some(k),
            source: "oracle",
            expected: bounds::extremal_kcliques(n, t, k)?.value,
            got: row.value.clone(),
            graph6: Some(table.graph6(row.mask)),
        });
    }
    if n + 1 >= t {
        let row = &table.per_k[t - 1];
        report.check(VerifyFailure {
            t,
            n,
            k: Some(t - 1),
            source: "oracle top clique",
            expected: BigUint::from(bounds::top_clique_bound(n, t)?),
            got: row.value.clone(),
            graph6: Some(table.graph6(row.mask)),
        });
    }
    report.check(VerifyFailure {
        t,
        n,
        k: None,
        source: "oracle",
        expected: bounds::extremal_total(n, t)?.value,
        got: table.total.value.clone(),
        graph6: Some(table.graph6(table.total.mask)),
    });
    Ok(report)
}

/// Builds each record's witness and checks it attains the record.
pub fn verify_attainment(n: usize, t: usize, minor_check_n_max: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut records = Vec::with_capacity(t);
    for k in 1..t {
        records.push(bounds::extremal_kcliques(n, t, k)?);
    }
    records.push(bounds::extremal_total(n, t)?);
    // Witnesses repeat across k; count each family once.
    let mut cache: Vec<(bounds::WitnessFamily, Graph, crate::cliques::CliqueVector)> = Vec::new();
    for rec in records {
        let idx = match cache.iter().position(|(f, _, _)| *f == rec.witness_family) {
            Some(i) => i,
            None => {
                let g = rec.witness()?;
                if g.n() != n {
                    return Err(Error::Precondition("witness has the wrong order"));
                }
                if g.n() <= minor_check_n_max {
                    report.checks += 1;
                    if self_minor(&g, t)? {
                        report.failures.push(VerifyFailure {
                            t,
                            n,
                            k: rec.k,
                            source: "witness has a K_t minor",
                            expected: BigUint::zero(),
                            got: BigUint::one(),
                            graph6: Some(graph6::encode(&g)),
                        });
                    }
                }
                let cv = clique_vector(&g);
                cache.push((rec.witness_family, g, cv));
                cache.len() - 1
            }
        };
        let (_, g, cv) = &cache[idx];
        let got = match rec.k {
            Some(k) => cv.get(k),
            None => cv.total(),
        };
        report.check(VerifyFailure {
            t,
            n,
            k: rec.k,
            source: rec.witness_family.tag(),
            expected: rec.value,
            got,
            graph6: Some(graph6::encode(g)),
        });
    }
    Ok(report)
}

fn self_minor(g: &Graph, t: usize) -> Result<bool> {
    Ok(MinorSearch::new(g.n()).has_kt_minor(g, t)?.is_some())
}
