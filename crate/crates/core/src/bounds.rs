//! Closed-form clique counts and extremal values.
//!
//! Everything is exact. Formulas with fractions are evaluated as rationals and
//! must come out integral; a fractional result panics because it can only
//! mean a formula here is wrong.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::constructions::{cockade, complete_multipartite, ell_tree, CockadeSpec, MultipartiteSpec};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};
use crate::math::{binomial, elementary_symmetric, expect_natural, pow2, rational, to_natural};

/// Graph family attaining an extremal value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessFamily {
    /// A `(t−2)`-tree.
    EllTree,
    /// A `(K_{2,2,2,2,2}, 5)`-cockade.
    CockadeK2x5,
    /// A `(K_{1,2,2,2,2,2}, 6)`-cockade.
    CockadeK1And2x5,
    /// `K_{2,2,2,3,3}`.
    K22233,
    /// `K_n` (only when `n ≤ t − 1`).
    CompleteGraph,
}

impl WitnessFamily {
    pub fn tag(self) -> &'static str {
        match self {
            WitnessFamily::EllTree => "ell-tree",
            WitnessFamily::CockadeK2x5 => "cockade(K_{2,2,2,2,2},5)",
            WitnessFamily::CockadeK1And2x5 => "cockade(K_{1,2,2,2,2,2},6)",
            WitnessFamily::K22233 => "K_{2,2,2,3,3}",
            WitnessFamily::CompleteGraph => "complete-graph",
        }
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The maximum number of `k`-cliques (or of all cliques when `k` is `None`)
/// in an `n`-vertex `K_t`-minor-free graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub t: usize,
    pub k: Option<usize>,
    pub n: usize,
    pub value: BigUint,
    pub exceptional: bool,
    pub witness_family: WitnessFamily,
}

impl ExtremalRecord {
    /// A graph in the witness family attaining `value`.
    pub fn witness(&self) -> Result<Graph> {
        let n = self.n;
        match self.witness_family {
            WitnessFamily::CompleteGraph => complete_graph(n),
            WitnessFamily::EllTree => ell_tree(self.t - 2, n, None),
            WitnessFamily::CockadeK2x5 => {
                let base = complete_multipartite(&MultipartiteSpec::pairs(5)?)?;
                cockade(&CockadeSpec::new(base, 5, (n - 10) / 5 + 1))
            }
            WitnessFamily::CockadeK1And2x5 => {
                let base = complete_multipartite(&MultipartiteSpec::new(alloc::vec![1, 2, 2, 2, 2, 2])?)?;
                cockade(&CockadeSpec::new(base, 6, (n - 11) / 5 + 1))
            }
            WitnessFamily::K22233 => complete_multipartite(&MultipartiteSpec::new(alloc::vec![3, 3, 2, 2, 2])?),
        }
    }
}

fn natural(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `cliques(G, k)` for every ℓ-tree on `n ≥ ℓ` vertices:
/// `C(ℓ, k−1)·n − (k−1)·C(ℓ+1, k)`, and `1` for `k = 0`.
pub fn ell_tree_cliques(ell: usize, n: usize, k: usize) -> Result<BigUint> {
    if ell == 0 || n < ell {
        return Err(Error::Argument("ℓ-tree counts need n ≥ ℓ ≥ 1"));
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    let (l, k64) = (ell as u64, k as u64);
    let v = BigInt::from(binomial(l, k64 - 1)) * natural(n)
        - BigInt::from(binomial(l + 1, k64)) * natural(k - 1);
    Ok(to_natural(&v, "ℓ-tree clique count"))
}

/// `cliques(G)` for every ℓ-tree on `n ≥ ℓ` vertices: `2^ℓ (n − ℓ + 1)`.
pub fn ell_tree_total(ell: usize, n: usize) -> Result<BigUint> {
    if ell == 0 || n < ell {
        return Err(Error::Argument("ℓ-tree counts need n ≥ ℓ ≥ 1"));
    }
    Ok(pow2(ell as u64) * (n - ell + 1))
}

/// `C(t−2, k−1)·n − (k−1)·C(t−1, k)`: the `k`-clique count of a
/// `(t−2)`-tree, valid for `n ≥ t−2` and `t > k ≥ 1`.
pub fn lower_bound_kcliques(n: usize, t: usize, k: usize) -> Result<BigUint> {
    if !(t > k && k >= 1) {
        return Err(Error::Argument("need t > k ≥ 1"));
    }
    if n + 2 < t {
        return Err(Error::Argument("need n ≥ t − 2"));
    }
    let (t64, k64) = (t as u64, k as u64);
    let v = BigInt::from(binomial(t64 - 2, k64 - 1)) * natural(n)
        - BigInt::from(binomial(t64 - 1, k64)) * natural(k - 1);
    Ok(to_natural(&v, "k-clique lower bound"))
}

/// `2^{t−2} (n − t + 3)` for `n ≥ t − 2`.
pub fn lower_bound_total(n: usize, t: usize) -> Result<BigUint> {
    if t < 2 {
        return Err(Error::Argument("need t ≥ 2"));
    }
    if n + 2 < t {
        return Err(Error::Argument("need n ≥ t − 2"));
    }
    Ok(pow2(t as u64 - 2) * (n + 3 - t))
}

/// The family for which `(t, k, n)` exceeds the `(t−2)`-tree count by one,
/// if any: `(8,2)` at cockade orders `n ≡ 0 (mod 5)`, `(9,2)` at cockade
/// orders `n ≡ 1 (mod 5)` and at `n = 12`, and `(9,3)` at `n = 11`.
pub fn exceptional_family(t: usize, k: usize, n: usize) -> Option<WitnessFamily> {
    match (t, k) {
        (8, 2) if n >= 10 && n % 5 == 0 => Some(WitnessFamily::CockadeK2x5),
        (9, 2) if n >= 11 && n % 5 == 1 => Some(WitnessFamily::CockadeK1And2x5),
        (9, 2) if n == 12 => Some(WitnessFamily::K22233),
        (9, 3) if n == 11 => Some(WitnessFamily::CockadeK1And2x5),
        _ => None,
    }
}

fn check_exact_range(t: usize, n: usize) -> Result<()> {
    if !(3..=9).contains(&t) {
        return Err(Error::Unsupported("exact extremal values are known only for 3 ≤ t ≤ 9"));
    }
    if n == 0 {
        return Err(Error::Argument("need n ≥ 1"));
    }
    Ok(())
}

/// `cliques(n, t, k)` for `3 ≤ t ≤ 9`, `1 ≤ k ≤ t−1`.
pub fn extremal_kcliques(n: usize, t: usize, k: usize) -> Result<ExtremalRecord> {
    check_exact_range(t, n)?;
    if !(1..t).contains(&k) {
        return Err(Error::Argument("need 1 ≤ k ≤ t − 1"));
    }
    let record = |value, exceptional, witness_family| ExtremalRecord {
        t,
        k: Some(k),
        n,
        value,
        exceptional,
        witness_family,
    };
    if n < t {
        return Ok(record(binomial(n as u64, k as u64), false, WitnessFamily::CompleteGraph));
    }
    let base = lower_bound_kcliques(n, t, k)?;
    Ok(match exceptional_family(t, k, n) {
        Some(family) => record(base + 1u8, true, family),
        None => record(base, false, WitnessFamily::EllTree),
    })
}

/// `cliques(n, t)` for `3 ≤ t ≤ 9`.
pub fn extremal_total(n: usize, t: usize) -> Result<ExtremalRecord> {
    check_exact_range(t, n)?;
    let (value, witness_family) = if n < t {
        (pow2(n as u64), WitnessFamily::CompleteGraph)
    } else {
        (lower_bound_total(n, t)?, WitnessFamily::EllTree)
    };
    Ok(ExtremalRecord {
        t,
        k: None,
        n,
        value,
        exceptional: false,
        witness_family,
    })
}

/// `C(t−1, k) (n/(t−1))^k`: the most `k`-cliques in an `n`-vertex graph
/// without a `K_t` subgraph (`t > k ≥ 0`, `n ≥ k`).
pub fn zykov_kcliques(n: usize, t: usize, k: usize) -> Result<BigRational> {
    if t < 2 || k >= t {
        return Err(Error::Argument("need t > k ≥ 0 and t ≥ 2"));
    }
    if n < k {
        return Err(Error::Argument("need n ≥ k"));
    }
    let share = BigRational::new(natural(n), natural(t - 1));
    Ok(rational(BigInt::from(binomial(t as u64 - 1, k as u64))) * num_traits::pow(share, k))
}

/// `(n/(t−1) + 1)^{t−1}`: the most cliques in an `n`-vertex graph without a
/// `K_t` subgraph.
pub fn zykov_total(n: usize, t: usize) -> Result<BigRational> {
    if t < 2 {
        return Err(Error::Argument("need t ≥ 2"));
    }
    let base = BigRational::new(natural(n), natural(t - 1)) + BigRational::one();
    Ok(num_traits::pow(base, t - 1))
}

/// `k`-cliques after pasting graphs with `c1` and `c2` of them on an
/// `r`-clique (`r ≥ k`): `c1 + c2 − C(r, k)`.
pub fn paste_count_k(c1: &BigUint, c2: &BigUint, r: usize, k: usize) -> BigInt {
    BigInt::from(c1 + c2) - BigInt::from(binomial(r as u64, k as u64))
}

/// All cliques after pasting on an `r`-clique: `c1 + c2 − 2^r`.
pub fn paste_count_total(c1: &BigUint, c2: &BigUint, r: usize) -> BigInt {
    BigInt::from(c1 + c2) - BigInt::from(pow2(r as u64))
}

/// `k`-cliques in any cockade made of `copies` copies of a base graph with
/// `base_count` of them, pasted on `r`-cliques.
pub fn iterated_paste_k(base_count: &BigUint, r: usize, k: usize, copies: usize) -> BigUint {
    assert!(copies >= 1);
    let v = BigInt::from(base_count * copies) - BigInt::from(binomial(r as u64, k as u64) * (copies - 1));
    to_natural(&v, "iterated paste count")
}

/// Total cliques in any cockade made of `copies` copies of a base graph with
/// `base_total` cliques, pasted on `r`-cliques.
pub fn iterated_paste_total(base_total: &BigUint, r: usize, copies: usize) -> BigUint {
    assert!(copies >= 1);
    let v = BigInt::from(base_total * copies) - BigInt::from(pow2(r as u64) * (copies - 1));
    to_natural(&v, "iterated paste total")
}

fn check_cockade_order(c: usize, n: usize) -> Result<()> {
    if c == 0 || n % c != 0 || n < 2 * c {
        return Err(Error::Argument("(K_{c×2}, c)-cockades have n = c·(j+1) vertices, j ≥ 1"));
    }
    Ok(())
}

/// `k`-cliques of an `n`-vertex `(K_{c×2}, c)`-cockade:
/// `(1/c)·C(c,k)·(2^k − 1)·(n − c) + C(c,k)`.
pub fn cockade_cliques(c: usize, n: usize, k: usize) -> Result<BigUint> {
    check_cockade_order(c, n)?;
    let choose = rational(BigInt::from(binomial(c as u64, k as u64)));
    let slope = BigRational::new(BigInt::from(pow2(k as u64)) - 1, natural(c));
    let v = &choose * slope * rational(natural(n - c)) + &choose;
    Ok(expect_natural(&v, "cockade k-clique count"))
}

/// All cliques of an `n`-vertex `(K_{c×2}, c)`-cockade:
/// `(1/c)(3^c − 2^c)(n − c) + 2^c`.
pub fn cockade_total(c: usize, n: usize) -> Result<BigUint> {
    check_cockade_order(c, n)?;
    let three = num_traits::pow(BigInt::from(3u8), c);
    let two = BigInt::from(pow2(c as u64));
    let v = BigRational::new(three - &two, natural(c)) * rational(natural(n - c)) + rational(two);
    Ok(expect_natural(&v, "cockade total count"))
}

/// Most `k`-cliques in a `d`-degenerate graph on `n ≥ d+1` vertices:
/// `C(d, k−1)·n − (k−1)·C(d+1, k)`.
pub fn degenerate_bound(d: usize, n: usize, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::Argument("need k ≥ 1"));
    }
    if n < d + 1 {
        return Err(Error::Argument("need n ≥ d + 1"));
    }
    let (d64, k64) = (d as u64, k as u64);
    let v = BigInt::from(binomial(d64, k64 - 1)) * natural(n)
        - BigInt::from(binomial(d64 + 1, k64)) * natural(k - 1);
    Ok(to_natural(&v, "degenerate bound"))
}

/// Most `K_{t−1}` copies in an `n`-vertex `K_t`-minor-free graph: `n − t + 2`.
pub fn top_clique_bound(n: usize, t: usize) -> Result<usize> {
    if t < 2 || n + 1 < t {
        return Err(Error::Argument("need t ≥ 2 and n ≥ t − 1"));
    }
    Ok(n + 2 - t)
}

/// `4m − 7n`, the triangle bound for 6-connected `K_9`-minor-free graphs.
pub fn triangle_bound_6conn(n: u64, m: u64) -> i128 {
    4 * m as i128 - 7 * n as i128
}

/// Both sides of `2^{k+1} Π_{i<k}(c − i) ≤ (k+3) Π_{i<k}(3c/2 − i)`, which
/// holds iff `K_{c×2}` has no more `k`-cliques than a `(t−2)`-tree with
/// `t = 3c/2 + 1` on the same `2c` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K222Condition {
    pub holds: bool,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Evaluates the condition above for even `c ≥ 2`, `k ≥ 1`. Because `c` is
/// even, `3c/2` is an integer and both sides are evaluated unscaled.
pub fn k222_condition(c: usize, k: usize) -> Result<K222Condition> {
    if c < 2 || c % 2 != 0 {
        return Err(Error::Argument("c must be even and at least 2"));
    }
    if k == 0 {
        return Err(Error::Argument("need k ≥ 1"));
    }
    let (c, half) = (c as i64, (3 * c / 2) as i64);
    let lhs: BigInt = (1..k as i64).map(|i| BigInt::from(c - i)).product::<BigInt>() << (k + 1);
    let rhs: BigInt = (1..k as i64).map(|i| BigInt::from(half - i)).product::<BigInt>() * (k + 3);
    Ok(K222Condition {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}

/// `e_k(n₁, …, n_c)`, the `k`-clique count of `K_{n₁,…,n_c}`.
pub fn multipartite_kcliques(spec: &MultipartiteSpec, k: usize) -> BigUint {
    let parts: Vec<u64> = spec.parts().iter().map(|&p| p as u64).collect();
    elementary_symmetric(&parts).get(k).cloned().unwrap_or_else(BigUint::zero)
}

/// `Π (nᵢ + 1)`, the total clique count of `K_{n₁,…,n_c}`.
pub fn multipartite_total(spec: &MultipartiteSpec) -> BigUint {
    spec.total_cliques()
}
