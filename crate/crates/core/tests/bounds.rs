mod common;

use common::oracles::{binom, brute_clique_counts, poly_expand};
use ktminor_core::bounds::*;
use ktminor_core::constructions::{cockade, complete_multipartite_parts, ell_tree, CockadeSpec};
use ktminor_core::graph::complete_graph;
use ktminor_core::{clique_vector, count_cliques_k, max_clique, Graph, PasteChoice};
use num_bigint::BigUint;
use num_rational::BigRational;

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

#[test]
fn binomial_identity_for_tree_counts() {
    for t in 3..=30usize {
        for n in t - 2..=200 {
            let sum: BigUint = (1..t).map(|k| lower_bound_kcliques(n, t, k).unwrap()).sum();
            assert_eq!(sum + 1u8, lower_bound_total(n, t).unwrap(), "t {t} n {n}");
        }
    }
}

#[test]
fn closed_form_matches_rational_form() {
    // C(t−2,k−1)·(n − (k−1)(t−1)/k), evaluated with fractions.
    for t in 3..=12u64 {
        for k in 1..t {
            for n in t - 2..40 {
                let q = BigRational::from_integer(binom(t - 2, k - 1).into())
                    * (BigRational::from_integer(n.into())
                        - BigRational::new(((k - 1) * (t - 1)).into(), k.into()));
                let v = lower_bound_kcliques(n as usize, t as usize, k as usize).unwrap();
                assert_eq!(q, BigRational::from_integer(v.into()));
            }
        }
    }
}

#[test]
fn trees_and_witnesses_attain_the_table() {
    for t in 3..=9usize {
        for n in 1..=30usize {
            for k in 1..t {
                let r = extremal_kcliques(n, t, k).unwrap();
                let w = r.witness().unwrap();
                assert_eq!(w.n(), n);
                assert_eq!(count_cliques_k(&w, k), r.value, "t {t} n {n} k {k} {:?}", r.witness_family);
                if n >= t - 2 {
                    assert!(r.value >= lower_bound_kcliques(n, t, k).unwrap());
                }
                if n >= t && !r.exceptional {
                    let tree = ell_tree(t - 2, n, Some(n as u64)).unwrap();
                    assert_eq!(count_cliques_k(&tree, k), r.value);
                }
            }
            let r = extremal_total(n, t).unwrap();
            assert_eq!(clique_vector(&r.witness().unwrap()).total(), r.value);
        }
    }
}

#[test]
fn exceptional_witnesses_are_the_named_graphs() {
    let k2x5 = complete_multipartite_parts(&[2; 5]).unwrap();
    for copies in 1..=4 {
        let g = cockade(&CockadeSpec::new(k2x5.clone(), 5, copies)).unwrap();
        let n = g.n();
        assert_eq!(g.edge_count(), 6 * n - 20);
        let r = extremal_kcliques(n, 8, 2).unwrap();
        assert!(r.exceptional);
        assert_eq!(big(g.edge_count() as u128), r.value);
    }
    let k1x2x5 = complete_multipartite_parts(&[1, 2, 2, 2, 2, 2]).unwrap();
    for copies in 1..=4 {
        let g = cockade(&CockadeSpec::new(k1x2x5.clone(), 6, copies)).unwrap();
        assert_eq!(g.edge_count(), 7 * g.n() - 27);
        assert!(extremal_kcliques(g.n(), 9, 2).unwrap().exceptional);
    }
    let k22233 = complete_multipartite_parts(&[3, 3, 2, 2, 2]).unwrap();
    assert_eq!(k22233.edge_count(), 7 * 12 - 27);
    assert_eq!(count_cliques_k(&k1x2x5, 3), big(21 * 11 - 111));
}

#[test]
fn cockade_closed_forms_match_enumeration() {
    let base = complete_multipartite_parts(&[2; 5]).unwrap();
    for copies in 1..=4 {
        for choice in [PasteChoice::BaseLeast, PasteChoice::Chain, PasteChoice::Seeded(copies as u64)] {
            let g = cockade(&CockadeSpec::new(base.clone(), 5, copies).with_choice(choice)).unwrap();
            let cv = clique_vector(&g);
            assert_eq!(cv.total(), cockade_total(5, g.n()).unwrap());
            for k in 0..=6 {
                assert_eq!(cv.get(k), cockade_cliques(5, g.n(), k).unwrap(), "copies {copies} k {k}");
            }
        }
    }
}

#[test]
fn pasting_counts_match_enumeration() {
    let a = complete_multipartite_parts(&[2, 2, 2, 2, 2]).unwrap();
    let b = ell_tree(5, 9, Some(3)).unwrap();
    let g = ktminor_core::graph::paste(&a, &b, &[0, 2, 4, 6, 8], &[0, 1, 2, 3, 4]).unwrap();
    let (ca, cb, cg) = (clique_vector(&a), clique_vector(&b), clique_vector(&g));
    for k in 0..=5 {
        let expected = paste_count_k(&ca.get(k), &cb.get(k), 5, k);
        assert_eq!(expected, cg.get(k).into());
    }
    assert_eq!(paste_count_total(&ca.total(), &cb.total(), 5), cg.total().into());
}

#[test]
fn multipartite_and_turan_counts() {
    for n in 1..=12usize {
        for parts in common::oracles::partitions(n) {
            let g = complete_multipartite_parts(&parts).unwrap();
            let cv = clique_vector(&g);
            let coeffs = poly_expand(&parts);
            for (k, &c) in coeffs.iter().enumerate() {
                assert_eq!(cv.get(k), big(c));
            }
            let spec = ktminor_core::MultipartiteSpec::new(parts.clone()).unwrap();
            assert_eq!(multipartite_total(&spec), cv.total());
            assert_eq!(multipartite_kcliques(&spec, 2), big(g.edge_count() as u128));
        }
    }
}

#[test]
fn zykov_bounds_dominate_small_graphs() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let g = Graph::from_pair_mask(n, mask).unwrap();
            let counts = brute_clique_counts(&g);
            let omega = max_clique(&g);
            for t in omega + 1..=7 {
                let total: u64 = counts.iter().sum();
                assert!(BigRational::from_integer(total.into()) <= zykov_total(n, t).unwrap());
                for k in 0..t.min(n + 1) {
                    let c = BigRational::from_integer(counts[k].into());
                    assert!(c <= zykov_kcliques(n, t, k).unwrap(), "n {n} mask {mask} t {t} k {k}");
                }
            }
        }
    }
}

#[test]
fn k222_condition_is_the_count_comparison() {
    for c in (2..=60usize).step_by(2) {
        let t = 3 * c / 2 + 1;
        let kc2 = complete_multipartite_parts(&vec![2; c]);
        for k in 1..=c {
            let direct = big(binom(c as u64, k as u64)) << k <= lower_bound_kcliques(2 * c, t, k).unwrap();
            assert_eq!(k222_condition(c, k).unwrap().holds, direct, "c {c} k {k}");
            if c <= 10 {
                assert_eq!(count_cliques_k(kc2.as_ref().unwrap(), k), big(binom(c as u64, k as u64)) << k);
            }
        }
    }
}

#[test]
fn top_clique_row_matches_trees() {
    for t in 3..=9usize {
        for n in t - 2..=30 {
            let g = ell_tree(t - 2, n, None).unwrap();
            let expected = if n + 1 >= t { top_clique_bound(n, t).unwrap() } else { 0 };
            assert_eq!(count_cliques_k(&g, t - 1), big(expected as u128), "t {t} n {n}");
        }
    }
    assert_eq!(count_cliques_k(&complete_graph(4).unwrap(), 4), big(1));
}
