mod common;

use common::oracles::{naive_has_minor, partitions, random_graph_upto};
use ktminor_core::constructions::complete_multipartite_parts;
use ktminor_core::minors::{kc2_minor_witness, multipartite_minor_free_order, verify_minor_model};
use ktminor_core::{hadwiger_number, has_kt_minor, Graph, MultipartiteSpec};

fn check_against_oracle(g: &Graph) {
    for t in 1..=g.n() + 1 {
        let found = has_kt_minor(g, t).unwrap();
        assert_eq!(found.is_some(), naive_has_minor(g, t), "{g:?} t={t}");
        if let Some(model) = found {
            assert_eq!(model.order(), t);
            assert!(verify_minor_model(g, &model).unwrap());
        }
    }
}

#[test]
fn agrees_with_partition_oracle_on_all_graphs_up_to_six() {
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            check_against_oracle(&Graph::from_pair_mask(n, mask).unwrap());
        }
    }
}

#[test]
fn agrees_with_partition_oracle_on_random_graphs() {
    for seed in 0..60 {
        check_against_oracle(&random_graph_upto(8, seed));
    }
}

#[test]
fn monotone_in_t_and_under_edge_addition() {
    for seed in 0..40 {
        let g = random_graph_upto(9, 300 + seed);
        let h = hadwiger_number(&g).unwrap();
        for t in 1..=g.n() {
            assert_eq!(has_kt_minor(&g, t).unwrap().is_some(), t <= h);
        }
        for (u, v) in (0..g.n()).flat_map(|v| (0..v).map(move |u| (u, v))) {
            if !g.has_edge(u, v) {
                assert!(hadwiger_number(&g.with_edge(u, v).unwrap()).unwrap() >= h);
            }
        }
    }
}

#[test]
fn multipartite_formula_is_tight_up_to_twelve() {
    for n in 1..=12 {
        for parts in partitions(n) {
            let spec = MultipartiteSpec::new(parts.clone()).unwrap();
            let g = complete_multipartite_parts(&parts).unwrap();
            assert_eq!(
                hadwiger_number(&g).unwrap() + 1,
                multipartite_minor_free_order(&spec),
                "{parts:?}"
            );
        }
    }
}

#[test]
fn kc2_witnesses_verify() {
    for c in 2..=12 {
        let g = complete_multipartite_parts(&vec![2; c]).unwrap();
        let model = kc2_minor_witness(c).unwrap();
        assert_eq!(model.order(), 3 * c / 2);
        assert!(verify_minor_model(&g, &model).unwrap());
    }
}
