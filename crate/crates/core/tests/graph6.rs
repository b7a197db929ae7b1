mod common;

use common::oracles::random_graph_upto;
use ktminor_core::{graph6, Graph};
use proptest::prelude::*;

#[test]
fn round_trips_every_graph_up_to_six() {
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            let g = Graph::from_pair_mask(n, mask).unwrap();
            let text = graph6::encode(&g);
            assert_eq!(graph6::decode(&text).unwrap(), g, "{text}");
        }
    }
}

#[test]
fn round_trips_seeded_random_graphs() {
    for seed in 0..1000 {
        let g = random_graph_upto(128, seed);
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn round_trips_arbitrary_edge_lists(n in 0usize..90, raw in proptest::collection::vec((0usize..90, 0usize..90), 0..300)) {
        let edges: Vec<(usize, usize)> = raw
            .into_iter()
            .filter(|&(u, v)| u < n && v < n && u != v)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn decoding_never_panics(text in "[ -~]{0,40}") {
        let _ = graph6::decode(&text);
    }
}
