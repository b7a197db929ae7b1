mod common;

use common::oracles::{binom, partitions};
use ktminor_core::search::*;
use ktminor_core::MultipartiteSpec;
use num_bigint::BigUint;
use num_rational::Ratio;

/// The restricted space built straight from its definition: every partition,
/// filtered by the spec's own predicates.
fn naive_candidates(t_max: usize) -> Vec<MultipartiteSpec> {
    let mut out = Vec::new();
    // Balanced specs with average below three have t = ⌊(n+c)/2⌋ + 1 > 2n/3.
    for n in 1..=3 * t_max / 2 {
        for parts in partitions(n) {
            let spec = MultipartiteSpec::new(parts).unwrap();
            if spec.is_balanced()
                && spec.average_part_size() < Ratio::from_integer(3)
                && (3..=t_max).contains(&spec.minor_free_order())
            {
                out.push(spec);
            }
        }
    }
    out
}

#[test]
fn scan_space_matches_definition() {
    for t_max in [3, 5, 8, 12, 16, 20] {
        let naive = naive_candidates(t_max);
        let report = multipartite_conjecture_scan(t_max).unwrap();
        assert_eq!(report.candidates_examined, naive.len() as u64, "t_max {t_max}");
        let violating: Vec<_> = naive
            .iter()
            .filter(|s| s.total_cliques() > BigUint::from(2u8).pow(s.minor_free_order() as u32 - 2) * (s.n() + 3 - s.minor_free_order()))
            .collect();
        assert_eq!(violating.len(), report.violations.len());
    }
}

#[test]
fn violations_recheck_and_match_family_formula() {
    let r = family_union_scan(120).unwrap();
    assert!(!r.violations.is_empty());
    for v in &r.violations {
        assert!(v.recheck());
        let c2 = v.spec.parts().iter().filter(|&&p| p == 2).count() as u32;
        let ones = v.spec.parts().len() as u32 - c2;
        assert_eq!(v.cliques, BigUint::from(3u8).pow(c2) << ones);
        assert!(v.violated_up_to >= v.t && v.violated_up_to <= v.n + 2);
    }
}

#[test]
fn family_first_violations() {
    let firsts: Vec<_> = Family::ALL
        .iter()
        .map(|&f| {
            let r = family_threshold_scan(f, 100).unwrap();
            let first = &r.violations[0];
            (r.minimal_violating_t(), first.spec.parts().iter().filter(|&&p| p == 2).count())
        })
        .collect();
    assert_eq!(firsts, [(Some(50), 33), (Some(51), 33), (Some(52), 33)]);
}

#[test]
fn unbalanced_specs_never_violate() {
    let r = unbalanced_sample_scan(10_000, 60, 2024).unwrap();
    assert_eq!(r.candidates_examined, 10_000);
    assert!(r.violations.is_empty());
}

#[test]
fn exhaustive_maxima_grow_with_n() {
    for t in 3..=5 {
        let tables: Vec<_> = (1..=6).map(|n| exhaustive_extremal(n, t, false).unwrap()).collect();
        for w in tables.windows(2) {
            for k in 0..t {
                assert!(w[0].per_k[k].value <= w[1].per_k[k].value);
            }
            assert!(w[0].total.value <= w[1].total.value);
        }
        for n in 1..t {
            for k in 0..t {
                assert_eq!(tables[n - 1].per_k[k].value, BigUint::from(binom(n as u64, k as u64)));
            }
        }
    }
}

#[test]
fn theorem_suite_passes_with_oracle() {
    let r = verify_theorem_suite(&VerifyConfig {
        ts: vec![3, 4, 5],
        n_max: 6,
        oracle: true,
        minor_check_n_max: 6,
        ..VerifyConfig::default()
    })
    .unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    let r = verify_theorem_suite(&VerifyConfig {
        ts: vec![9],
        n_max: 30,
        oracle: false,
        ..VerifyConfig::default()
    })
    .unwrap();
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn lambda_small_values() {
    let r = lambda_scan(200).unwrap();
    assert_eq!(r.rows.len(), 99);
    let row = |c: usize| r.rows.iter().find(|row| row.c == c).unwrap();
    assert!(row(6).equal.contains(&2) && row(6).failing.is_empty());
    assert_eq!(row(8).failing, [2, 3]);
    for row in &r.rows {
        assert!(row.failing.iter().all(|&k| k < row.k_min));
        assert!(row.k_min <= row.c);
    }
}
