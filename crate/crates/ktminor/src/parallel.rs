//! Multi-threaded drivers over the core engines. Each splits its work into the
//! independent pieces the core exposes and merges the partial results, so the
//! answers match the single-threaded functions exactly.

use std::sync::atomic::AtomicBool;
use std::time::Instant;

use ktminor_core::cliques::CliqueCounter;
use ktminor_core::minors::hadwiger_upper_bound;
use ktminor_core::search::{
    self, ExhaustiveRun, ExhaustiveTable, Family, MultipartiteScan, ScanKind, SearchReport, VerifyConfig,
    VerifyReport,
};
use ktminor_core::{CliqueVector, Graph, MinorModel, MinorSearch, Result};
use num_bigint::BigUint;
use rayon::prelude::*;

/// Vertices are placed this deep before the minor search forks.
const MINOR_SPLIT_DEPTH: usize = 5;
/// Edge masks per stripe when maximizing over the exhaustive oracle.
const MASK_STRIPE: u64 = 1 << 12;

pub fn clique_vector(g: &Graph) -> CliqueVector {
    let counter = CliqueCounter::new(g);
    (0..counter.vertex_count())
        .into_par_iter()
        .map(|r| counter.count_roots(r..r + 1))
        .reduce_with(|a, b| a.add(&b))
        .unwrap_or_else(|| counter.count_roots(0..0))
}

pub fn count_cliques_k(g: &Graph, k: usize) -> BigUint {
    let counter = CliqueCounter::new(g);
    let n = counter.vertex_count();
    if n == 0 {
        return counter.count_roots_k(0..0, k);
    }
    (0..n)
        .into_par_iter()
        .map(|r| counter.count_roots_k(r..r + 1, k))
        .sum()
}

pub fn has_kt_minor(search: &MinorSearch, g: &Graph, t: usize) -> Result<Option<MinorModel>> {
    let tasks = search.tasks(g, t, MINOR_SPLIT_DEPTH)?;
    if tasks.is_empty() {
        return search.has_kt_minor(g, t);
    }
    let stop = AtomicBool::new(false);
    tasks
        .par_iter()
        .map(|task| search.run_task(g, t, task, &stop))
        .find_map_any(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

pub fn hadwiger_number(search: &MinorSearch, g: &Graph) -> Result<(usize, MinorModel)> {
    for t in (1..=hadwiger_upper_bound(g)).rev() {
        if let Some(model) = has_kt_minor(search, g, t)? {
            return Ok((t, model));
        }
    }
    // Checks the cap even for graphs with no edges.
    search.hadwiger_number(g)
}

pub fn multipartite_conjecture_scan(t_max: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let scan = MultipartiteScan::new(t_max)?;
    let mut report = scan
        .tasks()
        .into_par_iter()
        .map(|task| scan.run_task(task))
        .reduce(
            || SearchReport::new(ScanKind::Multipartite, t_max),
            |mut a, b| {
                a.merge(b);
                a
            },
        );
    report.runtime = Some(start.elapsed());
    Ok(report)
}

pub fn family_threshold_scan(family: Option<Family>, t_max: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let mut report = match family {
        Some(f) => search::family_threshold_scan(f, t_max)?,
        None => search::family_union_scan(t_max)?,
    };
    report.runtime = Some(start.elapsed());
    Ok(report)
}

pub fn unbalanced_sample_scan(count: usize, n_max: usize, seed: u64) -> Result<SearchReport> {
    let start = Instant::now();
    let mut report = search::unbalanced_sample_scan(count, n_max, seed)?;
    report.runtime = Some(start.elapsed());
    Ok(report)
}

pub fn exhaustive_extremal(n: usize, t: usize, allow_slow: bool) -> Result<ExhaustiveTable> {
    let mut run = ExhaustiveRun::new(n, t, allow_slow)?;
    for edges in 0..=run.pairs() {
        let masks = run.layer(edges);
        let flags: Vec<bool> = masks
            .par_chunks(256)
            .map(|chunk| run.classify(chunk))
            .collect::<Result<Vec<_>>>()?
            .concat();
        run.commit(&masks, &flags);
    }
    let total = run.graph_count();
    let stripes: Vec<u64> = (0..total).step_by(MASK_STRIPE as usize).collect();
    let table = stripes
        .into_par_iter()
        .map(|lo| run.maxima(lo..(lo + MASK_STRIPE).min(total)))
        .reduce_with(|mut a, b| {
            a.merge(&b);
            a
        })
        .expect("there is at least one graph");
    Ok(table)
}

/// The theorem suite with the oracle tables built in parallel.
pub fn verify_theorem_suite(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for &t in &config.ts {
        if config.oracle {
            for n in 1..=config.n_max.min(config.oracle_n_max) {
                let table = exhaustive_extremal(n, t, config.allow_slow)?;
                report.merge(search::verify_against_oracle(&table)?);
            }
        }
        if config.attainment {
            let parts = (1..=config.n_max)
                .into_par_iter()
                .map(|n| search::verify_attainment(n, t, config.minor_check_n_max))
                .collect::<Result<Vec<_>>>()?;
            for part in parts {
                report.merge(part);
            }
        }
    }
    Ok(report)
}
