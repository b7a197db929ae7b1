//! JSON and CSV renderings of results. Counts are always decimal strings.

use std::io::Write;

use ktminor_core::bounds::ExtremalRecord;
use ktminor_core::search::{ExhaustiveTable, LambdaReport, SearchReport, VerifyReport};
use ktminor_core::{CliqueVector, Family, Graph, MinorModel};
use serde_json::{json, Value};

pub fn clique_vector_json(g: &Graph, cv: &CliqueVector) -> Value {
    json!({
        "n": g.n(),
        "clique_vector": cv.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "total": cv.total().to_string(),
    })
}

pub fn model_json(model: &MinorModel) -> Value {
    json!(model.to_lists())
}

pub fn extremal_json(r: &ExtremalRecord) -> Value {
    json!({
        "t": r.t,
        "k": r.k,
        "total": r.k.is_none(),
        "n": r.n,
        "value": r.value.to_string(),
        "exceptional": r.exceptional,
        "witness_family": r.witness_family.tag(),
    })
}

fn family_of(parts: &ktminor_core::MultipartiteSpec) -> Option<&'static str> {
    Family::ALL.into_iter().find(|f| f.contains(parts)).map(Family::tag)
}

pub fn search_json(r: &SearchReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "t": v.t,
                "n": v.n,
                "c": v.spec.c(),
                "parts": v.spec.parts(),
                "family": family_of(&v.spec),
                "cliques": v.cliques.to_string(),
                "bound": v.bound.to_string(),
                "violated_up_to": v.violated_up_to,
            })
        })
        .collect();
    json!({
        "scan": r.kind.tag(),
        "t_max": r.t_max,
        "candidates_examined": r.candidates_examined,
        "violation_count": violations.len(),
        "violations": violations,
        "minimal_violating_t": r.minimal_violating_t(),
        "persistent_violation_t": r.persistent_violation_t(),
        "covered_from_t": r.covered_from_t(),
        "max_clean_t": r.max_clean_t,
        "runtime_ms": r.runtime.map(|d| d.as_millis() as u64),
    })
}

pub fn search_csv<W: Write>(r: &SearchReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "n", "c", "parts", "cliques", "bound", "violated_up_to"])?;
    for v in &r.violations {
        let parts: Vec<String> = v.spec.parts().iter().map(usize::to_string).collect();
        w.write_record([
            v.t.to_string(),
            v.n.to_string(),
            v.spec.c().to_string(),
            parts.join(" "),
            v.cliques.to_string(),
            v.bound.to_string(),
            v.violated_up_to.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn lambda_json(r: &LambdaReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "c": row.c,
                "k_min": row.k_min,
                "ratio": row.ratio().to_string(),
                "failing": row.failing,
                "equal": row.equal,
            })
        })
        .collect();
    json!({ "scan": "lambda", "c_max": r.c_max, "rows": rows })
}

pub fn lambda_csv<W: Write>(r: &LambdaReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["c", "k_min", "ratio", "failing_count", "equal"])?;
    for row in &r.rows {
        let equal: Vec<String> = row.equal.iter().map(usize::to_string).collect();
        w.write_record([
            row.c.to_string(),
            row.k_min.to_string(),
            row.ratio().to_string(),
            row.failing.len().to_string(),
            equal.join(" "),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn exhaustive_json(table: &ExhaustiveTable) -> Value {
    let rows: Vec<Value> = table
        .per_k
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, e)| json!({ "k": k, "max": e.value.to_string(), "graph6": table.graph6(e.mask) }))
        .collect();
    json!({
        "scan": "exhaustive",
        "n": table.n,
        "t": table.t,
        "rows": rows,
        "total": { "max": table.total.value.to_string(), "graph6": table.graph6(table.total.mask) },
        "maximal_graphs": table.maximal_graphs,
    })
}

pub fn exhaustive_csv<W: Write>(table: &ExhaustiveTable, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "t", "k", "max", "graph6"])?;
    for (k, e) in table.per_k.iter().enumerate().skip(1) {
        w.write_record([
            table.n.to_string(),
            table.t.to_string(),
            k.to_string(),
            e.value.to_string(),
            table.graph6(e.mask),
        ])?;
    }
    w.write_record([
        table.n.to_string(),
        table.t.to_string(),
        "total".to_string(),
        table.total.value.to_string(),
        table.graph6(table.total.mask),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn verify_json(r: &VerifyReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "t": f.t,
                "n": f.n,
                "k": f.k,
                "source": f.source,
                "expected": f.expected.to_string(),
                "got": f.got.to_string(),
                "graph6": f.graph6,
                "reproducer": f.reproducer(),
            })
        })
        .collect();
    json!({ "passed": r.passed(), "checks": r.checks, "failures": failures })
}
