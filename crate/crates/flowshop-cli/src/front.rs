//! Serialized Pareto fronts.
//!
//! CSV is the ground-truth, diff-able form: a fixed header and one row
//! per point in the order given. JSON mirrors the same points and adds
//! the removal order and, on request, the per-iteration trace.

use std::fmt::Write;

use flowshop::{JobId, ParetoPoint, ParetoResult};
use serde::Serialize;

pub fn csv_front(points: &[ParetoPoint]) -> String {
    let mut out = String::from("retained,tardy,due_date\n");
    for point in points {
        writeln!(out, "{},{},{}", point.retained, point.tardy, point.due_date)
            .expect("write to string");
    }
    out
}

#[derive(Serialize)]
struct JsonFront<'a> {
    instance_name: Option<&'a str>,
    n: usize,
    points: Vec<JsonPoint>,
    removal_order: &'a [JobId],
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<JsonTraceStep>>,
}

#[derive(Serialize)]
struct JsonPoint {
    retained: usize,
    tardy: usize,
    due_date: i64,
}

#[derive(Serialize)]
struct JsonTraceStep {
    iteration: usize,
    makespan_before: i64,
    pivot_id: JobId,
    pivot_delta: i64,
    removed_id: JobId,
    removed_contribution: i64,
}

pub fn json_front(name: Option<&str>, n: usize, result: &ParetoResult, with_trace: bool) -> String {
    let points = result
        .points
        .iter()
        .map(|p| JsonPoint {
            retained: p.retained,
            tardy: p.tardy,
            due_date: p.due_date,
        })
        .collect();
    let trace = with_trace.then(|| {
        result
            .trace
            .iter()
            .map(|step| JsonTraceStep {
                iteration: step.iteration,
                makespan_before: step.makespan_before,
                pivot_id: step.pivot_id,
                pivot_delta: step.pivot_delta,
                removed_id: step.removed_id,
                removed_contribution: step.removed_contribution,
            })
            .collect()
    });
    let front = JsonFront {
        instance_name: name,
        n,
        points,
        removal_order: &result.removal_order,
        trace,
    };
    serde_json::to_string_pretty(&front).expect("front serializes")
}
