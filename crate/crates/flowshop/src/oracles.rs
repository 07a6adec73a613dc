//! Independent reference implementations for differential testing.
//!
//! Nothing here touches [`IndexedTree`] internals or the fast solver's
//! state: the quadratic solver re-derives every per-iteration quantity
//! with plain scans over the surviving subsequence, the brute force
//! enumerates subsets and simulates them, and [`NaivePrefixStats`]
//! mirrors the tree's query API with O(n) loops. Agreement between these
//! and the O(n log n) path is what the test suite leans on.

use thiserror::Error;

use crate::indexed_tree::TiePolicy;
use crate::model::{
    formula_makespan, simulate_makespan, spt_sort, validate, Instance, Job, ValidationError,
};
use crate::solver::{ParetoPoint, ParetoResult, TraceStep};

/// Reference solver with the same outputs as [`crate::solver::solve`],
/// in O(n^2): every iteration recomputes makespans, the pivot, prefix
/// sums, and their suffix maxima from scratch on the materialized
/// survivor list. Selection and tie rules are duplicated, not shared, so
/// a bug in the fast solver's incremental state cannot hide here.
pub fn quadratic(instance: &Instance) -> Result<ParetoResult, ValidationError> {
    validate(instance)?;
    let order = spt_sort(instance);
    let n = order.len();
    let mut points = Vec::with_capacity(n + 1);
    let mut removal_order = Vec::with_capacity(n);
    let mut trace = Vec::with_capacity(n);
    if n == 0 {
        points.push(ParetoPoint {
            retained: 0,
            due_date: 0,
            tardy: 0,
        });
        return Ok(ParetoResult {
            points,
            removal_order,
            trace,
        });
    }
    // survivors carry their 1-based position in the initial SPT sequence
    let mut survivors: Vec<(usize, Job)> = order
        .iter()
        .copied()
        .enumerate()
        .map(|(i, job)| (i + 1, job))
        .collect();
    let mut jobs: Vec<Job> = survivors.iter().map(|&(_, job)| job).collect();
    let mut report = formula_makespan(&jobs);
    let mut makespan = report.cmax;
    points.push(ParetoPoint {
        retained: n,
        due_date: makespan,
        tardy: 0,
    });
    for iteration in 1..=n {
        let pidx = report.pivot_position.expect("survivors are non-empty") - 1;
        let (pivot_position, pivot_job) = survivors[pidx];

        let mut without = jobs.clone();
        without.remove(pidx);
        let pivot_delta = makespan - formula_makespan(&without).cmax;

        // prefix sums of the derived costs and, per position, the
        // maximum prefix sum strictly to its right
        let prefix: Vec<i64> = report
            .c_values
            .iter()
            .scan(0i64, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect();
        let d = prefix[pidx];
        let mut right_max = vec![i64::MIN; survivors.len()];
        for j in (0..survivors.len().saturating_sub(1)).rev() {
            right_max[j] = right_max[j + 1].max(prefix[j + 1]);
        }
        // rightmost position whose removal lifts a later prefix sum past
        // the pivot; its exact drop is capped below its full b
        let rebound = (pidx + 1..survivors.len())
            .rev()
            .find(|&j| {
                let job = survivors[j].1;
                job.b as i64 - job.a as i64 + right_max[j] > d
            })
            .map(|j| {
                let job = survivors[j].1;
                (j, d + job.a as i64 - right_max[j])
            });
        // rightmost maximum of b past the rebound point drops its full b
        let full_from = rebound.map_or(pidx, |(u, _)| u) + 1;
        let mut full_best: Option<(i64, usize)> = None;
        for (j, &(_, job)) in survivors.iter().enumerate().skip(full_from) {
            let b = job.b as i64;
            if full_best.is_none_or(|(best_b, _)| b >= best_b) {
                full_best = Some((b, j));
            }
        }
        // the full-b candidate wins ties against the rebounding one, and
        // a tie between the pivot's delta and the right-side drop removes
        // the right-side job
        let right = match (rebound, full_best) {
            (Some((_, capped)), Some((b, j))) if b >= capped => Some((j, b)),
            (Some((u, capped)), _) => Some((u, capped)),
            (None, Some((b, j))) => Some((j, b)),
            (None, None) => None,
        };
        let removed_idx = match right {
            Some((j, delta)) if delta >= pivot_delta => j,
            _ => pidx,
        };
        let (_, removed_job) = survivors.remove(removed_idx);
        jobs.remove(removed_idx);
        report = formula_makespan(&jobs);
        let makespan_after = report.cmax;

        trace.push(TraceStep {
            iteration,
            makespan_before: makespan,
            pivot_id: pivot_job.id,
            pivot_position,
            pivot_delta,
            removed_id: removed_job.id,
            removed_contribution: makespan - makespan_after,
        });
        removal_order.push(removed_job.id);
        points.push(ParetoPoint {
            retained: n - iteration,
            due_date: makespan_after,
            tardy: iteration,
        });
        makespan = makespan_after;
    }
    Ok(ParetoResult {
        points,
        removal_order,
        trace,
    })
}

/// Instances larger than this are refused unless the caller raises the
/// limit explicitly.
pub const BRUTE_FORCE_DEFAULT_LIMIT: usize = 12;
/// No limit override goes past this; 2^20 subsets is already slow.
pub const BRUTE_FORCE_HARD_CAP: usize = 20;

#[derive(Error, Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} jobs, over the brute-force limit of {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// Exact Pareto front by exhaustive subset enumeration: for every k, the
/// minimum over all k-subsets of the subset's makespan (subset kept in
/// SPT order, makespan by simulation). Independent of both the formula
/// and the greedy. Points come back ascending in `retained`.
pub fn brute_force_front(
    instance: &Instance,
    limit: Option<usize>,
) -> Result<Vec<ParetoPoint>, OracleError> {
    let limit = limit
        .unwrap_or(BRUTE_FORCE_DEFAULT_LIMIT)
        .min(BRUTE_FORCE_HARD_CAP);
    let n = instance.n();
    if n > limit {
        return Err(OracleError::GuardExceeded { n, limit });
    }
    validate(instance)?;
    let order = spt_sort(instance);
    let mut best = vec![i64::MAX; n + 1];
    best[0] = 0;
    let mut subset = Vec::with_capacity(n);
    for mask in 0u32..1 << n {
        subset.clear();
        subset.extend(
            order
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &job)| job),
        );
        let k = mask.count_ones() as usize;
        best[k] = best[k].min(simulate_makespan(&subset));
    }
    Ok(best
        .into_iter()
        .enumerate()
        .map(|(k, due_date)| ParetoPoint {
            retained: k,
            due_date,
            tardy: n - k,
        })
        .collect())
}

/// Scan-based stand-in for [`crate::indexed_tree::IndexedTree`]: same
/// operations, same 1-based indexing, same tie policies, O(n) per query.
pub struct NaivePrefixStats {
    values: Vec<i64>,
    policy: TiePolicy,
}

impl NaivePrefixStats {
    pub fn build(values: &[i64], policy: TiePolicy) -> Self {
        NaivePrefixStats {
            values: values.to_vec(),
            policy,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tie_policy(&self) -> TiePolicy {
        self.policy
    }

    fn check(&self, i: usize, min: usize) {
        assert!(
            i >= min && i <= self.len(),
            "position {i} out of range {min}..={}",
            self.len()
        );
    }

    fn replaces(&self, challenger: i64, incumbent: i64, want_max: bool) -> bool {
        let strictly_better = if want_max {
            challenger > incumbent
        } else {
            challenger < incumbent
        };
        strictly_better || (challenger == incumbent && self.policy == TiePolicy::Rightmost)
    }

    pub fn value(&self, i: usize) -> i64 {
        self.check(i, 1);
        self.values[i - 1]
    }

    pub fn point_set(&mut self, i: usize, value: i64) {
        self.check(i, 1);
        self.values[i - 1] = value;
    }

    pub fn point_add(&mut self, i: usize, delta: i64) {
        self.check(i, 1);
        self.values[i - 1] += delta;
    }

    pub fn prefix_sum(&self, i: usize) -> i64 {
        self.check(i, 0);
        self.values[..i].iter().sum()
    }

    fn scan_extremum(&self, lo: usize, hi: usize, want_max: bool) -> (i64, usize) {
        let mut best = (self.values[lo], lo + 1);
        for (offset, &v) in self.values[lo..hi].iter().enumerate().skip(1) {
            if self.replaces(v, best.0, want_max) {
                best = (v, lo + offset + 1);
            }
        }
        best
    }

    pub fn prefix_max(&self, i: usize) -> (i64, usize) {
        self.check(i, 1);
        self.scan_extremum(0, i, true)
    }

    pub fn prefix_min(&self, i: usize) -> (i64, usize) {
        self.check(i, 1);
        self.scan_extremum(0, i, false)
    }

    pub fn suffix_max(&self, i: usize) -> (i64, usize) {
        self.check(i, 1);
        self.scan_extremum(i - 1, self.len(), true)
    }

    fn scan_prefix_sums(&self, i: usize, want_max: bool) -> (i64, Option<usize>) {
        let mut running = 0i64;
        let mut best: Option<(i64, usize)> = None;
        for (idx, &v) in self.values[..i].iter().enumerate() {
            running += v;
            if best.is_none_or(|(b, _)| self.replaces(running, b, want_max)) {
                best = Some((running, idx + 1));
            }
        }
        match best {
            None => (0, None),
            Some((v, idx)) => (v, Some(idx)),
        }
    }

    pub fn max_prefix_sums(&self, i: usize) -> (i64, Option<usize>) {
        self.check(i, 0);
        self.scan_prefix_sums(i, true)
    }

    pub fn min_prefix_sums(&self, i: usize) -> (i64, Option<usize>) {
        self.check(i, 0);
        self.scan_prefix_sums(i, false)
    }
}
