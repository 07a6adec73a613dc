//! Greedy solver for the full Pareto front in O(n log n).
//!
//! Starting from the SPT sequence, each iteration removes the job whose
//! removal shrinks the makespan the most, never re-adding it. After k
//! removals the surviving jobs' makespan is the minimal common due date
//! under which n - k jobs finish on time, so the n removals enumerate all
//! n + 1 Pareto optima of (due date, tardy count).
//!
//! With `P[k]` the prefix sums of `c[i] = a[i] - b[previous alive]`, the
//! makespan is `sum(b) + max P` and the pivot `p` is the rightmost
//! maximizer. Removing job `j` lifts every later prefix sum by
//! `b[j] - a[j]`, so its exact contribution to the makespan is
//!
//! * `a[j]` for `j` left of the pivot, never better than removing the
//!   pivot itself;
//! * `min(b[j], D + a[j] - M[j])` for `j` right of it, where `D = P[p]`
//!   and `M[j]` is the maximal alive `P` right of `j`: the drop is the
//!   full `b[j]` unless the lifted suffix peak `M[j] + b[j] - a[j]`
//!   rebounds past `D`.
//!
//! In SPT order `a[j]` is non-decreasing and `M[j]` non-increasing, so
//! `D + a[j] - M[j]` is non-decreasing along the right side. The best
//! right-side removal is therefore one of two positions: the rightmost
//! `u` whose rebound passes the peak (it caps every position left of it)
//! or the rightmost maximizer of `b` right of `u` (no rebound, so its
//! full `b` counts). Pivot location, both candidates, and the removal
//! updates are each one `O(log n)` operation on an augmented segment
//! tree over the SPT positions (see `solver_tree`).
//!
//! Ties prefer the right side over the pivot and the full-b candidate
//! over the rebounding one, keeping the removal order deterministic.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::model::{spt_sort, validate, Instance, Job, JobId, Sequence, ValidationError};
use crate::solver_tree::{MaxBTree, SolverTree};

/// One Pareto optimum of the bicriteria problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParetoPoint {
    /// Number of jobs finishing on time (k).
    pub retained: usize,
    /// Minimal common due date for which `retained` jobs are on time;
    /// equals the optimal makespan of the best `retained`-job subset.
    pub due_date: i64,
    /// Number of tardy jobs (n - k).
    pub tardy: usize,
}

/// Per-iteration diagnostic record of the greedy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// 1-based iteration counter.
    pub iteration: usize,
    /// Makespan of the sequence at the start of the iteration.
    pub makespan_before: i64,
    pub pivot_id: JobId,
    /// 1-based SPT position of the pivot.
    pub pivot_position: usize,
    /// Contribution of the pivot: makespan drop if it were removed.
    pub pivot_delta: i64,
    pub removed_id: JobId,
    /// Actual makespan drop caused by this iteration's removal.
    pub removed_contribution: i64,
}

/// Output of a full solve: the Pareto front plus how it was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParetoResult {
    /// n + 1 points, ordered from `retained = n` down to `retained = 0`.
    pub points: Vec<ParetoPoint>,
    /// Job ids in the order the greedy removed them.
    pub removal_order: Vec<JobId>,
    pub trace: Vec<TraceStep>,
}

/// Mutable state of the greedy over the SPT positions `1..=n`.
struct SolverState {
    ids: Vec<JobId>,
    a: Vec<i64>,
    b: Vec<i64>,
    alive: Vec<bool>,
    sum_b: i64,
    tree: SolverTree,
    max_b: MaxBTree,
}

impl SolverState {
    fn new(order: &[Job]) -> Self {
        let n = order.len();
        let mut ids = vec![0; n + 1];
        let mut a = vec![0i64; n + 1];
        let mut b = vec![0i64; n + 1];
        for (i, job) in order.iter().enumerate() {
            ids[i + 1] = job.id;
            a[i + 1] = job.a as i64;
            b[i + 1] = job.b as i64;
        }
        let mut p = vec![0i64; n + 1];
        for i in 1..=n {
            p[i] = p[i - 1] + a[i] - b[i - 1];
        }
        let sum_b = b.iter().sum();
        let tree = SolverTree::build(&p, &b, &a);
        let max_b = MaxBTree::build(&b);
        SolverState {
            ids,
            a,
            b,
            alive: vec![true; n + 1],
            sum_b,
            tree,
            max_b,
        }
    }

    /// Current makespan and the rightmost alive pivot position.
    fn find_pivot(&self) -> (usize, i64) {
        let (best, pos) = self
            .tree
            .global_max_p()
            .expect("find_pivot requires an alive position");
        (pos, self.sum_b + best)
    }

    /// Makespan drop if the pivot `p` were removed: the surviving peak is
    /// the best prefix sum left of `p` or a right-side one lifted by
    /// `b[p] - a[p]`.
    fn pivot_contribution(&mut self, p: usize, makespan: i64) -> i64 {
        debug_assert!(self.alive[p]);
        let (left_max, right_max) = self.tree.sides_around(p);
        let lifted = right_max.map(|v| v + self.b[p] - self.a[p]);
        let peak = match (left_max, lifted) {
            (Some(l), Some(r)) => l.max(r),
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => 0,
        };
        makespan - (self.sum_b - self.b[p] + peak)
    }

    /// Best removal right of the pivot as `(position, contribution)`;
    /// `None` when no alive job is right of `p`. `d` is the current
    /// maximal prefix sum.
    ///
    /// If some removal rebounds past the peak, the rightmost such `u`
    /// dominates everything up to it with contribution `d + a[u] - M[u]`,
    /// and only a full-b candidate right of `u` can still beat it. A tie
    /// goes to the full-b candidate.
    fn right_candidate(&mut self, p: usize, d: i64) -> Option<(usize, i64)> {
        let (plain_b, plain_pos) = self.max_b.suffix_max(p + 1)?;
        match self.tree.rightmost_rebound(p + 1, d) {
            None => Some((plain_pos, plain_b)),
            Some((u, m)) => {
                let capped = d + self.a[u] - m;
                match self.max_b.suffix_max(u + 1) {
                    Some((full_b, w)) if full_b >= capped => Some((w, full_b)),
                    _ => Some((u, capped)),
                }
            }
        }
    }

    /// Position whose removal realizes the maximal contribution, the
    /// pivot `p` (contribution `delta_p`) against the best right-side
    /// candidate. An exact tie keeps the pivot in place and removes the
    /// right-side job.
    fn select_removal(&mut self, p: usize, delta_p: i64) -> usize {
        let d = self
            .tree
            .global_max_p()
            .expect("select_removal requires an alive position")
            .0;
        match self.right_candidate(p, d) {
            Some((pos, delta)) if delta >= delta_p => pos,
            _ => p,
        }
    }

    /// Permanently removes the alive position `i`. Dropping job `i` lifts
    /// the prefix sum of every surviving later position by exactly
    /// `b[i] - a[i]` (its own `c` term vanishes and its successor's `c`
    /// retargets past it), so one fused tree walk updates everything.
    /// Dead slots between `i` and its next alive neighbor ignore the add.
    fn remove_job(&mut self, i: usize) {
        assert!(self.alive[i], "removing a dead position");
        self.alive[i] = false;
        self.sum_b -= self.b[i];
        self.tree.kill_and_add(i, self.b[i] - self.a[i]);
        self.max_b.set_dead(i);
    }
}

/// Solves the bicriteria problem, producing all n + 1 Pareto optima, the
/// removal order, and a per-iteration trace, in O(n log n).
///
/// The instance is validated first and validation errors are returned
/// as-is.
pub fn solve(instance: &Instance) -> Result<ParetoResult, ValidationError> {
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
    let mut state = SolverState::new(&order);
    let (mut pivot, mut makespan) = state.find_pivot();
    points.push(ParetoPoint {
        retained: n,
        due_date: makespan,
        tardy: 0,
    });
    for iteration in 1..=n {
        let delta_p = state.pivot_contribution(pivot, makespan);
        let removed = state.select_removal(pivot, delta_p);
        let step = TraceStep {
            iteration,
            makespan_before: makespan,
            pivot_id: state.ids[pivot],
            pivot_position: pivot,
            pivot_delta: delta_p,
            removed_id: state.ids[removed],
            removed_contribution: 0, // filled in below
        };
        state.remove_job(removed);
        let (next_pivot, next_makespan) = if iteration < n {
            state.find_pivot()
        } else {
            (0, 0)
        };
        trace.push(TraceStep {
            removed_contribution: makespan - next_makespan,
            ..step
        });
        removal_order.push(step.removed_id);
        points.push(ParetoPoint {
            retained: n - iteration,
            due_date: next_makespan,
            tardy: iteration,
        });
        pivot = next_pivot;
        makespan = next_makespan;
    }
    Ok(ParetoResult {
        points,
        removal_order,
        trace,
    })
}

#[derive(Error, Clone, Debug, PartialEq, Eq)]
#[error("retained count {requested} out of range 0..={n}")]
pub struct RetainedOutOfRange {
    pub requested: usize,
    pub n: usize,
}

/// Realizes the schedule behind one Pareto point: the `k` jobs still
/// alive after `n - k` removals, in SPT order (all on time under that
/// point's due date), followed by the removed jobs in removal order (the
/// tardy set). `result` must come from solving this same `instance`.
pub fn schedule_for_k(
    result: &ParetoResult,
    instance: &Instance,
    k: usize,
) -> Result<Sequence, RetainedOutOfRange> {
    let n = instance.n();
    if k > n {
        return Err(RetainedOutOfRange { requested: k, n });
    }
    debug_assert_eq!(result.removal_order.len(), n);
    let tardy = &result.removal_order[..n - k];
    let tardy_ids: HashSet<JobId> = tardy.iter().copied().collect();
    let by_id: HashMap<JobId, Job> = instance.jobs.iter().map(|j| (j.id, *j)).collect();
    let mut seq: Sequence = spt_sort(instance)
        .into_iter()
        .filter(|j| !tardy_ids.contains(&j.id))
        .collect();
    seq.extend(tardy.iter().map(|id| {
        *by_id
            .get(id)
            .expect("removal order references a job of the instance")
    }));
    Ok(seq)
}
