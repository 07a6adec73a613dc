//! Problem model for the ordered two-machine flow shop.
//!
//! Every job runs first on machine M1 (time `a`) and then on M2 (time
//! `b`), with the ordered-machines condition `a <= b`. Sorting jobs by
//! shortest `a` (the SPT sequence) is the Johnson-optimal order under
//! that condition, and the makespan of any sequence can be computed two
//! independent ways: by simulating the two-machine recurrences, or from
//! the longest-path formula over the derived array `c[i] = a[i] - b[i-1]`.

use thiserror::Error;

/// Stable external job identifier (1-based, assigned in input order).
pub type JobId = u32;

/// One job: identity plus its processing times on the two machines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Job {
    pub id: JobId,
    /// Processing time on M1.
    pub a: u32,
    /// Processing time on M2; valid instances have `a <= b`.
    pub b: u32,
}

/// A problem instance: a set of jobs and an optional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    pub jobs: Vec<Job>,
}

impl Instance {
    /// Builds an instance from `(a, b)` pairs, assigning ids `1..=n` in
    /// input order.
    pub fn from_times(times: &[(u32, u32)]) -> Self {
        let jobs = times
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Job {
                id: (i + 1) as JobId,
                a,
                b,
            })
            .collect();
        Instance { name: None, jobs }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }
}

/// An ordered selection of jobs (a permutation of a subset of an
/// instance); the makespan operations accept any such sequence.
pub type Sequence = Vec<Job>;

/// All intermediate sums must stay below this bound: validation enforces
/// `n * max(b) < 2^62` so the solver can use plain `i64` arithmetic.
pub const SUM_HEADROOM_BOUND: u128 = 1 << 62;

#[derive(Error, Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    #[error("job {id}: processing times must be >= 1 (a={a}, b={b})")]
    NonPositiveTime { id: JobId, a: u32, b: u32 },
    #[error("job {id}: machine order violated, requires a <= b (a={a}, b={b})")]
    OrderViolation { id: JobId, a: u32, b: u32 },
    #[error("instance too large for 64-bit sums: n*max(b) = {product} >= 2^62")]
    Overflow { product: u128 },
    #[error("duplicate job id {id}")]
    DuplicateId { id: JobId },
}

fn headroom_exceeded(n: usize, max_b: u32) -> Option<u128> {
    let product = n as u128 * max_b as u128;
    (product >= SUM_HEADROOM_BOUND).then_some(product)
}

/// Checks every job for `1 <= a <= b`, id uniqueness, and the 64-bit
/// headroom bound; reports the first offending job and rule.
pub fn validate(instance: &Instance) -> Result<(), ValidationError> {
    let mut max_b: u32 = 0;
    for job in &instance.jobs {
        if job.a == 0 || job.b == 0 {
            return Err(ValidationError::NonPositiveTime {
                id: job.id,
                a: job.a,
                b: job.b,
            });
        }
        if job.a > job.b {
            return Err(ValidationError::OrderViolation {
                id: job.id,
                a: job.a,
                b: job.b,
            });
        }
        max_b = max_b.max(job.b);
    }
    if let Some(product) = headroom_exceeded(instance.n(), max_b) {
        return Err(ValidationError::Overflow { product });
    }
    let mut ids: Vec<JobId> = instance.jobs.iter().map(|j| j.id).collect();
    ids.sort_unstable();
    for pair in ids.windows(2) {
        if pair[0] == pair[1] {
            return Err(ValidationError::DuplicateId { id: pair[0] });
        }
    }
    Ok(())
}

/// Sorts all jobs by `(a, b, id)` ascending: shortest time on M1 first,
/// ties by shortest time on M2, then by id. Under `a <= b` this is the
/// Johnson-optimal sequence, and the three-level key makes the order a
/// deterministic function of the instance.
pub fn spt_sort(instance: &Instance) -> Sequence {
    let mut jobs = instance.jobs.clone();
    jobs.sort_unstable_by_key(|j| (j.a, j.b, j.id));
    jobs
}

/// Makespan of a sequence by direct simulation of the two-machine
/// recurrences: `C[i] = C[i-1] + a[i]`, `D[i] = max(C[i], D[i-1]) + b[i]`.
/// Works for any permutation; the empty sequence has makespan 0.
pub fn simulate_makespan(seq: &[Job]) -> i64 {
    let mut m1_done: i64 = 0;
    let mut m2_done: i64 = 0;
    for job in seq {
        m1_done += job.a as i64;
        m2_done = m1_done.max(m2_done) + job.b as i64;
    }
    m2_done
}

/// Makespan via the longest-path formula, with the pivot identified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MakespanReport {
    /// The makespan; doubles as the common due date under which all jobs
    /// of the sequence finish on time.
    pub cmax: i64,
    /// 1-based position where the critical path switches machines; the
    /// rightmost such position. `None` for the empty sequence.
    pub pivot_position: Option<usize>,
    /// The derived array `c[i] = a[i] - b[i-1]` (with `b[0] = 0`).
    pub c_values: Vec<i64>,
}

/// Computes the makespan as `sum(b) + max prefix sum of c` where
/// `c[i] = a[i] - b[i-1]`, `b[0] = 0`. The position attaining the max
/// (rightmost on ties) is the pivot: the job where the critical path
/// turns from M1 to M2.
pub fn formula_makespan(seq: &[Job]) -> MakespanReport {
    if seq.is_empty() {
        return MakespanReport {
            cmax: 0,
            pivot_position: None,
            c_values: Vec::new(),
        };
    }
    let mut c_values = Vec::with_capacity(seq.len());
    let mut prev_b: i64 = 0;
    for job in seq {
        c_values.push(job.a as i64 - prev_b);
        prev_b = job.b as i64;
    }
    let sum_b: i64 = seq.iter().map(|j| j.b as i64).sum();
    let mut running = 0i64;
    let mut best = i64::MIN;
    let mut best_pos = 0usize;
    for (i, &c) in c_values.iter().enumerate() {
        running += c;
        if running >= best {
            best = running;
            best_pos = i + 1;
        }
    }
    MakespanReport {
        cmax: sum_b + best,
        pivot_position: Some(best_pos),
        c_values,
    }
}
