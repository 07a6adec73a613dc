//! Bicriteria scheduling for the ordered two-machine flow shop.
//!
//! Every job needs `a` time units on machine M1 followed by `b` on M2,
//! with `a <= b`. Two objectives compete: the common due date `d` that
//! all on-time jobs must meet, and the number of tardy jobs. [`solve`]
//! produces the complete Pareto front, one optimal due date for every
//! possible on-time count `k in {n, ..., 0}`, in `O(n log n)` total: a
//! greedy loop removes the job with the largest exact makespan
//! contribution, answering each iteration's queries from an augmented
//! segment tree over the derived cost array of the SPT sequence.
//!
//! # Example
//!
//! ```
//! use flowshop::{solve, Instance};
//!
//! let instance = Instance::from_times(&[(1, 4), (2, 3), (3, 5)]);
//! let result = solve(&instance).unwrap();
//! let front: Vec<(usize, i64)> = result
//!     .points
//!     .iter()
//!     .map(|p| (p.retained, p.due_date))
//!     .collect();
//! assert_eq!(front, vec![(3, 13), (2, 8), (1, 5), (0, 0)]);
//! ```
//!
//! The [`oracles`] module ships slow reference implementations (an
//! `O(n^2)` solver with identical outputs, an exhaustive subset
//! enumeration, and a scan-based mirror of the tree) used by the test
//! suite to cross-check the fast path.

pub mod indexed_tree;
pub mod model;
pub mod oracles;
pub mod solver;
mod solver_tree;

pub use indexed_tree::{IndexedTree, TiePolicy};
pub use model::{
    formula_makespan, simulate_makespan, spt_sort, validate, Instance, Job, JobId, MakespanReport,
    Sequence, ValidationError, SUM_HEADROOM_BOUND,
};
pub use oracles::{
    brute_force_front, quadratic, NaivePrefixStats, OracleError, BRUTE_FORCE_DEFAULT_LIMIT,
    BRUTE_FORCE_HARD_CAP,
};
pub use solver::{schedule_for_k, solve, ParetoPoint, ParetoResult, RetainedOutOfRange, TraceStep};
