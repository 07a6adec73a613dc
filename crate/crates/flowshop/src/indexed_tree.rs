//! An indexed aggregate tree over a mutable `i64` array.
//!
//! One structure answers, in `O(log n)` per call, every query the solver
//! needs against a point-mutable array `A[1..=n]`:
//!
//! * `prefix_sum(i)` - `A[1] + ... + A[i]`
//! * `prefix_max(i)` / `prefix_min(i)` - extremum of `A[1..=i]` with an
//!   attaining index
//! * `suffix_max(i)` - maximum of `A[i..=n]` with an attaining index
//! * `max_prefix_sums(i)` / `min_prefix_sums(i)` - extremum over
//!   `k in [1, i]` of `A[1] + ... + A[k]`, with an attaining `k`
//!
//! Ties between equal extrema are resolved by a [`TiePolicy`] fixed at
//! construction, so node merges stay branch-free and every query reports
//! the same index the policy dictates.
//!
//! Internally this is an array-backed complete binary tree (leaves at
//! `n..2n`), not a Fenwick layout: each node carries the segment sum plus
//! the four extremum aggregates, which keeps `point_set` and every query
//! at a strict `O(log n)`.
//!
//! Values must leave headroom for sums: callers guarantee that every
//! intermediate sum fits `i64` (the solver validates `n * max(b) < 2^62`
//! up front). Indices are 1-based; position 0 names the empty prefix.

/// Which index an extremum query reports among equal values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiePolicy {
    Leftmost,
    Rightmost,
}

impl TiePolicy {
    /// True when the right-hand candidate of a merge wins against an
    /// equal left-hand one.
    #[inline]
    fn right_wins_tie(self) -> bool {
        matches!(self, TiePolicy::Rightmost)
    }
}

/// Per-node aggregates of one contiguous segment.
///
/// `max_pre`/`min_pre` are extrema of partial sums *relative to the start
/// of the segment*; merging rebases the right child by the left child's
/// total sum, so at the root of a query range they are the range's
/// prefix-sum extrema.
#[derive(Clone, Copy, Debug)]
struct NodeAgg {
    sum: i64,
    max_val: i64,
    max_idx: u32,
    min_val: i64,
    min_idx: u32,
    max_pre: i64,
    max_pre_idx: u32,
    min_pre: i64,
    min_pre_idx: u32,
}

impl NodeAgg {
    #[inline]
    fn leaf(value: i64, position: u32) -> Self {
        NodeAgg {
            sum: value,
            max_val: value,
            max_idx: position,
            min_val: value,
            min_idx: position,
            max_pre: value,
            max_pre_idx: position,
            min_pre: value,
            min_pre_idx: position,
        }
    }
}

#[inline]
fn pick_max(policy: TiePolicy, lv: i64, li: u32, rv: i64, ri: u32) -> (i64, u32) {
    if rv > lv || (rv == lv && policy.right_wins_tie()) {
        (rv, ri)
    } else {
        (lv, li)
    }
}

#[inline]
fn pick_min(policy: TiePolicy, lv: i64, li: u32, rv: i64, ri: u32) -> (i64, u32) {
    if rv < lv || (rv == lv && policy.right_wins_tie()) {
        (rv, ri)
    } else {
        (lv, li)
    }
}

/// Merge two adjacent segments; `left` must precede `right` in array order.
#[inline]
fn merge(policy: TiePolicy, left: &NodeAgg, right: &NodeAgg) -> NodeAgg {
    let (max_val, max_idx) = pick_max(
        policy,
        left.max_val,
        left.max_idx,
        right.max_val,
        right.max_idx,
    );
    let (min_val, min_idx) = pick_min(
        policy,
        left.min_val,
        left.min_idx,
        right.min_val,
        right.min_idx,
    );
    // A prefix of the merged segment either ends inside `left` or spans
    // all of `left` plus a prefix of `right`.
    let (max_pre, max_pre_idx) = pick_max(
        policy,
        left.max_pre,
        left.max_pre_idx,
        left.sum + right.max_pre,
        right.max_pre_idx,
    );
    let (min_pre, min_pre_idx) = pick_min(
        policy,
        left.min_pre,
        left.min_pre_idx,
        left.sum + right.min_pre,
        right.min_pre_idx,
    );
    NodeAgg {
        sum: left.sum + right.sum,
        max_val,
        max_idx,
        min_val,
        min_idx,
        max_pre,
        max_pre_idx,
        min_pre,
        min_pre_idx,
    }
}

/// Point-mutable integer array with logarithmic prefix/suffix aggregate
/// queries. See the module docs for the operation set.
#[derive(Clone, Debug)]
pub struct IndexedTree {
    len: usize,
    policy: TiePolicy,
    /// `2 * len` nodes, leaves at `len..2 * len`; empty when `len == 0`.
    nodes: Vec<NodeAgg>,
}

impl IndexedTree {
    /// Builds a tree over `values` in `O(n)`. The tree is immediately
    /// queryable; an empty slice yields a tree where only the empty-range
    /// conventions apply.
    pub fn build(values: &[i64], policy: TiePolicy) -> Self {
        let len = values.len();
        if len == 0 {
            return IndexedTree {
                len,
                policy,
                nodes: Vec::new(),
            };
        }
        let mut nodes = vec![NodeAgg::leaf(0, 0); 2 * len];
        for (i, &v) in values.iter().enumerate() {
            nodes[len + i] = NodeAgg::leaf(v, (i + 1) as u32);
        }
        for i in (1..len).rev() {
            nodes[i] = merge(policy, &nodes[2 * i], &nodes[2 * i + 1]);
        }
        IndexedTree { len, policy, nodes }
    }

    /// Number of slots.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn tie_policy(&self) -> TiePolicy {
        self.policy
    }

    /// Current value of `A[i]`, `1 <= i <= len`.
    pub fn value(&self, i: usize) -> i64 {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of range 1..={}",
            self.len
        );
        self.nodes[self.len + i - 1].sum
    }

    /// Sets `A[i] = value`.
    pub fn point_set(&mut self, i: usize, value: i64) {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of range 1..={}",
            self.len
        );
        let mut idx = self.len + i - 1;
        self.nodes[idx] = NodeAgg::leaf(value, i as u32);
        idx >>= 1;
        while idx >= 1 {
            self.nodes[idx] = merge(self.policy, &self.nodes[2 * idx], &self.nodes[2 * idx + 1]);
            idx >>= 1;
        }
    }

    /// Adds `delta` to `A[i]`.
    pub fn point_add(&mut self, i: usize, delta: i64) {
        let current = self.value(i);
        self.point_set(i, current + delta);
    }

    /// Ordered fold of the nodes covering `[lo, hi)` (0-based, half-open).
    /// Returns `None` for an empty range.
    fn range_agg(&self, lo: usize, hi: usize) -> Option<NodeAgg> {
        debug_assert!(lo <= hi && hi <= self.len);
        let mut l = lo + self.len;
        let mut r = hi + self.len;
        let mut left: Option<NodeAgg> = None;
        let mut right: Option<NodeAgg> = None;
        while l < r {
            if l & 1 == 1 {
                left = Some(match left {
                    None => self.nodes[l],
                    Some(acc) => merge(self.policy, &acc, &self.nodes[l]),
                });
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                right = Some(match right {
                    None => self.nodes[r],
                    Some(acc) => merge(self.policy, &self.nodes[r], &acc),
                });
            }
            l >>= 1;
            r >>= 1;
        }
        match (left, right) {
            (Some(a), Some(b)) => Some(merge(self.policy, &a, &b)),
            (Some(a), None) => Some(a),
            (None, b) => b,
        }
    }

    /// `A[1] + ... + A[i]`; the empty prefix `i == 0` sums to 0.
    pub fn prefix_sum(&self, i: usize) -> i64 {
        assert!(i <= self.len, "position {i} out of range 0..={}", self.len);
        match self.range_agg(0, i) {
            None => 0,
            Some(agg) => agg.sum,
        }
    }

    /// Maximum of `A[1..=i]` with an attaining index, `1 <= i <= len`.
    /// There is no neutral element, so the empty prefix is rejected.
    pub fn prefix_max(&self, i: usize) -> (i64, usize) {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of range 1..={}",
            self.len
        );
        let agg = self.range_agg(0, i).expect("non-empty range");
        (agg.max_val, agg.max_idx as usize)
    }

    /// Minimum of `A[1..=i]` with an attaining index, `1 <= i <= len`.
    pub fn prefix_min(&self, i: usize) -> (i64, usize) {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of range 1..={}",
            self.len
        );
        let agg = self.range_agg(0, i).expect("non-empty range");
        (agg.min_val, agg.min_idx as usize)
    }

    /// Maximum of `A[i..=len]` with an attaining index, `1 <= i <= len`.
    /// Empty suffixes are rejected; callers guard `i <= len`.
    pub fn suffix_max(&self, i: usize) -> (i64, usize) {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} out of range 1..={}",
            self.len
        );
        let agg = self.range_agg(i - 1, self.len).expect("non-empty range");
        (agg.max_val, agg.max_idx as usize)
    }

    /// Maximum over `k in [1, i]` of `A[1] + ... + A[k]`, with an attaining
    /// `k`. The empty range `i == 0` yields `(0, None)`, matching
    /// `prefix_sum(0) == 0`.
    pub fn max_prefix_sums(&self, i: usize) -> (i64, Option<usize>) {
        assert!(i <= self.len, "position {i} out of range 0..={}", self.len);
        match self.range_agg(0, i) {
            None => (0, None),
            Some(agg) => (agg.max_pre, Some(agg.max_pre_idx as usize)),
        }
    }

    /// Minimum over `k in [1, i]` of `A[1] + ... + A[k]`, with an attaining
    /// `k`; `i == 0` yields `(0, None)`.
    pub fn min_prefix_sums(&self, i: usize) -> (i64, Option<usize>) {
        assert!(i <= self.len, "position {i} out of range 0..={}", self.len);
        match self.range_agg(0, i) {
            None => (0, None),
            Some(agg) => (agg.min_pre, Some(agg.min_pre_idx as usize)),
        }
    }
}
