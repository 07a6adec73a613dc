//! The solver's workhorse: a lazy segment tree over the prefix sums
//! `P[k] = c[1] + ... + c[k]` of the derived cost array, augmented so one
//! descent answers the greedy's selection queries, plus a compact
//! side tree over the `b` values.
//!
//! Both trees round the leaf count up to a power of two (padding slots
//! are permanently dead), so nodes pack densely and every query is one
//! root-to-leaf walk. Each [`SolverTree`] node covers a range of SPT
//! positions and stores, over the alive positions inside it:
//!
//! * `max_p` / `max_p_pos` - maximum `P[k]` and its rightmost position
//! * `max_ba` - maximum of `b[q] - a[q]`
//! * `psi` - maximum of `b[q] - a[q] + max P in-segment right of q`
//!
//! `psi` composes: for the left child's positions, the in-segment suffix
//! max gains the right child's `max_p`, so
//! `psi = max(psi_l, psi_r, max_ba_l + max_p_r)`. With an external suffix
//! maximum carried right-to-left, this pinpoints the rightmost position
//! where `b[q] - a[q] + (max P right of q) > d` in one `O(log n)` walk;
//! that position is where removing the job would push a later prefix sum
//! above the current makespan peak.
//!
//! Removing a job shifts every later prefix sum by a constant, which is
//! the `suffix_add` lazy update; the job's own slot turns into a neutral
//! element (`NEG` sentinels) that no aggregate can see. Validation keeps
//! every real `|P|` strictly below `2^62`, so `NEG = -2^62` cannot
//! collide with a live value and shifted sums cannot overflow.
//!
//! [`MaxBTree`] keeps the maximum `b` with its rightmost position over
//! alive suffixes. Suffix adds never touch `b`, so it needs no lazy
//! layer and its 8-byte nodes stay cache-resident while the main tree
//! churns.

const NEG: i64 = -(1 << 62);

#[derive(Clone, Copy, Debug)]
struct Node {
    max_p: i64,
    max_ba: i64,
    psi: i64,
    lazy: i64,
    max_p_pos: u32,
}

impl Node {
    fn dead(pos: u32) -> Self {
        Node {
            max_p: NEG,
            max_ba: NEG,
            psi: NEG,
            lazy: 0,
            max_p_pos: pos,
        }
    }
}

/// Rightmost index wins ties, matching the pivot convention.
#[inline]
fn pick_max(lv: i64, lp: u32, rv: i64, rp: u32) -> (i64, u32) {
    if rv >= lv {
        (rv, rp)
    } else {
        (lv, lp)
    }
}

pub(crate) struct SolverTree {
    len: usize,
    /// Leaf count rounded up to a power of two; leaf `pos` lives at
    /// node index `base + pos - 1`.
    base: usize,
    nodes: Vec<Node>,
}

impl SolverTree {
    /// Builds over positions `1..=n`: `p[i]`, `b[i]`, `a[i]` are the
    /// initial prefix sums and processing times (index 0 unused).
    pub(crate) fn build(p: &[i64], b: &[i64], a: &[i64]) -> Self {
        let len = p.len() - 1;
        let base = len.next_power_of_two().max(1);
        let mut nodes = vec![Node::dead(0); 2 * base];
        for i in 1..=len {
            nodes[base + i - 1] = Node {
                max_p: p[i],
                max_ba: b[i] - a[i],
                psi: NEG,
                lazy: 0,
                max_p_pos: i as u32,
            };
        }
        let mut tree = SolverTree { len, base, nodes };
        for node in (1..base).rev() {
            tree.pull(node);
        }
        tree
    }

    fn pull(&mut self, node: usize) {
        let l = self.nodes[2 * node];
        let r = self.nodes[2 * node + 1];
        let (max_p, max_p_pos) = pick_max(l.max_p, l.max_p_pos, r.max_p, r.max_p_pos);
        let cur = &mut self.nodes[node];
        cur.max_p = max_p;
        cur.max_p_pos = max_p_pos;
        cur.max_ba = l.max_ba.max(r.max_ba);
        cur.psi = l.psi.max(r.psi).max(saturating(l.max_ba, r.max_p));
    }

    /// Shifts a node's alive prefix sums by `delta`; sentinels stay put.
    fn apply(&mut self, node: usize, delta: i64) {
        let cur = &mut self.nodes[node];
        if cur.max_p != NEG {
            cur.max_p += delta;
        }
        if cur.psi != NEG {
            cur.psi += delta;
        }
        cur.lazy += delta;
    }

    fn push(&mut self, node: usize) {
        let lazy = self.nodes[node].lazy;
        if lazy != 0 {
            self.apply(2 * node, lazy);
            self.apply(2 * node + 1, lazy);
            self.nodes[node].lazy = 0;
        }
    }

    /// Adds `delta` to `P[k]` for all `k >= from`. Kept as the two-step
    /// reference for [`Self::kill_and_add`] in the differential tests.
    #[cfg(test)]
    pub(crate) fn suffix_add(&mut self, from: usize, delta: i64) {
        if from <= self.len && delta != 0 {
            self.add_rec(1, 1, self.base, from, delta);
        }
    }

    #[cfg(test)]
    fn add_rec(&mut self, node: usize, lo: usize, hi: usize, from: usize, delta: i64) {
        if from <= lo {
            self.apply(node, delta);
            return;
        }
        if hi < from {
            return;
        }
        self.push(node);
        let mid = (lo + hi) / 2;
        self.add_rec(2 * node, lo, mid, from, delta);
        self.add_rec(2 * node + 1, mid + 1, hi, from, delta);
        self.pull(node);
    }

    /// Turns `pos` into a neutral slot: no aggregate reports it again.
    #[cfg(test)]
    pub(crate) fn set_dead(&mut self, pos: usize) {
        debug_assert!(pos >= 1 && pos <= self.len);
        self.dead_rec(1, 1, self.base, pos);
    }

    #[cfg(test)]
    fn dead_rec(&mut self, node: usize, lo: usize, hi: usize, pos: usize) {
        if lo == hi {
            self.nodes[node] = Node::dead(pos as u32);
            return;
        }
        self.push(node);
        let mid = (lo + hi) / 2;
        if pos <= mid {
            self.dead_rec(2 * node, lo, mid, pos);
        } else {
            self.dead_rec(2 * node + 1, mid + 1, hi, pos);
        }
        self.pull(node);
    }

    /// One walk for a removal at `pos`: kills the slot and adds `delta`
    /// to every `P[k]` with `k > pos`. Equivalent to `set_dead(pos)` plus
    /// `suffix_add(pos + 1, delta)`.
    pub(crate) fn kill_and_add(&mut self, pos: usize, delta: i64) {
        debug_assert!(pos >= 1 && pos <= self.len);
        self.kill_add_rec(1, 1, self.base, pos, delta);
    }

    fn kill_add_rec(&mut self, node: usize, lo: usize, hi: usize, pos: usize, delta: i64) {
        if lo == hi {
            self.nodes[node] = Node::dead(pos as u32);
            return;
        }
        self.push(node);
        let mid = (lo + hi) / 2;
        if pos <= mid {
            self.kill_add_rec(2 * node, lo, mid, pos, delta);
            if delta != 0 {
                self.apply(2 * node + 1, delta);
            }
        } else {
            self.kill_add_rec(2 * node + 1, mid + 1, hi, pos, delta);
        }
        self.pull(node);
    }

    /// Maximum prefix sum over all alive positions with its rightmost
    /// position; `None` once every position is dead.
    pub(crate) fn global_max_p(&self) -> Option<(i64, usize)> {
        let root = &self.nodes[1];
        (root.max_p != NEG).then_some((root.max_p, root.max_p_pos as usize))
    }

    /// Maximum alive `P[k]` on each side of `pos`: over `k < pos` and
    /// over `k > pos`. One read-only walk instead of two range queries:
    /// pending shifts accumulate down the path instead of being pushed,
    /// exact because a pending shift applies uniformly to its subtree.
    pub(crate) fn sides_around(&self, pos: usize) -> (Option<i64>, Option<i64>) {
        debug_assert!(pos >= 1 && pos <= self.len);
        let mut left = NEG;
        let mut right = NEG;
        let (mut node, mut lo, mut hi) = (1, 1, self.base);
        let mut pending = 0i64;
        while lo < hi {
            pending += self.nodes[node].lazy;
            let mid = (lo + hi) / 2;
            if pos <= mid {
                let sibling = self.nodes[2 * node + 1].max_p;
                if sibling != NEG {
                    right = right.max(sibling + pending);
                }
                node *= 2;
                hi = mid;
            } else {
                let sibling = self.nodes[2 * node].max_p;
                if sibling != NEG {
                    left = left.max(sibling + pending);
                }
                node = 2 * node + 1;
                lo = mid + 1;
            }
        }
        ((left != NEG).then_some(left), (right != NEG).then_some(right))
    }

    /// Maximum `P[k]` over alive `k` in `[lo, hi]`; `None` if none alive.
    #[cfg(test)]
    pub(crate) fn range_max_p(&mut self, lo: usize, hi: usize) -> Option<(i64, usize)> {
        if lo > hi {
            return None;
        }
        debug_assert!(lo >= 1 && hi <= self.len);
        let (v, pos) = self.max_p_rec(1, 1, self.base, lo, hi);
        (v != NEG).then_some((v, pos as usize))
    }

    #[cfg(test)]
    fn max_p_rec(&mut self, node: usize, nl: usize, nr: usize, lo: usize, hi: usize) -> (i64, u32) {
        if lo <= nl && nr <= hi {
            return (self.nodes[node].max_p, self.nodes[node].max_p_pos);
        }
        self.push(node);
        let mid = (nl + nr) / 2;
        if hi <= mid {
            self.max_p_rec(2 * node, nl, mid, lo, hi)
        } else if lo > mid {
            self.max_p_rec(2 * node + 1, mid + 1, nr, lo, hi)
        } else {
            let (lv, lp) = self.max_p_rec(2 * node, nl, mid, lo, hi);
            let (rv, rp) = self.max_p_rec(2 * node + 1, mid + 1, nr, lo, hi);
            pick_max(lv, lp, rv, rp)
        }
    }

    /// Rightmost alive `q >= lo` whose removal rebounds past the current
    /// peak `d`: `b[q] - a[q] + (max alive P right of q) > d`. Returns the
    /// position and that suffix maximum (needed for the drop formula).
    /// Read-only: pending shifts ride down as `pending` like in
    /// [`Self::sides_around`]; `b - a` values never shift.
    pub(crate) fn rightmost_rebound(&self, lo: usize, d: i64) -> Option<(usize, i64)> {
        if lo > self.len {
            return None;
        }
        self.rebound_rec(1, 1, self.base, lo, d, NEG, 0)
    }

    #[allow(clippy::too_many_arguments)]
    fn rebound_rec(
        &self,
        node: usize,
        nl: usize,
        nr: usize,
        lo: usize,
        d: i64,
        m_ext: i64,
        pending: i64,
    ) -> Option<(usize, i64)> {
        if nr < lo {
            return None;
        }
        let cur = self.nodes[node];
        let cur_psi = if cur.psi == NEG { NEG } else { cur.psi + pending };
        if lo <= nl {
            // fully inside: prune unless some q here can beat d
            if cur_psi.max(saturating(cur.max_ba, m_ext)) <= d {
                return None;
            }
            if nl == nr {
                return Some((nl, m_ext));
            }
        }
        if nl == nr {
            return None;
        }
        let below = pending + cur.lazy;
        let mid = (nl + nr) / 2;
        let right = self.nodes[2 * node + 1];
        self.rebound_rec(2 * node + 1, mid + 1, nr, lo, d, m_ext, below)
            .or_else(|| {
                let m_left = if right.max_p == NEG {
                    m_ext
                } else {
                    m_ext.max(right.max_p + below)
                };
                self.rebound_rec(2 * node, nl, mid, lo, d, m_left, below)
            })
    }
}

/// `x + y` where either side may be the `NEG` sentinel; the result stays
/// low enough to lose every comparison instead of wrapping.
#[inline]
fn saturating(x: i64, y: i64) -> i64 {
    x.saturating_add(y)
}

/// Maximum `b` with its rightmost position over alive suffixes. Dead
/// slots hold 0, below every real processing time.
pub(crate) struct MaxBTree {
    len: usize,
    base: usize,
    /// `(b, pos)` pairs; node 1 is the root, leaves start at `base`.
    nodes: Vec<(u32, u32)>,
}

impl MaxBTree {
    /// Builds over `b[1..=n]` (index 0 unused).
    pub(crate) fn build(b: &[i64]) -> Self {
        let len = b.len() - 1;
        let base = len.next_power_of_two().max(1);
        let mut nodes = vec![(0u32, 0u32); 2 * base];
        for i in 1..=len {
            nodes[base + i - 1] = (b[i] as u32, i as u32);
        }
        for node in (1..base).rev() {
            nodes[node] = Self::merge(nodes[2 * node], nodes[2 * node + 1]);
        }
        MaxBTree { len, base, nodes }
    }

    fn merge(l: (u32, u32), r: (u32, u32)) -> (u32, u32) {
        if r.0 >= l.0 {
            r
        } else {
            l
        }
    }

    pub(crate) fn set_dead(&mut self, pos: usize) {
        debug_assert!(pos >= 1 && pos <= self.len);
        let mut node = self.base + pos - 1;
        self.nodes[node] = (0, 0);
        node /= 2;
        while node >= 1 {
            self.nodes[node] = Self::merge(self.nodes[2 * node], self.nodes[2 * node + 1]);
            node /= 2;
        }
    }

    /// Maximum `b` over alive positions in `[lo, len]` with its rightmost
    /// position; `None` when the suffix holds no alive job.
    pub(crate) fn suffix_max(&self, lo: usize) -> Option<(i64, usize)> {
        if lo > self.len {
            return None;
        }
        debug_assert!(lo >= 1);
        let (v, pos) = self.suffix_rec(1, 1, self.base, lo);
        (v > 0).then_some((v as i64, pos as usize))
    }

    fn suffix_rec(&self, node: usize, nl: usize, nr: usize, lo: usize) -> (u32, u32) {
        if lo <= nl {
            return self.nodes[node];
        }
        if nr < lo {
            return (0, 0);
        }
        let mid = (nl + nr) / 2;
        let l = self.suffix_rec(2 * node, nl, mid, lo);
        let r = self.suffix_rec(2 * node + 1, mid + 1, nr, lo);
        Self::merge(l, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Scan mirror of both trees over explicit state.
    struct Naive {
        p: Vec<i64>,
        b: Vec<i64>,
        a: Vec<i64>,
        alive: Vec<bool>,
    }

    impl Naive {
        fn alive_range(&self, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
            (lo..=hi).filter(|&i| self.alive[i])
        }

        fn max_p(&self, lo: usize, hi: usize) -> Option<(i64, usize)> {
            let mut best: Option<(i64, usize)> = None;
            for i in self.alive_range(lo, hi) {
                if best.is_none_or(|(v, _)| self.p[i] >= v) {
                    best = Some((self.p[i], i));
                }
            }
            best
        }

        fn max_b(&self, lo: usize, hi: usize) -> Option<(i64, usize)> {
            let mut best: Option<(i64, usize)> = None;
            for i in self.alive_range(lo, hi) {
                if best.is_none_or(|(v, _)| self.b[i] >= v) {
                    best = Some((self.b[i], i));
                }
            }
            best
        }

        fn sides_around(&self, pos: usize) -> (Option<i64>, Option<i64>) {
            let n = self.p.len() - 1;
            let left = self.max_p(1, pos - 1).map(|(v, _)| v);
            let right = self.max_p(pos + 1, n).map(|(v, _)| v);
            (left, right)
        }

        fn rightmost_rebound(&self, lo: usize, d: i64) -> Option<(usize, i64)> {
            let n = self.p.len() - 1;
            for q in (lo..=n).rev() {
                if !self.alive[q] {
                    continue;
                }
                if let Some((m, _)) = self.max_p(q + 1, n) {
                    if self.b[q] - self.a[q] + m > d {
                        return Some((q, m));
                    }
                }
            }
            None
        }
    }

    fn build_pair(rng: &mut ChaCha8Rng, n: usize) -> (SolverTree, MaxBTree, Naive) {
        let mut p = vec![0i64; n + 1];
        let mut b = vec![0i64; n + 1];
        let mut a = vec![0i64; n + 1];
        let mut sum = 0i64;
        for i in 1..=n {
            b[i] = rng.random_range(1..=12);
            a[i] = rng.random_range(1..=b[i]);
            sum += rng.random_range(-6..=6);
            p[i] = sum;
        }
        let tree = SolverTree::build(&p, &b, &a);
        let btree = MaxBTree::build(&b);
        let naive = Naive {
            p,
            b,
            a,
            alive: vec![true; n + 1],
        };
        (tree, btree, naive)
    }

    #[test]
    fn known_small_tree() {
        // p = [1, -1, -1], b = [4, 3, 5]
        let p = vec![0, 1, -1, -1];
        let b = vec![0, 4, 3, 5];
        let a = vec![0, 1, 2, 3];
        let mut t = SolverTree::build(&p, &b, &a);
        let mut bt = MaxBTree::build(&b);
        assert_eq!(t.global_max_p(), Some((1, 1)));
        assert_eq!(bt.suffix_max(2), Some((5, 3)));
        assert_eq!(bt.suffix_max(1), Some((5, 3)));
        assert_eq!(t.range_max_p(2, 3), Some((-1, 3)));
        assert_eq!(t.sides_around(2), (Some(1), Some(-1)));
        // no removal rebounds past d = 1 here
        assert_eq!(t.rightmost_rebound(2, 1), None);

        t.set_dead(3);
        bt.set_dead(3);
        t.suffix_add(3, 0);
        assert_eq!(bt.suffix_max(2), Some((3, 2)));
        t.kill_and_add(2, 2);
        bt.set_dead(2);
        assert_eq!(t.global_max_p(), Some((1, 1)));
        assert_eq!(t.sides_around(1), (None, None));
        assert_eq!(bt.suffix_max(2), None);
        t.set_dead(1);
        assert_eq!(t.global_max_p(), None);
    }

    #[test]
    fn rebound_detects_the_rightmost_offender() {
        // p = [10, 9, -70], b = [11, 100, 21], a = [10, 10, 21]:
        // removing position 2 lifts P[3] by 90, well past d = 10
        let p = vec![0, 10, 9, -70];
        let b = vec![0, 11, 100, 21];
        let a = vec![0, 10, 10, 21];
        let t = SolverTree::build(&p, &b, &a);
        assert_eq!(t.rightmost_rebound(2, 10), Some((2, -70)));
        // the last alive position never rebounds (nothing to its right)
        assert_eq!(t.rightmost_rebound(3, 10), None);
    }

    #[test]
    fn ties_resolve_to_the_rightmost_position() {
        let p = vec![0, 5, 5, 4];
        let b = vec![0, 7, 7, 3];
        let a = vec![0, 1, 2, 3];
        let mut t = SolverTree::build(&p, &b, &a);
        let bt = MaxBTree::build(&b);
        assert_eq!(t.global_max_p(), Some((5, 2)));
        assert_eq!(bt.suffix_max(1), Some((7, 2)));
        assert_eq!(t.range_max_p(1, 1), Some((5, 1)));
    }

    #[test]
    fn kill_and_add_equals_the_two_step_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.random_range(1..=33);
            let (mut fused, _, mut naive) = build_pair(&mut rng, n);
            let pos = rng.random_range(1..=n);
            let delta = rng.random_range(-9..=9);
            fused.kill_and_add(pos, delta);
            naive.alive[pos] = false;
            for i in pos + 1..=n {
                naive.p[i] += delta;
            }
            assert_eq!(fused.global_max_p(), naive.max_p(1, n));
            for lo in 1..=n {
                assert_eq!(fused.range_max_p(lo, n), naive.max_p(lo, n));
            }
        }
    }

    #[test]
    fn matches_naive_under_random_operations() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        for _ in 0..40 {
            let n = rng.random_range(1..=48);
            let (mut tree, mut btree, mut naive) = build_pair(&mut rng, n);
            for _ in 0..80 {
                match rng.random_range(0..4) {
                    0 => {
                        let pos = rng.random_range(1..=n);
                        if naive.alive[pos] {
                            tree.set_dead(pos);
                            btree.set_dead(pos);
                            naive.alive[pos] = false;
                        }
                    }
                    1 => {
                        let from = rng.random_range(1..=n);
                        let delta = rng.random_range(-9..=9);
                        tree.suffix_add(from, delta);
                        for i in from..=n {
                            naive.p[i] += delta;
                        }
                    }
                    2 => {
                        let pos = rng.random_range(1..=n);
                        if naive.alive[pos] {
                            let delta = rng.random_range(-9..=9);
                            tree.kill_and_add(pos, delta);
                            btree.set_dead(pos);
                            naive.alive[pos] = false;
                            for i in pos + 1..=n {
                                naive.p[i] += delta;
                            }
                        }
                    }
                    _ => {}
                }
                let lo = rng.random_range(1..=n);
                let hi = rng.random_range(lo..=n);
                assert_eq!(tree.range_max_p(lo, hi), naive.max_p(lo, hi));
                assert_eq!(btree.suffix_max(lo), naive.max_b(lo, n));
                assert_eq!(tree.global_max_p(), naive.max_p(1, n));
                assert_eq!(tree.sides_around(lo), naive.sides_around(lo));
                let d = rng.random_range(-10..=20);
                assert_eq!(tree.rightmost_rebound(lo, d), naive.rightmost_rebound(lo, d));
            }
        }
    }
}
