//! Maximum-weight set of pairwise disjoint closed intervals by the classic
//! sort-by-endpoint schedule.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::geometry::{Id, Interval, Weight};
use crate::reps::{MisResult, SolveStats};

/// O(n log n) weighted interval scheduling. Intervals are closed, so
/// touching intervals conflict; weights may be zero.
pub fn interval_mwis(intervals: &[Interval], weights: &BTreeMap<Id, Weight>) -> MisResult {
    let start = Instant::now();
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&i| (intervals[i].hi, intervals[i].lo, intervals[i].id));
    let sorted: Vec<&Interval> = order.iter().map(|&i| &intervals[i]).collect();
    let n = sorted.len();

    // pred[i]: number of intervals (prefix length) ending strictly left of
    // sorted[i]'s start; hi < lo because closed intervals touching conflict.
    let his: Vec<i64> = sorted.iter().map(|iv| iv.hi).collect();
    let pred: Vec<usize> = sorted.iter().map(|iv| his.partition_point(|&h| h < iv.lo)).collect();

    let mut dp = vec![0 as Weight; n + 1];
    for i in 1..=n {
        let w = weights.get(&sorted[i - 1].id).copied().unwrap_or(1);
        dp[i] = dp[i - 1].max(dp[pred[i - 1]] + w);
    }

    let mut chosen = Vec::new();
    let mut i = n;
    while i > 0 {
        if dp[i] == dp[i - 1] {
            i -= 1; // prefer skipping on ties
        } else {
            chosen.push(sorted[i - 1].id);
            i = pred[i - 1];
        }
    }
    chosen.sort_unstable();

    let value = dp[n];
    assert_eq!(
        value,
        chosen.iter().map(|id| weights.get(id).copied().unwrap_or(1)).sum::<Weight>(),
        "schedule value does not match the chosen set"
    );
    let by_id: std::collections::BTreeMap<Id, &Interval> =
        intervals.iter().map(|iv| (iv.id, iv)).collect();
    for a in 0..chosen.len() {
        for b in (a + 1)..chosen.len() {
            let (x, y) = (by_id[&chosen[a]], by_id[&chosen[b]]);
            assert!(x.hi < y.lo || y.hi < x.lo, "chosen intervals overlap");
        }
    }
    let stats = SolveStats { subproblems: n as u64, wall: start.elapsed(), ..Default::default() };
    MisResult { chosen, value, stats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(id: Id, lo: i64, hi: i64) -> Interval {
        Interval::new(id, lo, hi)
    }

    fn weights(pairs: &[(Id, Weight)]) -> BTreeMap<Id, Weight> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn disjoint_unit_intervals() {
        let ivs = [iv(0, 0, 1), iv(1, 2, 3), iv(2, 4, 5)];
        let r = interval_mwis(&ivs, &weights(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(r.value, 3);
        assert_eq!(r.chosen, vec![0, 1, 2]);
    }

    #[test]
    fn all_share_a_point() {
        let ivs = [iv(0, 0, 5), iv(1, 0, 3), iv(2, 0, 1)];
        let r = interval_mwis(&ivs, &weights(&[(0, 2), (1, 7), (2, 4)]));
        assert_eq!(r.value, 7);
        assert_eq!(r.chosen, vec![1]);
    }

    #[test]
    fn split_beats_long() {
        // {[0,3] w=5, [0,1] w=3, [2,3] w=3}: all 8 subsets say 6 is optimal.
        let ivs = [iv(0, 0, 3), iv(1, 0, 1), iv(2, 2, 3)];
        let w = weights(&[(0, 5), (1, 3), (2, 3)]);
        let mut best = 0;
        for mask in 0u32..8 {
            let set: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            let ok = set.iter().all(|&i| {
                set.iter().all(|&j| i == j || ivs[i].hi < ivs[j].lo || ivs[j].hi < ivs[i].lo)
            });
            if ok {
                best = best.max(set.iter().map(|&i| w[&ivs[i].id]).sum());
            }
        }
        assert_eq!(best, 6);
        let r = interval_mwis(&ivs, &w);
        assert_eq!(r.value, 6);
        assert_eq!(r.chosen, vec![1, 2]);
    }

    #[test]
    fn touching_intervals_conflict() {
        let ivs = [iv(0, 0, 2), iv(1, 2, 4)];
        let r = interval_mwis(&ivs, &weights(&[(0, 1), (1, 1)]));
        assert_eq!(r.value, 1);
    }

    #[test]
    fn matches_brute_force_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let ivs: Vec<Interval> = (0..n)
                .map(|i| {
                    let lo = rng.gen_range(0..30);
                    let hi = lo + rng.gen_range(1..8);
                    iv(i as Id, lo, hi)
                })
                .collect();
            let w: BTreeMap<Id, Weight> =
                (0..n).map(|i| (i as Id, rng.gen_range(0..9) as Weight)).collect();
            let mut best = 0;
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let ok = set.iter().all(|&i| {
                    set.iter().all(|&j| i == j || ivs[i].hi < ivs[j].lo || ivs[j].hi < ivs[i].lo)
                });
                if ok {
                    best = best.max(set.iter().map(|&i| w[&ivs[i].id]).sum());
                }
            }
            assert_eq!(interval_mwis(&ivs, &w).value, best);
        }
    }
}
