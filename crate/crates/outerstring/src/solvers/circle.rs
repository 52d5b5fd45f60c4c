//! Quadratic MWIS on circle graphs given as overlap representations.
//!
//! The table runs over endpoint ranges [i, j] of the relabeled
//! representation: when the partner k of endpoint j lies inside the range,
//! the chord (k, j) is either skipped or taken together with the best
//! solutions strictly inside and strictly left of it.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::geometry::{proper_overlap, Id, Weight};
use crate::reps::{MisResult, OverlapRep, SolveStats};

/// Exact MWIS of an overlap representation in O(n²) time and O(n²) space.
pub fn circle_mwis(o: &OverlapRep, weights: &BTreeMap<Id, Weight>) -> MisResult {
    let start = Instant::now();
    let relabeled = crate::reductions::relabel_endpoints(o);
    let n = relabeled.n;
    if n == 0 {
        return MisResult { chosen: vec![], value: 0, stats: SolveStats::default() };
    }
    let m = 2 * n;

    let mut partner = vec![0usize; m];
    let mut chord_at = vec![usize::MAX; m]; // interval index at its right endpoint
    for (idx, iv) in relabeled.intervals.iter().enumerate() {
        partner[iv.lo as usize] = iv.hi as usize;
        partner[iv.hi as usize] = iv.lo as usize;
        chord_at[iv.hi as usize] = idx;
    }
    let w: Vec<Weight> =
        relabeled.intervals.iter().map(|iv| weights.get(&iv.id).copied().unwrap_or(1)).collect();

    // Triangular table, M[i][j] for i <= j, row-major in j.
    let tri = |i: usize, j: usize| j * (j + 1) / 2 + i;
    let mut table = vec![0 as Weight; m * (m + 1) / 2];
    for j in 1..m {
        for i in (0..j).rev() {
            let k = partner[j];
            let skip = table[tri(i, j - 1)];
            let mut best = skip;
            if k >= i && k < j {
                let inner = if k + 1 <= j - 1 { table[tri(k + 1, j - 1)] } else { 0 };
                let left = if k > i { table[tri(i, k - 1)] } else { 0 };
                best = best.max(left + inner + w[chord_at[j]]);
            }
            table[tri(i, j)] = best;
        }
    }
    let value = table[tri(0, m - 1)];

    // Walk the table back to one optimal chord set.
    let mut chosen: Vec<Id> = Vec::new();
    let mut stack = vec![(0usize, m - 1)];
    while let Some((i, j)) = stack.pop() {
        if j <= i {
            continue;
        }
        let k = partner[j];
        let take = if k >= i && k < j {
            let inner = if k + 1 <= j - 1 { table[tri(k + 1, j - 1)] } else { 0 };
            let left = if k > i { table[tri(i, k - 1)] } else { 0 };
            table[tri(i, j)] == left + inner + w[chord_at[j]]
        } else {
            false
        };
        if take {
            chosen.push(relabeled.intervals[chord_at[j]].id);
            if k + 1 <= j.saturating_sub(1) && j >= 1 {
                stack.push((k + 1, j - 1));
            }
            if k > i {
                stack.push((i, k - 1));
            }
        } else if j >= i + 1 {
            stack.push((i, j - 1));
        }
    }
    chosen.sort_unstable();

    // Independence check directly on the intervals.
    let by_id: BTreeMap<Id, &crate::geometry::Interval> =
        relabeled.intervals.iter().map(|iv| (iv.id, iv)).collect();
    for a in 0..chosen.len() {
        for b in (a + 1)..chosen.len() {
            assert!(
                !proper_overlap(by_id[&chosen[a]], by_id[&chosen[b]]),
                "circle DP returned a dependent set"
            );
        }
    }
    let sum: Weight = chosen.iter().map(|id| weights.get(id).copied().unwrap_or(1)).sum();
    assert_eq!(sum, value, "reconstructed set does not match the DP value");

    let stats = SolveStats {
        subproblems: (m * (m + 1) / 2) as u64,
        wall: start.elapsed(),
        ..Default::default()
    };
    MisResult { chosen, value, stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Interval;
    use crate::reps::{brute_force_mwis, build_intersection_graph, Representation};

    fn overlap(pairs: &[(i64, i64)]) -> OverlapRep {
        let intervals =
            pairs.iter().enumerate().map(|(i, (a, b))| Interval::new(i as Id, *a, *b)).collect();
        OverlapRep { n: pairs.len(), intervals, weights: vec![None; pairs.len()] }
    }

    #[test]
    fn single_interval() {
        let o = overlap(&[(0, 1)]);
        let r = circle_mwis(&o, &[(0, 7)].into_iter().collect());
        assert_eq!(r.value, 7);
        assert_eq!(r.chosen, vec![0]);
    }

    #[test]
    fn pairwise_overlapping_clique() {
        let n = 6i64;
        let o = overlap(&(0..n).map(|i| (i, n + i)).collect::<Vec<_>>());
        let r = circle_mwis(&o, &BTreeMap::new());
        assert_eq!(r.value, 1);
    }

    #[test]
    fn laminar_family_all_chosen() {
        // Nesting is non-adjacency in overlap graphs.
        let o = overlap(&[(0, 5), (1, 2), (3, 4)]);
        let r = circle_mwis(&o, &BTreeMap::new());
        assert_eq!(r.value, 3);
        assert_eq!(r.chosen, vec![0, 1, 2]);
    }

    #[test]
    fn matches_brute_force_random() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut pos: Vec<i64> = (0..2 * n as i64).collect();
            pos.shuffle(&mut rng);
            let o = overlap(
                &(0..n)
                    .map(|i| {
                        let (a, b) = (pos[2 * i], pos[2 * i + 1]);
                        (a.min(b), a.max(b))
                    })
                    .collect::<Vec<_>>(),
            );
            let w: BTreeMap<Id, Weight> =
                (0..n).map(|i| (i as Id, rng.gen_range(1..=9) as Weight)).collect();
            let g = build_intersection_graph(&Representation::Overlap(o.clone()));
            let brute = brute_force_mwis(&g, &w).unwrap();
            let dp = circle_mwis(&o, &w);
            assert_eq!(dp.value, brute.value);
            assert!(g.is_independent(&dp.chosen));
        }
    }
}
