//! Exact MWIS on arbitrary intersection graphs by branch-and-bound with a
//! greedy weighted clique-cover bound. This is the workhorse behind the
//! outerstring solver contract and the approximation's crossing-set
//! subproblems.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::geometry::{Id, Weight};
use crate::reps::{IntersectionGraph, MisResult, SolveStats};

/// Word-packed vertex set.
#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    fn full(n: usize) -> Self {
        let mut s = BitSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    fn subtract(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    fn intersect_count(&self, other: &BitSet) -> u32 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

struct Searcher<'a> {
    adj: &'a [BitSet],
    weights: &'a [Weight],
    order_by_weight: Vec<usize>,
    best_value: Weight,
    best_set: Vec<usize>,
    nodes: u64,
}

impl Searcher<'_> {
    /// Greedy clique cover of `cand`: every independent set picks at most
    /// one vertex per clique, so the sum of per-clique maxima bounds MWIS.
    fn upper_bound(&self, cand: &BitSet) -> Weight {
        let mut cliques: Vec<(BitSet, Weight)> = Vec::new();
        for &v in &self.order_by_weight {
            if !cand.contains(v) {
                continue;
            }
            let mut placed = false;
            for (members, _) in cliques.iter_mut() {
                // v joins a clique iff adjacent to all its members
                if members.intersect_count(&self.adj[v]) == members.intersect_count(members) {
                    members.insert(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut m = BitSet::empty(self.adj.len());
                m.insert(v);
                cliques.push((m, self.weights[v]));
            }
        }
        cliques.iter().map(|(_, w)| *w).sum()
    }

    fn search(&mut self, cand: BitSet, current: Weight, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if cand.is_empty() {
            if current > self.best_value
                || (current == self.best_value && lex_smaller(chosen, &self.best_set))
            {
                self.best_value = current;
                self.best_set = chosen.clone();
                self.best_set.sort_unstable();
            }
            return;
        }
        if current + self.upper_bound(&cand) < self.best_value {
            return;
        }
        // Pivot on the candidate with the most candidate neighbours.
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.adj[v].intersect_count(&cand), std::cmp::Reverse(v)))
            .unwrap();

        // Include pivot.
        let mut included = cand.clone();
        included.remove(pivot);
        included.subtract(&self.adj[pivot]);
        chosen.push(pivot);
        self.search(included, current + self.weights[pivot], chosen);
        chosen.pop();

        // Exclude pivot.
        let mut excluded = cand;
        excluded.remove(pivot);
        self.search(excluded, current, chosen);
    }
}

fn lex_smaller(a: &[usize], b: &[usize]) -> bool {
    let mut a = a.to_vec();
    a.sort_unstable();
    a.as_slice() < b
}

/// Exact MWIS by branch-and-bound; exponential worst case, but the clique
/// cover keeps realistic scene graphs small. Stats report branch nodes.
pub fn outerstring_mwis_exact(
    g: &IntersectionGraph,
    weights: &BTreeMap<Id, Weight>,
) -> MisResult {
    let start = Instant::now();
    let ids: Vec<Id> = g.vertices.iter().copied().collect();
    let n = ids.len();
    if n == 0 {
        return MisResult { chosen: vec![], value: 0, stats: SolveStats::default() };
    }
    let index: BTreeMap<Id, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();
    let mut adj = vec![BitSet::empty(n); n];
    for (u, v) in &g.edges {
        let (ui, vi) = (index[u], index[v]);
        adj[ui].insert(vi);
        adj[vi].insert(ui);
    }
    let w: Vec<Weight> = ids.iter().map(|id| weights.get(id).copied().unwrap_or(1)).collect();
    let mut order_by_weight: Vec<usize> = (0..n).collect();
    order_by_weight.sort_by_key(|&v| (std::cmp::Reverse(w[v]), v));

    let mut s = Searcher {
        adj: &adj,
        weights: &w,
        order_by_weight,
        best_value: 0,
        best_set: vec![],
        nodes: 0,
    };
    s.search(BitSet::full(n), 0, &mut Vec::new());

    let chosen: Vec<Id> = s.best_set.iter().map(|&v| ids[v]).collect();
    let stats = SolveStats { nodes: s.nodes, wall: start.elapsed(), ..Default::default() };
    MisResult::checked(chosen, g, weights, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::brute_force_mwis;

    #[test]
    fn empty_graph() {
        let g = IntersectionGraph::default();
        let r = outerstring_mwis_exact(&g, &BTreeMap::new());
        assert_eq!(r.value, 0);
    }

    #[test]
    fn disjoint_strings_take_all() {
        let g = IntersectionGraph::new(0..7);
        let r = outerstring_mwis_exact(&g, &BTreeMap::new());
        assert_eq!(r.value, 7);
    }

    #[test]
    fn matches_brute_force_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for round in 0..150 {
            let n = rng.gen_range(1..=18);
            let mut g = IntersectionGraph::new(0..n as Id);
            for u in 0..n as Id {
                for v in (u + 1)..n as Id {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            let w: BTreeMap<Id, Weight> = if round % 2 == 0 {
                (0..n as Id).map(|i| (i, rng.gen_range(1..=10) as Weight)).collect()
            } else {
                BTreeMap::new()
            };
            let brute = brute_force_mwis(&g, &w).unwrap();
            let bb = outerstring_mwis_exact(&g, &w);
            assert_eq!(bb.value, brute.value, "n={n}");
            assert!(g.is_independent(&bb.chosen));
        }
    }
}
