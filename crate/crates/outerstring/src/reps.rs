//! Typed containers for every representation, invariant validation,
//! intersection-graph construction, and the brute-force MWIS oracle that the
//! whole test suite is anchored on.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::geometry::{
    self, chords_cross, polyline_intersect, proper_overlap, Chord, GroundedString, Id, Interval,
    LShape, Rectangle, SquareL, Weight,
};

/// Chord diagram: `2n` distinct boundary positions, one chord per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRep {
    pub n: usize,
    pub chords: Vec<Chord>,
    pub weights: Vec<Option<Weight>>,
}

/// Intervals on a line; adjacency is proper overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapRep {
    pub n: usize,
    pub intervals: Vec<Interval>,
    pub weights: Vec<Option<Weight>>,
}

/// Implicit grounded-segment representation: interval `[i, j]` denotes the
/// segment `(i, 0)..(j, 2^j)`. Heights are never materialized except by the
/// exact verifier in `reductions`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedSegmentRep {
    pub n: usize,
    pub intervals: Vec<Interval>,
    pub weights: Vec<Option<Weight>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedSquareLRep {
    pub n: usize,
    pub shapes: Vec<SquareL>,
    pub weights: Vec<Option<Weight>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LShapeSet {
    pub shapes: Vec<LShape>,
    pub weights: Vec<Option<Weight>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangleSet {
    pub shapes: Vec<Rectangle>,
    pub weights: Vec<Option<Weight>>,
}

/// Grounded strings in the half-plane `y >= 0` (the half-plane normalization
/// of curves-in-a-disk with one endpoint on the boundary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterstringRep {
    pub strings: Vec<GroundedString>,
}

/// Outerstring input restricted to rectilinear, y-monotone strings of total
/// length at most `kappa`, all coordinates integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedStringRep {
    pub strings: Vec<GroundedString>,
    pub kappa: i64,
}

/// Any parsed representation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    Circle(CircleRep),
    Overlap(OverlapRep),
    Gseg(GroundedSegmentRep),
    SquareL(GroundedSquareLRep),
    LShapes(LShapeSet),
    Rects(RectangleSet),
    Outerstring(OuterstringRep),
}

impl Representation {
    pub fn kind(&self) -> &'static str {
        match self {
            Representation::Circle(_) => "circle",
            Representation::Overlap(_) => "overlap",
            Representation::Gseg(_) => "gseg",
            Representation::SquareL(_) => "squarel",
            Representation::LShapes(_) => "lshape",
            Representation::Rects(_) => "rect",
            Representation::Outerstring(_) => "outerstring",
        }
    }

    pub fn ids(&self) -> Vec<Id> {
        match self {
            Representation::Circle(r) => r.chords.iter().map(|c| c.id).collect(),
            Representation::Overlap(r) => r.intervals.iter().map(|i| i.id).collect(),
            Representation::Gseg(r) => r.intervals.iter().map(|i| i.id).collect(),
            Representation::SquareL(r) => r.shapes.iter().map(|s| s.id).collect(),
            Representation::LShapes(r) => r.shapes.iter().map(|s| s.id).collect(),
            Representation::Rects(r) => r.shapes.iter().map(|s| s.id).collect(),
            Representation::Outerstring(r) => r.strings.iter().map(|s| s.id).collect(),
        }
    }

    /// Weight map with records lacking a weight defaulting to 1.
    pub fn weight_map(&self) -> BTreeMap<Id, Weight> {
        fn zip(ids: Vec<Id>, ws: &[Option<Weight>]) -> BTreeMap<Id, Weight> {
            ids.into_iter().zip(ws.iter()).map(|(id, w)| (id, w.unwrap_or(1))).collect()
        }
        match self {
            Representation::Circle(r) => zip(self.ids(), &r.weights),
            Representation::Overlap(r) => zip(self.ids(), &r.weights),
            Representation::Gseg(r) => zip(self.ids(), &r.weights),
            Representation::SquareL(r) => zip(self.ids(), &r.weights),
            Representation::LShapes(r) => zip(self.ids(), &r.weights),
            Representation::Rects(r) => zip(self.ids(), &r.weights),
            Representation::Outerstring(r) => {
                r.strings.iter().map(|s| (s.id, s.weight.unwrap_or(1))).collect()
            }
        }
    }
}

/// One violated invariant, with the offending shape when attributable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub id: Option<Id>,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.id {
            Some(id) => write!(f, "shape {}: {}", id, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

fn check_unique_ids(ids: &[Id], out: &mut Vec<Violation>) {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(*id) {
            out.push(Violation { id: Some(*id), message: "duplicate id".into() });
        }
    }
}

fn simple_polyline_violations(s: &GroundedString, out: &mut Vec<Violation>) {
    let v = &s.vertices;
    if v.len() < 2 {
        out.push(Violation { id: Some(s.id), message: "fewer than two vertices".into() });
        return;
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            out.push(Violation { id: Some(s.id), message: "consecutive vertices equal".into() });
            return;
        }
    }
    let segs: Vec<_> = s.segments().collect();
    for i in 0..segs.len() {
        for j in (i + 1)..segs.len() {
            if j == i + 1 {
                // Adjacent segments share the joint vertex; the polyline
                // doubles back if they overlap beyond it.
                let doubling = geometry::on_segment(segs[i].a, segs[i].b, segs[j].b)
                    || geometry::on_segment(segs[j].a, segs[j].b, segs[i].a);
                if doubling {
                    out.push(Violation {
                        id: Some(s.id),
                        message: "polyline doubles back on itself".into(),
                    });
                    return;
                }
            } else if geometry::segments_intersect(&segs[i], &segs[j]) {
                out.push(Violation { id: Some(s.id), message: "polyline self-intersects".into() });
                return;
            }
        }
    }
}

fn grounded_string_violations(s: &GroundedString, out: &mut Vec<Violation>) {
    if s.vertices.is_empty() {
        out.push(Violation { id: Some(s.id), message: "empty string".into() });
        return;
    }
    if s.vertices[0].y != 0 {
        out.push(Violation { id: Some(s.id), message: "first vertex not on y=0".into() });
    }
    if s.vertices.iter().any(|p| p.y < 0) {
        out.push(Violation { id: Some(s.id), message: "vertex below the grounding line".into() });
    }
    simple_polyline_violations(s, out);
}

/// Every violated invariant of the representation, empty when well-formed.
pub fn validate(rep: &Representation) -> Vec<Violation> {
    let mut out = Vec::new();
    check_unique_ids(&rep.ids(), &mut out);
    match rep {
        Representation::Circle(r) => {
            let mut positions = BTreeSet::new();
            for c in &r.chords {
                if c.p >= c.q {
                    out.push(Violation { id: Some(c.id), message: "chord needs p < q".into() });
                }
                for pos in [c.p, c.q] {
                    if pos < 0 || pos >= 2 * r.n as i64 || !positions.insert(pos) {
                        out.push(Violation {
                            id: Some(c.id),
                            message: "positions not a permutation of 0..2n-1".into(),
                        });
                    }
                }
            }
            if r.chords.len() != r.n {
                out.push(Violation { id: None, message: "chord count differs from n".into() });
            }
        }
        Representation::Overlap(r) => {
            interval_list_violations(&r.intervals, r.n, false, &mut out);
        }
        Representation::Gseg(r) => {
            interval_list_violations(&r.intervals, r.n, true, &mut out);
        }
        Representation::SquareL(r) => {
            let mut grounds = BTreeSet::new();
            for s in &r.shapes {
                if s.arm <= 0 {
                    out.push(Violation { id: Some(s.id), message: "arm must be positive".into() });
                }
                if !grounds.insert(s.ground_x) {
                    out.push(Violation { id: Some(s.id), message: "ground positions not distinct".into() });
                }
            }
        }
        Representation::LShapes(r) => {
            for (s, w) in r.shapes.iter().zip(&r.weights) {
                if s.vlen <= 0 || s.hlen <= 0 {
                    out.push(Violation { id: Some(s.id), message: "arm lengths must be positive".into() });
                }
                if let Some(w) = w {
                    if *w < 1 {
                        out.push(Violation { id: Some(s.id), message: "weight must be >= 1".into() });
                    }
                }
            }
        }
        Representation::Rects(r) => {
            for (s, w) in r.shapes.iter().zip(&r.weights) {
                if s.x1 >= s.x2 || s.y1 >= s.y2 {
                    out.push(Violation { id: Some(s.id), message: "rectangle needs x1 < x2 and y1 < y2".into() });
                }
                if let Some(w) = w {
                    if *w < 1 {
                        out.push(Violation { id: Some(s.id), message: "weight must be >= 1".into() });
                    }
                }
            }
        }
        Representation::Outerstring(r) => {
            for s in &r.strings {
                grounded_string_violations(s, &mut out);
            }
        }
    }
    out
}

fn interval_list_violations(
    intervals: &[Interval],
    n: usize,
    relabeled: bool,
    out: &mut Vec<Violation>,
) {
    let mut endpoints = BTreeSet::new();
    for i in intervals {
        if i.lo >= i.hi {
            out.push(Violation { id: Some(i.id), message: "interval needs lo < hi".into() });
        }
        for e in [i.lo, i.hi] {
            if !endpoints.insert(e) {
                out.push(Violation { id: Some(i.id), message: "endpoints not distinct".into() });
            }
            if relabeled && (e < 0 || e >= 2 * n as i64) {
                out.push(Violation {
                    id: Some(i.id),
                    message: "endpoints not relabeled to 0..2n-1".into(),
                });
            }
        }
    }
    if intervals.len() != n {
        out.push(Violation { id: None, message: "interval count differs from n".into() });
    }
}

/// Violations specific to the bounded-string solver input.
pub fn validate_bounded(rep: &BoundedStringRep) -> Vec<Violation> {
    let mut out = Vec::new();
    if rep.kappa < 1 {
        out.push(Violation { id: None, message: "kappa must be >= 1".into() });
    }
    check_unique_ids(&rep.strings.iter().map(|s| s.id).collect::<Vec<_>>(), &mut out);
    for s in &rep.strings {
        grounded_string_violations(s, &mut out);
        for w in s.vertices.windows(2) {
            let rectilinear = w[0].x == w[1].x || w[0].y == w[1].y;
            if !rectilinear {
                out.push(Violation { id: Some(s.id), message: "segment not axis-parallel".into() });
            }
            if w[1].y < w[0].y {
                out.push(Violation { id: Some(s.id), message: "y decreases along the path".into() });
            }
        }
        if s.total_length() > rep.kappa {
            out.push(Violation { id: Some(s.id), message: "length bound exceeded".into() });
        }
    }
    out
}

/// Symmetric irreflexive adjacency over shape ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntersectionGraph {
    pub vertices: BTreeSet<Id>,
    pub edges: BTreeSet<(Id, Id)>,
}

impl IntersectionGraph {
    pub fn new(vertices: impl IntoIterator<Item = Id>) -> Self {
        IntersectionGraph { vertices: vertices.into_iter().collect(), edges: BTreeSet::new() }
    }

    pub fn add_edge(&mut self, u: Id, v: Id) {
        debug_assert!(u != v, "irreflexive");
        let e = (u.min(v), u.max(v));
        self.edges.insert(e);
    }

    pub fn has_edge(&self, u: Id, v: Id) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: Id) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    /// True iff no two ids in `set` are adjacent.
    pub fn is_independent(&self, set: &[Id]) -> bool {
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                if self.has_edge(set[i], set[j]) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex mismatch: the two graphs have different id sets")]
    VertexMismatch,
}

/// Edge-set equality; reductions preserve vertex ids, so this is graph equality.
pub fn graphs_equal(g1: &IntersectionGraph, g2: &IntersectionGraph) -> Result<bool, GraphError> {
    if g1.vertices != g2.vertices {
        return Err(GraphError::VertexMismatch);
    }
    Ok(g1.edges == g2.edges)
}

/// Edges present in exactly one of the two graphs, for diff reporting.
pub fn graph_diff(g1: &IntersectionGraph, g2: &IntersectionGraph) -> Vec<(Id, Id)> {
    g1.edges.symmetric_difference(&g2.edges).cloned().collect()
}

/// Predicate mode for grounded-segment graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsegMode {
    /// Proper overlap of the stored intervals (the implicit representation).
    Implicit,
    /// Exact big-integer test on the denoted segments `(i,0)..(j, 2^j)`.
    Exact,
}

/// Build the intersection graph of a validated representation. Grounded
/// segments use the implicit predicate; ask `build_gseg_graph` for the exact
/// geometry mode.
pub fn build_intersection_graph(rep: &Representation) -> IntersectionGraph {
    match rep {
        Representation::Circle(r) => {
            pairwise(&r.chords, |c| c.id, |a, b| chords_cross(a, b))
        }
        Representation::Overlap(r) => {
            pairwise(&r.intervals, |i| i.id, |a, b| proper_overlap(a, b))
        }
        Representation::Gseg(r) => {
            pairwise(&r.intervals, |i| i.id, |a, b| proper_overlap(a, b))
        }
        Representation::SquareL(r) => {
            pairwise(&r.shapes, |s| s.id, |a, b| geometry::squarels_intersect(a, b))
        }
        Representation::LShapes(r) => {
            pairwise(&r.shapes, |s| s.id, |a, b| geometry::lshapes_intersect(a, b))
        }
        Representation::Rects(r) => {
            pairwise(&r.shapes, |s| s.id, |a, b| geometry::rects_intersect(a, b))
        }
        Representation::Outerstring(r) => {
            pairwise(&r.strings, |s| s.id, |a, b| polyline_intersect(a, b))
        }
    }
}

/// Grounded-segment graph under an explicit predicate mode.
pub fn build_gseg_graph(rep: &GroundedSegmentRep, mode: GsegMode) -> IntersectionGraph {
    match mode {
        GsegMode::Implicit => pairwise(&rep.intervals, |i| i.id, |a, b| proper_overlap(a, b)),
        GsegMode::Exact => pairwise(&rep.intervals, |i| i.id, |a, b| {
            crate::reductions::denoted_segments_intersect(a, b)
        }),
    }
}

fn pairwise<T>(
    items: &[T],
    id: impl Fn(&T) -> Id,
    pred: impl Fn(&T, &T) -> bool,
) -> IntersectionGraph {
    let mut g = IntersectionGraph::new(items.iter().map(&id));
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            if pred(&items[i], &items[j]) {
                g.add_edge(id(&items[i]), id(&items[j]));
            }
        }
    }
    g
}

/// Counters reported by every solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub subproblems: u64,
    pub queries: u64,
    pub nodes: u64,
    pub wall: Duration,
}

/// A solved instance: the chosen ids (sorted), their total weight, and the
/// solver's counters. `chosen` is verified independent before construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisResult {
    pub chosen: Vec<Id>,
    pub value: Weight,
    pub stats: SolveStats,
}

impl MisResult {
    /// Asserts independence and the weight sum against the source graph.
    pub fn checked(
        mut chosen: Vec<Id>,
        graph: &IntersectionGraph,
        weights: &BTreeMap<Id, Weight>,
        stats: SolveStats,
    ) -> MisResult {
        chosen.sort_unstable();
        chosen.dedup();
        assert!(graph.is_independent(&chosen), "solver returned a dependent set");
        let value = chosen.iter().map(|id| weights.get(id).copied().unwrap_or(1)).sum();
        MisResult { chosen, value, stats }
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("too large: {0} vertices exceeds the brute-force guard of {1}")]
    TooLarge(usize, usize),
    #[error("representation invalid: {0}")]
    Invalid(String),
}

const BRUTE_FORCE_GUARD: usize = 24;

/// Exact MWIS by exhaustive branching, capped at 24 vertices. Ties are
/// broken toward the lexicographically smallest id set.
pub fn brute_force_mwis(
    g: &IntersectionGraph,
    weights: &BTreeMap<Id, Weight>,
) -> Result<MisResult, SolveError> {
    let start = Instant::now();
    let ids: Vec<Id> = g.vertices.iter().copied().collect();
    let n = ids.len();
    if n > BRUTE_FORCE_GUARD {
        return Err(SolveError::TooLarge(n, BRUTE_FORCE_GUARD));
    }
    let idx: BTreeMap<Id, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();
    let mut adj = vec![0u32; n];
    for (u, v) in &g.edges {
        let (ui, vi) = (idx[u], idx[v]);
        adj[ui] |= 1 << vi;
        adj[vi] |= 1 << ui;
    }
    let w: Vec<Weight> = ids.iter().map(|id| weights.get(id).copied().unwrap_or(1)).collect();

    let mut nodes = 0u64;
    let best = best_weight(&adj, &w, 0, 0, n, &mut nodes);

    // Second pass: greedily include the smallest id whose inclusion still
    // allows reaching the optimum; this yields the lex-smallest optimal set.
    let mut chosen = Vec::new();
    let mut forbidden: u32 = 0;
    let mut acc: Weight = 0;
    for v in 0..n {
        if forbidden & (1 << v) != 0 {
            continue;
        }
        let take = acc + w[v] + best_weight(&adj, &w, v + 1, forbidden | adj[v], n, &mut nodes);
        if take == best {
            chosen.push(ids[v]);
            acc += w[v];
            forbidden |= adj[v];
        }
    }
    let stats = SolveStats { nodes, wall: start.elapsed(), ..Default::default() };
    Ok(MisResult::checked(chosen, g, weights, stats))
}

/// Max weight of an independent set among vertices `from..n` avoiding `forbidden`.
fn best_weight(adj: &[u32], w: &[Weight], from: usize, forbidden: u32, n: usize, nodes: &mut u64) -> Weight {
    *nodes += 1;
    let mut best = 0;
    for v in from..n {
        if forbidden & (1 << v) == 0 {
            let cand = w[v] + best_weight(adj, w, v + 1, forbidden | adj[v], n, nodes);
            best = best.max(cand);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn unit_weights(ids: &[Id]) -> BTreeMap<Id, Weight> {
        ids.iter().map(|&i| (i, 1)).collect()
    }

    #[test]
    fn validate_flags_duplicate_position() {
        let rep = Representation::Circle(CircleRep {
            n: 2,
            chords: vec![Chord::new(0, 0, 3), Chord::new(1, 1, 3)],
            weights: vec![None, None],
        });
        let v = validate(&rep);
        assert!(v.iter().any(|v| v.message.contains("permutation")), "{v:?}");
    }

    #[test]
    fn validate_flags_length_bound() {
        let s = GroundedString::new(0, vec![Point::new(0, 0), Point::new(0, 2), Point::new(1, 2)]);
        let rep = BoundedStringRep { strings: vec![s], kappa: 2 };
        let v = validate_bounded(&rep);
        assert!(v.iter().any(|v| v.message.contains("length bound")), "{v:?}");
    }

    #[test]
    fn validate_ok_overlap() {
        let rep = Representation::Overlap(OverlapRep {
            n: 2,
            intervals: vec![Interval::new(0, 0, 2), Interval::new(1, 1, 3)],
            weights: vec![None, None],
        });
        assert!(validate(&rep).is_empty());
    }

    #[test]
    fn graph_from_overlap() {
        let rep = Representation::Overlap(OverlapRep {
            n: 3,
            intervals: vec![
                Interval::new(0, 0, 2),
                Interval::new(1, 1, 3),
                Interval::new(2, 4, 5),
            ],
            weights: vec![None; 3],
        });
        let g = build_intersection_graph(&rep);
        assert_eq!(g.edges.iter().collect::<Vec<_>>(), vec![&(0, 1)]);
    }

    #[test]
    fn graph_single_shape_empty() {
        let rep = Representation::SquareL(GroundedSquareLRep {
            n: 1,
            shapes: vec![SquareL::new(7, 0, 3)],
            weights: vec![None],
        });
        assert!(build_intersection_graph(&rep).edges.is_empty());
    }

    #[test]
    fn graph_from_interleaved_chords() {
        let rep = Representation::Circle(CircleRep {
            n: 2,
            chords: vec![Chord::new(0, 0, 2), Chord::new(1, 1, 3)],
            weights: vec![None, None],
        });
        assert_eq!(build_intersection_graph(&rep).edges.len(), 1);
    }

    #[test]
    fn brute_force_empty_graph() {
        let g = IntersectionGraph::new([0, 1, 2]);
        let r = brute_force_mwis(&g, &unit_weights(&[0, 1, 2])).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.chosen, vec![0, 1, 2]);
    }

    #[test]
    fn brute_force_triangle() {
        let mut g = IntersectionGraph::new([0, 1, 2]);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        let r = brute_force_mwis(&g, &unit_weights(&[0, 1, 2])).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.chosen, vec![0]); // lex-smallest optimum
    }

    #[test]
    fn brute_force_weighted_five_cycle() {
        let mut g = IntersectionGraph::new([0, 1, 2, 3, 4]);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] {
            g.add_edge(u, v);
        }
        let weights: BTreeMap<Id, Weight> =
            [(0, 1), (1, 2), (2, 1), (3, 2), (4, 1)].into_iter().collect();

        // Independent oracle: enumerate all 32 subsets.
        let mut best = 0;
        let mut best_set = Vec::new();
        for mask in 0u32..32 {
            let set: Vec<Id> = (0..5).filter(|v| mask & (1 << v) != 0).collect();
            if g.is_independent(&set) {
                let val: Weight = set.iter().map(|v| weights[v]).sum();
                if val > best || (val == best && set < best_set) {
                    best = val;
                    best_set = set;
                }
            }
        }
        assert_eq!(best, 4);

        let r = brute_force_mwis(&g, &weights).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.chosen, vec![1, 3]);
        assert_eq!(r.chosen, best_set);
    }

    #[test]
    fn brute_force_guard() {
        let g = IntersectionGraph::new(0..25);
        let w = unit_weights(&(0..25).collect::<Vec<_>>());
        assert!(matches!(brute_force_mwis(&g, &w), Err(SolveError::TooLarge(25, 24))));
    }

    #[test]
    fn graphs_equal_reports_mismatch() {
        let g1 = IntersectionGraph::new([0, 1]);
        let g2 = IntersectionGraph::new([0, 2]);
        assert!(graphs_equal(&g1, &g2).is_err());
        let mut g3 = IntersectionGraph::new([0, 1]);
        assert!(graphs_equal(&g1, &g3).unwrap());
        g3.add_edge(0, 1);
        assert!(!graphs_equal(&g1, &g3).unwrap());
    }

    #[test]
    fn brute_force_monotone_under_growth() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let mut g = IntersectionGraph::new([]);
            let mut prev = 0;
            for v in 0..10u32 {
                g.vertices.insert(v);
                for u in 0..v {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
                let w = unit_weights(&g.vertices.iter().copied().collect::<Vec<_>>());
                let r = brute_force_mwis(&g, &w).unwrap();
                assert!(r.value >= prev, "adding a vertex decreased the optimum");
                prev = r.value;
            }
        }
    }
}
