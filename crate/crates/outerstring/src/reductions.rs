//! The three constructions: circle -> overlap, overlap -> implicit grounded
//! segments, overlap -> grounded square-L, and the CNF -> outerstring
//! hardness-instance generator.
//!
//! Every reduction preserves vertex ids, so graph equality downstream is
//! edge-set equality. The square-L construction self-validates by building
//! both intersection graphs before returning.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    polyline_intersect, GroundedString, Id, Interval, Point, SquareL,
};
use crate::reps::{
    CircleRep, GroundedSegmentRep, GroundedSquareLRep, GsegMode, OuterstringRep, OverlapRep,
    Representation,
};
use crate::sat::CnfFormula;

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("construction mismatch: square-L graph differs from the overlap graph")]
    ConstructionMismatch,
    #[error("square-L coordinates exceed the i64 range for this instance")]
    CoordinateRange,
    #[error("unknown id {0}")]
    UnknownId(Id),
    #[error("too many variables: {0} exceeds the gadget guard of {1}")]
    TooManyVariables(usize, usize),
    #[error("gadget invariant violated: {0}")]
    GadgetInvariant(String),
}

/// Cut the circle between positions 2n-1 and 0; each chord (p, q) becomes
/// the interval [p, q]. Crossing chords become properly overlapping
/// intervals and vice versa.
pub fn circle_to_overlap(c: &CircleRep) -> OverlapRep {
    let intervals = c.chords.iter().map(|ch| Interval::new(ch.id, ch.p, ch.q)).collect();
    OverlapRep { n: c.n, intervals, weights: c.weights.clone() }
}

/// Order-preserving relabel of all 2n endpoints to 0..2n-1.
pub fn relabel_endpoints(o: &OverlapRep) -> OverlapRep {
    let mut endpoints: Vec<i64> = o.intervals.iter().flat_map(|i| [i.lo, i.hi]).collect();
    endpoints.sort_unstable();
    let rank = |e: i64| endpoints.binary_search(&e).expect("endpoint present") as i64;
    let intervals =
        o.intervals.iter().map(|i| Interval::new(i.id, rank(i.lo), rank(i.hi))).collect();
    OverlapRep { n: o.n, intervals, weights: o.weights.clone() }
}

/// Relabel endpoints and store the interval pairs; the denoted geometric
/// segment for [i, j] is (i, 0)..(j, 2^j) and is never materialized here.
pub fn overlap_to_grounded_segments(o: &OverlapRep) -> GroundedSegmentRep {
    let relabeled = relabel_endpoints(o);
    GroundedSegmentRep { n: relabeled.n, intervals: relabeled.intervals, weights: relabeled.weights }
}

/// Exact intersection test of the two denoted segments (lo, 0)..(hi, 2^hi).
/// Heights grow like 2^hi, so this works in arbitrary precision.
pub fn denoted_segments_intersect(a: &Interval, b: &Interval) -> bool {
    let seg = |i: &Interval| {
        (
            (BigInt::from(i.lo), BigInt::from(0)),
            (BigInt::from(i.hi), BigInt::from(1) << i.hi.max(0) as usize),
        )
    };
    let (a1, a2) = seg(a);
    let (b1, b2) = seg(b);
    crate::geometry::big_segments_intersect(&a1, &a2, &b1, &b2)
}

/// Pairwise predicate on a grounded-segment representation by id.
pub fn grounded_segments_intersect(
    rep: &GroundedSegmentRep,
    u: Id,
    v: Id,
    mode: GsegMode,
) -> Result<bool, ReduceError> {
    let find = |id: Id| {
        rep.intervals.iter().find(|i| i.id == id).ok_or(ReduceError::UnknownId(id))
    };
    let a = find(u)?;
    let b = find(v)?;
    Ok(match mode {
        GsegMode::Implicit => crate::geometry::proper_overlap(a, b),
        GsegMode::Exact => denoted_segments_intersect(a, b),
    })
}

/// One shift event: from this interval's right endpoint onward, endpoints
/// move right by `offset` (cumulative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftEntry {
    pub id: Id,
    pub offset: i64,
}

/// Ordered shift events; offsets strictly increase and so do the right
/// endpoints of the referenced intervals.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ShiftList {
    pub entries: Vec<ShiftEntry>,
}

/// Result of the overlap -> square-L construction, with query accounting and
/// the wall time split between construction and self-validation.
#[derive(Debug, Clone)]
pub struct SquareLReduction {
    pub rep: GroundedSquareLRep,
    pub shifts: ShiftList,
    pub queries: u64,
    pub construct_time: Duration,
    pub validate_time: Duration,
}

/// Max-tree over endpoint positions: range max-update, point query.
/// Values are arbitrary-precision because the accumulated lengths grow
/// exponentially on structures with long disjoint chains.
struct MaxTree {
    size: usize,
    vals: Vec<BigInt>,
}

impl MaxTree {
    fn new(n: usize) -> Self {
        let size = n.next_power_of_two().max(1);
        MaxTree { size, vals: vec![BigInt::from(0); 2 * size] }
    }

    fn update(&mut self, lo: usize, hi: usize, v: &BigInt) {
        if lo > hi {
            return;
        }
        let mut l = lo + self.size;
        let mut r = hi + self.size + 1;
        while l < r {
            if l & 1 == 1 {
                if self.vals[l] < *v {
                    self.vals[l] = v.clone();
                }
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                if self.vals[r] < *v {
                    self.vals[r] = v.clone();
                }
            }
            l >>= 1;
            r >>= 1;
        }
    }

    fn query(&self, i: usize) -> BigInt {
        let mut i = i + self.size;
        let mut best = self.vals[i].clone();
        while i > 1 {
            i >>= 1;
            if self.vals[i] > best {
                best = self.vals[i].clone();
            }
        }
        best
    }
}

/// Exact-arithmetic result of the square-L construction: per-interval
/// grounds and arms (arbitrary precision), already self-validated against
/// the overlap graph.
#[derive(Debug, Clone)]
pub struct SquareLConstruction {
    pub ids: Vec<Id>,
    pub grounds: Vec<BigInt>,
    pub arms: Vec<BigInt>,
    pub shifts: Vec<(Id, BigInt)>,
    pub queries: u64,
    pub construct_time: Duration,
    pub validate_time: Duration,
}

/// Transform an overlap representation into a grounded square-L
/// representation with the same intersection graph.
///
/// Endpoints are relabeled to 0..2n-1 and then swept left to right. When an
/// interval closes, one stabbing query fetches the largest already-final
/// length among intervals that properly overlap it from the left; if the
/// closing interval is shorter, the gap before its right endpoint is
/// inflated so lengths are monotone along every properly-overlapping pair.
/// The shifted interval [l', r'] becomes the square-L with ground x = l' and
/// arm r' - l'. Under that mapping, shapes meet iff the intervals meet and
/// the left length is at most the right length; so proper overlaps are
/// edges, and containment and disjointness are non-edges, unconditionally.
/// Coordinates can grow exponentially (disjoint chains force compounding
/// inflation), hence the exact arithmetic here.
///
/// The 2n tree operations are the query budget. Self-validation compares
/// the two adjacency predicates on every pair: the shifted endpoints are an
/// order-isomorphic relabeling, so the "shapes meet" part reduces to the
/// original endpoint order and only the length comparison needs the big
/// integers.
pub fn construct_square_l(o: &OverlapRep) -> Result<SquareLConstruction, ReduceError> {
    let t0 = Instant::now();
    let relabeled = relabel_endpoints(o);
    let n = relabeled.n;
    let m = 2 * n;

    // owner[e] = (interval index, is_right_endpoint)
    let mut owner: Vec<(usize, bool)> = vec![(0, false); m];
    for (idx, iv) in relabeled.intervals.iter().enumerate() {
        owner[iv.lo as usize] = (idx, false);
        owner[iv.hi as usize] = (idx, true);
    }

    let mut tree = MaxTree::new(m);
    let mut cum = BigInt::from(0);
    let mut queries: u64 = 0;
    let mut shifts: Vec<(Id, BigInt)> = Vec::new();
    let mut lo_new: Vec<BigInt> = vec![BigInt::from(0); n];
    let mut arm: Vec<BigInt> = vec![BigInt::from(0); n];

    for e in 0..m as i64 {
        let (idx, is_right) = owner[e as usize];
        if !is_right {
            lo_new[idx] = BigInt::from(e) + &cum;
        } else {
            let iv = relabeled.intervals[idx];
            queries += 1;
            let needed = tree.query(iv.lo as usize);
            let len = BigInt::from(e) + &cum - &lo_new[idx];
            if len < needed {
                cum += &needed - &len;
                shifts.push((iv.id, cum.clone()));
            }
            arm[idx] = BigInt::from(e) + &cum - &lo_new[idx];
            queries += 1;
            tree.update(iv.lo as usize + 1, iv.hi as usize - 1, &arm[idx]);
        }
    }
    let construct_time = t0.elapsed();

    // Streaming self-validation, no materialized edge sets: for every pair,
    // the square-L predicate must agree with proper overlap.
    let t1 = Instant::now();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (&relabeled.intervals[i], &relabeled.intervals[j]);
            let (first, second) = if a.lo < b.lo { (i, j) } else { (j, i) };
            let (fi, si) = (&relabeled.intervals[first], &relabeled.intervals[second]);
            // ground_second <= ground_first + arm_first  <=>  lo_second < hi_first
            let meets = si.lo < fi.hi;
            let sq_adj = meets && arm[first] <= arm[second];
            if sq_adj != crate::geometry::proper_overlap(a, b) {
                return Err(ReduceError::ConstructionMismatch);
            }
        }
    }
    let validate_time = t1.elapsed();

    Ok(SquareLConstruction {
        ids: relabeled.intervals.iter().map(|iv| iv.id).collect(),
        grounds: lo_new,
        arms: arm,
        shifts,
        queries,
        construct_time,
        validate_time,
    })
}

/// Machine-integer wrapper around `construct_square_l`; fails with
/// `ReduceError::CoordinateRange` when the exact coordinates do not fit an
/// i64 (they can grow exponentially in n on adversarial overlap structures).
pub fn overlap_to_square_l(o: &OverlapRep) -> Result<SquareLReduction, ReduceError> {
    let c = construct_square_l(o)?;
    let to_i64 = |v: &BigInt| -> Result<i64, ReduceError> {
        i64::try_from(v.clone()).map_err(|_| ReduceError::CoordinateRange)
    };
    let mut shapes = Vec::with_capacity(c.ids.len());
    for ((id, g), a) in c.ids.iter().zip(&c.grounds).zip(&c.arms) {
        shapes.push(SquareL::new(*id, to_i64(g)?, to_i64(a)?));
    }
    let mut entries = Vec::with_capacity(c.shifts.len());
    for (id, off) in &c.shifts {
        entries.push(ShiftEntry { id: *id, offset: to_i64(off)? });
    }
    let relabeled = relabel_endpoints(o);
    let rep = GroundedSquareLRep { n: relabeled.n, shapes, weights: relabeled.weights };
    Ok(SquareLReduction {
        rep,
        shifts: ShiftList { entries },
        queries: c.queries,
        construct_time: c.construct_time,
        validate_time: c.validate_time,
    })
}

/// Which half of the variables a gadget string encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// Where one gadget string came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringOrigin {
    pub id: Id,
    pub side: Side,
    /// 1-based half-assignment index within the side.
    pub assignment: usize,
    /// 1-based clause index the string connects to.
    pub clause: usize,
}

/// Coordinate bookkeeping for the CNF gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLayout {
    pub alpha: i64,
    /// Clause point for clause c (1-based) is (0, 2*alpha + c).
    pub clause_points: Vec<(i64, i64)>,
    /// Ground interval per half-assignment, side A (negative x).
    pub blocks_left: Vec<(i64, i64)>,
    /// Ground interval per half-assignment, side B (positive x, mirrored).
    pub blocks_right: Vec<(i64, i64)>,
    pub string_map: Vec<StringOrigin>,
}

const GADGET_VAR_GUARD: usize = 16;

/// Build the outerstring hardness instance for a CNF formula.
///
/// Variables are split into two halves. Every half-assignment gets a block
/// interval on the grounding line and one string per clause it satisfies;
/// the string rises inside its block, crosses to a per-clause descent
/// column, rises again and runs to the clause point (0, 2*alpha + c).
/// Cruising heights sit in disjoint per-block bands that decrease with
/// block distance, which forces every cross-block pair on one side to
/// cross, while strings within one block stay pairwise disjoint. Opposite
/// sides meet only at shared clause points. The maximum independent set
/// then has size m iff the formula is satisfiable.
pub fn cnf_to_outerstring(f: &CnfFormula) -> Result<(OuterstringRep, GadgetLayout), ReduceError> {
    if f.var_count > GADGET_VAR_GUARD {
        return Err(ReduceError::TooManyVariables(f.var_count, GADGET_VAR_GUARD));
    }
    let padded = if f.var_count % 2 == 0 { f.var_count.max(2) } else { f.var_count + 1 };
    let half = padded / 2;
    let blocks = 1usize << half;
    let m = f.clauses.len();
    let mi = m as i64;
    let bi = blocks as i64;

    let alpha = bi * (mi + 1) + mi + 1;
    let clause_points: Vec<(i64, i64)> = (1..=mi).map(|c| (0, 2 * alpha + c)).collect();

    let vars_a: Vec<usize> = (1..=half).collect();
    let vars_b: Vec<usize> = ((half + 1)..=padded).collect();

    // Clauses (1-based) satisfied by half-assignment `bits` over `vars`.
    let satisfied = |vars: &[usize], bits: usize| -> Vec<usize> {
        f.clauses
            .iter()
            .enumerate()
            .filter(|(_, clause)| {
                clause.iter().any(|&lit| {
                    let v = lit.unsigned_abs() as usize;
                    match vars.iter().position(|&x| x == v) {
                        Some(pos) => (bits >> pos) & 1 == if lit > 0 { 1 } else { 0 },
                        None => false,
                    }
                })
            })
            .map(|(c, _)| c + 1)
            .collect()
    };

    let mut strings = Vec::new();
    let mut string_map = Vec::new();
    let mut blocks_left = Vec::new();
    let mut blocks_right = Vec::new();
    let mut next_id: Id = 0;

    for i in 1..=blocks {
        let g = -((i as i64 + 1) * (mi + 2));
        blocks_left.push((g, g + mi));
        blocks_right.push((-(g + mi), -g));
    }

    for (side, vars) in [(Side::A, &vars_a), (Side::B, &vars_b)] {
        for i in 1..=blocks {
            let g = -((i as i64 + 1) * (mi + 2));
            for c in satisfied(vars, i - 1) {
                let ci = c as i64;
                let x_start = g + (mi - ci);
                let top = (bi + 1 - i as i64) * (mi + 1) + ci;
                let mirror = |x: i64| match side {
                    Side::A => x,
                    Side::B => -x,
                };
                let vertices = vec![
                    Point::new(mirror(x_start), 0),
                    Point::new(mirror(x_start), top),
                    Point::new(mirror(-ci), top),
                    Point::new(mirror(-ci), 2 * alpha + ci),
                    Point::new(0, 2 * alpha + ci),
                ];
                strings.push(GroundedString::new(next_id, vertices));
                string_map.push(StringOrigin { id: next_id, side, assignment: i, clause: c });
                next_id += 1;
            }
        }
    }

    let rep = OuterstringRep { strings };
    let layout = GadgetLayout { alpha, clause_points, blocks_left, blocks_right, string_map };
    gadget_check(f, &rep, &layout, half)?;
    Ok((rep, layout))
}

/// Structural checks on a constructed gadget. Pairwise geometric checks are
/// skipped above 512 strings (they are quadratic); the acceptance scale is
/// far below that.
pub fn gadget_check(
    f: &CnfFormula,
    rep: &OuterstringRep,
    layout: &GadgetLayout,
    half: usize,
) -> Result<(), ReduceError> {
    let err = |msg: String| Err(ReduceError::GadgetInvariant(msg));

    // String count equals the total number of satisfied clauses over all
    // half-assignments of both sides.
    let blocks = 1usize << half;
    let padded = 2 * half;
    let mut expected = 0usize;
    for vars in [(1..=half).collect::<Vec<_>>(), ((half + 1)..=padded).collect::<Vec<_>>()] {
        for bits in 0..blocks {
            for clause in &f.clauses {
                let sat = clause.iter().any(|&lit| {
                    let v = lit.unsigned_abs() as usize;
                    match vars.iter().position(|&x| x == v) {
                        Some(pos) => (bits >> pos) & 1 == if lit > 0 { 1 } else { 0 },
                        None => false,
                    }
                });
                if sat {
                    expected += 1;
                }
            }
        }
    }
    if rep.strings.len() != expected {
        return err(format!("string count {} != per-assignment satisfied sum {expected}", rep.strings.len()));
    }

    // Bend budget and grounding.
    for s in &rep.strings {
        if s.vertices.len() > 6 {
            return err(format!("string {} has more than 4 bends", s.id));
        }
        if s.vertices[0].y != 0 {
            return err(format!("string {} not grounded", s.id));
        }
    }

    if rep.strings.len() > 512 {
        return Ok(());
    }

    let violations = crate::reps::validate(&Representation::Outerstring(rep.clone()));
    if !violations.is_empty() {
        return err(format!("outerstring invariants: {}", violations[0]));
    }

    let origin = |id: Id| &layout.string_map[id as usize];
    for i in 0..rep.strings.len() {
        for j in (i + 1)..rep.strings.len() {
            let (si, sj) = (&rep.strings[i], &rep.strings[j]);
            let (oi, oj) = (origin(si.id), origin(sj.id));
            let meet = polyline_intersect(si, sj);
            let want = if oi.side == oj.side {
                if oi.assignment == oj.assignment {
                    false // same block: pairwise disjoint
                } else {
                    true // different blocks, same side: always cross
                }
            } else {
                oi.clause == oj.clause // opposite sides: shared clause point only
            };
            if meet != want {
                return err(format!(
                    "strings {} and {}: expected intersect={want}, got {meet}",
                    si.id, sj.id
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{chords_cross, proper_overlap, Chord};
    use crate::reps::{brute_force_mwis, build_gseg_graph, build_intersection_graph, graphs_equal};
    use crate::sat::sat_brute_force;

    fn overlap(pairs: &[(i64, i64)]) -> OverlapRep {
        let intervals =
            pairs.iter().enumerate().map(|(i, (a, b))| Interval::new(i as Id, *a, *b)).collect();
        OverlapRep { n: pairs.len(), intervals, weights: vec![None; pairs.len()] }
    }

    #[test]
    fn single_chord_to_interval() {
        let c = CircleRep { n: 1, chords: vec![Chord::new(0, 0, 1)], weights: vec![None] };
        let o = circle_to_overlap(&c);
        assert_eq!(o.intervals, vec![Interval::new(0, 0, 1)]);
        assert!(build_intersection_graph(&Representation::Overlap(o)).edges.is_empty());
    }

    #[test]
    fn chord_crossing_matches_overlap() {
        let chords = vec![Chord::new(0, 0, 2), Chord::new(1, 1, 3)];
        let c = CircleRep { n: 2, chords: chords.clone(), weights: vec![None; 2] };
        let o = circle_to_overlap(&c);
        assert_eq!(
            chords_cross(&chords[0], &chords[1]),
            proper_overlap(&o.intervals[0], &o.intervals[1])
        );
    }

    #[test]
    fn three_chord_edges() {
        let c = CircleRep {
            n: 3,
            chords: vec![Chord::new(0, 0, 4), Chord::new(1, 1, 2), Chord::new(2, 3, 5)],
            weights: vec![None; 3],
        };
        let g = build_intersection_graph(&Representation::Circle(c.clone()));
        let edges: Vec<_> = g.edges.iter().collect();
        assert_eq!(edges, vec![&(0, 2)]);
        let go = build_intersection_graph(&Representation::Overlap(circle_to_overlap(&c)));
        assert!(graphs_equal(&g, &go).unwrap());
    }

    #[test]
    fn denoted_segments_touch_on_overlap() {
        // [0,2] and [1,3]: segments (0,0)-(2,4) and (1,0)-(3,8) touch at (2,4).
        assert!(denoted_segments_intersect(&Interval::new(0, 0, 2), &Interval::new(1, 1, 3)));
        // containment separates them
        assert!(!denoted_segments_intersect(&Interval::new(0, 0, 3), &Interval::new(1, 1, 2)));
        // disjoint x-ranges
        assert!(!denoted_segments_intersect(&Interval::new(0, 0, 1), &Interval::new(1, 2, 3)));
    }

    #[test]
    fn relabel_preserves_order() {
        let o = overlap(&[(10, 40), (25, 70)]);
        let g = overlap_to_grounded_segments(&o);
        assert_eq!(g.intervals, vec![Interval::new(0, 0, 2), Interval::new(1, 1, 3)]);
    }

    #[test]
    fn implicit_and_exact_modes_agree_small() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 1..=10usize {
            for _ in 0..20 {
                let mut pos: Vec<i64> = (0..2 * n as i64).collect();
                pos.shuffle(&mut rng);
                let o = overlap(
                    &(0..n).map(|i| {
                        let (a, b) = (pos[2 * i], pos[2 * i + 1]);
                        (a.min(b), a.max(b))
                    })
                    .collect::<Vec<_>>(),
                );
                let g = overlap_to_grounded_segments(&o);
                let gi = build_gseg_graph(&g, GsegMode::Implicit);
                let ge = build_gseg_graph(&g, GsegMode::Exact);
                assert!(graphs_equal(&gi, &ge).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn square_l_singleton() {
        let r = overlap_to_square_l(&overlap(&[(0, 1)])).unwrap();
        assert_eq!(r.rep.shapes, vec![SquareL::new(0, 0, 1)]);
        assert!(r.shifts.entries.is_empty());
    }

    #[test]
    fn square_l_overlapping_pair_keeps_edge() {
        let r = overlap_to_square_l(&overlap(&[(0, 2), (1, 3)])).unwrap();
        let g = build_intersection_graph(&Representation::SquareL(r.rep.clone()));
        assert!(g.has_edge(0, 1));
        // the right shape's vertical meets the left shape's horizontal arm
        let a = GroundedString::new(0, r.rep.shapes[0].to_polyline());
        let b = GroundedString::new(1, r.rep.shapes[1].to_polyline());
        assert!(polyline_intersect(&a, &b));
    }

    #[test]
    fn square_l_disjoint_pair_separated() {
        let r = overlap_to_square_l(&overlap(&[(1, 2), (3, 4)])).unwrap();
        let g = build_intersection_graph(&Representation::SquareL(r.rep.clone()));
        assert!(!g.has_edge(0, 1));
        let s = &r.rep.shapes;
        assert!(s[1].ground_x > s[0].ground_x + s[0].arm);
    }

    #[test]
    fn square_l_disjoint_chain_stays_compact() {
        // The coordinates must not blow up on a chain of disjoint intervals.
        let pairs: Vec<(i64, i64)> = (0..50).map(|i| (2 * i, 2 * i + 1)).collect();
        let r = overlap_to_square_l(&overlap(&pairs)).unwrap();
        let max_coord =
            r.rep.shapes.iter().map(|s| s.ground_x + s.arm).max().unwrap();
        assert!(max_coord < 10_000, "chain blew up to {max_coord}");
    }

    #[test]
    fn square_l_query_budget() {
        let pairs: Vec<(i64, i64)> = (0..64).map(|i| (i, 200 - i)).collect();
        let r = overlap_to_square_l(&overlap(&pairs)).unwrap();
        assert!(r.queries <= 2 * 64);
    }

    #[test]
    fn square_l_random_graph_equality() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in 1..=12usize {
            for _ in 0..30 {
                let mut pos: Vec<i64> = (0..2 * n as i64).collect();
                pos.shuffle(&mut rng);
                let o = overlap(
                    &(0..n).map(|i| {
                        let (a, b) = (pos[2 * i], pos[2 * i + 1]);
                        (a.min(b), a.max(b))
                    })
                    .collect::<Vec<_>>(),
                );
                // self-validation inside the constructor is the assertion
                let r = overlap_to_square_l(&o).unwrap();
                assert!(r.queries <= 2 * n as u64);
            }
        }
    }

    #[test]
    fn gadget_single_clause_two_vars() {
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let (rep, layout) = cnf_to_outerstring(&f).unwrap();
        // one satisfying half-assignment per side
        assert_eq!(rep.strings.len(), 2);
        assert_eq!(layout.clause_points, vec![(0, 2 * layout.alpha + 1)]);
        let g = build_intersection_graph(&Representation::Outerstring(rep));
        let mis = brute_force_mwis(&g, &Default::default()).unwrap();
        assert_eq!(mis.value, 1); // = m, and the formula is satisfiable
        assert!(sat_brute_force(&f).unwrap());
    }

    #[test]
    fn gadget_contradiction() {
        let f = CnfFormula::new(2, vec![vec![1], vec![-1]]).unwrap();
        let (rep, layout) = cnf_to_outerstring(&f).unwrap();
        // side A: each half-assignment satisfies exactly one clause;
        // side B: x2 appears in no clause, so no strings.
        let left: Vec<_> =
            layout.string_map.iter().filter(|o| o.side == Side::A).collect();
        let right: Vec<_> =
            layout.string_map.iter().filter(|o| o.side == Side::B).collect();
        assert_eq!(left.len(), 2);
        assert!(right.is_empty());
        let g = build_intersection_graph(&Representation::Outerstring(rep));
        let mis = brute_force_mwis(&g, &Default::default()).unwrap();
        assert_eq!(mis.value, 1); // < m = 2: unsatisfiable
        assert!(!sat_brute_force(&f).unwrap());
    }

    #[test]
    fn gadget_empty_formula() {
        let f = CnfFormula::new(2, vec![]).unwrap();
        let (rep, _) = cnf_to_outerstring(&f).unwrap();
        assert!(rep.strings.is_empty());
    }

    #[test]
    fn gadget_guard() {
        let f = CnfFormula::new(17, vec![vec![1]]).unwrap();
        assert!(matches!(cnf_to_outerstring(&f), Err(ReduceError::TooManyVariables(17, 16))));
    }
}
