//! Seeded instance generators and the scaling benchmark harness.
//!
//! Identical seed and parameters give bit-identical instances; every suite
//! emits one record per (instance, operation) with the fixed CSV schema
//! `kind,n,kappa,seed,op,ms,queries,subproblems,nodes`.

use std::fmt::Write as _;

use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Chord, GroundedString, Id, Interval, LKind, LShape, Point, Rectangle};
use crate::reps::{
    BoundedStringRep, CircleRep, LShapeSet, OverlapRep, RectangleSet,
};
use crate::sat::CnfFormula;

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub kind: String,
    pub n: usize,
    pub kappa: i64,
    pub seed: u64,
    pub op: String,
    pub ms: f64,
    pub queries: u64,
    pub subproblems: u64,
    pub nodes: u64,
}

pub const CSV_HEADER: &str = "kind,n,kappa,seed,op,ms,queries,subproblems,nodes";

impl BenchRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{},{},{}",
            self.kind, self.n, self.kappa, self.seed, self.op, self.ms, self.queries,
            self.subproblems, self.nodes
        )
    }
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random perfect matching of the 2n boundary positions.
pub fn random_circle(rng: &mut impl Rng, n: usize) -> CircleRep {
    let mut pos: Vec<i64> = (0..2 * n as i64).collect();
    pos.shuffle(rng);
    let chords = (0..n)
        .map(|i| {
            let (a, b) = (pos[2 * i], pos[2 * i + 1]);
            Chord::new(i as Id, a.min(b), a.max(b))
        })
        .collect();
    CircleRep { n, chords, weights: vec![None; n] }
}

/// Random pairing of 2n distinct endpoints.
pub fn random_overlap(rng: &mut impl Rng, n: usize) -> OverlapRep {
    let mut pos: Vec<i64> = (0..2 * n as i64).collect();
    pos.shuffle(rng);
    let intervals = (0..n)
        .map(|i| {
            let (a, b) = (pos[2 * i], pos[2 * i + 1]);
            Interval::new(i as Id, a.min(b), a.max(b))
        })
        .collect();
    OverlapRep { n, intervals, weights: vec![None; n] }
}

pub fn random_weights(rng: &mut impl Rng, n: usize, weighted: bool) -> Vec<Option<u64>> {
    (0..n).map(|_| if weighted { Some(rng.gen_range(1..=10)) } else { None }).collect()
}

/// Uniform L-shapes in a box, optionally mixing all four orientations.
pub fn random_lshapes(
    rng: &mut impl Rng,
    n: usize,
    coord_max: i64,
    len_max: i64,
    mixed: bool,
    weighted: bool,
) -> LShapeSet {
    let kinds = [LKind::UL, LKind::UR, LKind::LL, LKind::LR];
    let shapes = (0..n)
        .map(|i| {
            let kind = if mixed { kinds[rng.gen_range(0..4)] } else { LKind::UL };
            LShape::new(
                i as Id,
                kind,
                Point::new(rng.gen_range(0..=coord_max), rng.gen_range(0..=coord_max)),
                rng.gen_range(1..=len_max),
                rng.gen_range(1..=len_max),
            )
        })
        .collect();
    let weights = random_weights(rng, n, weighted);
    LShapeSet { shapes, weights }
}

/// Uniform rectangles in a box.
pub fn random_rects(
    rng: &mut impl Rng,
    n: usize,
    coord_max: i64,
    len_max: i64,
    weighted: bool,
) -> RectangleSet {
    let shapes = (0..n)
        .map(|i| {
            let x1 = rng.gen_range(0..=coord_max);
            let y1 = rng.gen_range(0..=coord_max);
            Rectangle::new(
                i as Id,
                x1,
                y1,
                x1 + rng.gen_range(1..=len_max),
                y1 + rng.gen_range(1..=len_max),
            )
        })
        .collect();
    let weights = random_weights(rng, n, weighted);
    RectangleSet { shapes, weights }
}

/// One random rectilinear y-monotone string of total length <= kappa,
/// grounded in [0, width].
pub fn random_bounded_string(rng: &mut impl Rng, id: Id, kappa: i64, width: i64) -> GroundedString {
    let x0 = rng.gen_range(0..=width);
    let mut vertices = vec![Point::new(x0, 0)];
    let mut remaining = rng.gen_range(1..=kappa);
    let (mut x, mut y) = (x0, 0i64);
    let mut vertical_next = rng.gen_bool(0.7);
    while remaining > 0 {
        let len = rng.gen_range(1..=remaining);
        if vertical_next {
            y += len;
        } else if rng.gen_bool(0.5) {
            x += len;
        } else {
            x -= len;
        }
        vertices.push(Point::new(x, y));
        remaining -= len;
        vertical_next = !vertical_next;
    }
    GroundedString::new(id, vertices)
}

pub fn random_bounded(rng: &mut impl Rng, n: usize, kappa: i64, width: i64) -> BoundedStringRep {
    let strings = (0..n).map(|i| random_bounded_string(rng, i as Id, kappa, width)).collect();
    BoundedStringRep { strings, kappa }
}

/// Random k-SAT with distinct variables per clause.
pub fn random_cnf(rng: &mut impl Rng, vars: usize, clauses: usize, k: usize) -> CnfFormula {
    assert!(k <= vars, "clause width exceeds variable count");
    let mut out = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let mut lits: Vec<i32> = Vec::with_capacity(k);
        while lits.len() < k {
            let v = rng.gen_range(1..=vars) as i32;
            if !lits.iter().any(|l| l.abs() == v) {
                lits.push(if rng.gen_bool(0.5) { v } else { -v });
            }
        }
        out.push(lits);
    }
    CnfFormula::new(vars, out).expect("generated clauses are valid")
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Reduction suite: chord -> overlap -> implicit segments and overlap ->
/// square-L with query accounting. Panics if a query budget is exceeded.
pub fn bench_reductions(sizes: &[usize], seeds: &[u64]) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &n in sizes {
        for &seed in seeds {
            let mut rng = rng_for(seed);
            let circle = random_circle(&mut rng, n);
            let rec = |op: &str, ms: f64, queries: u64| BenchRecord {
                kind: "circle".into(),
                n,
                kappa: 0,
                seed,
                op: op.into(),
                ms,
                queries,
                subproblems: 0,
                nodes: 0,
            };

            let t = std::time::Instant::now();
            let overlap = crate::reductions::circle_to_overlap(&circle);
            out.push(rec("circle_to_overlap", ms(t.elapsed()), 0));

            let t = std::time::Instant::now();
            let gseg = crate::reductions::overlap_to_grounded_segments(&overlap);
            out.push(rec("overlap_to_gseg", ms(t.elapsed()), 0));
            let packed = crate::formats::pack_gseg(&gseg).expect("canonical ids");
            assert!(
                8 * packed.len() as u64
                    <= 4 * n as u64 * crate::formats::endpoint_bits(n) as u64 + 64,
                "implicit encoding exceeded its bit budget"
            );

            let r = crate::reductions::construct_square_l(&overlap).expect("self-validation");
            assert!(r.queries <= 2 * n as u64, "square-L used more than 2n queries");
            out.push(rec("squarel_construct", ms(r.construct_time), r.queries));
            out.push(rec("squarel_validate", ms(r.validate_time), 0));
        }
    }
    out
}

/// Circle DP timing across sizes.
pub fn bench_circle_dp(sizes: &[usize], seeds: &[u64]) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &n in sizes {
        for &seed in seeds {
            let mut rng = rng_for(seed);
            let overlap = random_overlap(&mut rng, n);
            let r = crate::solvers::circle_mwis(&overlap, &Default::default());
            out.push(BenchRecord {
                kind: "overlap".into(),
                n,
                kappa: 0,
                seed,
                op: "circle_dp".into(),
                ms: ms(r.stats.wall),
                queries: 0,
                subproblems: r.stats.subproblems,
                nodes: 0,
            });
        }
    }
    out
}

/// Separator DP suite; asserts the subproblem counter against n² f(κ)².
pub fn bench_bounded(sizes: &[usize], seeds: &[u64], kappa: i64) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    let f = crate::solvers::separator_count(kappa);
    for &n in sizes {
        for &seed in seeds {
            let mut rng = rng_for(seed);
            let rep = random_bounded(&mut rng, n, kappa, 4 * n as i64 + 4);
            let r = crate::solvers::bounded_monotone_mis(&rep).expect("valid instance");
            let bound = 4 * (n as u64) * (n as u64) * f * f;
            assert!(r.stats.subproblems <= bound, "subproblem counter exceeded c n^2 f^2");
            out.push(BenchRecord {
                kind: "bounded-strings".into(),
                n,
                kappa,
                seed,
                op: "bounded_dp".into(),
                ms: ms(r.stats.wall),
                queries: 0,
                subproblems: r.stats.subproblems,
                nodes: r.stats.nodes,
            });
        }
    }
    out
}

/// Approximation suite on mixed-quadrant L-shape scenes.
pub fn bench_approx(sizes: &[usize], seeds: &[u64]) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &n in sizes {
        for &seed in seeds {
            let mut rng = rng_for(seed);
            let set = random_lshapes(&mut rng, n, 4 * n as i64, 12, true, true);
            let r = crate::approx::approx_all_quadrants(&set).expect("valid instance");
            out.push(BenchRecord {
                kind: "lshape".into(),
                n,
                kappa: 0,
                seed,
                op: "approx_lshapes".into(),
                ms: ms(r.stats.wall),
                queries: 0,
                subproblems: r.stats.subproblems,
                nodes: r.stats.nodes,
            });
        }
    }
    out
}

/// Mean time per op and n, plus the ratio to the previous (halved) size.
pub fn ratio_table(records: &[BenchRecord]) -> String {
    let mut ops: Vec<String> = records.iter().map(|r| r.op.clone()).collect();
    ops.sort();
    ops.dedup();
    let mut out = String::new();
    let _ = writeln!(out, "{:<22}{:>10}{:>12}{:>8}", "op", "n", "mean ms", "ratio");
    for op in ops {
        let mut sizes: Vec<usize> =
            records.iter().filter(|r| r.op == op).map(|r| r.n).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let mut prev: Option<f64> = None;
        for n in sizes {
            let times: Vec<f64> = records
                .iter()
                .filter(|r| r.op == op && r.n == n)
                .map(|r| r.ms)
                .collect();
            let mean = times.iter().sum::<f64>() / times.len() as f64;
            match prev {
                Some(p) if p > 0.0 => {
                    let _ = writeln!(out, "{op:<22}{n:>10}{mean:>12.3}{:>8.2}", mean / p);
                }
                _ => {
                    let _ = writeln!(out, "{op:<22}{n:>10}{mean:>12.3}{:>8}", "-");
                }
            }
            prev = Some(mean);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_circle(&mut rng_for(7), 5);
        let b = random_circle(&mut rng_for(7), 5);
        assert_eq!(a, b);
        let c = random_bounded(&mut rng_for(9), 6, 2, 20);
        let d = random_bounded(&mut rng_for(9), 6, 2, 20);
        assert_eq!(c, d);
    }

    #[test]
    fn generated_instances_are_valid() {
        use crate::reps::{validate, validate_bounded, Representation};
        for seed in 0..30 {
            let mut rng = rng_for(seed);
            let c = random_circle(&mut rng, 8);
            assert!(validate(&Representation::Circle(c)).is_empty());
            let o = random_overlap(&mut rng, 8);
            assert!(validate(&Representation::Overlap(o)).is_empty());
            let b = random_bounded(&mut rng, 10, 3, 40);
            assert!(validate_bounded(&b).is_empty(), "{:?}", validate_bounded(&b));
            let l = random_lshapes(&mut rng, 10, 30, 6, true, true);
            assert!(validate(&Representation::LShapes(l)).is_empty());
            let r = random_rects(&mut rng, 10, 30, 6, true);
            assert!(validate(&Representation::Rects(r)).is_empty());
        }
    }

    #[test]
    fn cnf_generator_shape() {
        let f = random_cnf(&mut rng_for(9), 4, 6, 3);
        assert_eq!(f.var_count, 4);
        assert_eq!(f.clauses.len(), 6);
        for c in &f.clauses {
            assert_eq!(c.len(), 3);
            for lit in c {
                assert!(lit.unsigned_abs() >= 1 && lit.unsigned_abs() <= 4);
            }
        }
    }
}
