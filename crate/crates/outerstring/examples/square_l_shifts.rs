//! How the square-L construction spaces shapes out: properly overlapping
//! intervals force the later length up, nested and disjoint intervals need
//! no shifting at all, and a chain of disjoint intervals stays compact.
//!
//! Run with: cargo run --example square_l_shifts

use outerstring::geometry::Interval;
use outerstring::reductions::overlap_to_square_l;
use outerstring::reps::OverlapRep;

fn show(name: &str, pairs: &[(i64, i64)]) {
    let intervals: Vec<Interval> =
        pairs.iter().enumerate().map(|(i, (a, b))| Interval::new(i as u32, *a, *b)).collect();
    let rep = OverlapRep { n: pairs.len(), intervals, weights: vec![None; pairs.len()] };
    let r = overlap_to_square_l(&rep).expect("self-validation");
    println!("{name}:");
    for (iv, s) in rep.intervals.iter().zip(&r.rep.shapes) {
        println!(
            "  interval [{:>3}, {:>3}] -> square-L ground {:>3}, arm {:>3}",
            iv.lo, iv.hi, s.ground_x, s.arm
        );
    }
    if r.shifts.entries.is_empty() {
        println!("  no shifts needed");
    } else {
        for e in &r.shifts.entries {
            println!("  shift: from interval {}'s right endpoint on, offset {}", e.id, e.offset);
        }
    }
    println!("  queries: {} (budget 2n = {})\n", r.queries, 2 * pairs.len());
}

fn main() {
    show("properly overlapping pair", &[(0, 2), (1, 3)]);
    show("nested pair", &[(0, 3), (1, 2)]);
    show("disjoint pair", &[(1, 2), (3, 4)]);
    show("ladder of overlaps", &[(0, 3), (2, 5), (4, 7), (6, 9)]);
    show(
        "short intervals under a long one",
        &[(0, 9), (1, 2), (3, 4), (5, 6), (7, 8)],
    );
    let chain: Vec<(i64, i64)> = (0..20).map(|i| (2 * i, 2 * i + 1)).collect();
    show("20-chain of disjoint intervals (coordinates stay linear)", &chain);
}
