//! The implicit grounded-segment representation: interval [i, j] stands for
//! the segment (i, 0)..(j, 2^j). The stored form is two small integers per
//! segment; the exact verifier materializes the huge heights only to check
//! that proper overlap and geometric intersection coincide.
//!
//! Run with: cargo run --example implicit_segments

use outerstring::bench::{random_overlap, rng_for};
use outerstring::formats::{endpoint_bits, pack_gseg};
use outerstring::reductions::{grounded_segments_intersect, overlap_to_grounded_segments};
use outerstring::reps::GsegMode;

fn main() {
    let n = 48;
    let overlap = random_overlap(&mut rng_for(7), n);
    let gseg = overlap_to_grounded_segments(&overlap);

    let mut agree = 0;
    let mut edges = 0;
    for a in 0..n as u32 {
        for b in (a + 1)..n as u32 {
            let implicit = grounded_segments_intersect(&gseg, a, b, GsegMode::Implicit).unwrap();
            let exact = grounded_segments_intersect(&gseg, a, b, GsegMode::Exact).unwrap();
            assert_eq!(
                implicit, exact,
                "pair ({a},{b}): implicit overlap test and exact geometry disagree"
            );
            agree += 1;
            if exact {
                edges += 1;
            }
        }
    }
    println!("implicit and exact predicates agree on all {agree} pairs ({edges} edges)");
    println!("note: the tallest materialized height is 2^{}", 2 * n - 1);

    let packed = pack_gseg(&gseg).unwrap();
    let bits = 8 * packed.len();
    let budget = 4 * n * endpoint_bits(n) as usize;
    println!("packed size: {bits} bits for n={n} (budget 4 n ceil(log2 2n) = {budget})");
}
