//! Weighted rectangle approximation: same recurrence as for L-shapes, but
//! the crossing sets collapse to interval scheduling on y-projections.
//!
//! Run with: cargo run --example approx_rectangles

use outerstring::approx::approx_rectangles;
use outerstring::bench::{random_rects, rng_for};
use outerstring::reps::{brute_force_mwis, build_intersection_graph, Representation};

fn main() {
    println!("{:>5} {:>6} {:>6} {:>8}", "seed", "OPT", "value", "ratio");
    for seed in 0..12u64 {
        let mut rng = rng_for(100 + seed);
        let set = random_rects(&mut rng, 13, 28, 9, true);
        let rep = Representation::Rects(set.clone());
        let g = build_intersection_graph(&rep);
        let opt = brute_force_mwis(&g, &rep.weight_map()).unwrap().value;
        let r = approx_rectangles(&set).unwrap();
        assert!(g.is_independent(&r.chosen));
        assert!(r.value <= opt);
        let bound = opt as f64 / (opt as f64).log2().max(1.0);
        assert!(r.value as f64 >= bound - 1e-9);
        println!("{seed:>5} {opt:>6} {:>6} {:>8.2}", r.value, opt as f64 / r.value as f64);
    }
    println!("\nguarantee: value >= OPT / max(1, log2 OPT) held on every instance");
}
