//! The separator DP for bounded-length rectilinear monotone strings,
//! cross-checked against brute force at small sizes and timed at n = 1000.
//!
//! Run with: cargo run --release --example bounded_strings_dp

use std::collections::BTreeMap;
use std::time::Instant;

use outerstring::bench::{random_bounded, rng_for};
use outerstring::reps::{brute_force_mwis, build_intersection_graph, OuterstringRep, Representation};
use outerstring::solvers::{bounded_monotone_mis, enumerate_separators, separator_count};

fn main() {
    for kappa in 1..=3 {
        let family = enumerate_separators(0, kappa);
        println!(
            "kappa={kappa}: {} separator paths per ground point (f = {})",
            family.len(),
            separator_count(kappa)
        );
    }

    println!("\ncross-check against brute force, kappa=2, n<=12:");
    for seed in 0..10u64 {
        let rep = random_bounded(&mut rng_for(seed), 10, 2, 34);
        let g = build_intersection_graph(&Representation::Outerstring(OuterstringRep {
            strings: rep.strings.clone(),
        }));
        let brute = brute_force_mwis(&g, &BTreeMap::new()).unwrap();
        let dp = bounded_monotone_mis(&rep).unwrap();
        assert_eq!(dp.value, brute.value);
        println!(
            "  seed {seed}: MIS {} ({} subproblems, brute agrees)",
            dp.value, dp.stats.subproblems
        );
    }

    println!("\nscaling run, kappa=2:");
    for n in [125usize, 250, 500, 1000] {
        let rep = random_bounded(&mut rng_for(512), n, 2, 4 * n as i64);
        let t = Instant::now();
        let r = bounded_monotone_mis(&rep).unwrap();
        println!(
            "  n={n:>5}: value {:>4} in {:>8.1} ms, {} subproblems",
            r.value,
            t.elapsed().as_secs_f64() * 1e3,
            r.stats.subproblems
        );
    }
}
