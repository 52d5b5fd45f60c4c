//! End-to-end pipeline: random circle representation -> overlap intervals
//! -> implicit grounded segments -> grounded square-Ls, with graph-equality
//! checks and an exact MIS comparison at every stage.
//!
//! Run with: cargo run --example circle_pipeline

use std::collections::BTreeMap;

use outerstring::bench::{random_circle, rng_for};
use outerstring::reductions::{circle_to_overlap, overlap_to_grounded_segments, overlap_to_square_l};
use outerstring::reps::{brute_force_mwis, build_intersection_graph, graphs_equal, Representation};
use outerstring::solvers::circle_mwis;

fn main() {
    let n = 10;
    let circle = random_circle(&mut rng_for(42), n);
    println!("circle representation, {n} chords:");
    for c in &circle.chords {
        println!("  chord {}: positions ({}, {})", c.id, c.p, c.q);
    }

    let overlap = circle_to_overlap(&circle);
    let gseg = overlap_to_grounded_segments(&overlap);
    let square = overlap_to_square_l(&overlap).expect("construction self-validates");
    println!(
        "\nsquare-L construction used {} queries, {} shift entries",
        square.queries,
        square.shifts.entries.len()
    );

    let g_chord = build_intersection_graph(&Representation::Circle(circle));
    let g_overlap = build_intersection_graph(&Representation::Overlap(overlap.clone()));
    let g_gseg = build_intersection_graph(&Representation::Gseg(gseg));
    let g_square = build_intersection_graph(&Representation::SquareL(square.rep));

    assert!(graphs_equal(&g_chord, &g_overlap).unwrap());
    assert!(graphs_equal(&g_chord, &g_gseg).unwrap());
    assert!(graphs_equal(&g_chord, &g_square).unwrap());
    println!("all four intersection graphs are identical ({} edges)", g_chord.edges.len());

    let weights = BTreeMap::new();
    let brute = brute_force_mwis(&g_chord, &weights).unwrap();
    let dp = circle_mwis(&overlap, &weights);
    println!("\nbrute-force MIS: value {} set {:?}", brute.value, brute.chosen);
    println!("circle DP MIS:   value {} set {:?}", dp.value, dp.chosen);
    assert_eq!(brute.value, dp.value);
}
