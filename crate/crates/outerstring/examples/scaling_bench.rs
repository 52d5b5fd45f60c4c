//! A small version of the benchmark harness: runs the reduction and circle
//! DP suites across doubling sizes and prints the CSV plus the time-ratio
//! table.
//!
//! Run with: cargo run --release --example scaling_bench

use outerstring::bench::{bench_circle_dp, bench_reductions, ratio_table, CSV_HEADER};

fn main() {
    let reductions = bench_reductions(&[256, 512, 1024, 2048], &[0, 1]);
    let circle = bench_circle_dp(&[250, 500, 1000], &[0, 1]);

    println!("{CSV_HEADER}");
    for r in reductions.iter().chain(&circle) {
        println!("{}", r.csv_line());
    }
    println!();
    let mut all = reductions;
    all.extend(circle);
    print!("{}", ratio_table(&all));
    println!("\nquery counters stayed within the 2n budget on every reduction run");
}
