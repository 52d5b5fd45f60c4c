//! CNF-SAT as an outerstring scene: every half-assignment gets a block of
//! strings, one per clause it satisfies, and the scene's maximum independent
//! set reaches the clause count exactly when the formula is satisfiable.
//!
//! Run with: cargo run --example seth_gadget

use std::collections::BTreeMap;

use outerstring::reductions::{cnf_to_outerstring, Side};
use outerstring::reps::{build_intersection_graph, Representation};
use outerstring::sat::{sat_brute_force, CnfFormula};
use outerstring::solvers::outerstring_mwis_exact;

fn report(name: &str, f: &CnfFormula) {
    let m = f.clauses.len() as u64;
    let (rep, layout) = cnf_to_outerstring(f).expect("gadget construction");
    let left = layout.string_map.iter().filter(|o| o.side == Side::A).count();
    let right = layout.string_map.len() - left;
    println!("{name}: {} variables, {m} clauses", f.var_count);
    println!("  strings: {left} on the left side, {right} on the right side");
    println!("  clause points: {:?}", layout.clause_points);

    let g = build_intersection_graph(&Representation::Outerstring(rep));
    let mis = outerstring_mwis_exact(&g, &BTreeMap::new());
    let sat = sat_brute_force(f).unwrap();
    println!("  exact MIS = {} (m = {m}), satisfiable = {sat}", mis.value);
    assert_eq!(mis.value == m, sat);
    println!();
}

fn main() {
    report("one clause", &CnfFormula::new(2, vec![vec![1, 2]]).unwrap());
    report("contradiction", &CnfFormula::new(2, vec![vec![1], vec![-1]]).unwrap());
    report(
        "3-SAT, satisfiable",
        &CnfFormula::new(
            4,
            vec![vec![1, 2, -3], vec![-1, 3, 4], vec![2, -4, 3], vec![-2, -3, 4]],
        )
        .unwrap(),
    );
    report(
        "pigeonhole-style, unsatisfiable",
        &CnfFormula::new(
            2,
            vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]],
        )
        .unwrap(),
    );
}
