//! Write SVG figures for a square-L reduction and a CNF gadget scene.
//!
//! Run with: cargo run --example render_scene
//! Output lands in the current directory.

use outerstring::bench::{random_circle, rng_for};
use outerstring::reductions::{circle_to_overlap, cnf_to_outerstring, overlap_to_square_l};
use outerstring::render::render_svg;
use outerstring::reps::Representation;
use outerstring::sat::CnfFormula;

fn main() -> std::io::Result<()> {
    let circle = random_circle(&mut rng_for(11), 8);
    let overlap = circle_to_overlap(&circle);
    let square = overlap_to_square_l(&overlap).unwrap().rep;

    std::fs::write("circle.svg", render_svg(&Representation::Circle(circle)).unwrap())?;
    std::fs::write("overlap.svg", render_svg(&Representation::Overlap(overlap)).unwrap())?;
    std::fs::write("squarel.svg", render_svg(&Representation::SquareL(square)).unwrap())?;

    let f = CnfFormula::new(4, vec![vec![1, 2, -3], vec![-1, 3, 4], vec![2, -4, 3]]).unwrap();
    let (gadget, _) = cnf_to_outerstring(&f).unwrap();
    std::fs::write("gadget.svg", render_svg(&Representation::Outerstring(gadget)).unwrap())?;

    println!("wrote circle.svg, overlap.svg, squarel.svg, gadget.svg");
    Ok(())
}
