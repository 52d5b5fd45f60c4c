//! Maximum (weight) independent set on geometric intersection representations.
//!
//! The crate covers four families of inputs and the reductions between them:
//!
//! * circle graphs (chord diagrams) and their overlap-interval form,
//! * implicit grounded-segment representations derived from overlap graphs,
//! * grounded square-L representations,
//! * outerstring scenes: L-shapes, rectangles, grounded polylines, and a
//!   CNF-to-outerstring hardness-instance generator.
//!
//! Exact solvers (interval scheduling, an O(n²) circle DP, branch-and-bound
//! for general outerstring scenes, and a separator DP for bounded-length
//! monotone strings) live in [`solvers`]; the divide-and-conquer
//! log-OPT approximation for L-shapes and rectangles lives in [`approx`].
//! All geometry is exact integer arithmetic; there is no floating point in
//! any predicate.
//!
//! The `outerstring` binary exposes the whole pipeline as subcommands
//! (`generate`, `reduce`, `solve`, `approx`, `verify`, `render`, `bench`);
//! the crate's `examples/` directory has one runnable example per major
//! capability.

pub mod approx;
pub mod bench;
pub mod cli;
pub mod formats;
pub mod geometry;
pub mod reductions;
pub mod render;
pub mod reps;
pub mod sat;
pub mod solvers;

pub use geometry::{Chord, GroundedString, Interval, LKind, LShape, Point, Rectangle, Segment, SquareL};
pub use reps::{IntersectionGraph, MisResult, Representation, SolveStats};
