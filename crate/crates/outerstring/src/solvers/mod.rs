//! Exact maximum-(weight)-independent-set solvers: interval scheduling, the
//! quadratic circle-graph DP, branch-and-bound for arbitrary outerstring
//! scenes, and the separator DP for bounded-length monotone strings.

mod bounded;
mod circle;
mod interval;
mod outerstring;

pub use bounded::{
    bounded_monotone_mis, enumerate_separators, separator_count, string_between, Dir,
    SeparatorPath,
};
pub use circle::circle_mwis;
pub use interval::interval_mwis;
pub use outerstring::outerstring_mwis_exact;
