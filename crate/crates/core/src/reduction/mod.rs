//! Structural decision procedure: census bounds, subproblem discovery, line
//! transformations, basic checks and the recursive splits.

mod basic;
mod census;
mod engine;
mod split;
mod trace;
mod transform;
mod window;

use thiserror::Error;

pub use basic::basic_poised;
pub use census::{census, count_bounds, necessary_conditions, satisfies_bounds, NcViolation};
pub use engine::{decide, decide_with, DecideOptions, Reason, Verdict};
pub use split::{find_empty_pair, reduce_00, reduce_main};
pub use trace::{Action, TraceNode, TraceStep};
pub use transform::{line_transform, make_basic, BasicCertificate, MakeBasic};
pub use window::{all_collinear, classify_window, find_reducible_subproblem, SubproblemType, Window};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("triangle range {}..{} is invalid for a strip of {triangles} triangles", .first + 1, .last + 1)]
    BadRange { first: usize, last: usize, triangles: usize },
    #[error("nodes {} and {} coincide", .first + 1, .second + 1)]
    CoincidentNodes { first: usize, second: usize },
    #[error("node {} is not in triangle T{}", .node + 1, .triangle + 1)]
    NodeNotInTriangle { node: usize, triangle: usize },
    #[error("window {0} is not of type 2+1+...+1+2")]
    NotTwoOnesTwo(Window),
    #[error("not a basic certificate")]
    NotBasic,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
