//! Node counts over ranges of triangles and the bounds every poised problem
//! must satisfy.

use crate::problem::Problem;

use super::ReductionError;

/// Number of nodes lying in the closed union of triangles `k..=m`.
pub fn census(p: &Problem, k: usize, m: usize) -> Result<usize, ReductionError> {
    if k > m || m >= p.triangle_count() {
        return Err(ReductionError::BadRange { first: k, last: m, triangles: p.triangle_count() });
    }
    Ok(p.nodes_in_range(k, m).len())
}

/// A range of triangles holding too few or too many nodes for the problem to
/// be poised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NcViolation {
    pub first: usize,
    pub last: usize,
    pub count: usize,
}

/// Admissible node counts for a range of `width` triangles. Ranges touching
/// either end of the strip get the tighter lower bound.
pub fn count_bounds(width: usize, touches_end: bool) -> (usize, usize) {
    let lower = if touches_end { width } else { width.saturating_sub(2) };
    (lower, width + 2)
}

/// First range `(k, m)`, in lexicographic order, whose node count violates
/// its bounds. A range of three empty triangles is the simplest instance.
pub fn necessary_conditions(p: &Problem) -> Option<NcViolation> {
    let n = p.triangle_count();
    // per-node first and last triangle is enough to count closed membership
    let spans: Vec<(usize, usize)> = p
        .membership()
        .iter()
        .map(|t| (t[0], *t.last().expect("located nodes")))
        .collect();
    for k in 0..n {
        for m in k..n {
            let count = spans.iter().filter(|&&(lo, hi)| lo <= m && hi >= k).count();
            let (lower, upper) = count_bounds(m - k + 1, k == 0 || m == n - 1);
            if count < lower || count > upper {
                return Some(NcViolation { first: k, last: m, count });
            }
        }
    }
    None
}

/// Whether `p` satisfies every range bound; used by tests on poised problems.
pub fn satisfies_bounds(p: &Problem) -> bool {
    necessary_conditions(p).is_none()
}
