//! Deciding basic subproblems directly.

use num::{One, Zero};

use crate::geometry::{barycentric, line_through, Line, Point, Rational};
use crate::linalg::{solve, Matrix};
use crate::problem::Problem;
use crate::space::PlFunction;

use super::transform::BasicCertificate;
use super::window::SubproblemType;
use super::ReductionError;

/// Whether the window of a basic certificate is poised on its own. When it
/// is not, the second component is a nonzero function on the window's strip
/// vanishing at every window node.
pub fn basic_poised(
    p: &Problem,
    cert: &BasicCertificate,
) -> Result<(bool, Option<PlFunction>), ReductionError> {
    if !cert.basic {
        return Err(ReductionError::NotBasic);
    }
    let w = cert.window;
    let sub = p
        .strip()
        .substrip(w.first, w.last)
        .map_err(|_| ReductionError::BadRange { first: w.first, last: w.last, triangles: p.triangle_count() })?;
    match cert.kind {
        SubproblemType::Three { collinear, count } => {
            if count != 3 || collinear {
                return Err(ReductionError::NotBasic);
            }
            Ok((true, None))
        }
        SubproblemType::TwoOnesTwo { .. } => two_ones_two(p, cert, sub),
        SubproblemType::EmptyPair { .. } => Err(ReductionError::NotBasic),
    }
}

/// The affine function vanishing on the line through the collinear nodes of
/// triangle `t`, as a function on that triangle's one-triangle strip.
pub(crate) fn collinear_witness(p: &Problem, t: usize) -> PlFunction {
    let pts: Vec<&Point> = p.nodes_in_triangle(t).into_iter().map(|i| &p.nodes()[i]).collect();
    let line = carrier_line(&pts);
    let sub = p.strip().substrip(t, t).expect("valid triangle");
    let values = sub.vertices().iter().map(|v| line.eval(v)).collect();
    PlFunction::new(sub, values).expect("one value per vertex")
}

/// A line through every given point; the points are known to be collinear.
fn carrier_line(pts: &[&Point]) -> Line {
    let a = pts[0];
    match pts.iter().find(|q| **q != a) {
        Some(b) => line_through(a, b).expect("distinct points"),
        None => Line::new(Rational::zero(), Rational::one(), -a.y.clone()).expect("nonzero normal"),
    }
}

fn two_ones_two(
    p: &Problem,
    cert: &BasicCertificate,
    sub: crate::strip::Strip,
) -> Result<(bool, Option<PlFunction>), ReductionError> {
    let w = cert.window;
    let strip = p.strip();
    let lambda = |t: usize, i: usize| barycentric(&strip.triangle(t), &p.nodes()[i]).expect("non-degenerate");

    // window vertices are f..=l+2; values[j] belongs to vertex f + j
    let mut values: Vec<Rational> = vec![Rational::zero(); w.len() + 2];
    values[0] = Rational::one();

    let ends = p.nodes_in_triangle(w.first);
    let (a1, a2) = (lambda(w.first, ends[0]), lambda(w.first, ends[1]));
    let system = Matrix::from_rows(vec![
        vec![a1[1].clone(), a1[2].clone()],
        vec![a2[1].clone(), a2[2].clone()],
    ]);
    let rhs = vec![-a1[0].clone(), -a2[0].clone()];
    let xy = solve(&system, &rhs).map_err(|_| ReductionError::NotBasic)?;
    values[1] = xy[0].clone();
    values[2] = xy[1].clone();

    // each middle triangle and then the first node of the last triangle
    // fixes the value at the next vertex
    for t in w.first + 1..=w.last {
        let node = p.nodes_in_triangle(t)[0];
        let l = lambda(t, node);
        if l[2].is_zero() {
            return Err(ReductionError::NotBasic);
        }
        let j = t - w.first;
        let known = &l[0] * &values[j] + &l[1] * &values[j + 1];
        values[j + 2] = -known / &l[2];
    }

    let candidate = PlFunction::new(sub, values).expect("one value per vertex");
    let last = p.nodes_in_triangle(w.last);
    let c2 = &p.nodes()[last[1]];
    let at_c2 = candidate.eval_in_triangle(w.last - w.first, c2);
    if at_c2.is_zero() {
        Ok((false, Some(candidate)))
    } else {
        Ok((true, None))
    }
}
