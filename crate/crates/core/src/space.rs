//! Continuous piecewise-linear functions on a strip, stored by their values
//! at the strip's vertices (coefficients in the hat basis).

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::geometry::{barycentric, line_through, Line, Point, Rational};
use crate::strip::{Side, Strip};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("point {0} lies outside the strip")]
    OutsideStrip(Box<Point>),
    #[error("expected {expected} vertex values, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// Value at `p` of the hat function that is 1 at vertex `i` and 0 at every
/// other vertex.
pub fn hat_basis_eval(strip: &Strip, i: usize, p: &Point) -> Result<Rational, SpaceError> {
    let t = *strip
        .locate(p)
        .first()
        .ok_or_else(|| SpaceError::OutsideStrip(Box::new(p.clone())))?;
    if i < t || i > t + 2 {
        return Ok(Rational::zero());
    }
    let lambda = barycentric(&strip.triangle(t), p).expect("strip triangles are non-degenerate");
    Ok(lambda[i - t].clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlFunction {
    strip: Strip,
    values: Vec<Rational>,
}

impl PlFunction {
    pub fn new(strip: Strip, values: Vec<Rational>) -> Result<Self, SpaceError> {
        let expected = strip.vertices().len();
        if values.len() != expected {
            return Err(SpaceError::WrongLength { expected, got: values.len() });
        }
        Ok(PlFunction { strip, values })
    }

    pub fn zero(strip: Strip) -> Self {
        let values = vec![Rational::zero(); strip.vertices().len()];
        PlFunction { strip, values }
    }

    /// The hat function of vertex `i`.
    pub fn hat(strip: Strip, i: usize) -> Self {
        let mut f = PlFunction::zero(strip);
        f.values[i] = Rational::one();
        f
    }

    pub fn strip(&self) -> &Strip {
        &self.strip
    }

    pub fn vertex_values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Evaluate through the lowest-indexed triangle containing `p`.
    pub fn eval(&self, p: &Point) -> Result<Rational, SpaceError> {
        let t = *self
            .strip
            .locate(p)
            .first()
            .ok_or_else(|| SpaceError::OutsideStrip(Box::new(p.clone())))?;
        Ok(self.eval_in_triangle(t, p))
    }

    /// Evaluate the affine piece on triangle `t`, extended to the whole plane.
    pub fn eval_in_triangle(&self, t: usize, p: &Point) -> Rational {
        let lambda =
            barycentric(&self.strip.triangle(t), p).expect("strip triangles are non-degenerate");
        lambda
            .iter()
            .zip(&self.values[t..t + 3])
            .map(|(l, v)| l * v)
            .sum()
    }

    pub fn restrict_to_side(&self, side: &Side) -> SideRestriction {
        let value_at = |p: &Point| {
            let i = self
                .strip
                .vertices()
                .iter()
                .position(|v| v == p)
                .expect("side endpoints are strip vertices");
            self.values[i].clone()
        };
        SideRestriction {
            start: value_at(&side.endpoints.0),
            end: value_at(&side.endpoints.1),
        }
    }

    pub fn zero_set_in_triangle(&self, i: usize) -> ZeroSet {
        let corners = self.strip.triangle(i);
        let vals = &self.values[i..i + 3];
        let zero: Vec<usize> = (0..3).filter(|&k| vals[k].is_zero()).collect();
        match zero.len() {
            3 => ZeroSet::WholeTriangle,
            2 => segment(corners[zero[0]].clone(), corners[zero[1]].clone()),
            1 => {
                let z = zero[0];
                let (a, b) = ((z + 1) % 3, (z + 2) % 3);
                if vals[a].is_positive() == vals[b].is_positive() {
                    ZeroSet::SingleVertex(corners[z].clone())
                } else {
                    let root = edge_root(&corners[a], &vals[a], &corners[b], &vals[b]);
                    segment(corners[z].clone(), root)
                }
            }
            _ => {
                let positive: Vec<bool> = vals.iter().map(Signed::is_positive).collect();
                if positive.iter().all(|&s| s == positive[0]) {
                    return ZeroSet::Empty;
                }
                // the odd-one-out corner shares a sign change with both others
                let odd = (0..3)
                    .find(|&k| positive[(k + 1) % 3] == positive[(k + 2) % 3])
                    .expect("mixed signs over three corners");
                let (a, b) = ((odd + 1) % 3, (odd + 2) % 3);
                let p = edge_root(&corners[odd], &vals[odd], &corners[a], &vals[a]);
                let q = edge_root(&corners[odd], &vals[odd], &corners[b], &vals[b]);
                segment(p, q)
            }
        }
    }
}

fn edge_root(p: &Point, fp: &Rational, q: &Point, fq: &Rational) -> Point {
    let t = fp / (fp - fq);
    p.lerp(q, &t)
}

fn segment(p: Point, q: Point) -> ZeroSet {
    let line = line_through(&p, &q).expect("distinct roots");
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    ZeroSet::LineSegment { chord: (p, q), line }
}

/// `t -> (1 - t) * start + t * end` along a side, `t` in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideRestriction {
    pub start: Rational,
    pub end: Rational,
}

impl SideRestriction {
    pub fn eval(&self, t: &Rational) -> Rational {
        (Rational::one() - t) * &self.start + t * &self.end
    }

    pub fn is_zero(&self) -> bool {
        self.start.is_zero() && self.end.is_zero()
    }

    /// The unique root, if the map is not constant.
    pub fn root(&self) -> Option<Rational> {
        if self.start == self.end {
            None
        } else {
            Some(&self.start / (&self.start - &self.end))
        }
    }
}

/// Zero set of one affine piece, restricted to its closed triangle.
///
/// Chords are reported with their endpoints in ascending point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroSet {
    WholeTriangle,
    LineSegment { chord: (Point, Point), line: Line },
    SingleVertex(Point),
    Empty,
}
