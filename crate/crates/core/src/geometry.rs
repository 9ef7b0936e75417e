//! Exact planar primitives over arbitrary-precision rationals.
//!
//! Nothing in this module touches floating point: every predicate is decided
//! by the sign of an exact rational expression.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = num::BigRational;

/// Shorthand for building a rational from a small integer fraction.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("coincident nodes")]
    CoincidentNodes,
    #[error("node outside triangle")]
    NodeOutsideTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Affine combination `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        let s = Rational::one() - t;
        Point::new(
            &s * &self.x + t * &other.x,
            &s * &self.y + t * &other.y,
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of `(p, q, r)`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

fn orientation_of(value: &Rational) -> Orientation {
    match value.cmp(&Rational::zero()) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    orientation_of(&cross(p, q, r))
}

/// A closed triangle given by its three corners.
pub type Triangle = [Point; 3];

/// Barycentric coordinates of `p` with respect to `t`.
///
/// Each coordinate is the ratio of the signed area of the sub-triangle
/// opposite a corner to the signed area of `t`, so the sum is exactly one.
pub fn barycentric(t: &Triangle, p: &Point) -> Result<[Rational; 3], GeometryError> {
    let area = cross(&t[0], &t[1], &t[2]);
    if area.is_zero() {
        return Err(GeometryError::DegenerateTriangle);
    }
    let l0 = cross(p, &t[1], &t[2]) / &area;
    let l1 = cross(&t[0], p, &t[2]) / &area;
    let l2 = Rational::one() - &l0 - &l1;
    Ok([l0, l1, l2])
}

/// Where a point sits relative to a closed triangle.
///
/// Edges are named by the corner they are opposite to, so `OnEdge(1)` is the
/// side joining corners 0 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    OnEdge(usize),
    AtVertex(usize),
    Outside,
}

impl Location {
    pub fn is_inside(self) -> bool {
        !matches!(self, Location::Outside)
    }

    pub fn is_on_boundary(self) -> bool {
        matches!(self, Location::OnEdge(_) | Location::AtVertex(_))
    }
}

/// Corner indices of the edge opposite `corner`.
pub fn edge_corners(opposite: usize) -> (usize, usize) {
    match opposite {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => panic!("triangle has three corners, got {opposite}"),
    }
}

pub fn classify_barycentric(lambda: &[Rational; 3]) -> Location {
    if lambda.iter().any(|l| l.is_negative()) {
        return Location::Outside;
    }
    let zeros: Vec<usize> = (0..3).filter(|&i| lambda[i].is_zero()).collect();
    match zeros.as_slice() {
        [] => Location::Interior,
        [e] => Location::OnEdge(*e),
        [a, b] => Location::AtVertex(3 - a - b),
        _ => unreachable!("barycentric coordinates sum to one"),
    }
}

pub fn point_in_triangle(t: &Triangle, p: &Point) -> Result<Location, GeometryError> {
    Ok(classify_barycentric(&barycentric(t, p)?))
}

/// The locus `a*x + b*y + c = 0`, stored with integer coefficients that are
/// coprime and whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Line {
    /// Canonical line from arbitrary coefficients; `None` when `a = b = 0`.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Option<Line> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let coeffs = [a, b, c];
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut ints: Vec<BigInt> = coeffs
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let first = ints.iter().find(|v| !v.is_zero()).expect("nonzero normal");
        let scale = if first.is_negative() { -gcd } else { gcd };
        for v in ints.iter_mut() {
            *v = &*v / &scale;
        }
        let [a, b, c]: [BigInt; 3] = ints.try_into().expect("three coefficients");
        Some(Line {
            a: Rational::from_integer(a),
            b: Rational::from_integer(b),
            c: Rational::from_integer(c),
        })
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    let a = &p.y - &q.y;
    let b = &q.x - &p.x;
    let c = -(&a * &p.x + &b * &p.y);
    Ok(Line::new(a, b, c).expect("distinct points give a nonzero normal"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentHit {
    Empty,
    Point(Point),
    Overlap(Point, Point),
}

/// Intersection of the closed segment `s` with the line `l`.
pub fn segment_line_intersection(s: (&Point, &Point), l: &Line) -> SegmentHit {
    let (p, q) = s;
    let fp = l.eval(p);
    let fq = l.eval(q);
    match (fp.is_zero(), fq.is_zero()) {
        (true, true) => SegmentHit::Overlap(p.clone(), q.clone()),
        (true, false) => SegmentHit::Point(p.clone()),
        (false, true) => SegmentHit::Point(q.clone()),
        (false, false) => {
            if fp.is_positive() == fq.is_positive() {
                SegmentHit::Empty
            } else {
                let t = &fp / (&fp - &fq);
                SegmentHit::Point(p.lerp(q, &t))
            }
        }
    }
}

/// The two points where the line through `a` and `b` leaves the closed
/// triangle `t`, ordered along the direction from `a` to `b`.
///
/// When the line carries a whole side of `t`, that side's endpoints are
/// returned.
pub fn chord_of_triangle(
    t: &Triangle,
    a: &Point,
    b: &Point,
) -> Result<(Point, Point), GeometryError> {
    if a == b {
        return Err(GeometryError::CoincidentNodes);
    }
    for p in [a, b] {
        if !point_in_triangle(t, p)?.is_inside() {
            return Err(GeometryError::NodeOutsideTriangle);
        }
    }
    let line = line_through(a, b)?;
    let mut hits: Vec<Point> = Vec::with_capacity(4);
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        match segment_line_intersection((&t[i], &t[j]), &line) {
            SegmentHit::Empty => {}
            SegmentHit::Point(p) => hits.push(p),
            SegmentHit::Overlap(p, q) => {
                hits.clear();
                hits.push(p);
                hits.push(q);
                break;
            }
        }
    }
    hits.sort();
    hits.dedup();
    debug_assert_eq!(hits.len(), 2, "a line through two points of a triangle crosses its boundary twice");
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let param = |p: &Point| (&p.x - &a.x) * &dx + (&p.y - &a.y) * &dy;
    hits.sort_by_key(|p| param(p));
    let q = hits.pop().expect("two hits");
    let p = hits.pop().expect("two hits");
    Ok((p, q))
}
