//! Triangle strips: construction, validation, sub-strips and point location.

use num::{Signed, Zero};
use thiserror::Error;

use crate::geometry::{cross, point_in_triangle, Point, Rational, Triangle};

/// Strip axiom violations. Triangle numbers in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StripError {
    #[error("a strip needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("degenerate triangle at {}", .0 + 1)]
    DegenerateTriangle(usize),
    #[error("bad adjacency between {} and {}", .0 + 1, .1 + 1)]
    BadAdjacency(usize, usize),
    #[error("overlap between {} and {}", .0 + 1, .1 + 1)]
    Overlap(usize, usize),
    #[error("substrip range {}..{} out of bounds for {} triangles", .0 + 1, .1 + 1, .2)]
    BadRange(usize, usize, usize),
}

/// A validated strip of triangles `T_i = [V_i, V_{i+1}, V_{i+2}]`.
///
/// Indices are 0-based and local to the strip. A strip cut out of a larger
/// one remembers where it sits through [`Strip::offset`], so reports can name
/// triangles by their position in the original strip.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strip {
    vertices: Vec<Point>,
    offset: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideKind {
    LeftBoundary,
    RightBoundary,
    Interior,
    OtherBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Side {
    pub endpoints: (Point, Point),
    pub kind: SideKind,
}

impl Strip {
    pub fn new(vertices: Vec<Point>) -> Result<Strip, StripError> {
        if vertices.len() < 3 {
            return Err(StripError::TooFewVertices(vertices.len()));
        }
        let strip = Strip { vertices, offset: 0 };
        strip.validate()?;
        Ok(strip)
    }

    fn validate(&self) -> Result<(), StripError> {
        let n = self.triangle_count();
        for i in 0..n {
            let t = self.triangle_ref(i);
            if cross(t[0], t[1], t[2]).is_zero() {
                return Err(StripError::DegenerateTriangle(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ok = match j - i {
                    1 => self.neighbours_share_side(i),
                    2 => self.meet_at_single_vertex(i),
                    _ => triangles_disjoint(&self.triangle_ref(i), &self.triangle_ref(j)),
                };
                if !ok {
                    return Err(if j == i + 1 {
                        StripError::BadAdjacency(i, j)
                    } else {
                        StripError::Overlap(i, j)
                    });
                }
            }
        }
        Ok(())
    }

    /// `T_i` and `T_{i+1}` meet exactly in `[V_{i+1}, V_{i+2}]` iff their
    /// free corners lie strictly on opposite sides of that segment's line.
    fn neighbours_share_side(&self, i: usize) -> bool {
        let v = &self.vertices;
        let a = cross(&v[i + 1], &v[i + 2], &v[i]);
        let b = cross(&v[i + 1], &v[i + 2], &v[i + 3]);
        (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
    }

    /// `T_i` and `T_{i+2}` meet only at `V_{i+2}` iff their corner cones at
    /// that vertex share no ray.
    fn meet_at_single_vertex(&self, i: usize) -> bool {
        let v = &self.vertices;
        let apex = &v[i + 2];
        let first = Cone::new(apex, &v[i], &v[i + 1]);
        let second = Cone::new(apex, &v[i + 3], &v[i + 4]);
        !(first.contains(&second.u)
            || first.contains(&second.w)
            || second.contains(&first.u)
            || second.contains(&first.w))
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        self.vertices.len() - 2
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    /// Position of this strip's first vertex within the strip it was cut from.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn triangle(&self, i: usize) -> Triangle {
        [
            self.vertices[i].clone(),
            self.vertices[i + 1].clone(),
            self.vertices[i + 2].clone(),
        ]
    }

    fn triangle_ref(&self, i: usize) -> [&Point; 3] {
        [&self.vertices[i], &self.vertices[i + 1], &self.vertices[i + 2]]
    }

    /// The strip made of triangles `k..=m`, i.e. vertices `k..=m+2`.
    pub fn substrip(&self, k: usize, m: usize) -> Result<Strip, StripError> {
        let n = self.triangle_count();
        if k > m || m >= n {
            return Err(StripError::BadRange(k, m, n));
        }
        Ok(Strip {
            vertices: self.vertices[k..m + 3].to_vec(),
            offset: self.offset + k,
        })
    }

    pub fn left_side(&self) -> Side {
        Side {
            endpoints: (self.vertices[0].clone(), self.vertices[1].clone()),
            kind: SideKind::LeftBoundary,
        }
    }

    pub fn right_side(&self) -> Side {
        let n = self.triangle_count();
        Side {
            endpoints: (self.vertices[n].clone(), self.vertices[n + 1].clone()),
            kind: SideKind::RightBoundary,
        }
    }

    /// The side `[V_{i+1}, V_{i+2}]` shared by `T_i` and `T_{i+1}`.
    pub fn interior_side(&self, i: usize) -> Side {
        assert!(i + 1 < self.triangle_count(), "no triangle after {i}");
        Side {
            endpoints: (self.vertices[i + 1].clone(), self.vertices[i + 2].clone()),
            kind: SideKind::Interior,
        }
    }

    /// Indices of every closed triangle containing `p`.
    pub fn locate(&self, p: &Point) -> Vec<usize> {
        (0..self.triangle_count())
            .filter(|&i| {
                point_in_triangle(&self.triangle(i), p)
                    .expect("strip triangles are non-degenerate")
                    .is_inside()
            })
            .collect()
    }

    /// Whether `p` lies on the closed segment `[V_{i+1}, V_{i+2}]`.
    pub fn on_interior_side(&self, i: usize, p: &Point) -> bool {
        let a = &self.vertices[i + 1];
        let b = &self.vertices[i + 2];
        if !cross(a, b, p).is_zero() {
            return false;
        }
        let dot_a = (&p.x - &a.x) * (&b.x - &a.x) + (&p.y - &a.y) * (&b.y - &a.y);
        let dot_b = (&p.x - &b.x) * (&a.x - &b.x) + (&p.y - &b.y) * (&a.y - &b.y);
        !dot_a.is_negative() && !dot_b.is_negative()
    }
}

/// Closed convex cone at `apex` spanned by two rays, stored counterclockwise.
struct Cone {
    u: (Rational, Rational),
    w: (Rational, Rational),
}

impl Cone {
    fn new(apex: &Point, a: &Point, b: &Point) -> Cone {
        let u = (&a.x - &apex.x, &a.y - &apex.y);
        let w = (&b.x - &apex.x, &b.y - &apex.y);
        if det2(&u, &w).is_negative() {
            Cone { u: w, w: u }
        } else {
            Cone { u, w }
        }
    }

    fn contains(&self, r: &(Rational, Rational)) -> bool {
        !det2(&self.u, r).is_negative() && !det2(r, &self.w).is_negative()
    }
}

fn det2(u: &(Rational, Rational), w: &(Rational, Rational)) -> Rational {
    &u.0 * &w.1 - &u.1 * &w.0
}

/// Separating-axis test for two closed triangles.
fn triangles_disjoint(s: &[&Point; 3], t: &[&Point; 3]) -> bool {
    let axes = [s, t].into_iter().flat_map(|tri| {
        (0..3).map(move |e| {
            let a = tri[e];
            let b = tri[(e + 1) % 3];
            (&a.y - &b.y, &b.x - &a.x)
        })
    });
    for axis in axes {
        let project = |p: &&Point| &axis.0 * &p.x + &axis.1 * &p.y;
        let (s_min, s_max) = bounds(s.iter().map(project));
        let (t_min, t_max) = bounds(t.iter().map(project));
        if s_max < t_min || t_max < s_min {
            return true;
        }
    }
    false
}

fn bounds(values: impl Iterator<Item = Rational>) -> (Rational, Rational) {
    let values: Vec<Rational> = values.collect();
    let min = values.iter().min().expect("three values").clone();
    let max = values.iter().max().expect("three values").clone();
    (min, max)
}

/// Alternating zigzag `(i, 0), (i+1, 2), ...` with `n` triangles.
pub fn zigzag(n: usize) -> Strip {
    let vertices = (0..n + 2)
        .map(|i| Point::int(i as i64, if i % 2 == 0 { 0 } else { 2 }))
        .collect();
    Strip::new(vertices).expect("zigzag strips are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn build_examples() {
        assert_eq!(zigzag(1).triangle_count(), 1);
        assert_eq!(zigzag(3).triangle_count(), 3);
        let bad = Strip::new(vec![
            Point::int(0, 0),
            Point::int(1, 2),
            Point::int(2, 0),
            Point::int(0, 1),
        ]);
        assert_eq!(bad, Err(StripError::BadAdjacency(0, 1)));
        assert_eq!(bad.unwrap_err().to_string(), "bad adjacency between 1 and 2");
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Strip::new(vec![Point::int(0, 0), Point::int(1, 1)]),
            Err(StripError::TooFewVertices(2))
        );
        let flat = Strip::new(vec![Point::int(0, 0), Point::int(1, 2), Point::int(2, 4)]);
        assert_eq!(flat, Err(StripError::DegenerateTriangle(0)));
        // T_1 and T_3 overlap beyond their shared vertex: V_5 folds back over T_1.
        let folded = Strip::new(vec![
            Point::int(0, 0),
            Point::int(1, 2),
            Point::int(2, 0),
            Point::int(3, 2),
            Point::int(1, 1),
        ]);
        assert!(matches!(folded, Err(StripError::Overlap(_, _)) | Err(StripError::BadAdjacency(_, _))));
        // A spiral whose fourth triangle lands on the first.
        let spiral = Strip::new(vec![
            Point::int(0, 0),
            Point::int(4, 0),
            Point::int(2, 2),
            Point::int(6, 2),
            Point::int(4, 6),
            Point::int(3, 4),
            Point::new(rat(3, 2), rat(1, 2)),
        ]);
        assert!(spiral.is_err());
    }

    #[test]
    fn substrip_examples() {
        let s = zigzag(3);
        assert_eq!(s.substrip(0, 2).unwrap().vertices(), s.vertices());
        let single = s.substrip(1, 1).unwrap();
        assert_eq!(single.triangle_count(), 1);
        assert_eq!(single.triangle(0), s.triangle(1));
        assert_eq!(single.offset(), 1);
        assert_eq!(s.substrip(0, 1).unwrap().vertices(), &s.vertices()[0..4]);
        assert!(s.substrip(2, 3).is_err());
        assert!(s.substrip(2, 1).is_err());
    }

    #[test]
    fn side_examples() {
        let s = zigzag(3);
        assert_eq!(s.left_side().endpoints, (Point::int(0, 0), Point::int(1, 2)));
        assert_eq!(s.right_side().endpoints, (Point::int(3, 2), Point::int(4, 0)));
        assert_eq!(s.right_side().kind, SideKind::RightBoundary);
        let tail = s.substrip(1, 2).unwrap();
        assert_eq!(tail.left_side().endpoints, (Point::int(1, 2), Point::int(2, 0)));
        assert_eq!(s.interior_side(0).endpoints, (Point::int(1, 2), Point::int(2, 0)));
    }

    #[test]
    fn locate_examples() {
        let s = zigzag(2);
        assert_eq!(s.locate(&Point::new(rat(1, 1), rat(2, 3))), vec![0]);
        assert_eq!(s.locate(&Point::new(rat(3, 2), rat(1, 1))), vec![0, 1]);
        assert!(s.locate(&Point::int(10, 10)).is_empty());
        let s3 = zigzag(3);
        assert_eq!(s3.locate(s3.vertex(2)), vec![0, 1, 2]);
    }

    #[test]
    fn vertices_are_located_in_their_triangles() {
        let s = zigzag(6);
        for i in 0..s.triangle_count() {
            let found = s.locate(s.vertex(i + 2));
            assert!(found.contains(&i));
            if i + 1 < s.triangle_count() {
                assert!(found.contains(&(i + 1)));
            }
            if i + 2 < s.triangle_count() {
                assert!(found.contains(&(i + 2)));
            }
        }
    }

    #[test]
    fn interior_side_membership() {
        let s = zigzag(2);
        assert!(s.on_interior_side(0, &Point::new(rat(3, 2), rat(1, 1))));
        assert!(s.on_interior_side(0, &Point::int(1, 2)));
        assert!(!s.on_interior_side(0, &Point::new(rat(1, 2), rat(3, 1))));
        assert!(!s.on_interior_side(0, &Point::int(0, 0)));
    }
}
