//! Interpolation problems: a strip together with a multiset of nodes.

use std::fmt;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::geometry::Point;
use crate::strip::Strip;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("node {} at {point} lies outside the strip", .index + 1)]
    NodeOutside { index: usize, point: Box<Point> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    strip: Strip,
    nodes: Vec<Point>,
    membership: Vec<Vec<usize>>,
}

impl Problem {
    pub fn new(strip: Strip, nodes: Vec<Point>) -> Result<Problem, ProblemError> {
        let membership: Vec<Vec<usize>> = nodes.iter().map(|p| strip.locate(p)).collect();
        if let Some(index) = membership.iter().position(Vec::is_empty) {
            return Err(ProblemError::NodeOutside { index, point: Box::new(nodes[index].clone()) });
        }
        Ok(Problem { strip, nodes, membership })
    }

    pub fn strip(&self) -> &Strip {
        &self.strip
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    /// Triangles containing each node, ascending.
    pub fn membership(&self) -> &[Vec<usize>] {
        &self.membership
    }

    pub fn triangle_count(&self) -> usize {
        self.strip.triangle_count()
    }

    /// Dimension of the piecewise-linear space: one per vertex.
    pub fn dimension(&self) -> usize {
        self.strip.vertices().len()
    }

    pub fn is_exact(&self) -> bool {
        self.nodes.len() == self.dimension()
    }

    /// Indices of nodes lying in closed triangle `t`.
    pub fn nodes_in_triangle(&self, t: usize) -> Vec<usize> {
        self.nodes_in_range(t, t)
    }

    /// Indices of nodes lying in at least one closed triangle of `k..=m`.
    pub fn nodes_in_range(&self, k: usize, m: usize) -> Vec<usize> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, tris)| tris.iter().any(|&t| k <= t && t <= m))
            .map(|(i, _)| i)
            .collect()
    }

    /// Same strip, different nodes.
    pub fn with_nodes(&self, nodes: Vec<Point>) -> Result<Problem, ProblemError> {
        Problem::new(self.strip.clone(), nodes)
    }

    /// Short stable digest of the strip and node list.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("offset {}\n", self.strip.offset()));
        for v in self.strip.vertices() {
            hasher.update(format!("v {} {}\n", v.x, v.y));
        }
        for p in &self.nodes {
            hasher.update(format!("a {} {}\n", p.x, p.y));
        }
        let digest = hasher.finalize();
        digest[..4].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Which boundary sides the interpolating functions are required to vanish on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Boundary {
    #[default]
    None,
    Left,
    Right,
    Both,
}

impl Boundary {
    pub fn left(self) -> bool {
        matches!(self, Boundary::Left | Boundary::Both)
    }

    pub fn right(self) -> bool {
        matches!(self, Boundary::Right | Boundary::Both)
    }

    /// Vertices whose values are pinned to zero by this boundary condition.
    pub fn pinned_vertices(self, strip: &Strip) -> Vec<usize> {
        let last = strip.vertices().len() - 1;
        let mut pinned = Vec::new();
        if self.left() {
            pinned.extend([0, 1]);
        }
        if self.right() {
            pinned.extend([last - 1, last]);
        }
        // a single triangle shares its middle vertex between both sides
        pinned.dedup();
        pinned
    }

    /// The plain problem equivalent to the boundary problem: the endpoints of
    /// each constrained side become extra nodes.
    pub fn augment(self, strip: &Strip, nodes: &[Point]) -> Vec<Point> {
        let mut out = nodes.to_vec();
        out.extend(self.pinned_vertices(strip).into_iter().map(|i| strip.vertex(i).clone()));
        out
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::None => "none",
            Boundary::Left => "left",
            Boundary::Right => "right",
            Boundary::Both => "both",
        })
    }
}

impl std::str::FromStr for Boundary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Boundary::None),
            "left" => Ok(Boundary::Left),
            "right" => Ok(Boundary::Right),
            "both" => Ok(Boundary::Both),
            other => Err(format!("unknown boundary '{other}'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;
    use crate::strip::zigzag;

    #[test]
    fn membership_and_ranges() {
        let s = zigzag(3);
        let side_point = Point::new(rat(3, 2), rat(1, 1));
        let p = Problem::new(s.clone(), vec![side_point, s.vertex(2).clone()]).unwrap();
        assert_eq!(p.membership()[0], vec![0, 1]);
        assert_eq!(p.membership()[1], vec![0, 1, 2]);
        assert_eq!(p.nodes_in_range(2, 2), vec![1]);
        assert_eq!(p.nodes_in_triangle(0), vec![0, 1]);
    }

    #[test]
    fn outside_node_is_rejected() {
        let err = Problem::new(zigzag(1), vec![Point::int(5, 5)]).unwrap_err();
        assert_eq!(err.to_string(), "node 1 at (5, 5) lies outside the strip");
    }

    #[test]
    fn fingerprint_is_stable_and_sensitive() {
        let s = zigzag(2);
        let a = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        let b = Problem::new(s.clone(), s.vertices()[..3].to_vec()).unwrap();
        assert_eq!(a.fingerprint(), a.clone().fingerprint());
        assert_ne!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.fingerprint().len(), 8);
    }

    #[test]
    fn boundary_augmentation() {
        let s = zigzag(3);
        let aug = Boundary::Both.augment(&s, &[]);
        assert_eq!(aug, vec![s.vertex(0).clone(), s.vertex(1).clone(), s.vertex(3).clone(), s.vertex(4).clone()]);
        assert_eq!(Boundary::Right.pinned_vertices(&s), vec![3, 4]);
        assert_eq!(Boundary::Both.pinned_vertices(&zigzag(1)), vec![0, 1, 2]);
        assert_eq!("left".parse::<Boundary>(), Ok(Boundary::Left));
    }
}
