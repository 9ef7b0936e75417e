//! Recognising the subproblem shapes the reductions work with.

use std::fmt;

use crate::geometry::{orient, Orientation};
use crate::problem::Problem;

use super::ReductionError;

/// A run of consecutive triangles `first..=last`, local to a problem's strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Window {
    pub first: usize,
    pub last: usize,
}

impl Window {
    pub fn new(first: usize, last: usize) -> Self {
        debug_assert!(first <= last);
        Window { first, last }
    }

    pub fn single(t: usize) -> Self {
        Window { first: t, last: t }
    }

    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shifted(self, offset: usize) -> Self {
        Window { first: self.first + offset, last: self.last + offset }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.first == self.last {
            write!(f, "T{}", self.first + 1)
        } else {
            write!(f, "T{}..T{}", self.first + 1, self.last + 1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubproblemType {
    /// One triangle holding at least three nodes.
    Three { collinear: bool, count: usize },
    /// Two nodes in each end triangle and one in each of the `middle`
    /// triangles between them, none on a side shared inside the window.
    TwoOnesTwo { middle: usize },
    /// Two adjacent node-free triangles away from both ends of the strip.
    EmptyPair { first: usize },
}

impl fmt::Display for SubproblemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubproblemType::Three { collinear: true, count: 3 } => f.write_str("3 (collinear)"),
            SubproblemType::Three { count, .. } if *count > 3 => write!(f, "3 ({count} nodes)"),
            SubproblemType::Three { .. } => f.write_str("3"),
            SubproblemType::TwoOnesTwo { middle: 0 } => f.write_str("2+2"),
            SubproblemType::TwoOnesTwo { middle } => {
                f.write_str("2+")?;
                for _ in 0..*middle {
                    f.write_str("1+")?;
                }
                write!(f, "2,{middle}")
            }
            SubproblemType::EmptyPair { .. } => f.write_str("0+0"),
        }
    }
}

/// Whether the given nodes all lie on one line (coincident nodes count).
pub fn all_collinear(p: &Problem, nodes: &[usize]) -> bool {
    let pts: Vec<_> = nodes.iter().map(|&i| &p.nodes()[i]).collect();
    let Some(anchor) = pts.first() else { return true };
    let Some(other) = pts.iter().find(|q| **q != *anchor) else { return true };
    pts.iter().all(|q| orient(anchor, other, q) == Orientation::Collinear)
}

pub fn classify_window(
    p: &Problem,
    first: usize,
    last: usize,
) -> Result<Option<SubproblemType>, ReductionError> {
    let n = p.triangle_count();
    if first > last || last >= n {
        return Err(ReductionError::BadRange { first, last, triangles: n });
    }
    if first == last {
        let inside = p.nodes_in_triangle(first);
        return Ok((inside.len() >= 3).then(|| SubproblemType::Three {
            collinear: all_collinear(p, &inside),
            count: inside.len(),
        }));
    }
    if last == first + 1 && first >= 1 && last + 2 <= n && p.nodes_in_range(first, last).is_empty() {
        return Ok(Some(SubproblemType::EmptyPair { first }));
    }
    for t in first..=last {
        let want = if t == first || t == last { 2 } else { 1 };
        if p.nodes_in_triangle(t).len() != want {
            return Ok(None);
        }
    }
    let strip = p.strip();
    let on_shared_side = p
        .nodes()
        .iter()
        .any(|a| (first..last).any(|t| strip.on_interior_side(t, a)));
    if on_shared_side {
        return Ok(None);
    }
    Ok(Some(SubproblemType::TwoOnesTwo { middle: last - first - 1 }))
}

/// Leftmost, then shortest, window of shape "2+1+...+1+2".
pub fn find_reducible_subproblem(p: &Problem) -> Option<(Window, SubproblemType)> {
    let n = p.triangle_count();
    for first in 0..n {
        if p.nodes_in_triangle(first).len() != 2 {
            continue;
        }
        for last in first + 1..n {
            if let Ok(Some(ty @ SubproblemType::TwoOnesTwo { .. })) = classify_window(p, first, last) {
                return Some((Window::new(first, last), ty));
            }
            // a window cannot extend past a triangle that breaks the 1-pattern
            if p.nodes_in_triangle(last).len() != 1 {
                break;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{rat, Point};
    use crate::strip::zigzag;

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    #[test]
    fn three_examples() {
        let s = zigzag(1);
        let p = Problem::new(s.clone(), vec![pt((1, 2), (1, 4)), pt((1, 1), (1, 1)), pt((3, 2), (1, 4))]).unwrap();
        assert_eq!(
            classify_window(&p, 0, 0).unwrap(),
            Some(SubproblemType::Three { collinear: false, count: 3 })
        );
        let flat = Problem::new(s, vec![pt((1, 2), (1, 2)), pt((1, 1), (1, 2)), pt((3, 2), (1, 2))]).unwrap();
        assert_eq!(
            classify_window(&flat, 0, 0).unwrap(),
            Some(SubproblemType::Three { collinear: true, count: 3 })
        );
    }

    #[test]
    fn two_two_examples() {
        // zigzag(2): T1 = (0,0),(1,2),(2,0); T2 = (1,2),(2,0),(3,2)
        let s = zigzag(2);
        let nodes = vec![
            pt((1, 2), (1, 4)),
            pt((3, 4), (1, 4)),
            pt((2, 1), (3, 2)),
            pt((5, 2), (3, 2)),
        ];
        let p = Problem::new(s.clone(), nodes.clone()).unwrap();
        assert_eq!(classify_window(&p, 0, 1).unwrap(), Some(SubproblemType::TwoOnesTwo { middle: 0 }));
        assert_eq!(
            find_reducible_subproblem(&p),
            Some((Window::new(0, 1), SubproblemType::TwoOnesTwo { middle: 0 }))
        );

        // move one node onto the shared side (3/2, 1): the window no longer classifies
        let mut moved = nodes;
        moved[3] = pt((3, 2), (1, 1));
        let q = Problem::new(s, moved).unwrap();
        assert_eq!(classify_window(&q, 0, 1).unwrap(), None);
        assert!(classify_window(&q, 0, 2).is_err());
    }

    #[test]
    fn long_window_is_found() {
        let s = zigzag(4);
        let cent = |t: usize| {
            let tri = s.triangle(t);
            Point::new(
                (&tri[0].x + &tri[1].x + &tri[2].x) * rat(1, 3),
                (&tri[0].y + &tri[1].y + &tri[2].y) * rat(1, 3),
            )
        };
        let nodes = vec![
            pt((1, 2), (1, 4)),
            pt((3, 4), (1, 4)),
            cent(1),
            cent(2),
            cent(3),
            cent(3).lerp(s.vertex(5), &rat(1, 2)),
        ];
        let p = Problem::new(s.clone(), nodes).unwrap();
        assert_eq!(
            find_reducible_subproblem(&p),
            Some((Window::new(0, 3), SubproblemType::TwoOnesTwo { middle: 2 }))
        );
        assert_eq!(SubproblemType::TwoOnesTwo { middle: 2 }.to_string(), "2+1+1+2,2");
    }

    #[test]
    fn empty_pair_classification() {
        let s = zigzag(5);
        let p = Problem::new(s, vec![Point::int(0, 0)]).unwrap();
        assert_eq!(classify_window(&p, 1, 2).unwrap(), Some(SubproblemType::EmptyPair { first: 1 }));
        assert_eq!(classify_window(&p, 0, 1).unwrap(), None);
    }
}
