//! Line transformations and the search for a basic subproblem.
//!
//! Replacing two nodes of a triangle by the endpoints of their chord keeps
//! the set of functions vanishing at the nodes unchanged: a linear function
//! vanishing at two points vanishes on the whole line through them.

use num::Signed;

use crate::geometry::{barycentric, chord_of_triangle, line_through, GeometryError, Line, Point};
use crate::problem::Problem;

use super::window::{all_collinear, classify_window, SubproblemType, Window};
use super::ReductionError;

/// Replace nodes `pair.0` and `pair.1` of triangle `t` with their chord's endpoints.
pub fn line_transform(p: &Problem, t: usize, pair: (usize, usize)) -> Result<Problem, ReductionError> {
    let (i, j) = pair;
    if t >= p.triangle_count() {
        return Err(ReductionError::BadRange { first: t, last: t, triangles: p.triangle_count() });
    }
    for k in [i, j] {
        if k >= p.nodes().len() || !p.membership()[k].contains(&t) {
            return Err(ReductionError::NodeNotInTriangle { node: k, triangle: t });
        }
    }
    let (a, b) = chord_of_triangle(&p.strip().triangle(t), &p.nodes()[i], &p.nodes()[j]).map_err(|e| match e {
        GeometryError::CoincidentNodes => ReductionError::CoincidentNodes { first: i, second: j },
        other => unreachable!("nodes were located in the triangle: {other}"),
    })?;
    let mut nodes = p.nodes().to_vec();
    nodes[i] = a;
    nodes[j] = b;
    Ok(p.with_nodes(nodes).expect("chord endpoints lie in the triangle"))
}

/// Evidence that a window is a basic subproblem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCertificate {
    pub window: Window,
    pub kind: SubproblemType,
    /// Line through the two nodes of the first triangle ("2+...+2" only).
    pub chord_left: Option<Line>,
    /// Line through the two nodes of the last triangle ("2+...+2" only).
    pub chord_right: Option<Line>,
    pub basic: bool,
}

impl BasicCertificate {
    /// Certificate for a single triangle: basic iff it holds exactly three
    /// non-collinear nodes.
    pub fn three(p: &Problem, t: usize) -> BasicCertificate {
        let inside = p.nodes_in_triangle(t);
        let collinear = all_collinear(p, &inside);
        BasicCertificate {
            window: Window::single(t),
            kind: SubproblemType::Three { collinear, count: inside.len() },
            chord_left: None,
            chord_right: None,
            basic: inside.len() == 3 && !collinear,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MakeBasic {
    Basic(BasicCertificate),
    /// A transformation pushed a third node into `triangle`.
    EscalatedThree { triangle: usize, problem: Problem },
    Transformed(Problem),
    /// An end triangle holds two coincident nodes, so the window cannot be poised.
    Coincident { triangle: usize },
}

/// Which end of a window a node pair sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Left,
    Right,
}

struct EndCheck {
    pair: (usize, usize),
    line: Line,
    touches_neighbour: bool,
}

/// Chord of an end pair, and whether it reaches the side shared with the
/// rest of the window.
fn check_end(p: &Problem, w: Window, end: End) -> Result<EndCheck, usize> {
    let t = match end {
        End::Left => w.first,
        End::Right => w.last,
    };
    let inside = p.nodes_in_triangle(t);
    debug_assert_eq!(inside.len(), 2);
    let (i, j) = (inside[0], inside[1]);
    let (a, b) = (&p.nodes()[i], &p.nodes()[j]);
    if a == b {
        return Err(t);
    }
    let tri = p.strip().triangle(t);
    let (u, v) = chord_of_triangle(&tri, a, b).expect("end nodes are distinct and inside");
    // corner opposite the shared side: the first corner on the left, the last on the right
    let far = match end {
        End::Left => 0,
        End::Right => 2,
    };
    let weight = |q: &Point| barycentric(&tri, q).expect("non-degenerate")[far].clone();
    let touches_neighbour = !(weight(&u).is_positive() && weight(&v).is_positive());
    Ok(EndCheck {
        pair: (i, j),
        line: line_through(a, b).expect("distinct"),
        touches_neighbour,
    })
}

/// Either certify a "2+1+...+1+2" window as basic, or apply one line
/// transformation that moves a node across the window's shared side.
pub fn make_basic(p: &Problem, w: Window, kind: SubproblemType) -> Result<MakeBasic, ReductionError> {
    if !matches!(kind, SubproblemType::TwoOnesTwo { .. })
        || classify_window(p, w.first, w.last)? != Some(kind)
    {
        return Err(ReductionError::NotTwoOnesTwo(w));
    }
    let left = match check_end(p, w, End::Left) {
        Ok(c) => c,
        Err(triangle) => return Ok(MakeBasic::Coincident { triangle }),
    };
    let right = match check_end(p, w, End::Right) {
        Ok(c) => c,
        Err(triangle) => return Ok(MakeBasic::Coincident { triangle }),
    };
    let (t, pair) = if left.touches_neighbour {
        (w.first, left.pair)
    } else if right.touches_neighbour {
        (w.last, right.pair)
    } else {
        return Ok(MakeBasic::Basic(BasicCertificate {
            window: w,
            kind,
            chord_left: Some(left.line),
            chord_right: Some(right.line),
            basic: true,
        }));
    };
    let q = line_transform(p, t, pair)?;
    let crowded = (w.first..=w.last).find(|&k| q.nodes_in_triangle(k).len() >= 3);
    Ok(match crowded {
        Some(triangle) => MakeBasic::EscalatedThree { triangle, problem: q },
        None => MakeBasic::Transformed(q),
    })
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
    fn transform_examples() {
        let s = zigzag(2);
        let nodes = vec![pt((1, 1), (1, 2)), pt((1, 1), (1, 1)), pt((2, 1), (3, 2))];
        let p = Problem::new(s.clone(), nodes).unwrap();
        let q = line_transform(&p, 0, (0, 1)).unwrap();
        assert_eq!(q.nodes()[0], Point::int(1, 0));
        assert_eq!(q.nodes()[1], Point::int(1, 2));
        assert_eq!(q.nodes()[2], p.nodes()[2]);

        // already on the boundary: fixed point
        assert_eq!(line_transform(&q, 0, (0, 1)).unwrap(), q);

        let dup = Problem::new(s, vec![pt((1, 1), (1, 2)); 2]).unwrap();
        assert_eq!(
            line_transform(&dup, 0, (0, 1)),
            Err(ReductionError::CoincidentNodes { first: 0, second: 1 })
        );
        assert!(matches!(
            line_transform(&p, 1, (0, 2)),
            Err(ReductionError::NodeNotInTriangle { node: 0, triangle: 1 })
        ));
    }

    #[test]
    fn non_basic_two_two_escalates() {
        // the pair in T1 lies on the vertical x = 1 through V_2, which is on the shared side
        let s = zigzag(2);
        let nodes = vec![
            pt((1, 1), (1, 2)),
            pt((1, 1), (1, 1)),
            pt((2, 1), (3, 2)),
            pt((5, 2), (3, 2)),
        ];
        let p = Problem::new(s, nodes).unwrap();
        let w = Window::new(0, 1);
        let kind = SubproblemType::TwoOnesTwo { middle: 0 };
        match make_basic(&p, w, kind).unwrap() {
            MakeBasic::EscalatedThree { triangle, problem } => {
                assert_eq!(triangle, 1);
                assert_eq!(problem.nodes_in_triangle(1).len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn basic_two_one_two() {
        // the end pairs lie on x + y = 1/2 and x - y = 7/2, cutting off the apex corners
        let s = zigzag(3);
        let nodes = vec![
            pt((1, 4), (1, 4)),
            pt((3, 8), (1, 8)),
            pt((2, 1), (4, 3)),
            pt((29, 8), (1, 8)),
            pt((15, 4), (1, 4)),
        ];
        let p = Problem::new(s, nodes).unwrap();
        let w = Window::new(0, 2);
        let kind = classify_window(&p, 0, 2).unwrap().unwrap();
        assert_eq!(kind, SubproblemType::TwoOnesTwo { middle: 1 });
        match make_basic(&p, w, kind).unwrap() {
            MakeBasic::Basic(cert) => assert!(cert.basic),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_basic_long_window_shrinks() {
        // "2+1+1+2,2" whose left pair points at the shared side
        let s = zigzag(4);
        let nodes = vec![
            pt((1, 1), (1, 2)),
            pt((1, 1), (1, 1)),
            pt((2, 1), (4, 3)),
            pt((3, 1), (2, 3)),
            pt((7, 2), (5, 4)),
            pt((4, 1), (5, 4)),
        ];
        let p = Problem::new(s, nodes).unwrap();
        let kind = classify_window(&p, 0, 3).unwrap().unwrap();
        assert_eq!(kind, SubproblemType::TwoOnesTwo { middle: 2 });
        match make_basic(&p, Window::new(0, 3), kind).unwrap() {
            MakeBasic::Transformed(q) => {
                assert_eq!(q.nodes_in_triangle(1).len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let s = zigzag(1);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        assert!(make_basic(&p, Window::single(0), SubproblemType::Three { collinear: false, count: 3 }).is_err());
        assert!(BasicCertificate::three(&p, 0).basic);
    }
}
