//! Splitting a problem into independent subproblems on either side of a
//! window.

use crate::problem::Problem;

use super::window::Window;
use super::ReductionError;

/// Child problems left and right of a poised window.
///
/// Each child keeps the nodes lying outside the closed window and gains the
/// two vertices of the side it shares with the window. A window touching an
/// end of the strip leaves that child out.
pub fn reduce_main(p: &Problem, w: Window) -> Result<(Option<Problem>, Option<Problem>), ReductionError> {
    let n = p.triangle_count();
    if w.first > w.last || w.last >= n {
        return Err(ReductionError::BadRange { first: w.first, last: w.last, triangles: n });
    }
    let inside = |i: usize| p.membership()[i].iter().any(|&t| w.first <= t && t <= w.last);
    let strip = p.strip();
    let left = if w.first > 0 {
        let sub = strip.substrip(0, w.first - 1).expect("valid range");
        let mut nodes: Vec<_> = (0..p.nodes().len())
            .filter(|&i| !inside(i) && p.membership()[i][0] < w.first)
            .map(|i| p.nodes()[i].clone())
            .collect();
        nodes.push(strip.vertex(w.first).clone());
        nodes.push(strip.vertex(w.first + 1).clone());
        Some(Problem::new(sub, nodes).expect("nodes lie in the left part"))
    } else {
        None
    };
    let right = if w.last + 1 < n {
        let sub = strip.substrip(w.last + 1, n - 1).expect("valid range");
        let mut nodes = vec![strip.vertex(w.last + 1).clone(), strip.vertex(w.last + 2).clone()];
        nodes.extend(
            (0..p.nodes().len())
                .filter(|&i| !inside(i) && p.membership()[i][0] > w.last)
                .map(|i| p.nodes()[i].clone()),
        );
        Some(Problem::new(sub, nodes).expect("nodes lie in the right part"))
    } else {
        None
    };
    Ok((left, right))
}

/// Restrictions to the parts left and right of the empty pair `T_k, T_{k+1}`.
pub fn reduce_00(p: &Problem, k: usize) -> Result<(Problem, Problem), ReductionError> {
    let n = p.triangle_count();
    if k == 0 || k + 2 >= n {
        return Err(ReductionError::Precondition(format!(
            "empty pair must leave a triangle on each side, got T{} in a strip of {n}",
            k + 1
        )));
    }
    if !p.nodes_in_range(k, k + 1).is_empty() {
        return Err(ReductionError::Precondition(format!("T{} and T{} are not empty", k + 1, k + 2)));
    }
    let strip = p.strip();
    let part = |lo: usize, hi: usize| {
        let nodes = (0..p.nodes().len())
            .filter(|&i| p.membership()[i][0] >= lo && p.membership()[i][0] <= hi)
            .map(|i| p.nodes()[i].clone())
            .collect();
        Problem::new(strip.substrip(lo, hi).expect("valid range"), nodes).expect("nodes lie in the part")
    };
    Ok((part(0, k - 1), part(k + 2, n - 1)))
}

/// First `k` such that `T_k` and `T_{k+1}` are both empty and neither is an
/// end triangle.
pub fn find_empty_pair(p: &Problem) -> Option<usize> {
    let n = p.triangle_count();
    (1..n.saturating_sub(2)).find(|&k| p.nodes_in_range(k, k + 1).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{rat, Point};
    use crate::strip::zigzag;

    fn centroid(p: &Problem, t: usize) -> Point {
        let tri = p.strip().triangle(t);
        let third = rat(1, 3);
        Point::new(
            (&tri[0].x + &tri[1].x + &tri[2].x) * &third,
            (&tri[0].y + &tri[1].y + &tri[2].y) * &third,
        )
    }

    #[test]
    fn whole_strip_window_has_no_children() {
        let s = zigzag(2);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        assert_eq!(reduce_main(&p, Window::new(0, 1)).unwrap(), (None, None));
    }

    #[test]
    fn three_in_the_middle() {
        // zigzag(5), three nodes in T3 only
        let s = zigzag(5);
        let base = Problem::new(s.clone(), vec![]).unwrap();
        let c = centroid(&base, 2);
        let tri = s.triangle(2);
        let nodes = vec![
            s.vertex(0).clone(),
            centroid(&base, 0),
            c.clone(),
            c.lerp(&tri[0], &rat(1, 2)),
            c.lerp(&tri[2], &rat(1, 2)),
            centroid(&base, 4),
            s.vertex(6).clone(),
        ];
        let p = Problem::new(s.clone(), nodes).unwrap();
        let (left, right) = reduce_main(&p, Window::single(2)).unwrap();
        let (left, right) = (left.unwrap(), right.unwrap());
        assert_eq!(left.strip().offset(), 0);
        assert_eq!(left.triangle_count(), 2);
        assert_eq!(left.nodes()[2..], [s.vertex(2).clone(), s.vertex(3).clone()]);
        assert_eq!(right.strip().offset(), 3);
        assert_eq!(right.nodes()[..2], [s.vertex(3).clone(), s.vertex(4).clone()]);
        assert_eq!(left.nodes().len() + right.nodes().len(), 7 - 3 + 4);
        assert!(left.is_exact() && right.is_exact());
    }

    #[test]
    fn nodes_on_the_window_are_not_duplicated() {
        // nodes = vertices; window T2 holds V_2, V_3, V_4 and the cut vertices
        let s = zigzag(3);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        let (left, right) = reduce_main(&p, Window::single(1)).unwrap();
        let (left, right) = (left.unwrap(), right.unwrap());
        assert_eq!(left.nodes(), &s.vertices()[..3]);
        assert_eq!(right.nodes(), &s.vertices()[2..]);
    }

    #[test]
    fn empty_pair_restrictions() {
        let s = zigzag(6);
        let base = Problem::new(s.clone(), vec![]).unwrap();
        let nodes = vec![
            s.vertex(0).clone(),
            centroid(&base, 0),
            centroid(&base, 1),
            centroid(&base, 4),
            centroid(&base, 5),
        ];
        let p = Problem::new(s, nodes).unwrap();
        assert_eq!(find_empty_pair(&p), Some(2));
        let (left, right) = reduce_00(&p, 2).unwrap();
        assert_eq!((left.triangle_count(), left.nodes().len()), (2, 3));
        assert_eq!((right.triangle_count(), right.nodes().len()), (2, 2));
        assert_eq!(right.strip().offset(), 4);
        assert!(reduce_00(&p, 0).is_err());
        assert!(reduce_00(&p, 1).is_err());
    }
}
