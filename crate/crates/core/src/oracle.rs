//! Brute-force ground truth: the Vandermonde system of a problem, decided by
//! exact determinant and rank.

use num::Zero;
use thiserror::Error;

use crate::geometry::{barycentric, Rational};
use crate::linalg::{det_exact, nullspace, solve, solve_many, LinalgError, Matrix};
use crate::problem::{Boundary, Problem};
use crate::space::PlFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("not poised")]
    NotPoised,
    #[error("expected {expected} data values, got {got}")]
    DataLength { expected: usize, got: usize },
}

/// Entry `(i, j)` is the hat function of vertex `i` evaluated at node `j`.
pub fn vandermonde_matrix(p: &Problem) -> Matrix {
    let strip = p.strip();
    let mut m = Matrix::zeros(p.dimension(), p.nodes().len());
    for (j, (node, tris)) in p.nodes().iter().zip(p.membership()).enumerate() {
        let t = tris[0];
        let lambda = barycentric(&strip.triangle(t), node).expect("strip triangles are non-degenerate");
        for (k, l) in lambda.into_iter().enumerate() {
            m[(t + k, j)] = l;
        }
    }
    m
}

/// The Vandermonde determinant, or `None` when the problem is not exact.
pub fn oracle_determinant(p: &Problem) -> Option<Rational> {
    if !p.is_exact() {
        return None;
    }
    Some(det_exact(&vandermonde_matrix(p)).expect("exact problems give square matrices"))
}

pub fn oracle_poised(p: &Problem) -> bool {
    oracle_determinant(p).is_some_and(|d| !d.is_zero())
}

/// Basis of the functions vanishing at every node.
pub fn kernel_basis(p: &Problem) -> Vec<PlFunction> {
    nullspace(&vandermonde_matrix(p).transpose())
        .into_iter()
        .map(|v| PlFunction::new(p.strip().clone(), v).expect("one value per vertex"))
        .collect()
}

/// `s_i` with `s_i(A_j) = [i == j]`, one per node.
pub fn fundamental_functions(p: &Problem) -> Result<Vec<PlFunction>, OracleError> {
    if !p.is_exact() {
        return Err(OracleError::NotPoised);
    }
    let m = p.nodes().len();
    let system = vandermonde_matrix(p).transpose();
    let unit = |i: usize| (0..m).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }).collect();
    let rhs: Vec<Vec<Rational>> = (0..m).map(unit).collect();
    let columns = solve_many(&system, &rhs).map_err(|e| match e {
        LinalgError::Singular => OracleError::NotPoised,
        other => unreachable!("square system: {other}"),
    })?;
    Ok(columns
        .into_iter()
        .map(|v| PlFunction::new(p.strip().clone(), v).expect("one value per vertex"))
        .collect())
}

/// The unique interpolant of `data` at the nodes.
pub fn interpolate(p: &Problem, data: &[Rational]) -> Result<PlFunction, OracleError> {
    if data.len() != p.nodes().len() {
        return Err(OracleError::DataLength { expected: p.nodes().len(), got: data.len() });
    }
    if !p.is_exact() {
        return Err(OracleError::NotPoised);
    }
    let values = solve(&vandermonde_matrix(p).transpose(), data).map_err(|_| OracleError::NotPoised)?;
    Ok(PlFunction::new(p.strip().clone(), values).expect("one value per vertex"))
}

/// Determinant of the problem posed in the subspace of functions vanishing
/// on the sides named by `boundary`, or `None` when the node count differs
/// from that subspace's dimension.
pub fn boundary_determinant(p: &Problem, boundary: Boundary) -> Option<Rational> {
    let pinned = boundary.pinned_vertices(p.strip());
    let full = vandermonde_matrix(p);
    let kept: Vec<Vec<Rational>> = (0..full.rows())
        .filter(|i| !pinned.contains(i))
        .map(|i| full.row(i).to_vec())
        .collect();
    if kept.len() != p.nodes().len() {
        return None;
    }
    if kept.is_empty() {
        return Some(Rational::from_integer(1.into()));
    }
    Some(det_exact(&Matrix::from_rows(kept)).expect("square by construction"))
}

pub fn boundary_poised(p: &Problem, boundary: Boundary) -> bool {
    boundary_determinant(p, boundary).is_some_and(|d| !d.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat, Point};
    use crate::strip::zigzag;

    fn pt(x: Rational, y: Rational) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn vandermonde_examples() {
        let s = zigzag(3);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        assert_eq!(vandermonde_matrix(&p), Matrix::identity(5));

        let c = Problem::new(zigzag(1), vec![pt(int(1), rat(2, 3))]).unwrap();
        assert_eq!(vandermonde_matrix(&c).column(0), vec![rat(1, 3), rat(1, 3), rat(1, 3)]);

        let q = pt(rat(5, 2), rat(1, 2));
        let d = Problem::new(s, vec![q.clone(), q]).unwrap();
        let m = vandermonde_matrix(&d);
        assert_eq!(m.column(0), m.column(1));
    }

    #[test]
    fn poised_examples() {
        let s = zigzag(2);
        assert!(oracle_poised(&Problem::new(s.clone(), s.vertices().to_vec()).unwrap()));
        let collinear = vec![
            pt(rat(1, 2), rat(1, 2)),
            pt(int(1), rat(1, 2)),
            pt(rat(3, 2), rat(1, 2)),
        ];
        assert!(!oracle_poised(&Problem::new(zigzag(1), collinear).unwrap()));
        assert!(!oracle_poised(&Problem::new(s.clone(), s.vertices()[..3].to_vec()).unwrap()));
        assert_eq!(oracle_determinant(&Problem::new(s.clone(), vec![]).unwrap()), None);
    }

    #[test]
    fn kernel_examples() {
        let s = zigzag(1);
        let poised = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        assert!(kernel_basis(&poised).is_empty());

        let two = Problem::new(s.clone(), s.vertices()[..2].to_vec()).unwrap();
        let k = kernel_basis(&two);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].vertex_values(), &[int(0), int(0), int(1)]);

        let under = Problem::new(zigzag(4), vec![Point::int(0, 0)]).unwrap();
        assert_eq!(kernel_basis(&under).len(), 5);
    }

    #[test]
    fn fundamental_examples() {
        let s = zigzag(2);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        let f = fundamental_functions(&p).unwrap();
        for (i, fi) in f.iter().enumerate() {
            assert_eq!(fi, &PlFunction::hat(s.clone(), i));
        }

        // nodes (0,0), (1,2), (1,0): the third fundamental function is 1 at
        // (1,0) = (V_1 + V_3)/2 and 0 at V_1, V_2, so its value at V_3 is 2.
        let q = Problem::new(zigzag(1), vec![Point::int(0, 0), Point::int(1, 2), Point::int(1, 0)]).unwrap();
        let f = fundamental_functions(&q).unwrap();
        assert_eq!(f[2].vertex_values(), &[int(0), int(0), int(2)]);
        assert_eq!(f[0].vertex_values(), &[int(1), int(0), int(-1)]);
        for (i, fi) in f.iter().enumerate() {
            for (j, node) in q.nodes().iter().enumerate() {
                assert_eq!(fi.eval(node).unwrap(), if i == j { int(1) } else { int(0) });
            }
        }

        let bad = Problem::new(zigzag(1), vec![Point::int(0, 0); 3]).unwrap();
        assert_eq!(fundamental_functions(&bad), Err(OracleError::NotPoised));
    }

    #[test]
    fn interpolate_examples() {
        let s = zigzag(3);
        let p = Problem::new(s.clone(), s.vertices().to_vec()).unwrap();
        let zero = interpolate(&p, &vec![int(0); 5]).unwrap();
        assert!(zero.is_zero());
        let data: Vec<Rational> = (0..5).map(|i| rat(i - 2, 3)).collect();
        assert_eq!(interpolate(&p, &data).unwrap().vertex_values(), data.as_slice());
        assert_eq!(
            interpolate(&p, &data[..4]),
            Err(OracleError::DataLength { expected: 5, got: 4 })
        );
    }

    #[test]
    fn boundary_oracle_matches_augmented() {
        let s = zigzag(3);
        let interior = vec![pt(int(2), rat(1, 2)), pt(int(2), int(1)), pt(rat(5, 2), int(1))];
        let p = Problem::new(s.clone(), interior.clone()).unwrap();
        for b in [Boundary::Left, Boundary::Right] {
            let aug = Problem::new(s.clone(), b.augment(&s, &interior)).unwrap();
            assert_eq!(boundary_poised(&p, b), oracle_poised(&aug));
        }
    }
}
