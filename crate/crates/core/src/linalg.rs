//! Dense exact linear algebra over the rationals.
//!
//! Determinants and kernels use fraction-free (Bareiss) elimination: every
//! row is first scaled to integers, and each elimination step divides exactly
//! by the previous pivot, so intermediate entries stay minors of the input.

use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

use crate::geometry::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("system is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        echelon(&integer_rows(self)).pivots.len()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Each row scaled by the lcm of its denominators, with the scale factors.
fn scaled_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            (ints, lcm)
        })
        .unzip()
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    scaled_rows(m).0
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Column of each pivot, in row order.
    pivots: Vec<usize>,
    swaps: usize,
}

/// Fraction-free row echelon form.
fn echelon(input: &[Vec<BigInt>]) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = input.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: a, pivots, swaps }
}

/// Exact determinant by fraction-free elimination.
pub fn det_exact(m: &Matrix) -> Result<Rational, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows == 0 {
        return Ok(Rational::one());
    }
    let (ints, scales) = scaled_rows(m);
    let e = echelon(&ints);
    if e.pivots.len() < m.rows {
        return Ok(Rational::zero());
    }
    // after Bareiss the last pivot is the determinant of the scaled matrix
    let mut det = e.rows[m.rows - 1][m.cols - 1].clone();
    if e.swaps % 2 == 1 {
        det = -det;
    }
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(Rational::new(det, scale))
}

/// Basis of `{x : m x = 0}`, each vector scaled to coprime integers with a
/// positive last nonzero entry.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let e = echelon(&integer_rows(m));
    let free: Vec<usize> = (0..m.cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m.cols];
            x[f] = Rational::one();
            for (r, &pc) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[r];
                let acc: Rational = (pc + 1..m.cols)
                    .filter(|&j| !row[j].is_zero())
                    .map(|j| Rational::from_integer(row[j].clone()) * &x[j])
                    .sum();
                x[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            primitive(x)
        })
        .collect()
}

/// `x` scaled to coprime integers with a positive last nonzero entry; the
/// zero vector is returned unchanged.
pub fn primitive(x: Vec<Rational>) -> Vec<Rational> {
    if x.iter().all(Zero::is_zero) {
        return x;
    }
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let last = ints.iter().rev().find(|v| !v.is_zero()).cloned().unwrap_or_else(BigInt::one);
    let scale = if last.is_negative() { -gcd } else { gcd };
    ints.into_iter().map(|v| Rational::from_integer(v / &scale)).collect()
}

/// Solve `m x = b` for square nonsingular `m` by Gauss-Jordan elimination.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    let cols = solve_many(m, &[b.to_vec()])?;
    Ok(cols.into_iter().next().expect("one right-hand side"))
}

/// Solve `m x = b` for several right-hand sides at once.
pub fn solve_many(m: &Matrix, rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if let Some(bad) = rhs.iter().find(|b| b.len() != n) {
        return Err(LinalgError::DimensionMismatch { expected: n, got: bad.len() });
    }
    let k = rhs.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(LinalgError::Singular)?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (v, pv) in a[i].iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
    }
    Ok((0..k).map(|j| (0..n).map(|i| a[i][n + j].clone()).collect()).collect())
}
