//! Seeded generation of strips and node configurations.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{orient, point_in_triangle, rat, Location, Orientation, Point, Rational, Triangle};
use crate::oracle::kernel_basis;
use crate::problem::Problem;
use crate::reduction::{classify_window, make_basic, MakeBasic, SubproblemType, Window};
use crate::space::ZeroSet;
use crate::strip::Strip;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("inconsistent generator spec: {0}")]
    Inconsistent(String),
    #[error("no instance found after {0} attempts")]
    Exhausted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Exact node count; a mix of near-vertex, per-triangle and degenerate layouts.
    RandomExact,
    Vertices,
    /// "2+1+2" basic window filling a three-triangle strip.
    Basic212,
    /// "2+1+...+1+2" basic window with `m` middle triangles filling the strip.
    Basic2m2 { m: usize },
    /// Three non-collinear interior nodes in a single triangle.
    BasicThree,
    /// Like `Basic2m2` but with the last node on the zero line of the
    /// window's candidate kernel function.
    NonpoisedBasic { m: usize },
    /// Exact problem with two adjacent empty triangles away from the ends.
    EmptyPair,
    /// Exact problem with three collinear nodes in one triangle.
    CollinearThree,
    Underdetermined,
    Overdetermined,
}

impl Pattern {
    pub const NAMES: [&'static str; 10] = [
        "random-exact",
        "vertices",
        "basic-212",
        "basic-2m2",
        "basic-three",
        "nonpoised-2m2",
        "empty-pair",
        "collinear-three",
        "underdetermined",
        "overdetermined",
    ];

    /// Parse a pattern name; `m` is used by the patterns that take one.
    pub fn from_name(name: &str, m: Option<usize>) -> Result<Pattern, GenError> {
        let need_m = || m.ok_or_else(|| GenError::Inconsistent(format!("pattern {name} needs --m")));
        Ok(match name {
            "random-exact" => Pattern::RandomExact,
            "vertices" => Pattern::Vertices,
            "basic-212" => Pattern::Basic212,
            "basic-2m2" => Pattern::Basic2m2 { m: need_m()? },
            "basic-three" => Pattern::BasicThree,
            "nonpoised-2m2" => Pattern::NonpoisedBasic { m: need_m()? },
            "empty-pair" => Pattern::EmptyPair,
            "collinear-three" => Pattern::CollinearThree,
            "underdetermined" => Pattern::Underdetermined,
            "overdetermined" => Pattern::Overdetermined,
            other => return Err(GenError::Inconsistent(format!("unknown pattern '{other}'"))),
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::RandomExact => f.write_str("random-exact"),
            Pattern::Vertices => f.write_str("vertices"),
            Pattern::Basic212 => f.write_str("basic-212"),
            Pattern::Basic2m2 { m } => write!(f, "basic-2m2 (m = {m})"),
            Pattern::BasicThree => f.write_str("basic-three"),
            Pattern::NonpoisedBasic { m } => write!(f, "nonpoised-2m2 (m = {m})"),
            Pattern::EmptyPair => f.write_str("empty-pair"),
            Pattern::CollinearThree => f.write_str("collinear-three"),
            Pattern::Underdetermined => f.write_str("underdetermined"),
            Pattern::Overdetermined => f.write_str("overdetermined"),
        }
    }
}

impl FromStr for Pattern {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::from_name(s, None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub seed: u64,
    pub n: usize,
    pub pattern: Pattern,
}

const MAX_ATTEMPTS: usize = 1000;

/// A zigzag strip whose vertices are moved by at most 1/4 in each coordinate,
/// with denominators up to 64.
pub fn random_zigzag_strip<R: Rng>(n: usize, rng: &mut R) -> Strip {
    assert!(n >= 1, "a strip needs at least one triangle");
    loop {
        let vertices = (0..n + 2)
            .map(|i| {
                let base = Point::int(i as i64, if i % 2 == 0 { 0 } else { 2 });
                Point::new(base.x + jitter(rng), base.y + jitter(rng))
            })
            .collect();
        if let Ok(s) = Strip::new(vertices) {
            return s;
        }
    }
}

/// Strip for `(n, seed)`, reproducible across runs.
pub fn seeded_strip(n: usize, seed: u64) -> Strip {
    random_zigzag_strip(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn jitter<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_bool(0.25) {
        return Rational::zero();
    }
    let d: i64 = rng.gen_range(1..=64);
    let bound = d / 4;
    rat(rng.gen_range(-bound..=bound), d)
}

pub fn generate(spec: GenSpec) -> Result<Problem, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    generate_with(spec.pattern, spec.n, &mut rng)
}

/// Like [`generate`], drawing from a caller-supplied generator.
pub fn generate_with<R: Rng>(pattern: Pattern, n: usize, rng: &mut R) -> Result<Problem, GenError> {
    if n == 0 {
        return Err(GenError::Inconsistent("n must be at least 1".into()));
    }
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(GenError::Inconsistent(format!("pattern {pattern} needs {what}, got n = {n}")))
        }
    };
    match pattern {
        Pattern::Basic212 => need(n == 3, "n = 3")?,
        Pattern::Basic2m2 { m } => need(n == m + 2, "n = m + 2")?,
        // a basic "2+1+2" window is always poised
        Pattern::NonpoisedBasic { m } => need(n == m + 2 && m != 1, "n = m + 2 and m != 1")?,
        Pattern::BasicThree => need(n == 1, "n = 1")?,
        Pattern::EmptyPair => need(n >= 4, "n >= 4")?,
        _ => {}
    }
    let strip = random_zigzag_strip(n, rng);
    let problem = |nodes: Vec<Point>| Problem::new(strip.clone(), nodes).expect("generated nodes lie in the strip");
    match pattern {
        Pattern::Vertices => Ok(problem(strip.vertices().to_vec())),
        Pattern::RandomExact => Ok(problem(random_exact(&strip, rng))),
        Pattern::Basic212 | Pattern::Basic2m2 { .. } => basic_window(&strip, rng),
        Pattern::BasicThree => Ok(problem(three_in(rng, &strip.triangle(0)))),
        Pattern::NonpoisedBasic { .. } => nonpoised_window(&strip, rng),
        Pattern::EmptyPair => Ok(problem(empty_pair(&strip, rng))),
        Pattern::CollinearThree => Ok(problem(collinear_three(&strip, rng))),
        Pattern::Underdetermined => {
            let count = (n + 2).saturating_sub(rng.gen_range(1..=2));
            Ok(problem(scatter(&strip, rng, count)))
        }
        Pattern::Overdetermined => {
            let count = n + 2 + rng.gen_range(1..=2);
            Ok(problem(scatter(&strip, rng, count)))
        }
    }
}

/// Instance `index` of the fuzzing stream for `seed`, with its pattern and
/// triangle count. Each instance can be regenerated on its own.
pub fn fuzz_instance(seed: u64, index: u64, max_n: usize) -> Result<(Pattern, usize, Problem), GenError> {
    if max_n == 0 {
        return Err(GenError::Inconsistent("max n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(1..=max_n);
    let pattern = mixed_pattern(&mut rng, n);
    Ok((pattern, n, generate_with(pattern, n, &mut rng)?))
}

/// Pattern mix used by the fuzzing harnesses: mostly random exact layouts,
/// plus whichever targeted exact patterns fit `n`.
pub fn mixed_pattern<R: Rng>(rng: &mut R, n: usize) -> Pattern {
    match rng.gen_range(0..10) {
        0 if n == 3 => Pattern::Basic212,
        1 if n >= 2 => Pattern::Basic2m2 { m: n - 2 },
        2 if n >= 4 => Pattern::EmptyPair,
        3 => Pattern::CollinearThree,
        4 if n == 2 || n == 4 => Pattern::NonpoisedBasic { m: n - 2 },
        5 if n == 1 => Pattern::BasicThree,
        6 => Pattern::Vertices,
        _ => Pattern::RandomExact,
    }
}

/// Barycentric weights as small positive integers.
fn weights<R: Rng>(rng: &mut R, k: usize) -> Vec<i64> {
    (0..k).map(|_| rng.gen_range(1..=8)).collect()
}

fn combine(points: &[&Point], w: &[i64]) -> Point {
    let total: i64 = w.iter().sum();
    let mut x = Rational::zero();
    let mut y = Rational::zero();
    for (p, &wi) in points.iter().zip(w) {
        let c = rat(wi, total);
        x += &p.x * &c;
        y += &p.y * &c;
    }
    Point::new(x, y)
}

fn interior_point<R: Rng>(rng: &mut R, t: &Triangle) -> Point {
    combine(&[&t[0], &t[1], &t[2]], &weights(rng, 3))
}

/// A point strictly between `a` and `b`.
fn open_segment_point<R: Rng>(rng: &mut R, a: &Point, b: &Point) -> Point {
    combine(&[a, b], &weights(rng, 2))
}

/// Interior, side or vertex point of `t`, mostly interior.
fn any_point<R: Rng>(rng: &mut R, t: &Triangle) -> Point {
    match rng.gen_range(0..10) {
        0..=6 => interior_point(rng, t),
        7 | 8 => {
            let i = rng.gen_range(0..3);
            open_segment_point(rng, &t[i], &t[(i + 1) % 3])
        }
        _ => t[rng.gen_range(0..3)].clone(),
    }
}

fn scatter<R: Rng>(strip: &Strip, rng: &mut R, count: usize) -> Vec<Point> {
    let n = strip.triangle_count();
    (0..count)
        .map(|_| {
            let t = rng.gen_range(0..n);
            any_point(rng, &strip.triangle(t))
        })
        .collect()
}

/// Node counts per triangle summing to `total`, at least one per triangle
/// when there are enough nodes.
fn composition<R: Rng>(rng: &mut R, triangles: usize, total: usize) -> Vec<usize> {
    let mut counts = vec![0; triangles];
    let mut left = total;
    if total >= triangles {
        counts.iter_mut().for_each(|c| *c = 1);
        left -= triangles;
    }
    for _ in 0..left {
        // favour the end triangles, which need the extra nodes most often
        let t = if rng.gen_bool(0.5) {
            if rng.gen_bool(0.5) {
                0
            } else {
                triangles - 1
            }
        } else {
            rng.gen_range(0..triangles)
        };
        counts[t] += 1;
    }
    counts
}

fn random_exact<R: Rng>(strip: &Strip, rng: &mut R) -> Vec<Point> {
    let n = strip.triangle_count();
    let mut nodes = match rng.gen_range(0..4) {
        // each vertex either stays or moves into a triangle containing it
        0 => (0..n + 2)
            .map(|i| {
                if rng.gen_bool(0.5) {
                    return strip.vertex(i).clone();
                }
                let t = rng.gen_range(i.saturating_sub(2)..=i.min(n - 1));
                any_point(rng, &strip.triangle(t))
            })
            .collect(),
        // per-triangle counts, interior placements only or mixed
        k @ (1 | 2) => {
            let mut out = Vec::with_capacity(n + 2);
            for (t, c) in composition(rng, n, n + 2).into_iter().enumerate() {
                let tri = strip.triangle(t);
                for _ in 0..c {
                    out.push(if k == 1 { interior_point(rng, &tri) } else { any_point(rng, &tri) });
                }
            }
            out
        }
        _ => scatter(strip, rng, n + 2),
    };
    // occasional degeneracies
    if rng.gen_bool(0.15) && nodes.len() >= 2 {
        let i = rng.gen_range(0..nodes.len());
        let j = rng.gen_range(0..nodes.len());
        nodes[i] = nodes[j].clone();
    }
    if rng.gen_bool(0.1) {
        let t = rng.gen_range(0..n);
        let line = collinear_in(rng, &strip.triangle(t));
        let start = rng.gen_range(0..=nodes.len() - 3);
        nodes.splice(start..start + 3, line);
    }
    nodes.shuffle(rng);
    nodes
}

/// Three collinear interior points of `t`.
fn collinear_in<R: Rng>(rng: &mut R, t: &Triangle) -> Vec<Point> {
    let i = rng.gen_range(0..3);
    let p = open_segment_point(rng, &t[i], &t[(i + 1) % 3]);
    let q = open_segment_point(rng, &t[(i + 1) % 3], &t[(i + 2) % 3]);
    let mut params: Vec<i64> = vec![];
    while params.len() < 3 {
        let k = rng.gen_range(1..16);
        if !params.contains(&k) {
            params.push(k);
        }
    }
    params.into_iter().map(|k| p.lerp(&q, &rat(k, 16))).collect()
}

fn three_in<R: Rng>(rng: &mut R, t: &Triangle) -> Vec<Point> {
    loop {
        let pts: Vec<Point> = (0..3).map(|_| interior_point(rng, t)).collect();
        if orient(&pts[0], &pts[1], &pts[2]) != Orientation::Collinear {
            return pts;
        }
    }
}

fn collinear_three<R: Rng>(strip: &Strip, rng: &mut R) -> Vec<Point> {
    let n = strip.triangle_count();
    let t = rng.gen_range(0..n);
    let mut nodes = collinear_in(rng, &strip.triangle(t));
    let others: Vec<usize> = (0..n).filter(|&k| k != t).collect();
    while nodes.len() < n + 2 {
        let k = match others.choose(rng) {
            Some(&k) => k,
            None => break,
        };
        nodes.push(interior_point(rng, &strip.triangle(k)));
    }
    nodes
}

/// Two interior nodes of end triangle `t` on a segment joining the two
/// sides at `apex`, so that their chord misses the opposite side.
fn end_pair<R: Rng>(rng: &mut R, strip: &Strip, t: usize, apex: usize) -> Vec<Point> {
    let tri = strip.triangle(t);
    let others: Vec<usize> = (0..3).filter(|&k| k != apex).collect();
    let p = open_segment_point(rng, &tri[apex], &tri[others[0]]);
    let q = open_segment_point(rng, &tri[apex], &tri[others[1]]);
    let a: i64 = rng.gen_range(1..8);
    let b: i64 = loop {
        let b = rng.gen_range(1..8);
        if b != a {
            break b;
        }
    };
    vec![p.lerp(&q, &rat(a, 8)), p.lerp(&q, &rat(b, 8))]
}

/// Nodes of a "2+1+...+1+2" window covering the strip, without `C_2`.
fn window_nodes<R: Rng>(strip: &Strip, rng: &mut R) -> Vec<Point> {
    let n = strip.triangle_count();
    let mut nodes = end_pair(rng, strip, 0, 0);
    for t in 1..n - 1 {
        nodes.push(interior_point(rng, &strip.triangle(t)));
    }
    nodes.extend(end_pair(rng, strip, n - 1, 2));
    nodes
}

fn certified(p: &Problem) -> bool {
    let n = p.triangle_count();
    match classify_window(p, 0, n - 1) {
        Ok(Some(kind @ SubproblemType::TwoOnesTwo { .. })) => {
            matches!(make_basic(p, Window::new(0, n - 1), kind), Ok(MakeBasic::Basic(_)))
        }
        _ => false,
    }
}

fn basic_window<R: Rng>(strip: &Strip, rng: &mut R) -> Result<Problem, GenError> {
    for _ in 0..MAX_ATTEMPTS {
        let p = Problem::new(strip.clone(), window_nodes(strip, rng)).expect("nodes inside");
        if certified(&p) {
            return Ok(p);
        }
    }
    Err(GenError::Exhausted(MAX_ATTEMPTS))
}

fn nonpoised_window<R: Rng>(strip: &Strip, rng: &mut R) -> Result<Problem, GenError> {
    let n = strip.triangle_count();
    let last = strip.triangle(n - 1);
    for _ in 0..MAX_ATTEMPTS {
        let mut nodes = window_nodes(strip, rng);
        nodes.pop();
        let partial = Problem::new(strip.clone(), nodes.clone()).expect("nodes inside");
        let kernel = kernel_basis(&partial);
        let [f] = kernel.as_slice() else { continue };
        let ZeroSet::LineSegment { chord, .. } = f.zero_set_in_triangle(n - 1) else { continue };
        let c2 = open_segment_point(rng, &chord.0, &chord.1);
        let interior = point_in_triangle(&last, &c2).is_ok_and(|l| l == Location::Interior);
        if !interior || c2 == nodes[nodes.len() - 1] {
            continue;
        }
        nodes.push(c2);
        let p = Problem::new(strip.clone(), nodes).expect("nodes inside");
        if certified(&p) {
            return Ok(p);
        }
    }
    Err(GenError::Exhausted(MAX_ATTEMPTS))
}

fn empty_pair<R: Rng>(strip: &Strip, rng: &mut R) -> Vec<Point> {
    let n = strip.triangle_count();
    let k = rng.gen_range(1..=n - 3);
    // left part has vertices 0..=k+1, right part k+2..=n+1
    let (mut left, mut right) = (k + 2, n - k);
    match rng.gen_range(0..4) {
        0 => {
            left -= 1;
            right += 1;
        }
        1 => {
            left += 1;
            right -= 1;
        }
        _ => {}
    }
    let avoid = |p: &Point| {
        let ts = strip.locate(p);
        ts.contains(&k) || ts.contains(&(k + 1))
    };
    let mut place = |lo: usize, hi: usize, count: usize| -> Vec<Point> {
        let counts = composition(rng, hi - lo + 1, count);
        let mut out = Vec::new();
        for (i, c) in counts.into_iter().enumerate() {
            let tri = strip.triangle(lo + i);
            for _ in 0..c {
                let p = loop {
                    let p = any_point(rng, &tri);
                    if !avoid(&p) {
                        break p;
                    }
                };
                out.push(p);
            }
        }
        out
    };
    let mut nodes = place(0, k - 1, left);
    nodes.extend(place(k + 2, n - 1, right));
    nodes
}
