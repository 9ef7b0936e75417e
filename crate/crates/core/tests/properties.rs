use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strip_poise::gen::{fuzz_instance, generate, seeded_strip, GenSpec, Pattern};
use strip_poise::geometry::{rat, Point};
use strip_poise::oracle::oracle_poised;
use strip_poise::problem::Problem;
use strip_poise::reduction::{
    basic_poised, classify_window, decide, find_reducible_subproblem, line_transform, make_basic,
    satisfies_bounds, BasicCertificate, MakeBasic, SubproblemType, TraceNode, Window,
};
use strip_poise::strip::zigzag;

/// A triangle holding two distinct nodes and a pair of them, if any.
fn transformable<R: Rng>(p: &Problem, rng: &mut R) -> Option<(usize, (usize, usize))> {
    let mut options = Vec::new();
    for t in 0..p.triangle_count() {
        let inside = p.nodes_in_triangle(t);
        for (a, &i) in inside.iter().enumerate() {
            for &j in &inside[a + 1..] {
                if p.nodes()[i] != p.nodes()[j] {
                    options.push((t, (i, j)));
                }
            }
        }
    }
    options.choose(rng).copied()
}

#[test]
fn line_transformations_preserve_the_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut checked = 0;
    for index in 0..300 {
        let (_, _, p) = fuzz_instance(404, index, 8).unwrap();
        let Some((t, pair)) = transformable(&p, &mut rng) else { continue };
        let q = line_transform(&p, t, pair).unwrap();
        assert_eq!(decide(&p).poised, decide(&q).poised, "instance {index}");
        assert_eq!(oracle_poised(&p), oracle_poised(&q), "instance {index}");
        checked += 1;
    }
    assert!(checked >= 200, "only {checked} instances had a transformable pair");
}

fn check_shrinking(node: &TraceNode) {
    for step in &node.steps {
        for child in &step.children {
            assert!(child.last - child.first < node.last - node.first);
            assert!(node.first <= child.first && child.last <= node.last);
            check_shrinking(child);
        }
    }
}

#[test]
fn traces_are_deterministic_and_shrink() {
    for index in 0..150 {
        let (_, _, p) = fuzz_instance(77, index, 10).unwrap();
        let a = decide(&p);
        let b = decide(&p.clone());
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.trace.to_string(), b.trace.to_string());
        check_shrinking(&a.trace);
    }
}

#[test]
fn poised_problems_meet_the_count_bounds() {
    let mut poised = 0;
    for index in 0..300 {
        let (_, _, p) = fuzz_instance(5, index, 10).unwrap();
        if decide(&p).poised {
            assert!(satisfies_bounds(&p), "instance {index}");
            poised += 1;
        }
    }
    assert!(poised > 50);
}

#[test]
fn generated_basic_windows_are_poised() {
    for seed in 0..40 {
        let p = generate(GenSpec { seed, n: 3, pattern: Pattern::Basic212 }).unwrap();
        let kind = classify_window(&p, 0, 2).unwrap().unwrap();
        let MakeBasic::Basic(cert) = make_basic(&p, Window::new(0, 2), kind).unwrap() else {
            panic!("seed {seed}: not basic")
        };
        assert_eq!(basic_poised(&p, &cert).unwrap(), (true, None));

        let t = generate(GenSpec { seed, n: 1, pattern: Pattern::BasicThree }).unwrap();
        let cert = BasicCertificate::three(&t, 0);
        assert!(cert.basic);
        assert!(basic_poised(&t, &cert).unwrap().0);
    }
}

#[test]
fn scan_skips_a_leading_prefix() {
    // counts 1, 1, 2, 2 with interior nodes: the first window is T3..T4
    let s = zigzag(4);
    let centroid = |t: usize| {
        let tri = s.triangle(t);
        Point::new(
            (&tri[0].x + &tri[1].x + &tri[2].x) * rat(1, 3),
            (&tri[0].y + &tri[1].y + &tri[2].y) * rat(1, 3),
        )
    };
    let nodes = vec![
        centroid(0),
        centroid(1),
        centroid(2),
        centroid(2).lerp(s.vertex(2), &rat(1, 2)),
        centroid(3),
        centroid(3).lerp(s.vertex(5), &rat(1, 2)),
    ];
    let p = Problem::new(s.clone(), nodes).unwrap();
    assert_eq!(
        find_reducible_subproblem(&p),
        Some((Window::new(2, 3), SubproblemType::TwoOnesTwo { middle: 0 }))
    );
    assert_eq!(decide(&p).poised, oracle_poised(&p));
}

#[test]
fn seeded_strips_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let seed = rng.gen();
        let s = seeded_strip(n, seed);
        assert_eq!(s.triangle_count(), n);
        assert_eq!(s, seeded_strip(n, seed));
    }
}
