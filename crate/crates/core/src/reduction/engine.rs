//! The recursive decision procedure.

use std::fmt;

use num::Zero;

use crate::geometry::Rational;
use crate::linalg::primitive;
use crate::oracle::{kernel_basis, oracle_poised};
use crate::problem::Problem;
use crate::space::PlFunction;

use super::basic::{basic_poised, collinear_witness};
use super::census::necessary_conditions;
use super::split::{find_empty_pair, reduce_00, reduce_main};
use super::trace::{Action, TraceNode, TraceStep};
use super::transform::{make_basic, BasicCertificate, MakeBasic};
use super::window::{find_reducible_subproblem, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    /// Reject problems violating a range count bound before reducing them.
    pub nc_filter: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { nc_filter: true }
    }
}

/// Why a problem is or is not poised. Windows use global triangle indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    Ok,
    NotExact { nodes: usize, dimension: usize },
    OverdeterminedWindow(Window),
    NonpoisedBasic(Window),
    ReducedNotExact(Window),
    NcViolation { first: usize, last: usize, count: usize },
    /// No reduction applied and the brute-force oracle answered.
    OracleFallback,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Ok => f.write_str("ok"),
            Reason::NotExact { nodes, dimension } => {
                write!(f, "not exact: {nodes} nodes for a space of dimension {dimension}")
            }
            Reason::OverdeterminedWindow(w) => write!(f, "overdetermined window {w}"),
            Reason::NonpoisedBasic(w) => write!(f, "window {w} is not poised"),
            Reason::ReducedNotExact(w) => write!(f, "reducing at {w} leaves a problem that is not exact"),
            Reason::NcViolation { first, last, count } => write!(
                f,
                "{count} nodes in {} violate the count bounds",
                Window::new(*first, *last)
            ),
            Reason::OracleFallback => f.write_str("Vandermonde determinant vanishes"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub poised: bool,
    pub reason: Reason,
    /// A nonzero function vanishing at every node, when one was found.
    pub witness: Option<PlFunction>,
    pub trace: TraceNode,
}

impl Verdict {
    pub fn fallback_count(&self) -> usize {
        self.trace.fallback_count()
    }
}

pub fn decide(p: &Problem) -> Verdict {
    decide_with(p, DecideOptions::default())
}

pub fn decide_with(p: &Problem, opts: DecideOptions) -> Verdict {
    let (outcome, trace) = if p.is_exact() {
        solve(p, opts)
    } else {
        let mut node = trace_node(p);
        let reason = Reason::NotExact { nodes: p.nodes().len(), dimension: p.dimension() };
        node.steps.push(step(Action::Leaf, None, reason.to_string()));
        (Outcome::fail(reason, None), node)
    };
    let mut witness = outcome
        .witness
        .map(|v| PlFunction::new(p.strip().clone(), primitive(v)).expect("one value per vertex"));
    let overdetermined = match &outcome.reason {
        Reason::OverdeterminedWindow(_) => true,
        Reason::NotExact { nodes, dimension } => nodes > dimension,
        _ => false,
    };
    if !outcome.poised && witness.is_none() && !overdetermined {
        witness = kernel_basis(p).into_iter().next();
    }
    debug_assert!(witness.as_ref().is_none_or(|w| vanishes(w, p)), "witness does not vanish at the nodes");
    Verdict { poised: outcome.poised, reason: outcome.reason, witness, trace }
}

fn vanishes(w: &PlFunction, p: &Problem) -> bool {
    !w.is_zero() && p.nodes().iter().all(|a| w.eval(a).is_ok_and(|v| v.is_zero()))
}

/// Result for one problem of the recursion; the witness is given by its
/// values at this problem's vertices.
struct Outcome {
    poised: bool,
    reason: Reason,
    witness: Option<Vec<Rational>>,
}

impl Outcome {
    fn ok() -> Outcome {
        Outcome { poised: true, reason: Reason::Ok, witness: None }
    }

    fn fail(reason: Reason, witness: Option<Vec<Rational>>) -> Outcome {
        Outcome { poised: false, reason, witness }
    }
}

fn trace_node(p: &Problem) -> TraceNode {
    let off = p.strip().offset();
    TraceNode {
        first: off,
        last: off + p.triangle_count() - 1,
        node_count: p.nodes().len(),
        fingerprint: p.fingerprint(),
        steps: Vec::new(),
    }
}

fn step(action: Action, window: Option<Window>, outcome: impl Into<String>) -> TraceStep {
    TraceStep { action, window, outcome: outcome.into(), children: Vec::new() }
}

fn verdict_word(poised: bool) -> &'static str {
    if poised {
        "poised"
    } else {
        "not poised"
    }
}

/// Place a function given on a sub-strip into `p`'s vertices, zero elsewhere.
fn extend_by_zero(p: &Problem, child: &Problem, values: Vec<Rational>) -> Vec<Rational> {
    let start = child.strip().offset() - p.strip().offset();
    let mut out = vec![Rational::zero(); p.dimension()];
    for (i, v) in values.into_iter().enumerate() {
        out[start + i] = v;
    }
    out
}

/// A window witness only extends to the whole problem when the window is the
/// whole strip.
fn window_witness(p: &Problem, w: Window, f: Option<PlFunction>) -> Option<Vec<Rational>> {
    (w.first == 0 && w.last + 1 == p.triangle_count())
        .then_some(f)
        .flatten()
        .map(|f| f.vertex_values().to_vec())
}

fn solve(p: &Problem, opts: DecideOptions) -> (Outcome, TraceNode) {
    let mut node = trace_node(p);
    let off = p.strip().offset();
    let n = p.triangle_count();
    let cap = 4 * (n + 2);
    let mut transforms = 0;
    let mut cur = p.clone();
    loop {
        if opts.nc_filter {
            if let Some(v) = necessary_conditions(&cur) {
                let w = Window::new(v.first, v.last).shifted(off);
                node.steps.push(step(Action::NcFilter, Some(w), format!("{} nodes out of bounds", v.count)));
                let reason = Reason::NcViolation { first: w.first, last: w.last, count: v.count };
                return (Outcome::fail(reason, None), node);
            }
        }

        if let Some(k) = find_empty_pair(&cur) {
            let w = Window::new(k, k + 1);
            let (left, right) = reduce_00(&cur, k).expect("empty pair found");
            let outcome = recurse(&cur, w, vec![left, right], Action::Reduce00, opts, &mut node);
            return (outcome, node);
        }

        if let Some(t) = (0..n).find(|&t| cur.nodes_in_triangle(t).len() >= 3) {
            let w = Window::single(t);
            let cert = BasicCertificate::three(&cur, t);
            let count = cur.nodes_in_triangle(t).len();
            if count > 3 {
                node.steps.push(step(Action::BasicCheck, Some(w.shifted(off)), format!("{count} nodes: overdetermined")));
                return (Outcome::fail(Reason::OverdeterminedWindow(w.shifted(off)), None), node);
            }
            if !cert.basic {
                node.steps.push(step(Action::BasicCheck, Some(w.shifted(off)), "3 collinear: not poised"));
                let witness = window_witness(&cur, w, Some(collinear_witness(&cur, t)));
                return (Outcome::fail(Reason::NonpoisedBasic(w.shifted(off)), witness), node);
            }
            node.steps.push(step(Action::BasicCheck, Some(w.shifted(off)), "3: poised"));
            return split_main(&cur, w, opts, node);
        }

        let Some((w, kind)) = find_reducible_subproblem(&cur) else {
            return fallback(&cur, node);
        };
        match make_basic(&cur, w, kind).expect("classified window") {
            MakeBasic::Basic(cert) => {
                let (poised, f) = basic_poised(&cur, &cert).expect("certified basic window");
                let label = format!("{kind}/B: {}", verdict_word(poised));
                node.steps.push(step(Action::BasicCheck, Some(w.shifted(off)), label));
                if !poised {
                    let witness = window_witness(&cur, w, f);
                    return (Outcome::fail(Reason::NonpoisedBasic(w.shifted(off)), witness), node);
                }
                return split_main(&cur, w, opts, node);
            }
            MakeBasic::Coincident { triangle } => {
                let label = format!("{kind}: coincident nodes in T{}", triangle + off + 1);
                node.steps.push(step(Action::BasicCheck, Some(w.shifted(off)), label));
                return (Outcome::fail(Reason::NonpoisedBasic(w.shifted(off)), None), node);
            }
            MakeBasic::EscalatedThree { triangle, problem } => {
                let label = format!("{kind}: T{} now holds three nodes", triangle + off + 1);
                node.steps.push(step(Action::LineTransform, Some(w.shifted(off)), label));
                cur = problem;
            }
            MakeBasic::Transformed(problem) => {
                node.steps.push(step(Action::LineTransform, Some(w.shifted(off)), format!("{kind}: shortened")));
                cur = problem;
            }
        }
        transforms += 1;
        if transforms > cap {
            return fallback(&cur, node);
        }
    }
}

fn fallback(p: &Problem, mut node: TraceNode) -> (Outcome, TraceNode) {
    let poised = oracle_poised(p);
    node.steps.push(step(Action::Fallback, None, verdict_word(poised)));
    let outcome = if poised { Outcome::ok() } else { Outcome::fail(Reason::OracleFallback, None) };
    (outcome, node)
}

fn split_main(p: &Problem, w: Window, opts: DecideOptions, mut node: TraceNode) -> (Outcome, TraceNode) {
    let (left, right) = reduce_main(p, w).expect("window inside the strip");
    let children: Vec<Problem> = left.into_iter().chain(right).collect();
    if children.is_empty() {
        node.steps.push(step(Action::Leaf, None, "poised"));
        return (Outcome::ok(), node);
    }
    let outcome = recurse(p, w, children, Action::ReduceMain, opts, &mut node);
    (outcome, node)
}

/// Decide the children of a split; the parent is poised iff every child is
/// exact and poised.
fn recurse(
    p: &Problem,
    w: Window,
    children: Vec<Problem>,
    action: Action,
    opts: DecideOptions,
    node: &mut TraceNode,
) -> Outcome {
    let gw = w.shifted(p.strip().offset());
    if let Some(bad) = children.iter().find(|c| !c.is_exact()) {
        let under = children.iter().find(|c| c.nodes().len() < c.dimension());
        let witness = under.and_then(|c| {
            let k = kernel_basis(c).into_iter().next()?;
            Some(extend_by_zero(p, c, k.vertex_values().to_vec()))
        });
        let mut s = step(action, Some(gw), format!(
            "{} has {} nodes for dimension {}",
            Window::new(0, bad.triangle_count() - 1).shifted(bad.strip().offset()),
            bad.nodes().len(),
            bad.dimension()
        ));
        s.children = children.iter().map(trace_node).collect();
        node.steps.push(s);
        return Outcome::fail(Reason::ReducedNotExact(gw), witness);
    }
    let mut s = step(action, Some(gw), String::new());
    let mut result = Outcome::ok();
    for c in &children {
        let (o, t) = solve(c, opts);
        s.children.push(t);
        if !o.poised {
            let witness = o.witness.map(|v| extend_by_zero(p, c, v));
            result = Outcome::fail(o.reason, witness);
            break;
        }
    }
    s.outcome = match s.children.len() {
        1 => "1 child".to_string(),
        k => format!("{k} children"),
    };
    node.steps.push(s);
    result
}
