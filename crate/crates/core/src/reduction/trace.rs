//! Record of the steps taken while deciding a problem.

use std::fmt;

use super::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    NcFilter,
    Reduce00,
    LineTransform,
    BasicCheck,
    ReduceMain,
    Leaf,
    Fallback,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::NcFilter => "nc_filter",
            Action::Reduce00 => "reduce_00",
            Action::LineTransform => "line_transform",
            Action::BasicCheck => "basic_check",
            Action::ReduceMain => "reduce_main",
            Action::Leaf => "leaf",
            Action::Fallback => "fallback",
        })
    }
}

/// One problem visited during the recursion. Triangle indices are global.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNode {
    pub first: usize,
    pub last: usize,
    pub node_count: usize,
    pub fingerprint: String,
    pub steps: Vec<TraceStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub action: Action,
    pub window: Option<Window>,
    pub outcome: String,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    /// Number of steps in this subtree answered by the brute-force oracle.
    pub fn fallback_count(&self) -> usize {
        self.steps
            .iter()
            .map(|s| {
                usize::from(s.action == Action::Fallback)
                    + s.children.iter().map(TraceNode::fallback_count).sum::<usize>()
            })
            .sum()
    }

    /// Number of problems in this subtree, this one included.
    pub fn problem_count(&self) -> usize {
        1 + self
            .steps
            .iter()
            .flat_map(|s| &s.children)
            .map(TraceNode::problem_count)
            .sum::<usize>()
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        writeln!(
            f,
            "{pad}{} [{} nodes, {}]",
            Window::new(self.first, self.last),
            self.node_count,
            self.fingerprint
        )?;
        for step in &self.steps {
            write!(f, "{pad}  {}", step.action)?;
            if let Some(w) = step.window {
                write!(f, " {w}")?;
            }
            writeln!(f, ": {}", step.outcome)?;
            for child in &step.children {
                child.render(f, depth + 2)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for TraceNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_indented() {
        let leaf = TraceNode {
            first: 0,
            last: 0,
            node_count: 3,
            fingerprint: "00000000".into(),
            steps: vec![TraceStep { action: Action::Leaf, window: None, outcome: "poised".into(), children: vec![] }],
        };
        let root = TraceNode {
            first: 0,
            last: 2,
            node_count: 5,
            fingerprint: "12345678".into(),
            steps: vec![TraceStep {
                action: Action::ReduceMain,
                window: Some(Window::new(1, 2)),
                outcome: "1 child".into(),
                children: vec![leaf],
            }],
        };
        let text = root.to_string();
        assert_eq!(
            text,
            "T1..T3 [5 nodes, 12345678]\n  reduce_main T2..T3: 1 child\n    T1 [3 nodes, 00000000]\n      leaf: poised\n"
        );
        assert_eq!(root.problem_count(), 2);
        assert_eq!(root.fallback_count(), 0);
    }
}
