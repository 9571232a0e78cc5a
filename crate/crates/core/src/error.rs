use thiserror::Error;

/// Syntax error in polynomial or PD-code text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("edge label {label} occurs {count} times (expected exactly 2)")]
    LabelMultiplicity { label: u32, count: usize },
    #[error("edge labels must be exactly 1..={expected}, found label {label}")]
    LabelRange { label: u32, expected: u32 },
    #[error("edge labels are not consecutive along a component near label {label}")]
    NonConsecutive { label: u32 },
    #[error("orientation of the over-strand at crossing {crossing} is ambiguous")]
    AmbiguousOrientation { crossing: usize },
    #[error("crossing index {index} out of range (diagram has {len} crossings)")]
    CrossingOutOfRange { index: usize, len: usize },
    #[error("component index {index} out of range (diagram has {len} components)")]
    ComponentOutOfRange { index: usize, len: usize },
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("operation needs a knot, diagram has {0} components")]
    NotAKnot(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("skein recursion exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("polynomial is not a HOMFLY polynomial of a {components}-component link: {reason}")]
    Malformed { components: usize, reason: &'static str },
}
