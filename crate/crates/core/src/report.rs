use std::fmt;

use serde::Serialize;

/// Where a violation was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Location {
    Vertex(usize),
    Edge(usize),
    HalfEdge(usize),
    Face(usize),
    Path(usize),
    Crossing(usize),
    Graph,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Vertex(v) => write!(f, "vertex {v}"),
            Location::Edge(e) => write!(f, "edge {e}"),
            Location::HalfEdge(i) => write!(f, "half-edge {i}"),
            Location::Face(x) => write!(f, "face {x}"),
            Location::Path(i) => write!(f, "path {i}"),
            Location::Crossing(c) => write!(f, "crossing vertex {c}"),
            Location::Graph => f.write_str("graph"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short tag of the violated condition, e.g. `"wood.outgoing"`.
    pub condition: &'static str,
    pub location: Location,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.condition, self.location, self.message)
    }
}

/// Result of a structural check. Empty iff the checked object is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, condition: &'static str, location: Location, message: impl Into<String>) {
        self.violations.push(Violation {
            condition,
            location,
            message: message.into(),
        });
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, condition: &str) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
