use std::fmt;

/// Where a violation was found.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Location {
    Global,
    /// 1-based row index.
    Row(usize),
    /// 1-based column index.
    Col(usize),
    /// 1-based (row, column).
    Cell(usize, usize),
    Vertex(i64),
    Edge(i64, i64),
    Face(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Global => write!(f, "global"),
            Location::Row(i) => write!(f, "row{i}"),
            Location::Col(j) => write!(f, "col{j}"),
            Location::Cell(i, j) => write!(f, "cell({i},{j})"),
            Location::Vertex(v) => write!(f, "vertex{v}"),
            Location::Edge(u, v) => write!(f, "edge({u},{v})"),
            Location::Face(i) => write!(f, "face{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    Dimensions,
    FillCount,
    Zero,
    HalfSet,
    RowSum,
    ColSum,
    FaceSize,
    EdgeCoverage,
    PinchPoint,
    Orientation,
    Euler,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Dimensions => "dimensions",
            ViolationKind::FillCount => "fill-count",
            ViolationKind::Zero => "zero-entry",
            ViolationKind::HalfSet => "half-set",
            ViolationKind::RowSum => "row-sum",
            ViolationKind::ColSum => "col-sum",
            ViolationKind::FaceSize => "face-size",
            ViolationKind::EdgeCoverage => "edge-coverage",
            ViolationKind::PinchPoint => "pinch-point",
            ViolationKind::Orientation => "orientation",
            ViolationKind::Euler => "euler",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Location,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.kind.as_str(), self.location, self.detail)
    }
}

/// The outcome of a validator: every violation found, in discovery order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, kind: ViolationKind, location: Location, detail: impl Into<String>) {
        self.violations.push(Violation { kind, location, detail: detail.into() });
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}
