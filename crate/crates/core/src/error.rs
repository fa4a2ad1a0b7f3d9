use thiserror::Error;

use crate::surface::Vertex;

/// Errors raised while building or analysing complexes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {0:?} lies in {1} triangles")]
    NonManifoldEdge([Vertex; 2], usize),
    #[error("the link of vertex {0} is not a single path or cycle")]
    PinchedVertex(Vertex),
    #[error("facet {0:?} does not have distinct vertices")]
    DegenerateTriangle(Vec<Vertex>),
    #[error("facet {0:?} appears more than once")]
    DuplicateTriangle(Vec<Vertex>),
    #[error("expected dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("the complex has no facets")]
    Empty,
    #[error("the input is not connected")]
    DisconnectedInput,
    #[error("the surface has boundary")]
    NotClosed,
    #[error("the surface is not orientable")]
    NotOrientable,
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown triangle {0:?}")]
    UnknownTriangle([Vertex; 3]),
    #[error("edge {0:?} is not an edge of triangle {1:?}")]
    EdgeNotInTriangle([Vertex; 2], [Vertex; 3]),
    #[error("triangles at positions {0} and {1} of the strip are not adjacent")]
    NotAStrip(usize, usize),
    #[error("a coloring must be a bijection of the triangle's vertices onto the color set")]
    NotABijection,
    #[error("no even triangulation of a {0}-gon exists: {0} is not divisible by 3")]
    NotDivisibleBy3(usize),
    #[error("polygon size {0} is too small")]
    PolygonTooSmall(usize),
    #[error("k = {0} is not supported here")]
    UnsupportedK(usize),
    #[error("edge {0:?} is a boundary edge")]
    BoundaryEdge([Vertex; 2]),
    #[error("vertex {0} lies on the boundary")]
    BoundaryVertex(Vertex),
    #[error("the vertex sequence is not a simple closed edge path")]
    NotASimpleCycle,
    #[error("the cycle touches the boundary")]
    TouchesBoundary,
    #[error("the cycle is one-sided; cutting along it does not double it")]
    OneSidedCycle,
    #[error("no cycle makes the surface vertex-colorable")]
    SearchExhausted,
    #[error("both surfaces must be closed")]
    BoundaryNotSupported,
    #[error("the two covers do not share the same total surface")]
    MismatchedTotals,
    #[error("the projection is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("the root placement is not congruent to the equilateral triangle of angle 2pi/{0}")]
    ShapeMismatch(usize),
    #[error("expected exactly two exceptional vertices, found {0}")]
    NotExactlyTwoExceptional(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("the developing map is not globally consistent (nontrivial holonomy)")]
    NontrivialHolonomy(Box<crate::geometry::SlitReport<f64>>),
    #[error("the link of face {0:?} is not a 2-sphere")]
    LinkNotSphere(Vec<Vertex>),
    #[error("a face has {0} cofacets, more than the two a pseudomanifold allows")]
    NotPseudomanifold(usize),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("theorem check failed: {0}")]
    AssertionFailure(String),
}

impl Error {
    /// Variant name, used by the command line front end for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonManifoldEdge(..) => "NonManifoldEdge",
            Error::PinchedVertex(_) => "PinchedVertex",
            Error::DegenerateTriangle(_) => "DegenerateTriangle",
            Error::DuplicateTriangle(_) => "DuplicateTriangle",
            Error::WrongDimension { .. } => "WrongDimension",
            Error::Empty => "Empty",
            Error::DisconnectedInput => "DisconnectedInput",
            Error::NotClosed => "NotClosed",
            Error::NotOrientable => "NotOrientable",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownTriangle(_) => "UnknownTriangle",
            Error::EdgeNotInTriangle(..) => "EdgeNotInTriangle",
            Error::NotAStrip(..) => "NotAStrip",
            Error::NotABijection => "NotABijection",
            Error::NotDivisibleBy3(_) => "NotDivisibleBy3",
            Error::PolygonTooSmall(_) => "PolygonTooSmall",
            Error::UnsupportedK(_) => "UnsupportedK",
            Error::BoundaryEdge(_) => "BoundaryEdge",
            Error::BoundaryVertex(_) => "BoundaryVertex",
            Error::NotASimpleCycle => "NotASimpleCycle",
            Error::TouchesBoundary => "TouchesBoundary",
            Error::OneSidedCycle => "OneSidedCycle",
            Error::SearchExhausted => "SearchExhausted",
            Error::BoundaryNotSupported => "BoundaryNotSupported",
            Error::MismatchedTotals => "MismatchedTotals",
            Error::NotSimplicial(_) => "NotSimplicial",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotExactlyTwoExceptional(_) => "NotExactlyTwoExceptional",
            Error::NotAdjacent(..) => "NotAdjacent",
            Error::NontrivialHolonomy(_) => "NontrivialHolonomy",
            Error::LinkNotSphere(_) => "LinkNotSphere",
            Error::NotPseudomanifold(_) => "NotPseudomanifold",
            Error::Json(_) => "Json",
            Error::AssertionFailure(_) => "AssertionFailure",
        }
    }

    /// Whether the error signals a failed internal assertion rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::AssertionFailure(_) | Error::SearchExhausted)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
