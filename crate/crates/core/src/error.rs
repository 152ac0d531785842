use thiserror::Error;

use crate::set::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid element name {0:?}")]
    InvalidName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {index} is outside a ground set of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("set lives on a ground set of size {found}, expected {expected}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("implication has an empty conclusion")]
    EmptyConclusion,
    #[error("implication has an empty premise")]
    EmptyPremise,
    #[error("premise and conclusion of an implication intersect")]
    OverlappingImplication,
    #[error("ground set of size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("the closure system is not a convex geometry")]
    NotConvexGeometry,
    #[error("graph contains a cycle")]
    CyclicGraph,
    #[error("implicational base is not acyclic")]
    CyclicBase,
    #[error("closure system is not acyclic")]
    NotAcyclic,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("irreducible family of ancestor element {0} is missing")]
    MissingAncestor(Element),
    #[error("element {element}: degree {degree} exceeds the configured bound {bound}")]
    BoundExceeded {
        element: Element,
        degree: usize,
        bound: usize,
    },
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("failed to extract a critical generator of element {0}")]
    ExtractionFailed(Element),
    #[error("hypergraph is not Sperner")]
    NotSperner,
    #[error("hypergraph has an empty edge")]
    EmptyEdge,
}
