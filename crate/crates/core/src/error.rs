use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge not found: {0}-{1}")]
    EdgeNotFound(Vertex, Vertex),
    #[error("vertex not found: {0}")]
    VertexNotFound(Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge multiplicity > 1 requires a pattern graph ({0}-{1})")]
    MultiplicityOnHost(Vertex, Vertex),
    #[error("pattern too large for exact minor test ({size} > {cap})")]
    PatternTooLarge { size: usize, cap: usize },
    #[error("host too large for exact minor test ({size} > {cap})")]
    HostTooLarge { size: usize, cap: usize },
    #[error("topological minor test requires a simple pattern")]
    PatternNotSimple,
    #[error("family must be non-empty")]
    EmptyFamily,
    #[error("family has no planar member")]
    NoPlanarMember,
    #[error("boundary size mismatch ({0} vs {1})")]
    BoundaryMismatch(usize, usize),
    #[error("inconsistent boundary")]
    InconsistentBoundary,
    #[error("invalid path family: {0}")]
    InvalidPathFamily(String),
    #[error("graph too large for clique census ({size} > {cap})")]
    CliqueCensusTooLarge { size: usize, cap: usize },
    #[error("use heuristic_decomposition (reduced graph has {size} > {cap} vertices)")]
    ExactTreewidthTooLarge { size: usize, cap: usize },
    #[error("decomposition invalid: {0}")]
    InvalidDecomposition(String),
    #[error("tw(G-X) exceeds t-1 (t = {t})")]
    ModulatorInvalid { t: usize },
    #[error("r must be positive")]
    InvalidR,
    #[error("t too large for enumeration ({t} > {cap})")]
    EnumerationTooLarge { t: usize, cap: usize },
    #[error("nothing to shrink (|W| = {size} <= limit {limit})")]
    NothingToShrink { size: usize, limit: usize },
    #[error("bound requires r > {min} (got {r})")]
    BoundDomain { r: usize, min: usize },
    #[error("EDS brute force limited to {cap} edges (got {size})")]
    EdsTooLarge { size: usize, cap: usize },
    #[error("X is not a solution")]
    NotASolution,
    #[error("supply t_F: no built-in treewidth bound for this planar witness")]
    SupplyTf,
    #[error("cluster too large; use fallback ({0})")]
    RepresentativeCap(String),
    #[error("brute force limited to {cap} vertices (got {size})")]
    BruteForceTooLarge { size: usize, cap: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown generator kind: {0}")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
