//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported by complex construction, linear algebra, enumeration,
/// and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    /// `from_maximal_faces` received an empty face list.
    #[error("empty complex")]
    EmptyComplex,

    /// A face listed the same vertex twice.
    #[error("degenerate face [{0}]")]
    DegenerateFace(String),

    /// A face with no vertices.
    #[error("empty face")]
    EmptyFace,

    /// `builtin` was handed a name outside the catalog.
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    /// A parameterized builtin family was instantiated below its minimum.
    #[error("builtin `{name}` requires n >= {min} (got {got})")]
    BuiltinParameter { name: String, min: u32, got: u32 },

    /// A parameterized builtin family needs `n` and none was given.
    #[error("builtin `{name}` requires a parameter n >= {min}")]
    MissingParameter { name: String, min: u32 },

    /// A fixed builtin was handed a parameter.
    #[error("builtin `{0}` takes no parameter")]
    UnexpectedParameter(String),

    /// An operation was asked about a cell the complex does not contain.
    #[error("cell {0} is not in the complex")]
    CellNotFound(String),

    /// A dimension argument outside `1..=dim`.
    #[error("dimension {d} out of range for a complex of dimension {max}")]
    DimensionOutOfRange { d: usize, max: usize },

    /// A graph-only operation was applied to a complex of another dimension.
    #[error("expected a graph (dimension 1), got dimension {0}")]
    NotAGraph(usize),

    /// A square-matrix operation received a rectangular matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// An enumeration would exceed the configured cell guard.
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    /// A matching pair whose tail is not a codimension-1 face of its head.
    #[error("pair ({0}, {1}) is not a codimension-1 incidence")]
    NotIncident(String, String),

    /// A cell appeared in two pairs of one vector field.
    #[error("cell {0} appears in more than one pair")]
    DuplicateCell(String),

    /// An operation that needs an acyclic matching received a cyclic one.
    #[error("matching has a directed cycle")]
    CyclicMatching,

    /// Orientability was asked of a complex that is not a pseudomanifold.
    #[error("not a pseudomanifold: {0}")]
    NotPseudomanifold(String),

    /// A `(forest, root)` pair failing the rooted-forest certificate.
    #[error("invalid rooted forest: {0}")]
    InvalidRootedForest(String),

    /// A graph with a cycle where a forest was required.
    #[error("not a forest: {0}")]
    NotAForest(String),

    /// A connected graph was required.
    #[error("disconnected graph")]
    Disconnected,

    /// Malformed complex JSON.
    #[error("invalid complex JSON: {0}")]
    Json(String),

    /// Filesystem failure while reading input.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
