use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quiver has an oriented cycle: {}", .cycle.join(" -> "))]
    NotOrdered { cycle: Vec<String> },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate identifier `{0}`")]
    Duplicate(String),

    #[error("path `{0}` is not composable")]
    NotComposable(String),

    #[error("relation is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("relation contains a trivial path: {0}")]
    TrivialPathInRelation(String),

    #[error("objects live over different quivers or fields")]
    QuiverMismatch,

    #[error("subspace is not stable under arrow `{0}`")]
    NotStable(String),

    #[error("not a chain map in degree {0}")]
    NotChainMap(i32),

    #[error("differentials do not square to zero in degree {0}")]
    NotComplex(i32),

    #[error("representation violates a relation: {0}")]
    RelationViolated(String),

    #[error("relations are not tensor: generator {generator} fails the {test} test")]
    NotTensor { generator: String, test: TensorTest },

    #[error("subquiver is incompatible with the relations")]
    Incompatible {
        intersection: Vec<String>,
        reduced: Vec<String>,
    },

    #[error("the unit ideal is not proper")]
    NotProper,

    #[error("not a quiver morphism: {0}")]
    NotQuiverMorphism(String),

    #[error("internal inconsistency between reconstruction routes at ({n}, {m}): {detail}")]
    Inconsistent { n: String, m: String, detail: String },

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Which half of the tensor-relations criterion a generator failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorTest {
    /// Coefficient sum is nonzero, so the unit representation violates it.
    Unit,
    /// The diagonal image is nonzero in the tensor square of the quotient.
    Diagonal,
}

impl std::fmt::Display for TensorTest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TensorTest::Unit => f.write_str("unit"),
            TensorTest::Diagonal => f.write_str("diagonal"),
        }
    }
}
