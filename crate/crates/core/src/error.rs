use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element cap exceeded: {context} would exceed {cap} elements")]
    CapExceeded { cap: usize, context: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("action is not a homomorphism into the automorphism group")]
    ActionNotHomomorphism,

    #[error("action entry {0} is not an automorphism of the base")]
    ActionNotAutomorphism(usize),

    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("subgroups are not nested: {0}")]
    NotNested(String),

    #[error("lower subgroup is not strictly contained in the upper one")]
    NotStrictlyNested,

    #[error("operands belong to different parent groups")]
    DifferentParents,

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("automorphism search exceeded {cap} candidate assignments")]
    SearchCapExceeded { cap: usize },

    #[error("normal lattice exceeded {cap} nodes")]
    NodeCapExceeded { cap: usize },

    #[error("oracle bound exceeded: order {order} > {bound}")]
    OracleBoundExceeded { order: usize, bound: usize },

    #[error("factors are not associated")]
    NotAssociated,

    #[error("series is not an ascending chain of normal subgroups from 1 to G: {0}")]
    NotAChain(String),

    #[error("factor is not a chief factor")]
    NotChief,

    #[error("factor is abelian")]
    AbelianFactor,

    #[error("not a generalized central factorization")]
    NotGeneralizedCentral,

    #[error("homomorphism is not injective")]
    NotInjective,

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("image does not contain the whole factor {0}")]
    ImageNotFullOnFactor(usize),

    #[error("image is not normal in the target")]
    ImageNotNormal,

    #[error("group is not of semisimple type")]
    NotSemisimpleType,

    #[error("group is not characteristically simple")]
    NotCharacteristicallySimple,

    #[error("extension check failed: {0}")]
    ExtensionCheckFailed(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown group name `{0}`")]
    UnknownName(String),

    #[error("bad action: {0}")]
    BadAction(String),

    #[error("bad element: {0}")]
    BadElement(String),

    #[error("report section missing: {0}")]
    SectionMissing(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::UnknownName(_)
            | Error::BadAction(_)
            | Error::BadElement(_)
            | Error::InvalidPermutation(_)
            | Error::NotCentral(_)
            | Error::ActionNotHomomorphism
            | Error::ActionNotAutomorphism(_) => 2,
            Error::CapExceeded { .. }
            | Error::NodeCapExceeded { .. }
            | Error::SearchCapExceeded { .. }
            | Error::OracleBoundExceeded { .. } => 3,
            Error::Invariant(_) | Error::ExtensionCheckFailed(_) => 4,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
