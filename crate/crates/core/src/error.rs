use thiserror::Error;

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subgroups belong to different parent groups")]
    MismatchedParent,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("order {0} is not a prime power")]
    NotPrimePower(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invariants {sub:?} are not dominated componentwise by {sup:?}")]
    NotComponentwiseDominated { sub: Vec<u32>, sup: Vec<u32> },
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("codomain is not abelian")]
    NotAbelianCodomain,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("subgroup is not central")]
    NotCentral,
    #[error("automorphism is not a member of {0}")]
    NotMember(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("group is not a p-group")]
    NotPGroup,
    #[error("group is abelian")]
    NotNonabelian,
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GroupError {
    fn from(err: std::io::Error) -> Self {
        GroupError::Io(err.to_string())
    }
}
