use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("quiver is not connected")]
    DisconnectedQuiver,
    #[error("arrow `{name}` has an endpoint outside the vertex range")]
    BadArrow { name: String },
    #[error("arrow name `{name}` is used twice")]
    DuplicateArrow { name: String },
    #[error("relations do not generate an admissible ideal: arbitrarily long nonzero paths exist")]
    NotAdmissible,
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("operation is undefined on the zero module")]
    ZeroModule,
    #[error("dominant dimension is zero: no faithful projective-injective module")]
    DomDimZero,
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("algebra is not a Nakayama algebra")]
    NotNakayama,
    #[error("module is not basic: summands {0} and {1} are isomorphic")]
    NotBasic(usize, usize),
    #[error("summand {0} does not have a local endomorphism ring")]
    NotLocal(usize),
    #[error("invalid corpus bounds: {0}")]
    InvalidBounds(String),
}
