use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown group preset `{0}` (known: SL2, GL2, SL3, GL3, Sp4, G2)")]
    UnknownPreset(String),

    #[error("dimension mismatch: expected rank {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cocharacter {0} is not dominant")]
    NotDominant(String),

    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("p = 2 is rejected: characteristic p > 2 is assumed (pass the p=2 override to experiment)")]
    CharacteristicTwo,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("element is not K-bi-invariant: {0}")]
    NotBiInvariant(String),

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("the group has no nontrivial length-zero generator")]
    NoOmegaGenerator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
