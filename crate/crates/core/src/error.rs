use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "p = 2 unsupported, p must be an odd prime: at p = 2 the exterior algebra needs the extra condition that the \
         circle product of two equal elements vanishes, and twisted duality degenerates"
    )]
    EvenPrime,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("precision exponent must be at least 1")]
    ZeroPrecision,
    #[error("modulus {p}^{nu} too large for 64-bit residue arithmetic")]
    ModulusTooLarge { p: u64, nu: u32 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("context mismatch: ({0}) vs ({1})")]
    ContextMismatch(String, String),
    #[error("ill-defined map: entry ({row},{col}) of {op} violates the order congruence")]
    IllDefined {
        op: &'static str,
        row: usize,
        col: usize,
    },
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("order {order} outside 1..={nu}")]
    BadOrder { order: u32, nu: u32 },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has a zero root, whose valuation is infinite")]
    ZeroRoot,
    #[error("{0} is not a quadratic nonresidue mod {1}")]
    NotNonresidue(u64, u64),
    #[error("non-integral decomposition: slope {slope} with multiplicity {multiplicity}")]
    NonIntegral { slope: String, multiplicity: usize },
    #[error("did not stabilize: {0}")]
    NotStabilized(String),
    #[error("factors of the product are not equal")]
    UnequalFactors,
    #[error("lattice invalid: {0}")]
    InvalidLattice(String),
}
