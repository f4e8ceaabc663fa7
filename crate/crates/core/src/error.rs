use thiserror::Error;

/// Errors raised by group construction, parsing and the factor machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {0} is outside the supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("cannot parse group spec at position {position}: {message}")]
    SpecParse { position: usize, message: String },
    #[error("cannot parse Cayley table: {0}")]
    TableParse(String),
    #[error("cannot parse subset: {0}")]
    SubsetParse(String),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("size {size} does not divide the group order {order}")]
    NotLagrange { size: usize, order: usize },
    #[error("product of part sizes {product} differs from the group order {order}")]
    SizeMismatch { product: usize, order: usize },
    #[error("the given complement does not factor the subgroup")]
    NotAFactorOfH,
    #[error("element has odd order {0}; {{e, x}} has no complement")]
    OddOrder(usize),
    #[error("group is not an elementary abelian 2-group")]
    NotElementaryAbelian2,
    #[error("group is not an elementary abelian 3-group")]
    NotElementaryAbelian3,
    #[error("expected a subset of size {expected}, got {actual}")]
    WrongSize { expected: usize, actual: usize },
    #[error("bad witness parameters: {0}")]
    BadParams(String),
    #[error("max order {requested} exceeds the catalog bound {bound}")]
    CatalogBoundExceeded { requested: usize, bound: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("constructed complement failed verification: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
