use thiserror::Error;

/// Failures raised while building or manipulating groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("order {order} exceeds the isomorphism cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("undefined for n = {0}")]
    Undefined(u64),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("{r} has multiplicative order {actual} mod {q}, expected {expected}")]
    BadOrder {
        q: u64,
        r: u64,
        expected: u64,
        actual: u64,
    },
    #[error("not a Frobenius group: {0}")]
    NotFrobenius(String),
    #[error("not an isomorphism of centers: {0}")]
    NotCentralIso(String),
    #[error("modulus is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("permutation group exceeds {cap} elements")]
    TooLarge { cap: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
}

/// Failures raised by centralizer analytics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticsError {
    #[error("group is abelian; centralizer structure is trivial")]
    AbelianGroup,
    #[error("bound functions need n >= 4, got {0}")]
    BadN(u64),
    #[error("element {0} is central")]
    CentralElement(usize),
    #[error("G/Z(G) is not perfect")]
    NotPerfectQuotient,
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
