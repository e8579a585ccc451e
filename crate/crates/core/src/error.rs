use thiserror::Error;

/// Which half of the distributive law a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed ring description: {0}")]
    Malformed(String),
    #[error("addition is not an abelian group: {0}")]
    NotAGroup(String),
    #[error("empty hyperproduct {0}∘{1}")]
    EmptyProduct(usize, usize),
    #[error("hyperoperation not associative at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{3} distributive inclusion fails at ({0},{1},{2})")]
    NotDistributive(usize, usize, usize, Side),
    #[error("sign law fails at ({0},{1})")]
    SignLawViolated(usize, usize),
    #[error("declared identity {0} does not satisfy its flavor")]
    IdentityClaimFalse(usize),
    #[error("element {0} is outside the carrier")]
    ForeignElement(usize),
    #[error("ring has no identity")]
    NoIdentity,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),
    #[error("multiplier set is empty")]
    EmptyMultiplierSet,
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("hyperideal is not proper")]
    NotProper,
    #[error("{0} is not a hyperideal")]
    NotAHyperideal(String),
    #[error("ring is not zero-absorbing")]
    NotZeroAbsorbing,
    #[error("colon requires a nonempty set")]
    EmptySet,
    #[error("map is not a good endomorphism: {0}")]
    BadEndomorphism(String),
    #[error("map is not a good homomorphism: {0}")]
    BadHomomorphism(String),
    #[error("quotient hyperoperation is not well defined: {0}")]
    NotWellDefined(String),
    #[error("endomorphism does not preserve the ideal: {0}")]
    NotInvariant(String),
    #[error("instance does not match the signature of {0}")]
    SignatureMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
