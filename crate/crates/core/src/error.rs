use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstantTerm,
    #[error("infinite product argument has negative q-valuation: {0}")]
    DivergentProduct(String),
    #[error("bilateral sum denominator vanishes at n = {n}")]
    ZeroDenominator { n: i64 },
    #[error("summand has negative q-valuation {valuation} at n = {n}")]
    NegativeValuation { n: i64, valuation: i64 },
    #[error("coefficient ring cannot represent {0}")]
    UnrepresentableMonomial(String),
    #[error("specialization {0} is not supported here")]
    UnsupportedSpecialization(&'static str),
    #[error("unknown form id `{0}`")]
    UnknownFormId(String),
    #[error("partition repeats the odd part {0}")]
    RepeatedOddPart(u32),
    #[error("n = {n} exceeds the enumeration bound {bound} for {family}")]
    BoundExceeded {
        family: &'static str,
        n: u64,
        bound: u64,
    },
    #[error("order {order} is too small: check `{id}` needs order >= {needed}")]
    InsufficientOrder {
        id: String,
        order: usize,
        needed: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("value not reducible modulo {modulus}: {value}")]
    NotReducible { value: String, modulus: u64 },
}
