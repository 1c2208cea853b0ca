use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("size {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("structure constants are not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("algebra is not nilpotent: power chain stabilizes at dimension {0}")]
    NotNilpotent(usize),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under multiplication")]
    NotASubalgebra,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("character table construction failed: {0}")]
    TableFailure(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn check_cap(size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}
