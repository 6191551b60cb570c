use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {size} exceeds the supported bound {bound}")]
    FieldTooLarge { size: u64, bound: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("tower degree must be 3 or 4, got {0}")]
    UnsupportedTowerDegree(u32),
    #[error("polynomial is not primitive: {0}")]
    NotPrimitive(String),
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
    #[error("q must be an odd prime power, got {0}")]
    EvenCharacteristic(u32),
    #[error("operation needs a degree-{expected} tower, got degree {actual}")]
    WrongTowerDegree { expected: u32, actual: u32 },
    #[error("column count {count} out of range 1..={max}")]
    ColumnCount { count: usize, max: usize },
    #[error("strength {t} out of range for {k} columns")]
    Strength { t: usize, k: usize },
    #[error("v^t = {cells} exceeds the coverage bitmap guard {guard}; use the rank engine")]
    CoverageGuard { cells: u64, guard: u64 },
    #[error("ingredient rejected: {0}")]
    Ingredient(String),
    #[error("array shape mismatch: {0}")]
    Shape(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
