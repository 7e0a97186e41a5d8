use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("Galois index {k} is not coprime to conductor {conductor}")]
    InvalidGaloisIndex { k: i64, conductor: u32 },
    #[error("conductor {0} exceeds the configured bound {1}")]
    ConductorTooLarge(u32, u32),
    #[error("group closure exceeds the size cap {0}")]
    GroupTooLarge(usize),
    #[error("bad generator: {0}")]
    BadGenerator(String),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("not a character of this group: {0}")]
    NotACharacter(String),
    #[error("geometry inconsistency: {0}")]
    GeometryInconsistency(String),
    #[error("bad scenario: {0}")]
    BadScenario(String),
    #[error("bad choice of summands: {0}")]
    BadChoice(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
