use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("alphabet must have at least one generator")]
    EmptyAlphabet,
    #[error("letter {letter} is outside 1..={n}")]
    InvalidLetter { letter: u32, n: u32 },
    #[error("word of length {len} exceeds depth {depth}")]
    WordTooLong { len: usize, depth: usize },
    #[error("series of degree {degree} exceeds depth {depth}")]
    DegreeOverflow { degree: usize, depth: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("point {norm_sq} (squared norm) is outside the open unit ball")]
    OutsideBall { norm_sq: f64 },
    #[error("not a corepresentation: criterion defect {0}")]
    InvalidCorepresentation(f64),
    #[error("representation law violated: defect {0}")]
    RepresentationLaw(f64),
    #[error("{0}")]
    Parse(String),
}
