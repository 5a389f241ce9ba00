use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension list is empty")]
    EmptyDims,

    #[error("cycle length at position {index} is {value}, must be at least {min}")]
    DimTooSmall { index: usize, value: usize, min: usize },

    #[error("coordinate out of range: {0}")]
    CoordOutOfRange(String),

    #[error("source and target are the same vertex")]
    SameVertex,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("base palette ({base}) does not fit into the prism palette ({prism})")]
    PaletteTooLarge { base: usize, prism: usize },

    #[error("palette map is not injective: {0}")]
    NotInjective(String),

    #[error("color {color} is outside the palette of size {palette}")]
    ColorOutOfRange { color: usize, palette: usize },

    #[error("edge {0} has no color")]
    IncompleteColoring(String),

    #[error("expected an even and an odd cycle length, got {even} and {odd}")]
    ParityMismatch { even: usize, odd: usize },

    #[error("table replay needs n >= 4, got {0}")]
    BadParity(usize),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("plan claims {claimed} colors but its coloring uses {actual}")]
    PlanMismatch { claimed: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
