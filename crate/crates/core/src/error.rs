use thiserror::Error;

/// Errors produced by the construction and verification pipeline.
///
/// Geometric predicates never fail silently: a degenerate input surfaces as a
/// typed error naming the offending step, and a violated coincidence theorem
/// aborts the build rather than producing a bogus element.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector cannot be canonicalized")]
    ZeroVector,

    #[error("join of coincident points")]
    CoincidentPoints,

    #[error("meet of coincident lines")]
    CoincidentLines,

    #[error("dependent-triple test requires pairwise distinct elements")]
    DuplicateElement,

    #[error("cross-ratio: the four points are not collinear")]
    NotCollinear,

    #[error("cross-ratio: the four lines are not concurrent")]
    NotConcurrent,

    #[error("cross-ratio frame requires three pairwise distinct elements")]
    DegenerateFrame,

    #[error("hexagon word contains a repeated letter")]
    RepeatedLetter,

    #[error("Pascal's theorem violated for hexagon {hexagon}: the three opposite-side meets are not collinear")]
    PascalViolation { hexagon: String },

    #[error("degenerate sextuple at step: {step}")]
    DegenerateSextuple { step: String },

    #[error("mutation degeneracy at step: {step}")]
    MutationDegeneracy { step: String },

    #[error("height {needed} not built (built up to {built})")]
    HeightNotBuilt { needed: usize, built: usize },

    #[error("height {height} has the wrong parity for this inter-layer element")]
    ParityMismatch { height: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
