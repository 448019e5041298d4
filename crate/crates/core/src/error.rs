use thiserror::Error;

/// Every failure the library can report.
///
/// The `Display` strings are stable kebab-case tags; the CLI prints them
/// verbatim and scripts match on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate-centers")]
    DegenerateCenters,
    #[error("empty-point-set")]
    EmptyPointSet,
    #[error("non-finite: {0}")]
    NonFinite(&'static str),
    #[error("invalid-radius: {0}")]
    InvalidRadius(f64),
    #[error("empty-intersection")]
    EmptyIntersection,
    #[error("degenerate-intersection")]
    DegenerateIntersection,
    #[error("invalid-order: {0}")]
    InvalidOrder(usize),
    #[error("angle-sum-violation: sum is {sum}")]
    AngleSumViolation { sum: f64 },
    #[error("angle-range-violation: angle {index} is {value}")]
    AngleRangeViolation { index: usize, value: f64 },
    #[error("parity-violation: {0} angles")]
    ParityViolation(usize),
    #[error("closure-violation: boundary misses its start by {defect:e}")]
    ClosureViolation { defect: f64 },
    #[error("depth-exceeds-inradius: t = {t}, inradius = {inradius}")]
    DepthExceedsInradius { t: f64, inradius: f64 },
    #[error("negative-depth: {0}")]
    NegativeDepth(f64),
    #[error("out-of-range: {0}")]
    OutOfRange(String),
    #[error("turning-angle-range: beta {index} is {value}")]
    TurningAngleRange { index: usize, value: f64 },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("point-outside")]
    PointOutside,
    #[error("invalid-shape-spec: {0}")]
    InvalidShapeSpec(String),
    #[error("invalid-config: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
