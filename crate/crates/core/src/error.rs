use std::fmt;

/// Errors produced by the synthesis and analysis routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two matrices that must compose or match in shape do not; names the offending pair.
    DimensionMismatch(String),
    /// A matrix contains NaN or infinite entries.
    NonFiniteEntry(String),
    /// The exosystem matrix is defective (an eigenvalue with geometric < algebraic multiplicity).
    NotSemisimple,
    /// An exosystem eigenvalue lies off the imaginary axis beyond tolerance.
    SpectrumViolation(String),
    /// The pair (A, B) fails the PBH stabilizability test.
    NotStabilizable,
    /// The pair (C, A) fails the PBH detectability test.
    NotDetectable,
    /// The Riccati Hamiltonian has eigenvalues on the imaginary axis.
    ImaginaryAxisEigenvalues,
    /// A gain expected to stabilize the plant does not.
    NotStabilizing { spectral_abscissa: f64 },
    /// A stated precondition of the called operation is violated.
    PreconditionViolated(String),
    /// A candidate variation does not solve its homogeneous constraint equations.
    InfeasibleVariation { residual: f64 },
    /// An optimality probe found a variation with negative power difference.
    ProbeFailed {
        delta_power: f64,
        delta_pi: Vec<f64>,
        delta_gamma: Vec<f64>,
    },
    /// Per-eigenvalue constraints of the oracle are unsolvable.
    InconsistentConstraints { residual: f64 },
    /// Integration step too large for the system's spectral radius.
    StepTooLarge { factor: f64 },
    /// A factorization or solve did not deliver the required accuracy.
    NumericalFailure(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::NonFiniteEntry(what) => write!(f, "non-finite entry in {what}"),
            Error::NotSemisimple => write!(f, "matrix is not semisimple"),
            Error::SpectrumViolation(what) => write!(f, "spectrum violation: {what}"),
            Error::NotStabilizable => write!(f, "the pair (A, B) is not stabilizable"),
            Error::NotDetectable => write!(f, "the pair (C, A) is not detectable"),
            Error::ImaginaryAxisEigenvalues => {
                write!(f, "Hamiltonian matrix has imaginary-axis eigenvalues")
            }
            Error::NotStabilizing { spectral_abscissa } => {
                write!(f, "gain is not stabilizing (spectral abscissa {spectral_abscissa:e})")
            }
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::InfeasibleVariation { residual } => {
                write!(f, "variation violates its homogeneous equations (residual {residual:e})")
            }
            Error::ProbeFailed { delta_power, .. } => {
                write!(f, "optimality probe failed: power difference {delta_power:e}")
            }
            Error::InconsistentConstraints { residual } => {
                write!(f, "per-eigenvalue constraints are inconsistent (residual {residual:e})")
            }
            Error::StepTooLarge { factor } => {
                write!(f, "integration step too large: dt * spectral radius = {factor:.3}")
            }
            Error::NumericalFailure(what) => write!(f, "numerical failure: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
