use thiserror::Error;

/// Errors produced by the chain-model pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Closed-form criteria exist only for 2 ≤ N ≤ 11.
    #[error("unsupported dimension N = {0}: supported range is 2..=11")]
    UnsupportedDimension(usize),

    /// A coupling vector must carry exactly J = ⌊N/2⌋ entries.
    #[error("N = {n} needs {expected} couplings, got {got}")]
    WrongCouplingCount { n: usize, expected: usize, got: usize },

    /// Couplings must be finite reals.
    #[error("coupling #{0} is not finite")]
    NonFiniteCoupling(usize),

    /// A structural identity that must hold exactly was violated; this always
    /// signals a bug upstream (broken matrix builder, corrupted polynomial).
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Strong-coupling ansatz evaluated outside its chart.
    #[error("ansatz value gamma_{index} = {value} lies outside [0, 1]")]
    AnsatzOutOfRange { index: usize, value: f64 },

    /// The J = 3 reparametrization divides by B^(3/2) and needs B > 0.
    #[error("reparametrization undefined: B = {0} is not positive")]
    UndefinedReparam(f64),

    /// No Inside/Outside transition found along a ray within the coupling box.
    #[error("no boundary crossing along the ray inside the bounding box (r_max = {r_max})")]
    NoBoundaryFound { r_max: f64 },

    /// An iterative solve failed; the payload describes the bracket or residual.
    #[error("solver did not converge: {0}")]
    NonConvergence(String),

    /// Sturm classification of the zero polynomial is meaningless.
    #[error("zero polynomial passed to Sturm classification")]
    ZeroPolynomial,

    /// Ray directions must be nonzero and match the coupling count.
    #[error("bad ray direction: {0}")]
    BadDirection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
