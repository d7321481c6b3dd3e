//! PT-symmetric tridiagonal chain Hamiltonians and their observability horizons.
//!
//! The model family is the N×N real chain matrix H⁽ᴺ⁾ (N = 2…11) with the
//! equidistant main diagonal −(N−1), −(N−3), …, N−1 and antisymmetric
//! off-diagonal couplings ±g₁, ±g₂, …, folded symmetrically about the centre.
//! Such a matrix is PT-symmetric in the sense R·H·R = −H (R = index reversal),
//! so its spectrum is symmetric under E → −E and the characteristic polynomial
//! reduces to a degree-J polynomial in s = E², J = ⌊N/2⌋.
//!
//! The crate answers one question exactly: for which coupling vectors
//! (g₁, …, g_J) is the whole spectrum real — i.e. when does the point lie in
//! the physical domain D⁽ᴺ⁾?  Three independent routes are provided:
//!
//! - [`criteria`]: closed-form algebraic membership tests for J = 1…5
//!   (coefficient sign conditions, a compact discriminant inequality at J = 3,
//!   and interlacing chains of rescaled extreme locations at J = 4, 5);
//! - [`oracle`]: an exact Sturm-sequence root count over rationals, plus a
//!   numerical spectrum reporter;
//! - [`geometry`]: the structure of the boundary ∂D⁽ᴺ⁾ — extreme exceptional
//!   corners where the secular polynomial collapses to s^J, the N = 6 double
//!   exceptional curve, the pairwise-confluence sub-surface, and a bisection
//!   tracer for the horizon along arbitrary rays.
//!
//! Everything upstream of floating-point verdicts is carried in exact rational
//! arithmetic (`num::BigRational`), so degeneracy statements ("all coefficients
//! vanish", "det H = 0") are decided exactly, not to a tolerance.
//!
//! ```
//! use ptchain::{dispatch, oracle_verdict, CouplingVector, DomainState, DEFAULT_EPSILON};
//!
//! // N = 6 with mild couplings: the whole spectrum is real
//! let point = CouplingVector::new(6, vec![1.0, 1.0, 1.0])?;
//! let closed_form = dispatch(&point, DEFAULT_EPSILON)?;
//! let exact = oracle_verdict(&point)?;
//! assert_eq!(closed_form.verdict.state, DomainState::Inside);
//! assert_eq!(exact.state, DomainState::Inside);
//! # Ok::<(), ptchain::Error>(())
//! ```

pub mod chain;
pub mod criteria;
mod error;
pub mod geometry;
pub mod oracle;
pub mod poly;
pub mod ratio;
pub mod secular;

pub use chain::{
    anti_persymmetry_defect, build_chain, two_level_horizon, two_level_spectrum, ChainMatrix,
    CouplingVector, TwoLevelModel, TwoLevelVariant,
};
pub use criteria::{
    assess, dispatch, dispatch_squares, solve_cubic_real, solve_quartic_real, Assessment,
    AuxInvariants, AuxRoots, DomainState, Verdict, DEFAULT_EPSILON,
};
pub use error::{Error, Result};
pub use geometry::{
    ansatz_to_couplings, boundary_bisect, confluence_surface_n6, dep_solve_n6, eep_point,
    reparam_j3, AnsatzChart, BoundaryPoint, DepPoint, EepPoint, ReparamWindow,
};
pub use oracle::{
    numeric_spectrum, oracle_verdict, oracle_verdict_squares, sturm_classify, SpectrumClass,
    SpectrumReport, SturmCertificate,
};
pub use poly::RatPoly;
pub use secular::{
    char_poly, char_poly_from_squares, necessary_conditions, to_secular_form, CharPoly,
    ConditionReport, SecularForm,
};

/// Smallest supported matrix dimension.
pub const MIN_DIM: usize = 2;
/// Largest supported matrix dimension; beyond it the extreme-determining
/// polynomials stop being solvable in closed form.
pub const MAX_DIM: usize = 11;
