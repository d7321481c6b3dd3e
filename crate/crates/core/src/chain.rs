//! Chain-matrix construction and the two-by-two reference models.
//!
//! The N×N chain Hamiltonian has main diagonal −(N−1), −(N−3), …, N−1 and
//! off-diagonal pairs (+g_m, −g_m) with m(k) = min(k, N−k), so the couplings
//! fold symmetrically about the centre and the matrix obeys the
//! anti-persymmetry R·H·R = −H that realizes PT symmetry here.

use crate::error::{Error, Result};
use crate::ratio::rational_from_f64;
use crate::{MAX_DIM, MIN_DIM};
use nalgebra::DMatrix;
use num::complex::Complex64;
use num::rational::BigRational;

/// A point in coupling space: dimension N and the J = ⌊N/2⌋ real couplings.
///
/// Signs of the couplings are irrelevant to every spectral question (only
/// g_k² enters the secular polynomial), so arbitrary signs are accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingVector {
    n: usize,
    g: Vec<f64>,
}

impl CouplingVector {
    pub fn new(n: usize, g: Vec<f64>) -> Result<Self> {
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        let expected = n / 2;
        if g.len() != expected {
            return Err(Error::WrongCouplingCount { n, expected, got: g.len() });
        }
        if let Some(idx) = g.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteCoupling(idx));
        }
        Ok(CouplingVector { n, g })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of independent couplings, J = ⌊N/2⌋.
    pub fn order(&self) -> usize {
        self.n / 2
    }

    pub fn couplings(&self) -> &[f64] {
        &self.g
    }

    /// Exact rational squares of the couplings (every finite f64 is rational).
    pub fn coupling_squares(&self) -> Vec<BigRational> {
        self.g
            .iter()
            .map(|&x| {
                let r = rational_from_f64(x);
                &r * &r
            })
            .collect()
    }

    /// Same point with the k-th coupling sign-flipped.
    pub fn sign_flipped(&self, k: usize) -> CouplingVector {
        let mut g = self.g.clone();
        g[k] = -g[k];
        CouplingVector { n: self.n, g }
    }
}

/// The N×N chain matrix, stored as its three bands.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMatrix {
    n: usize,
    diag: Vec<f64>,
    upper: Vec<f64>,
    lower: Vec<f64>,
}

impl ChainMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Main diagonal −(N−1), −(N−3), …, N−1.
    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    /// Superdiagonal entries (k, k+1) = +g_{m(k)}.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Subdiagonal entries (k+1, k) = −g_{m(k)}.
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag[i]
        } else if j == i + 1 {
            self.upper[i]
        } else if i == j + 1 {
            self.lower[j]
        } else {
            0.0
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.entry(i, j))
    }

    /// Exact rational squares of the J distinct couplings; links 1..=J of
    /// the band are g₁…g_J before the fold repeats them. This is what the
    /// determinant recurrence consumes.
    pub fn coupling_squares(&self) -> Vec<BigRational> {
        self.upper[..self.n / 2]
            .iter()
            .map(|&u| {
                let r = rational_from_f64(u);
                &r * &r
            })
            .collect()
    }
}

/// Build the chain matrix for a coupling vector. Total and deterministic;
/// dimension errors are caught at [`CouplingVector`] construction.
pub fn build_chain(c: &CouplingVector) -> ChainMatrix {
    let n = c.dim();
    let diag = (0..n).map(|k| (2 * k) as f64 - (n - 1) as f64).collect();
    let mut upper = Vec::with_capacity(n - 1);
    let mut lower = Vec::with_capacity(n - 1);
    for k in 1..n {
        let m = k.min(n - k); // 1-based coupling index of link k
        let g = c.couplings()[m - 1];
        upper.push(g);
        lower.push(-g);
    }
    ChainMatrix { n, diag, upper, lower }
}

/// Max-norm of R·M·R + M where R is the index-reversal permutation.
/// Zero exactly for every valid chain matrix.
pub fn anti_persymmetry_defect(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "square matrix required");
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let defect = m[(n - 1 - i, n - 1 - j)] + m[(i, j)];
            worst = worst.max(defect.abs());
        }
    }
    worst
}

/// Hermitian vs PT-symmetric flavour of the 2×2 reference model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoLevelVariant {
    /// [[a, b], [b, d]] — spectrum real for every parameter triple.
    Hermitian,
    /// [[a, b], [−b, d]] — spectrum real only inside (a−d)² ≥ 4b².
    PtSymmetric,
}

/// The pedagogical 2×2 model H(a, b, d).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelModel {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub variant: TwoLevelVariant,
}

/// Both eigenvalues, ordered by (re, im).
///
/// Hermitian: (a+d ± √((a−d)² + 4b²))/2, always real.
/// PT-symmetric: (a+d ± √((a−d)² − 4b²))/2, a conjugate pair once
/// (a−d)² < 4b².
pub fn two_level_spectrum(m: &TwoLevelModel) -> (Complex64, Complex64) {
    let half_trace = 0.5 * (m.a + m.d);
    let gap = m.a - m.d;
    let disc = match m.variant {
        TwoLevelVariant::Hermitian => gap * gap + 4.0 * m.b * m.b,
        TwoLevelVariant::PtSymmetric => gap * gap - 4.0 * m.b * m.b,
    };
    let root = Complex64::from(disc).sqrt();
    let e1 = Complex64::from(half_trace) - 0.5 * root;
    let e2 = Complex64::from(half_trace) + 0.5 * root;
    if (e1.re, e1.im) <= (e2.re, e2.im) {
        (e1, e2)
    } else {
        (e2, e1)
    }
}

/// Open interval of admissible b for the PT-symmetric 2×2 model at fixed
/// (a, d), following the printed constraint b ∈ (−|a−d|, |a−d|).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibleInterval {
    half_width: f64,
}

impl AdmissibleInterval {
    pub fn lo(&self) -> f64 {
        -self.half_width
    }

    pub fn hi(&self) -> f64 {
        self.half_width
    }

    /// a = d collapses the interval to a point; flagged, not an error.
    pub fn is_degenerate(&self) -> bool {
        self.half_width == 0.0
    }

    pub fn contains(&self, b: f64) -> bool {
        b > self.lo() && b < self.hi()
    }
}

/// Admissible-b interval (−|a−d|, |a−d|) of the PT-symmetric 2×2 model.
pub fn two_level_horizon(a: f64, d: f64) -> AdmissibleInterval {
    AdmissibleInterval { half_width: (a - d).abs() }
}
