//! Ground truth independent of the closed-form criteria.
//!
//! The exact route counts distinct real roots of the secular s-polynomial on
//! [0, ∞) with a Sturm sequence over the rationals — no tolerance anywhere,
//! so it adjudicates every rational input, including the exactly degenerate
//! configurations the floating criteria can only band. The numeric route
//! solves the same polynomial with a companion-matrix eigensolver and
//! reports the spectrum layout (±√s pairs, degeneracy pattern).
//!
//! The oracle deliberately works on the degree-J polynomial in s = E²
//! rather than the degree-N polynomial in E: the membership question is
//! exactly "are all s-roots real and non-negative", and halving the degree
//! helps both exactness and conditioning.

use crate::chain::CouplingVector;
use crate::criteria::{DomainState, Verdict};
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::secular::{char_poly_from_squares, to_secular_form, SecularForm};
use nalgebra::DMatrix;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::Zero;

/// Exact decision data for "all roots real and non-negative".
#[derive(Debug, Clone, PartialEq)]
pub struct SturmCertificate {
    /// Monic squarefree part of the secular polynomial.
    pub squarefree_part: RatPoly,
    /// Sign variations of the Sturm chain at 0 (after splitting off a root
    /// at the origin, if any).
    pub variations_at_zero: usize,
    /// Sign variations at +∞.
    pub variations_at_infinity: usize,
    /// Distinct real roots in [0, ∞).
    pub n_nonneg_real_roots: usize,
    /// gcd(f, f′) nonconstant.
    pub has_multiple_root: bool,
    /// f(0) = 0 exactly.
    pub has_root_at_zero: bool,
    /// Distinct real roots over all of ℝ.
    pub n_distinct_real_roots: usize,
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.primitive()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive());
    loop {
        let len = chain.len();
        let (_, rem) = chain[len - 2].div_rem(&chain[len - 1]);
        if rem.is_zero() {
            break;
        }
        chain.push(rem.neg().primitive());
    }
    chain
}

/// Exact root-count certificate for an arbitrary rational polynomial.
pub fn sturm_classify_poly(f: &RatPoly) -> Result<SturmCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deriv = f.derivative();
    let gcd = if deriv.is_zero() { f.clone() } else { f.gcd(&deriv) };
    let has_multiple_root = gcd.degree().is_some_and(|d| d >= 1);
    let squarefree = f.squarefree_part();

    let has_root_at_zero = f.coeff(0).is_zero();
    // split a simple origin root off the squarefree part so the chain can be
    // evaluated at 0 itself
    let reduced = if squarefree.coeff(0).is_zero() {
        squarefree.divide_by_x().expect("constant term is zero")
    } else {
        squarefree.clone()
    };

    let (v_zero, v_pos, v_neg) = if reduced.degree().is_none_or(|d| d == 0) {
        (0, 0, 0)
    } else {
        let chain = sturm_chain(&reduced);
        (
            sign_variations(chain.iter().map(|p| p.sign_at_zero())),
            sign_variations(chain.iter().map(|p| p.sign_at_pos_inf())),
            sign_variations(chain.iter().map(|p| p.sign_at_neg_inf())),
        )
    };
    let positive = v_zero - v_pos;
    let negative = v_neg - v_zero;
    let origin = usize::from(has_root_at_zero);

    Ok(SturmCertificate {
        squarefree_part: squarefree,
        variations_at_zero: v_zero,
        variations_at_infinity: v_pos,
        n_nonneg_real_roots: positive + origin,
        has_multiple_root,
        has_root_at_zero,
        n_distinct_real_roots: positive + negative + origin,
    })
}

/// Certificate for a secular form (exact rational coefficients).
pub fn sturm_classify(f: &SecularForm) -> Result<SturmCertificate> {
    sturm_classify_poly(f.raw())
}

fn verdict_from_certificate(cert: &SturmCertificate, order: usize) -> Verdict {
    let distinct = cert
        .squarefree_part
        .degree()
        .expect("squarefree part of a nonzero polynomial");
    let all_real = cert.n_distinct_real_roots == distinct;
    let all_nonneg = all_real && cert.n_nonneg_real_roots == distinct;

    if !cert.has_multiple_root && !cert.has_root_at_zero && cert.n_nonneg_real_roots == order {
        // order distinct roots, all strictly positive, no origin root
        Verdict { state: DomainState::Inside, witness: None, margin: 1.0 }
    } else if all_nonneg {
        let witness = if cert.has_root_at_zero {
            "sturm-root-at-zero"
        } else {
            "sturm-multiple-root"
        };
        Verdict { state: DomainState::BoundaryBand, witness: Some(witness), margin: 0.0 }
    } else {
        Verdict {
            state: DomainState::Outside,
            witness: Some("sturm-complex-or-negative"),
            margin: -1.0,
        }
    }
}

/// Exact verdict for a secular form.
pub fn oracle_verdict_form(f: &SecularForm) -> Result<Verdict> {
    Ok(verdict_from_certificate(&sturm_classify(f)?, f.order()))
}

/// Exact verdict from exact coupling squares.
pub fn oracle_verdict_squares(n: usize, g_sq: &[BigRational]) -> Result<Verdict> {
    let p = char_poly_from_squares(n, g_sq)?;
    oracle_verdict_form(&to_secular_form(&p, n)?)
}

/// Exact verdict for a coupling vector; the f64 couplings are dyadic
/// rationals, so the classification is exact for the point as stored.
pub fn oracle_verdict(c: &CouplingVector) -> Result<Verdict> {
    oracle_verdict_squares(c.dim(), &c.coupling_squares())
}

// ---------------------------------------------------------------------------
// numeric spectrum
// ---------------------------------------------------------------------------

/// Gross shape of a computed spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumClass {
    AllRealSimple,
    DegenerateReal,
    ComplexPairs,
}

impl std::fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumClass::AllRealSimple => write!(f, "all-real-simple"),
            SpectrumClass::DegenerateReal => write!(f, "degenerate-real"),
            SpectrumClass::ComplexPairs => write!(f, "complex-pairs"),
        }
    }
}

/// Numerically computed spectrum of one chain Hamiltonian.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    /// Roots of the secular s-polynomial, sorted by (re, im).
    pub s_roots: Vec<Complex64>,
    /// All N energies ±√s (plus the persistent 0 at odd N), sorted.
    pub energies: Vec<Complex64>,
    pub classification: SpectrumClass,
    /// Multiset of energy multiplicities, ascending (e.g. {2, 2, 2}).
    pub degeneracy_pattern: Vec<usize>,
}

impl SpectrumReport {
    /// Smallest pairwise distance between distinct s-roots; ∞ for J = 1.
    pub fn min_s_gap(&self) -> f64 {
        let mut min = f64::INFINITY;
        for (i, a) in self.s_roots.iter().enumerate() {
            for b in &self.s_roots[i + 1..] {
                min = min.min((a - b).norm());
            }
        }
        min
    }

    /// Smallest |s| over the roots.
    pub fn min_s_magnitude(&self) -> f64 {
        self.s_roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min)
    }
}

fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn polish_root(coeffs: &[f64], dcoeffs: &[f64], mut z: Complex64) -> Complex64 {
    let mut best = eval_complex(coeffs, z).norm();
    for _ in 0..4 {
        let f = eval_complex(coeffs, z);
        let df = eval_complex(dcoeffs, z);
        if df.norm() < 1e-12 * (1.0 + z.norm()) {
            break;
        }
        let step = f / df;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        // keep a step only while it reduces the residual; near multiple
        // roots plain Newton orbits in a sqrt(eps) ball instead
        let candidate = z - step;
        let res = eval_complex(coeffs, candidate).norm();
        if res >= best {
            break;
        }
        best = res;
        z = candidate;
    }
    z
}

fn derivative_coeffs(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect()
}

fn companion_roots(monic: &[f64]) -> Vec<Complex64> {
    let deg = monic.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![Complex64::from(-monic[0])];
    }
    let m = DMatrix::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -monic[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().copied().collect()
}

/// Cluster sorted roots whose mutual distance is below `tol` and refine each
/// cluster of size m on the (m−1)-th derivative, where the collapsed root is
/// simple and Newton converges quadratically again.
fn refine_clusters(coeffs: &[f64], roots: &mut [Complex64], tol: f64) -> Vec<usize> {
    let n = roots.len();
    let mut pattern = Vec::new();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        let mut members = vec![i];
        used[i] = true;
        for (j, flag) in used.iter_mut().enumerate().skip(i + 1) {
            if !*flag && (roots[i] - roots[j]).norm() <= tol {
                members.push(j);
                *flag = true;
            }
        }
        let m = members.len();
        if m >= 2 {
            let mut d: Vec<f64> = coeffs.to_vec();
            for _ in 0..m - 1 {
                d = derivative_coeffs(&d);
            }
            let mean = members.iter().map(|&j| roots[j]).sum::<Complex64>() / m as f64;
            let refined = polish_root(&d, &derivative_coeffs(&d), mean);
            for &j in &members {
                roots[j] = refined;
            }
        }
        pattern.push(m);
    }
    pattern.sort_unstable();
    pattern
}

fn sort_complex(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Spectrum from a secular form plus the ambient dimension (odd N appends
/// the persistent zero level).
pub fn numeric_spectrum_form(f: &SecularForm, n: usize) -> Result<SpectrumReport> {
    let monic = f.raw().to_f64_coeffs();
    let scale = monic.iter().fold(1.0_f64, |acc, c| acc.max(c.abs()));
    let dcoeffs = derivative_coeffs(&monic);

    let mut s_roots = companion_roots(&monic);
    for z in s_roots.iter_mut() {
        *z = polish_root(&monic, &dcoeffs, *z);
    }
    for z in &s_roots {
        let residual = eval_complex(&monic, *z).norm();
        if residual > 1e-9 * scale {
            return Err(Error::NonConvergence(format!(
                "residual {residual:.3e} at s = {z} for secular polynomial {}",
                f.raw()
            )));
        }
    }
    sort_complex(&mut s_roots);

    // a defective double eigenvalue of the companion matrix splits by about
    // sqrt(backward error), so the cluster radius must sit well above that
    let s_scale = s_roots.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    refine_clusters(&monic, &mut s_roots, 5e-6 * s_scale);

    // roots are only certified to the residual bound; snap below it so the
    // square root does not amplify O(tol) noise at s ≈ 0 into O(√tol)
    // spurious imaginary energies
    let snap = 1e-9 * s_scale;
    for z in s_roots.iter_mut() {
        if z.im.abs() <= snap {
            z.im = 0.0;
        }
        if z.re.abs() <= snap {
            z.re = 0.0;
        }
    }

    let mut energies = Vec::with_capacity(n);
    for s in &s_roots {
        let e = s.sqrt();
        energies.push(e);
        energies.push(-e);
    }
    if n % 2 == 1 {
        energies.push(Complex64::ZERO);
    }
    sort_complex(&mut energies);

    let e_scale = energies.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
    let mut sorted = energies.clone();
    sort_complex(&mut sorted);
    let pattern = {
        // cluster energies for the multiplicity multiset
        let mut e = sorted.clone();
        cluster_pattern(&mut e, 1e-6 * e_scale)
    };
    let real = energies.iter().all(|z| z.im.abs() <= 1e-8 * e_scale);
    let classification = if !real {
        SpectrumClass::ComplexPairs
    } else if pattern.last().copied().unwrap_or(1) > 1 {
        SpectrumClass::DegenerateReal
    } else {
        SpectrumClass::AllRealSimple
    };

    Ok(SpectrumReport { s_roots, energies, classification, degeneracy_pattern: pattern })
}

fn cluster_pattern(roots: &mut [Complex64], tol: f64) -> Vec<usize> {
    let n = roots.len();
    let mut used = vec![false; n];
    let mut pattern = Vec::new();
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut m = 1;
        for (j, flag) in used.iter_mut().enumerate().skip(i + 1) {
            if !*flag && (roots[i] - roots[j]).norm() <= tol {
                m += 1;
                *flag = true;
            }
        }
        pattern.push(m);
    }
    pattern.sort_unstable();
    pattern
}

/// Numeric spectrum of the chain at a coupling point.
pub fn numeric_spectrum(c: &CouplingVector) -> Result<SpectrumReport> {
    let p = char_poly_from_squares(c.dim(), &c.coupling_squares())?;
    let f = to_secular_form(&p, c.dim())?;
    numeric_spectrum_form(&f, c.dim())
}
