//! Geometric structure of the observability horizons ∂D⁽ᴺ⁾.
//!
//! The horizon is a closed hypersurface with protruding corners (extreme
//! exceptional points) at gₖ² = (N−k)·k where the secular polynomial
//! collapses to s^J and all N energies merge at once. Around a corner the
//! strong-coupling chart g_n = g_n^max·√(1 − γ_n(t)) parametrizes the
//! interior approach. At N = 6 two more boundary strata are explicit: the
//! two-parameter confluence sub-surface (s − 16x²)²(s − 25y²) and the
//! double-exceptional-point curve where the secular form degenerates to
//! s·(s − 16z²)². Everything else is reached numerically by bisecting the
//! exact membership verdict along rays.

use crate::chain::CouplingVector;
use crate::criteria::DomainState;
use crate::error::{Error, Result};
use crate::oracle::{self, SpectrumClass};
use crate::poly::RatPoly;
use crate::ratio::rational_from_f64;
use crate::secular::{char_poly_from_squares, to_secular_form, SecularForm};
use crate::{MAX_DIM, MIN_DIM};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed};

// ---------------------------------------------------------------------------
// extreme exceptional points
// ---------------------------------------------------------------------------

/// The corner of ∂D⁽ᴺ⁾ where all levels confluence: gₖ² = (N−k)·k.
#[derive(Debug, Clone, PartialEq)]
pub struct EepPoint {
    n: usize,
    g: Vec<f64>,
}

impl EepPoint {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The couplings √((N−k)·k).
    pub fn couplings(&self) -> &[f64] {
        &self.g
    }

    /// Exact integer squares (N−k)·k, k = 1…J.
    pub fn coupling_squares_exact(&self) -> Vec<BigRational> {
        let n = self.n as i64;
        (1..=(self.n / 2) as i64)
            .map(|k| BigRational::from(BigInt::from((n - k) * k)))
            .collect()
    }

    /// The literal strong-coupling values (N−k)·k themselves. The
    /// squared-value convention adopted here is fixed by the N = 6 bounds
    /// (√5, 2√2, 3) and by exact coefficient vanishing; these unsquared
    /// numbers are kept visible for diagnostics because the source formula
    /// prints them without the square.
    pub fn literal_couplings(&self) -> Vec<f64> {
        let n = self.n as f64;
        (1..=self.n / 2).map(|k| (n - k as f64) * k as f64).collect()
    }

    pub fn coupling_vector(&self) -> CouplingVector {
        CouplingVector::new(self.n, self.g.clone()).expect("validated at construction")
    }
}

/// Construct the EEP corner for dimension N and certify, in exact
/// arithmetic, that every normalized secular coefficient vanishes there.
pub fn eep_point(n: usize) -> Result<EepPoint> {
    if !(MIN_DIM..=MAX_DIM).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    let j = n / 2;
    let g: Vec<f64> = (1..=j).map(|k| (((n - k) * k) as f64).sqrt()).collect();
    let point = EepPoint { n, g };
    let squares = point.coupling_squares_exact();
    let form = to_secular_form(&char_poly_from_squares(n, &squares)?, n)?;
    if !form.is_fully_confluent() {
        return Err(Error::Inconsistency(format!(
            "EEP certificate failed at N = {n}: secular form is not s^{j}"
        )));
    }
    Ok(point)
}

// ---------------------------------------------------------------------------
// strong-coupling ansatz
// ---------------------------------------------------------------------------

/// The chart t ↦ γ_n(t) = t + t² + … + t^{J−1} + G_n·t^J near an EEP corner.
#[derive(Debug, Clone, PartialEq)]
pub struct AnsatzChart {
    pub t: f64,
    pub g_coeffs: Vec<f64>,
}

impl AnsatzChart {
    /// γ_n(t) for every n; γ_n(0) = 0.
    pub fn gammas(&self) -> Vec<f64> {
        let j = self.g_coeffs.len();
        self.g_coeffs
            .iter()
            .map(|&gn| {
                let mut gamma = 0.0;
                let mut power = 1.0;
                for _ in 1..j {
                    power *= self.t;
                    gamma += power;
                }
                gamma + gn * power * self.t
            })
            .collect()
    }
}

/// Map ansatz data onto couplings: g_n = g_n^max·√(1 − γ_n(t)).
/// Every γ_n must land in [0, 1]; outside, the square root would either go
/// imaginary or flip the coupling through its strong-coupling maximum.
pub fn ansatz_to_couplings(n: usize, t: f64, g_coeffs: &[f64]) -> Result<CouplingVector> {
    let corner = eep_point(n)?;
    let j = n / 2;
    if g_coeffs.len() != j {
        return Err(Error::WrongCouplingCount { n, expected: j, got: g_coeffs.len() });
    }
    let chart = AnsatzChart { t, g_coeffs: g_coeffs.to_vec() };
    let gammas = chart.gammas();
    let mut g = Vec::with_capacity(j);
    for (idx, (gamma, gmax)) in gammas.iter().zip(corner.couplings()).enumerate() {
        if !(0.0..=1.0).contains(gamma) {
            return Err(Error::AnsatzOutOfRange { index: idx + 1, value: *gamma });
        }
        g.push(gmax * (1.0 - gamma).sqrt());
    }
    CouplingVector::new(n, g)
}

// ---------------------------------------------------------------------------
// J = 3 reparametrization
// ---------------------------------------------------------------------------

/// Admissible window for K = R/(2B^{3/2}) at J = 3, parametrized by q = Q/B:
/// 1 + (q/2 − 1)√(1+q) ≥ K ≥ max(0 for q ≤ 3, (q/2 − 1)√(1+q) − 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReparamWindow {
    pub b: f64,
    pub q_ratio: f64,
    pub lower: f64,
    pub upper: f64,
    /// The actual K = R/(2B^{3/2}) of the input.
    pub ratio: f64,
}

impl ReparamWindow {
    pub fn contains(&self) -> bool {
        self.lower <= self.ratio && self.ratio <= self.upper
    }
}

/// Reparametrize the J = 3 constraint as a window on R. Requires B > 0
/// (and presumes P, Q ≥ 0, where the source derivation lives).
pub fn reparam_j3(p: f64, q: f64, r: f64) -> Result<ReparamWindow> {
    let b = p * p - q;
    if b <= 0.0 {
        return Err(Error::UndefinedReparam(b));
    }
    let q_ratio = q / b;
    let root = (1.0 + q_ratio).sqrt();
    let upper = 1.0 + (q_ratio / 2.0 - 1.0) * root;
    let lower = if q_ratio <= 3.0 { 0.0 } else { (q_ratio / 2.0 - 1.0) * root - 1.0 };
    let ratio = r / (2.0 * b.powf(1.5));
    Ok(ReparamWindow { b, q_ratio, lower, upper, ratio })
}

/// Exact Maclaurin coefficients of the window's upper bound
/// 1 + (q/2 − 1)√(1+q), orders 0..=order, via the binomial series of √(1+q).
pub fn reparam_upper_series(order: usize) -> Vec<BigRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // aₖ = C(1/2, k)
    let mut a = vec![BigRational::one()];
    for k in 1..=order {
        let prev = a[k - 1].clone();
        let factor = (&half - BigRational::from(BigInt::from(k as i64 - 1)))
            / BigRational::from(BigInt::from(k as i64));
        a.push(prev * factor);
    }
    let mut c = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut ck = -&a[k];
        if k >= 1 {
            ck += &a[k - 1] * &half;
        }
        if k == 0 {
            ck += BigRational::one();
        }
        c.push(ck);
    }
    c
}

// ---------------------------------------------------------------------------
// N = 6 confluence sub-surface
// ---------------------------------------------------------------------------

/// Exact secular form of the N = 6 pairwise-confluence stratum:
/// s³ − (32x² + 25y²)s² + (256x⁴ + 800x²y²)s − 6400x⁴y², which factors as
/// (s − 16x²)²(s − 25y²); the factorization is asserted exactly.
pub fn confluence_surface_exact(x: &BigRational, y: &BigRational) -> SecularForm {
    let (x2, y2) = (x * x, y * y);
    let x4 = &x2 * &x2;
    let big = |v: i64| BigRational::from(BigInt::from(v));
    let coeffs = vec![
        -(big(6400) * &x4 * &y2),
        big(256) * &x4 + big(800) * &x2 * &y2,
        -(big(32) * &x2 + big(25) * &y2),
        BigRational::one(),
    ];
    let cubic = RatPoly::new(coeffs);

    let u = big(16) * &x2; // double root
    let v = big(25) * &y2; // simple root
    let factored = RatPoly::from_roots(&[u.clone(), u, v]);
    assert_eq!(cubic, factored, "confluence cubic must factor as (s-16x²)²(s-25y²)");

    SecularForm::from_raw(cubic).expect("monic cubic")
}

/// Floating entry point with x, y ∈ (0, 1); the f64 inputs are rationalized
/// exactly, so the factorization assertion stays exact.
pub fn confluence_surface_n6(x: f64, y: f64) -> SecularForm {
    assert!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0, "confluence chart needs x, y in (0, 1)");
    confluence_surface_exact(&rational_from_f64(x), &rational_from_f64(y))
}

// ---------------------------------------------------------------------------
// N = 6 double exceptional points
// ---------------------------------------------------------------------------

/// A point of the N = 6 DEP curve: couplings (c, b, a) = (g₁, g₂, g₃) where
/// two level pairs merge simultaneously, E₀ = E₁ = −4z = −E₄ = −E₅ with the
/// inner pair pinned at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepPoint {
    pub c: f64,
    pub b: f64,
    pub a: f64,
    /// Degeneracy parameter recovered from the numeric double root
    /// s_double = 16z².
    pub z: f64,
}

impl DepPoint {
    pub fn coupling_vector(&self) -> CouplingVector {
        CouplingVector::new(6, vec![self.c, self.b, self.a]).expect("N = 6 triple")
    }

    /// Residuals of the three defining relations, in order:
    /// b² − (c²+15)(a−1)/5, the second DEP condition, and the margin of
    /// 84c² ≥ 63 + (12/5)(a−1)(15+c²) (non-negative when valid).
    pub fn invariant_residuals(&self) -> [f64; 3] {
        let (a, b2, c2) = (self.a, self.b * self.b, self.c * self.c);
        let fei = b2 - (c2 + 15.0) * (a - 1.0) / 5.0;
        let second = -66.0 * a * a - 36.0 * b2 + 4.0 * c2 * a * a - 189.0 + 252.0 * c2
            - 4.0 * b2 * a * a
            - a.powi(4);
        let unequal = 84.0 * c2 - 63.0 - 12.0 / 5.0 * (a - 1.0) * (15.0 + c2);
        [fei, second, unequal]
    }
}

fn dep_second_condition(a: f64, c2: f64) -> f64 {
    let b2 = (c2 + 15.0) * (a - 1.0) / 5.0;
    -66.0 * a * a - 36.0 * b2 + 4.0 * c2 * a * a - 189.0 + 252.0 * c2 - 4.0 * b2 * a * a
        - a.powi(4)
}

/// Solve the N = 6 DEP system at fixed c: eliminate b via
/// b² = (c²+15)(a−1)/5, then drive the second DEP condition to zero by
/// bracketed bisection on a ∈ [1, 3]. Returns `None` when the bracket holds
/// no sign change or the validity inequality fails; on success the numeric
/// spectrum is certified to show the {2, 2, 2} degeneracy pattern.
pub fn dep_solve_n6(c: f64) -> Result<Option<DepPoint>> {
    assert!(c > 0.0 && c.is_finite(), "DEP solve needs c > 0");
    let c2 = c * c;
    let (mut lo, mut hi) = (1.0_f64, 3.0_f64);
    let (f_lo, f_hi) = (dep_second_condition(lo, c2), dep_second_condition(hi, c2));
    if f_lo == 0.0 && f_hi == 0.0 {
        return Ok(None); // degenerate bracket, nothing isolable
    }
    if f_lo * f_hi > 0.0 {
        return Ok(None);
    }
    let mut f_lo = f_lo;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = dep_second_condition(mid, c2);
        if f_lo * f_mid <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let residual = dep_second_condition(a, c2);
    let scale = (252.0 * c2).abs().max(189.0).max(a.powi(4));
    if residual.abs() > 1e-12 * scale {
        return Err(Error::NonConvergence(format!(
            "DEP bisection stalled: a in [{lo}, {hi}], residual {residual:.3e}"
        )));
    }

    let b2 = (c2 + 15.0) * (a - 1.0) / 5.0;
    if b2 < 0.0 {
        return Ok(None);
    }
    let b = b2.sqrt();
    // validity inequality (84c² ≥ 63 + (12/5)(a−1)(15+c²))
    if 84.0 * c2 < 63.0 + 12.0 / 5.0 * (a - 1.0) * (15.0 + c2) {
        return Ok(None);
    }

    // recover z from the double root of the numeric spectrum
    let point = CouplingVector::new(6, vec![c, b, a])?;
    let report = oracle::numeric_spectrum(&point)?;
    if report.degeneracy_pattern != vec![2, 2, 2]
        || report.classification != SpectrumClass::DegenerateReal
    {
        return Ok(None); // a root of the algebraic system without the physical degeneracy
    }
    let s_double = report
        .s_roots
        .iter()
        .map(|s| s.re)
        .fold(0.0_f64, f64::max);
    if s_double <= 0.0 {
        return Ok(None);
    }
    let z = s_double.sqrt() / 4.0;
    Ok(Some(DepPoint { c, b, a, z }))
}

// ---------------------------------------------------------------------------
// horizon bisection
// ---------------------------------------------------------------------------

/// One traced point of ∂D⁽ᴺ⁾ along a ray, with spectral diagnostics.
#[derive(Debug, Clone)]
pub struct BoundaryPoint {
    pub couplings: CouplingVector,
    /// Distance from the origin along the unit ray.
    pub radius: f64,
    /// Smallest pairwise s-root distance at the returned point.
    pub min_s_gap: f64,
    /// Smallest |s| at the returned point.
    pub min_s_magnitude: f64,
}

fn is_inside(n: usize, direction: &[f64], r: f64) -> Result<bool> {
    let g: Vec<f64> = direction.iter().map(|d| d * r).collect();
    let c = CouplingVector::new(n, g)?;
    Ok(oracle::oracle_verdict(&c)?.state == DomainState::Inside)
}

/// Find the horizon crossing along `direction` from the (always interior)
/// origin by bisecting the exact membership verdict. The search is capped
/// at the bounding box gₖ² ≤ 1.2·(N−k)·k that encloses the whole domain.
pub fn boundary_bisect(n: usize, direction: &[f64], tol: f64) -> Result<BoundaryPoint> {
    if !(MIN_DIM..=MAX_DIM).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    let j = n / 2;
    if direction.len() != j {
        return Err(Error::BadDirection(format!(
            "expected {j} components for N = {n}, got {}",
            direction.len()
        )));
    }
    let norm = direction.iter().map(|d| d * d).sum::<f64>().sqrt();
    if !norm.is_finite() || norm == 0.0 {
        return Err(Error::BadDirection("zero or non-finite direction".into()));
    }
    assert!(tol > 0.0, "bisection tolerance must be positive");
    let unit: Vec<f64> = direction.iter().map(|d| d / norm).collect();

    let mut r_max = f64::INFINITY;
    for (k, d) in unit.iter().enumerate() {
        if d.abs() > 0.0 {
            let box_edge = (1.2 * ((n - (k + 1)) * (k + 1)) as f64).sqrt();
            r_max = r_max.min(box_edge / d.abs());
        }
    }
    if is_inside(n, &unit, r_max)? {
        return Err(Error::NoBoundaryFound { r_max });
    }

    let (mut lo, mut hi) = (0.0_f64, r_max);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if is_inside(n, &unit, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let radius = 0.5 * (lo + hi);
    let couplings = CouplingVector::new(n, unit.iter().map(|d| d * radius).collect())?;
    let report = oracle::numeric_spectrum(&couplings)?;
    Ok(BoundaryPoint {
        couplings,
        radius,
        min_s_gap: report.min_s_gap(),
        min_s_magnitude: report.min_s_magnitude(),
    })
}

// ---------------------------------------------------------------------------
// exact N = 6 coefficient forms (shared by tests and the DEP certificate)
// ---------------------------------------------------------------------------

/// The three closed N = 6 coefficient expressions in (c², b², a²):
/// P = −(a² + 2b² + 2c² − 35)/3,
/// 3Q = b⁴ + 2c²a² − 44b² + 28c² − 34a² + c⁴ + 259 + 2b²c²,
/// −R = a²c⁴ − 10b²c² + 30c²a² + 225a² − 30c² − c⁴ − 25b⁴ − 225 − 150b².
pub fn n6_closed_coefficients(
    c2: &BigRational,
    b2: &BigRational,
    a2: &BigRational,
) -> (BigRational, BigRational, BigRational) {
    let big = |v: i64| BigRational::from(BigInt::from(v));
    let p = -(a2 + big(2) * b2 + big(2) * c2 - big(35)) / big(3);
    let q3 = b2 * b2 + big(2) * c2 * a2 - big(44) * b2 + big(28) * c2 - big(34) * a2 + c2 * c2
        + big(259)
        + big(2) * b2 * c2;
    let neg_r = a2 * c2 * c2 - big(10) * b2 * c2 + big(30) * c2 * a2 + big(225) * a2
        - big(30) * c2
        - c2 * c2
        - big(25) * b2 * b2
        - big(225)
        - big(150) * b2;
    (p, q3 / big(3), -neg_r)
}

/// Exact certificate that R vanishes identically on the DEP curve: for any
/// rational (a, c), substituting b² = (c²+15)(a−1)/5 into the factorization
/// −R = [a(c²+15)]² − (15 + c² + 5b²)² gives exactly zero, and the
/// determinant-derived R agrees. Returns the exact R (zero on success).
pub fn dep_r_vanishes_exactly(a: &BigRational, c: &BigRational) -> Result<BigRational> {
    let big = |v: i64| BigRational::from(BigInt::from(v));
    let c2 = c * c;
    let a2 = a * a;
    let b2 = (&c2 + big(15)) * (a - BigRational::one()) / big(5);

    // factorization identity for −R
    let lhs = a * (&c2 + big(15));
    let rhs = big(15) + &c2 + big(5) * &b2;
    let neg_r_factored = &lhs * &lhs - &rhs * &rhs;

    // determinant route
    let form = to_secular_form(
        &char_poly_from_squares(6, &[c2.clone(), b2.clone(), a2.clone()])?,
        6,
    )?;
    let r_det = form.normalized()[2].clone();

    if -&r_det != neg_r_factored {
        return Err(Error::Inconsistency(format!(
            "DEP factorization of R broken at a = {a}, c = {c}: {neg_r_factored} vs {}",
            -&r_det
        )));
    }
    Ok(r_det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{dispatch, DEFAULT_EPSILON};
    use approx::assert_abs_diff_eq;
    use num::traits::Zero;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eep_corners_certify_for_all_dimensions() {
        for n in 2..=11 {
            let p = eep_point(n).unwrap();
            let squares = p.coupling_squares_exact();
            for (k, sq) in squares.iter().enumerate() {
                let expect = ((n - (k + 1)) * (k + 1)) as i64;
                assert_eq!(*sq, BigRational::from(BigInt::from(expect)));
            }
        }
        assert!(matches!(eep_point(12), Err(Error::UnsupportedDimension(12))));
    }

    #[test]
    fn eep_n6_matches_the_known_bounds() {
        let p = eep_point(6).unwrap();
        let g = p.couplings();
        assert_abs_diff_eq!(g[0], 5.0_f64.sqrt());
        assert_abs_diff_eq!(g[1], 8.0_f64.sqrt());
        assert_abs_diff_eq!(g[2], 3.0);
        assert_eq!(p.literal_couplings(), vec![5.0, 8.0, 9.0]);
    }

    #[test]
    fn eep_n2_is_nilpotent() {
        let p = eep_point(2).unwrap();
        assert_eq!(p.couplings(), &[1.0]);
        let rep = oracle::numeric_spectrum(&p.coupling_vector()).unwrap();
        for e in rep.energies {
            assert_abs_diff_eq!(e.norm(), 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn ansatz_reproduces_the_corner_at_t_zero() {
        let c = ansatz_to_couplings(8, 0.0, &[1.0, -2.0, 0.5, 0.0]).unwrap();
        let corner = eep_point(8).unwrap();
        assert_eq!(c.couplings(), corner.couplings());
    }

    #[test]
    fn ansatz_arithmetic_at_j3() {
        let c = ansatz_to_couplings(6, 0.1, &[1.0, 1.0, 1.0]).unwrap();
        let corner = eep_point(6).unwrap();
        let shrink = (1.0 - 0.111_f64).sqrt();
        for (g, gmax) in c.couplings().iter().zip(corner.couplings()) {
            assert_abs_diff_eq!(*g, gmax * shrink, epsilon = 1e-12);
        }
    }

    #[test]
    fn ansatz_endpoint_and_domain_errors() {
        // J = 1, t = 1, G = 1: γ = 1 lands on the diagonal matrix
        let c = ansatz_to_couplings(2, 1.0, &[1.0]).unwrap();
        assert_eq!(c.couplings(), &[0.0]);
        assert_eq!(
            dispatch(&c, DEFAULT_EPSILON).unwrap().verdict.state,
            DomainState::Inside
        );

        assert!(matches!(
            ansatz_to_couplings(2, 1.0, &[2.0]),
            Err(Error::AnsatzOutOfRange { index: 1, .. })
        ));
        assert!(matches!(
            ansatz_to_couplings(2, 0.5, &[-1.0]),
            Err(Error::AnsatzOutOfRange { .. })
        ));
    }

    #[test]
    fn reparam_window_piecewise_continuity_at_q3() {
        // both branches meet at q = 3: upper = 2, lower = 0
        let b = 1.0;
        let q = 3.0; // choose P, Q with B = 1, Q/B = 3 → P = 2, Q = 3
        let w = reparam_j3(2.0, 3.0, 0.0).unwrap();
        assert_abs_diff_eq!(w.b, b);
        assert_abs_diff_eq!(w.q_ratio, q);
        assert_abs_diff_eq!(w.upper, 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w.lower, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn reparam_window_contains_the_diagonal_n6() {
        // P = 35/3, Q = 259/3, R = 225 (decoupled N = 6)
        let w = reparam_j3(35.0 / 3.0, 259.0 / 3.0, 225.0).unwrap();
        assert!(w.contains(), "window [{}, {}] vs ratio {}", w.lower, w.upper, w.ratio);
    }

    #[test]
    fn reparam_rejects_nonpositive_b() {
        assert!(matches!(reparam_j3(1.0, 2.0, 0.0), Err(Error::UndefinedReparam(_))));
    }

    #[test]
    fn reparam_series_known_coefficients() {
        let c = reparam_upper_series(6);
        assert!(c[0].is_zero() && c[1].is_zero());
        assert_eq!(c[2], rat(3, 8));
        assert_eq!(c[3], rat(-1, 8));
        assert_eq!(c[4], rat(9, 128));
        assert_eq!(c[5], rat(-3, 64));
        assert_eq!(c[6], rat(35, 1024));
    }

    #[test]
    fn confluence_surface_examples() {
        // (x, y) = (1/2, 1/2) → (s − 4)²(s − 25/4)
        let f = confluence_surface_exact(&rat(1, 2), &rat(1, 2));
        let raw = f.raw();
        assert_eq!(raw.coeff(0), rat(-100, 1));
        // double root at 4: derivative also vanishes there
        let four = BigRational::from(BigInt::from(4));
        assert!(raw.eval(&four).is_zero());
        assert!(raw.derivative().eval(&four).is_zero());

        // Vieta: product of roots equals 6400x⁴y²
        let (x, y) = (rat(3, 7), rat(2, 5));
        let f = confluence_surface_exact(&x, &y);
        let product = &x * &x * &x * &x * &y * &y * BigRational::from(BigInt::from(6400));
        assert_eq!(-f.raw().coeff(0), product);
    }

    #[test]
    fn dep_point_at_small_c() {
        // the physical DEP branch lives at c² ∈ [1, 5]
        let p = dep_solve_n6(2.0).unwrap().expect("c = 2 must yield a DEP point");
        let [fei, second, unequal] = p.invariant_residuals();
        assert_abs_diff_eq!(fei, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(second, 0.0, epsilon = 1e-9);
        assert!(unequal >= 0.0);
        assert!(p.a > 1.0 && p.a < 3.0);
        assert!(p.z > 0.0 && p.z < 1.0);

        // frozen from an independent exact solve of the quartic in a
        assert_abs_diff_eq!(p.a, 2.673_199_222_856_287, epsilon = 1e-9);
        assert_abs_diff_eq!(p.b * p.b, 6.358_157_046_853_89, epsilon = 1e-8);
        assert_abs_diff_eq!(p.z, 0.472_284_733_410_788, epsilon = 1e-8);
    }

    #[test]
    fn dep_none_outside_the_branch() {
        assert!(dep_solve_n6(0.5).unwrap().is_none());
        assert!(dep_solve_n6(5.0).unwrap().is_none());
    }

    #[test]
    fn dep_spectrum_structure() {
        let p = dep_solve_n6(1.8).unwrap().expect("on the branch");
        let rep = oracle::numeric_spectrum(&p.coupling_vector()).unwrap();
        assert_eq!(rep.degeneracy_pattern, vec![2, 2, 2]);
        // energies {−4z, −4z, 0, 0, 4z, 4z}
        let expect = [-4.0 * p.z, -4.0 * p.z, 0.0, 0.0, 4.0 * p.z, 4.0 * p.z];
        for (e, x) in rep.energies.iter().zip(expect) {
            assert_abs_diff_eq!(e.re, x, epsilon = 1e-8 * (1.0 + x.abs()));
            assert_abs_diff_eq!(e.im, 0.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn dep_r_factorization_is_exact() {
        let a = rat(27, 10);
        let c = rat(2, 1);
        let r = dep_r_vanishes_exactly(&a, &c).unwrap();
        assert!(r.is_zero(), "R = {r} should vanish exactly on the DEP curve");
    }

    #[test]
    fn boundary_radii_for_the_scalar_models() {
        let p = boundary_bisect(2, &[1.0], 1e-12).unwrap();
        assert_abs_diff_eq!(p.radius, 1.0, epsilon = 1e-10);

        let p = boundary_bisect(3, &[1.0], 1e-12).unwrap();
        assert_abs_diff_eq!(p.radius, 2.0_f64.sqrt(), epsilon = 1e-10);
        assert!(p.min_s_gap.min(p.min_s_magnitude) < 1e-4);
    }

    #[test]
    fn boundary_hits_the_eep_along_its_ray() {
        // The EEP (√3, 2) lies on this ray at radius √7. The corner is a
        // spike tip, so the f64 rounding of the ray direction costs a few
        // 1e−8 of radius; rays along exact axes (N = 2, 3) have no such loss.
        let p = boundary_bisect(4, &[3.0_f64.sqrt(), 2.0], 1e-11).unwrap();
        assert_abs_diff_eq!(p.radius, 7.0_f64.sqrt(), epsilon = 5e-7);
    }

    #[test]
    fn boundary_axis_ray_is_finite_at_n10() {
        // along e₁ the matrix decouples; the corner blocks [[∓9, g], [−g, ∓7]]
        // lose reality at |g| = 1, far inside the bounding box
        let p = boundary_bisect(10, &[1.0, 0.0, 0.0, 0.0, 0.0], 1e-11).unwrap();
        assert_abs_diff_eq!(p.radius, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn boundary_direction_validation() {
        assert!(matches!(boundary_bisect(4, &[1.0], 1e-10), Err(Error::BadDirection(_))));
        assert!(matches!(boundary_bisect(4, &[0.0, 0.0], 1e-10), Err(Error::BadDirection(_))));
    }

    #[test]
    fn n6_closed_coefficients_match_the_determinant() {
        let samples = [
            (rat(0, 1), rat(0, 1), rat(0, 1)),
            (rat(5, 1), rat(8, 1), rat(9, 1)),
            (rat(1, 2), rat(7, 3), rat(9, 4)),
            (rat(11, 7), rat(2, 9), rat(3, 5)),
        ];
        for (c2, b2, a2) in samples {
            let (p, q, r) = n6_closed_coefficients(&c2, &b2, &a2);
            let form =
                to_secular_form(&char_poly_from_squares(6, &[c2, b2, a2]).unwrap(), 6).unwrap();
            assert_eq!(form.normalized()[0], p);
            assert_eq!(form.normalized()[1], q);
            assert_eq!(form.normalized()[2], r);
        }
    }
}
