//! Exact characteristic polynomials and the reduced secular form in s = E².
//!
//! det(H⁽ᴺ⁾ − E·I) is computed by the tridiagonal three-term recurrence
//! D_k = (d_k − E)·D_{k−1} + g²·D_{k−2}; the +g² comes from the antisymmetric
//! off-diagonal pair (+g, −g). Coefficients stay exact rationals all the way,
//! so degeneracy checks (all coefficients vanishing at an extreme exceptional
//! point) are decided exactly.
//!
//! For even N the polynomial is even in E; for odd N it is E times an even
//! polynomial and the persistent level E = 0 is divided out before the
//! substitution s = E². The result is a monic degree-J polynomial in s whose
//! binomially weighted coefficients (P, Q, R, S, T) satisfy
//!
//!   s^J − C(J,1)·P·s^{J−1} + C(J,2)·Q·s^{J−2} − C(J,3)·R·s^{J−3} + …

use crate::chain::ChainMatrix;
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::ratio::{rational_to_f64, sign};
use crate::{MAX_DIM, MIN_DIM};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

/// Names of the binomially normalized coefficients, in order.
pub const COEFF_NAMES: [&str; 5] = ["P", "Q", "R", "S", "T"];

/// det(H − E·I) with exact rational coefficients, degree N in E.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    poly: RatPoly,
}

impl CharPoly {
    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("char poly is never zero")
    }

    pub fn coeffs(&self) -> &[BigRational] {
        self.poly.coeffs()
    }

    /// det H, i.e. the value at E = 0.
    pub fn determinant(&self) -> BigRational {
        self.poly.coeff(0)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Characteristic polynomial from exact coupling squares.
pub fn char_poly_from_squares(n: usize, g_sq: &[BigRational]) -> Result<CharPoly> {
    if !(MIN_DIM..=MAX_DIM).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    let expected = n / 2;
    if g_sq.len() != expected {
        return Err(Error::WrongCouplingCount { n, expected, got: g_sq.len() });
    }
    // D_k(E) over the leading principal minors of H − E·I.
    let e_neg = RatPoly::from_integers(&[0, -1]); // −E
    let mut d_prev = RatPoly::from_integers(&[1]);
    let mut d_prev2 = RatPoly::zero();
    for k in 1..=n {
        let diag_k = 2 * (k as i64) - 1 - n as i64; // −(N−1) + 2(k−1)
        let lin = e_neg.add(&RatPoly::from_integers(&[diag_k]));
        let mut d_k = lin.mul(&d_prev);
        if k >= 2 {
            let m = (k - 1).min(n - (k - 1)); // coupling index of link k−1
            d_k = d_k.add(&d_prev2.scale(&g_sq[m - 1]));
        }
        d_prev2 = d_prev;
        d_prev = d_k;
    }
    Ok(CharPoly { poly: d_prev })
}

/// Characteristic polynomial of a chain matrix; the matrix entries are
/// finite doubles, hence exact rationals, so no accuracy is lost.
pub fn char_poly(h: &ChainMatrix) -> CharPoly {
    char_poly_from_squares(h.dim(), &h.coupling_squares())
        .expect("chain matrix dimensions are validated at construction")
}

/// Monic degree-J polynomial in s = E² with its normalized coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SecularForm {
    j: usize,
    raw: RatPoly,
    normalized: Vec<BigRational>,
}

impl SecularForm {
    /// Number of s-roots (half the even dimension).
    pub fn order(&self) -> usize {
        self.j
    }

    /// Monic coefficient vector of the s-polynomial, low-to-high, length J+1.
    pub fn raw(&self) -> &RatPoly {
        &self.raw
    }

    /// The tuple (P, Q, R, S, T) truncated to length J, exact.
    pub fn normalized(&self) -> &[BigRational] {
        &self.normalized
    }

    /// Normalized coefficients rounded to f64, for the floating criteria.
    pub fn normalized_f64(&self) -> Vec<f64> {
        self.normalized.iter().map(rational_to_f64).collect()
    }

    /// Build the secular form directly from a monic s-polynomial.
    pub fn from_raw(raw: RatPoly) -> Result<SecularForm> {
        let j = raw.degree().ok_or(Error::ZeroPolynomial)?;
        if raw.leading() != Some(&BigRational::one()) {
            return Err(Error::Inconsistency("secular form must be monic".into()));
        }
        let mut normalized = Vec::with_capacity(j);
        for i in 1..=j.min(5) {
            let c = raw.coeff(j - i);
            let weight = BigRational::from(binomial(j, i));
            let signed = if i % 2 == 1 { -c } else { c };
            normalized.push(signed / weight);
        }
        Ok(SecularForm { j, raw, normalized })
    }

    /// Monic polynomial with the given s-roots, normalized.
    pub fn from_roots(roots: &[BigRational]) -> SecularForm {
        SecularForm::from_raw(RatPoly::from_roots(roots)).expect("monic by construction")
    }

    /// True when every normalized coefficient is exactly zero, i.e. the
    /// polynomial is s^J (the extreme exceptional configuration).
    pub fn is_fully_confluent(&self) -> bool {
        self.normalized.iter().all(|c| c.is_zero())
    }
}

/// Reduce a characteristic polynomial to the secular form in s = E².
///
/// Odd dimensions are divided by E first (the persistent zero level); any
/// odd-power residue signals a broken builder and is an error, not noise.
pub fn to_secular_form(p: &CharPoly, n: usize) -> Result<SecularForm> {
    if p.degree() != n {
        return Err(Error::Inconsistency(format!(
            "char poly degree {} does not match N = {n}",
            p.degree()
        )));
    }
    let mut poly = p.poly().clone();
    if n % 2 == 1 {
        poly = poly.divide_by_x().map_err(|_| {
            Error::Inconsistency("odd-N char poly must vanish at E = 0".into())
        })?;
    }
    let coeffs = poly.coeffs();
    for (k, c) in coeffs.iter().enumerate() {
        if k % 2 == 1 && !c.is_zero() {
            return Err(Error::Inconsistency(format!(
                "odd-power coefficient E^{k} = {c} survives the E → s reduction"
            )));
        }
    }
    let mut even: Vec<BigRational> = coeffs.iter().step_by(2).cloned().collect();
    let lead = even.last().cloned().unwrap_or_else(BigRational::zero);
    if lead.is_zero() {
        return Err(Error::Inconsistency("secular form lost its leading term".into()));
    }
    for c in &mut even {
        *c = &*c / &lead;
    }
    SecularForm::from_raw(RatPoly::new(even))
}

/// Status of one necessary sign condition P ≥ 0, Q ≥ 0, …
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    pub name: &'static str,
    pub value: f64,
    pub pass: bool,
}

/// Sign report for every normalized coefficient defined at this J.
/// These are necessary, never sufficient: (s²+1)(s−2) passes all three.
pub fn necessary_conditions(f: &SecularForm) -> Vec<ConditionReport> {
    f.normalized()
        .iter()
        .zip(COEFF_NAMES)
        .map(|(c, name)| ConditionReport {
            name,
            value: rational_to_f64(c),
            pass: sign(c) >= 0,
        })
        .collect()
}
