//! Dense univariate polynomials over exact rationals.
//!
//! Degrees here never exceed 11, so the representation is a plain
//! low-to-high coefficient vector and the algorithms are the classical
//! ones; there is no sparsity or asymptotics to chase. The one deliberate
//! refinement is sign-preserving primitive normalization of remainder
//! chains, which keeps Sturm sequences in small integers.

use crate::error::{Error, Result};
use crate::ratio;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Polynomial with exact rational coefficients, stored low-to-high.
/// The zero polynomial is the empty vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_integers(ints: &[i64]) -> Self {
        Self::new(ints.iter().map(|&i| BigRational::from(BigInt::from(i))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + ratio::rational_to_f64(c);
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(ratio::rational_to_f64).collect()
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
            .collect();
        RatPoly::new(coeffs)
    }

    /// Exact quotient by x. Fails if the constant term is nonzero.
    pub fn divide_by_x(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Ok(RatPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Inconsistency(
                "polynomial not divisible by its variable".into(),
            ));
        }
        Ok(RatPoly::new(self.coeffs[1..].to_vec()))
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        RatPoly::new(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        RatPoly::new(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    pub fn scale(&self, factor: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Monic linear factor product Π (x − rₖ).
    pub fn from_roots(roots: &[BigRational]) -> RatPoly {
        let mut p = RatPoly::new(vec![BigRational::one()]);
        for r in roots {
            let lin = RatPoly::new(vec![-r.clone(), BigRational::one()]);
            p = p.mul(&lin);
        }
        p
    }

    /// Long division; returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        if self.degree().is_none_or(|d| d < dd) {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let lead = divisor.leading().unwrap().clone();
        let qlen = rem.len() - dd;
        let mut quo = vec![BigRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let val = dc * &c;
                rem[k + j] -= val;
            }
            quo[k] = c;
        }
        (RatPoly::new(quo), RatPoly::new(rem))
    }

    /// Primitive integer image with the same sign: multiply by the positive
    /// lcm of denominators, divide by the positive gcd of numerators.
    pub fn primitive(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = num::integer::gcd(gcd, v.abs());
        }
        RatPoly::new(
            ints.into_iter()
                .map(|v| BigRational::from(v / &gcd))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean remainder chain with primitive
    /// renormalization at each step.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// Squarefree part self / gcd(self, self′), normalized monic.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        let lead = q.leading().unwrap().clone();
        q.scale(&lead.recip())
    }

    /// Sign of the value at 0.
    pub fn sign_at_zero(&self) -> i8 {
        self.coeffs.first().map_or(0, ratio::sign)
    }

    /// Sign of the limit at +∞.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, ratio::sign)
    }

    /// Sign of the limit at −∞.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = ratio::sign(self.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "{a}*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}
