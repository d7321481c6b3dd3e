//! Exact-rational helpers shared by the polynomial and oracle layers.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive, Zero};

/// Exact rational image of a finite `f64`. Every finite double is a dyadic
/// rational, so this conversion is lossless.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input required")
}

/// Round a rational to the nearest `f64`, safely for operands whose numerator
/// or denominator individually overflow `f64` range. `BigRational::to_f64`
/// divides numerator and denominator separately and returns NaN once either
/// exceeds ~1e308; dyadic denominators from chained f64 inputs get there fast.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    if numer.is_zero() {
        return 0.0;
    }
    let nb = numer.bits() as i64;
    let db = denom.bits() as i64;
    // Keep ~96 significant bits on each side; the quotient keeps full f64 precision.
    let shift = (nb.max(db) - 96).max(0) as u64;
    let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
    if d == 0.0 {
        // The denominator vanished under the shift: |r| is astronomically large.
        return if numer.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    n / d
}

/// Sign of a rational as -1 / 0 / +1.
pub fn sign(r: &BigRational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Parse an exact rational from `p/q`, integer, or decimal notation
/// (e.g. `8`, `5/3`, `-1.2`). Decimals are read exactly: `1.2` = 6/5.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        if frac_part.is_empty() {
            return Some(BigRational::from(i));
        }
        let f: BigInt = frac_part.parse().ok()?;
        if f.is_negative() {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigRational::new(f, scale);
        let whole = BigRational::from(i);
        return Some(if negative { whole - frac } else { whole + frac });
    }
    let n: BigInt = t.parse().ok()?;
    Some(BigRational::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn f64_round_trip_is_exact() {
        for &x in &[0.5, -1.25, 3.0, 0.1, 1e-9, 12345.6789] {
            let r = rational_from_f64(x);
            assert_eq!(rational_to_f64(&r), x);
        }
    }

    #[test]
    fn to_f64_survives_huge_operands() {
        // numerator and denominator each overflow f64, ratio is 2.
        let big = BigInt::from(2u32).pow(4096);
        let r = BigRational::new(&big * 2, big);
        assert_eq!(rational_to_f64(&r), 2.0);
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("8").unwrap(), BigRational::from(BigInt::from(8)));
        assert_eq!(
            parse_rational("5/3").unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(3))
        );
        assert_eq!(
            parse_rational("-1.2").unwrap(),
            BigRational::new(BigInt::from(-6), BigInt::from(5))
        );
        assert_eq!(parse_rational("0.5").unwrap(), BigRational::new(BigInt::one(), BigInt::from(2)));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("abc").is_none());
    }
}
