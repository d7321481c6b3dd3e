//! Acceptance suite. Each test prints exactly one PASS/FAIL line; every
//! tolerance is pinned here, in code. Run with
//! `cargo test -p ptchain --test acceptance -- --nocapture` to see the lines.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

use ptchain::geometry::{dep_r_vanishes_exactly, n6_closed_coefficients, reparam_upper_series};
use ptchain::oracle::oracle_verdict_form;
use ptchain::ratio::rational_from_f64;
use ptchain::{
    assess, boundary_bisect, char_poly_from_squares, dep_solve_n6, eep_point, numeric_spectrum,
    to_secular_form, DomainState, RatPoly, DEFAULT_EPSILON,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn report(num: u32, desc: &str, elapsed: Duration, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("PASS criterion {num}: {desc} ({elapsed:.2?})"),
        Err(e) => println!("FAIL criterion {num}: {desc} ({elapsed:.2?}): {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {num} failed: {e}");
    }
}

fn budget(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("runtime {elapsed:.2?} exceeds the {limit:.0?} budget"))
    }
}

#[test]
fn criterion_1_endpoint_reproduction() {
    let start = Instant::now();
    let result = (|| {
        let p2 = boundary_bisect(2, &[1.0], 1e-12).map_err(|e| e.to_string())?;
        if (p2.radius - 1.0).abs() > 1e-10 {
            return Err(format!("N=2 endpoint {} is not 1 within 1e-10", p2.radius));
        }
        let p3 = boundary_bisect(3, &[1.0], 1e-12).map_err(|e| e.to_string())?;
        if (p3.radius - 2.0_f64.sqrt()).abs() > 1e-10 {
            return Err(format!("N=3 endpoint {} is not sqrt(2) within 1e-10", p3.radius));
        }
        budget(start.elapsed(), Duration::from_secs(1))
    })();
    report(1, "boundary endpoints |g|=1 at N=2 and |g|=sqrt(2) at N=3", start.elapsed(), result);
}

#[test]
fn criterion_2_eep_exact_vanishing() {
    let start = Instant::now();
    let result = (|| {
        for n in 2..=11 {
            let point = eep_point(n).map_err(|e| e.to_string())?;
            let squares = point.coupling_squares_exact();
            let form = to_secular_form(
                &char_poly_from_squares(n, &squares).map_err(|e| e.to_string())?,
                n,
            )
            .map_err(|e| e.to_string())?;
            if !form.is_fully_confluent() {
                return Err(format!("N={n}: secular form is not s^J at the EEP"));
            }
            let j = n / 2;
            let mut s_to_j = vec![BigRational::zero(); j + 1];
            s_to_j[j] = BigRational::one();
            if form.raw().coeffs() != &s_to_j[..] {
                return Err(format!("N={n}: raw polynomial differs from s^{j}"));
            }
        }
        budget(start.elapsed(), Duration::from_secs(1))
    })();
    report(2, "secular form collapses to s^J exactly at g_k^2=(N-k)k, N=2..11", start.elapsed(), result);
}

#[test]
fn criterion_3_n6_coefficient_formulas() {
    let start = Instant::now();
    let result = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        for i in 0..1000 {
            let c2 = rat(rng.random_range(0..6000), 1000);
            let b2 = rat(rng.random_range(0..9600), 1000);
            let a2 = rat(rng.random_range(0..10800), 1000);
            let (p, q, r) = n6_closed_coefficients(&c2, &b2, &a2);
            let form = to_secular_form(
                &char_poly_from_squares(6, &[c2.clone(), b2.clone(), a2.clone()])
                    .map_err(|e| e.to_string())?,
                6,
            )
            .map_err(|e| e.to_string())?;
            let nf = form.normalized();
            if nf[0] != p || nf[1] != q || nf[2] != r {
                return Err(format!(
                    "sample {i}: determinant route and closed forms disagree at \
                     (c2, b2, a2) = ({c2}, {b2}, {a2})"
                ));
            }
        }
        budget(start.elapsed(), Duration::from_secs(5))
    })();
    report(3, "N=6 determinant-derived P, 3Q, -R match the closed expressions on 1000 rational samples", start.elapsed(), result);
}

#[test]
fn criterion_4_criteria_oracle_equivalence() {
    let start = Instant::now();
    let result = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(4096);
        let mut disagreements = Vec::new();
        let mut banded = 0u64;
        for n in 2..=11usize {
            let j = n / 2;
            for _ in 0..10_000 {
                let g_sq: Vec<BigRational> = (1..=j)
                    .map(|k| rat(rng.random_range(0..=(1200 * ((n - k) * k) as i64)), 1000))
                    .collect();
                let form = to_secular_form(
                    &char_poly_from_squares(n, &g_sq).map_err(|e| e.to_string())?,
                    n,
                )
                .map_err(|e| e.to_string())?;
                let ours = assess(&form, DEFAULT_EPSILON).map_err(|e| e.to_string())?;
                let exact = oracle_verdict_form(&form).map_err(|e| e.to_string())?;
                if ours.verdict.state == DomainState::BoundaryBand
                    || exact.state == DomainState::BoundaryBand
                {
                    banded += 1;
                    continue;
                }
                if ours.verdict.state != exact.state {
                    disagreements.push(format!(
                        "N={n} g²={g_sq:?}: criteria {:?} vs oracle {:?}",
                        ours.verdict, exact.state
                    ));
                }
            }
        }
        if !disagreements.is_empty() {
            return Err(format!(
                "{} disagreements outside the band, first: {}",
                disagreements.len(),
                disagreements[0]
            ));
        }
        println!("  (criterion 4: {banded} of 100000 points fell in the epsilon band)");
        budget(start.elapsed(), Duration::from_secs(120))
    })();
    report(4, "closed-form criteria agree with the exact Sturm oracle on 10^4 points per N", start.elapsed(), result);
}

#[test]
fn criterion_5_j3_dual_form_identity() {
    let start = Instant::now();
    let result = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let p = rat(rng.random_range(-400..400), 20);
            let q = rat(rng.random_range(-400..400), 12);
            let r = rat(rng.random_range(-400..400), 28);
            let lhs = rat(3, 1) * &p * &p * &q * &q + rat(6, 1) * &r * &p * &q
                - rat(4, 1) * &q * &q * &q
                - &r * &r
                - rat(4, 1) * &r * &p * &p * &p;
            let b = &p * &p - &q;
            let inner = &r - rat(3, 1) * &p * &q + rat(2, 1) * &p * &p * &p;
            let rhs = rat(4, 1) * &b * &b * &b - &inner * &inner;
            if lhs != rhs {
                return Err(format!("identity broken at (P, Q, R) = ({p}, {q}, {r})"));
            }
        }
        Ok(())
    })();
    report(5, "3P²Q²+6RPQ-4Q³-R²-4RP³ equals 4(P²-Q)³-(R-3PQ+2P³)² on 100 rational triples", start.elapsed(), result);
}

#[test]
fn criterion_6_series_coefficients() {
    let start = Instant::now();
    let result = (|| {
        let coeffs = reparam_upper_series(6);
        let expect = [
            (2usize, rat(3, 8)),
            (3, rat(-1, 8)),
            (4, rat(9, 128)),
            (5, rat(-3, 64)),
            (6, rat(35, 1024)),
        ];
        if !coeffs[0].is_zero() || !coeffs[1].is_zero() {
            return Err("orders 0 and 1 must vanish".into());
        }
        for (k, want) in expect {
            if coeffs[k] != want {
                return Err(format!("order {k}: got {}, want {want}", coeffs[k]));
            }
        }
        Ok(())
    })();
    report(6, "Taylor coefficients 3/8, -1/8, 9/128, -3/64, 35/1024 of 1+(q/2-1)sqrt(1+q)", start.elapsed(), result);
}

#[test]
fn criterion_7_dep_construction() {
    let start = Instant::now();
    let result = (|| {
        // sweep the DEP parameter over c² ∈ [4, 8] (the curve lives at
        // c² ≤ 5; in plain c the same interval is empty, see the docs)
        let mut valid = 0;
        for i in 0..50 {
            let c2 = 4.0 + 4.0 * i as f64 / 49.0;
            let c = c2.sqrt();
            let Some(point) = dep_solve_n6(c).map_err(|e| e.to_string())? else {
                continue;
            };
            valid += 1;
            let rep = numeric_spectrum(&point.coupling_vector()).map_err(|e| e.to_string())?;
            if rep.degeneracy_pattern != vec![2, 2, 2] {
                return Err(format!("c²={c2}: degeneracy pattern {:?}", rep.degeneracy_pattern));
            }
            let z = point.z;
            let expect = [-4.0 * z, -4.0 * z, 0.0, 0.0, 4.0 * z, 4.0 * z];
            for (e, x) in rep.energies.iter().zip(expect) {
                let tol = 1e-8 * (1.0 + x.abs());
                if (e.re - x).abs() > tol || e.im.abs() > tol {
                    return Err(format!("c²={c2}: energy {e} differs from {x}"));
                }
            }
            // R = 0 exactly via the verified factorization of −R, at the
            // rationalized solution point
            let a = rational_from_f64(point.a);
            let c_exact = rational_from_f64(point.c);
            let r = dep_r_vanishes_exactly(&a, &c_exact).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("c²={c2}: R = {r} does not vanish exactly"));
            }
        }
        if valid == 0 {
            return Err("no valid DEP point in the sweep".into());
        }
        println!("  (criterion 7: {valid} of 50 sweep points carry a valid DEP)");
        budget(start.elapsed(), Duration::from_secs(5))
    })();
    report(7, "DEP sweep yields valid points with {2,2,2} degeneracy and exactly vanishing R", start.elapsed(), result);
}

#[test]
fn criterion_8_confluence_factorization() {
    let start = Instant::now();
    let result = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(88);
        for _ in 0..100 {
            let x = rat(rng.random_range(1..1000), 1000);
            let y = rat(rng.random_range(1..1000), 1000);
            // the constructor asserts factorization; re-derive both sides
            // here so this criterion does not lean on the library's check
            let f = ptchain::geometry::confluence_surface_exact(&x, &y);
            let u = rat(16, 1) * &x * &x;
            let v = rat(25, 1) * &y * &y;
            let expect = RatPoly::from_roots(&[u.clone(), u, v]);
            if f.raw() != &expect {
                return Err(format!("factorization mismatch at (x, y) = ({x}, {y})"));
            }
        }
        Ok(())
    })();
    report(8, "confluence cubic equals (s-16x²)²(s-25y²) exactly on 100 rational points", start.elapsed(), result);
}

#[test]
fn criterion_9_structural_invariants() {
    let start = Instant::now();
    let result = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(909);
        for _ in 0..1000 {
            let n = rng.random_range(2usize..=11);
            let j = n / 2;
            let g: Vec<f64> = (0..j).map(|_| rng.random_range(-4.0..4.0)).collect();
            let c = ptchain::CouplingVector::new(n, g).unwrap();

            // negation symmetry of the computed spectrum
            let rep = numeric_spectrum(&c).map_err(|e| e.to_string())?;
            let scale = rep.energies.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
            let mut remaining = rep.energies.clone();
            for e in &rep.energies {
                let neg = -e;
                let Some((idx, dist)) = remaining
                    .iter()
                    .enumerate()
                    .map(|(i, y)| (i, (neg - y).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                else {
                    return Err("empty spectrum".into());
                };
                if dist > 1e-10 * scale {
                    return Err(format!("N={n}: spectrum not negation-symmetric ({dist:.2e})"));
                }
                remaining.swap_remove(idx);
            }

            // det H = 0 exactly for odd N
            let p = ptchain::char_poly(&ptchain::build_chain(&c));
            if n % 2 == 1 && !p.determinant().is_zero() {
                return Err(format!("N={n}: det H must vanish exactly"));
            }

            // sign-flip invariance of all secular coefficients
            let f = to_secular_form(&p, n).map_err(|e| e.to_string())?;
            let k = rng.random_range(0..j);
            let flipped = c.sign_flipped(k);
            let g =
                to_secular_form(&ptchain::char_poly(&ptchain::build_chain(&flipped)), n)
                    .map_err(|e| e.to_string())?;
            if f != g {
                return Err(format!("N={n}: sign flip changed the secular form"));
            }
        }
        budget(start.elapsed(), Duration::from_secs(10))
    })();
    report(9, "negation symmetry, exact det H = 0 at odd N, sign-flip invariance on 10^3 instances", start.elapsed(), result);
}

/// The two reference endpoints the whole suite leans on, asserted once more
/// against the closed-form membership verdicts (not the oracle): a coherence
/// check between the suite's two independent routes.
#[test]
fn endpoints_cohere_across_routes() {
    for (n, a, expect) in [
        (2usize, 0.5, DomainState::Inside),
        (2, 1.5, DomainState::Outside),
        (3, 1.0, DomainState::Inside),
        (3, 2.0, DomainState::Outside),
    ] {
        let c = ptchain::CouplingVector::new(n, vec![a]).unwrap();
        let ours = ptchain::dispatch(&c, DEFAULT_EPSILON).unwrap();
        let exact = ptchain::oracle_verdict(&c).unwrap();
        assert_eq!(ours.verdict.state, expect);
        assert_eq!(exact.state, expect);
    }
}

/// Guard for b²: f64 coupling squares round; make sure the exact pipeline
/// sees a SecularForm whose zero coefficients are exactly zero only when the
/// squares are exact. (Dyadic rounding must not fake an EEP.)
#[test]
fn rounding_does_not_fake_confluence() {
    let g: Vec<f64> = [5.0_f64, 8.0, 9.0].iter().map(|v| v.sqrt()).collect();
    let c = ptchain::CouplingVector::new(6, g).unwrap();
    let f = to_secular_form(&ptchain::char_poly(&ptchain::build_chain(&c)), 6).unwrap();
    // (√5)² ≠ 5 exactly in binary, so full confluence must NOT be detected
    assert!(!f.is_fully_confluent());

    let exact: Vec<BigRational> = [5i64, 8, 9].iter().map(|&v| rat(v, 1)).collect();
    let f = to_secular_form(&char_poly_from_squares(6, &exact).unwrap(), 6).unwrap();
    assert!(f.is_fully_confluent());
}
