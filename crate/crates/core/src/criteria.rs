//! Closed-form membership tests for the physical domains D⁽ᴺ⁾, J = 1…5.
//!
//! Throughout, (P, Q, R, S, T) are the binomially normalized secular
//! coefficients. Reality of all s-roots is certified level by level:
//!
//! - J = 1: the single root is P itself, so P ≥ 0 decides.
//! - J = 2: P ≥ 0, P² ≥ Q ≥ 0.
//! - J = 3: coefficient signs plus the compact discriminant inequality
//!   3P²Q² + 6RPQ ≥ 4Q³ + R² + 4RP³, cross-checked on every call against
//!   the equivalent two-sided form 2(P²−Q)s₋ ≤ PQ−R ≤ 2(P²−Q)s₊ with
//!   s± = P ± √(P²−Q).
//! - J = 4: the extremes x₁ ≤ x₂ ≤ x₃ of the quartic solve
//!   x³ − 3Px² + 3Qx − R = 0; with B = P² − Q, Y_k = x_k/√B,
//!   2B^{3/2}C = PQ − R and 3B²D = PR − S the domain is the interlacing
//!   chain Y₁ ≤ Y₋ ≤ Y₂ ≤ Y₊ ≤ Y₃, Y± = C ± √(C² − D).
//! - J = 5: the four extremes come from x⁴ − 4Px³ + 6Qx² − 4Rx + S = 0,
//!   4B^{5/2}G = PS − T, and the chain interlaces the roots
//!   Y_α ≤ Y_β ≤ Y_γ of w(Y) = Y³ − 3CY² + 3DY − G between Y₁ … Y₄.
//!
//! Floating evaluation near the horizon is inherently ambiguous, so every
//! inequality carries a scale-aware tolerance band: strict verdicts are
//! only issued outside the band, and a band hit classifies as
//! `BoundaryBand`. When B ≈ 0 the rescalings above are undefined and the
//! call is delegated to the exact Sturm oracle instead.

use crate::chain::CouplingVector;
use crate::error::Result;
use crate::oracle;
use crate::secular::{char_poly_from_squares, to_secular_form, SecularForm};
use num::rational::BigRational;
use std::f64::consts::TAU;

/// Default relative width of the boundary band.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Membership of a coupling point relative to D⁽ᴺ⁾.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainState {
    /// All s-roots real, simple and strictly positive.
    Inside,
    /// At least one complex pair or a negative root.
    Outside,
    /// Within the tolerance band of the horizon; no strict call is made.
    BoundaryBand,
}

impl std::fmt::Display for DomainState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainState::Inside => write!(f, "inside"),
            DomainState::Outside => write!(f, "outside"),
            DomainState::BoundaryBand => write!(f, "boundary"),
        }
    }
}

/// Classification result: state, the binding (or failed) condition and its
/// raw signed margin. `witness` is `None` exactly for `Inside`.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub state: DomainState,
    pub witness: Option<&'static str>,
    pub margin: f64,
}

/// Derived invariants of the J ≥ 2 machinery; each entry exists only when
/// the coefficients it needs exist and B is large enough to divide by.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AuxInvariants {
    /// B = P² − Q.
    pub b: f64,
    /// q = Q/B.
    pub q: Option<f64>,
    /// C from 2B^{3/2}·C = PQ − R.
    pub c: Option<f64>,
    /// D from 3B²·D = PR − S.
    pub d: Option<f64>,
    /// G from 4B^{5/2}·G = PS − T.
    pub g: Option<f64>,
}

/// Auxiliary root data of the J ≥ 4 interlacing machinery, kept for
/// diagnostics: the extreme locations, their 1/√B rescalings, and the
/// auxiliary quadratic / cubic roots they must interlace with.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AuxRoots {
    /// Ascending real roots of the extremes-determining polynomial
    /// (the derivative cubic at J = 4, the derivative quartic at J = 5).
    pub x: Vec<f64>,
    /// The rescalings Y_k = x_k/√B.
    pub y: Vec<f64>,
    /// (Y₋, Y₊) = C ∓ √(C² − D), when real.
    pub y_pm: Option<(f64, f64)>,
    /// Ascending real roots (Y_α, Y_β, Y_γ) of w(Y) = Y³ − 3CY² + 3DY − G.
    pub y_greek: Option<[f64; 3]>,
}

/// Full outcome of a membership test.
#[derive(Debug, Clone, PartialEq)]
pub struct Assessment {
    pub verdict: Verdict,
    pub aux: Option<AuxInvariants>,
    /// Extreme-root diagnostics, populated by the J = 4, 5 machinery.
    pub roots: Option<AuxRoots>,
    /// True when B ≈ 0 forced delegation to the exact Sturm oracle.
    pub oracle_fallback: bool,
    /// True when the underived J = 4 side condition |C − √(1+Q/B)| ≤ 1 is
    /// the binding condition; surfaced so its role can be compared against
    /// the oracle empirically.
    pub side_condition_binding: bool,
}

impl Assessment {
    fn plain(verdict: Verdict, aux: Option<AuxInvariants>) -> Self {
        Assessment {
            verdict,
            aux,
            roots: None,
            oracle_fallback: false,
            side_condition_binding: false,
        }
    }
}

// ---------------------------------------------------------------------------
// closed-form real-root solvers
// ---------------------------------------------------------------------------

fn newton_polish(roots: &mut [f64], eval: impl Fn(f64) -> (f64, f64)) {
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let (f, df) = eval(*r);
            if df.abs() < 1e-8 * (1.0 + r.abs()) {
                break; // multiple root: Newton would wander
            }
            let step = f / df;
            if !step.is_finite() {
                break;
            }
            *r -= step;
        }
    }
}

/// All real roots of x³ + p2·x² + p1·x + p0, with multiplicity, ascending.
/// Three-real-root configurations go through the trigonometric form so no
/// complex intermediates appear.
pub fn solve_cubic_real(p2: f64, p1: f64, p0: f64) -> Vec<f64> {
    let shift = p2 / 3.0;
    // depressed cubic t³ + p t + q, x = t − shift
    let p = p1 - p2 * p2 / 3.0;
    let q = p0 + 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0;

    let t_scale = p.abs().sqrt().max(q.abs().cbrt());
    if t_scale == 0.0 {
        return vec![-shift; 3];
    }
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let disc_band = 1e-13 * t_scale.powi(6);

    let mut roots: Vec<f64> = if p < 0.0 && disc >= -disc_band {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (-4.0 * q / (m * m * m)).clamp(-1.0, 1.0);
        let theta = arg.acos();
        (0..3).map(|k| m * ((theta + TAU * k as f64) / 3.0).cos() - shift).collect()
    } else {
        // single real root, Cardano
        let inner = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        let u = (-q / 2.0 + inner).cbrt();
        let v = if u.abs() > 1e-300 { -p / (3.0 * u) } else { (-q / 2.0 - inner).cbrt() };
        vec![u + v - shift]
    };
    newton_polish(&mut roots, |x| {
        (((x + p2) * x + p1) * x + p0, (3.0 * x + 2.0 * p2) * x + p1)
    });
    roots.sort_by(f64::total_cmp);
    roots
}

fn quadratic_roots(b: f64, c: f64, band: f64) -> Vec<f64> {
    // roots of y² + b·y + c, multiplicity aware within the band
    let disc = b * b - 4.0 * c;
    if disc < -band {
        Vec::new()
    } else if disc <= band {
        vec![-b / 2.0; 2]
    } else {
        let sq = disc.sqrt();
        // the numerically stable companion form
        let r1 = if b >= 0.0 { (-b - sq) / 2.0 } else { (-b + sq) / 2.0 };
        let r2 = c / r1;
        vec![r1.min(r2), r1.max(r2)]
    }
}

/// All real roots of x⁴ + p3·x³ + p2·x² + p1·x + p0, with multiplicity,
/// ascending, via the resolvent-cubic factorization into two quadratics.
pub fn solve_quartic_real(p3: f64, p2: f64, p1: f64, p0: f64) -> Vec<f64> {
    let shift = p3 / 4.0;
    // depressed quartic y⁴ + p y² + q y + r, x = y − shift
    let p = p2 - 3.0 * p3 * p3 / 8.0;
    let q = p1 - p3 * p2 / 2.0 + p3 * p3 * p3 / 8.0;
    let r = p0 - p3 * p1 / 4.0 + p3 * p3 * p2 / 16.0 - 3.0 * p3.powi(4) / 256.0;

    let y_scale = p.abs().sqrt().max(q.abs().cbrt()).max(r.abs().powf(0.25));
    if y_scale == 0.0 {
        return vec![-shift; 4];
    }
    let band2 = 1e-13 * y_scale * y_scale;

    let mut roots: Vec<f64> = Vec::with_capacity(4);
    if q.abs() <= 1e-13 * y_scale.powi(3) {
        // biquadratic: z² + p z + r = 0 in z = y²
        let zdisc = p * p - 4.0 * r;
        let zs: Vec<(f64, usize)> = if zdisc < -1e-13 * y_scale.powi(4) {
            Vec::new()
        } else if zdisc <= 1e-13 * y_scale.powi(4) {
            vec![(-p / 2.0, 2)]
        } else {
            let sq = zdisc.sqrt();
            vec![((-p - sq) / 2.0, 1), ((-p + sq) / 2.0, 1)]
        };
        for (z, mult) in zs {
            if z > band2 {
                let y = z.sqrt();
                for _ in 0..mult {
                    roots.push(-y);
                    roots.push(y);
                }
            } else if z >= -band2 {
                roots.extend(std::iter::repeat_n(0.0, 2 * mult));
            }
        }
    } else {
        // resolvent cubic U³ + 2pU² + (p² − 4r)U − q² = 0; its largest root
        // is positive because the value at U = 0 is −q² < 0.
        let us = solve_cubic_real(2.0 * p, p * p - 4.0 * r, -q * q);
        let u_sq = us.last().copied().unwrap_or(0.0).max(0.0);
        let u = u_sq.sqrt();
        if u == 0.0 {
            return Vec::new(); // q ≠ 0 forbids u = 0; numeric corner, no reality
        }
        let a = (p + u_sq - q / u) / 2.0;
        let b = (p + u_sq + q / u) / 2.0;
        for y in quadratic_roots(u, a, band2) {
            roots.push(y);
        }
        for y in quadratic_roots(-u, b, band2) {
            roots.push(y);
        }
    }
    for y in roots.iter_mut() {
        *y -= shift;
    }
    newton_polish(&mut roots, |x| {
        (
            (((x + p3) * x + p2) * x + p1) * x + p0,
            ((4.0 * x + 3.0 * p3) * x + 2.0 * p2) * x + p1,
        )
    });
    roots.sort_by(f64::total_cmp);
    roots
}

// ---------------------------------------------------------------------------
// tolerance-banded condition bookkeeping
// ---------------------------------------------------------------------------

struct Conditions {
    eps: f64,
    items: Vec<(&'static str, f64, f64)>, // (name, value, scale ≥ 1)
}

impl Conditions {
    fn new(eps: f64) -> Self {
        Conditions { eps, items: Vec::new() }
    }

    fn push(&mut self, name: &'static str, value: f64, scale: f64) {
        self.items.push((name, value, scale.max(1.0)));
    }

    /// First condition failing decisively (below −ε·scale); a NaN value is
    /// treated as failed rather than silently passed.
    fn decisive_failure(&self) -> Option<(&'static str, f64)> {
        self.items
            .iter()
            .find(|(_, v, s)| v.is_nan() || *v < -self.eps * s)
            .map(|&(n, v, _)| (n, v))
    }

    /// The condition with the smallest normalized margin.
    fn binding(&self) -> Option<(&'static str, f64, f64)> {
        self.items
            .iter()
            .map(|&(n, v, s)| (n, v, v / s))
            .min_by(|a, b| a.2.total_cmp(&b.2))
    }

    fn outside(&self) -> Option<Verdict> {
        self.decisive_failure().map(|(name, value)| Verdict {
            state: DomainState::Outside,
            witness: Some(name),
            margin: value,
        })
    }

    fn finish(&self) -> Verdict {
        if let Some(v) = self.outside() {
            return v;
        }
        let (name, value, norm) = self.binding().expect("at least one condition");
        if norm <= self.eps {
            Verdict { state: DomainState::BoundaryBand, witness: Some(name), margin: value }
        } else {
            Verdict { state: DomainState::Inside, witness: None, margin: value }
        }
    }

    fn binding_is(&self, name: &'static str) -> bool {
        match self.decisive_failure() {
            Some((n, _)) => n == name,
            None => self.binding().map(|(n, _, _)| n) == Some(name),
        }
    }
}

fn coeff_scale(nf: &[f64]) -> f64 {
    nf.iter().fold(1.0_f64, |acc, c| acc.max(c.abs()))
}

/// Value and term scale of the compact J = 3 reality inequality
/// 3P²Q² + 6RPQ − 4Q³ − R² − 4RP³ ≥ 0 (equal to the cubic discriminant / 27).
fn reality_margin_j3(p: f64, q: f64, r: f64) -> (f64, f64) {
    let terms = [
        3.0 * p * p * q * q,
        6.0 * r * p * q,
        -4.0 * q * q * q,
        -r * r,
        -4.0 * r * p * p * p,
    ];
    let value = terms.iter().sum();
    let scale = terms.iter().fold(1.0_f64, |acc, t| acc.max(t.abs()));
    (value, scale)
}

// ---------------------------------------------------------------------------
// per-J membership tests
// ---------------------------------------------------------------------------

/// J = 1: the single s-root equals P.
pub fn inside_j1(f: &SecularForm, eps: f64) -> Assessment {
    assert_eq!(f.order(), 1, "inside_j1 needs a J = 1 secular form");
    let nf = f.normalized_f64();
    let mut conds = Conditions::new(eps);
    conds.push("P", nf[0], nf[0].abs());
    Assessment::plain(conds.finish(), None)
}

/// J = 2: P ≥ 0 and P² ≥ Q ≥ 0.
pub fn inside_j2(f: &SecularForm, eps: f64) -> Assessment {
    assert_eq!(f.order(), 2, "inside_j2 needs a J = 2 secular form");
    let nf = f.normalized_f64();
    let (p, q) = (nf[0], nf[1]);
    let cs = coeff_scale(&nf);
    let b = p * p - q;
    let mut conds = Conditions::new(eps);
    conds.push("P", p, cs);
    conds.push("Q", q, cs);
    conds.push("P^2>=Q", b, p.mul_add(p, q.abs()));
    let aux = AuxInvariants {
        b,
        q: (b.abs() > eps * cs).then(|| q / b),
        ..AuxInvariants::default()
    };
    Assessment::plain(conds.finish(), Some(aux))
}

/// J = 3: coefficient signs plus the compact discriminant inequality; every
/// call is cross-checked against the two-sided extremes form, and a sign
/// disagreement between the two (outside both bands) is an internal error.
pub fn inside_j3(f: &SecularForm, eps: f64) -> Result<Assessment> {
    assert_eq!(f.order(), 3, "inside_j3 needs a J = 3 secular form");
    let nf = f.normalized_f64();
    let (p, q, r) = (nf[0], nf[1], nf[2]);
    let cs = coeff_scale(&nf);

    let mut conds = Conditions::new(eps);
    conds.push("P", p, cs);
    conds.push("Q", q, cs);
    conds.push("R", r, cs);
    let (reality, reality_scale) = reality_margin_j3(p, q, r);
    conds.push("reality", reality, reality_scale);

    // two-sided form 2B·s₋ ≤ PQ − R ≤ 2B·s₊, defined for B ≥ 0
    let b = p * p - q;
    let b_scale = p.mul_add(p, q.abs()).max(1.0);
    let two_sided: i8 = if b < -eps * b_scale {
        -1
    } else {
        let root = b.max(0.0).sqrt();
        let mid = p * q - r;
        let lo = 2.0 * b * (p - root);
        let hi = 2.0 * b * (p + root);
        let m = (mid - lo).min(hi - mid);
        let m_scale = mid.abs().max(lo.abs()).max(hi.abs()).max(1.0);
        if m > eps * m_scale {
            1
        } else if m < -eps * m_scale {
            -1
        } else {
            0
        }
    };
    let compact: i8 = if reality > eps * reality_scale {
        1
    } else if reality < -eps * reality_scale {
        -1
    } else {
        0
    };
    if compact != 0 && two_sided != 0 && compact != two_sided {
        return Err(crate::error::Error::Inconsistency(format!(
            "J=3 reality forms disagree at (P, Q, R) = ({p}, {q}, {r}): \
             compact sign {compact}, two-sided sign {two_sided}"
        )));
    }

    let aux = AuxInvariants {
        b,
        q: (b.abs() > eps * cs).then(|| q / b),
        c: (b > eps * cs).then(|| (p * q - r) / (2.0 * b.powf(1.5))),
        ..AuxInvariants::default()
    };
    Ok(Assessment::plain(conds.finish(), Some(aux)))
}

struct ExtremeMachinery {
    x: Vec<f64>,
    y: Vec<f64>,
    y_minus: f64,
    y_plus: f64,
    big_c: f64,
    big_d: f64,
}

/// Interlacing machinery shared by J = 4 and the lower-order layer of J = 5.
///
/// Pushes, in order: B ≥ 0, derivative-cubic reality, non-negativity of its
/// roots, reality of Y±, the four-link chain, and the side condition
/// |C − √(1+Q/B)| ≤ 1. Returns the cubic roots rescaled by 1/√B when the
/// chain was computable.
fn push_quartic_extreme_machinery(
    conds: &mut Conditions,
    p: f64,
    q: f64,
    r: f64,
    s: f64,
    b: f64,
    names: &QuarticNames,
) -> Option<ExtremeMachinery> {
    let b_scale = p.mul_add(p, q.abs());
    conds.push(names.b_nonneg, b, b_scale);
    if b <= 0.0 {
        return None;
    }

    let (reality, reality_scale) = reality_margin_j3(p, q, r);
    conds.push(names.cubic_reality, reality, reality_scale);
    let xs = solve_cubic_real(-3.0 * p, 3.0 * q, -r);
    if xs.len() < 3 {
        return None;
    }
    let x_scale = xs.iter().fold(1.0_f64, |acc, x| acc.max(x.abs()));
    conds.push(names.x_nonneg, xs[0], x_scale);

    let sqrt_b = b.sqrt();
    let big_c = (p * q - r) / (2.0 * b * sqrt_b);
    let big_d = (p * r - s) / (3.0 * b * b);
    conds.push(names.d_nonneg, big_d, big_d.abs());
    conds.push(names.y_reality, big_c * big_c - big_d, big_c.mul_add(big_c, big_d.abs()));
    let inner = (big_c * big_c - big_d).max(0.0).sqrt();
    let (y_minus, y_plus) = (big_c - inner, big_c + inner);
    let y: Vec<f64> = xs.iter().map(|x| x / sqrt_b).collect();
    let y_scale = y
        .iter()
        .chain([y_minus, y_plus].iter())
        .fold(1.0_f64, |acc, v| acc.max(v.abs()));
    conds.push(names.chain[0], y_minus - y[0], y_scale);
    conds.push(names.chain[1], y[1] - y_minus, y_scale);
    conds.push(names.chain[2], y_plus - y[1], y_scale);
    conds.push(names.chain[3], y[2] - y_plus, y_scale);

    // side condition −1 ≤ C − √(1 + Q/B) ≤ 1, stated in the source material
    // without derivation; tracked so its binding role is observable.
    let gap = big_c - (1.0 + q / b).sqrt();
    conds.push(names.side, 1.0 - gap.abs(), gap.abs());

    Some(ExtremeMachinery { x: xs, y, y_minus, y_plus, big_c, big_d })
}

struct QuarticNames {
    b_nonneg: &'static str,
    cubic_reality: &'static str,
    x_nonneg: &'static str,
    d_nonneg: &'static str,
    y_reality: &'static str,
    chain: [&'static str; 4],
    side: &'static str,
}

const J4_NAMES: QuarticNames = QuarticNames {
    b_nonneg: "B>=0",
    cubic_reality: "derivative-cubic-reality",
    x_nonneg: "x>=0",
    d_nonneg: "D>=0",
    y_reality: "C^2>=D",
    chain: ["Y1<=Y-", "Y-<=Y2", "Y2<=Y+", "Y+<=Y3"],
    side: "side-condition",
};

const J5_AUX_NAMES: QuarticNames = QuarticNames {
    b_nonneg: "B>=0",
    cubic_reality: "aux-derivative-cubic-reality",
    x_nonneg: "aux-x>=0",
    d_nonneg: "D>=0",
    y_reality: "C^2>=D",
    chain: ["aux-Y1<=Y-", "aux-Y-<=Y2", "aux-Y2<=Y+", "aux-Y+<=Y3"],
    side: "side-condition",
};

fn fallback_to_oracle(f: &SecularForm, b: f64) -> Result<Assessment> {
    let verdict = oracle::oracle_verdict_form(f)?;
    Ok(Assessment {
        verdict,
        aux: Some(AuxInvariants { b, ..AuxInvariants::default() }),
        roots: None,
        oracle_fallback: true,
        side_condition_binding: false,
    })
}

/// J = 4: glyptic coefficient signs plus the Y-interlacing chain.
pub fn inside_j4(f: &SecularForm, eps: f64) -> Result<Assessment> {
    assert_eq!(f.order(), 4, "inside_j4 needs a J = 4 secular form");
    let nf = f.normalized_f64();
    let (p, q, r, s) = (nf[0], nf[1], nf[2], nf[3]);
    let cs = coeff_scale(&nf);

    let mut conds = Conditions::new(eps);
    for (name, value) in [("P", p), ("Q", q), ("R", r), ("S", s)] {
        conds.push(name, value, cs);
    }
    if let Some(v) = conds.outside() {
        return Ok(Assessment::plain(v, None));
    }

    let b = p * p - q;
    if b.abs() <= eps * p.mul_add(p, q.abs()).max(1.0) {
        return fallback_to_oracle(f, b);
    }

    let machinery = push_quartic_extreme_machinery(&mut conds, p, q, r, s, b, &J4_NAMES);
    let aux = AuxInvariants {
        b,
        q: Some(q / b),
        c: machinery.as_ref().map(|m| m.big_c),
        d: machinery.as_ref().map(|m| m.big_d),
        g: None,
    };
    let roots = machinery.map(|m| AuxRoots {
        x: m.x,
        y: m.y,
        y_pm: Some((m.y_minus, m.y_plus)),
        y_greek: None,
    });
    let verdict = conds.finish();
    let side_binding = conds.binding_is(J4_NAMES.side);
    Ok(Assessment {
        verdict,
        aux: Some(aux),
        roots,
        oracle_fallback: false,
        side_condition_binding: side_binding,
    })
}

/// J = 5: glyptic signs, the whole J ≤ 4 machinery on (P, Q, R, S), then the
/// seven-term chain interlacing the w-roots between the quartic extremes.
pub fn inside_j5(f: &SecularForm, eps: f64) -> Result<Assessment> {
    assert_eq!(f.order(), 5, "inside_j5 needs a J = 5 secular form");
    let nf = f.normalized_f64();
    let (p, q, r, s, t) = (nf[0], nf[1], nf[2], nf[3], nf[4]);
    let cs = coeff_scale(&nf);

    let mut conds = Conditions::new(eps);
    for (name, value) in [("P", p), ("Q", q), ("R", r), ("S", s), ("T", t)] {
        conds.push(name, value, cs);
    }
    if let Some(v) = conds.outside() {
        return Ok(Assessment::plain(v, None));
    }

    let b = p * p - q;
    if b.abs() <= eps * p.mul_add(p, q.abs()).max(1.0) {
        return fallback_to_oracle(f, b);
    }

    let machinery = push_quartic_extreme_machinery(&mut conds, p, q, r, s, b, &J5_AUX_NAMES);
    let sqrt_b = b.sqrt();
    let big_g = if b > 0.0 { Some((p * s - t) / (4.0 * b * b * sqrt_b)) } else { None };
    let aux = AuxInvariants {
        b,
        q: Some(q / b),
        c: machinery.as_ref().map(|m| m.big_c),
        d: machinery.as_ref().map(|m| m.big_d),
        g: big_g,
    };

    let mut roots = None;
    if let (Some(m), Some(big_g)) = (&machinery, big_g) {
        if conds.outside().is_none() {
            // extremes of the degree-5 curve: roots of x⁴−4Px³+6Qx²−4Rx+S
            let xs = solve_quartic_real(-4.0 * p, 6.0 * q, -4.0 * r, s);
            let (w_reality, w_scale) = reality_margin_j3(m.big_c, m.big_d, big_g);
            conds.push("w-cubic-reality", w_reality, w_scale);
            let ws = solve_cubic_real(-3.0 * m.big_c, 3.0 * m.big_d, -big_g);
            if xs.len() == 4 && ws.len() == 3 {
                let y: Vec<f64> = xs.iter().map(|x| x / sqrt_b).collect();
                let y_scale = y
                    .iter()
                    .chain(ws.iter())
                    .fold(1.0_f64, |acc, v| acc.max(v.abs()));
                let links = [
                    ("Y1<=Ya", ws[0] - y[0]),
                    ("Ya<=Y2", y[1] - ws[0]),
                    ("Y2<=Yb", ws[1] - y[1]),
                    ("Yb<=Y3", y[2] - ws[1]),
                    ("Y3<=Yc", ws[2] - y[2]),
                    ("Yc<=Y4", y[3] - ws[2]),
                ];
                for (name, value) in links {
                    conds.push(name, value, y_scale);
                }
                roots = Some(AuxRoots {
                    x: xs,
                    y,
                    y_pm: Some((m.y_minus, m.y_plus)),
                    y_greek: Some([ws[0], ws[1], ws[2]]),
                });
            }
            // fewer real roots than the chain needs: the reality margins
            // already recorded decide, and they sit in the band when the
            // solvers lose a root pair to a borderline degeneracy.
        }
    }

    let verdict = conds.finish();
    let side_binding = conds.binding_is(J5_AUX_NAMES.side);
    Ok(Assessment {
        verdict,
        aux: Some(aux),
        roots,
        oracle_fallback: false,
        side_condition_binding: side_binding,
    })
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

/// Route a secular form to the closed-form test for its J.
pub fn assess(f: &SecularForm, eps: f64) -> Result<Assessment> {
    match f.order() {
        1 => Ok(inside_j1(f, eps)),
        2 => Ok(inside_j2(f, eps)),
        3 => inside_j3(f, eps),
        4 => inside_j4(f, eps),
        5 => inside_j5(f, eps),
        j => Err(crate::error::Error::UnsupportedDimension(2 * j)),
    }
}

/// Classify a coupling point: builds the chain, reduces to the secular form
/// (exactly) and routes to the closed-form test for its J.
pub fn dispatch(c: &CouplingVector, eps: f64) -> Result<Assessment> {
    dispatch_squares(c.dim(), &c.coupling_squares(), eps)
}

/// Same as [`dispatch`] but from exact coupling squares, preserving
/// exactness end to end (the floating criteria then act on the correctly
/// rounded coefficient images).
pub fn dispatch_squares(n: usize, g_sq: &[BigRational], eps: f64) -> Result<Assessment> {
    let p = char_poly_from_squares(n, g_sq)?;
    let f = to_secular_form(&p, n)?;
    assess(&f, eps)
}
