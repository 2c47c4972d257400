//! Registry of sharp inequalities between `s`, `j*`, `p` and `th(ρ/2)`,
//! with witness pairs for the extremal constants and a seeded sampler that
//! certifies each bound.
//!
//! Every record bounds the quotient `lhs / rhs` from both sides by constants
//! that depend on the sector angle `θ`. Strip records are reported at
//! `θ = 0`.

mod simplex;
mod witness;

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::fmt;
use std::sync::LazyLock;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use witness::{Approach, Construction, Side, WitnessFamily, MAX_LIMIT_STEP, TRIPLE_STEP};

use crate::error::{Error, Result};
use crate::geometry::{principal_arg, Domain};
use crate::metrics::{point_pair, MetricKind};
use crate::sampling;

use simplex::Point;

/// Iteration cap for each simplex refinement.
pub const REFINE_ITERATIONS: usize = 500;

/// Number of best samples each refinement restarts from, per side.
pub const REFINE_RESTARTS: usize = 5;

/// Which domains a record speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Every proper subdomain; sampled on sectors by default.
    AnyDomain,
    /// Convex domains: sectors with `θ ≤ π`, strips, the half-plane.
    Convex,
    /// Sectors with `θ` in the record's range, and the half-plane when
    /// `π` is in range.
    Sector,
    /// The strip of height `π`.
    Strip,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThetaRange {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl ThetaRange {
    const fn new(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Self {
        ThetaRange { lo, hi, lo_closed, hi_closed }
    }

    const FULL: ThetaRange = ThetaRange::new(0.0, 2.0 * PI, false, false);
    const CONVEX: ThetaRange = ThetaRange::new(0.0, PI, false, true);
    const ACUTE: ThetaRange = ThetaRange::new(0.0, PI, false, false);
    const REFLEX: ThetaRange = ThetaRange::new(PI, 2.0 * PI, false, false);
    const STRAIGHT: ThetaRange = ThetaRange::new(PI, PI, true, true);
    const STRIP: ThetaRange = ThetaRange::new(0.0, 0.0, true, true);

    pub fn contains(&self, theta: f64) -> bool {
        let above = if self.lo_closed { theta >= self.lo } else { theta > self.lo };
        let below = if self.hi_closed { theta <= self.hi } else { theta < self.hi };
        above && below
    }
}

impl fmt::Display for ThetaRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lo, self.hi)
    }
}

/// `lower(θ) ≤ lhs / rhs ≤ upper(θ)`.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityRecord {
    pub id: &'static str,
    pub scope: Scope,
    pub lhs: MetricKind,
    pub rhs: MetricKind,
    pub theta_range: ThetaRange,
    #[serde(skip)]
    lower: fn(f64) -> f64,
    #[serde(skip)]
    upper: fn(f64) -> f64,
    pub witnesses: Vec<WitnessFamily>,
}

impl InequalityRecord {
    pub fn lower_const(&self, theta: f64) -> f64 {
        (self.lower)(theta)
    }

    pub fn upper_const(&self, theta: f64) -> f64 {
        (self.upper)(theta)
    }

    fn invalid_theta(&self, theta: f64) -> Error {
        Error::InvalidTheta {
            record: self.id.to_string(),
            theta,
            range: self.theta_range.to_string(),
        }
    }

    pub fn require_theta(&self, theta: f64) -> Result<()> {
        if self.theta_range.contains(theta) {
            Ok(())
        } else {
            Err(self.invalid_theta(theta))
        }
    }

    /// The domain sampled for `θ`: a sector, or the strip for strip records.
    pub fn domain_at(&self, theta: f64) -> Result<Domain> {
        self.require_theta(theta)?;
        match self.scope {
            Scope::Strip => Ok(Domain::STANDARD_STRIP),
            _ => Domain::sector(theta),
        }
    }

    /// Angle at which the constants are read for `domain`, if the record
    /// applies to it. Strip and other fixed domains read at `0`.
    pub fn theta_for(&self, domain: &Domain) -> Result<f64> {
        let unsupported = || Error::UnsupportedDomain { what: "this inequality", domain: *domain };
        match (self.scope, *domain) {
            (Scope::Strip, Domain::Strip { height }) if (height - PI).abs() <= 1e-12 => Ok(0.0),
            (Scope::Strip, _) => Err(unsupported()),
            (Scope::AnyDomain, Domain::Sector { angle }) => self.require_theta(angle).map(|_| angle),
            (Scope::AnyDomain, _) => Ok(0.0),
            (Scope::Convex, Domain::Sector { angle }) => self.require_theta(angle).map(|_| angle),
            (Scope::Convex, Domain::Strip { .. }) => Ok(0.0),
            (Scope::Convex, Domain::HalfPlane) => Ok(PI),
            (Scope::Convex, _) => Err(unsupported()),
            (Scope::Sector, Domain::Sector { angle }) => self.require_theta(angle).map(|_| angle),
            (Scope::Sector, Domain::HalfPlane) if self.theta_range.contains(PI) => Ok(PI),
            (Scope::Sector, _) => Err(unsupported()),
        }
    }

    pub fn quotient(&self, domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
        Ok(self.lhs.evaluate(domain, x, y)? / self.rhs.evaluate(domain, x, y)?)
    }

    /// The witness used for `side` at `θ`, if any.
    pub fn witness(&self, theta: f64, side: Side) -> Option<&WitnessFamily> {
        self.witnesses.iter().find(|w| w.side == side && w.applies_to(theta))
    }
}

fn one(_: f64) -> f64 {
    1.0
}

fn sqrt2(_: f64) -> f64 {
    SQRT_2
}

fn two(_: f64) -> f64 {
    2.0
}

fn inv_sqrt2(_: f64) -> f64 {
    FRAC_1_SQRT_2
}

fn half_pi(_: f64) -> f64 {
    PI / 2.0
}

fn two_sin_quarter(t: f64) -> f64 {
    2.0 * (t / 4.0).sin()
}

fn sqrt2_sin_quarter(t: f64) -> f64 {
    SQRT_2 * (t / 4.0).sin()
}

fn inv_sqrt2_cos_quarter(t: f64) -> f64 {
    1.0 / (SQRT_2 * (t / 4.0).cos())
}

/// `(π/θ)·sin(θ/2)`.
fn sine_ratio(t: f64) -> f64 {
    (PI / t) * (t / 2.0).sin()
}

fn pi_over(t: f64) -> f64 {
    PI / t
}

fn by_theta(t: f64, acute: f64, straight: f64, reflex: f64) -> f64 {
    if t < PI {
        acute
    } else if t == PI {
        straight
    } else {
        reflex
    }
}

use witness::Approach::{Attained, KToOne, KToZero};
use witness::Construction as C;
use witness::Side::{Lower, Upper};

fn w(id: &'static str, side: Side, c: Construction, a: Approach) -> WitnessFamily {
    WitnessFamily::new(id, side, c, a)
}

fn record(
    id: &'static str,
    scope: Scope,
    lhs: MetricKind,
    rhs: MetricKind,
    theta_range: ThetaRange,
    lower: fn(f64) -> f64,
    upper: fn(f64) -> f64,
    witnesses: Vec<WitnessFamily>,
) -> InequalityRecord {
    InequalityRecord { id, scope, lhs, rhs, theta_range, lower, upper, witnesses }
}

static CATALOG: LazyLock<Vec<InequalityRecord>> = LazyLock::new(build_catalog);

fn build_catalog() -> Vec<InequalityRecord> {
    use MetricKind::{JStar as J, PointPair as P, TanhHalfRho as TH, TriangularRatio as S};
    let triple_lo = w("equality-triple", Lower, C::EqualityTriple, Attained);
    let triple_up = w("equality-triple", Upper, C::EqualityTriple, Attained);
    let offset_up = w("parallel-offset", Upper, C::ParallelOffset, Attained);
    let quarter_lo = w("quarter-pair", Lower, C::QuarterPair, Attained);
    let quarter_up = w("quarter-pair", Upper, C::QuarterPair, Attained);
    let punctured_up = w("punctured-opposite", Upper, C::PuncturedOpposite, Attained);
    let unit_strip_lo = w("unit-strip-quarter", Lower, C::StripUnitQuarter, Attained);
    let acute = (0.0, PI, false);
    let reflex = (PI, 2.0 * PI, true);
    let on = |f: WitnessFamily, (lo, hi, open): (f64, f64, bool)| f.on(lo, hi, open);

    vec![
        record("R1", Scope::AnyDomain, P, J, ThetaRange::FULL, one, sqrt2, vec![triple_lo, offset_up]),
        record("R2", Scope::AnyDomain, S, J, ThetaRange::FULL, one, two, vec![triple_lo, punctured_up]),
        record("R3", Scope::Convex, S, J, ThetaRange::CONVEX, one, sqrt2, vec![triple_lo, offset_up]),
        record("R4", Scope::Sector, S, J, ThetaRange::REFLEX, one, two_sin_quarter, vec![triple_lo, quarter_up]),
        record(
            "R5",
            Scope::AnyDomain,
            S,
            P,
            ThetaRange::FULL,
            inv_sqrt2,
            sqrt2,
            vec![unit_strip_lo, punctured_up],
        ),
        record("R6", Scope::Convex, S, P, ThetaRange::CONVEX, inv_sqrt2, one, vec![unit_strip_lo, triple_up]),
        record(
            "R7",
            Scope::Sector,
            S,
            P,
            ThetaRange::ACUTE,
            inv_sqrt2_cos_quarter,
            one,
            vec![quarter_lo, triple_up],
        ),
        record(
            "R8",
            Scope::Sector,
            S,
            P,
            ThetaRange::new(PI, 2.0 * PI, true, false),
            one,
            sqrt2_sin_quarter,
            vec![triple_lo, quarter_up],
        ),
        record("R9", Scope::Sector, S, P, ThetaRange::REFLEX, one, sqrt2_sin_quarter, vec![triple_lo, quarter_up]),
        record("R10", Scope::Sector, P, J, ThetaRange::FULL, one, sqrt2, vec![triple_lo, offset_up]),
        record(
            "R10b",
            Scope::Sector,
            S,
            J,
            ThetaRange::FULL,
            one,
            |t| if t <= PI { SQRT_2 } else { two_sin_quarter(t) },
            vec![triple_lo, on(offset_up, acute), on(quarter_up, reflex)],
        ),
        record(
            "R10c",
            Scope::Sector,
            S,
            P,
            ThetaRange::FULL,
            |t| if t <= PI { inv_sqrt2_cos_quarter(t) } else { 1.0 },
            |t| if t <= PI { 1.0 } else { sqrt2_sin_quarter(t) },
            vec![
                on(quarter_lo, acute),
                on(triple_lo, reflex),
                on(triple_up, acute),
                on(quarter_up, reflex),
            ],
        ),
        record(
            "R11",
            Scope::Strip,
            P,
            J,
            ThetaRange::STRIP,
            one,
            sqrt2,
            vec![triple_lo, w("strip-horizontal", Upper, C::StripHorizontal, Attained)],
        ),
        record(
            "R11b",
            Scope::Strip,
            S,
            J,
            ThetaRange::STRIP,
            one,
            sqrt2,
            vec![
                w("strip-quarter", Lower, C::StripQuarter, Attained),
                w("strip-horizontal", Upper, C::StripHorizontal, Attained),
            ],
        ),
        record(
            "R11c",
            Scope::Strip,
            S,
            P,
            ThetaRange::STRIP,
            inv_sqrt2,
            one,
            vec![
                w("strip-quarter", Lower, C::StripQuarter, Attained),
                w("strip-horizontal", Upper, C::StripHorizontal, Attained),
            ],
        ),
        record(
            "R12",
            Scope::Sector,
            TH,
            S,
            ThetaRange::ACUTE,
            one,
            sine_ratio,
            vec![
                w("symmetric-k-to-one", Lower, C::SymmetricNormal, KToOne),
                w("symmetric-k-to-zero", Upper, C::SymmetricNormal, KToZero),
            ],
        ),
        record(
            "R13",
            Scope::Sector,
            TH,
            S,
            ThetaRange::REFLEX,
            pi_over,
            one,
            vec![
                w("symmetric-k-to-zero", Lower, C::SymmetricNormal, KToZero),
                w("symmetric-k-to-one", Upper, C::SymmetricNormal, KToOne),
            ],
        ),
        record("R14", Scope::Sector, TH, S, ThetaRange::STRAIGHT, one, one, vec![quarter_lo, quarter_up]),
        record(
            "R15",
            Scope::Sector,
            TH,
            J,
            ThetaRange::FULL,
            |t| by_theta(t, 1.0, 1.0, pi_over(t)),
            |t| by_theta(t, SQRT_2 * sine_ratio(t), SQRT_2, two_sin_quarter(t)),
            vec![],
        ),
        record(
            "R16",
            Scope::Sector,
            TH,
            P,
            ThetaRange::FULL,
            |t| by_theta(t, inv_sqrt2_cos_quarter(t), 1.0, pi_over(t)),
            |t| by_theta(t, sine_ratio(t), 1.0, sqrt2_sin_quarter(t)),
            vec![],
        ),
        record(
            "R17",
            Scope::Strip,
            TH,
            S,
            ThetaRange::STRIP,
            one,
            half_pi,
            vec![
                w("strip-k-to-one", Lower, C::StripVertical, KToOne),
                w("strip-k-to-zero", Upper, C::StripVertical, KToZero),
            ],
        ),
        record("R17b", Scope::Strip, TH, J, ThetaRange::STRIP, one, |_| PI / SQRT_2, vec![]),
        record("R17c", Scope::Strip, TH, P, ThetaRange::STRIP, inv_sqrt2, half_pi, vec![]),
    ]
}

/// All records, in catalog order.
pub fn catalog() -> &'static [InequalityRecord] {
    &CATALOG
}

pub fn find_record(id: &str) -> Result<&'static InequalityRecord> {
    catalog()
        .iter()
        .find(|r| r.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownRecord(id.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub record: String,
    pub theta: f64,
    pub samples: usize,
    pub sup_observed: f64,
    pub inf_observed: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub violations: usize,
    pub sharpness_gap_upper: f64,
    pub sharpness_gap_lower: f64,
    pub seed: u64,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Samples `n_samples` pairs in the record's domain at `θ`, refines the
/// extremes and counts quotients outside `[lower - tol, upper + tol]`.
pub fn check_bound(record: &InequalityRecord, theta: f64, n_samples: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let domain = record.domain_at(theta)?;
    check_bound_in(record, &domain, n_samples, seed, tol)
}

/// [`check_bound`] on an explicit domain, e.g. the punctured plane for
/// records that hold in every domain.
pub fn check_bound_in(
    record: &InequalityRecord,
    domain: &Domain,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    if n_samples == 0 {
        return Err(Error::OutOfRange { name: "samples", value: 0.0, expected: "at least one sample" });
    }
    if !(tol > 0.0) {
        return Err(Error::OutOfRange { name: "tolerance", value: tol, expected: "tolerance > 0" });
    }
    let theta = record.theta_for(domain)?;
    let (lower, upper) = (record.lower_const(theta), record.upper_const(theta));
    let breaches = |q: f64| q < lower - tol || q > upper + tol;

    let sampled: Vec<(f64, Complex64, Complex64)> = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sampling::stream(seed, i);
            let (x, y) = sampling::pair(domain, &mut rng);
            record.quotient(domain, x, y).map(|q| (q, x, y))
        })
        .collect::<Result<_>>()?;

    let mut violations = sampled.iter().filter(|s| breaches(s.0)).count();
    let mut sup = sampled.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
    let mut inf = sampled.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);

    // Restart points: the best few samples for each side, in index order
    // among ties so the choice does not depend on scheduling.
    let mut order: Vec<usize> = (0..sampled.len()).collect();
    order.sort_by(|&a, &b| sampled[b].0.total_cmp(&sampled[a].0).then(a.cmp(&b)));
    let mut starts: Vec<(Side, usize)> =
        order.iter().take(REFINE_RESTARTS).map(|&i| (Side::Upper, i)).collect();
    starts.extend(order.iter().rev().take(REFINE_RESTARTS).map(|&i| (Side::Lower, i)));

    let refined: Vec<(Side, f64)> = starts
        .par_iter()
        .map(|&(side, i)| {
            let (_, x, y) = sampled[i];
            (side, refine(record, domain, x, y, side))
        })
        .collect();
    for (side, q) in refined {
        if !q.is_finite() {
            continue;
        }
        if breaches(q) {
            violations += 1;
        }
        match side {
            Side::Upper => sup = sup.max(q),
            Side::Lower => inf = inf.min(q),
        }
    }

    Ok(VerificationReport {
        record: record.id.to_string(),
        theta,
        samples: n_samples,
        sup_observed: sup,
        inf_observed: inf,
        lower_bound: lower,
        upper_bound: upper,
        violations,
        sharpness_gap_upper: upper - sup,
        sharpness_gap_lower: inf - lower,
        seed,
        tolerance: tol,
    })
}

const LN_RADIUS: f64 = 6.907755278982137; // ln 1e3

fn sigmoid(a: f64) -> f64 {
    1.0 / (1.0 + (-a).exp())
}

fn logit(u: f64) -> f64 {
    (u / (1.0 - u)).ln()
}

/// Unconstrained coordinates for a pair in `domain`.
fn encode(domain: &Domain, x: Complex64, y: Complex64) -> Point {
    let one = |z: Complex64| -> [f64; 2] {
        match *domain {
            Domain::Sector { angle } => [z.norm().ln(), logit(principal_arg(z) / angle)],
            Domain::Strip { height } => [z.re, logit(z.im / height)],
            Domain::HalfPlane => [z.re, z.im.ln()],
            Domain::PuncturedPlane => [z.norm().ln(), z.im.atan2(z.re)],
            Domain::UnitDisk => [logit(z.norm()), z.im.atan2(z.re)],
        }
    };
    let (a, b) = (one(x), one(y));
    [a[0], a[1], b[0], b[1]]
}

fn decode(domain: &Domain, p: &Point) -> (Complex64, Complex64) {
    let one = |u: f64, v: f64| -> Complex64 {
        match *domain {
            Domain::Sector { angle } => {
                Complex64::from_polar(u.clamp(-LN_RADIUS, LN_RADIUS).exp(), angle * sigmoid(v))
            }
            Domain::Strip { height } => Complex64::new(u.clamp(-1e2, 1e2), height * sigmoid(v)),
            Domain::HalfPlane => Complex64::new(u.clamp(-1e3, 1e3), v.clamp(-LN_RADIUS, LN_RADIUS).exp()),
            Domain::PuncturedPlane => Complex64::from_polar(u.clamp(-LN_RADIUS, LN_RADIUS).exp(), v),
            Domain::UnitDisk => Complex64::from_polar(sigmoid(u), v),
        }
    };
    (one(p[0], p[1]), one(p[2], p[3]))
}

/// Best quotient reached by simplex descent from `(x, y)`, maximizing for
/// the upper side and minimizing for the lower one.
fn refine(record: &InequalityRecord, domain: &Domain, x: Complex64, y: Complex64, side: Side) -> f64 {
    let sign = match side {
        Side::Upper => -1.0,
        Side::Lower => 1.0,
    };
    let objective = |p: &Point| {
        let (u, v) = decode(domain, p);
        if u == v || !domain.contains(u) || !domain.contains(v) {
            return f64::NAN;
        }
        record.quotient(domain, u, v).map_or(f64::NAN, |q| sign * q)
    };
    let start = encode(domain, x, y);
    let (_, value) = simplex::minimize(objective, start, 0.25, REFINE_ITERATIONS);
    sign * value
}

/// Quotients along the witness for `side` at `θ`: one value for attained
/// witnesses, one per `k` otherwise.
pub fn witness_sequence(record: &InequalityRecord, theta: f64, side: Side) -> Result<Vec<(f64, f64)>> {
    record.require_theta(theta)?;
    let wit = record.witness(theta, side).ok_or_else(|| Error::NoWitness {
        record: record.id.to_string(),
        side: side.as_str(),
    })?;
    wit.k_sequence()
        .into_iter()
        .map(|k| {
            let (domain, x, y) = wit.generate(theta, k)?;
            Ok((k, record.quotient(&domain, x, y)?))
        })
        .collect()
}

/// Extremal witness quotient for `side`: the largest seen for the upper
/// constant and the smallest for the lower one.
pub fn sharpness_probe(record: &InequalityRecord, theta: f64, side: Side) -> Result<f64> {
    let qs = witness_sequence(record, theta, side)?.into_iter().map(|(_, q)| q);
    Ok(match side {
        Side::Upper => qs.fold(f64::NEG_INFINITY, f64::max),
        Side::Lower => qs.fold(f64::INFINITY, f64::min),
    })
}

/// A pair in `S_θ`, `θ > π`, whose segment leaves the sector, so that
/// `s = 1 > p`.
pub fn convexity_counterexample(theta: f64) -> Result<(Complex64, Complex64)> {
    if !(theta > PI && theta < 2.0 * PI) {
        return Err(Error::InvalidTheta {
            record: "convexity".to_string(),
            theta,
            range: ThetaRange::REFLEX.to_string(),
        });
    }
    let delta = (theta - PI) / 4.0;
    Ok((Complex64::from_polar(1.0, delta), Complex64::from_polar(1.0, theta - delta)))
}

/// Largest `p(x, z) - p(x, y) - p(y, z)` over sampled triples, with the
/// triple. A positive excess is a triangle-inequality failure of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleExcess {
    pub excess: f64,
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: [f64; 2],
}

pub fn point_pair_triangle_search(domain: &Domain, n_samples: usize, seed: u64) -> Result<TriangleExcess> {
    let best = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sampling::stream(seed, i);
            let (x, z) = sampling::pair(domain, &mut rng);
            // Middle point near the segment stresses the inequality most.
            let t: f64 = rng.random();
            let mid = x + (z - x) * t;
            let y = if domain.contains(mid) && mid != x && mid != z { mid } else { sampling::pair(domain, &mut rng).0 };
            let excess = point_pair(domain, x, z)? - point_pair(domain, x, y)? - point_pair(domain, y, z)?;
            Ok((i, excess, x, y, z))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1).then(b.0.cmp(&a.0)));
    let (_, excess, x, y, z) = best.ok_or(Error::OutOfRange {
        name: "samples",
        value: 0.0,
        expected: "at least one sample",
    })?;
    let pt = |c: Complex64| [c.re, c.im];
    Ok(TriangleExcess { excess, x: pt(x), y: pt(y), z: pt(z) })
}
