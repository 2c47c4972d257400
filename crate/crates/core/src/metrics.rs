//! Closed-form evaluation of the triangular ratio metric `s`, the `j*`
//! metric, the point pair function `p` and `th(ρ/2)` for the hyperbolic
//! metric `ρ`.
//!
//! `th(ρ/2)` on a sector is computed through the conformal map
//! `z ↦ z^{π/θ}` onto the upper half-plane and on the standard strip through
//! `z ↦ e^z`. Both routes are written in terms of `x/y` so that nearby
//! points keep full relative accuracy and large exponents do not overflow.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    boundary_distance_unchecked, boundary_inf_sum, principal_arg, Domain, InfimumCase,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MetricKind {
    TriangularRatio,
    JStar,
    PointPair,
    TanhHalfRho,
}

impl MetricKind {
    pub const ALL: [MetricKind; 4] = [
        MetricKind::TriangularRatio,
        MetricKind::JStar,
        MetricKind::PointPair,
        MetricKind::TanhHalfRho,
    ];

    pub fn evaluate(self, domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
        match self {
            MetricKind::TriangularRatio => s_metric(domain, x, y),
            MetricKind::JStar => jstar_metric(domain, x, y),
            MetricKind::PointPair => point_pair(domain, x, y),
            MetricKind::TanhHalfRho => tanh_half_rho(domain, x, y),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MetricKind::TriangularRatio => "s",
            MetricKind::JStar => "j*",
            MetricKind::PointPair => "p",
            MetricKind::TanhHalfRho => "th(rho/2)",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Triangular ratio metric `|x - y| / inf_{z ∈ ∂G}(|x - z| + |z - y|)`.
pub fn s_metric(domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
    let inf = boundary_inf_sum(domain, x, y)?;
    if inf.case == InfimumCase::SegmentCrossesBoundary {
        return Ok(1.0);
    }
    Ok(((x - y).norm() / inf.value).min(1.0))
}

pub fn jstar_metric(domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
    domain.require(x)?;
    domain.require(y)?;
    let dist = (x - y).norm();
    let d = boundary_distance_unchecked(domain, x).min(boundary_distance_unchecked(domain, y));
    Ok(dist / (dist + 2.0 * d))
}

pub fn point_pair(domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
    domain.require(x)?;
    domain.require(y)?;
    let dist = (x - y).norm();
    let dx = boundary_distance_unchecked(domain, x);
    let dy = boundary_distance_unchecked(domain, y);
    Ok(dist / dist.hypot(2.0 * (dx * dy).sqrt()))
}

/// `th(ρ_G(x, y) / 2)` for the half-plane, the unit disk, sectors and the
/// strip of height `π`.
pub fn tanh_half_rho(domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
    domain.require(x)?;
    domain.require(y)?;
    match *domain {
        Domain::HalfPlane => Ok(half_plane_th(x, y)),
        Domain::UnitDisk => Ok((x - y).norm() / (Complex64::new(1.0, 0.0) - x * y.conj()).norm()),
        Domain::Sector { angle } => Ok(sector_th(angle, x, y)),
        Domain::Strip { height } if (height - PI).abs() <= 1e-12 => Ok(strip_th(x, y)),
        Domain::Strip { .. } | Domain::PuncturedPlane => Err(Error::UnsupportedDomain {
            what: "hyperbolic metric",
            domain: *domain,
        }),
    }
}

/// Hyperbolic distance, `2·artanh(th(ρ/2))`.
pub fn rho(domain: &Domain, x: Complex64, y: Complex64) -> Result<f64> {
    Ok(2.0 * tanh_half_rho(domain, x, y)?.atanh())
}

/// The conformal map `z ↦ z^{π/θ}` of the sector `S_θ` onto the upper
/// half-plane, with the argument taken in `(0, θ)`.
pub fn sector_to_half_plane(angle: f64, z: Complex64) -> Complex64 {
    let a = PI / angle;
    Complex64::from_polar((a * z.norm().ln()).exp(), a * principal_arg(z))
}

fn half_plane_th(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / (x - y.conj()).norm()
}

/// `e^z - 1` without cancellation for small `z`.
pub(crate) fn expm1_complex(z: Complex64) -> Complex64 {
    let half = (0.5 * z.im).sin();
    Complex64::new(
        z.re.exp_m1() * z.im.cos() - 2.0 * half * half,
        z.re.exp() * z.im.sin(),
    )
}

/// `log(x / y)` with the imaginary part equal to `arg x - arg y` for
/// arguments in `[0, 2π)`, accurate when `x ≈ y`.
fn log_ratio(x: Complex64, y: Complex64) -> Complex64 {
    let w = (x - y) / y;
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    let principal = ((x - y) * y.conj()).im.atan2((x * y.conj()).re);
    let naive = principal_arg(x) - principal_arg(y);
    let turns = ((naive - principal) / TAU).round();
    Complex64::new(re, principal + turns * TAU)
}

fn sector_th(angle: f64, x: Complex64, y: Complex64) -> f64 {
    if angle == PI {
        return half_plane_th(x, y);
    }
    // Keep |x| <= |y| so the scaled image of x has modulus <= 1.
    let (x, y) = if x.norm_sqr() <= y.norm_sqr() { (x, y) } else { (y, x) };
    let a = PI / angle;
    let l = log_ratio(x, y) * a;
    let phase = Complex64::from_polar(1.0, a * principal_arg(y));
    let num = expm1_complex(l).norm();
    let den = (phase * l.exp() - phase.conj()).norm();
    num / den
}

fn strip_th(x: Complex64, y: Complex64) -> f64 {
    let (x, y) = if x.re <= y.re { (x, y) } else { (y, x) };
    let num = expm1_complex(x - y).norm();
    let scaled_x = Complex64::new(x.re - y.re, x.im).exp();
    let den = (scaled_x - Complex64::from_polar(1.0, -y.im)).norm();
    num / den
}
