//! Conformal self-maps that move a pair of points into symmetric position.
//!
//! On the upper half-plane a Möbius map sends `x, y` to two points of the
//! unit circle with equal imaginary part. Sectors and the strip are reduced
//! to this case through `z ↦ z^{π/θ}` and `z ↦ e^z`, after which the pair
//! sits at `e^{(1∓k)θi/2}` or `(1∓k)πi/2` for a single parameter `k`.

mod moebius;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use moebius::{ExtendedPoint, MoebiusMap};

use crate::error::{Error, Result};
use crate::geometry::{principal_arg, Domain};

/// Band used to route nearly horizontal or vertical pairs to the simple
/// cases.
pub const CASE_BAND: f64 = 1e-12;

/// `k` is kept inside `(K_EPS, 1 - K_EPS)`.
pub const K_EPS: f64 = 1e-15;

/// Two circles centered on the real axis and orthogonal to each other.
/// Circle 1 passes through both points, circle 2 is centered on the line
/// through them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoCircles {
    pub c1: f64,
    pub r1: f64,
    pub c2: f64,
    pub r2: f64,
}

/// Which construction [`normalize_halfplane`] uses for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlaneCase {
    EqualHeights,
    EqualRealParts,
    /// `negated_r2` marks the branch where the inner real point of circle 2
    /// is `c2 + r2` rather than `c2 - r2`.
    OrthogonalCircles { negated_r2: bool },
}

fn require_distinct_upper(x: Complex64, y: Complex64) -> Result<()> {
    Domain::HalfPlane.require(x)?;
    Domain::HalfPlane.require(y)?;
    if x == y {
        return Err(Error::DegenerateInput("x = y"));
    }
    Ok(())
}

pub fn halfplane_case(x: Complex64, y: Complex64) -> Result<HalfPlaneCase> {
    require_distinct_upper(x, y)?;
    let band = CASE_BAND * x.norm().max(y.norm());
    if (x.im - y.im).abs() < band {
        Ok(HalfPlaneCase::EqualHeights)
    } else if (x.re - y.re).abs() < band {
        Ok(HalfPlaneCase::EqualRealParts)
    } else {
        let local = LocalCircles::new(x, y)?;
        Ok(HalfPlaneCase::OrthogonalCircles {
            negated_r2: local.sigma < 0.0,
        })
    }
}

/// Circle data in the frame translated by `-Re x`, where `x = ia` and
/// `y = b + ic` with `|x| ≤ |y|`.
struct LocalCircles {
    shift: f64,
    c1: f64,
    r1: f64,
    c2: f64,
    r2: f64,
    /// Sign of `c2 - c1`.
    sigma: f64,
    /// `c1 - u` where `u` is the real point of circle 2 inside circle 1.
    offset: f64,
    /// Real point of circle 1 nearest to the origin of the frame.
    anchor: f64,
    /// Distance from `u` to `anchor`.
    anchor_gap: f64,
}

impl LocalCircles {
    fn new(x: Complex64, y: Complex64) -> Result<Self> {
        // The construction is symmetric; put the frame at the smaller point.
        let (x, y) = if x.norm() <= y.norm() { (x, y) } else { (y, x) };
        let shift = x.re;
        let (a, b, c) = (x.im, y.re - x.re, y.im);
        if b == 0.0 || c == a {
            return Err(Error::DegenerateConfiguration(
                "points on a common horizontal or vertical line",
            ));
        }
        let c1 = (b * b + (c - a) * (c + a)) / (2.0 * b);
        let r1 = c1.hypot(a);
        let c2 = -a * b / (c - a);
        let xl = Complex64::new(0.0, a);
        let yl = Complex64::new(b, c);
        let r2 = ((c2 - xl).norm() * (c2 - yl).norm()).sqrt();
        let delta = (c2 - c1).abs();
        let sigma = (c2 - c1).signum();
        // Distance from c1 to the inner point of circle 2, and what is left
        // of r1 beyond it; both free of cancellation since delta² = r1² + r2².
        let inner = r1 * r1 / (delta + r2);
        let rest = r1 * (r2 + r2 * r2 / (delta + r1)) / (delta + r2);
        let far = c1 + if c1 >= 0.0 { r1 } else { -r1 };
        let near = -a * a / far;
        let near_is_left = c1 >= 0.0;
        // u - p and q - u.
        let (left_gap, right_gap) = if sigma > 0.0 { (r1 + inner, rest) } else { (rest, r1 + inner) };
        let anchor_gap = if near_is_left { left_gap } else { right_gap };
        let ok = [c1, r1, c2, r2, inner, rest, near].iter().all(|v| v.is_finite());
        if !ok || !(rest > 0.0) || !(r1 > 0.0) || !(r2 > 0.0) {
            return Err(Error::DegenerateConfiguration(
                "circle 2 does not cut the diameter of circle 1",
            ));
        }
        Ok(LocalCircles {
            shift,
            c1,
            r1,
            c2,
            r2,
            sigma,
            offset: -sigma * inner,
            anchor: near,
            anchor_gap,
        })
    }

    /// `g(w) = (w - u) / ((D/r1)(w - e) + s_e)` in local coordinates, moved
    /// back to the original frame.
    fn map(&self) -> Result<MoebiusMap> {
        // From the anchor rather than c1, which can be far larger than x.
        let u = if self.c1 >= 0.0 {
            self.anchor + self.anchor_gap
        } else {
            self.anchor - self.anchor_gap
        };
        let ratio = self.offset / self.r1;
        MoebiusMap::from_real(
            1.0,
            -(u + self.shift),
            ratio,
            self.anchor_gap - ratio * (self.anchor + self.shift),
        )
    }
}

/// The orthogonal circle pair attached to `x, y`.
pub fn orthogonal_circles(x: Complex64, y: Complex64) -> Result<OrthoCircles> {
    require_distinct_upper(x, y)?;
    let band = CASE_BAND * x.norm().max(y.norm());
    if (x.im - y.im).abs() < band || (x.re - y.re).abs() < band {
        return Err(Error::DegenerateConfiguration(
            "points on a common horizontal or vertical line",
        ));
    }
    let l = LocalCircles::new(x, y)?;
    Ok(OrthoCircles {
        c1: l.c1 + l.shift,
        r1: l.r1,
        c2: l.c2 + l.shift,
        r2: l.r2,
    })
}

/// Möbius self-map of the upper half-plane with `|g(x)| = |g(y)| = 1` and
/// `Im g(x) = Im g(y)`.
pub fn normalize_halfplane(x: Complex64, y: Complex64) -> Result<MoebiusMap> {
    match halfplane_case(x, y)? {
        HalfPlaneCase::EqualHeights => {
            let a = 0.5 * (x.re + y.re);
            let r = (x - a).norm();
            MoebiusMap::from_real(1.0, -a, 0.0, r)
        }
        HalfPlaneCase::EqualRealParts => {
            let a = 0.5 * (x.re + y.re);
            let r = (x.im * y.im).sqrt();
            let re = |v: f64| Complex64::new(v, 0.0);
            MoebiusMap::from_three_points(re(a - r), re(a), re(a + r))
        }
        HalfPlaneCase::OrthogonalCircles { .. } => LocalCircles::new(x, y)?.map(),
    }
}

/// Point where circle 2 meets the geodesic arc from `x` to `y`; it splits
/// the arc into two halves of equal hyperbolic length.
pub fn geodesic_midpoint(x: Complex64, y: Complex64) -> Result<Complex64> {
    let oc = orthogonal_circles(x, y)?;
    let on_arc = |phi: f64| Complex64::new(oc.c1, 0.0) + Complex64::from_polar(oc.r1, phi);
    let f = |phi: f64| (on_arc(phi) - oc.c2).norm() - oc.r2;
    let (mut lo, mut hi) = (
        (x.im).atan2(x.re - oc.c1),
        (y.im).atan2(y.re - oc.c1),
    );
    let f_lo = f(lo);
    if f_lo * f(hi) > 0.0 {
        return Err(Error::DegenerateConfiguration("circle 2 misses the geodesic arc"));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if (f(mid) > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(on_arc(0.5 * (lo + hi)))
}

/// Where the normalizing map lives: a sector reduced by `z^{π/θ}` or the
/// strip of height `π` reduced by `e^z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Chart {
    Sector { angle: f64 },
    Strip,
}

/// `f = h⁻¹ ∘ g ∘ h` with `h` the chart map composed with a real dilation
/// `exp(-exponent·shift)` that keeps the half-plane images near the unit
/// circle. The dilation is part of `g`, so `h⁻¹` is the bare inverse power
/// or logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalMap {
    pub chart: Chart,
    pub shift: f64,
    pub moebius: MoebiusMap,
}

impl ConformalMap {
    fn exponent(&self) -> f64 {
        match self.chart {
            Chart::Sector { angle } => PI / angle,
            Chart::Strip => 1.0,
        }
    }

    /// Image of `z` in the upper half-plane, before `h⁻¹`.
    pub fn to_half_plane(&self, z: Complex64) -> Complex64 {
        let a = self.exponent();
        match self.chart {
            Chart::Sector { .. } => {
                Complex64::from_polar((a * (z.norm().ln() - self.shift)).exp(), a * principal_arg(z))
            }
            Chart::Strip => Complex64::from_polar((z.re - self.shift).exp(), z.im),
        }
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let w = self.moebius.apply_finite(self.to_half_plane(z))?;
        let arg = principal_arg(w);
        Ok(match self.chart {
            Chart::Sector { angle } => Complex64::from_polar(w.norm().powf(angle / PI), arg * angle / PI),
            Chart::Strip => Complex64::new(w.norm().ln(), arg),
        })
    }
}

/// `images` are the exact normal-form points for `k`; `apply` evaluates the
/// map itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedPair {
    pub k: f64,
    pub map: ConformalMap,
    pub images: [Complex64; 2],
}

impl NormalizedPair {
    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        self.map.apply(z)
    }
}

fn finish(chart: Chart, shift: f64, hx: Complex64, hy: Complex64) -> Result<NormalizedPair> {
    if !(hx.re.is_finite() && hx.im.is_finite() && hy.re.is_finite() && hy.im.is_finite()) {
        return Err(Error::DegenerateConfiguration("pair too far apart to normalize"));
    }
    if hx == hy {
        return Err(Error::DegenerateInput("points coincide after the chart map"));
    }
    let mut g = normalize_halfplane(hx, hy)?;
    let gx = g.apply_finite(hx)?;
    if gx.re < 0.0 {
        // z ↦ -1/z swaps the two images across the imaginary axis.
        g = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0)? * g;
    }
    let wx = g.apply_finite(hx)?;
    let wy = g.apply_finite(hy)?;
    // arg(w_y) - π/2 from the symmetric average of both images.
    let k = (2.0 / PI) * (0.5 * (wx.re - wy.re)).atan2(0.5 * (wx.im + wy.im));
    let k = k.clamp(K_EPS, 1.0 - K_EPS);
    let images = match chart {
        Chart::Sector { angle } => [
            Complex64::from_polar(1.0, (1.0 - k) * angle / 2.0),
            Complex64::from_polar(1.0, (1.0 + k) * angle / 2.0),
        ],
        Chart::Strip => [
            Complex64::new(0.0, (1.0 - k) * PI / 2.0),
            Complex64::new(0.0, (1.0 + k) * PI / 2.0),
        ],
    };
    let map = ConformalMap { chart, shift, moebius: g };
    Ok(NormalizedPair { k, map, images })
}

/// Normalizes `x, y ∈ S_θ` to `e^{(1∓k)θi/2}`.
pub fn normalize_sector(theta: f64, x: Complex64, y: Complex64) -> Result<NormalizedPair> {
    let domain = Domain::sector(theta)?;
    domain.require(x)?;
    domain.require(y)?;
    if x == y {
        return Err(Error::DegenerateInput("x = y"));
    }
    let shift = 0.5 * (x.norm().ln() + y.norm().ln());
    let chart = Chart::Sector { angle: theta };
    let probe = ConformalMap { chart, shift, moebius: MoebiusMap::identity() };
    finish(chart, shift, probe.to_half_plane(x), probe.to_half_plane(y))
}

/// Normalizes `x, y` in the strip of height `π` to `(1∓k)πi/2`.
pub fn normalize_strip(x: Complex64, y: Complex64) -> Result<NormalizedPair> {
    Domain::STANDARD_STRIP.require(x)?;
    Domain::STANDARD_STRIP.require(y)?;
    if x == y {
        return Err(Error::DegenerateInput("x = y"));
    }
    let shift = 0.5 * (x.re + y.re);
    let chart = Chart::Strip;
    let probe = ConformalMap { chart, shift, moebius: MoebiusMap::identity() };
    finish(chart, shift, probe.to_half_plane(x), probe.to_half_plane(y))
}
