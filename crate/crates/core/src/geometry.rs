//! Planar primitives and domain boundary computations.
//!
//! Points are plain [`Complex64`] values. A [`Domain`] knows its boundary,
//! the Euclidean distance `d_G(x)` to it, and the infimum of
//! `|x - z| + |z - y|` over boundary points `z`, which is the denominator of
//! the triangular ratio metric.
//!
//! The boundary infimum on a ray is solved exactly: in coordinates along the
//! supporting line the sum is convex, its unconstrained minimizer is either
//! the crossing point of `[x, y]` (points on opposite sides) or the Heron
//! point of the reflected pair (same side), and the constrained minimizer is
//! that point when it lies on the ray and the ray origin otherwise.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Absolute tolerance for geometric predicates, applied after scaling by
/// `max(1, |x|, |y|)`.
pub const PREDICATE_EPS: f64 = 1e-12;

/// A planar domain.
///
/// `Sector { angle }` is `{ z : 0 < arg z < angle }` with `arg` taken in
/// `[0, 2π)`. `Strip { height }` is `{ z : 0 < Im z < height }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Domain {
    HalfPlane,
    UnitDisk,
    Sector { angle: f64 },
    Strip { height: f64 },
    PuncturedPlane,
}

impl Domain {
    /// The strip `0 < Im z < π`, the angle-zero member of the sector family.
    pub const STANDARD_STRIP: Domain = Domain::Strip { height: PI };

    pub fn sector(angle: f64) -> Result<Self> {
        let d = Domain::Sector { angle };
        d.validate()?;
        Ok(d)
    }

    pub fn strip(height: f64) -> Result<Self> {
        let d = Domain::Strip { height };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Domain::Sector { angle } if !(angle > 0.0 && angle < TAU) => Err(
                Error::InvalidDomain(format!("sector angle {angle} must lie in (0, 2π)")),
            ),
            Domain::Strip { height } if !(height > 0.0 && height.is_finite()) => Err(
                Error::InvalidDomain(format!("strip height {height} must be positive")),
            ),
            _ => Ok(()),
        }
    }

    /// Strict interior membership. Boundary points and non-finite points are
    /// rejected.
    pub fn contains(&self, z: Complex64) -> bool {
        if !(z.re.is_finite() && z.im.is_finite()) || self.validate().is_err() {
            return false;
        }
        match *self {
            Domain::HalfPlane => z.im > 0.0,
            Domain::UnitDisk => z.norm_sqr() < 1.0,
            Domain::Sector { angle } => {
                if z == Complex64::new(0.0, 0.0) {
                    return false;
                }
                let arg = principal_arg(z);
                arg > 0.0 && arg < angle
            }
            Domain::Strip { height } => z.im > 0.0 && z.im < height,
            Domain::PuncturedPlane => z != Complex64::new(0.0, 0.0),
        }
    }

    /// Returns `Ok(())` when `z` is interior, `PointNotInDomain` otherwise.
    pub fn require(&self, z: Complex64) -> Result<()> {
        self.validate()?;
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::PointNotInDomain {
                point: z,
                domain: *self,
            })
        }
    }

    pub fn is_convex(&self) -> bool {
        match *self {
            Domain::HalfPlane | Domain::UnitDisk | Domain::Strip { .. } => true,
            Domain::Sector { angle } => angle <= PI,
            Domain::PuncturedPlane => false,
        }
    }

    /// Domains invariant under `z ↦ rz` for `r > 0`.
    pub fn is_scale_invariant(&self) -> bool {
        matches!(
            self,
            Domain::HalfPlane | Domain::Sector { .. } | Domain::PuncturedPlane
        )
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::HalfPlane => write!(f, "half-plane"),
            Domain::UnitDisk => write!(f, "unit disk"),
            Domain::Sector { angle } => write!(f, "sector(θ = {angle})"),
            Domain::Strip { height } => write!(f, "strip(height = {height})"),
            Domain::PuncturedPlane => write!(f, "punctured plane"),
        }
    }
}

/// Argument of `z` in `[0, 2π)`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        // a + 2π can round up to exactly 2π for tiny negative a.
        let shifted = a + TAU;
        if shifted >= TAU {
            0.0
        } else {
            shifted
        }
    } else {
        a
    }
}

/// A half-line `origin + t·direction`, `t ≥ 0`, with unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    origin: Complex64,
    direction: Complex64,
}

impl Ray {
    pub fn new(origin: Complex64, direction: Complex64) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::DegenerateInput("ray direction must be nonzero"));
        }
        Ok(Ray {
            origin,
            direction: direction / n,
        })
    }

    /// Ray from the origin at angle `angle`.
    pub fn from_origin(angle: f64) -> Self {
        Ray {
            origin: Complex64::new(0.0, 0.0),
            direction: Complex64::from_polar(1.0, angle),
        }
    }

    pub fn origin(&self) -> Complex64 {
        self.origin
    }

    pub fn direction(&self) -> Complex64 {
        self.direction
    }

    pub fn point_at(&self, t: f64) -> Complex64 {
        self.origin + self.direction * t
    }

    /// Coordinates `(along, across)` of `z` relative to the ray's line.
    fn line_coords(&self, z: Complex64) -> (f64, f64) {
        let w = (z - self.origin) * self.direction.conj();
        (w.re, w.im)
    }

    /// Euclidean distance from `z` to the ray (not the full line).
    pub fn distance(&self, z: Complex64) -> f64 {
        let (t, s) = self.line_coords(z);
        if t > 0.0 {
            s.abs()
        } else {
            (z - self.origin).norm()
        }
    }

    fn nearest_point(&self, z: Complex64) -> Complex64 {
        let (t, _) = self.line_coords(z);
        self.point_at(t.max(0.0))
    }
}

/// Mirror image of `p` in the line supporting `line`.
pub fn reflect(p: Complex64, line: &Ray) -> Complex64 {
    let u = line.direction;
    line.origin + u * u * (p - line.origin).conj()
}

/// Which branch of the boundary-infimum computation produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InfimumCase {
    /// `[x, y]` meets the boundary; the infimum is `|x - y|`.
    SegmentCrossesBoundary,
    /// Heron point of the reflected pair lies on the boundary piece.
    HeronReflection,
    /// The Heron point falls outside the ray; the ray origin minimizes.
    RayEndpoint,
    /// Reflection in the real axis for the upper half-plane.
    HalfPlaneHeron,
    /// Punctured plane with the origin off the segment.
    PuncturedOrigin,
    /// Unit disk with one point at the center; radial minimizer.
    DiskCenter,
}

impl fmt::Display for InfimumCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Value and minimizer of `inf_{z ∈ ∂G} (|x - z| + |z - y|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryInfimum {
    pub value: f64,
    pub minimizer: Complex64,
    pub case: InfimumCase,
}

/// Minimizes `|x - z| + |z - y|` over `z` on `ray`.
///
/// Points on the supporting line are allowed (they occur for reflex sectors,
/// where an interior point can sit on the extension of a boundary ray behind
/// the vertex). `x == y` yields twice the distance to the ray.
pub fn heron_on_ray(x: Complex64, y: Complex64, ray: &Ray) -> BoundaryInfimum {
    let (tx, sx) = ray.line_coords(x);
    let (ty, sy) = ray.line_coords(y);
    let (ax, ay) = (sx.abs(), sy.abs());
    let scale = 1f64.max(x.norm()).max(y.norm());
    let opposite = sx * sy <= 0.0;

    // Crossing point and Heron point share one formula in terms of |s|;
    // written symmetrically so swapping x and y is bit-exact.
    let t_star = if ax + ay > 0.0 {
        (tx * ay + ty * ax) / (ax + ay)
    } else {
        // Both points on the supporting line.
        tx.min(ty).max(0.0)
    };

    let on_ray = if ax + ay > 0.0 {
        t_star >= -PREDICATE_EPS * scale
    } else {
        tx.max(ty) >= 0.0
    };

    if on_ray {
        let dt = tx - ty;
        let value = if ax + ay > 0.0 {
            dt.hypot(ax + ay)
        } else {
            dt.abs()
        };
        BoundaryInfimum {
            value,
            minimizer: ray.point_at(t_star.max(0.0)),
            case: if opposite {
                InfimumCase::SegmentCrossesBoundary
            } else {
                InfimumCase::HeronReflection
            },
        }
    } else {
        let o = ray.origin;
        BoundaryInfimum {
            value: (x - o).norm() + (o - y).norm(),
            minimizer: o,
            case: InfimumCase::RayEndpoint,
        }
    }
}

/// The boundary rays of a sector, starting with the one at angle 0.
pub fn sector_rays(angle: f64) -> [Ray; 2] {
    [Ray::from_origin(0.0), Ray::from_origin(angle)]
}

/// Euclidean distance `d_G(x)` from an interior point to the boundary.
pub fn boundary_distance(domain: &Domain, x: Complex64) -> Result<f64> {
    domain.require(x)?;
    Ok(boundary_distance_unchecked(domain, x))
}

pub(crate) fn boundary_distance_unchecked(domain: &Domain, x: Complex64) -> f64 {
    match *domain {
        Domain::HalfPlane => x.im,
        Domain::UnitDisk => 1.0 - x.norm(),
        Domain::Sector { angle } => {
            let [r1, r2] = sector_rays(angle);
            r1.distance(x).min(r2.distance(x))
        }
        Domain::Strip { height } => x.im.min(height - x.im),
        Domain::PuncturedPlane => x.norm(),
    }
}

/// A boundary point realizing `d_G(x)`. Ties prefer the smaller argument.
pub fn nearest_boundary_point(domain: &Domain, x: Complex64) -> Result<Complex64> {
    domain.require(x)?;
    Ok(match *domain {
        Domain::HalfPlane => Complex64::new(x.re, 0.0),
        Domain::UnitDisk => {
            if x.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                x / x.norm()
            }
        }
        Domain::Sector { angle } => {
            let [r1, r2] = sector_rays(angle);
            if r1.distance(x) <= r2.distance(x) {
                r1.nearest_point(x)
            } else {
                r2.nearest_point(x)
            }
        }
        Domain::Strip { height } => {
            if x.im <= height - x.im {
                Complex64::new(x.re, 0.0)
            } else {
                Complex64::new(x.re, height)
            }
        }
        Domain::PuncturedPlane => Complex64::new(0.0, 0.0),
    })
}

/// `inf_{z ∈ ∂G} (|x - z| + |z - y|)` with its minimizer.
///
/// The unit disk is only handled when one point is the center; other disk
/// pairs return `NumericFallbackRequired`.
pub fn boundary_inf_sum(domain: &Domain, x: Complex64, y: Complex64) -> Result<BoundaryInfimum> {
    domain.require(x)?;
    domain.require(y)?;
    match *domain {
        Domain::HalfPlane => Ok(half_plane_heron(x, y, 0.0, InfimumCase::HalfPlaneHeron)),
        Domain::Sector { angle } => {
            let [r1, r2] = sector_rays(angle);
            let a = heron_on_ray(x, y, &r1);
            let b = heron_on_ray(x, y, &r2);
            // Ties go to the ray at angle 0 (smaller argument).
            Ok(if a.value <= b.value { a } else { b })
        }
        Domain::Strip { height } => {
            let lower = half_plane_heron(x, y, 0.0, InfimumCase::HeronReflection);
            let upper = upper_line_heron(x, y, height);
            Ok(if lower.value <= upper.value { lower } else { upper })
        }
        Domain::PuncturedPlane => {
            let cross = (x.conj() * y).im;
            let dot = (x.conj() * y).re;
            let origin = Complex64::new(0.0, 0.0);
            if dot < 0.0 && cross.abs() <= PREDICATE_EPS * x.norm() * y.norm() {
                Ok(BoundaryInfimum {
                    value: (x - y).norm(),
                    minimizer: origin,
                    case: InfimumCase::SegmentCrossesBoundary,
                })
            } else {
                Ok(BoundaryInfimum {
                    value: x.norm() + y.norm(),
                    minimizer: origin,
                    case: InfimumCase::PuncturedOrigin,
                })
            }
        }
        Domain::UnitDisk => {
            let (center, other) = if x.norm() <= PREDICATE_EPS {
                (x, y)
            } else if y.norm() <= PREDICATE_EPS {
                (y, x)
            } else {
                return Err(Error::NumericFallbackRequired(*domain));
            };
            let k = other.norm();
            let minimizer = if k == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                other / k
            };
            Ok(BoundaryInfimum {
                value: (center - minimizer).norm() + (minimizer - other).norm(),
                minimizer,
                case: InfimumCase::DiskCenter,
            })
        }
    }
}

/// Heron solution for the horizontal line `Im z = level` with both points
/// above it.
fn half_plane_heron(x: Complex64, y: Complex64, level: f64, case: InfimumCase) -> BoundaryInfimum {
    let (hx, hy) = (x.im - level, y.im - level);
    let t = (x.re * hy + y.re * hx) / (hx + hy);
    BoundaryInfimum {
        value: (x.re - y.re).hypot(hx + hy),
        minimizer: Complex64::new(t, level),
        case,
    }
}

fn upper_line_heron(x: Complex64, y: Complex64, height: f64) -> BoundaryInfimum {
    let (hx, hy) = (height - x.im, height - y.im);
    let t = (x.re * hy + y.re * hx) / (hx + hy);
    BoundaryInfimum {
        value: (x.re - y.re).hypot(hx + hy),
        minimizer: Complex64::new(t, height),
        case: InfimumCase::HeronReflection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_8, SQRT_2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e(angle: f64) -> Complex64 {
        Complex64::from_polar(1.0, angle)
    }

    #[test]
    fn reflect_examples() {
        let real_axis = Ray::from_origin(0.0);
        let imag_axis = Ray::from_origin(FRAC_PI_2);
        assert_relative_eq!(reflect(c(1.0, 2.0), &real_axis).re, 1.0);
        assert_relative_eq!(reflect(c(1.0, 2.0), &real_axis).im, -2.0);
        let r = reflect(c(1.0, 0.0), &imag_axis);
        assert_relative_eq!(r.re, -1.0, epsilon = 1e-15);
        assert!(r.im.abs() < 1e-15);

        let line = Ray::from_origin(3.0 * PI / 4.0);
        let r = reflect(e(3.0 * FRAC_PI_8), &line);
        let want = e(9.0 * FRAC_PI_8);
        assert!((r - want).norm() < 1e-15);
        let back = reflect(r, &line);
        assert!((back - e(3.0 * FRAC_PI_8)).norm() < 1e-15);
    }

    #[test]
    fn reflect_about_offset_line() {
        let line = Ray::new(c(0.0, 1.0), c(2.0, 0.0)).unwrap();
        let r = reflect(c(3.0, 4.0), &line);
        assert!((r - c(3.0, -2.0)).norm() < 1e-15);
    }

    #[test]
    fn ray_rejects_zero_direction() {
        assert!(Ray::new(c(0.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn membership() {
        let s = Domain::sector(3.0 * FRAC_PI_2).unwrap();
        assert!(s.contains(c(-1.0, 0.0)));
        assert!(!s.contains(c(1.0, 0.0)));
        assert!(!s.contains(c(0.0, 0.0)));
        assert!(!s.contains(c(1.0, -1.0)));
        assert!(!Domain::HalfPlane.contains(c(1.0, 0.0)));
        assert!(!Domain::HalfPlane.contains(c(f64::NAN, 1.0)));
        assert!(!Domain::UnitDisk.contains(c(1.0, 0.0)));
        let strip = Domain::STANDARD_STRIP;
        assert!(strip.contains(c(5.0, 3.0)));
        assert!(!strip.contains(c(5.0, PI)));
        assert!(!Domain::PuncturedPlane.contains(c(0.0, 0.0)));
        assert!(Domain::sector(0.0).is_err());
        assert!(Domain::sector(TAU).is_err());
        assert!(Domain::strip(-1.0).is_err());
    }

    #[test]
    fn boundary_distance_examples() {
        let d = boundary_distance(&Domain::sector(FRAC_PI_2).unwrap(), c(1.0, 1.0)).unwrap();
        assert_relative_eq!(d, 1.0, epsilon = 1e-15);
        let d = boundary_distance(&Domain::sector(3.0 * FRAC_PI_2).unwrap(), c(-1.0, 0.0)).unwrap();
        assert_relative_eq!(d, 1.0, epsilon = 1e-15);
        let d = boundary_distance(&Domain::STANDARD_STRIP, c(1.0, PI / 3.0)).unwrap();
        assert_relative_eq!(d, PI / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn boundary_distance_rejects_exterior() {
        let err = boundary_distance(&Domain::HalfPlane, c(0.0, -1.0)).unwrap_err();
        assert!(matches!(err, Error::PointNotInDomain { .. }));
        assert!(boundary_distance(&Domain::sector(1.0).unwrap(), c(2.0, 0.0)).is_err());
    }

    #[test]
    fn heron_on_ray_examples() {
        let ray = Ray::from_origin(0.0);
        let r = heron_on_ray(c(0.0, 1.0), c(0.0, 2.0), &ray);
        assert_relative_eq!(r.value, 3.0, epsilon = 1e-15);
        assert!(r.minimizer.norm() < 1e-15);

        let r = heron_on_ray(e(3.0 * FRAC_PI_8), e(9.0 * FRAC_PI_8), &ray);
        assert_relative_eq!(r.value, 2.0, epsilon = 1e-15);
        assert_eq!(r.minimizer, c(0.0, 0.0));
        assert_eq!(r.case, InfimumCase::RayEndpoint);

        let r = heron_on_ray(c(1.0, 1.0), c(3.0, 1.0), &ray);
        assert_relative_eq!(r.value, 2.0 * SQRT_2, epsilon = 1e-15);
        assert!((r.minimizer - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(r.case, InfimumCase::HeronReflection);
    }

    #[test]
    fn heron_on_ray_crossing() {
        let ray = Ray::from_origin(0.0);
        let r = heron_on_ray(c(1.0, 1.0), c(3.0, -1.0), &ray);
        assert_eq!(r.case, InfimumCase::SegmentCrossesBoundary);
        assert_relative_eq!(r.value, (c(1.0, 1.0) - c(3.0, -1.0)).norm(), epsilon = 1e-15);
        assert!((r.minimizer - c(2.0, 0.0)).norm() < 1e-15);
        // Crossing behind the origin does not count.
        let r = heron_on_ray(c(-3.0, 1.0), c(-1.0, -1.0), &ray);
        assert_eq!(r.case, InfimumCase::RayEndpoint);
    }

    #[test]
    fn heron_on_ray_coincident_points() {
        let ray = Ray::from_origin(0.0);
        let r = heron_on_ray(c(2.0, 0.5), c(2.0, 0.5), &ray);
        assert_relative_eq!(r.value, 1.0, epsilon = 1e-15);
        assert!((r.minimizer - c(2.0, 0.0)).norm() < 1e-15);
        let r = heron_on_ray(c(-2.0, 0.5), c(-2.0, 0.5), &ray);
        assert_relative_eq!(r.value, 2.0 * c(-2.0, 0.5).norm(), epsilon = 1e-15);
    }

    #[test]
    fn heron_on_ray_points_on_supporting_line() {
        // Both behind the vertex on the extension of the ray.
        let ray = Ray::from_origin(0.0);
        let r = heron_on_ray(c(-1.0, 0.0), c(-2.0, 0.0), &ray);
        assert_relative_eq!(r.value, 3.0);
        assert_eq!(r.minimizer, c(0.0, 0.0));
    }

    #[test]
    fn boundary_inf_sum_examples() {
        let r = boundary_inf_sum(&Domain::HalfPlane, c(0.0, 1.0), c(0.0, 2.0)).unwrap();
        assert_relative_eq!(r.value, 3.0);
        assert!(r.minimizer.norm() < 1e-15);

        let r = boundary_inf_sum(&Domain::PuncturedPlane, c(-1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_relative_eq!(r.value, 2.0);
        assert_eq!(r.minimizer, c(0.0, 0.0));
        assert_eq!(r.case, InfimumCase::SegmentCrossesBoundary);

        let sector = Domain::sector(3.0 * FRAC_PI_2).unwrap();
        let r = boundary_inf_sum(&sector, e(3.0 * FRAC_PI_8), e(9.0 * FRAC_PI_8)).unwrap();
        assert_relative_eq!(r.value, 2.0, epsilon = 1e-15);
        assert_eq!(r.minimizer, c(0.0, 0.0));
    }

    #[test]
    fn reflex_sector_crossing_detected() {
        let theta = 3.0 * FRAC_PI_2;
        let sector = Domain::sector(theta).unwrap();
        let x = e(FRAC_PI_8);
        let y = e(theta - FRAC_PI_8);
        let r = boundary_inf_sum(&sector, x, y).unwrap();
        assert_eq!(r.case, InfimumCase::SegmentCrossesBoundary);
        assert_relative_eq!(r.value, (x - y).norm(), epsilon = 1e-15);
    }

    #[test]
    fn strip_uses_nearer_line() {
        let strip = Domain::strip(1.0).unwrap();
        let r = boundary_inf_sum(&strip, c(0.0, 0.25), c(0.0, 0.75)).unwrap();
        assert_relative_eq!(r.value, 1.0, epsilon = 1e-15);
        let r = boundary_inf_sum(&strip, c(0.0, 0.8), c(2.0, 0.9)).unwrap();
        assert!((r.minimizer.im - 1.0).abs() < 1e-15);
        assert_relative_eq!(r.value, 2f64.hypot(0.3), epsilon = 1e-15);
    }

    #[test]
    fn disk_center_pairs_only() {
        let r = boundary_inf_sum(&Domain::UnitDisk, c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert_relative_eq!(r.value, 1.5);
        assert_eq!(r.case, InfimumCase::DiskCenter);
        let err = boundary_inf_sum(&Domain::UnitDisk, c(0.1, 0.0), c(0.5, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NumericFallbackRequired(_)));
    }

    #[test]
    fn coincident_points_give_twice_the_distance() {
        let cases = [
            (Domain::HalfPlane, c(0.3, 0.7)),
            (Domain::sector(FRAC_PI_2).unwrap(), c(1.0, 3.0)),
            (Domain::sector(5.0).unwrap(), c(-1.0, -0.2)),
            (Domain::STANDARD_STRIP, c(4.0, 2.0)),
            (Domain::PuncturedPlane, c(-2.0, 1.0)),
        ];
        for (d, x) in cases {
            let r = boundary_inf_sum(&d, x, x).unwrap();
            let dist = boundary_distance(&d, x).unwrap();
            assert_relative_eq!(r.value, 2.0 * dist, epsilon = 1e-14);
            let near = nearest_boundary_point(&d, x).unwrap();
            assert_relative_eq!((x - near).norm(), dist, epsilon = 1e-14);
        }
    }

    #[test]
    fn rejects_exterior_points() {
        let err = boundary_inf_sum(&Domain::sector(1.0).unwrap(), c(1.0, 0.5), c(-1.0, 0.1));
        assert!(matches!(err, Err(Error::PointNotInDomain { .. })));
    }

    #[test]
    fn principal_arg_range() {
        assert_eq!(principal_arg(c(1.0, 0.0)), 0.0);
        assert_relative_eq!(principal_arg(c(0.0, -1.0)), 3.0 * FRAC_PI_2);
        assert!(principal_arg(c(1.0, -1e-300)) < TAU);
    }
}
