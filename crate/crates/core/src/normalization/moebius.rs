use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint {
    Finite(Complex64),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtendedPoint::Finite(z) => Some(z),
            ExtendedPoint::Infinity => None,
        }
    }
}

impl From<Complex64> for ExtendedPoint {
    fn from(z: Complex64) -> Self {
        ExtendedPoint::Finite(z)
    }
}

/// Fractional-linear map `z ↦ (az + b) / (cz + d)`.
///
/// Coefficients are kept scaled so that the largest one (in modulus) is
/// exactly 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

const MIN_DETERMINANT: f64 = 1e-14;

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::DegenerateInput("Möbius coefficients must be finite"));
        }
        let m = MoebiusMap { a, b, c, d }.normalized();
        if m.determinant().norm() <= MIN_DETERMINANT {
            return Err(Error::DegenerateInput("Möbius map with ad - bc = 0"));
        }
        Ok(m)
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let r = |v: f64| Complex64::new(v, 0.0);
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        MoebiusMap { a: one, b: zero, c: zero, d: one }
    }

    /// The map sending `z1 ↦ 0`, `z2 ↦ 1`, `z3 ↦ ∞` (cross-ratio).
    pub fn from_three_points(z1: Complex64, z2: Complex64, z3: Complex64) -> Result<Self> {
        if z1 == z2 || z2 == z3 || z1 == z3 {
            return Err(Error::DegenerateInput("three-point map needs distinct points"));
        }
        Self::new(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, z: Complex64) -> ExtendedPoint {
        let num = self.a * z + self.b;
        let den = self.c * z + self.d;
        if den == Complex64::new(0.0, 0.0) {
            ExtendedPoint::Infinity
        } else {
            ExtendedPoint::Finite(num / den)
        }
    }

    pub fn apply_extended(&self, z: ExtendedPoint) -> ExtendedPoint {
        match z {
            ExtendedPoint::Finite(z) => self.apply(z),
            ExtendedPoint::Infinity if self.c == Complex64::new(0.0, 0.0) => {
                ExtendedPoint::Infinity
            }
            ExtendedPoint::Infinity => ExtendedPoint::Finite(self.a / self.c),
        }
    }

    /// Applies the map to a point known not to be the pole.
    pub fn apply_finite(&self, z: Complex64) -> Result<Complex64> {
        self.apply(z)
            .finite()
            .ok_or(Error::DegenerateInput("point is the pole of the Möbius map"))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
        .normalized()
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        let largest = [self.a, self.b, self.c, self.d]
            .into_iter()
            .max_by(|p, q| p.norm().total_cmp(&q.norm()))
            .unwrap();
        if largest.norm() == 0.0 {
            return self;
        }
        MoebiusMap {
            a: self.a / largest,
            b: self.b / largest,
            c: self.c / largest,
            d: self.d / largest,
        }
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, rhs: MoebiusMap) -> MoebiusMap {
        self.compose(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_singular_maps() {
        assert!(MoebiusMap::from_real(1.0, 2.0, 2.0, 4.0).is_err());
        assert!(MoebiusMap::from_real(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn pole_and_infinity() {
        let m = MoebiusMap::from_real(1.0, 2.0, -1.0, 2.0).unwrap();
        assert_eq!(m.apply(c(2.0, 0.0)), ExtendedPoint::Infinity);
        let inf = m.apply_extended(ExtendedPoint::Infinity).finite().unwrap();
        assert!((inf - c(-1.0, 0.0)).norm() < 1e-15);
        let affine = MoebiusMap::from_real(2.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(affine.apply_extended(ExtendedPoint::Infinity), ExtendedPoint::Infinity);
        assert!(m.apply_finite(c(2.0, 0.0)).is_err());
    }

    #[test]
    fn three_point_map() {
        let m = MoebiusMap::from_three_points(c(-2.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!(m.apply_finite(c(-2.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((m.apply_finite(c(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(m.apply(c(2.0, 0.0)), ExtendedPoint::Infinity);
        assert!(MoebiusMap::from_three_points(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)).is_err());
    }

    #[test]
    fn largest_coefficient_is_one() {
        let m = MoebiusMap::from_real(-4.0, 2.0, 1.0, 3.0).unwrap();
        let [a, ..] = m.coefficients();
        assert_eq!(a, c(1.0, 0.0));
    }

    #[test]
    fn compose_and_invert() {
        let f = MoebiusMap::new(c(1.0, 2.0), c(0.5, 0.0), c(0.0, 1.0), c(3.0, -1.0)).unwrap();
        let g = MoebiusMap::from_real(2.0, -1.0, 1.0, 1.0).unwrap();
        let z = c(0.3, 0.7);
        let direct = f.apply_finite(g.apply_finite(z).unwrap()).unwrap();
        let composed = (f * g).apply_finite(z).unwrap();
        assert!((direct - composed).norm() < 1e-14);
        let back = f.inverse().apply_finite(f.apply_finite(z).unwrap()).unwrap();
        assert!((back - z).norm() < 1e-14);
        let id = MoebiusMap::identity().apply_finite(z).unwrap();
        assert_eq!(id, z);
    }
}
