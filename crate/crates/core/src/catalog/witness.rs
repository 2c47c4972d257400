//! Point pairs that attain or approach the extremal constants.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{nearest_boundary_point, Domain};

/// Fraction of the way from `x` to its nearest boundary point used by the
/// equality construction.
pub const TRIPLE_STEP: f64 = 0.3;

/// Largest `j` in the approach sequences `k = 2^{-j}` and `k = 1 - 2^{-j}`.
pub const MAX_LIMIT_STEP: i32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// How a witness pair is built. Strip constructions ignore `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `x` on the bisector, `y` on the segment to the nearest boundary
    /// point; `s = j* = p`. On the strip `x = iπ/2`.
    EqualityTriple,
    /// `x = 1 + ki`, `y = 1 + 2k + ki` with `k = sin(min(θ/2, π/4))`.
    ParallelOffset,
    /// `e^{iθ/4}` and `e^{3iθ/4}`.
    QuarterPair,
    /// `e^{(1∓k)θi/2}`.
    SymmetricNormal,
    /// `(1∓k)πi/2` in the strip of height `π`.
    StripVertical,
    /// `(π/4)i` and `(3π/4)i`.
    StripQuarter,
    /// `1 + i` and `3 + i`.
    StripHorizontal,
    /// `i/4` and `3i/4` in the strip of height 1.
    StripUnitQuarter,
    /// `-1` and `1` in the punctured plane.
    PuncturedOpposite,
}

/// Where a limit witness sends `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Approach {
    Attained,
    KToZero,
    KToOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessFamily {
    pub id: &'static str,
    pub side: Side,
    pub construction: Construction,
    pub approach: Approach,
    /// Angles for which this witness is used, `[lo, hi]` (`hi` exclusive
    /// when `hi_open`).
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub hi_open: bool,
}

impl WitnessFamily {
    pub(crate) const fn new(id: &'static str, side: Side, construction: Construction, approach: Approach) -> Self {
        WitnessFamily {
            id,
            side,
            construction,
            approach,
            theta_lo: 0.0,
            theta_hi: 2.0 * PI,
            hi_open: false,
        }
    }

    pub(crate) const fn on(mut self, lo: f64, hi: f64, hi_open: bool) -> Self {
        self.theta_lo = lo;
        self.theta_hi = hi;
        self.hi_open = hi_open;
        self
    }

    pub fn applies_to(&self, theta: f64) -> bool {
        theta >= self.theta_lo && if self.hi_open { theta < self.theta_hi } else { theta <= self.theta_hi }
    }

    /// The approach parameters `k` for this witness; a single dummy value
    /// for attained witnesses.
    pub fn k_sequence(&self) -> Vec<f64> {
        let steps = 1..=MAX_LIMIT_STEP;
        match self.approach {
            Approach::Attained => vec![0.5],
            Approach::KToZero => steps.map(|j| 2f64.powi(-j)).collect(),
            Approach::KToOne => steps.map(|j| 1.0 - 2f64.powi(-j)).collect(),
        }
    }

    pub fn generate(&self, theta: f64, k: f64) -> Result<(Domain, Complex64, Complex64)> {
        self.construction.generate(theta, k)
    }
}

impl Construction {
    pub fn generate(self, theta: f64, k: f64) -> Result<(Domain, Complex64, Complex64)> {
        let c = Complex64::new;
        let strip = Domain::STANDARD_STRIP;
        Ok(match self {
            Construction::EqualityTriple => {
                let (domain, x) = if theta == 0.0 {
                    (strip, c(0.0, PI / 2.0))
                } else {
                    (Domain::sector(theta)?, Complex64::from_polar(1.0, theta / 2.0))
                };
                let z = nearest_boundary_point(&domain, x)?;
                (domain, x, x + (z - x) * TRIPLE_STEP)
            }
            Construction::ParallelOffset => {
                let h = (theta / 2.0).min(PI / 4.0).sin();
                (Domain::sector(theta)?, c(1.0, h), c(1.0 + 2.0 * h, h))
            }
            Construction::QuarterPair => (
                Domain::sector(theta)?,
                Complex64::from_polar(1.0, theta / 4.0),
                Complex64::from_polar(1.0, 3.0 * theta / 4.0),
            ),
            Construction::SymmetricNormal => (
                Domain::sector(theta)?,
                Complex64::from_polar(1.0, (1.0 - k) * theta / 2.0),
                Complex64::from_polar(1.0, (1.0 + k) * theta / 2.0),
            ),
            Construction::StripVertical => {
                (strip, c(0.0, (1.0 - k) * PI / 2.0), c(0.0, (1.0 + k) * PI / 2.0))
            }
            Construction::StripQuarter => (strip, c(0.0, PI / 4.0), c(0.0, 3.0 * PI / 4.0)),
            Construction::StripHorizontal => (strip, c(1.0, 1.0), c(3.0, 1.0)),
            Construction::StripUnitQuarter => (Domain::strip(1.0)?, c(0.0, 0.25), c(0.0, 0.75)),
            Construction::PuncturedOpposite => (Domain::PuncturedPlane, c(-1.0, 0.0), c(1.0, 0.0)),
        })
    }
}
