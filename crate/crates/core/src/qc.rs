//! Hölder-type distortion of the triangular ratio metric under
//! quasiconformal maps.
//!
//! The constant `c(K)` of the quasiconformal Schwarz lemma is not computed;
//! [`c_upper`] gives the standard upper envelope and every bound records the
//! `C` it was built with.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{principal_arg, Domain};
use crate::metrics::s_metric;
use crate::sampling;

/// `arth` is evaluated with `t` capped at `1 - ARTH_CAP`.
pub const ARTH_CAP: f64 = 1e-15;

/// Slack allowed when checking the elementary inequalities.
pub const GRID_SLACK: f64 = 1e-14;

/// Tolerance for the transported-pair bound checks.
pub const EMPIRICAL_TOL: f64 = 1e-10;

fn check_k(k: f64) -> Result<()> {
    if k >= 1.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidK(k))
    }
}

fn check_c(c: f64) -> Result<()> {
    if c >= 1.0 && c.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "C", value: c, expected: "C >= 1" })
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "t", value: t, expected: "0 < t < 1" })
    }
}

/// Upper envelope `log(2(1 + √(1 - e⁻²)))(K - 1) + K` of `c(K)`.
pub fn c_upper(k: f64) -> Result<f64> {
    check_k(k)?;
    let slope = (2.0 * (1.0 + (1.0 - (-2.0f64).exp()).sqrt())).ln();
    Ok(slope * (k - 1.0) + k)
}

/// Inverse hyperbolic tangent with `t` capped below 1.
pub fn arth(t: f64) -> f64 {
    let t = t.min(1.0 - ARTH_CAP);
    0.5 * (t.ln_1p() - (-t).ln_1p())
}

/// `H(t) = th((C/2)·max(2 arth t, (2 arth t)^{1/K}))`.
pub fn holder_majorant(t: f64, k: f64, c: f64) -> Result<f64> {
    HolderParams::new(k, c)?.majorant(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderParams {
    pub k: f64,
    pub c: f64,
}

impl HolderParams {
    pub fn new(k: f64, c: f64) -> Result<Self> {
        check_k(k)?;
        check_c(c)?;
        Ok(HolderParams { k, c })
    }

    /// `d = 2(C/2)^K`.
    pub fn d(&self) -> f64 {
        2.0 * (self.c / 2.0).powf(self.k)
    }

    pub fn majorant(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        let a = 2.0 * arth(t);
        Ok((0.5 * self.c * a.max(a.powf(1.0 / self.k))).tanh())
    }

    /// `C·t^{1/K}`.
    pub fn majorant_bound(&self, t: f64) -> f64 {
        self.c * t.powf(1.0 / self.k)
    }

    /// `w(t) = th((C/2)(2 arth t)^{1/K})`.
    pub fn w(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        Ok((0.5 * self.c * (2.0 * arth(t)).powf(1.0 / self.k)).tanh())
    }

    /// `max(1, d^{1/K})·t^{1/K}`.
    pub fn w_bound(&self, t: f64) -> f64 {
        self.d().powf(1.0 / self.k).max(1.0) * t.powf(1.0 / self.k)
    }
}

/// Outcome of one inequality swept over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckTally {
    pub checked: usize,
    pub violations: usize,
    /// Smallest `rhs - lhs` seen.
    pub worst_margin: f64,
}

impl CheckTally {
    fn new() -> Self {
        CheckTally { checked: 0, violations: 0, worst_margin: f64::INFINITY }
    }

    fn record(&mut self, lhs: f64, rhs: f64, slack: f64) {
        self.checked += 1;
        let margin = rhs - lhs;
        if !(margin >= -slack) {
            self.violations += 1;
        }
        self.worst_margin = self.worst_margin.min(margin);
    }

    pub fn passed(&self) -> bool {
        self.checked > 0 && self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryGrid {
    pub t: Vec<f64>,
    /// Values of `d` for `th(d arth t) ≤ dt`.
    pub d: Vec<f64>,
    /// `(K, C)` pairs for `H(t) ≤ C t^{1/K}`.
    pub holder: Vec<(f64, f64)>,
    /// `(K, c)` pairs for the `w(t)` bound.
    pub w: Vec<(f64, f64)>,
    /// `u` and exponent grids for the monotonicity of `th(u^a)^{1/a}`.
    pub u: Vec<f64>,
    pub a: Vec<f64>,
    pub slack: f64,
}

/// `n` points log-spaced from `lo` to `hi`.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// `n` points in `[eps, 1 - eps]`, log-spaced toward both ends.
pub fn unit_grid(eps: f64, n: usize) -> Vec<f64> {
    let half = n / 2;
    let mut t = log_space(eps, 0.5, n - half);
    t.extend(log_space(0.5, eps, half + 1).into_iter().skip(1).map(|s| 1.0 - s));
    t
}

impl ElementaryGrid {
    pub fn standard() -> Self {
        let mut holder = Vec::new();
        for k in [1.0, 1.5, 2.0, 5.0, 10.0] {
            for c in [k, c_upper(k).unwrap(), 10.0] {
                holder.push((k, c));
            }
        }
        let mut w = Vec::new();
        for k in [1.0, 2.0, 5.0] {
            for c in [1.0, 2.0, 5.0] {
                if c >= k {
                    w.push((k, c));
                }
            }
        }
        ElementaryGrid {
            t: unit_grid(1e-8, 10_000),
            d: vec![1.0, 1.01, 2.0, 10.0],
            holder,
            w,
            u: log_space(1e-3, 1e3, 60),
            a: log_space(0.05, 20.0, 60),
            slack: GRID_SLACK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElementaryReport {
    /// `th(d arth t) ≤ d t`.
    pub th_d_arth: CheckTally,
    /// `w(t) ≤ max(1, d^{1/K}) t^{1/K}`.
    pub w_bound: CheckTally,
    /// `H(t) ≤ C t^{1/K}`.
    pub holder: CheckTally,
    /// `th(u^a)^{1/a}` nondecreasing in `a`.
    pub power_monotone: CheckTally,
    /// `th(t)/t` nonincreasing.
    pub th_ratio_monotone: CheckTally,
}

impl ElementaryReport {
    pub fn passed(&self) -> bool {
        [
            self.th_d_arth,
            self.w_bound,
            self.holder,
            self.power_monotone,
            self.th_ratio_monotone,
        ]
        .iter()
        .all(CheckTally::passed)
    }
}

pub fn elementary_checks(grid: &ElementaryGrid) -> Result<ElementaryReport> {
    let slack = grid.slack;
    let mut th_d_arth = CheckTally::new();
    for &d in &grid.d {
        for &t in &grid.t {
            th_d_arth.record((d * arth(t)).tanh(), d * t, slack);
        }
    }
    let mut w_bound = CheckTally::new();
    for &(k, c) in &grid.w {
        let p = HolderParams::new(k, c)?;
        for &t in &grid.t {
            w_bound.record(p.w(t)?, p.w_bound(t), slack);
        }
    }
    let mut holder = CheckTally::new();
    for &(k, c) in &grid.holder {
        let p = HolderParams::new(k, c)?;
        for &t in &grid.t {
            holder.record(p.majorant(t)?, p.majorant_bound(t), slack);
        }
    }
    let mut power_monotone = CheckTally::new();
    for &u in &grid.u {
        let h = |a: f64| u.powf(a).tanh().powf(1.0 / a);
        for pair in grid.a.windows(2) {
            power_monotone.record(h(pair[0]), h(pair[1]), slack);
        }
    }
    let mut th_ratio_monotone = CheckTally::new();
    let ts = log_space(1e-6, 50.0, 2000);
    for pair in ts.windows(2) {
        let r = |t: f64| t.tanh() / t;
        th_ratio_monotone.record(r(pair[1]), r(pair[0]), slack);
    }
    Ok(ElementaryReport { th_d_arth, w_bound, holder, power_monotone, th_ratio_monotone })
}

/// `lower_coeff·s^{lower_exp} ≤ s_{G₂}(f(x), f(y)) ≤ upper_coeff·s^{upper_exp}`
/// with `s = s_{G₁}(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistortionBounds {
    pub lower_coeff: f64,
    pub lower_exp: f64,
    pub upper_coeff: f64,
    pub upper_exp: f64,
    pub c_used: f64,
}

impl DistortionBounds {
    pub fn lower(&self, s: f64) -> f64 {
        self.lower_coeff * s.powf(self.lower_exp)
    }

    pub fn upper(&self, s: f64) -> f64 {
        self.upper_coeff * s.powf(self.upper_exp)
    }
}

/// `(A, B)` with `A·s ≤ th(ρ/2) ≤ B·s` on the domain.
pub fn th_s_constants(domain: &Domain) -> Option<(f64, f64)> {
    match *domain {
        Domain::HalfPlane => Some((1.0, 1.0)),
        Domain::Sector { angle } if angle > 0.0 && angle <= PI => {
            Some((1.0, (PI / angle) * (angle / 2.0).sin()))
        }
        Domain::Sector { angle } if angle > PI && angle < 2.0 * PI => Some((PI / angle, 1.0)),
        Domain::Strip { height } if (height - PI).abs() <= 1e-12 => Some((1.0, PI / 2.0)),
        _ => None,
    }
}

/// Two-sided distortion of `s` under a `K`-quasiconformal map between the
/// given domains. `c` defaults to [`c_upper`].
pub fn distortion_bounds(
    source: &Domain,
    target: &Domain,
    k: f64,
    c: Option<f64>,
) -> Result<DistortionBounds> {
    check_k(k)?;
    let c = match c {
        Some(c) => c,
        None => c_upper(k)?,
    };
    check_c(c)?;
    let unsupported = || Error::UnsupportedPair { source_domain: *source, target_domain: *target };
    let (a_src, b_src) = th_s_constants(source).ok_or_else(unsupported)?;
    let (a_tgt, b_tgt) = th_s_constants(target).ok_or_else(unsupported)?;
    // Upper: s₂ ≤ th₂/A₂ ≤ C(B₁s₁)^{1/K}/A₂. Lower: the same for f⁻¹.
    Ok(DistortionBounds {
        lower_coeff: (a_src / c).powf(k) / b_tgt,
        lower_exp: k,
        upper_coeff: c * b_src.powf(1.0 / k) / a_tgt,
        upper_exp: 1.0 / k,
        c_used: c,
    })
}

fn check_power_angle(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v <= PI {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value: v, expected: "0 < angle <= π" })
    }
}

/// Sharp bounds on `s_{S_β}(x^{β/α}, y^{β/α}) / s_{S_α}(x, y)`.
pub fn power_map_bounds(alpha: f64, beta: f64) -> Result<(f64, f64)> {
    check_power_angle("alpha", alpha)?;
    check_power_angle("beta", beta)?;
    let q = beta * (alpha / 2.0).sin() / (alpha * (beta / 2.0).sin());
    Ok(if alpha <= beta { (1.0, q) } else { (q, 1.0) })
}

/// Explicit maps between sectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum MapFamily {
    /// `z ↦ z^{β/α}`, conformal.
    PowerMap { alpha: f64, beta: f64 },
    /// `re^{iφ} ↦ re^{iφβ/α}`.
    AngleStretch { alpha: f64, beta: f64 },
}

impl MapFamily {
    pub fn angles(&self) -> (f64, f64) {
        match *self {
            MapFamily::PowerMap { alpha, beta } | MapFamily::AngleStretch { alpha, beta } => {
                (alpha, beta)
            }
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let phi = principal_arg(z);
        match *self {
            MapFamily::PowerMap { alpha, beta } => {
                let e = beta / alpha;
                Complex64::from_polar((e * z.norm().ln()).exp(), e * phi)
            }
            MapFamily::AngleStretch { alpha, beta } => {
                Complex64::from_polar(z.norm(), phi * beta / alpha)
            }
        }
    }

    /// Dilatation taken for granted for the stretch, `max(β/α, α/β)`.
    pub fn assumed_dilatation(&self) -> Option<f64> {
        match *self {
            MapFamily::PowerMap { .. } => None,
            MapFamily::AngleStretch { alpha, beta } => Some((beta / alpha).max(alpha / beta)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmpiricalReport {
    pub family: MapFamily,
    pub samples: usize,
    pub seed: u64,
    pub assumed_dilatation: Option<f64>,
    pub c_used: Option<f64>,
    /// Extremes of `s_after / s_before`.
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub violations: usize,
    pub tolerance: f64,
}

/// Transports sampled pairs through `family` and counts breaches of the
/// applicable bounds.
pub fn empirical_distortion(family: MapFamily, n_samples: usize, seed: u64) -> Result<EmpiricalReport> {
    if n_samples == 0 {
        return Err(Error::OutOfRange {
            name: "n_samples",
            value: 0.0,
            expected: "at least one sample",
        });
    }
    let (alpha, beta) = family.angles();
    let source = Domain::sector(alpha)?;
    let target = Domain::sector(beta)?;
    enum Check {
        Ratio(f64, f64),
        Holder(DistortionBounds),
    }
    let (check, c_used) = match family {
        MapFamily::PowerMap { .. } => {
            let (lo, hi) = power_map_bounds(alpha, beta)?;
            (Check::Ratio(lo, hi), None)
        }
        MapFamily::AngleStretch { .. } => {
            let k = family.assumed_dilatation().unwrap();
            let b = distortion_bounds(&source, &target, k, None)?;
            (Check::Holder(b), Some(b.c_used))
        }
    };
    let tol = EMPIRICAL_TOL;
    let results: Vec<Result<(f64, bool)>> = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sampling::stream(seed, i);
            let (x, y) = sampling::pair(&source, &mut rng);
            let (fx, fy) = (family.apply(x), family.apply(y));
            let before = s_metric(&source, x, y)?;
            let after = s_metric(&target, fx, fy)?;
            let ratio = after / before;
            let ok = match check {
                Check::Ratio(lo, hi) => ratio >= lo - tol && ratio <= hi + tol,
                Check::Holder(b) => after >= b.lower(before) - tol && after <= b.upper(before) + tol,
            };
            Ok((ratio, ok))
        })
        .collect();
    let mut ratio_min = f64::INFINITY;
    let mut ratio_max = f64::NEG_INFINITY;
    let mut violations = 0;
    for r in results {
        let (ratio, ok) = r?;
        ratio_min = ratio_min.min(ratio);
        ratio_max = ratio_max.max(ratio);
        violations += usize::from(!ok);
    }
    Ok(EmpiricalReport {
        family,
        samples: n_samples,
        seed,
        assumed_dilatation: family.assumed_dilatation(),
        c_used,
        ratio_min,
        ratio_max,
        violations,
        tolerance: tol,
    })
}

/// `s` ratio of the power map on the symmetric pair `e^{(1∓k)αi/2}`.
pub fn power_map_symmetric_ratio(alpha: f64, beta: f64, k: f64) -> Result<f64> {
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::OutOfRange { name: "k", value: k, expected: "0 < k < 1" });
    }
    let source = Domain::sector(alpha)?;
    let target = Domain::sector(beta)?;
    let family = MapFamily::PowerMap { alpha, beta };
    let x = Complex64::from_polar(1.0, (1.0 - k) * alpha / 2.0);
    let y = Complex64::from_polar(1.0, (1.0 + k) * alpha / 2.0);
    Ok(s_metric(&target, family.apply(x), family.apply(y))? / s_metric(&source, x, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn envelope_values() {
        assert_eq!(c_upper(1.0).unwrap(), 1.0);
        assert!(close(c_upper(2.0).unwrap(), 3.3506016347130227, 1e-14));
        assert!(close(c_upper(1.5).unwrap(), 2.1753008173565114, 1e-14));
        assert!(matches!(c_upper(0.5), Err(Error::InvalidK(_))));
    }

    #[test]
    fn arth_is_capped() {
        assert!(arth(1.0).is_finite());
        assert!(close(arth(0.5), 0.5f64.atanh(), 1e-16));
    }

    #[test]
    fn majorant_values() {
        let t1 = 0.5f64.tanh();
        assert!(close(holder_majorant(t1, 1.0, 1.0).unwrap(), t1, 1e-15));
        let c = c_upper(2.0).unwrap();
        let h = holder_majorant(0.9, 2.0, c).unwrap();
        assert!(close(h, 0.9998961483171901, 1e-13));
        assert!(h <= c * 0.9f64.sqrt());
        let h = holder_majorant(0.01, 2.0, 2.0).unwrap();
        assert!(close(h, 0.14048833972308206, 1e-13));
        assert!(h <= 0.2);
        assert!(holder_majorant(1.0, 2.0, 2.0).is_err());
        assert!(holder_majorant(0.5, 2.0, 0.5).is_err());
    }

    #[test]
    fn w_value() {
        let p = HolderParams::new(2.0, 3.0).unwrap();
        assert!(close(p.d(), 4.5, 1e-15));
        assert!(close(p.w(0.5).unwrap(), 0.9173782617124406, 1e-13));
        assert!(close(p.w_bound(0.5), 1.5, 1e-15));
    }

    #[test]
    fn conformal_bounds() {
        let b = distortion_bounds(&Domain::HalfPlane, &Domain::HalfPlane, 1.0, Some(1.0)).unwrap();
        assert_eq!((b.lower_coeff, b.lower_exp, b.upper_coeff, b.upper_exp), (1.0, 1.0, 1.0, 1.0));
        let q = Domain::sector(PI / 2.0).unwrap();
        let b = distortion_bounds(&q, &q, 1.0, Some(1.0)).unwrap();
        assert!(close(b.lower_coeff, 0.5f64.sqrt(), 1e-15));
        assert!(close(b.upper_coeff, 2f64.sqrt(), 1e-15));
        let half = Domain::sector(PI).unwrap();
        let b = distortion_bounds(&Domain::STANDARD_STRIP, &half, 2.0, None).unwrap();
        assert!(close(b.upper_coeff, c_upper(2.0).unwrap() * (PI / 2.0).sqrt(), 1e-14));
        assert!(close(b.upper_coeff, 4.199356397298256, 1e-12));
        assert_eq!(b.upper_exp, 0.5);
        assert!(matches!(
            distortion_bounds(&Domain::UnitDisk, &half, 1.0, None),
            Err(Error::UnsupportedPair { .. })
        ));
    }

    #[test]
    fn identity_fits_every_sector_bound() {
        for t in [PI / 3.0, PI, 5.0 * PI / 4.0, 7.0 * PI / 4.0] {
            let s = Domain::sector(t).unwrap();
            let b = distortion_bounds(&s, &s, 1.0, Some(1.0)).unwrap();
            assert!(b.lower_coeff <= 1.0 && b.upper_coeff >= 1.0, "{t}");
        }
    }

    #[test]
    fn power_bounds() {
        assert_eq!(power_map_bounds(1.0, 1.0).unwrap(), (1.0, 1.0));
        let (lo, hi) = power_map_bounds(PI / 2.0, PI).unwrap();
        assert!(lo == 1.0 && close(hi, 2f64.sqrt(), 1e-15));
        let (lo, hi) = power_map_bounds(PI, PI / 2.0).unwrap();
        assert!(close(lo, 0.5f64.sqrt(), 1e-15) && hi == 1.0);
        assert!(power_map_bounds(PI, 1.5 * PI).is_err());
    }

    #[test]
    fn power_map_on_sample_pair() {
        let ratio = {
            let x = Complex64::from_polar(1.0, PI / 8.0);
            let y = Complex64::from_polar(1.0, 3.0 * PI / 8.0);
            let f = MapFamily::PowerMap { alpha: PI / 2.0, beta: PI };
            let before = s_metric(&Domain::sector(PI / 2.0).unwrap(), x, y).unwrap();
            let after = s_metric(&Domain::sector(PI).unwrap(), f.apply(x), f.apply(y)).unwrap();
            after / before
        };
        assert!(close(ratio, 1.0 / (2.0 * (PI / 8.0).sin()), 1e-14));
        let r = power_map_symmetric_ratio(PI / 2.0, PI, 0.5).unwrap();
        assert!(close(r, ratio, 1e-14));
    }
}
