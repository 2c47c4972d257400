//! Test-only oracles and samplers shared by the integration tests.
//!
//! Nothing here calls into the closed-form boundary infimum: the oracle
//! discretizes the boundary directly and refines by ternary search.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sector_metrics::Domain;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn e(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A straight boundary piece `start + t·dir`, `t ∈ [0, len]`.
struct Piece {
    start: Complex64,
    dir: Complex64,
    len: f64,
}

fn pieces(domain: &Domain, x: Complex64, y: Complex64) -> Vec<Piece> {
    let reach = x.norm() + y.norm() + (x - y).norm() + 1.0;
    match *domain {
        Domain::Sector { angle } => vec![
            Piece { start: c(0.0, 0.0), dir: c(1.0, 0.0), len: reach },
            Piece { start: c(0.0, 0.0), dir: e(angle), len: reach },
        ],
        Domain::HalfPlane => {
            let lo = x.re.min(y.re) - reach;
            vec![Piece { start: c(lo, 0.0), dir: c(1.0, 0.0), len: 2.0 * reach + (x.re - y.re).abs() }]
        }
        Domain::Strip { height } => {
            let lo = x.re.min(y.re) - reach - height;
            let len = 2.0 * (reach + height) + (x.re - y.re).abs();
            vec![
                Piece { start: c(lo, 0.0), dir: c(1.0, 0.0), len },
                Piece { start: c(lo, height), dir: c(1.0, 0.0), len },
            ]
        }
        _ => panic!("oracle does not handle {domain}"),
    }
}

/// Brute-force `inf_{z ∈ ∂G}(|x - z| + |z - y|)`: `n` boundary samples in
/// total, then ternary search around the best sample of each piece.
pub fn brute_force_inf(domain: &Domain, x: Complex64, y: Complex64, n: usize) -> f64 {
    let ps = pieces(domain, x, y);
    let per = n / ps.len() + 1;
    let mut best = f64::INFINITY;
    for p in &ps {
        let f = |t: f64| {
            let z = p.start + p.dir * t;
            (x - z).norm() + (z - y).norm()
        };
        let h = p.len / (per - 1) as f64;
        let (mut bi, mut bv) = (0usize, f64::INFINITY);
        for i in 0..per {
            let v = f(i as f64 * h);
            if v < bv {
                bv = v;
                bi = i;
            }
        }
        let mut lo = (bi as f64 - 1.0).max(0.0) * h;
        let mut hi = ((bi + 1) as f64 * h).min(p.len);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if f(m1) <= f(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        best = best.min(bv).min(f(0.5 * (lo + hi))).min(f(0.0));
    }
    best
}

/// Random interior point with moderate geometry: log-uniform radius in
/// `[0.1, 10]` for sectors, bounded boxes otherwise.
pub fn moderate_point<R: Rng>(domain: &Domain, rng: &mut R) -> Complex64 {
    match *domain {
        Domain::Sector { angle } => {
            let r = 10f64.powf(rng.random_range(-1.0..1.0));
            let phi = angle * rng.random_range(1e-6..1.0 - 1e-6);
            Complex64::from_polar(r, phi)
        }
        Domain::HalfPlane => c(
            rng.random_range(-3.0..3.0),
            10f64.powf(rng.random_range(-1.3..0.7)),
        ),
        Domain::Strip { height } => c(
            rng.random_range(-3.0..3.0),
            height * rng.random_range(1e-6..1.0 - 1e-6),
        ),
        Domain::PuncturedPlane => {
            let r = 10f64.powf(rng.random_range(-1.0..1.0));
            Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
        }
        Domain::UnitDisk => {
            let r = rng.random_range(0.0..0.99f64).sqrt();
            Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
        }
    }
}

/// The seven domain configurations used for oracle equivalence.
pub fn oracle_domains() -> Vec<Domain> {
    let mut v: Vec<Domain> = [PI / 6.0, PI / 2.0, PI, 5.0 * PI / 4.0, 7.0 * PI / 4.0]
        .iter()
        .map(|&t| Domain::sector(t).unwrap())
        .collect();
    v.push(Domain::STANDARD_STRIP);
    v.push(Domain::HalfPlane);
    v
}
