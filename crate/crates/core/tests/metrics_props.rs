mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use common::{c, moderate_point, rng};
use num_complex::Complex64;
use proptest::prelude::*;
use sector_metrics::metrics::{jstar_metric, point_pair, rho, s_metric, tanh_half_rho};
use sector_metrics::{Domain, MetricKind};

#[test]
fn s_equals_th_on_the_half_plane() {
    let mut r = rng(21);
    let h = Domain::HalfPlane;
    for _ in 0..10_000 {
        let (x, y) = (moderate_point(&h, &mut r), moderate_point(&h, &mut r));
        let s = s_metric(&h, x, y).unwrap();
        let th = tanh_half_rho(&h, x, y).unwrap();
        assert!((s - th).abs() <= 1e-14, "{x} {y}: {s} {th}");
    }
}

#[test]
fn straight_sector_is_the_half_plane() {
    let mut r = rng(22);
    let (h, s_pi) = (Domain::HalfPlane, Domain::sector(PI).unwrap());
    for _ in 0..10_000 {
        let (x, y) = (moderate_point(&h, &mut r), moderate_point(&h, &mut r));
        for kind in MetricKind::ALL {
            let a = kind.evaluate(&h, x, y).unwrap();
            let b = kind.evaluate(&s_pi, x, y).unwrap();
            assert!((a - b).abs() <= 1e-12, "{kind} {x} {y}: {a} {b}");
        }
    }
}

#[test]
fn exact_points() {
    let strip1 = Domain::strip(1.0).unwrap();
    let (x, y) = (c(0.0, 0.25), c(0.0, 0.75));
    assert!((s_metric(&strip1, x, y).unwrap() - 0.5).abs() <= 1e-12);
    assert!((point_pair(&strip1, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-12);

    let pp = Domain::PuncturedPlane;
    let (x, y) = (c(-1.0, 0.0), c(1.0, 0.0));
    assert!((s_metric(&pp, x, y).unwrap() - 1.0).abs() <= 1e-12);
    assert!((point_pair(&pp, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-12);

    let strip = Domain::STANDARD_STRIP;
    let (x, y) = (c(1.0, 1.0), c(3.0, 1.0));
    assert!((s_metric(&strip, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-12);
    assert!((point_pair(&strip, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-12);
    assert!((jstar_metric(&strip, x, y).unwrap() - 0.5).abs() <= 1e-12);

    let (x, y) = (c(0.0, PI / 4.0), c(0.0, 3.0 * PI / 4.0));
    assert!((s_metric(&strip, x, y).unwrap() - 0.5).abs() <= 1e-12);
    assert!((jstar_metric(&strip, x, y).unwrap() - 0.5).abs() <= 1e-12);
    assert!((point_pair(&strip, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-12);
}

#[test]
fn symmetric_quarter_pair_in_the_quadrant() {
    let q = Domain::sector(PI / 2.0).unwrap();
    let (x, y) = (Complex64::from_polar(1.0, PI / 8.0), Complex64::from_polar(1.0, 3.0 * PI / 8.0));
    let s = s_metric(&q, x, y).unwrap();
    assert!((s - 2f64.sqrt() * (PI / 8.0).sin()).abs() <= 1e-14, "{s}");
    assert!((s - 0.541196100146197).abs() <= 1e-14);
    assert!((tanh_half_rho(&q, x, y).unwrap() - FRAC_1_SQRT_2).abs() <= 1e-14);
}

#[test]
fn disk_th_matches_hyperbolic_distance_from_the_center() {
    let d = Domain::UnitDisk;
    for t in [0.1, 0.5, 0.9] {
        let v = rho(&d, c(0.0, 0.0), c(t, 0.0)).unwrap();
        assert!((v - ((1.0 + t) / (1.0 - t)).ln()).abs() <= 1e-13);
    }
}

fn domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        (0.05..6.2f64).prop_map(|t| Domain::sector(t).unwrap()),
        Just(Domain::HalfPlane),
        Just(Domain::STANDARD_STRIP),
        Just(Domain::UnitDisk),
        Just(Domain::PuncturedPlane),
    ]
}

fn pair() -> impl Strategy<Value = (Domain, Complex64, Complex64)> {
    (domain(), any::<u64>()).prop_map(|(d, seed)| {
        let mut r = rng(seed);
        (d, moderate_point(&d, &mut r), moderate_point(&d, &mut r))
    })
}

proptest! {
    #[test]
    fn metrics_are_symmetric_and_bounded((d, x, y) in pair()) {
        for kind in MetricKind::ALL {
            let Ok(a) = kind.evaluate(&d, x, y) else { continue };
            let b = kind.evaluate(&d, y, x).unwrap();
            prop_assert!((a - b).abs() <= 1e-14 * a.max(1.0));
            prop_assert!((0.0..=1.0).contains(&a));
        }
    }

    #[test]
    fn general_domain_chain((d, x, y) in pair()) {
        // No closed-form boundary infimum on the disk.
        prop_assume!(d != Domain::UnitDisk);
        let s = s_metric(&d, x, y).unwrap();
        let j = jstar_metric(&d, x, y).unwrap();
        let p = point_pair(&d, x, y).unwrap();
        prop_assert!(j <= s + 1e-12 && s <= 2.0 * j + 1e-12);
        prop_assert!(j <= p + 1e-12 && p <= 2f64.sqrt() * j + 1e-12);
        if d.is_convex() {
            prop_assert!(s <= p + 1e-12);
        }
    }

    #[test]
    fn scale_invariance((d, x, y) in pair(), r in 0.01..100.0f64) {
        prop_assume!(d.is_scale_invariant());
        for kind in MetricKind::ALL {
            let Ok(a) = kind.evaluate(&d, x, y) else { continue };
            let b = kind.evaluate(&d, x * r, y * r).unwrap();
            prop_assert!((a - b).abs() <= 1e-12, "{kind}: {a} {b}");
        }
    }
}
