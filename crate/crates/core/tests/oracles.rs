//! Independent oracles: brute-force searches and iterated products that do
//! not share code paths with the closed forms under test.

use abcd_core::*;
use core::f64::consts::{FRAC_PI_2, PI};

fn mat(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
    Mat2::new(a, b, c, d).unwrap()
}

fn iterate(m: &Mat2, n: u64) -> Mat2 {
    (0..n).fold(Mat2::IDENTITY, |acc, _| acc * *m)
}

/// Scan alpha on a fine grid, refine by bisection on the sign of
/// `e11 - e22` of `rot2(alpha) m rot2(-alpha)`.
fn scan_equidiagonal_angle(m: &Mat2) -> f64 {
    let gap = |alpha: f64| {
        let e = m.conjugate_by(&rot2(alpha).unwrap());
        e.a() - e.d()
    };
    let n = 20_000;
    let mut best = f64::NAN;
    for i in 0..n {
        let lo = -FRAC_PI_2 + PI * i as f64 / n as f64;
        let hi = -FRAC_PI_2 + PI * (i + 1) as f64 / n as f64;
        if gap(lo) == 0.0 {
            best = lo;
            break;
        }
        if gap(lo).signum() != gap(hi).signum() {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..80 {
                let mid = 0.5 * (a + b);
                if gap(a).signum() == gap(mid).signum() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            let root = 0.5 * (a + b);
            if best.is_nan() || root.abs() < best.abs() {
                best = root;
            }
        }
    }
    best
}

#[test]
fn equidiagonal_angle_matches_scan() {
    for m in [
        mat(2.0, 0.0, 0.0, 0.5),
        mat(2.0, 3.0, 1.0, 2.0),
        mat(3.0, 1.0, 2.0, 1.0),
        mat(0.5, -0.25, 1.5, 1.25),
    ] {
        let eq = equidiagonalize(&m).unwrap();
        let scanned = scan_equidiagonal_angle(&m);
        assert!((eq.alpha - scanned).abs() < 1e-9 || (eq.alpha.abs() - FRAC_PI_2).abs() < 1e-9);
        assert!((eq.matrix.a() - eq.matrix.d()).abs() < 1e-12);
        assert!((eq.matrix.a() - m.trace() / 2.0).abs() < 1e-15);
    }
    // diag(2, 0.5) has its roots at +-pi/2 and lands on 1.25 on the diagonal
    let eq = equidiagonalize(&mat(2.0, 0.0, 0.0, 0.5)).unwrap();
    assert_eq!(eq.alpha, FRAC_PI_2);
    assert!((eq.matrix.a() - 1.25).abs() < 1e-15);
    assert!((eq.matrix.b() - 0.75).abs() < 1e-15 && (eq.matrix.c() - 0.75).abs() < 1e-15);
}

#[test]
fn power_matches_iteration() {
    for (m, n, tol) in [
        (rot2(0.37).unwrap() * boost2(0.2).unwrap(), 1000, 1e-9),
        (mat(2.0, 3.0, 1.0, 2.0), 20, 1e-8),
        (shear2(0.3).unwrap() * rot2(0.0).unwrap(), 500, 1e-10),
        (-mat(2.0, 1.0, 1.0, 1.0), 15, 1e-8),
    ] {
        let fast = power(&m, n).unwrap();
        let slow = iterate(&m, n);
        let scale = slow.max_abs().max(1.0);
        assert!(fast.max_abs_diff(&slow) / scale < tol, "{m:?}^{n}");
    }
}

#[test]
fn cycle_power_matches_iteration() {
    let s = LayerStack::new(0.4, 0.6, 0.6, 250).unwrap();
    let r = transfer(&s).unwrap();
    assert!(
        r.transfer_n
            .max_abs_diff(&iterate(&cycle_real(&s).unwrap(), 250))
            < 1e-10
    );
}

#[test]
fn complex_cycle_by_direct_multiplication() {
    // entry-by-entry complex arithmetic, no CMat2 involved
    type C = (f64, f64);
    fn mul(x: [C; 4], y: [C; 4]) -> [C; 4] {
        let m = |a: C, b: C| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let add = |a: C, b: C| (a.0 + b.0, a.1 + b.1);
        [
            add(m(x[0], y[0]), m(x[1], y[2])),
            add(m(x[0], y[1]), m(x[1], y[3])),
            add(m(x[2], y[0]), m(x[3], y[2])),
            add(m(x[2], y[1]), m(x[3], y[3])),
        ]
    }
    let p = |phi: f64| {
        [
            (phi.cos(), -phi.sin()),
            (0.0, 0.0),
            (0.0, 0.0),
            (phi.cos(), phi.sin()),
        ]
    };
    let b = |eta: f64| {
        let (c, s) = ((eta / 2.0).cosh(), (eta / 2.0).sinh());
        [(c, 0.0), (s, 0.0), (s, 0.0), (c, 0.0)]
    };
    let (phi1, phi2, eta) = (0.4, 0.6, 0.6);
    let oracle = mul(
        mul(mul(mul(p(phi2 / 2.0), b(eta)), p(phi1)), b(-eta)),
        p(phi2 / 2.0),
    );
    let got = cycle_complex(&LayerStack::new(phi1, phi2, eta, 0).unwrap())
        .unwrap()
        .entries();
    for k in 0..4 {
        assert!((got[k].re - oracle[k].0).abs() < 1e-15 && (got[k].im - oracle[k].1).abs() < 1e-15);
    }
}

#[test]
fn transition_alpha_beta_reference_values() {
    let t = transition_decompose(
        &transition_matrix(0.8, 1e-3).unwrap(),
        DEFAULT_TRANSITION_WINDOW,
    )
    .unwrap();
    // sqrt(2 eps sinh(eta) cosh(eta)) and sqrt(eps cosh(eta) / (2 sinh(eta)))
    assert!((t.alpha - 0.048739798452602).abs() < 1e-14);
    assert!((t.beta - 0.027440305228292).abs() < 1e-14);
}
