//! Behaviour of an equi-diagonal matrix close to the parabolic boundary.
//!
//! Near `trace = 2` one off-diagonal entry stays finite (`-2 sinh eta`)
//! while the other shrinks like `epsilon cosh eta`. With
//! `alpha = sqrt|bc|` and `beta = sqrt|c/b|` the matrix is the sandwich
//!
//! ```text
//! diag(1/sqrt(beta), sqrt(beta)) * core * diag(sqrt(beta), 1/sqrt(beta))
//! ```
//!
//! where `core` is the rotation-like `[[1 - alpha^2/2, -alpha], [alpha, 1 - alpha^2/2]]`
//! for `epsilon > 0` and the squeeze-like
//! `[[1 + alpha^2/2, -alpha], [-alpha, 1 + alpha^2/2]]` for `epsilon < 0`.
//! Both cores tend to the identity as `alpha -> 0`; the sandwich tends to a
//! shear. The angle (`phi ~ alpha`, `chi ~ alpha`) is continuous in epsilon
//! but has a square-root kink at zero.

use alloc::vec::Vec;

use libm::{asinh, fabs, sqrt};

use super::{
    check_equidiagonal, classify, wigner_decompose, ClassKind, WignerCore, DEFAULT_CLASS_TOL,
};
use crate::error::{Error, Result};
use crate::mat::{check_finite, Mat2};

/// Largest `|trace - 2|` accepted by [`transition_decompose`].
pub const DEFAULT_TRANSITION_WINDOW: f64 = 0.1;

/// Which side of the parabolic boundary: `Positive` is the elliptic
/// (rotation-like) side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonSign {
    Positive,
    Negative,
}

impl EpsilonSign {
    pub fn value(&self) -> f64 {
        match self {
            EpsilonSign::Positive => 1.0,
            EpsilonSign::Negative => -1.0,
        }
    }
}

/// Alpha/beta parametrisation of a near-parabolic matrix.
///
/// `mirrored` is set when the upper-right entry is positive (the opposite
/// orientation to the `-2 sinh eta` layout); the core's off-diagonal signs
/// flip accordingly. At `alpha = 0` the sandwich degenerates and `beta` is
/// stored as 0; the matrix is then the shear carrying `2 sinh eta` in the
/// upper entry (`Positive`) or the lower entry (`Negative`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionForm {
    pub alpha: f64,
    pub beta: f64,
    pub sign: EpsilonSign,
    pub epsilon: f64,
    pub eta: f64,
    pub mirrored: bool,
}

impl TransitionForm {
    /// Signs of the core's upper and lower off-diagonal entries.
    pub fn core_signs(&self) -> (f64, f64) {
        let upper = if self.mirrored { 1.0 } else { -1.0 };
        (upper, -upper * self.sign.value())
    }

    /// The first-order core `[[1 -+ alpha^2/2, s_u alpha], [s_l alpha, 1 -+ alpha^2/2]]`.
    pub fn core_first_order(&self) -> [[f64; 2]; 2] {
        let (su, sl) = self.core_signs();
        let d = 1.0 - self.sign.value() * self.alpha * self.alpha / 2.0;
        [[d, su * self.alpha], [sl * self.alpha, d]]
    }

    fn off_diagonals(&self) -> (f64, f64) {
        let (su, sl) = self.core_signs();
        if self.alpha == 0.0 {
            let big = 2.0 * libm::sinh(self.eta);
            return match self.sign {
                EpsilonSign::Positive => (su * big, 0.0),
                EpsilonSign::Negative => (0.0, sl * big),
            };
        }
        (su * self.alpha / self.beta, sl * self.alpha * self.beta)
    }

    /// Sandwich of the first-order core. Agrees with the source matrix up to
    /// [`TransitionForm::error_bound`].
    pub fn recompose_first_order(&self) -> [[f64; 2]; 2] {
        let core = self.core_first_order();
        let (upper, lower) = self.off_diagonals();
        [[core[0][0], upper], [lower, core[1][1]]]
    }

    /// Sandwich of the exact core (diagonal `sqrt(1 -+ alpha^2)`).
    pub fn recompose_exact(&self) -> Result<Mat2> {
        let diag = sqrt(1.0 - self.sign.value() * self.alpha * self.alpha);
        let (upper, lower) = self.off_diagonals();
        Mat2::with_tolerance(diag, upper, lower, diag, crate::mat::DRIFT_TOL)
    }

    /// `1e-8 + K epsilon^2` with `K = sinh^2(eta) cosh^2(eta)`, twice the
    /// leading `alpha^4/8` term dropped by the first-order core.
    pub fn error_bound(&self) -> f64 {
        let (s, c) = (libm::sinh(self.eta), libm::cosh(self.eta));
        1e-8 + s * s * c * c * self.epsilon * self.epsilon
    }
}

/// Alpha/beta decomposition of an equi-diagonal matrix with
/// `|trace - 2| <= window`.
///
/// `eta` comes from the larger off-diagonal entry (`|L| = 2 sinh eta`),
/// `epsilon` from the smaller one (`|S| = |epsilon| cosh eta`), positive on
/// the elliptic side.
pub fn transition_decompose(e: &Mat2, window: f64) -> Result<TransitionForm> {
    check_equidiagonal(e)?;
    let distance = fabs(e.trace() - 2.0);
    if distance > window || window.is_nan() {
        return Err(Error::OutsideWindow { distance, window });
    }
    let (b, c) = (e.b(), e.c());
    if b == 0.0 && c == 0.0 {
        return Err(Error::Degenerate(
            "no squeeze: both off-diagonal entries vanish, beta is undefined",
        ));
    }
    let upper_big = fabs(b) >= fabs(c);
    let (big, small) = if upper_big { (b, c) } else { (c, b) };
    let sinh_eta = fabs(big) / 2.0;
    let eta = asinh(sinh_eta);
    let cosh_eta = sqrt(1.0 + sinh_eta * sinh_eta);
    let alpha = sqrt(fabs(b * c));

    let (sign, beta, mirrored) = if alpha == 0.0 {
        if upper_big {
            (EpsilonSign::Positive, 0.0, b > 0.0)
        } else {
            (EpsilonSign::Negative, 0.0, c > 0.0)
        }
    } else {
        let sign = if b * c < 0.0 {
            EpsilonSign::Positive
        } else {
            EpsilonSign::Negative
        };
        (sign, sqrt(fabs(c)) / sqrt(fabs(b)), b > 0.0)
    };
    Ok(TransitionForm {
        alpha,
        beta,
        sign,
        epsilon: sign.value() * fabs(small) / cosh_eta,
        eta,
        mirrored,
    })
}

/// The unimodular family
/// `[[sqrt(1 - 2 eps sinh eta cosh eta), -2 sinh eta], [eps cosh eta, same]]`,
/// equal to `[[1 - eps sinh eta cosh eta, -2 sinh eta], [eps cosh eta, ...]]`
/// to first order in `eps` on both sides of zero.
pub fn transition_matrix(eta: f64, epsilon: f64) -> Result<Mat2> {
    check_finite(eta, "eta")?;
    check_finite(epsilon, "epsilon")?;
    let (s, c) = (libm::sinh(eta), libm::cosh(eta));
    let radicand = 1.0 - 2.0 * epsilon * s * c;
    if radicand < 0.0 {
        return Err(Error::InvalidArgument(
            "epsilon too large: diagonal would be imaginary",
        ));
    }
    let diag = sqrt(radicand);
    Mat2::new(diag, -2.0 * s, epsilon * c, diag)
}

/// One row of a sampled transition curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionSample {
    pub epsilon: f64,
    pub diag: f64,
    pub upper: f64,
    pub lower: f64,
    pub class: ClassKind,
    /// `phi` on the elliptic side, `chi` on the hyperbolic side, 0 at the
    /// parabolic point.
    pub angle: f64,
}

/// Samples [`transition_matrix`] at `steps` evenly spaced epsilons in
/// `[lo, hi]`. The grid is `lo (1 - t) + hi t`, so a symmetric range puts a
/// sample exactly at zero when `steps` is odd.
pub fn transition_curve(
    eta: f64,
    eps_range: [f64; 2],
    steps: usize,
) -> Result<Vec<TransitionSample>> {
    transition_curve_with_tol(eta, eps_range, steps, DEFAULT_CLASS_TOL)
}

pub fn transition_curve_with_tol(
    eta: f64,
    eps_range: [f64; 2],
    steps: usize,
    tol: f64,
) -> Result<Vec<TransitionSample>> {
    let [lo, hi] = eps_range;
    check_finite(lo, "epsilon range")?;
    check_finite(hi, "epsilon range")?;
    if steps < 3 {
        return Err(Error::InvalidArgument(
            "transition curve needs at least 3 steps",
        ));
    }
    if !(lo < 0.0 && 0.0 < hi) {
        return Err(Error::InvalidArgument("epsilon range must straddle zero"));
    }
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let t = i as f64 / last;
            let epsilon = lo * (1.0 - t) + hi * t;
            let m = transition_matrix(eta, epsilon)?;
            let class = classify(&m, tol).kind;
            let angle = match wigner_decompose(&m, tol)?.core {
                WignerCore::Elliptic { phi } => phi,
                WignerCore::Hyperbolic { chi } => chi,
                WignerCore::Parabolic { .. } => 0.0,
            };
            Ok(TransitionSample {
                epsilon,
                diag: m.a(),
                upper: m.b(),
                lower: m.c(),
                class,
                angle,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::shear2;

    const W: f64 = DEFAULT_TRANSITION_WINDOW;

    #[test]
    fn parabolic_point_is_a_shear() {
        let eta = 0.8_f64;
        let m = transition_matrix(eta, 0.0).unwrap();
        assert_eq!(m, shear2(2.0 * libm::sinh(eta)).unwrap());
        let t = transition_decompose(&m, W).unwrap();
        assert_eq!(t.alpha, 0.0);
        assert_eq!(t.epsilon, 0.0);
        assert!((t.eta - eta).abs() < 1e-15);
        let back = t.recompose_exact().unwrap();
        assert!(back.max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn positive_epsilon_matches_closed_form() {
        let (eta, eps) = (0.8_f64, 1e-3);
        let t = transition_decompose(&transition_matrix(eta, eps).unwrap(), W).unwrap();
        assert_eq!(t.sign, EpsilonSign::Positive);
        assert!((t.alpha - 0.048_739_798_452_601_645).abs() < 1e-15);
        assert!((t.beta - 0.027_440_305_228_292_44).abs() < 1e-15);
        assert!((t.epsilon - eps).abs() < 1e-16);
        assert!((t.eta - eta).abs() < 1e-15);
    }

    #[test]
    fn negative_side_uses_squeeze_core() {
        let (eta, eps) = (0.8_f64, -1e-3);
        let m = transition_matrix(eta, eps).unwrap();
        let t = transition_decompose(&m, W).unwrap();
        assert_eq!(t.sign, EpsilonSign::Negative);
        let core = t.core_first_order();
        assert!(core[0][0] > 1.0);
        assert!(core[0][1] < 0.0 && core[1][0] < 0.0);
        let (s, c) = (libm::sinh(eta), libm::cosh(eta));
        assert!((t.alpha - sqrt(-2.0 * eps * s * c)).abs() < 1e-15);
        assert!((t.beta - sqrt(-eps * c / (2.0 * s))).abs() < 1e-15);
    }

    #[test]
    fn first_order_error_within_bound() {
        for eps in [-0.04, -0.01, -1e-4, 1e-4, 0.01, 0.04] {
            let m = transition_matrix(0.8, eps).unwrap();
            let t = transition_decompose(&m, W).unwrap();
            let approx = t.recompose_first_order();
            let e = m.entries();
            let err = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| (approx[i][j] - e[i][j]).abs())
                .fold(0.0, f64::max);
            assert!(
                err <= t.error_bound(),
                "eps={eps}: {err} > {}",
                t.error_bound()
            );
            assert!(t.recompose_exact().unwrap().max_abs_diff(&m) < 1e-14);
        }
    }

    #[test]
    fn window_and_degenerate_errors() {
        let far = transition_matrix(0.8, 0.15).unwrap();
        assert!(matches!(
            transition_decompose(&far, W),
            Err(Error::OutsideWindow { .. })
        ));
        assert!(matches!(
            transition_decompose(&Mat2::IDENTITY, W),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn curve_argument_checks() {
        assert!(transition_curve(0.8, [-0.1, 0.1], 2).is_err());
        assert!(transition_curve(0.8, [0.01, 0.1], 11).is_err());
        assert!(transition_curve(0.8, [-0.1, 0.1], 11).is_ok());
        assert!(transition_matrix(0.8, 1.0).is_err());
    }
}
