use core::f64::consts::PI;

use libm::{asinh, atan2, cos, cosh, fabs, log, sin, sinh, sqrt, tanh};

use super::{check_equidiagonal, ClassKind, WignerCore, WignerForm};
use crate::error::{Error, Result};
use crate::mat::{check_finite, rot2, squeeze2, Mat2};

/// `R(theta) S(-2 lambda) R(theta)`, i.e. the matrix
///
/// ```text
/// [[cosh l cos t,            -sinh l - cosh l sin t],
///  [-sinh l + cosh l sin t,   cosh l cos t         ]]
/// ```
///
/// with the rotation factors taken as `rot2(theta)` (half-angle) and the
/// middle factor `squeeze2(-2 lambda)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BargmannForm {
    pub theta: f64,
    pub lambda: f64,
}

impl BargmannForm {
    pub fn new(theta: f64, lambda: f64) -> Result<Self> {
        check_finite(theta, "theta")?;
        check_finite(lambda, "lambda")?;
        Ok(BargmannForm { theta, lambda })
    }

    /// Closed-form matrix entries.
    pub fn matrix(&self) -> Result<Mat2> {
        let (ch, sh) = (cosh(self.lambda), sinh(self.lambda));
        let (s, c) = (sin(self.theta), cos(self.theta));
        Mat2::from_closed_form(
            ch * c,
            -sh - ch * s,
            -sh + ch * s,
            ch * c,
            fabs(self.lambda),
        )
    }

    /// The three-factor product `rot2(theta) squeeze2(-2 lambda) rot2(theta)`.
    pub fn recompose(&self) -> Result<Mat2> {
        let r = rot2(self.theta)?;
        Ok(r * squeeze2(-2.0 * self.lambda)? * r)
    }

    pub fn iwasawa_gap(&self) -> f64 {
        iwasawa_gap(self)
    }

    pub fn to_wigner(&self, tol: f64) -> Result<WignerForm> {
        bargmann_to_wigner(self, tol)
    }
}

/// Reads `(theta, lambda)` off an equi-diagonal matrix:
/// `sinh lambda = -(b + c)/2`, `cosh lambda sin theta = (c - b)/2`,
/// `cosh lambda cos theta = a`.
pub fn bargmann_decompose(e: &Mat2) -> Result<BargmannForm> {
    check_equidiagonal(e)?;
    let a = e.trace() / 2.0;
    let lambda = asinh(-(e.b() + e.c()) / 2.0);
    let theta = atan2((e.c() - e.b()) / 2.0, a);
    BargmannForm::new(theta, lambda)
}

/// `epsilon = cosh(lambda) sin(theta) - sinh(lambda)`, the lower-left entry
/// of the Bargmann matrix. Zero exactly on the triangular (Iwasawa) form.
pub fn iwasawa_gap(bf: &BargmannForm) -> f64 {
    cosh(bf.lambda) * sin(bf.theta) - sinh(bf.lambda)
}

/// Wigner parameters straight from `(theta, lambda)`.
///
/// With `a = cosh l cos t`:
///
/// * `a < 1`: `cos phi = a`,
///   `e^{2 eta} = (sin t + tanh l) / (sin t - tanh l)`;
/// * `a > 1`: `cosh chi = a`,
///   `e^{2 eta} = (tanh l + sin t) / (tanh l - sin t)`;
/// * `a = 1`: parabolic with `gamma = sinh l + cosh l sin t`.
///
/// For `a <= -1` the form `(theta + pi, -lambda)` describes the negated
/// matrix and the result carries `negative = true`.
pub fn bargmann_to_wigner(bf: &BargmannForm, tol: f64) -> Result<WignerForm> {
    let a = cosh(bf.lambda) * cos(bf.theta);
    let excess = fabs(2.0 * a) - 2.0;
    if a < 0.0 && excess >= -tol {
        let mut w = bargmann_to_wigner(&BargmannForm::new(bf.theta + PI, -bf.lambda)?, tol)?;
        w.negative = true;
        return Ok(w);
    }
    let kind = if excess < -tol {
        ClassKind::Elliptic
    } else if excess > tol {
        ClassKind::Hyperbolic
    } else {
        ClassKind::Parabolic
    };

    let (ch, sh, th) = (cosh(bf.lambda), sinh(bf.lambda), tanh(bf.lambda));
    let s = sin(bf.theta);
    // lower-left entry (epsilon) and minus the upper-right entry
    let lower = ch * s - sh;
    let minus_upper = ch * s + sh;

    match kind {
        ClassKind::Elliptic => {
            let radicand = lower * minus_upper;
            let ratio = (s + th) / (s - th);
            if !(radicand > 0.0 && ratio > 0.0) {
                return Err(Error::Degenerate(
                    "elliptic Bargmann radicand is not positive",
                ));
            }
            let sin_phi = sqrt(radicand).copysign(lower);
            Ok(WignerForm::new(
                WignerCore::Elliptic {
                    phi: atan2(sin_phi, a),
                },
                0.5 * log(ratio),
            ))
        }
        ClassKind::Hyperbolic => {
            let radicand = -lower * minus_upper;
            let ratio = (th + s) / (th - s);
            if !(radicand > 0.0 && ratio > 0.0) {
                return Err(Error::Degenerate(
                    "hyperbolic Bargmann radicand is not positive",
                ));
            }
            let sinh_chi = sqrt(radicand).copysign(minus_upper);
            Ok(WignerForm::new(
                WignerCore::Hyperbolic {
                    chi: asinh(sinh_chi),
                },
                0.5 * log(ratio),
            ))
        }
        ClassKind::Parabolic => {
            if fabs(lower) <= fabs(minus_upper) {
                Ok(WignerForm::new(
                    WignerCore::Parabolic { gamma: minus_upper },
                    0.0,
                ))
            } else {
                let mut w = WignerForm::new(WignerCore::Parabolic { gamma: lower }, 0.0);
                w.flipped = true;
                Ok(w)
            }
        }
    }
}
