use libm::{asinh, atan2, cos, cosh, exp, fabs, log, sin, sinh, sqrt};

use super::{check_equidiagonal, classify, ClassKind};
use crate::error::{Error, Result};
use crate::mat::{boost2, rot2, shear2, squeeze2, Mat2, MAX_EXP};

/// The core matrix `W(tau)`.
///
/// * `Elliptic { phi }` is `[[cos phi, -sin phi], [sin phi, cos phi]]`, i.e. `rot2(2 phi)`.
/// * `Hyperbolic { chi }` is `[[cosh chi, -sinh chi], [-sinh chi, cosh chi]]`, i.e. `squeeze2(-2 chi)`.
/// * `Parabolic { gamma }` is `[[1, -gamma], [0, 1]]`, i.e. `shear2(gamma)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WignerCore {
    Elliptic { phi: f64 },
    Hyperbolic { chi: f64 },
    Parabolic { gamma: f64 },
}

impl WignerCore {
    pub fn kind(&self) -> ClassKind {
        match self {
            WignerCore::Elliptic { .. } => ClassKind::Elliptic,
            WignerCore::Hyperbolic { .. } => ClassKind::Hyperbolic,
            WignerCore::Parabolic { .. } => ClassKind::Parabolic,
        }
    }

    /// `phi`, `chi` or `gamma`.
    pub fn parameter(&self) -> f64 {
        match *self {
            WignerCore::Elliptic { phi } => phi,
            WignerCore::Hyperbolic { chi } => chi,
            WignerCore::Parabolic { gamma } => gamma,
        }
    }

    /// `W(tau)^n = W(n tau)`.
    pub fn scaled(&self, n: f64) -> WignerCore {
        match *self {
            WignerCore::Elliptic { phi } => WignerCore::Elliptic { phi: n * phi },
            WignerCore::Hyperbolic { chi } => WignerCore::Hyperbolic { chi: n * chi },
            WignerCore::Parabolic { gamma } => WignerCore::Parabolic { gamma: n * gamma },
        }
    }

    pub fn matrix(&self) -> Result<Mat2> {
        match *self {
            WignerCore::Elliptic { phi } => rot2(2.0 * phi),
            WignerCore::Hyperbolic { chi } => squeeze2(-2.0 * chi),
            WignerCore::Parabolic { gamma } => shear2(gamma),
        }
    }
}

/// `B(eta) W(tau) B(-eta)`, optionally negated or conjugated.
///
/// `negative` marks a matrix with `trace <= -2` stored as `-(B W B^-1)`.
/// `flipped` marks a lower-triangular parabolic matrix, stored as
/// `rot2(-pi) (B W B^-1) rot2(pi)`. Parabolic forms always use the
/// `eta = 0` gauge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WignerForm {
    pub core: WignerCore,
    pub eta: f64,
    pub negative: bool,
    pub flipped: bool,
}

impl WignerForm {
    pub fn new(core: WignerCore, eta: f64) -> Self {
        WignerForm {
            core,
            eta,
            negative: false,
            flipped: false,
        }
    }

    pub fn kind(&self) -> ClassKind {
        self.core.kind()
    }

    /// The three factors `B(eta)`, `W(tau)`, `B(-eta)`.
    pub fn factors(&self) -> Result<[Mat2; 3]> {
        Ok([boost2(self.eta)?, self.core.matrix()?, boost2(-self.eta)?])
    }

    /// Closed-form entries of the sandwich, with the flags applied.
    pub fn recompose(&self) -> Result<Mat2> {
        let (up, down) = (exp(self.eta), exp(-self.eta));
        let (a, b, c, exponent) = match self.core {
            WignerCore::Elliptic { phi } => {
                let s = sin(phi);
                (cos(phi), -up * s, down * s, fabs(self.eta))
            }
            WignerCore::Hyperbolic { chi } => {
                let s = sinh(chi);
                (cosh(chi), -up * s, -down * s, fabs(self.eta) + fabs(chi))
            }
            WignerCore::Parabolic { gamma } => (1.0, -gamma * up, 0.0, fabs(self.eta)),
        };
        let (mut a, mut b, mut c, mut d) = (a, b, c, a);
        if self.flipped {
            // rot2(-pi) [[a, b], [c, d]] rot2(pi) = [[d, -c], [-b, a]]
            (a, b, c, d) = (d, -c, -b, a);
        }
        if self.negative {
            (a, b, c, d) = (-a, -b, -c, -d);
        }
        Mat2::from_closed_form(a, b, c, d, exponent)
    }

    /// The `n`-th power, `B(eta) W(n tau) B(-eta)` with the flags applied.
    pub fn power(&self, n: u64) -> Result<Mat2> {
        let n_f = n as f64;
        if let WignerCore::Hyperbolic { chi } = self.core {
            let exponent = n_f * fabs(chi) + fabs(self.eta);
            if exponent > MAX_EXP {
                return Err(Error::Overflow { exponent });
            }
        }
        let w = WignerForm {
            core: self.core.scaled(n_f),
            eta: self.eta,
            negative: self.negative && n % 2 == 1,
            flipped: self.flipped,
        };
        w.recompose()
    }
}

/// Wigner decomposition of an equi-diagonal matrix.
///
/// * elliptic: `cos phi = a`, `e^{2 eta} = -b/c`, sign of `phi` from `c`;
/// * hyperbolic: `cosh chi = a`, `e^{2 eta} = b/c`, `sinh chi = -b e^{-eta}`;
/// * parabolic: `eta = 0`, `gamma = -b` (or `gamma = c`, flipped, when the
///   lower entry is the larger one).
pub fn wigner_decompose(e: &Mat2, tol: f64) -> Result<WignerForm> {
    check_equidiagonal(e)?;
    let class = classify(e, tol);
    let sign = if class.negative_trace { -1.0 } else { 1.0 };
    let a = sign * e.trace() / 2.0;
    let (b, c) = (sign * e.b(), sign * e.c());

    let mut form = match class.kind {
        ClassKind::Elliptic => {
            let bc = b * c;
            if bc >= 0.0 {
                return Err(Error::Degenerate("elliptic matrix with b*c >= 0"));
            }
            let eta = 0.5 * (log(fabs(b)) - log(fabs(c)));
            let sin_phi = sqrt(-bc).copysign(c);
            WignerForm::new(
                WignerCore::Elliptic {
                    phi: atan2(sin_phi, a),
                },
                eta,
            )
        }
        ClassKind::Hyperbolic => {
            let bc = b * c;
            if bc <= 0.0 {
                return Err(Error::Degenerate("hyperbolic matrix with b*c <= 0"));
            }
            let eta = 0.5 * (log(fabs(b)) - log(fabs(c)));
            let sinh_chi = -sqrt(bc).copysign(b);
            WignerForm::new(
                WignerCore::Hyperbolic {
                    chi: asinh(sinh_chi),
                },
                eta,
            )
        }
        ClassKind::Parabolic => {
            if fabs(c) <= fabs(b) {
                WignerForm::new(WignerCore::Parabolic { gamma: -b }, 0.0)
            } else {
                let mut w = WignerForm::new(WignerCore::Parabolic { gamma: c }, 0.0);
                w.flipped = true;
                w
            }
        }
    };
    form.negative = class.negative_trace;
    Ok(form)
}

pub fn wigner_recompose(w: &WignerForm) -> Result<Mat2> {
    w.recompose()
}
