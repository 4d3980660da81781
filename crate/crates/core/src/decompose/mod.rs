//! Conjugacy classes and decompositions of unimodular 2x2 matrices.
//!
//! Every matrix is first brought to equi-diagonal form by a rotation
//! ([`equidiagonalize`]). The equi-diagonal matrix is then either written
//! as `B(eta) W(tau) B(-eta)` ([`WignerForm`]), as
//! `R(theta) S(-2 lambda) R(theta)` ([`BargmannForm`]), or, close to the
//! parabolic boundary, as the alpha/beta sandwich of [`TransitionForm`].

mod bargmann;
mod transition;
mod wigner;

use core::f64::consts::{FRAC_PI_2, PI};

use libm::{atan2, fabs};

use crate::error::{Error, Result};
use crate::mat::{rot2, Mat2};

pub use bargmann::{bargmann_decompose, bargmann_to_wigner, iwasawa_gap, BargmannForm};
pub use transition::{
    transition_curve, transition_curve_with_tol, transition_decompose, transition_matrix,
    EpsilonSign, TransitionForm, TransitionSample, DEFAULT_TRANSITION_WINDOW,
};
pub use wigner::{wigner_decompose, wigner_recompose, WignerCore, WignerForm};

/// Band around `|trace| = 2` treated as parabolic.
pub const DEFAULT_CLASS_TOL: f64 = 1e-9;

/// Largest tolerated `|e11 - e22|` (relative) for equi-diagonal input.
pub(crate) const EQUI_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl ClassKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::Elliptic => "Elliptic",
            ClassKind::Parabolic => "Parabolic",
            ClassKind::Hyperbolic => "Hyperbolic",
        }
    }
}

impl core::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Trace class of a matrix.
///
/// The class compares `|trace|` against 2. Matrices with `trace <= -2`
/// (up to tolerance) are the negatives of parabolic or hyperbolic
/// matrices and carry `negative_trace = true`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixClass {
    pub kind: ClassKind,
    pub trace: f64,
    pub negative_trace: bool,
}

pub fn classify(m: &Mat2, tol: f64) -> MatrixClass {
    let trace = m.trace();
    let excess = fabs(trace) - 2.0;
    let kind = if excess < -tol {
        ClassKind::Elliptic
    } else if excess > tol {
        ClassKind::Hyperbolic
    } else {
        ClassKind::Parabolic
    };
    MatrixClass {
        kind,
        trace,
        negative_trace: trace < 0.0 && kind != ClassKind::Elliptic,
    }
}

/// An equi-diagonal matrix `matrix = rot2(alpha) * m * rot2(-alpha)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Equidiagonal {
    pub alpha: f64,
    pub matrix: Mat2,
}

impl Equidiagonal {
    /// Undo the rotation: `rot2(-alpha) * x * rot2(alpha)`.
    pub fn unrotate(&self, x: &Mat2) -> Result<Mat2> {
        Ok(rot2(-self.alpha)? * *x * rot2(self.alpha)?)
    }
}

/// Rotates `m` to equal diagonal entries.
///
/// With `p = (a - d)/2` and `q = (b + c)/2`, conjugation by `rot2(alpha)`
/// sends `p` to `p cos(alpha) - q sin(alpha)`, so the roots are
/// `alpha = atan(p/q) + k pi`. The smallest-magnitude root is returned,
/// `+pi/2` on a tie.
pub fn equidiagonalize(m: &Mat2) -> Result<Equidiagonal> {
    let p = (m.a() - m.d()) / 2.0;
    let q = (m.b() + m.c()) / 2.0;
    let alpha = if p == 0.0 {
        0.0
    } else {
        let mut x = atan2(p, q);
        if x > FRAC_PI_2 {
            x -= PI;
        } else if x <= -FRAC_PI_2 {
            x += PI;
        }
        x
    };
    if alpha == 0.0 {
        return Ok(Equidiagonal { alpha, matrix: *m });
    }
    let r = rot2(alpha)?;
    let e = r * *m * r.inverse();
    let half = m.trace() / 2.0;
    let matrix = Mat2::with_tolerance(half, e.b(), e.c(), half, crate::mat::DRIFT_TOL)?;
    Ok(Equidiagonal { alpha, matrix })
}

pub(crate) fn check_equidiagonal(e: &Mat2) -> Result<()> {
    let difference = fabs(e.a() - e.d());
    let scale = (fabs(e.a()) + fabs(e.d())).max(1.0);
    if difference > EQUI_TOL * scale {
        Err(Error::NotEquidiagonal { difference })
    } else {
        Ok(())
    }
}

/// `m^n` through the Wigner form: `rot2(-alpha) B(eta) W(n tau) B(-eta) rot2(alpha)`.
pub fn power(m: &Mat2, n: u64) -> Result<Mat2> {
    power_with_tol(m, n, DEFAULT_CLASS_TOL)
}

pub fn power_with_tol(m: &Mat2, n: u64, tol: f64) -> Result<Mat2> {
    if n == 0 {
        return Ok(Mat2::IDENTITY);
    }
    let eq = equidiagonalize(m)?;
    let w = wigner_decompose(&eq.matrix, tol)?;
    eq.unrotate(&w.power(n)?)
}
