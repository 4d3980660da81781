//! Periodic two-medium stacks.
//!
//! One cycle starts halfway through medium 2: half a phase in medium 2, the
//! boundary into medium 1, a full phase in medium 1, the boundary back and
//! the second half phase. In the complex (wave amplitude) representation
//! this is `P(phi2/2) B(eta) P(phi1) B(-eta) P(phi2/2)`; conjugation by
//! [`conjugation_matrix`] turns it into the real product
//! `rot2(phi2) [boost2(eta) rot2(2 phi1) boost2(-eta)] rot2(phi2)`.

use libm::{asinh, atan2, cos, cosh, fabs, sin, sinh, sqrt, tanh};
use num_complex::Complex64;

use crate::decompose::{
    classify, power_with_tol, wigner_decompose, BargmannForm, ClassKind, MatrixClass, WignerCore,
    WignerForm, DEFAULT_CLASS_TOL,
};
use crate::error::{Error, Result};
use crate::mat::{check_finite, rot2, CMat2, Mat2, MAX_EXP};

/// Imaginary residue tolerated when converting the complex cycle to real form.
const REALIFY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LayerStack {
    pub phi1: f64,
    pub phi2: f64,
    pub eta: f64,
    pub periods: u64,
}

impl LayerStack {
    pub fn new(phi1: f64, phi2: f64, eta: f64, periods: u64) -> Result<Self> {
        check_finite(phi1, "phi1")?;
        check_finite(phi2, "phi2")?;
        check_finite(eta, "eta")?;
        if fabs(eta) > MAX_EXP {
            return Err(Error::Overflow {
                exponent: fabs(eta),
            });
        }
        Ok(LayerStack {
            phi1,
            phi2,
            eta,
            periods,
        })
    }
}

/// `diag(e^{-i phi}, e^{i phi})`.
pub fn phase_matrix(phi: f64) -> Result<CMat2> {
    check_finite(phi, "phase")?;
    let (s, c) = (sin(phi), cos(phi));
    let zero = Complex64::new(0.0, 0.0);
    Ok(CMat2::raw(
        Complex64::new(c, -s),
        zero,
        zero,
        Complex64::new(c, s),
    ))
}

/// Interface matrix `[[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]]`.
pub fn boundary_matrix(eta: f64) -> Result<CMat2> {
    check_finite(eta, "eta")?;
    if fabs(eta) / 2.0 > MAX_EXP {
        return Err(Error::Overflow {
            exponent: fabs(eta) / 2.0,
        });
    }
    let (s, c) = (
        Complex64::new(sinh(eta / 2.0), 0.0),
        Complex64::new(cosh(eta / 2.0), 0.0),
    );
    Ok(CMat2::raw(c, s, s, c))
}

/// `P(phi2/2) B(eta) P(phi1) B(-eta) P(phi2/2)`.
pub fn cycle_complex(stack: &LayerStack) -> Result<CMat2> {
    let half = phase_matrix(stack.phi2 / 2.0)?;
    Ok(half
        * boundary_matrix(stack.eta)?
        * phase_matrix(stack.phi1)?
        * boundary_matrix(-stack.eta)?
        * half)
}

/// `C = (e^{i pi/4} / sqrt 2) [[1, 1], [i, -i]]`.
pub fn conjugation_matrix() -> CMat2 {
    let k = Complex64::new(0.5, 0.5);
    let i = Complex64::new(0.0, 1.0);
    CMat2::raw(k, k, k * i, -k * i)
}

/// `C m C^-1`, which must come out real.
pub fn realify(m: &CMat2) -> Result<Mat2> {
    let c = conjugation_matrix();
    (c * *m * c.inverse()).to_real(REALIFY_TOL)
}

/// The medium-1 block `boost2(eta) rot2(2 phi1) boost2(-eta)`.
pub fn inner_block(phi1: f64, eta: f64) -> Result<Mat2> {
    WignerForm::new(WignerCore::Elliptic { phi: phi1 }, eta).recompose()
}

/// The real one-cycle matrix built from real factors.
pub fn cycle_real(stack: &LayerStack) -> Result<Mat2> {
    let r = rot2(stack.phi2)?;
    Ok(r * inner_block(stack.phi1, stack.eta)? * r)
}

/// Bargmann parameters of the cycle.
///
/// `theta`, `lambda` describe the inner block; the medium-2 halves add to
/// the outer rotations, so the cycle is `R(theta_star) S(-2 lambda) R(theta_star)`
/// with `theta_star = theta + phi2` in the half-angle convention.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CycleBargmann {
    pub theta: f64,
    pub lambda: f64,
    pub theta_star: f64,
    /// `cosh(eta) sqrt(1 - cos^2(phi1) tanh^2(eta))`
    pub cosh_lambda: f64,
    /// `cos(phi1) / cosh(lambda)`
    pub cos_theta: f64,
}

impl CycleBargmann {
    pub fn form(&self) -> BargmannForm {
        BargmannForm {
            theta: self.theta_star,
            lambda: self.lambda,
        }
    }

    pub fn inner_form(&self) -> BargmannForm {
        BargmannForm {
            theta: self.theta,
            lambda: self.lambda,
        }
    }
}

pub fn cycle_bargmann(stack: &LayerStack) -> Result<CycleBargmann> {
    let (phi1, eta) = (stack.phi1, stack.eta);
    let (c1, s1) = (cos(phi1), sin(phi1));
    let t = tanh(eta);
    let cosh_lambda = cosh(eta) * sqrt(1.0 - c1 * c1 * t * t);
    if !cosh_lambda.is_finite() {
        return Err(Error::Overflow {
            exponent: fabs(eta),
        });
    }
    // sinh(lambda) = sinh(eta) sin(phi1), cosh(lambda) sin(theta) = cosh(eta) sin(phi1)
    let lambda = asinh(sinh(eta) * s1);
    let theta = atan2(cosh(eta) * s1, c1);
    Ok(CycleBargmann {
        theta,
        lambda,
        theta_star: theta + stack.phi2,
        cosh_lambda,
        cos_theta: c1 / cosh_lambda,
    })
}

/// Band character of a periodic stack.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Band {
    PassBand,
    BandEdge,
    StopBand,
}

impl Band {
    pub fn from_class(kind: ClassKind) -> Band {
        match kind {
            ClassKind::Elliptic => Band::PassBand,
            ClassKind::Parabolic => Band::BandEdge,
            ClassKind::Hyperbolic => Band::StopBand,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Band::PassBand => "PassBand",
            Band::BandEdge => "BandEdge",
            Band::StopBand => "StopBand",
        }
    }
}

impl core::fmt::Display for Band {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CycleReport {
    pub stack: LayerStack,
    pub cycle: Mat2,
    pub bargmann: CycleBargmann,
    pub wigner: WignerForm,
    pub class: MatrixClass,
    pub band: Band,
    pub transfer_n: Mat2,
}

pub fn transfer(stack: &LayerStack) -> Result<CycleReport> {
    transfer_with_tol(stack, DEFAULT_CLASS_TOL)
}

/// Cycle, its decompositions and the `N`-period matrix
/// `B(eta*) W(N tau*) B(-eta*)`.
pub fn transfer_with_tol(stack: &LayerStack, tol: f64) -> Result<CycleReport> {
    let cycle = cycle_real(stack)?;
    let bargmann = cycle_bargmann(stack)?;
    let wigner = wigner_decompose(&cycle, tol)?;
    let class = classify(&cycle, tol);
    let transfer_n = power_with_tol(&cycle, stack.periods, tol)?;
    Ok(CycleReport {
        stack: *stack,
        cycle,
        bargmann,
        wigner,
        class,
        band: Band::from_class(class.kind),
        transfer_n,
    })
}
