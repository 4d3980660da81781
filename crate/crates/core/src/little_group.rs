//! Lorentz lifts and little groups.
//!
//! A unimodular real 2x2 matrix `m` acts on the symmetric matrix
//! `X = [[t + z, x], [x, t - z]]` by `X -> m X m^T`, which preserves
//! `det X = t^2 - z^2 - x^2`. [`lift`] records that action as a 4x4 matrix
//! on `(x, y, z, t)` with `y` untouched.

use alloc::vec::Vec;

use libm::{asinh, atanh, exp, sqrt};

use crate::decompose::{WignerCore, WignerForm};
use crate::error::{Error, Result};
use crate::mat::{check_finite, gauge4, shear2, FourVector, Mat2, Mat4};

/// Relative tolerance for the fixed-momentum contract.
const INVARIANCE_TOL: f64 = 1e-10;

pub fn lift(m: &Mat2) -> Mat4 {
    let act = |x: f64, z: f64, t: f64| -> [f64; 3] {
        let (p, q, r) = (t + z, x, t - z);
        // m [[p, q], [q, r]] m^T
        let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
        let u11 = a * (a * p + b * q) + b * (a * q + b * r);
        let u12 = c * (a * p + b * q) + d * (a * q + b * r);
        let u22 = c * (c * p + d * q) + d * (c * q + d * r);
        [u12, (u11 - u22) / 2.0, (u11 + u22) / 2.0]
    };
    let cols = [act(1.0, 0.0, 0.0), act(0.0, 1.0, 0.0), act(0.0, 0.0, 1.0)];
    let mut rows = [[0.0; 4]; 4];
    rows[1][1] = 1.0;
    for (k, j) in [0usize, 2, 3].into_iter().enumerate() {
        rows[0][j] = cols[k][0];
        rows[2][j] = cols[k][1];
        rows[3][j] = cols[k][2];
    }
    Mat4::raw(rows)
}

/// Momentum along z. `Massive` has `E = sqrt(p^2 + m^2)`; `Spacelike`
/// carries its energy explicitly with `0 <= E < p`; `Massless` has `E = p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MomentumKind {
    Massive { mass: f64, momentum: f64 },
    Spacelike { momentum: f64, energy: f64 },
    Massless { momentum: f64 },
}

impl MomentumKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MomentumKind::Massive { mass, momentum } => {
                check_finite(mass, "mass")?;
                check_finite(momentum, "momentum")?;
                if mass <= 0.0 {
                    return Err(Error::InvalidMomentum("mass must be positive"));
                }
            }
            MomentumKind::Spacelike { momentum, energy } => {
                check_finite(momentum, "momentum")?;
                check_finite(energy, "energy")?;
                if !(0.0 <= energy && energy < momentum) {
                    return Err(Error::InvalidMomentum(
                        "space-like momentum needs 0 <= E < p",
                    ));
                }
            }
            MomentumKind::Massless { momentum } => {
                check_finite(momentum, "momentum")?;
                if momentum <= 0.0 {
                    return Err(Error::InvalidMomentum("massless momentum must be positive"));
                }
            }
        }
        Ok(())
    }

    /// `(0, 0, p, E)`.
    pub fn momentum(&self) -> FourVector {
        match *self {
            MomentumKind::Massive { mass, momentum } => {
                FourVector::new(0.0, 0.0, momentum, sqrt(momentum * momentum + mass * mass))
            }
            MomentumKind::Spacelike { momentum, energy } => {
                FourVector::new(0.0, 0.0, momentum, energy)
            }
            MomentumKind::Massless { momentum } => FourVector::new(0.0, 0.0, momentum, momentum),
        }
    }
}

/// Boost along z from `standard` to the momentum. Massless momenta have no
/// such frame: `eta` is 0, `standard` is the light-like momentum itself and
/// `no_rest_frame` is set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RestFrame {
    pub eta: f64,
    pub standard: FourVector,
    pub no_rest_frame: bool,
}

pub fn boost_to_frame(kind: &MomentumKind) -> Result<RestFrame> {
    kind.validate()?;
    Ok(match *kind {
        MomentumKind::Massive { mass, momentum } => RestFrame {
            // tanh(eta) = p / E
            eta: asinh(momentum / mass),
            standard: FourVector::new(0.0, 0.0, 0.0, mass),
            no_rest_frame: false,
        },
        MomentumKind::Spacelike { momentum, energy } => RestFrame {
            eta: atanh(energy / momentum),
            standard: FourVector::new(
                0.0,
                0.0,
                sqrt((momentum - energy) * (momentum + energy)),
                0.0,
            ),
            no_rest_frame: false,
        },
        MomentumKind::Massless { momentum } => RestFrame {
            eta: 0.0,
            standard: FourVector::new(0.0, 0.0, momentum, momentum),
            no_rest_frame: true,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneratorParams {
    /// `B(eta) R(2 phi) B(-eta)`
    Rotation { eta: f64, phi: f64 },
    /// `B(eta) S(-2 chi) B(-eta)`
    Squeeze { eta: f64, chi: f64 },
    /// the gauge matrix with parameter `gamma`
    Gauge { gamma: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LittleGroupElement {
    pub mat4: Mat4,
    pub fixed_momentum: FourVector,
    pub generator_params: GeneratorParams,
    /// The 2x2 matrix whose lift is `mat4`.
    pub core: Mat2,
}

impl LittleGroupElement {
    /// `|mat4 p - p|_inf / max(1, |p|_inf)`.
    pub fn residual(&self) -> f64 {
        let p = &self.fixed_momentum;
        self.mat4.apply(p).max_abs_diff(p) / p.max_abs().max(1.0)
    }
}

/// The element of the little group of `kind` with parameter `param`
/// (`phi`, `chi` or `gamma`).
pub fn little_group_element(kind: &MomentumKind, param: f64) -> Result<LittleGroupElement> {
    check_finite(param, "little-group parameter")?;
    let frame = boost_to_frame(kind)?;
    let eta = frame.eta;
    // closed-form cores keep the entries free of boost cancellations
    let (core, generator_params) = match kind {
        MomentumKind::Massive { .. } => (
            WignerForm::new(WignerCore::Elliptic { phi: param }, eta).recompose()?,
            GeneratorParams::Rotation { eta, phi: param },
        ),
        MomentumKind::Spacelike { .. } => (
            WignerForm::new(WignerCore::Hyperbolic { chi: param }, eta).recompose()?,
            GeneratorParams::Squeeze { eta, chi: param },
        ),
        MomentumKind::Massless { .. } => (
            shear2(-2.0 * param)?,
            GeneratorParams::Gauge { gamma: param },
        ),
    };
    let mat4 = match kind {
        MomentumKind::Massless { .. } => gauge4(param)?,
        _ => lift(&core),
    };
    let element = LittleGroupElement {
        mat4,
        fixed_momentum: kind.momentum(),
        generator_params,
        core,
    };
    let residual = element.residual();
    if residual > INVARIANCE_TOL {
        return Err(Error::Degenerate("little-group element moved its momentum"));
    }
    Ok(element)
}

/// `|e v - v|_inf <= tol max(1, |v|_inf)`.
pub fn preserves(e: &Mat4, v: &FourVector, tol: f64) -> bool {
    e.apply(v).max_abs_diff(v) <= tol * v.max_abs().max(1.0)
}

/// One rapidity of a contraction sweep.
///
/// `elliptic` is the 2x2 core of the massive element (mass 1, rapidity
/// `eta`) with angle `phi e^{-eta}`; `hyperbolic` the core of the
/// space-like element with `chi = phi e^{-eta}`. Both tend to `shear2(phi)`
/// as `eta -> infinity`. `epsilon_*` are the lower-left entries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContractionStep {
    pub eta: f64,
    pub elliptic: Mat2,
    pub hyperbolic: Mat2,
    pub distance_elliptic: f64,
    pub distance_hyperbolic: f64,
    pub epsilon_elliptic: f64,
    pub epsilon_hyperbolic: f64,
}

/// Distances of both cores to `shear2(phi)` along a schedule of
/// non-negative rapidities. `f64::INFINITY` stands for the limit itself.
pub fn contraction_demo(eta_schedule: &[f64], phi: f64) -> Result<Vec<ContractionStep>> {
    check_finite(phi, "phi")?;
    if eta_schedule.is_empty() {
        return Err(Error::InvalidArgument("empty rapidity schedule"));
    }
    let limit = shear2(phi)?;
    eta_schedule
        .iter()
        .map(|&eta| {
            if eta.is_nan() || eta < 0.0 {
                return Err(Error::InvalidArgument(
                    "schedule rapidities must be non-negative",
                ));
            }
            let (elliptic, hyperbolic) = if eta == f64::INFINITY {
                (limit, limit)
            } else {
                let angle = phi * exp(-eta);
                let massive = MomentumKind::Massive {
                    mass: 1.0,
                    momentum: libm::sinh(eta),
                };
                let e = little_group_element(&massive, angle)?.core;
                // E/p = tanh(eta) rounds to 1 long before eta gets large, so the
                // space-like core is built from eta directly
                let h = WignerForm::new(WignerCore::Hyperbolic { chi: angle }, eta).recompose()?;
                (e, h)
            };
            Ok(ContractionStep {
                eta,
                elliptic,
                hyperbolic,
                distance_elliptic: elliptic.max_abs_diff(&limit),
                distance_hyperbolic: hyperbolic.max_abs_diff(&limit),
                epsilon_elliptic: elliptic.c(),
                epsilon_hyperbolic: hyperbolic.c(),
            })
        })
        .collect()
}
