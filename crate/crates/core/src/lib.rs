//! Unimodular 2x2 transfer matrices, their conjugacy classes, and the
//! Wigner, Bargmann and Iwasawa decompositions.
//!
//! The crate is `no_std` (it needs `alloc` only for sampled curves and
//! contraction reports). Transcendental functions come from [`libm`] so
//! results are bit-identical across platforms and builds.
//!
//! Layout:
//!
//! * [`mat`] holds the value types ([`Mat2`], [`CMat2`], [`Mat4`],
//!   [`FourVector`]) and the one-parameter generators.
//! * [`decompose`] classifies matrices by trace and factors them.
//! * [`multilayer`] builds the one-cycle matrix of a two-medium periodic
//!   stack and propagates it over many periods.
//! * [`little_group`] lifts 2x2 elements to Lorentz transformations and
//!   builds momentum-preserving elements.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decompose;
mod error;
pub mod little_group;
pub mod mat;
pub mod multilayer;

pub use decompose::{
    bargmann_decompose, bargmann_to_wigner, classify, equidiagonalize, iwasawa_gap, power,
    power_with_tol, transition_curve, transition_curve_with_tol, transition_decompose,
    transition_matrix, wigner_decompose, wigner_recompose, BargmannForm, ClassKind, EpsilonSign,
    Equidiagonal, MatrixClass, TransitionForm, TransitionSample, WignerCore, WignerForm,
    DEFAULT_CLASS_TOL, DEFAULT_TRANSITION_WINDOW,
};
pub use error::{Error, Result};
pub use little_group::{
    boost_to_frame, contraction_demo, lift, little_group_element, preserves, ContractionStep,
    GeneratorParams, LittleGroupElement, MomentumKind, RestFrame,
};
pub use mat::{
    boost2, boost4_x, boost4_z, gauge4, rot2, rot4_y, shear2, squeeze2, CMat2, FourVector, Mat2,
    Mat4,
};
pub use multilayer::{
    boundary_matrix, conjugation_matrix, cycle_bargmann, cycle_complex, cycle_real, inner_block,
    phase_matrix, realify, transfer, transfer_with_tol, Band, CycleBargmann, CycleReport,
    LayerStack,
};
