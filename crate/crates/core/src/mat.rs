//! Value types and one-parameter generators.
//!
//! All 2x2 generators use the half-angle convention: `rot2(phi)` has
//! entries `cos(phi/2)`, `sin(phi/2)` and lifts to a rotation by the full
//! angle `phi` about the y axis. Four-vectors are ordered `(x, y, z, t)`
//! with metric `diag(1, 1, 1, -1)`.

use core::ops::{Mul, Neg};

use libm::{cos, cosh, exp, fabs, sin, sinh};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Determinant tolerance applied at construction, relative to entry scale.
pub const DET_TOL: f64 = 1e-12;
/// Determinant drift tolerated on products before it counts as a fault.
pub const DRIFT_TOL: f64 = 1e-9;
/// Metric-preservation tolerance for [`Mat4`], relative to `|M|^2`.
pub const METRIC_TOL: f64 = 1e-10;
/// Largest argument accepted by `exp`/`cosh` before the result overflows.
pub(crate) const MAX_EXP: f64 = 709.0;

pub(crate) fn check_finite(x: f64, what: &'static str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

fn check_exponent(exponent: f64) -> Result<()> {
    if exponent > MAX_EXP {
        Err(Error::Overflow { exponent })
    } else {
        Ok(())
    }
}

/// Real 2x2 matrix with unit determinant, row-major `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds a matrix, rejecting non-finite entries and `|ad - bc - 1|`
    /// above [`DET_TOL`] (scaled by `max(1, |ad| + |bc|)`).
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::with_tolerance(a, b, c, d, DET_TOL)
    }

    /// Like [`Mat2::new`] with a caller-chosen determinant tolerance.
    pub fn with_tolerance(a: f64, b: f64, c: f64, d: f64, tol: f64) -> Result<Self> {
        for x in [a, b, c, d] {
            check_finite(x, "matrix entry")?;
        }
        let m = Mat2 { a, b, c, d };
        if m.det_deviation() > tol {
            return Err(Error::NotUnimodular { det: m.det() });
        }
        Ok(m)
    }

    pub(crate) const fn raw(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Entries from a closed form that is unimodular by construction; only
    /// finiteness is checked.
    pub(crate) fn from_closed_form(a: f64, b: f64, c: f64, d: f64, exponent: f64) -> Result<Self> {
        if [a, b, c, d].iter().all(|x| x.is_finite()) {
            let m = Mat2 { a, b, c, d };
            debug_assert!(m.det_deviation() <= DRIFT_TOL, "closed form drifted: {m:?}");
            Ok(m)
        } else {
            Err(Error::Overflow { exponent })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// `|det - 1|` divided by the magnitude of the products forming it.
    pub fn det_deviation(&self) -> f64 {
        let scale = fabs(self.a * self.d) + fabs(self.b * self.c);
        fabs(self.det() - 1.0) / scale.max(1.0)
    }

    /// Exact inverse `[[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> Mat2 {
        Mat2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    /// `self * other`.
    pub fn compose(&self, other: &Mat2) -> Mat2 {
        *self * *other
    }

    /// `r * self * r^-1`.
    pub fn conjugate_by(&self, r: &Mat2) -> Mat2 {
        *r * *self * r.inverse()
    }

    pub fn max_abs(&self) -> f64 {
        fabs(self.a)
            .max(fabs(self.b))
            .max(fabs(self.c))
            .max(fabs(self.d))
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        fabs(self.a - other.a)
            .max(fabs(self.b - other.b))
            .max(fabs(self.c - other.c))
            .max(fabs(self.d - other.d))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        let m = Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        };
        debug_assert!(
            !m.det().is_finite() || m.det_deviation() <= DRIFT_TOL,
            "determinant drift in product: {m:?}"
        );
        m
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

/// Rotation in the half-angle convention:
/// `[[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]]`.
pub fn rot2(phi: f64) -> Result<Mat2> {
    check_finite(phi, "rotation angle")?;
    let (s, c) = (sin(phi / 2.0), cos(phi / 2.0));
    Ok(Mat2::raw(c, -s, s, c))
}

/// Diagonal squeeze `diag(e^{eta/2}, e^{-eta/2})`.
pub fn boost2(eta: f64) -> Result<Mat2> {
    check_finite(eta, "rapidity")?;
    check_exponent(fabs(eta) / 2.0)?;
    Ok(Mat2::raw(exp(eta / 2.0), 0.0, 0.0, exp(-eta / 2.0)))
}

/// Symmetric squeeze `[[cosh(chi/2), sinh(chi/2)], [sinh(chi/2), cosh(chi/2)]]`.
pub fn squeeze2(chi: f64) -> Result<Mat2> {
    check_finite(chi, "rapidity")?;
    check_exponent(fabs(chi) / 2.0)?;
    let (s, c) = (sinh(chi / 2.0), cosh(chi / 2.0));
    Ok(Mat2::raw(c, s, s, c))
}

/// Upper-triangular shear `[[1, -gamma], [0, 1]]`.
pub fn shear2(gamma: f64) -> Result<Mat2> {
    check_finite(gamma, "shear parameter")?;
    Ok(Mat2::raw(1.0, -gamma, 0.0, 1.0))
}

/// Complex 2x2 matrix with unit determinant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat2 {
    m: [Complex64; 4],
}

impl CMat2 {
    pub const IDENTITY: CMat2 = CMat2 {
        m: [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ],
    };

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        for z in [a, b, c, d] {
            check_finite(z.re, "matrix entry")?;
            check_finite(z.im, "matrix entry")?;
        }
        let m = CMat2 { m: [a, b, c, d] };
        let deviation = m.det_deviation();
        if deviation > DET_TOL {
            return Err(Error::NotUnimodularComplex { deviation });
        }
        Ok(m)
    }

    pub(crate) const fn raw(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        CMat2 { m: [a, b, c, d] }
    }

    /// Row-major entries `[a, b, c, d]`.
    pub fn entries(&self) -> [Complex64; 4] {
        self.m
    }

    pub fn det(&self) -> Complex64 {
        self.m[0] * self.m[3] - self.m[1] * self.m[2]
    }

    fn det_deviation(&self) -> f64 {
        let scale = (self.m[0] * self.m[3]).norm() + (self.m[1] * self.m[2]).norm();
        (self.det() - 1.0).norm() / scale.max(1.0)
    }

    pub fn inverse(&self) -> CMat2 {
        let [a, b, c, d] = self.m;
        CMat2 { m: [d, -b, -c, a] }
    }

    /// Largest `|Im|` over the four entries.
    pub fn max_imag(&self) -> f64 {
        self.m.iter().fold(0.0, |acc, z| acc.max(fabs(z.im)))
    }

    pub fn max_abs_diff(&self, other: &CMat2) -> f64 {
        self.m
            .iter()
            .zip(other.m.iter())
            .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
    }

    /// Drops the imaginary parts after checking they are below `tol`
    /// (relative to the largest entry).
    pub fn to_real(&self, tol: f64) -> Result<Mat2> {
        let scale = self.m.iter().fold(1.0_f64, |acc, z| acc.max(z.norm()));
        let residue = self.max_imag();
        if residue > tol * scale {
            return Err(Error::ImaginaryResidue { residue });
        }
        let [a, b, c, d] = self.m;
        Mat2::with_tolerance(a.re, b.re, c.re, d.re, DRIFT_TOL)
    }
}

impl Mul for CMat2 {
    type Output = CMat2;

    fn mul(self, o: CMat2) -> CMat2 {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = o.m;
        CMat2 {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
    }
}

/// Minkowski four-vector `(x, y, z, t)`; for momenta `(px, py, pz, E)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl FourVector {
    pub const fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector { x, y, z, t }
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.x, self.y, self.z, self.t]
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        FourVector::new(v[0], v[1], v[2], v[3])
    }

    /// `x^2 + y^2 + z^2 - t^2`.
    pub fn minkowski_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0, |acc, v| acc.max(fabs(*v)))
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        let (a, b) = (self.to_array(), other.to_array());
        (0..4).fold(0.0, |acc, i| acc.max(fabs(a[i] - b[i])))
    }
}

const METRIC: [f64; 4] = [1.0, 1.0, 1.0, -1.0];

/// Real 4x4 Lorentz matrix acting on `(x, y, z, t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4 {
    rows: [[f64; 4]; 4],
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4 {
        rows: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    /// Checked constructor: entries finite and `M^T g M = g` within
    /// [`METRIC_TOL`] relative to `max(1, |M|^2)`.
    pub fn new(rows: [[f64; 4]; 4]) -> Result<Self> {
        for row in &rows {
            for &x in row {
                check_finite(x, "matrix entry")?;
            }
        }
        let m = Mat4 { rows };
        let residual = m.lorentz_residual();
        if residual > METRIC_TOL {
            return Err(Error::NotLorentz { residual });
        }
        Ok(m)
    }

    pub(crate) const fn raw(rows: [[f64; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    pub fn rows(&self) -> [[f64; 4]; 4] {
        self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    /// `max |(M^T g M - g)_ij| / max(1, max |M_ij|^2)`.
    pub fn lorentz_residual(&self) -> f64 {
        let r = &self.rows;
        let mut worst = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += r[k][i] * METRIC[k] * r[k][j];
                }
                let target = if i == j { METRIC[i] } else { 0.0 };
                worst = worst.max(fabs(s - target));
            }
        }
        let scale = self.max_abs();
        worst / (scale * scale).max(1.0)
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let x = v.to_array();
        let mut out = [0.0; 4];
        for (i, row) in self.rows.iter().enumerate() {
            out[i] = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        }
        FourVector::from_array(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .fold(0.0, |acc, v| acc.max(fabs(*v)))
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .fold(0.0, |acc, (a, b)| acc.max(fabs(a - b)))
    }
}

impl Mul for Mat4 {
    type Output = Mat4;

    fn mul(self, o: Mat4) -> Mat4 {
        let mut rows = [[0.0; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = (0..4).map(|k| self.rows[i][k] * o.rows[k][j]).sum();
            }
        }
        Mat4 { rows }
    }
}

/// Rotation by the full angle `phi` about the y axis.
pub fn rot4_y(phi: f64) -> Result<Mat4> {
    check_finite(phi, "rotation angle")?;
    let (s, c) = (sin(phi), cos(phi));
    Ok(Mat4::raw([
        [c, 0.0, s, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-s, 0.0, c, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))
}

/// Boost with rapidity `eta` along z.
pub fn boost4_z(eta: f64) -> Result<Mat4> {
    check_finite(eta, "rapidity")?;
    check_exponent(fabs(eta))?;
    let (s, c) = (sinh(eta), cosh(eta));
    Ok(Mat4::raw([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, c, s],
        [0.0, 0.0, s, c],
    ]))
}

/// Boost with rapidity `chi` along x.
pub fn boost4_x(chi: f64) -> Result<Mat4> {
    check_finite(chi, "rapidity")?;
    check_exponent(fabs(chi))?;
    let (s, c) = (sinh(chi), cosh(chi));
    Ok(Mat4::raw([
        [c, 0.0, 0.0, s],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [s, 0.0, 0.0, c],
    ]))
}

/// The massless little-group "gauge" matrix, leaving `(0, 0, p, p)` fixed.
pub fn gauge4(gamma: f64) -> Result<Mat4> {
    check_finite(gamma, "gauge parameter")?;
    let g = 2.0 * gamma;
    let g2 = 2.0 * gamma * gamma;
    if !g2.is_finite() {
        return Err(Error::Overflow {
            exponent: libm::log(fabs(g2)),
        });
    }
    Ok(Mat4::raw([
        [1.0, 0.0, -g, g],
        [0.0, 1.0, 0.0, 0.0],
        [g, 0.0, 1.0 - g2, g2],
        [g, 0.0, -g2, 1.0 + g2],
    ]))
}
