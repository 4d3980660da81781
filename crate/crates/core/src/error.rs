use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core crate.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A parameter or matrix entry was NaN or infinite.
    NonFinite(&'static str),
    /// `ad - bc` is too far from one.
    NotUnimodular {
        det: f64,
    },
    /// A complex matrix failed the unimodular check; `det` is `|det - 1|`.
    NotUnimodularComplex {
        deviation: f64,
    },
    /// A 4x4 matrix does not preserve the Minkowski metric.
    NotLorentz {
        residual: f64,
    },
    /// Result would overflow `f64`; `exponent` is the natural-log size estimate.
    Overflow {
        exponent: f64,
    },
    /// Diagonal entries differ; the operation needs an equi-diagonal matrix.
    NotEquidiagonal {
        difference: f64,
    },
    /// `|trace - 2|` exceeds the near-parabolic window.
    OutsideWindow {
        distance: f64,
        window: f64,
    },
    /// Complex-to-real conversion left an imaginary part.
    ImaginaryResidue {
        residue: f64,
    },
    /// The construction has no well-defined parameters at this point.
    Degenerate(&'static str),
    InvalidMomentum(&'static str),
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite(what) => write!(f, "non-finite value for {what}"),
            Error::NotUnimodular { det } => {
                write!(f, "matrix is not unimodular: determinant = {det}")
            }
            Error::NotUnimodularComplex { deviation } => {
                write!(
                    f,
                    "complex matrix is not unimodular: |det - 1| = {deviation}"
                )
            }
            Error::NotLorentz { residual } => {
                write!(
                    f,
                    "matrix does not preserve the Minkowski metric (residual {residual})"
                )
            }
            Error::Overflow { exponent } => {
                write!(f, "numeric overflow: magnitude ~ exp({exponent})")
            }
            Error::NotEquidiagonal { difference } => {
                write!(
                    f,
                    "matrix is not equi-diagonal (diagonal difference {difference})"
                )
            }
            Error::OutsideWindow { distance, window } => write!(
                f,
                "matrix is not near-parabolic: |trace - 2| = {distance} exceeds window {window}"
            ),
            Error::ImaginaryResidue { residue } => {
                write!(f, "conjugated matrix has imaginary residue {residue}")
            }
            Error::Degenerate(what) => write!(f, "degenerate case: {what}"),
            Error::InvalidMomentum(what) => write!(f, "invalid momentum: {what}"),
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
        }
    }
}

impl core::error::Error for Error {}
