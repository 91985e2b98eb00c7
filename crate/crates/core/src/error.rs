use thiserror::Error;

use crate::h4strata::SymmetryClass;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Entry pair `(row, col)` is 1-based, as in Voigt notation.
    #[error("matrix is not symmetric: entry ({row},{col}) = {upper} but ({col},{row}) = {lower}")]
    Asymmetric {
        row: usize,
        col: usize,
        upper: f64,
        lower: f64,
    },

    #[error("not a proper rotation: |g^T g - I| = {orthogonality:.3e}, det = {determinant}")]
    InvalidRotation {
        orthogonality: f64,
        determinant: f64,
    },

    #[error("second-order part is not traceless (trace {trace:.3e}, norm {norm:.3e})")]
    NotTraceless { trace: f64, norm: f64 },

    #[error("fourth-order part is not harmonic (defect {defect:.3e})")]
    NotHarmonic { defect: f64 },

    #[error("D is numerically zero; normalization undefined")]
    ZeroHarmonic,

    #[error("normal vector must be nonzero")]
    InvalidNormal,

    #[error("{0}")]
    NoNormalForm(String),

    #[error("degenerate parameters: the generated tensor would be {actual}, not {requested}")]
    Degenerate {
        requested: SymmetryClass,
        actual: SymmetryClass,
    },

    #[error("invalid parameters for {class}: {reason}")]
    InvalidParameters {
        class: SymmetryClass,
        reason: String,
    },

    #[error("unknown subgroup `{0}`")]
    UnknownSubgroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
