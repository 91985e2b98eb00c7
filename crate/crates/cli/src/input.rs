use std::fmt;
use std::io::Read;
use std::path::Path;

use elastic_symmetry::tencore::{KelvinMatrix, Mat6};
use elastic_symmetry::ElasticityTensor;
use serde::{Deserialize, Serialize};

/// Relative asymmetry accepted in input matrices.
pub const SYMMETRY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFormat {
    #[default]
    Voigt,
    /// Shear rows and columns carry the sqrt(2) / 2 weights.
    Kelvin,
}

/// One stiffness matrix as it appears in an input file. Unknown keys (such as
/// the provenance block written by `generate`) are ignored.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<MatrixFormat>,
    /// 36 numbers, row major.
    pub matrix: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
}

#[derive(Debug)]
pub struct InputError {
    pub source: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.source, self.message)
    }
}

impl InputRecord {
    pub fn tensor(&self, default_format: MatrixFormat) -> Result<ElasticityTensor, String> {
        if self.matrix.len() != 36 {
            return Err(format!(
                "matrix has {} entries, expected 36",
                self.matrix.len()
            ));
        }
        if let Some(i) = self.matrix.iter().position(|x| !x.is_finite()) {
            return Err(format!("entry ({},{}) is not finite", i / 6 + 1, i % 6 + 1));
        }
        let m = Mat6::from_row_slice(&self.matrix);
        let parsed = match self.format.unwrap_or(default_format) {
            MatrixFormat::Voigt => ElasticityTensor::from_voigt(&m, SYMMETRY_TOL),
            MatrixFormat::Kelvin => {
                KelvinMatrix::new(m, SYMMETRY_TOL).map(|k| ElasticityTensor::from_kelvin(&k))
            }
        };
        parsed.map_err(|e| e.to_string())
    }
}

/// Reads a JSON array of records from a file, or from stdin for `-`.
pub fn read_records(path: &str) -> Result<Vec<InputRecord>, InputError> {
    let fail = |message: String| InputError {
        source: path.to_string(),
        message,
    };
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| fail(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(|e| fail(e.to_string()))?
    };
    serde_json::from_str(&text).map_err(|e| fail(format!("malformed input: {e}")))
}
