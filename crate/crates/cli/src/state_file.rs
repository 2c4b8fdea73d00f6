//! JSON state files:
//!
//! ```json
//! {"dims": [2, 2, 2], "amplitudes": [[0.7071, 0.0], ...], "label": "ghz"}
//! ```
//!
//! Amplitudes are `[re, im]` pairs in flat order, last index fastest.

use std::fs;
use std::path::Path;

use hosvd3::{Complex64, ComplexTensor};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub amplitudes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StateFile {
    pub fn from_tensor(t: &ComplexTensor, label: Option<String>) -> Self {
        Self {
            dims: t.dims().to_vec(),
            amplitudes: pairs(t.elements()),
            label,
        }
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let f: StateFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("state file: {e}")))?;
        f.validate()?;
        Ok(f)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn validate(&self) -> CliResult<()> {
        let expected: usize = self.dims.iter().product();
        if self.dims.is_empty() || expected == 0 {
            return Err(CliError::Input(format!("invalid dims {:?}", self.dims)));
        }
        if self.amplitudes.len() != expected {
            return Err(CliError::Input(format!(
                "dims {:?} need {expected} amplitudes, got {}",
                self.dims,
                self.amplitudes.len()
            )));
        }
        if self.amplitudes.iter().flatten().any(|x| !x.is_finite()) {
            return Err(CliError::Input("amplitudes must be finite".into()));
        }
        Ok(())
    }

    pub fn tensor(&self) -> CliResult<ComplexTensor> {
        Ok(ComplexTensor::new(&self.dims, &complexes(&self.amplitudes))?)
    }
}

pub fn pairs(z: &[Complex64]) -> Vec<[f64; 2]> {
    z.iter().map(|z| [z.re, z.im]).collect()
}

pub fn complexes(p: &[[f64; 2]]) -> Vec<Complex64> {
    p.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}
