//! JSON documents written by `decompose` and `classify`.

use hosvd3::hosvd::HosvdResiduals;
use hosvd3::qubit3::{polytope_membership, polytope_point, Classification, ThreeQubitState};
use hosvd3::{CMatrix, ComplexTensor, HosvdResult};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::state_file::{complexes, pairs};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    /// Row-major `[re, im]` pairs.
    pub data: Vec<[f64; 2]>,
}

impl MatrixDoc {
    fn from_matrix(m: &CMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: pairs(m.as_slice()),
        }
    }

    fn to_matrix(&self) -> CliResult<CMatrix> {
        Ok(CMatrix::from_row_major(self.rows, self.cols, complexes(&self.data))?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorDoc {
    pub dims: Vec<usize>,
    pub elements: Vec<[f64; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualsDoc {
    pub reconstruction: f64,
    pub all_orthogonality: f64,
    pub unitarity: f64,
    pub spectrum_consistency: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeDoc {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub tol: f64,
    pub factors: Vec<MatrixDoc>,
    pub core: TensorDoc,
    pub spectra: Vec<Vec<f64>>,
    pub degenerate_modes: Vec<usize>,
    pub residuals: ResidualsDoc,
}

impl DecomposeDoc {
    pub fn new(r: &HosvdResult, label: Option<String>, tol: f64) -> Self {
        let res = r.residuals;
        Self {
            label,
            tol,
            factors: r.factors.iter().map(MatrixDoc::from_matrix).collect(),
            core: TensorDoc {
                dims: r.core.dims().to_vec(),
                elements: pairs(r.core.elements()),
            },
            spectra: r.spectra.clone(),
            degenerate_modes: r.degenerate_modes.clone(),
            residuals: ResidualsDoc {
                reconstruction: res.reconstruction,
                all_orthogonality: res.all_orthogonality,
                unitarity: res.unitarity,
                spectrum_consistency: res.spectrum_consistency,
            },
        }
    }

    /// Rebuilds the decomposition from a parsed document.
    pub fn to_result(&self) -> CliResult<HosvdResult> {
        let factors = self.factors.iter().map(MatrixDoc::to_matrix).collect::<CliResult<Vec<_>>>()?;
        let core = ComplexTensor::new(&self.core.dims, &complexes(&self.core.elements))?;
        let r = self.residuals;
        Ok(HosvdResult {
            factors,
            core,
            spectra: self.spectra.clone(),
            residuals: HosvdResiduals {
                reconstruction: r.reconstruction,
                all_orthogonality: r.all_orthogonality,
                unitarity: r.unitarity,
                spectrum_consistency: r.spectrum_consistency,
            },
            degenerate_modes: self.degenerate_modes.clone(),
        })
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("decomposition document: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub point: [f64; 3],
    pub clamped: [f64; 3],
    pub inside: bool,
    pub facet_slack: [f64; 3],
    pub lower_slack: [f64; 3],
    pub upper_slack: [f64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyResidualsDoc {
    pub reconstruction: f64,
    pub all_orthogonality: f64,
    pub plane_form_a: f64,
    pub plane_form_b: f64,
    pub phase: f64,
    pub plane_coefficients: [f64; 3],
    pub core_biseparability: [f64; 3],
    pub bipartite_minors: [f64; 3],
    pub polynomial_separability: String,
    pub separability_agrees: bool,
    pub t111_t222: Option<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub tol: f64,
    pub sigma_tol: f64,
    pub separability: String,
    pub case: String,
    pub special: String,
    pub support: Option<String>,
    pub sigma: [f64; 3],
    pub degenerate: [bool; 3],
    pub non_canonical_gauge: bool,
    pub polytope: PolytopeDoc,
    pub residuals: ClassifyResidualsDoc,
}

impl ClassifyDoc {
    pub fn new(s: &ThreeQubitState, c: &Classification, label: Option<String>, tol: f64, sigma_tol: f64) -> Self {
        let p = polytope_point(s);
        let m = polytope_membership(&p, tol);
        let r = &c.residuals;
        Self {
            label,
            tol,
            sigma_tol,
            separability: c.separability.tag().into(),
            case: c.case.tag().into(),
            special: c.special.tag().into(),
            support: c.support.map(|s| s.tag().into()),
            sigma: c.sigma_triple,
            degenerate: c.degenerate,
            non_canonical_gauge: c.non_canonical_gauge,
            polytope: PolytopeDoc {
                point: p.coords,
                clamped: p.clamped(),
                inside: m.inside,
                facet_slack: m.facet_slack,
                lower_slack: m.lower_slack,
                upper_slack: m.upper_slack,
            },
            residuals: ClassifyResidualsDoc {
                reconstruction: r.reconstruction,
                all_orthogonality: r.all_orthogonality,
                plane_form_a: r.plane.form_a,
                plane_form_b: r.plane.form_b,
                phase: r.phase,
                plane_coefficients: r.plane_coefficients,
                core_biseparability: r.core_biseparability,
                bipartite_minors: r.bipartite_minors,
                polynomial_separability: r.polynomial_separability.tag().into(),
                separability_agrees: r.polynomial_separability == c.separability,
                t111_t222: r.t111_t222,
            },
        }
    }
}
