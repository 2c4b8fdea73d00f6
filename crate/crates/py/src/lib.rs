//! Python bindings: `import pyhosvd3`.

use std::collections::BTreeMap;

use hosvd3::qubit3::{
    classify, polytope_membership as membership, polytope_point, Classification, ClassifyOptions, PolytopePoint,
    ThreeQubitState,
};
use hosvd3::random::haar_state;
use hosvd3::{CMatrix, Complex64, ComplexTensor, HosvdResult};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_py(e: hosvd3::Error) -> PyErr {
    if e.is_numerical() {
        PyArithmeticError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn rows(m: &CMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn matrix(rows: Vec<Vec<Complex64>>) -> PyResult<CMatrix> {
    CMatrix::from_rows(&rows).map_err(to_py)
}

/// Dense complex tensor with 1-based indexing.
#[pyclass(name = "Tensor", module = "pyhosvd3", frozen)]
struct PyTensor {
    inner: ComplexTensor,
}

#[pymethods]
impl PyTensor {
    #[new]
    fn new(dims: Vec<usize>, elements: Vec<Complex64>) -> PyResult<Self> {
        Ok(Self {
            inner: ComplexTensor::new(&dims, &elements).map_err(to_py)?,
        })
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn elements(&self) -> Vec<Complex64> {
        self.inner.elements().to_vec()
    }

    fn get(&self, index: Vec<usize>) -> PyResult<Complex64> {
        self.inner.get(&index).map_err(to_py)
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    /// Mode-n unfolding as a list of rows.
    fn unfold(&self, mode: usize) -> PyResult<Vec<Vec<Complex64>>> {
        Ok(rows(hosvd3::unfold(&self.inner, mode).map_err(to_py)?.matrix()))
    }

    /// Applies one square matrix per mode.
    fn transform(&self, mats: Vec<Vec<Vec<Complex64>>>) -> PyResult<PyTensor> {
        let mats = mats.into_iter().map(matrix).collect::<PyResult<Vec<_>>>()?;
        Ok(PyTensor {
            inner: hosvd3::multilinear_transform(&self.inner, &mats).map_err(to_py)?,
        })
    }

    #[pyo3(signature = (tol = hosvd3::DEFAULT_TOL))]
    fn hosvd(&self, tol: f64) -> PyResult<PyHosvd> {
        Ok(PyHosvd {
            inner: hosvd3::hosvd(&self.inner, tol).map_err(to_py)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Tensor(dims={:?})", self.inner.dims())
    }
}

#[pyclass(name = "Hosvd", module = "pyhosvd3", frozen)]
struct PyHosvd {
    inner: HosvdResult,
}

#[pymethods]
impl PyHosvd {
    #[getter]
    fn factors(&self) -> Vec<Vec<Vec<Complex64>>> {
        self.inner.factors.iter().map(rows).collect()
    }

    #[getter]
    fn core(&self) -> PyTensor {
        PyTensor {
            inner: self.inner.core.clone(),
        }
    }

    #[getter]
    fn spectra(&self) -> Vec<Vec<f64>> {
        self.inner.spectra.clone()
    }

    #[getter]
    fn degenerate_modes(&self) -> Vec<usize> {
        self.inner.degenerate_modes.clone()
    }

    #[getter]
    fn residuals(&self) -> BTreeMap<&'static str, f64> {
        let r = self.inner.residuals;
        BTreeMap::from([
            ("reconstruction", r.reconstruction),
            ("all_orthogonality", r.all_orthogonality),
            ("unitarity", r.unitarity),
            ("spectrum_consistency", r.spectrum_consistency),
        ])
    }

    fn reconstruct(&self) -> PyResult<PyTensor> {
        Ok(PyTensor {
            inner: hosvd3::reconstruct(&self.inner).map_err(to_py)?,
        })
    }
}

/// Normalized three-qubit pure state.
#[pyclass(name = "ThreeQubitState", module = "pyhosvd3", frozen)]
struct PyState {
    inner: ThreeQubitState,
}

#[pymethods]
impl PyState {
    /// Eight amplitudes in the order 111, 112, 121, 122, 211, ...
    #[new]
    fn new(amplitudes: Vec<Complex64>) -> PyResult<Self> {
        Ok(Self {
            inner: ThreeQubitState::from_slice(&amplitudes).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn ghz(p: Complex64, q: Complex64) -> PyResult<Self> {
        Ok(Self {
            inner: ThreeQubitState::ghz(p, q).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn w() -> Self {
        Self {
            inner: ThreeQubitState::w(),
        }
    }

    /// Haar-random state from `ChaCha8Rng` seeded with `seed` on `stream`.
    #[staticmethod]
    #[pyo3(signature = (seed, stream = 0))]
    fn haar(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let t = haar_state(&hosvd3::qubit3::DIMS, &mut rng);
        Self {
            inner: ThreeQubitState::from_tensor(&t).expect("Gaussian sample is nonzero"),
        }
    }

    #[getter]
    fn amplitudes(&self) -> Vec<Complex64> {
        self.inner.amplitudes().to_vec()
    }

    #[getter]
    fn input_norm(&self) -> f64 {
        self.inner.input_norm()
    }

    fn tensor(&self) -> PyTensor {
        PyTensor {
            inner: self.inner.tensor(),
        }
    }

    /// `u ⊗ v ⊗ w |ψ⟩` for 2×2 matrices given as row lists.
    fn apply_local(&self, u: Vec<Vec<Complex64>>, v: Vec<Vec<Complex64>>, w: Vec<Vec<Complex64>>) -> PyResult<Self> {
        let (u, v, w) = (matrix(u)?, matrix(v)?, matrix(w)?);
        Ok(Self {
            inner: self.inner.apply_local([&u, &v, &w]).map_err(to_py)?,
        })
    }

    #[pyo3(signature = (tol = hosvd3::DEFAULT_TOL, sigma_tol = hosvd3::DEFAULT_SIGMA_TOL))]
    fn classify(&self, tol: f64, sigma_tol: f64) -> PyResult<PyClassification> {
        let opts = ClassifyOptions { tol, sigma_tol };
        Ok(PyClassification {
            inner: classify(&self.inner, opts).map_err(to_py)?,
        })
    }

    fn polytope_point(&self) -> [f64; 3] {
        polytope_point(&self.inner).coords
    }

    fn __repr__(&self) -> String {
        format!("ThreeQubitState({:?})", self.inner.amplitudes())
    }
}

#[pyclass(name = "Classification", module = "pyhosvd3", frozen)]
struct PyClassification {
    inner: Classification,
}

#[pymethods]
impl PyClassification {
    #[getter]
    fn separability(&self) -> &'static str {
        self.inner.separability.tag()
    }

    #[getter]
    fn case(&self) -> &'static str {
        self.inner.case.tag()
    }

    #[getter]
    fn special(&self) -> &'static str {
        self.inner.special.tag()
    }

    #[getter]
    fn support(&self) -> Option<&'static str> {
        self.inner.support.map(|s| s.tag())
    }

    #[getter]
    fn sigma_triple(&self) -> [f64; 3] {
        self.inner.sigma_triple
    }

    #[getter]
    fn degenerate(&self) -> [bool; 3] {
        self.inner.degenerate
    }

    #[getter]
    fn non_canonical_gauge(&self) -> bool {
        self.inner.non_canonical_gauge
    }

    #[getter]
    fn plane_residual(&self) -> f64 {
        self.inner.residuals.plane.residual()
    }

    #[getter]
    fn phase_residual(&self) -> f64 {
        self.inner.residuals.phase
    }

    #[getter]
    fn t111_t222(&self) -> Option<[f64; 2]> {
        self.inner.residuals.t111_t222
    }

    #[getter]
    fn hosvd(&self) -> PyHosvd {
        PyHosvd {
            inner: self.inner.decomposition.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Classification(separability={}, case={}, special={}, sigma_triple={:?})",
            self.inner.separability, self.inner.case, self.inner.special, self.inner.sigma_triple
        )
    }
}

/// `(inside, facet_slack)` for a point `(s1, s2, s3)`.
#[pyfunction]
#[pyo3(signature = (point, tol = hosvd3::DEFAULT_TOL))]
fn polytope_membership(point: [f64; 3], tol: f64) -> (bool, [f64; 3]) {
    let m = membership(&PolytopePoint::new(point), tol);
    (m.inside, m.facet_slack)
}

#[pymodule]
fn pyhosvd3(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTensor>()?;
    m.add_class::<PyHosvd>()?;
    m.add_class::<PyState>()?;
    m.add_class::<PyClassification>()?;
    m.add_function(wrap_pyfunction!(polytope_membership, m)?)?;
    Ok(())
}
