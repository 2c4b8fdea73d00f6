//! Higher order singular value decomposition.
//!
//! For every mode `n` the factor `U⁽ⁿ⁾` is the eigenbasis of the Gram matrix
//! `X_(n) X_(n)†` with eigenvalues in descending order; the core is then
//! `𝒯 = U⁽¹⁾† ⊗ … ⊗ U⁽ᴺ⁾† 𝒳`. The core's same-mode slices are mutually
//! orthogonal and their norms are the n-mode singular values.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{gram, hermitian_eig, validate_unitary, CMatrix};
use crate::tensor::{multilinear_transform, unfold, ComplexTensor};

/// Diagnostics computed alongside the decomposition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HosvdResiduals {
    /// `‖𝒳 − U⁽¹⁾⊗…⊗U⁽ᴺ⁾𝒯‖_F / ‖𝒳‖_F`.
    pub reconstruction: f64,
    /// Largest `|⟨𝒯_{iₙ=α}, 𝒯_{iₙ=β}⟩|` over modes and `α ≠ β`.
    pub all_orthogonality: f64,
    /// Largest `‖U⁽ⁿ⁾†U⁽ⁿ⁾ − I‖_F`.
    pub unitarity: f64,
    /// Largest gap between a spectrum entry and the norm of the matching core slice.
    pub spectrum_consistency: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HosvdResult {
    pub factors: Vec<CMatrix>,
    pub core: ComplexTensor,
    /// Per-mode n-mode singular values, descending.
    pub spectra: Vec<Vec<f64>>,
    pub residuals: HosvdResiduals,
    /// 1-based modes whose spectrum has two values within the tolerance of
    /// each other; the factor (and so the core) is not unique there.
    pub degenerate_modes: Vec<usize>,
}

impl HosvdResult {
    /// Squared singular values of one (1-based) mode, i.e. the eigenvalues of
    /// the corresponding Gram matrix.
    pub fn squared_spectrum(&self, mode: usize) -> Vec<f64> {
        self.spectra[mode - 1].iter().map(|s| s * s).collect()
    }
}

/// Computes the HOSVD of `t`. `tol` governs the Hermiticity check of the Gram
/// matrices and the degeneracy flag.
pub fn hosvd(t: &ComplexTensor, tol: f64) -> Result<HosvdResult> {
    let norm = t.norm();
    if norm == 0.0 {
        return Err(Error::Domain("HOSVD of the zero tensor is undefined".into()));
    }
    if !norm.is_finite() {
        return Err(Error::Domain("tensor has non-finite elements".into()));
    }

    let mut factors = Vec::with_capacity(t.order());
    let mut spectra = Vec::with_capacity(t.order());
    let mut degenerate_modes = Vec::new();
    for mode in 1..=t.order() {
        let g = gram(unfold(t, mode)?.matrix());
        let eig = hermitian_eig(&g, tol).map_err(|e| Error::Mode {
            mode,
            source: Box::new(e),
        })?;
        if eig.degenerate {
            degenerate_modes.push(mode);
        }
        spectra.push(eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect::<Vec<_>>());
        factors.push(eig.unitary);
    }

    let adjoints: Vec<CMatrix> = factors.iter().map(CMatrix::adjoint).collect();
    let core = multilinear_transform(t, &adjoints)?;

    let rebuilt = multilinear_transform(&core, &factors)?;
    let mut spectrum_consistency = 0.0f64;
    for (mode, spec) in spectra.iter().enumerate() {
        for (s, from_core) in spec.iter().zip(mode_singular_values(&core, mode + 1)?) {
            spectrum_consistency = spectrum_consistency.max((s - from_core).abs());
        }
    }
    let residuals = HosvdResiduals {
        reconstruction: t.distance(&rebuilt) / norm,
        all_orthogonality: verify_all_orthogonality(&core),
        unitarity: factors.iter().map(validate_unitary).fold(0.0, f64::max),
        spectrum_consistency,
    };

    Ok(HosvdResult {
        factors,
        core,
        spectra,
        residuals,
        degenerate_modes,
    })
}

/// Norms of the slices `𝒯_{i_mode = i}`, in index order (not sorted).
pub fn mode_singular_values(core: &ComplexTensor, mode: usize) -> Result<Vec<f64>> {
    let m = unfold(core, mode)?;
    Ok((0..m.rows())
        .map(|r| m.matrix().row(r).iter().map(Complex64::norm_sqr).sum::<f64>().sqrt())
        .collect())
}

/// Largest modulus of the inner product between two distinct same-mode
/// slices. Zero exactly when the tensor is all-orthogonal.
///
/// The slices are the rows of the unfolding, so each inner product is a row
/// product of `X_(n)`; the summation order differs from the displayed
/// three-qubit conditions but the terms are the same.
pub fn verify_all_orthogonality(core: &ComplexTensor) -> f64 {
    let mut worst = 0.0f64;
    for mode in 1..=core.order() {
        let m = unfold(core, mode).expect("mode in range");
        let m = m.matrix();
        for a in 0..m.rows() {
            for b in a + 1..m.rows() {
                let ip: Complex64 = m.row(a).iter().zip(m.row(b)).map(|(x, y)| x.conj() * y).sum();
                worst = worst.max(ip.norm());
            }
        }
    }
    worst
}

/// `U⁽¹⁾ ⊗ … ⊗ U⁽ᴺ⁾ 𝒯`.
pub fn reconstruct(r: &HosvdResult) -> Result<ComplexTensor> {
    multilinear_transform(&r.core, &r.factors)
}
