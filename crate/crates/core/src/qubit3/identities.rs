//! Algebraic identities satisfied by every three-qubit HOSVD core.
//!
//! Combining the three all-orthogonality conditions yields a real identity in
//! the moduli of the off-GHZ elements and the leading squared singular values,
//! in two equivalent forms,
//!
//! ```text
//! |t112|²[s1 − s2] + |t211|²[s2 − s3] + |t121|²[s3 − s1] = 0
//! |t221|²[s1 − s2] + |t122|²[s2 − s3] + |t212|²[s3 − s1] = 0
//! ```
//!
//! (`sₙ = σ₁⁽ⁿ⁾²`), and a phase identity
//!
//! ```text
//! t̄112 t̄221 (t122 t211 − t121 t212) + t̄121 t̄212 (t112 t221 − t122 t211)
//!   + t̄122 t̄211 (t121 t212 − t112 t221) = 0.
//! ```

use super::core_elements;
use crate::error::Result;
use crate::tensor::ComplexTensor;

/// Signed values of both forms of the plane identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneIdentity {
    pub form_a: f64,
    pub form_b: f64,
}

impl PlaneIdentity {
    pub fn residual(&self) -> f64 {
        self.form_a.abs()
    }

    /// `|form_a − form_b|`; both vanish on a core, so they agree there.
    pub fn disagreement(&self) -> f64 {
        (self.form_a - self.form_b).abs()
    }
}

pub fn plane_identity(core: &ComplexTensor) -> Result<PlaneIdentity> {
    let e = core_elements(core)?;
    let [s1, s2, s3] = e.leading_sigma_squares();
    let m = |i, j, k| e.m(i, j, k);
    Ok(PlaneIdentity {
        form_a: m(1, 1, 2) * (s1 - s2) + m(2, 1, 1) * (s2 - s3) + m(1, 2, 1) * (s3 - s1),
        form_b: m(2, 2, 1) * (s1 - s2) + m(1, 2, 2) * (s2 - s3) + m(2, 1, 2) * (s3 - s1),
    })
}

/// `|form_a|` of the plane identity.
pub fn plane_identity_residual(core: &ComplexTensor) -> Result<f64> {
    Ok(plane_identity(core)?.residual())
}

/// Modulus of the phase identity. The expression equals
/// `2i·Im(X + Y + Z)` for the three quartic monomials involved, so it is
/// purely imaginary for any tensor.
pub fn phase_identity_residual(core: &ComplexTensor) -> Result<f64> {
    let e = core_elements(core)?;
    let t = |i, j, k| e.t(i, j, k);
    let expr = t(1, 1, 2).conj() * t(2, 2, 1).conj() * (t(1, 2, 2) * t(2, 1, 1) - t(1, 2, 1) * t(2, 1, 2))
        + t(1, 2, 1).conj() * t(2, 1, 2).conj() * (t(1, 1, 2) * t(2, 2, 1) - t(1, 2, 2) * t(2, 1, 1))
        + t(1, 2, 2).conj() * t(2, 1, 1).conj() * (t(1, 2, 1) * t(2, 1, 2) - t(1, 1, 2) * t(2, 2, 1));
    Ok(expr.norm())
}

/// Normal vector `(a, b, c)` of the plane `a·s1 + b·s2 + c·s3 = 0`:
/// `a = |t112|² − |t121|²`, `b = |t211|² − |t112|²`, `c = |t121|² − |t211|²`.
/// Always `a + b + c = 0`.
pub fn plane_coefficients(core: &ComplexTensor) -> Result<[f64; 3]> {
    let e = core_elements(core)?;
    let (m112, m121, m211) = (e.m(1, 1, 2), e.m(1, 2, 1), e.m(2, 1, 1));
    Ok([m112 - m121, m211 - m112, m121 - m211])
}

/// Cross-check of the closed forms for `t111` and `t222` in terms of the
/// other six core elements:
///
/// ```text
/// t111 = −[t̄221 (t121 t212 − t122 t211) + t112 (|t212|² − |t122|²)] / (t212 t̄211 − t122 t̄121)
/// t222 =  [t̄112 (t121 t212 − t122 t211) + t221 (|t121|² − |t211|²)] / (t̄212 t211 − t̄122 t121)
/// ```
///
/// Returns `[|t111 − formula|, |t222 − formula|]`, or `None` when the
/// denominator's modulus is at most `tol`.
pub fn guarded_t111_t222_check(core: &ComplexTensor, tol: f64) -> Result<Option<[f64; 2]>> {
    let e = core_elements(core)?;
    let t = |i, j, k| e.t(i, j, k);
    let den = t(2, 1, 2) * t(2, 1, 1).conj() - t(1, 2, 2) * t(1, 2, 1).conj();
    if den.norm() <= tol {
        return Ok(None);
    }
    let cross = t(1, 2, 1) * t(2, 1, 2) - t(1, 2, 2) * t(2, 1, 1);
    let t111 = -(t(2, 2, 1).conj() * cross + t(1, 1, 2) * (e.m(2, 1, 2) - e.m(1, 2, 2))) / den;
    let t222 = (t(1, 1, 2).conj() * cross + t(2, 2, 1) * (e.m(1, 2, 1) - e.m(2, 1, 1))) / den.conj();
    Ok(Some([(t(1, 1, 1) - t111).norm(), (t(2, 2, 2) - t222).norm()]))
}
