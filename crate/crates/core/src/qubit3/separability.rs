//! Bi-separability and full separability of three-qubit pure states.
//!
//! Two independent tests are provided. The spectral one looks at purity of
//! the one-body marginals: a state factors across `X|YZ` iff `ρ^X` is pure,
//! i.e. `σ₁⁽ⁿ⁾² = 1`. The polynomial one checks that the unfolding `Ψ_(n)` has
//! rank one, i.e. all six 2×2 minors vanish; for the `C|AB` cut these are
//!
//! ```text
//! ψ111ψ222 = ψ112ψ221   ψ111ψ212 = ψ211ψ112   ψ121ψ222 = ψ221ψ122
//! ψ111ψ122 = ψ112ψ121   ψ211ψ222 = ψ212ψ221   ψ211ψ122 = ψ212ψ121
//! ```
//!
//! and the other cuts are their qubit relabelings.

use std::fmt;

use num_complex::Complex64;

use super::{core_elements, ThreeQubitState};
use crate::error::{Error, Result};
use crate::hosvd::verify_all_orthogonality;
use crate::tensor::{unfold, ComplexTensor};

/// A bipartition singling out one qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `A|BC`, mode 1.
    ABc,
    /// `B|CA`, mode 2.
    BCa,
    /// `C|AB`, mode 3.
    CAb,
}

impl Cut {
    pub const ALL: [Cut; 3] = [Cut::ABc, Cut::BCa, Cut::CAb];

    /// The tensor mode (1-based) of the singled-out qubit.
    pub fn mode(self) -> usize {
        match self {
            Cut::ABc => 1,
            Cut::BCa => 2,
            Cut::CAb => 3,
        }
    }

    pub fn from_mode(mode: usize) -> Option<Cut> {
        match mode {
            1 => Some(Cut::ABc),
            2 => Some(Cut::BCa),
            3 => Some(Cut::CAb),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Cut::ABc => "A_BC",
            Cut::BCa => "B_CA",
            Cut::CAb => "C_AB",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Separability {
    FullySeparable,
    Biseparable(Cut),
    Genuine,
}

impl Separability {
    pub fn tag(self) -> &'static str {
        match self {
            Separability::FullySeparable => "fully_separable",
            Separability::Biseparable(Cut::ABc) => "biseparable_A_BC",
            Separability::Biseparable(Cut::BCa) => "biseparable_B_CA",
            Separability::Biseparable(Cut::CAb) => "biseparable_C_AB",
            Separability::Genuine => "genuine",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [
            Separability::FullySeparable,
            Separability::Biseparable(Cut::ABc),
            Separability::Biseparable(Cut::BCa),
            Separability::Biseparable(Cut::CAb),
            Separability::Genuine,
        ]
        .into_iter()
        .find(|s| s.tag() == tag)
    }

    /// Combines per-cut product decisions (indexed by mode − 1).
    pub(crate) fn from_cuts(product: [bool; 3]) -> Self {
        match product.iter().filter(|&&p| p).count() {
            0 => Separability::Genuine,
            1 => {
                let mode = product.iter().position(|&p| p).unwrap() + 1;
                Separability::Biseparable(Cut::from_mode(mode).unwrap())
            }
            // A pure state with two pure marginals has a pure third one.
            _ => Separability::FullySeparable,
        }
    }
}

impl fmt::Display for Separability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Spectral decision: the cut through mode n is a product iff
/// `1 − σ₁⁽ⁿ⁾² ≤ tol`.
pub fn separability_class(s: &ThreeQubitState, tol: f64) -> Result<Separability> {
    let r = s.hosvd(tol)?;
    Ok(separability_from_spectra(&r.spectra, tol))
}

pub(crate) fn separability_from_spectra(spectra: &[Vec<f64>], tol: f64) -> Separability {
    let mut product = [false; 3];
    for (p, spec) in product.iter_mut().zip(spectra) {
        *p = 1.0 - spec[0] * spec[0] <= tol;
    }
    Separability::from_cuts(product)
}

/// The six 2×2 minors `ψ_a ψ_b − ψ_c ψ_d` of the unfolding through `cut`.
pub fn bipartite_minors(s: &ThreeQubitState, cut: Cut) -> [Complex64; 6] {
    let m = unfold(&s.tensor(), cut.mode()).expect("mode in range");
    let m = m.matrix();
    let mut out = [Complex64::new(0.0, 0.0); 6];
    let mut k = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            out[k] = m[(0, a)] * m[(1, b)] - m[(0, b)] * m[(1, a)];
            k += 1;
        }
    }
    out
}

/// Polynomial decision: the cut is a product iff every minor is at most
/// `√tol` in modulus (relative to the squared norm). Minors are linear in the
/// distance from the product manifold whereas `1 − σ₁²` is quadratic, hence
/// the square root.
pub fn polynomial_separability(s: &ThreeQubitState, tol: f64) -> Separability {
    let threshold = tol.sqrt() * s.tensor().norm_sqr();
    let mut product = [false; 3];
    for (p, cut) in product.iter_mut().zip(Cut::ALL) {
        *p = bipartite_minors(s, cut).iter().all(|z| z.norm() <= threshold);
    }
    Separability::from_cuts(product)
}

/// Single bi-separability condition on an HOSVD core:
///
/// ```text
/// A|BC: t112 t221 = t212 t121
/// B|CA: t112 t221 = t211 t122
/// C|AB: t211 t122 = t212 t121
/// ```
///
/// Returns `|lhs − rhs|`. Fails with a validation error when `core` is not
/// all-orthogonal within `tol · ‖core‖²`. Vanishing is necessary for
/// bi-separability but not sufficient when the core support is degenerate
/// (a GHZ core satisfies all three).
pub fn core_biseparability_residual(core: &ComplexTensor, cut: Cut, tol: f64) -> Result<f64> {
    let e = core_elements(core)?;
    let dev = verify_all_orthogonality(core);
    if dev > tol * core.norm_sqr() {
        return Err(Error::Validation(format!(
            "not an HOSVD core: all-orthogonality residual {dev:e}"
        )));
    }
    let t = |i, j, k| e.t(i, j, k);
    let diff = match cut {
        Cut::ABc => t(1, 1, 2) * t(2, 2, 1) - t(2, 1, 2) * t(1, 2, 1),
        Cut::BCa => t(1, 1, 2) * t(2, 2, 1) - t(2, 1, 1) * t(1, 2, 2),
        Cut::CAb => t(2, 1, 1) * t(1, 2, 2) - t(2, 1, 2) * t(1, 2, 1),
    };
    Ok(diff.norm())
}
