//! Three-qubit pure states.
//!
//! A state `|ψ⟩ = Σ ψ_{i₁i₂i₃} |i₁i₂i₃⟩` (indices in {1, 2}) is an order-3
//! tensor of shape `[2, 2, 2]`. Its unfoldings give the reduced density
//! matrices directly:
//!
//! ```text
//! ρ^A  = Ψ_(1) Ψ_(1)†     ρ^BC = Ψ_(1)ᵀ conj(Ψ_(1))
//! ρ^B  = Ψ_(2) Ψ_(2)†     ρ^CA = Ψ_(2)ᵀ conj(Ψ_(2))
//! ρ^C  = Ψ_(3) Ψ_(3)†     ρ^AB = Ψ_(3)ᵀ conj(Ψ_(3))
//! ```
//!
//! and the HOSVD diagonalizes `ρ^A`, `ρ^B`, `ρ^C` simultaneously, so the
//! squared n-mode singular values are their eigenvalues.

mod classify;
mod identities;
mod polytope;
mod separability;

pub use classify::{classify, support_pattern, Case, Classification, ClassifyOptions, ResidualReport, Special};
pub use identities::{
    guarded_t111_t222_check, phase_identity_residual, plane_coefficients, plane_identity, plane_identity_residual,
    PlaneIdentity,
};
pub use polytope::{polytope_membership, polytope_point, Membership, PolytopePoint};
pub use separability::{
    bipartite_minors, core_biseparability_residual, polynomial_separability, separability_class, Cut, Separability,
};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hosvd::{hosvd, HosvdResult};
use crate::linalg::{gram, hermitian_eig, CMatrix, HermitianMatrix};
use crate::tensor::{multilinear_transform, unfold, ComplexTensor};

pub const DIMS: [usize; 3] = [2, 2, 2];

/// Flat position of `ψ_{ijk}` (1-based indices): `4(i−1) + 2(j−1) + (k−1)`.
pub const fn flat(i: usize, j: usize, k: usize) -> usize {
    4 * (i - 1) + 2 * (j - 1) + (k - 1)
}

/// Normalized three-qubit pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeQubitState {
    amplitudes: [Complex64; 8],
    input_norm: f64,
}

impl ThreeQubitState {
    /// Scales `amplitudes` to unit norm; relative phases are untouched.
    pub fn normalize(amplitudes: [Complex64; 8]) -> Result<Self> {
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("amplitudes must be finite".into()));
        }
        let norm = amplitudes.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::Domain("cannot normalize the zero vector".into()));
        }
        Ok(Self {
            amplitudes: amplitudes.map(|z| z / norm),
            input_norm: norm,
        })
    }

    pub fn from_slice(amplitudes: &[Complex64]) -> Result<Self> {
        let arr: [Complex64; 8] = amplitudes
            .try_into()
            .map_err(|_| Error::Shape(format!("three qubits need 8 amplitudes, got {}", amplitudes.len())))?;
        Self::normalize(arr)
    }

    pub fn from_tensor(t: &ComplexTensor) -> Result<Self> {
        if t.dims() != DIMS {
            return Err(Error::Shape(format!("expected dims [2, 2, 2], got {:?}", t.dims())));
        }
        Self::from_slice(t.elements())
    }

    /// State from sparse `((i, j, k), amplitude)` entries, then normalized.
    pub fn from_entries(entries: &[((usize, usize, usize), Complex64)]) -> Result<Self> {
        let mut amps = [Complex64::new(0.0, 0.0); 8];
        for &((i, j, k), z) in entries {
            if ![i, j, k].iter().all(|x| (1..=2).contains(x)) {
                return Err(Error::Argument(format!("qubit index ({i}, {j}, {k}) out of range")));
            }
            amps[flat(i, j, k)] = z;
        }
        Self::normalize(amps)
    }

    /// `p|111⟩ + q|222⟩`, normalized.
    pub fn ghz(p: Complex64, q: Complex64) -> Result<Self> {
        Self::from_entries(&[((1, 1, 1), p), ((2, 2, 2), q)])
    }

    /// `(|112⟩ + |121⟩ + |211⟩)/√3`.
    pub fn w() -> Self {
        let a = Complex64::new(1.0, 0.0);
        Self::from_entries(&[((1, 1, 2), a), ((1, 2, 1), a), ((2, 1, 1), a)]).expect("nonzero")
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amplitudes
    }

    /// `ψ_{ijk}` with 1-based indices.
    pub fn amplitude(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.amplitudes[flat(i, j, k)]
    }

    /// Norm of the amplitudes before normalization.
    pub fn input_norm(&self) -> f64 {
        self.input_norm
    }

    pub fn tensor(&self) -> ComplexTensor {
        ComplexTensor::new(&DIMS, &self.amplitudes).expect("8 amplitudes")
    }

    /// `U ⊗ V ⊗ W |ψ⟩`.
    pub fn apply_local(&self, ops: [&CMatrix; 3]) -> Result<Self> {
        let mats = [ops[0].clone(), ops[1].clone(), ops[2].clone()];
        Self::from_tensor(&multilinear_transform(&self.tensor(), &mats)?)
    }

    /// Relabels the qubits: qubit `k` of the result is qubit `perm[k]` of `self`.
    pub fn permute_qubits(&self, perm: [usize; 3]) -> Result<Self> {
        Self::from_tensor(&self.tensor().permute_modes(&perm)?)
    }

    /// HOSVD of the state's tensor.
    pub fn hosvd(&self, tol: f64) -> Result<HosvdResult> {
        hosvd(&self.tensor(), tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
    C,
    AB,
    CA,
    BC,
}

impl Subsystem {
    pub fn label(self) -> &'static str {
        match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
            Subsystem::C => "C",
            Subsystem::AB => "AB",
            Subsystem::CA => "CA",
            Subsystem::BC => "BC",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    pub subsystem: Subsystem,
    pub matrix: HermitianMatrix,
}

impl DensityMatrix {
    pub fn trace(&self) -> f64 {
        self.matrix.matrix().trace().re
    }

    /// Descending eigenvalues.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        Ok(hermitian_eig(&self.matrix, tol)?.eigenvalues)
    }
}

/// `(ρ^A, ρ^B, ρ^C)`, each `Ψ_(n) Ψ_(n)†`.
pub fn one_body_rdms(s: &ThreeQubitState) -> [DensityMatrix; 3] {
    let t = s.tensor();
    let rdm = |mode, subsystem| DensityMatrix {
        subsystem,
        matrix: gram(unfold(&t, mode).expect("mode in range").matrix()),
    };
    [rdm(1, Subsystem::A), rdm(2, Subsystem::B), rdm(3, Subsystem::C)]
}

/// `(ρ^AB, ρ^CA, ρ^BC)`, each `Ψ_(n)ᵀ conj(Ψ_(n))` for n = 3, 2, 1.
///
/// The basis order follows the unfolding columns, e.g. `|ab⟩` at
/// `2(a−1) + b` for `ρ^AB` and `|ca⟩` at `2(c−1) + a` for `ρ^CA`.
pub fn two_body_rdms(s: &ThreeQubitState) -> [DensityMatrix; 3] {
    let t = s.tensor();
    let rdm = |mode, subsystem| DensityMatrix {
        subsystem,
        // Ψᵀ conj(Ψ) = (Ψᵀ)(Ψᵀ)†
        matrix: gram(&unfold(&t, mode).expect("mode in range").matrix().transpose()),
    };
    [rdm(3, Subsystem::AB), rdm(2, Subsystem::CA), rdm(1, Subsystem::BC)]
}

/// Reads the eight elements of a `[2, 2, 2]` tensor.
pub(crate) fn core_elements(core: &ComplexTensor) -> Result<Elements> {
    if core.dims() != DIMS {
        return Err(Error::Shape(format!("expected a [2, 2, 2] core, got {:?}", core.dims())));
    }
    Ok(Elements(core.elements().try_into().expect("8 elements")))
}

/// Element access `t(i, j, k)` with 1-based indices.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Elements(pub [Complex64; 8]);

impl Elements {
    pub fn t(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.0[flat(i, j, k)]
    }

    /// `|t_{ijk}|²`
    pub fn m(&self, i: usize, j: usize, k: usize) -> f64 {
        self.t(i, j, k).norm_sqr()
    }

    /// `(σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²)` read off the core as slice norms.
    pub fn leading_sigma_squares(&self) -> [f64; 3] {
        [
            self.m(1, 1, 1) + self.m(1, 1, 2) + self.m(1, 2, 1) + self.m(1, 2, 2),
            self.m(1, 1, 1) + self.m(1, 1, 2) + self.m(2, 1, 1) + self.m(2, 1, 2),
            self.m(1, 1, 1) + self.m(1, 2, 1) + self.m(2, 1, 1) + self.m(2, 2, 1),
        ]
    }
}
