//! Matrix unfolding and higher order singular value decomposition (HOSVD) for
//! dense complex tensors, with a three-qubit layer that classifies pure states
//! up to local unitary equivalence.
//!
//! The generic pieces ([`tensor`], [`linalg`], [`hosvd`]) work for tensors of
//! any order and local dimension. [`qubit3`] specializes them to
//! `C^2 ⊗ C^2 ⊗ C^2`: reduced density matrices, separability, the algebraic
//! identities every HOSVD core obeys, the case/special-state classifier and the
//! polytope of one-body spectra.
//!
//! Tensor indices and mode numbers are 1-based in the public API, so that
//! `ψ_{122}` is `t.get(&[1, 2, 2])`. Storage is flat, row-major, last index
//! fastest.

pub mod error;
pub mod hosvd;
pub mod linalg;
pub mod qubit3;
pub mod random;
pub mod tensor;

pub use error::{Error, Result};
pub use hosvd::{hosvd, mode_singular_values, reconstruct, verify_all_orthogonality, HosvdResult};
pub use linalg::{gram, hermitian_eig, validate_unitary, CMatrix, EigenDecomposition, HermitianMatrix};
pub use num_complex::Complex64;
pub use tensor::{inner, multilinear_transform, refold, subtensor, unfold, ComplexTensor, UnfoldedMatrix};

/// Default arithmetic tolerance for unit-norm states.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Default tolerance for deciding that two squared n-mode singular values are equal.
pub const DEFAULT_SIGMA_TOL: f64 = 1e-8;
