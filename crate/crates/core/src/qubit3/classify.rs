//! Case classification and special-state detection.
//!
//! The leading squared singular values `s = (σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²)` fall into
//! one of three cases: all equal (case 1), exactly one equal pair (case 2,
//! named after the pair) or pairwise distinct (case 3). Within a case the
//! special states are recognised from the support of the HOSVD core:
//!
//! | tag | support                      | case     |
//! |-----|------------------------------|----------|
//! | GHZ | t111, t222                   | 1        |
//! | S1  | t111, t112, t221, t222       | 2 (1, 2) |
//! | S2  | t111, t121, t212, t222       | 2 (1, 3) |
//! | S3  | t111, t122, t211, t222       | 2 (2, 3) |
//! | B1  | t111, t122, t212, t221       | 3        |
//! | B2  | t112, t121, t211, t222       | 3        |
//!
//! Separability is decided first, and special tags are only given to
//! genuinely entangled states.

use std::fmt;

use super::identities::{
    guarded_t111_t222_check, phase_identity_residual, plane_coefficients, plane_identity, PlaneIdentity,
};
use super::separability::{
    core_biseparability_residual, polynomial_separability, separability_from_spectra, Cut, Separability,
};
use super::{core_elements, flat, ThreeQubitState};
use crate::error::Result;
use crate::hosvd::HosvdResult;
use crate::{DEFAULT_SIGMA_TOL, DEFAULT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `s1 = s2 = s3`
    Case1,
    /// `s1 = s2` only
    Case2_12,
    /// `s1 = s3` only
    Case2_13,
    /// `s2 = s3` only
    Case2_23,
    /// pairwise distinct
    Case3,
}

impl Case {
    pub fn tag(self) -> &'static str {
        match self {
            Case::Case1 => "case1",
            Case::Case2_12 => "case2_12",
            Case::Case2_13 => "case2_13",
            Case::Case2_23 => "case2_23",
            Case::Case3 => "case3",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [Case::Case1, Case::Case2_12, Case::Case2_13, Case::Case2_23, Case::Case3]
            .into_iter()
            .find(|c| c.tag() == tag)
    }

    /// Case of a σ-triple, comparing components within `sigma_tol`.
    /// Two equal pairs without the third (possible only through tolerance
    /// chaining) count as case 1.
    pub fn of_triple(s: [f64; 3], sigma_tol: f64) -> Self {
        let eq = |a: f64, b: f64| (a - b).abs() <= sigma_tol;
        match (eq(s[0], s[1]), eq(s[0], s[2]), eq(s[1], s[2])) {
            (false, false, false) => Case::Case3,
            (true, false, false) => Case::Case2_12,
            (false, true, false) => Case::Case2_13,
            (false, false, true) => Case::Case2_23,
            _ => Case::Case1,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special {
    Ghz,
    S1,
    S2,
    S3,
    B1,
    B2,
    /// No special state.
    Unremarkable,
}

impl Special {
    pub fn tag(self) -> &'static str {
        match self {
            Special::Ghz => "ghz",
            Special::S1 => "s1",
            Special::S2 => "s2",
            Special::S3 => "s3",
            Special::B1 => "b1",
            Special::B2 => "b2",
            Special::Unremarkable => "none",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [
            Special::Ghz,
            Special::S1,
            Special::S2,
            Special::S3,
            Special::B1,
            Special::B2,
            Special::Unremarkable,
        ]
        .into_iter()
        .find(|s| s.tag() == tag)
    }

    /// Allowed core support as a bit mask over flat positions.
    fn support_mask(self) -> u8 {
        let bits = |idx: &[(usize, usize, usize)]| idx.iter().fold(0u8, |m, &(i, j, k)| m | 1 << flat(i, j, k));
        match self {
            Special::Ghz => bits(&[(1, 1, 1), (2, 2, 2)]),
            Special::S1 => bits(&[(1, 1, 1), (1, 1, 2), (2, 2, 1), (2, 2, 2)]),
            Special::S2 => bits(&[(1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 2)]),
            Special::S3 => bits(&[(1, 1, 1), (1, 2, 2), (2, 1, 1), (2, 2, 2)]),
            Special::B1 => bits(&[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]),
            Special::B2 => bits(&[(1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2)]),
            Special::Unremarkable => 0xff,
        }
    }

    /// The case a state with this tag must belong to.
    fn required_case(self) -> Option<Case> {
        match self {
            Special::Ghz => Some(Case::Case1),
            Special::S1 => Some(Case::Case2_12),
            Special::S2 => Some(Case::Case2_13),
            Special::S3 => Some(Case::Case2_23),
            Special::B1 | Special::B2 => Some(Case::Case3),
            Special::Unremarkable => None,
        }
    }
}

impl fmt::Display for Special {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

const PATTERNS: [Special; 6] = [
    Special::Ghz,
    Special::S1,
    Special::S2,
    Special::S3,
    Special::B1,
    Special::B2,
];

/// First special-state pattern (in the order GHZ, S1, S2, S3, B1, B2) whose
/// support contains the core's support, ignoring the case. Elements with
/// `|t| ≤ tol · max|t|` count as zero.
pub fn support_pattern(core: &crate::tensor::ComplexTensor, tol: f64) -> Result<Option<Special>> {
    let e = core_elements(core)?;
    let max = e.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let threshold = tol * max;
    let support = e
        .0
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() > threshold)
        .fold(0u8, |m, (k, _)| m | 1 << k);
    Ok(PATTERNS
        .into_iter()
        .find(|p| support & !p.support_mask() == 0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifyOptions {
    /// Arithmetic tolerance: eigensolver checks, purity, support threshold.
    pub tol: f64,
    /// Equality tolerance for squared singular values.
    pub sigma_tol: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            sigma_tol: DEFAULT_SIGMA_TOL,
        }
    }
}

/// Diagnostics gathered while classifying.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub reconstruction: f64,
    pub all_orthogonality: f64,
    pub plane: PlaneIdentity,
    pub phase: f64,
    /// `(a, b, c)` with `a + b + c = 0`.
    pub plane_coefficients: [f64; 3],
    /// Single core condition per cut, in `Cut::ALL` order.
    pub core_biseparability: [f64; 3],
    /// Largest 2×2 minor of each unfolding, in `Cut::ALL` order.
    pub bipartite_minors: [f64; 3],
    /// Separability according to the minors.
    pub polynomial_separability: Separability,
    /// `[|t111 − formula|, |t222 − formula|]` when the denominator allows.
    pub t111_t222: Option<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub separability: Separability,
    pub case: Case,
    pub special: Special,
    /// Raw support pattern of the core regardless of case and separability.
    pub support: Option<Special>,
    /// `(σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²)`
    pub sigma_triple: [f64; 3],
    /// Per mode: `σ₁² − σ₂² ≤ sigma_tol`.
    pub degenerate: [bool; 3],
    /// Some mode is degenerate, so the core (and its support) depends on the
    /// eigensolver's choice of basis.
    pub non_canonical_gauge: bool,
    pub residuals: ResidualReport,
    pub decomposition: HosvdResult,
}

/// Classifies a normalized state up to local unitaries.
pub fn classify(s: &ThreeQubitState, opts: ClassifyOptions) -> Result<Classification> {
    let r = s.hosvd(opts.tol)?;
    let core = &r.core;

    let sigma_triple = [0, 1, 2].map(|n| r.spectra[n][0] * r.spectra[n][0]);
    let degenerate = [0, 1, 2].map(|n| {
        let sp = &r.spectra[n];
        sp[0] * sp[0] - sp[1] * sp[1] <= opts.sigma_tol
    });

    let separability = separability_from_spectra(&r.spectra, opts.tol);
    let case = Case::of_triple(sigma_triple, opts.sigma_tol);
    let support = support_pattern(core, opts.tol)?;
    let special = match support {
        Some(p) if separability == Separability::Genuine => PATTERNS
            .into_iter()
            .skip_while(|&q| q != p)
            .find(|&q| q.required_case() == Some(case) && support_fits(core, q, opts.tol))
            .unwrap_or(Special::Unremarkable),
        _ => Special::Unremarkable,
    };

    let mut core_biseparability = [0.0; 3];
    let mut bipartite_minors = [0.0; 3];
    for (k, cut) in Cut::ALL.into_iter().enumerate() {
        // The core passed the HOSVD post-condition, so only an absurd input
        // can fail here; report infinity rather than aborting.
        core_biseparability[k] = core_biseparability_residual(core, cut, 1e-8).unwrap_or(f64::INFINITY);
        bipartite_minors[k] = super::separability::bipartite_minors(s, cut)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
    }

    let residuals = ResidualReport {
        reconstruction: r.residuals.reconstruction,
        all_orthogonality: r.residuals.all_orthogonality,
        plane: plane_identity(core)?,
        phase: phase_identity_residual(core)?,
        plane_coefficients: plane_coefficients(core)?,
        core_biseparability,
        bipartite_minors,
        polynomial_separability: polynomial_separability(s, opts.tol),
        t111_t222: guarded_t111_t222_check(core, opts.tol)?,
    };

    Ok(Classification {
        separability,
        case,
        special,
        support,
        sigma_triple,
        degenerate,
        non_canonical_gauge: degenerate.iter().any(|&d| d),
        residuals,
        decomposition: r,
    })
}

fn support_fits(core: &crate::tensor::ComplexTensor, p: Special, tol: f64) -> bool {
    let e = core_elements(core).expect("checked by caller");
    let max = e.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    e.0.iter()
        .enumerate()
        .all(|(k, z)| p.support_mask() & (1 << k) != 0 || z.norm() <= tol * max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn classify_default(s: &ThreeQubitState) -> Classification {
        classify(s, ClassifyOptions::default()).unwrap()
    }

    #[test]
    fn generalized_ghz() {
        let cl = classify_default(&ThreeQubitState::ghz(c(0.8), c(0.6)).unwrap());
        assert_eq!(cl.separability, Separability::Genuine);
        assert_eq!(cl.case, Case::Case1);
        assert_eq!(cl.special, Special::Ghz);
        for s in cl.sigma_triple {
            assert_abs_diff_eq!(s, 0.64, epsilon = 1e-12);
        }
        assert!(!cl.non_canonical_gauge);
    }

    #[test]
    fn w_state_is_case1_without_tag() {
        let cl = classify_default(&ThreeQubitState::w());
        assert_eq!(cl.case, Case::Case1);
        assert_eq!(cl.special, Special::Unremarkable);
        for s in cl.sigma_triple {
            assert_abs_diff_eq!(s, 2.0 / 3.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn slice_one_fixture() {
        let (a, b) = (0.3f64.sqrt(), 0.2f64.sqrt());
        let s = ThreeQubitState::from_entries(&[
            ((1, 1, 1), c(a)),
            ((2, 2, 1), c(a)),
            ((1, 1, 2), c(b)),
            ((2, 2, 2), c(-b)),
        ])
        .unwrap();
        let cl = classify_default(&s);
        assert_eq!(cl.case, Case::Case2_12);
        assert_eq!(cl.special, Special::S1);
        assert!(cl.non_canonical_gauge);
        let want = [0.5, 0.5, 0.6];
        for (g, w) in cl.sigma_triple.iter().zip(want) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-11);
        }
    }

    #[test]
    fn biseparable_fixture() {
        let s = ThreeQubitState::from_entries(&[((1, 1, 1), c(1.0)), ((2, 2, 1), c(1.0))]).unwrap();
        let cl = classify_default(&s);
        assert_eq!(cl.separability, Separability::Biseparable(Cut::CAb));
        assert_eq!(cl.residuals.polynomial_separability, cl.separability);
        assert_eq!(cl.case, Case::Case2_12);
        assert_eq!(cl.special, Special::Unremarkable);
        let want = [0.5, 0.5, 1.0];
        for (g, w) in cl.sigma_triple.iter().zip(want) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-11);
        }
    }

    #[test]
    fn basis_state_is_separable_case1() {
        let s = ThreeQubitState::from_entries(&[((2, 1, 2), c(1.0))]).unwrap();
        let cl = classify_default(&s);
        assert_eq!(cl.separability, Separability::FullySeparable);
        assert_eq!(cl.case, Case::Case1);
        assert_eq!(cl.special, Special::Unremarkable);
        assert_eq!(cl.support, Some(Special::Ghz));
    }

    #[test]
    fn beechnut_with_distinct_spectra() {
        // |t111|² = 0.4, |t122|² = 0.3, |t212|² = 0.2, |t221|² = 0.1
        let s = ThreeQubitState::from_entries(&[
            ((1, 1, 1), c(0.4f64.sqrt())),
            ((1, 2, 2), c(0.3f64.sqrt())),
            ((2, 1, 2), c(0.2f64.sqrt())),
            ((2, 2, 1), c(0.1f64.sqrt())),
        ])
        .unwrap();
        let cl = classify_default(&s);
        assert_eq!(cl.case, Case::Case3);
        assert_eq!(cl.special, Special::B1);
        assert_eq!(cl.separability, Separability::Genuine);
    }

    #[test]
    fn equal_beechnut_is_degenerate() {
        let s = ThreeQubitState::from_entries(&[
            ((1, 1, 1), c(0.5)),
            ((1, 2, 2), c(0.5)),
            ((2, 1, 2), c(0.5)),
            ((2, 2, 1), c(0.5)),
        ])
        .unwrap();
        let cl = classify_default(&s);
        assert_eq!(cl.case, Case::Case1);
        assert_eq!(cl.support, Some(Special::B1));
        assert!(cl.non_canonical_gauge);
        assert_eq!(cl.special, Special::Unremarkable);
    }

    #[test]
    fn case_of_triple() {
        assert_eq!(Case::of_triple([0.5, 0.5, 0.5], 1e-8), Case::Case1);
        assert_eq!(Case::of_triple([0.5, 0.5, 0.7], 1e-8), Case::Case2_12);
        assert_eq!(Case::of_triple([0.5, 0.7, 0.5], 1e-8), Case::Case2_13);
        assert_eq!(Case::of_triple([0.7, 0.5, 0.5], 1e-8), Case::Case2_23);
        assert_eq!(Case::of_triple([0.6, 0.7, 0.8], 1e-8), Case::Case3);
    }

    #[test]
    fn tags_round_trip() {
        for c in [Case::Case1, Case::Case2_12, Case::Case2_13, Case::Case2_23, Case::Case3] {
            assert_eq!(Case::from_tag(c.tag()), Some(c));
        }
        for s in PATTERNS.into_iter().chain([Special::Unremarkable]) {
            assert_eq!(Special::from_tag(s.tag()), Some(s));
        }
    }
}
