//! The region of attainable `(σ₁⁽¹⁾², σ₁⁽²⁾², σ₁⁽³⁾²)` triples.
//!
//! Every pure three-qubit state satisfies `½ ≤ sᵢ ≤ 1` and
//!
//! ```text
//! s1 + s2 − s3 ≤ 1,   s1 + s3 − s2 ≤ 1,   s2 + s3 − s1 ≤ 1.
//! ```
//!
//! Inside the cube these cut out a bipyramid over the triangle
//! `(1, ½, ½), (½, 1, ½), (½, ½, 1)` with apexes `(½, ½, ½)` and `(1, 1, 1)`.

use super::{one_body_rdms, Case, ThreeQubitState};
use crate::DEFAULT_SIGMA_TOL;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolytopePoint {
    /// Raw leading eigenvalues of `ρ^A`, `ρ^B`, `ρ^C`.
    pub coords: [f64; 3],
    /// Case of the triple at the default σ tolerance.
    pub tag: Option<Case>,
}

impl PolytopePoint {
    pub fn new(coords: [f64; 3]) -> Self {
        Self {
            coords,
            tag: Some(Case::of_triple(coords, DEFAULT_SIGMA_TOL)),
        }
    }

    /// Coordinates clamped to `[½, 1]`, for reporting only.
    pub fn clamped(&self) -> [f64; 3] {
        self.coords.map(|s| s.clamp(0.5, 1.0))
    }
}

/// Slacks of every constraint; a constraint holds when its slack is `≥ −tol`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Membership {
    pub inside: bool,
    /// `1 − (s1 + s2 − s3)`, `1 − (s1 + s3 − s2)`, `1 − (s2 + s3 − s1)`.
    pub facet_slack: [f64; 3],
    /// `sᵢ − ½`
    pub lower_slack: [f64; 3],
    /// `1 − sᵢ`
    pub upper_slack: [f64; 3],
}

impl Membership {
    /// Most negative slack (0 when every constraint holds exactly or loosely).
    pub fn worst_violation(&self) -> f64 {
        self.facet_slack
            .iter()
            .chain(&self.lower_slack)
            .chain(&self.upper_slack)
            .fold(0.0f64, |m, &x| m.max(-x))
    }
}

/// Largest eigenvalue of each one-body marginal, in closed form for 2×2
/// Hermitian matrices.
pub fn polytope_point(s: &ThreeQubitState) -> PolytopePoint {
    let coords = one_body_rdms(s).map(|r| {
        let m = r.matrix.matrix();
        let (a, d, b) = (m[(0, 0)].re, m[(1, 1)].re, m[(0, 1)]);
        0.5 * (a + d + ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt())
    });
    PolytopePoint::new(coords)
}

pub fn polytope_membership(p: &PolytopePoint, tol: f64) -> Membership {
    let [s1, s2, s3] = p.coords;
    let facet_slack = [1.0 - (s1 + s2 - s3), 1.0 - (s1 + s3 - s2), 1.0 - (s2 + s3 - s1)];
    let lower_slack = p.coords.map(|s| s - 0.5);
    let upper_slack = p.coords.map(|s| 1.0 - s);
    let inside = facet_slack
        .iter()
        .chain(&lower_slack)
        .chain(&upper_slack)
        .all(|&x| x >= -tol);
    Membership {
        inside,
        facet_slack,
        lower_slack,
        upper_slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn points_of_named_states() {
        let one = Complex64::new(1.0, 0.0);
        let basis = ThreeQubitState::from_entries(&[((1, 1, 1), one)]).unwrap();
        assert_eq!(polytope_point(&basis).coords, [1.0, 1.0, 1.0]);

        let ghz = ThreeQubitState::ghz(one, one).unwrap();
        for s in polytope_point(&ghz).coords {
            assert_abs_diff_eq!(s, 0.5, epsilon = 1e-15);
        }

        let w = polytope_point(&ThreeQubitState::w());
        for s in w.coords {
            assert_abs_diff_eq!(s, 2.0 / 3.0, epsilon = 1e-15);
        }
        assert_eq!(w.tag, Some(Case::Case1));
    }

    #[test]
    fn membership_examples() {
        let m = polytope_membership(&PolytopePoint::new([1.0, 1.0, 1.0]), 1e-10);
        assert!(m.inside);
        assert_eq!(m.facet_slack, [0.0; 3]);
        assert_eq!(m.upper_slack, [0.0; 3]);

        let m = polytope_membership(&PolytopePoint::new([1.0, 0.5, 0.5]), 1e-10);
        assert!(m.inside);
        assert_eq!(m.facet_slack[0], 0.0);

        let m = polytope_membership(&PolytopePoint::new([0.9, 0.9, 0.5]), 1e-10);
        assert!(!m.inside);
        assert_abs_diff_eq!(m.worst_violation(), 0.3, epsilon = 1e-15);
    }

    #[test]
    fn clamping_is_for_reporting_only() {
        let p = PolytopePoint::new([1.0 + 1e-15, 0.5 - 1e-15, 0.7]);
        assert_eq!(p.clamped(), [1.0, 0.5, 0.7]);
        assert_eq!(p.coords[0], 1.0 + 1e-15);
    }
}
