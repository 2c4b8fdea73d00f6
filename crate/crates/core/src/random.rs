//! Haar-distributed random states and unitaries.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::CMatrix;
use crate::tensor::ComplexTensor;

/// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniformly (Haar) random unit vector in `C^{∏dims}`, shaped as a tensor.
pub fn haar_state<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> ComplexTensor {
    let n: usize = dims.iter().product();
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm > 0.0 {
            let v = v.into_iter().map(|z| z / norm).collect();
            return ComplexTensor::from_vec(dims.to_vec(), v).expect("dims match sample length");
        }
    }
}

/// Haar-random `n × n` unitary: Gram–Schmidt on a complex Ginibre matrix.
/// Classical Gram–Schmidt already yields an `R` with positive diagonal, which
/// is what makes the distribution Haar.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        // two passes for orthogonality to machine precision
        for _ in 0..2 {
            for q in &cols {
                let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut u = CMatrix::zeros(n, n);
    for (c, col) in cols.iter().enumerate() {
        for (r, &z) in col.iter().enumerate() {
            u[(r, c)] = z;
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::validate_unitary;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitaries_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=5 {
            assert!(validate_unitary(&haar_unitary(n, &mut rng)) < 1e-13);
        }
    }

    #[test]
    fn states_are_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let s = haar_state(&[2, 2, 2], &mut rng);
            assert!((s.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let a = haar_state(&[2, 2, 2], &mut ChaCha8Rng::seed_from_u64(11));
        let b = haar_state(&[2, 2, 2], &mut ChaCha8Rng::seed_from_u64(11));
        assert_eq!(a, b);
    }
}
