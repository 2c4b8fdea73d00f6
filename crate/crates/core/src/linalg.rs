//! Dense complex linear algebra for small matrices.
//!
//! Everything here is sized for reduced density matrices of a few qubits: the
//! Hermitian eigensolver is a cyclic complex Jacobi method, which is
//! unconditionally stable and exact enough at `n <= 8`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Maximum number of full Jacobi sweeps before giving up.
const MAX_SWEEPS: usize = 64;

/// Row-major dense complex matrix. Indexing is 0-based: `m[(row, col)]`.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major data.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_row_major(r, c, rows.concat())
    }

    /// Real matrix convenience constructor.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_row_major(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Complex64::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].conj();
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` supplying the most significant index.
    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn sub(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape(format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    /// Largest absolute entry-wise difference; `f64::INFINITY` on shape mismatch.
    pub fn max_abs_diff(&self, rhs: &CMatrix) -> f64 {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;

    /// Panics on a dimension mismatch; use [`CMatrix::matmul`] for the checked form.
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, " ")?;
            for z in self.row(r) {
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A square matrix known to be Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    /// Checks `m[i][j] == conj(m[j][i])` within `tol` and wraps the matrix.
    pub fn new(m: CMatrix, tol: f64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape(format!("{}x{} matrix is not square", m.rows, m.cols)));
        }
        let dev = hermitian_deviation(&m);
        if dev > tol {
            return Err(Error::Validation(format!(
                "matrix is not Hermitian: max |m_ij - conj(m_ji)| = {dev:e} > {tol:e}"
            )));
        }
        Ok(Self(m))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }
}

fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.rows;
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// `m · m†`. Only the upper triangle is accumulated; the lower one is its
/// mirror, so the result is Hermitian bit-for-bit.
pub fn gram(m: &CMatrix) -> HermitianMatrix {
    let r = m.rows;
    let mut g = CMatrix::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            let s: Complex64 = m.row(i).iter().zip(m.row(j)).map(|(a, b)| a * b.conj()).sum();
            if i == j {
                g[(i, i)] = Complex64::new(s.re, 0.0);
            } else {
                g[(i, j)] = s;
                g[(j, i)] = s.conj();
            }
        }
    }
    HermitianMatrix(g)
}

/// Spectral decomposition `h = U · diag(λ) · U†`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Columns are the eigenvectors, in the order of `eigenvalues`.
    pub unitary: CMatrix,
    /// Some pair of eigenvalues lies within the solver tolerance of each
    /// other, so the corresponding eigenvectors are not canonical.
    pub degenerate: bool,
}

impl EigenDecomposition {
    /// `U · diag(λ) · U†`.
    pub fn reconstruct(&self) -> CMatrix {
        let d = CMatrix::diag(&self.eigenvalues);
        &(&self.unitary * &d) * &self.unitary.adjoint()
    }
}

/// Cyclic complex Jacobi eigensolver.
///
/// Eigenvalues come back in descending order (stable, so exact ties keep the
/// order in which Jacobi produced them). Each eigenvector's phase is fixed so
/// that its largest-magnitude entry is real and non-negative, ties going to the
/// lowest row. `tol` is both the Hermiticity check and the gap below which two
/// eigenvalues count as degenerate.
pub fn hermitian_eig(h: &HermitianMatrix, tol: f64) -> Result<EigenDecomposition> {
    let mut a = h.0.clone();
    let dev = hermitian_deviation(&a);
    if dev > tol {
        return Err(Error::Validation(format!(
            "matrix is not Hermitian: deviation {dev:e} > {tol:e}"
        )));
    }
    let n = a.rows;
    let mut v = CMatrix::identity(n);
    // Symmetrize exactly so the rotations see a true Hermitian matrix.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let m = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = m;
            a[(j, i)] = m.conj();
        }
    }

    let scale = a.frobenius_norm();
    let mut converged = n <= 1 || scale == 0.0;
    let mut sweeps = 0;
    let mut prev_off = f64::INFINITY;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        let off = off_diagonal_norm(&a);
        // Either fully converged, or stalled at the rounding floor.
        converged = off <= f64::EPSILON * scale || (off >= prev_off && off <= 1e-12 * scale);
        prev_off = off;
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut unitary = CMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        let mut col = v.column(src);
        fix_gauge(&mut col);
        for (r, z) in col.into_iter().enumerate() {
            unitary[(r, k)] = z;
        }
    }
    let degenerate = eigenvalues.windows(2).any(|w| (w[0] - w[1]).abs() <= tol);

    Ok(EigenDecomposition {
        eigenvalues,
        unitary,
        degenerate,
    })
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.rows;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating `a[p][q]`: `a ← G† a G`, `v ← v G` with
/// `G = [[c, -s e^{iφ}], [s e^{-iφ}, c]]` on the (p, q) plane, where
/// `a[p][q] = |a_pq| e^{iφ}`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    // Off-diagonal of G†AG vanishes when |a_pq| t² - (a_qq - a_pp) t - |a_pq| = 0;
    // take the root of smaller magnitude.
    let zeta = (aqq - app) / (2.0 * mag);
    let t = if zeta.is_finite() {
        let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
        -sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let se_pos = phase * s; // s e^{iφ}
    let se_neg = phase.conj() * s; // s e^{-iφ}

    let n = a.rows;
    // columns: A G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * se_neg;
        a[(k, q)] = -akp * se_pos + akq * c;
    }
    // rows: G† (A G)
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * se_pos;
        a[(q, k)] = -apk * se_neg + aqk * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * se_neg;
        v[(k, q)] = -vkp * se_pos + vkq * c;
    }
}

/// Rotates the column's phase so its largest-magnitude entry (lowest row on
/// ties) is real and non-negative.
fn fix_gauge(col: &mut [Complex64]) {
    let mut best = 0;
    let mut best_mag = -1.0;
    for (i, z) in col.iter().enumerate() {
        let m = z.norm();
        if m > best_mag {
            best = i;
            best_mag = m;
        }
    }
    if best_mag <= 0.0 {
        return;
    }
    let pivot = col[best];
    let phase = pivot.conj() / best_mag;
    for z in col.iter_mut() {
        *z *= phase;
    }
    col[best] = Complex64::new(best_mag, 0.0);
}

/// `‖u† u − I‖_F`. Non-square input returns infinity.
pub fn validate_unitary(u: &CMatrix) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    let prod = &u.adjoint() * u;
    prod.sub(&CMatrix::identity(u.rows))
        .map(|d| d.frobenius_norm())
        .unwrap_or(f64::INFINITY)
}
