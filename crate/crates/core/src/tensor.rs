//! Dense complex tensors of arbitrary order.
//!
//! Elements are stored flat in row-major order with the last index varying
//! fastest. Every index and mode number taken by the public API is 1-based.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexTensor {
    dims: Vec<usize>,
    elements: Vec<Complex64>,
}

impl ComplexTensor {
    /// Copies `elements` into a new tensor of shape `dims`.
    pub fn new(dims: &[usize], elements: &[Complex64]) -> Result<Self> {
        Self::from_vec(dims.to_vec(), elements.to_vec())
    }

    pub fn from_vec(dims: Vec<usize>, elements: Vec<Complex64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("a tensor needs at least one mode".into()));
        }
        if dims.contains(&0) {
            return Err(Error::Shape(format!("dimensions must be positive, got {dims:?}")));
        }
        let expected: usize = dims.iter().product();
        if elements.len() != expected {
            return Err(Error::Shape(format!(
                "dims {dims:?} need {expected} elements, got {}",
                elements.len()
            )));
        }
        Ok(Self { dims, elements })
    }

    pub fn zeros(dims: &[usize]) -> Result<Self> {
        let n = dims.iter().product();
        Self::from_vec(dims.to_vec(), vec![Complex64::new(0.0, 0.0); n])
    }

    /// Tensor with a single unit element at the (1-based) multi-index.
    pub fn basis(dims: &[usize], index: &[usize]) -> Result<Self> {
        let mut t = Self::zeros(dims)?;
        let flat = t.flat_index(index)?;
        t.elements[flat] = Complex64::new(1.0, 0.0);
        Ok(t)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Complex64] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Complex64> {
        self.elements
    }

    /// Flat storage position of a 1-based multi-index.
    pub fn flat_index(&self, index: &[usize]) -> Result<usize> {
        if index.len() != self.order() {
            return Err(Error::Argument(format!(
                "index {index:?} has {} entries, tensor has order {}",
                index.len(),
                self.order()
            )));
        }
        let mut flat = 0;
        for (n, (&i, &d)) in index.iter().zip(&self.dims).enumerate() {
            if i == 0 || i > d {
                return Err(Error::Argument(format!(
                    "index {i} out of range 1..={d} in mode {}",
                    n + 1
                )));
            }
            flat = flat * d + (i - 1);
        }
        Ok(flat)
    }

    pub fn get(&self, index: &[usize]) -> Result<Complex64> {
        Ok(self.elements[self.flat_index(index)?])
    }

    pub fn set(&mut self, index: &[usize], value: Complex64) -> Result<()> {
        let flat = self.flat_index(index)?;
        self.elements[flat] = value;
        Ok(())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.elements.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dims: self.dims.clone(),
            elements: self.elements.iter().map(|&z| z * s).collect(),
        }
    }

    /// Frobenius norm of `self - other`; infinity when shapes differ.
    pub fn distance(&self, other: &ComplexTensor) -> f64 {
        if self.dims != other.dims {
            return f64::INFINITY;
        }
        self.elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Reorders the modes: mode `k` of the result is mode `perm[k]` of `self`
    /// (both 1-based).
    pub fn permute_modes(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true)) {
            return Err(Error::Argument(format!("{perm:?} is not a permutation of 1..={n}")));
        }
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p - 1]).collect();
        let strides = strides(&self.dims);
        let mut out = Vec::with_capacity(self.len());
        for_each_index(&new_dims, |idx| {
            let src: usize = idx.iter().zip(perm).map(|(&i, &p)| i * strides[p - 1]).sum();
            out.push(self.elements[src]);
        });
        Self::from_vec(new_dims, out)
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode == 0 || mode > self.order() {
            return Err(Error::Argument(format!(
                "mode {mode} out of range 1..={}",
                self.order()
            )));
        }
        Ok(())
    }
}

/// Row-major strides (0-based) for `dims`.
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Calls `f` with every 0-based multi-index of `dims` in storage order.
fn for_each_index(dims: &[usize], mut f: impl FnMut(&[usize])) {
    let total: usize = dims.iter().product();
    let mut idx = vec![0; dims.len()];
    for _ in 0..total {
        f(&idx);
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The remaining modes in cyclic order `n+1, …, N, 1, …, n−1` (0-based).
fn cyclic_modes(order: usize, mode0: usize) -> impl Iterator<Item = usize> {
    (1..order).map(move |k| (mode0 + k) % order)
}

/// Column index of each flat element in the mode-`mode0` unfolding
/// (row is simply the mode's own index).
fn unfolding_columns(dims: &[usize], mode0: usize) -> Vec<usize> {
    let order = dims.len();
    // Column stride of each remaining mode: the product of the dimensions that
    // follow it in the cyclic order.
    let mut col_stride = vec![0; order];
    let mut acc = 1;
    let cyc: Vec<usize> = cyclic_modes(order, mode0).collect();
    for &m in cyc.iter().rev() {
        col_stride[m] = acc;
        acc *= dims[m];
    }
    let mut cols = Vec::with_capacity(dims.iter().product());
    for_each_index(dims, |idx| {
        cols.push(cyc.iter().map(|&m| idx[m] * col_stride[m]).sum());
    });
    cols
}

/// Matrix unfolding `X_(n)`: `I_n` rows and `∏_{m≠n} I_m` columns.
///
/// Element `(i_1, …, i_N)` lands in row `i_n`. The column index runs over the
/// other modes in the cyclic order `n+1, …, N, 1, …, n−1`, the first of them
/// being the most significant. For three qubits this gives
///
/// ```text
/// X_(1): column (i2-1)*2 + i3      X_(2): column (i3-1)*2 + i1      X_(3): column (i1-1)*2 + i2
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct UnfoldedMatrix {
    mode: usize,
    matrix: CMatrix,
}

impl UnfoldedMatrix {
    pub fn new(mode: usize, matrix: CMatrix) -> Self {
        Self { mode, matrix }
    }

    /// 1-based mode this matrix unfolds.
    pub fn mode(&self) -> usize {
        self.mode
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// 1-based entry access.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row - 1, col - 1)]
    }
}

pub fn unfold(t: &ComplexTensor, mode: usize) -> Result<UnfoldedMatrix> {
    t.check_mode(mode)?;
    let m0 = mode - 1;
    let rows = t.dims[m0];
    let cols = t.len() / rows;
    let strides = strides(&t.dims);
    let columns = unfolding_columns(&t.dims, m0);
    let mut mat = CMatrix::zeros(rows, cols);
    for (flat, (&z, &c)) in t.elements.iter().zip(&columns).enumerate() {
        let r = (flat / strides[m0]) % rows;
        mat[(r, c)] = z;
    }
    Ok(UnfoldedMatrix::new(mode, mat))
}

/// Inverse of [`unfold`].
pub fn refold(m: &UnfoldedMatrix, dims: &[usize]) -> Result<ComplexTensor> {
    let mut t = ComplexTensor::zeros(dims)?;
    t.check_mode(m.mode)?;
    let m0 = m.mode - 1;
    if m.rows() != dims[m0] || m.rows() * m.cols() != t.len() {
        return Err(Error::Shape(format!(
            "{}x{} unfolding of mode {} does not match dims {dims:?}",
            m.rows(),
            m.cols(),
            m.mode
        )));
    }
    let strides = strides(dims);
    let columns = unfolding_columns(dims, m0);
    for (flat, &c) in columns.iter().enumerate() {
        let r = (flat / strides[m0]) % dims[m0];
        t.elements[flat] = m.matrix[(r, c)];
    }
    Ok(t)
}

/// Local transformation `X' = M⁽¹⁾ ⊗ … ⊗ M⁽ᴺ⁾ X`, i.e.
/// `x'_{j_1…j_N} = Σ m⁽¹⁾_{j_1 i_1} ⋯ m⁽ᴺ⁾_{j_N i_N} x_{i_1…i_N}`.
///
/// Applied as N successive mode products.
pub fn multilinear_transform(t: &ComplexTensor, mats: &[CMatrix]) -> Result<ComplexTensor> {
    if mats.len() != t.order() {
        return Err(Error::Shape(format!(
            "{} matrices for a tensor of order {}",
            mats.len(),
            t.order()
        )));
    }
    for (n, (m, &d)) in mats.iter().zip(&t.dims).enumerate() {
        if m.rows() != d || m.cols() != d {
            return Err(Error::Shape(format!(
                "mode {} needs a {d}x{d} matrix, got {}x{}",
                n + 1,
                m.rows(),
                m.cols()
            )));
        }
    }
    let strides = strides(&t.dims);
    let mut cur = t.elements.clone();
    let mut next = vec![Complex64::new(0.0, 0.0); cur.len()];
    for (n, m) in mats.iter().enumerate() {
        let d = t.dims[n];
        let stride = strides[n];
        let block = stride * d;
        for base in (0..cur.len()).step_by(block) {
            for inner in 0..stride {
                let off = base + inner;
                for j in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..d {
                        acc += m[(j, i)] * cur[off + i * stride];
                    }
                    next[off + j * stride] = acc;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    ComplexTensor::from_vec(t.dims.clone(), cur)
}

/// `⟨a, b⟩ = Σ conj(a_i) b_i`.
pub fn inner(a: &ComplexTensor, b: &ComplexTensor) -> Result<Complex64> {
    if a.dims != b.dims {
        return Err(Error::Shape(format!(
            "inner product of {:?} and {:?}",
            a.dims, b.dims
        )));
    }
    Ok(a.elements
        .iter()
        .zip(&b.elements)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Order N−1 tensor obtained by fixing index `mode` to `index` (both 1-based).
pub fn subtensor(t: &ComplexTensor, mode: usize, index: usize) -> Result<ComplexTensor> {
    t.check_mode(mode)?;
    let m0 = mode - 1;
    if index == 0 || index > t.dims[m0] {
        return Err(Error::Argument(format!(
            "index {index} out of range 1..={} in mode {mode}",
            t.dims[m0]
        )));
    }
    if t.order() == 1 {
        return Err(Error::Argument("cannot slice an order-1 tensor".into()));
    }
    let strides = strides(&t.dims);
    let dims: Vec<usize> = t
        .dims
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != m0)
        .map(|(_, &d)| d)
        .collect();
    let elements = t
        .elements
        .iter()
        .enumerate()
        .filter(|&(flat, _)| (flat / strides[m0]) % t.dims[m0] == index - 1)
        .map(|(_, &z)| z)
        .collect();
    ComplexTensor::from_vec(dims, elements)
}
