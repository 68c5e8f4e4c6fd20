//! Exact dense linear algebra: reduced row echelon form, kernels, images,
//! intersections, quotient complements, and linear solving.
//!
//! The algorithms are generic over any exact field scalar satisfying
//! [`Field`]; the rest of the crate instantiates them at [`Rational`].
//! Matrices are dense and row-major; every dimension in scope is at most a
//! few hundred, so no sparse formats are needed. All operations are pure.

use crate::error::Error;
use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact field scalar bound used by the generic linear algebra.
///
/// Satisfied by [`Rational`]; floating-point types also satisfy the trait
/// bounds but are deliberately never instantiated by this crate.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
{
}

/// Exact rational scalar: arbitrary-precision, always in lowest terms with a
/// positive denominator (maintained by the underlying representation).
pub type Rational = num_rational::BigRational;

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has length {}, expected {ncols}",
                    r.len()
                )));
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// Borrows row `r` as a slice.
    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix product; fails on inner-dimension mismatch.
    ///
    /// Zero entries are skipped, which matters because differential matrices
    /// are overwhelmingly sparse even in this dense representation.
    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product; fails on length mismatch.
    pub fn mat_vec(&self, v: &[T]) -> Result<Vec<T>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![T::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                out[i] = out[i].clone() + a.clone() * x.clone();
            }
        }
        Ok(out)
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form together with the rank.
///
/// Pivots are exactly 1 and pivot columns are elementary.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, usize) {
    let (r, pivots) = rref_with_pivots(m);
    (r, pivots.len())
}

/// RREF plus the list of pivot columns in row order.
pub fn rref_with_pivots<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        // Find a pivot row at or below `lead`.
        let Some(pr) = (lead..rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.data.swap_rows(rows, cols, lead, pr);
        // Normalize the pivot row.
        let inv = T::one() / a.get(lead, col).clone();
        for c in col..cols {
            let v = a.get(lead, c).clone() * inv.clone();
            a.set(lead, c, v);
        }
        // Eliminate the pivot column from every other row.
        for r in 0..rows {
            if r == lead || a.get(r, col).is_zero() {
                continue;
            }
            let f = a.get(r, col).clone();
            for c in col..cols {
                let s = a.get(lead, c).clone();
                if s.is_zero() {
                    continue;
                }
                let v = a.get(r, c).clone() - f.clone() * s;
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    (a, pivots)
}

trait SwapRows<T> {
    fn swap_rows(&mut self, rows: usize, cols: usize, a: usize, b: usize);
}

impl<T> SwapRows<T> for Vec<T> {
    fn swap_rows(&mut self, _rows: usize, cols: usize, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..cols {
            self.swap(a * cols + c, b * cols + c);
        }
    }
}

/// Canonical basis of the right kernel `{ v : m v = 0 }`.
///
/// The dimension always equals `cols - rank`.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let (r, pivots) = rref_with_pivots(m);
    let cols = m.cols;
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (row, &p) in pivots.iter().enumerate() {
            let coeff = r.get(row, free);
            if !coeff.is_zero() {
                v[p] = T::zero() - coeff.clone();
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(cols, basis)
}

/// Some solution `x` of `m x = b`, or `None` if the system is inconsistent.
///
/// The returned solution is canonical: every free variable is zero (the
/// particular solution read off the RREF back-substitution). This is the
/// "minimal-support" solution referenced by the deformation machinery.
pub fn solve_linear<T: Field>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), m.rows, "solve_linear: rhs length must equal rows");
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols, b[r].clone());
    }
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![T::zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols).clone();
    }
    Some(x)
}

/// A linear subspace of a fixed ambient coordinate space.
///
/// The basis is stored in reduced row echelon form, so equality of
/// subspaces is structural equality of the representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T = Rational> {
    ambient: usize,
    basis: Vec<Vec<T>>,
}

impl<T: Field> Subspace<T> {
    /// The zero subspace of the given ambient dimension.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The full ambient space.
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![T::zero(); ambient];
                v[i] = T::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Canonicalizes a spanning set into an RREF basis.
    ///
    /// Panics if a vector's length differs from `ambient` (internal
    /// contract; file input is validated before reaching this point).
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<T>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(vectors).expect("validated above");
        let (r, pivots) = rref_with_pivots(&m);
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Reduces `v` against the RREF basis, returning the residue.
    ///
    /// The residue is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut w = v.to_vec();
        for row in &self.basis {
            let p = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wi, ri) in w.iter_mut().zip(row.iter()) {
                if !ri.is_zero() {
                    *wi = wi.clone() - f.clone() * ri.clone();
                }
            }
        }
        w
    }

    /// Membership test against the canonical basis.
    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// True if every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Intersection via the Zassenhaus block construction.
    pub fn intersect(&self, other: &Subspace<T>) -> Result<Subspace<T>, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "intersect: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(std::iter::repeat(T::zero()).take(n));
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let m = Matrix::from_rows(rows).expect("uniform lengths");
        let (r, pivots) = rref_with_pivots(&m);
        let mut inter = Vec::new();
        for i in 0..pivots.len() {
            let row = r.row(i);
            if row[..n].iter().all(Zero::is_zero) {
                inter.push(row[n..].to_vec());
            }
        }
        Ok(Subspace::from_spanning(n, inter))
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace<T>) -> Result<Subspace<T>, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "sum: ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(self.ambient, vectors))
    }
}

/// Free-function membership test matching the subspace operation set.
pub fn subspace_membership<T: Field>(s: &Subspace<T>, v: &[T]) -> bool {
    s.contains(v)
}

/// Canonical representatives of the quotient `v / w` (requires `w ⊆ v`).
///
/// Construction: reduce each basis vector of `v` against the RREF basis of
/// `w`, then re-RREF the residues. The result is deterministic, every
/// representative lies in `v`, none lies in `w`, and the count is
/// `dim v - dim w`.
pub fn quotient_complement<T: Field>(
    v: &Subspace<T>,
    w: &Subspace<T>,
) -> Result<Subspace<T>, Error> {
    if v.ambient != w.ambient {
        return Err(Error::DimensionMismatch(format!(
            "quotient: ambient {} vs {}",
            v.ambient, w.ambient
        )));
    }
    if !v.contains_subspace(w) {
        return Err(Error::NotASubspace(
            "quotient_complement: w is not contained in v".into(),
        ));
    }
    let residues: Vec<Vec<T>> = v
        .basis
        .iter()
        .map(|b| w.reduce(b))
        .filter(|r| !r.iter().all(Zero::is_zero))
        .collect();
    Ok(Subspace::from_spanning(v.ambient, residues))
}

/// Column space of a matrix as a canonical subspace of the row space `K^rows`.
pub fn column_space<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let cols: Vec<Vec<T>> = (0..m.cols())
        .map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).collect())
        .collect();
    Subspace::from_spanning(m.rows(), cols)
}

/// Vector helpers shared across modules. All panic on length mismatch,
/// which indicates an internal bug rather than bad input.
pub mod vec_ops {
    use super::Field;
    use num_traits::Zero;

    pub fn add<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
        assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(x, y)| x.clone() + y.clone())
            .collect()
    }

    pub fn sub<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
        assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .map(|(x, y)| x.clone() - y.clone())
            .collect()
    }

    pub fn scale<T: Field>(c: &T, a: &[T]) -> Vec<T> {
        a.iter().map(|x| c.clone() * x.clone()).collect()
    }

    /// a += c * b, in place.
    pub fn axpy<T: Field>(a: &mut [T], c: &T, b: &[T]) {
        assert_eq!(a.len(), b.len());
        if c.is_zero() {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
    }

    pub fn is_zero<T: Field>(a: &[T]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    pub fn neg<T: Field>(a: &[T]) -> Vec<T> {
        a.iter().map(|x| T::zero() - x.clone()).collect()
    }
}
