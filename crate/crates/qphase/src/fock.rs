//! Basis bookkeeping and dense complex linear algebra.
//!
//! A [`FockBasis`] is the index lattice every other value is tagged with:
//! either the usual one-sided number ladder n = 0..D−1, or a two-sided
//! lattice n = −M..M that stands in for a doubly infinite sum. [`Ket`] and
//! [`Op`] are a complex amplitude vector and a dense complex square matrix
//! over such a basis. Mixing bases is a contract violation and is reported
//! as an error, never coerced.
//!
//! All values are immutable after construction and can be shared freely
//! across threads.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix storage used throughout the crate.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex vector storage used throughout the crate.
pub type CVector = DVector<Complex64>;

/// How the edges of a two-sided lattice are treated.
///
/// `Truncated` drops any amplitude shifted past the edge (the affected
/// columns are zero-filled and reported as artifacts); `Cyclic` wraps the
/// shift around the lattice, which is the only finite-dimensional choice
/// that keeps the pure shift exactly unitary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Truncated,
    Cyclic,
}

/// Index lattice for a truncated number basis.
///
/// `OneSided` holds n = 0..D−1 with matrix row = n. `TwoSided` holds
/// n = −M..M with row = n + M, so the lattice has dimension 2M + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FockBasis {
    OneSided { dim: usize },
    TwoSided { half_width: usize, boundary: Boundary },
}

impl FockBasis {
    /// One-sided basis n = 0..D−1. Requires D ≥ 4 so identities can be
    /// tested away from the truncation boundary.
    pub fn one_sided(dim: usize) -> Result<Self> {
        if dim < 4 {
            return Err(Error::InvalidBasis(format!(
                "one-sided dimension must be at least 4, got {dim}"
            )));
        }
        Ok(FockBasis::OneSided { dim })
    }

    /// Two-sided basis n = −M..M. Requires M ≥ 2.
    pub fn two_sided(half_width: usize, boundary: Boundary) -> Result<Self> {
        if half_width < 2 {
            return Err(Error::InvalidBasis(format!(
                "two-sided half-width must be at least 2, got {half_width}"
            )));
        }
        Ok(FockBasis::TwoSided {
            half_width,
            boundary,
        })
    }

    /// Number of lattice sites, i.e. the matrix dimension.
    pub fn dim(&self) -> usize {
        match *self {
            FockBasis::OneSided { dim } => dim,
            FockBasis::TwoSided { half_width, .. } => 2 * half_width + 1,
        }
    }

    /// Smallest quantum number on the lattice.
    pub fn min_label(&self) -> i64 {
        match *self {
            FockBasis::OneSided { .. } => 0,
            FockBasis::TwoSided { half_width, .. } => -(half_width as i64),
        }
    }

    /// Largest quantum number on the lattice.
    pub fn max_label(&self) -> i64 {
        match *self {
            FockBasis::OneSided { dim } => dim as i64 - 1,
            FockBasis::TwoSided { half_width, .. } => half_width as i64,
        }
    }

    /// Matrix row of quantum number `n`, if `n` lies on the lattice.
    pub fn index_of(&self, n: i64) -> Option<usize> {
        if n < self.min_label() || n > self.max_label() {
            return None;
        }
        Some((n - self.min_label()) as usize)
    }

    /// Quantum number sitting at matrix row `row`.
    ///
    /// Panics if `row >= dim()`; rows are internal indices, not user input.
    pub fn label_of(&self, row: usize) -> i64 {
        assert!(row < self.dim(), "row {row} outside basis of dim {}", self.dim());
        self.min_label() + row as i64
    }

    /// Iterator over all quantum numbers, in row order.
    pub fn labels(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dim()).map(move |r| self.label_of(r))
    }

    pub fn is_one_sided(&self) -> bool {
        matches!(self, FockBasis::OneSided { .. })
    }

    /// Boundary mode of a two-sided basis; `None` for one-sided.
    pub fn boundary(&self) -> Option<Boundary> {
        match *self {
            FockBasis::OneSided { .. } => None,
            FockBasis::TwoSided { boundary, .. } => Some(boundary),
        }
    }

    fn check_same(&self, other: &FockBasis) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for FockBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FockBasis::OneSided { dim } => write!(f, "one-sided(dim={dim})"),
            FockBasis::TwoSided {
                half_width,
                boundary,
            } => write!(f, "two-sided(half_width={half_width}, {boundary:?})"),
        }
    }
}

/// Complex amplitude vector over a [`FockBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct Ket {
    basis: FockBasis,
    amps: CVector,
}

impl Ket {
    /// Wrap an amplitude vector. The length must match the basis dimension
    /// and every amplitude must be finite.
    pub fn new(basis: FockBasis, amps: CVector) -> Result<Self> {
        if amps.len() != basis.dim() {
            return Err(Error::InvalidParameter(format!(
                "amplitude vector of length {} does not fit {basis}",
                amps.len()
            )));
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameter(
                "non-finite amplitude in ket".into(),
            ));
        }
        Ok(Ket { basis, amps })
    }

    pub fn zero(basis: FockBasis) -> Self {
        Ket {
            basis,
            amps: CVector::zeros(basis.dim()),
        }
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn amps(&self) -> &CVector {
        &self.amps
    }

    /// Amplitude on quantum number `n`.
    pub fn amp(&self, n: i64) -> Result<Complex64> {
        let row = self.basis.index_of(n).ok_or(Error::LabelOutOfRange {
            n,
            min: self.basis.min_label(),
            max: self.basis.max_label(),
        })?;
        Ok(self.amps[row])
    }

    /// Euclidean norm ⟨ψ|ψ⟩^(1/2).
    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// ⟨self|other⟩ with the left argument conjugated.
    pub fn dot(&self, other: &Ket) -> Result<Complex64> {
        self.basis.check_same(&other.basis)?;
        Ok(self.amps.dotc(&other.amps))
    }

    /// Same ket rescaled to unit norm.
    pub fn normalized(&self) -> Ket {
        let n = self.norm();
        Ket {
            basis: self.basis,
            amps: self.amps.map(|z| z / n),
        }
    }
}

/// Number state |n⟩: unit amplitude at `index_of(n)`, zero elsewhere.
pub fn number_state(basis: FockBasis, n: i64) -> Result<Ket> {
    let row = basis.index_of(n).ok_or(Error::LabelOutOfRange {
        n,
        min: basis.min_label(),
        max: basis.max_label(),
    })?;
    let mut amps = CVector::zeros(basis.dim());
    amps[row] = Complex64::new(1.0, 0.0);
    Ok(Ket { basis, amps })
}

/// Dense complex square matrix over a [`FockBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct Op {
    basis: FockBasis,
    mat: CMatrix,
}

impl Op {
    /// Wrap a matrix. Must be square with the basis dimension.
    pub fn new(basis: FockBasis, mat: CMatrix) -> Result<Self> {
        if mat.nrows() != basis.dim() || mat.ncols() != basis.dim() {
            return Err(Error::InvalidParameter(format!(
                "{}x{} matrix does not fit {basis}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        Ok(Op { basis, mat })
    }

    pub fn zeros(basis: FockBasis) -> Self {
        Op {
            basis,
            mat: CMatrix::zeros(basis.dim(), basis.dim()),
        }
    }

    pub fn identity(basis: FockBasis) -> Self {
        Op {
            basis,
            mat: CMatrix::identity(basis.dim(), basis.dim()),
        }
    }

    /// Build from an entry function over (row, column) indices.
    pub fn from_fn(basis: FockBasis, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let d = basis.dim();
        Op {
            basis,
            mat: CMatrix::from_fn(d, d, f),
        }
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    /// Entry at (row, column).
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.mat[(row, col)]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Op {
        Op {
            basis: self.basis,
            mat: self.mat.adjoint(),
        }
    }

    /// Matrix product `self * right`.
    pub fn compose(&self, right: &Op) -> Result<Op> {
        self.basis.check_same(&right.basis)?;
        Ok(Op {
            basis: self.basis,
            mat: &self.mat * &right.mat,
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, ket: &Ket) -> Result<Ket> {
        self.basis.check_same(&ket.basis)?;
        Ok(Ket {
            basis: self.basis,
            amps: &self.mat * &ket.amps,
        })
    }

    /// ⟨ket|self|ket⟩ without normalizing `ket`.
    pub fn expectation(&self, ket: &Ket) -> Result<Complex64> {
        self.basis.check_same(&ket.basis)?;
        Ok(ket.amps.dotc(&(&self.mat * &ket.amps)))
    }

    pub fn add(&self, other: &Op) -> Result<Op> {
        self.basis.check_same(&other.basis)?;
        Ok(Op {
            basis: self.basis,
            mat: &self.mat + &other.mat,
        })
    }

    pub fn sub(&self, other: &Op) -> Result<Op> {
        self.basis.check_same(&other.basis)?;
        Ok(Op {
            basis: self.basis,
            mat: &self.mat - &other.mat,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Op {
        Op {
            basis: self.basis,
            mat: self.mat.map(|z| z * factor),
        }
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-abs entry of `self − other` after deleting the excluded rows AND
    /// the same-numbered columns.
    ///
    /// Truncation corrupts whole rows/columns; deleting them tests the
    /// interior claim exactly instead of averaging a bad entry away.
    pub fn residual_norm(&self, other: &Op, excluded_rows: &[usize]) -> Result<f64> {
        self.basis.check_same(&other.basis)?;
        let d = self.basis.dim();
        for &r in excluded_rows {
            if r >= d {
                return Err(Error::ExcludedRowOutOfRange { row: r, dim: d });
            }
        }
        let mut max = 0.0_f64;
        for i in 0..d {
            if excluded_rows.contains(&i) {
                continue;
            }
            for j in 0..d {
                if excluded_rows.contains(&j) {
                    continue;
                }
                let diff = (self.mat[(i, j)] - other.mat[(i, j)]).norm();
                if diff > max {
                    max = diff;
                }
            }
        }
        Ok(max)
    }

    /// Max-abs deviation from being Hermitian.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.adjoint();
        let mut max = 0.0_f64;
        for (a, b) in self.mat.iter().zip(adj.mat.iter()) {
            let d = (a - b).norm();
            if d > max {
                max = d;
            }
        }
        max
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn one_sided_index_map() {
        let b = FockBasis::one_sided(8).unwrap();
        assert_eq!(b.dim(), 8);
        assert_eq!(b.index_of(0), Some(0));
        assert_eq!(b.index_of(7), Some(7));
        assert_eq!(b.index_of(8), None);
        assert_eq!(b.index_of(-1), None);
        assert_eq!(b.label_of(3), 3);
    }

    #[test]
    fn two_sided_index_map() {
        let b = FockBasis::two_sided(3, Boundary::Cyclic).unwrap();
        assert_eq!(b.dim(), 7);
        assert_eq!(b.index_of(-3), Some(0));
        assert_eq!(b.index_of(0), Some(3));
        assert_eq!(b.index_of(3), Some(6));
        assert_eq!(b.index_of(4), None);
        let labels: Vec<i64> = b.labels().collect();
        assert_eq!(labels, vec![-3, -2, -1, 0, 1, 2, 3]);
    }

    #[test]
    fn basis_size_floor_enforced() {
        assert!(FockBasis::one_sided(3).is_err());
        assert!(FockBasis::two_sided(1, Boundary::Truncated).is_err());
    }

    #[test]
    fn number_state_vacuum_and_edges() {
        let b = FockBasis::one_sided(8).unwrap();
        let vac = number_state(b, 0).unwrap();
        assert_eq!(vac.amp(0).unwrap(), c(1.0, 0.0));
        assert_eq!(vac.amp(5).unwrap(), c(0.0, 0.0));
        assert_eq!(vac.norm(), 1.0);

        let tb = FockBasis::two_sided(3, Boundary::Truncated).unwrap();
        let low = number_state(tb, -3).unwrap();
        assert_eq!(low.amps()[0], c(1.0, 0.0));

        match number_state(b, 8) {
            Err(Error::LabelOutOfRange { n: 8, min: 0, max: 7 }) => {}
            other => panic!("expected out-of-range error, got {other:?}"),
        }
    }

    #[test]
    fn apply_identity_and_zero() {
        let b = FockBasis::one_sided(6).unwrap();
        let ket = Ket::new(
            b,
            CVector::from_iterator(6, (0..6).map(|i| c(i as f64, -(i as f64) / 2.0))),
        )
        .unwrap();
        let id = Op::identity(b);
        assert_eq!(id.apply(&ket).unwrap(), ket);
        let zero = Op::zeros(b);
        assert_eq!(zero.apply(&ket).unwrap(), Ket::zero(b));
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let a = FockBasis::one_sided(6).unwrap();
        let b = FockBasis::one_sided(8).unwrap();
        let ket = number_state(b, 0).unwrap();
        assert!(matches!(
            Op::identity(a).apply(&ket),
            Err(Error::BasisMismatch { .. })
        ));
        assert!(matches!(
            Op::identity(a).compose(&Op::identity(b)),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn expectation_of_diagonal_number_matrix() {
        let b = FockBasis::one_sided(8).unwrap();
        let num = Op::from_fn(b, |i, j| {
            if i == j {
                c(i as f64, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let five = number_state(b, 5).unwrap();
        let val = num.expectation(&five).unwrap();
        assert_abs_diff_eq!(val.re, 5.0);
        assert_abs_diff_eq!(val.im, 0.0);
    }

    #[test]
    fn residual_norm_deletes_rows_and_columns() {
        let b = FockBasis::one_sided(4).unwrap();
        let id = Op::identity(b);
        assert_eq!(id.residual_norm(&id, &[]).unwrap(), 0.0);

        // corrupt one row/column pair; excluding it must hide the damage
        let mut m = CMatrix::identity(4, 4);
        m[(3, 3)] = c(0.0, 0.0);
        m[(3, 1)] = c(0.5, 0.0);
        m[(1, 3)] = c(0.0, 0.5);
        let bad = Op::new(b, m).unwrap();
        assert_eq!(bad.residual_norm(&id, &[]).unwrap(), 1.0);
        assert_eq!(bad.residual_norm(&id, &[3]).unwrap(), 0.0);

        assert!(matches!(
            bad.residual_norm(&id, &[4]),
            Err(Error::ExcludedRowOutOfRange { .. })
        ));
    }

    #[test]
    fn adjoint_is_an_involution() {
        let b = FockBasis::one_sided(5).unwrap();
        let m = Op::from_fn(b, |i, j| c(i as f64 + 0.3, j as f64 - 1.7));
        let back = m.adjoint().adjoint();
        assert_eq!(m, back);
    }
}
