//! Dense square matrices over a [`Ring`], the Lorentz product and the
//! matrix families studied in this crate.
//!
//! Row and column indices in the public API are 1-based.

mod any;
mod families;

pub use any::{AnyMatrix, MatrixJson};
pub use families::{
    build_a, build_b, build_family, build_product, build_substituted, Family, FamilyId,
    FamilyShape, LowerRule, ParseFamilyError, ProductPair, SubstitutionMode,
};

use std::fmt;

use crate::algebra::{AlgebraError, Ring, ScalarTag};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    EmptyOrder,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("column index {column} outside 1..={order}")]
    ColumnOutOfRange { column: usize, order: usize },
    #[error("family {family} does not support column substitution")]
    NotSubstitutable { family: String },
    #[error(transparent)]
    Tag(#[from] AlgebraError),
}

/// An immutable `n × n` matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<R> {
    order: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    /// Builds a matrix from `f(i, j)` with 1-based indices.
    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyOrder);
        }
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                entries.push(f(i, j));
            }
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        if order == 0 {
            return Err(MatrixError::EmptyOrder);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (idx, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(MatrixError::Ragged {
                    row: idx + 1,
                    len: row.len(),
                    expected: order,
                });
            }
            entries.extend(row);
        }
        Ok(Self { order, entries })
    }

    pub fn identity(order: usize) -> Result<Self, MatrixError> {
        Self::from_fn(order, |i, j| if i == j { R::one() } else { R::zero() })
    }

    /// `diag(-1, 1, …, 1)`: the two-sided identity of the Lorentz product.
    pub fn lorentz_identity(order: usize) -> Result<Self, MatrixError> {
        Self::from_fn(order, |i, j| match (i, j) {
            (1, 1) => R::one().neg(),
            _ if i == j => R::one(),
            _ => R::zero(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at row `i`, column `j` (1-based). Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(
            (1..=self.order).contains(&i) && (1..=self.order).contains(&j),
            "index ({i}, {j}) outside a matrix of order {}",
            self.order
        );
        &self.entries[(i - 1) * self.order + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.order)
    }

    pub fn tag(&self) -> ScalarTag {
        R::TAG
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        Self {
            order: n,
            entries: (0..n * n)
                .map(|idx| self.entries[(idx % n) * n + idx / n].clone())
                .collect(),
        }
    }

    /// Replaces column `j` (1-based) with `column`.
    pub fn with_column(&self, j: usize, column: &[R]) -> Result<Self, MatrixError> {
        if !(1..=self.order).contains(&j) {
            return Err(MatrixError::ColumnOutOfRange {
                column: j,
                order: self.order,
            });
        }
        if column.len() != self.order {
            return Err(MatrixError::OrderMismatch {
                left: self.order,
                right: column.len(),
            });
        }
        let mut out = self.clone();
        for (i, v) in column.iter().enumerate() {
            out.entries[i * self.order + (j - 1)] = v.clone();
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_order(rhs)?;
        Ok(Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|a| k.mul(a))
    }

    pub fn standard_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.product(rhs, false)
    }

    /// Lorentz product: entry `(i, k)` is `-a(i,1)·b(1,k) + Σ_{j≥2} a(i,j)·b(j,k)`,
    /// equivalently `a · J · b` with `J = diag(-1, 1, …, 1)`.
    pub fn lorentz_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.product(rhs, true)
    }

    fn product(&self, rhs: &Self, lorentz: bool) -> Result<Self, MatrixError> {
        self.check_order(rhs)?;
        let n = self.order;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                let mut acc = R::zero();
                for j in 0..n {
                    let term = self.entries[i * n + j].mul(&rhs.entries[j * n + k]);
                    acc = if lorentz && j == 0 {
                        acc.sub(&term)
                    } else {
                        acc.add(&term)
                    };
                }
                entries.push(acc);
            }
        }
        Ok(Self { order: n, entries })
    }

    /// True when every entry strictly above the superdiagonal is zero.
    pub fn is_lower_hessenberg(&self) -> bool {
        self.band_is_zero(|i, j| j > i + 1)
    }

    pub fn is_tridiagonal(&self) -> bool {
        self.band_is_zero(|i, j| j > i + 1 || i > j + 1)
    }

    /// `m ·_L mᵀ = mᵀ ·_L m = J`: the transpose is the Lorentz inverse.
    pub fn is_l_orthogonal(&self) -> bool {
        let j = Self::lorentz_identity(self.order).expect("order is nonzero");
        let t = self.transpose();
        let (Ok(left), Ok(right)) = (self.lorentz_mul(&t), t.lorentz_mul(self)) else {
            return false;
        };
        left == j && right == j
    }

    fn band_is_zero(&self, outside: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.order;
        (1..=n).all(|i| (1..=n).all(|j| !outside(i, j) || self.get(i, j).is_zero()))
    }

    fn check_order(&self, rhs: &Self) -> Result<(), MatrixError> {
        if self.order != rhs.order {
            return Err(MatrixError::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
