//! Two independent, division-free determinant engines.
//!
//! [`hessenberg_det`] runs the lower-Hessenberg recurrence in one
//! bottom-up pass over the leading principal minors. [`cofactor_det`] is a
//! Laplace expansion memoised over column subsets and works for any square
//! matrix up to [`COFACTOR_ORDER_LIMIT`]. Neither engine calls the other, so
//! each serves as a witness for the other.

use crate::algebra::{Ring, RingValue};
use crate::matrix::{AnyMatrix, MatrixError, SquareMatrix};

/// Largest order accepted by [`cofactor_det`]; work grows like `2^n · n`.
pub const COFACTOR_ORDER_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetError {
    #[error("matrix is not lower Hessenberg; use the cofactor engine")]
    NotHessenberg,
    #[error("order {order} exceeds the cofactor expansion limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetEngine {
    Hessenberg,
    Cofactor,
}

/// Determinants `|H_0|, |H_1|, …, |H_n|` of all leading principal
/// submatrices, with `|H_0| = 1`.
///
/// `|H_k| = h_{k,k}|H_{k-1}| + Σ_{r<k} (-1)^{k-r} h_{k,r} (Π_{j=r}^{k-1} h_{j,j+1}) |H_{r-1}|`
pub fn hessenberg_leading_dets<R: Ring>(m: &SquareMatrix<R>) -> Result<Vec<R>, DetError> {
    if !m.is_lower_hessenberg() {
        return Err(DetError::NotHessenberg);
    }
    let n = m.order();
    let mut dets = Vec::with_capacity(n + 1);
    dets.push(R::one());
    for k in 1..=n {
        let mut acc = m.get(k, k).mul(&dets[k - 1]);
        // superdiagonal product h_{r,r+1} ⋯ h_{k-1,k}, grown as r decreases
        let mut chain = R::one();
        for r in (1..k).rev() {
            chain = chain.mul(m.get(r, r + 1));
            if chain.is_zero() {
                break;
            }
            let h = m.get(k, r);
            if h.is_zero() {
                continue;
            }
            let term = h.mul(&chain).mul(&dets[r - 1]);
            acc = if (k - r) % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        dets.push(acc);
    }
    Ok(dets)
}

pub fn hessenberg_det<R: Ring>(m: &SquareMatrix<R>) -> Result<R, DetError> {
    Ok(hessenberg_leading_dets(m)?
        .pop()
        .expect("at least |H_0| is present"))
}

/// Determinant by Laplace expansion along successive rows, memoised on
/// the set of columns already used.
///
/// `minors[S]` holds the determinant of the submatrix formed by the first
/// `|S|` rows and the columns in `S`. Subsets are visited in increasing
/// numeric order, so every proper subset is final before it is extended.
pub fn cofactor_det<R: Ring>(m: &SquareMatrix<R>) -> Result<R, DetError> {
    let n = m.order();
    if n > COFACTOR_ORDER_LIMIT {
        return Err(DetError::OrderTooLarge {
            order: n,
            limit: COFACTOR_ORDER_LIMIT,
        });
    }
    let full = (1usize << n) - 1;
    let mut minors = vec![R::zero(); 1 << n];
    minors[0] = R::one();
    for subset in 0..full {
        if minors[subset].is_zero() {
            continue;
        }
        let row = subset.count_ones() as usize + 1;
        let base = minors[subset].clone();
        for col in 0..n {
            let bit = 1usize << col;
            if subset & bit != 0 {
                continue;
            }
            let entry = m.get(row, col + 1);
            if entry.is_zero() {
                continue;
            }
            let term = entry.mul(&base);
            let larger_cols = (subset >> (col + 1)).count_ones();
            let target = &mut minors[subset | bit];
            *target = if larger_cols % 2 == 0 {
                target.add(&term)
            } else {
                target.sub(&term)
            };
        }
    }
    Ok(minors.swap_remove(full))
}

/// `det(a ·_L b) = -det(a)·det(b)`, computed from the factors alone.
pub fn det_of_lorentz_product<R: Ring>(
    a: &SquareMatrix<R>,
    b: &SquareMatrix<R>,
) -> Result<R, DetError> {
    if a.order() != b.order() {
        return Err(MatrixError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        }
        .into());
    }
    Ok(cofactor_det(a)?.mul(&cofactor_det(b)?).neg())
}

pub fn det_with<R: Ring>(m: &SquareMatrix<R>, engine: DetEngine) -> Result<R, DetError> {
    match engine {
        DetEngine::Hessenberg => hessenberg_det(m),
        DetEngine::Cofactor => cofactor_det(m),
    }
}

impl AnyMatrix {
    pub fn det(&self, engine: DetEngine) -> Result<RingValue, DetError> {
        Ok(match self {
            AnyMatrix::Int(m) => det_with(m, engine)?.into_value(),
            AnyMatrix::Gauss(m) => det_with(m, engine)?.into_value(),
            AnyMatrix::Poly(m) => det_with(m, engine)?.into_value(),
        })
    }

    pub fn det_of_lorentz_product(&self, rhs: &AnyMatrix) -> Result<RingValue, DetError> {
        use crate::algebra::AlgebraError;
        Ok(match (self, rhs) {
            (AnyMatrix::Int(a), AnyMatrix::Int(b)) => det_of_lorentz_product(a, b)?.into_value(),
            (AnyMatrix::Gauss(a), AnyMatrix::Gauss(b)) => {
                det_of_lorentz_product(a, b)?.into_value()
            }
            (AnyMatrix::Poly(a), AnyMatrix::Poly(b)) => det_of_lorentz_product(a, b)?.into_value(),
            (l, r) => {
                return Err(MatrixError::Tag(AlgebraError::TagMismatch {
                    left: l.tag(),
                    right: r.tag(),
                })
                .into())
            }
        })
    }
}
