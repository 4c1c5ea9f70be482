use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{MatrixError, SquareMatrix};
use crate::algebra::{AlgebraError, GaussianInt, Poly, RingValue, ScalarTag};

/// A square matrix whose scalar domain is decided at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatrix {
    Int(SquareMatrix<BigInt>),
    Gauss(SquareMatrix<GaussianInt>),
    Poly(SquareMatrix<Poly>),
}

/// Wire form: `{"order": n, "tag": "int"|"gauss"|"poly", "rows": [[...]]}`
/// with each entry in its canonical text rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub order: usize,
    pub tag: ScalarTag,
    pub rows: Vec<Vec<String>>,
}

macro_rules! dispatch {
    ($m:expr, $x:ident => $body:expr) => {
        match $m {
            AnyMatrix::Int($x) => $body,
            AnyMatrix::Gauss($x) => $body,
            AnyMatrix::Poly($x) => $body,
        }
    };
}

macro_rules! binary {
    ($a:expr, $b:expr, $x:ident, $y:ident => $body:expr) => {
        match ($a, $b) {
            (AnyMatrix::Int($x), AnyMatrix::Int($y)) => Ok(AnyMatrix::Int($body?)),
            (AnyMatrix::Gauss($x), AnyMatrix::Gauss($y)) => Ok(AnyMatrix::Gauss($body?)),
            (AnyMatrix::Poly($x), AnyMatrix::Poly($y)) => Ok(AnyMatrix::Poly($body?)),
            (l, r) => Err(MatrixError::Tag(AlgebraError::TagMismatch {
                left: l.tag(),
                right: r.tag(),
            })),
        }
    };
}

impl AnyMatrix {
    pub fn tag(&self) -> ScalarTag {
        match self {
            AnyMatrix::Int(_) => ScalarTag::Int,
            AnyMatrix::Gauss(_) => ScalarTag::Gauss,
            AnyMatrix::Poly(_) => ScalarTag::Poly,
        }
    }

    pub fn order(&self) -> usize {
        dispatch!(self, m => m.order())
    }

    pub fn entry(&self, i: usize, j: usize) -> RingValue {
        dispatch!(self, m => m.get(i, j).clone().into())
    }

    pub fn rendered_rows(&self) -> Vec<Vec<String>> {
        dispatch!(self, m => m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            order: self.order(),
            tag: self.tag(),
            rows: self.rendered_rows(),
        }
    }

    pub fn transpose(&self) -> AnyMatrix {
        match self {
            AnyMatrix::Int(m) => AnyMatrix::Int(m.transpose()),
            AnyMatrix::Gauss(m) => AnyMatrix::Gauss(m.transpose()),
            AnyMatrix::Poly(m) => AnyMatrix::Poly(m.transpose()),
        }
    }

    pub fn lorentz_mul(&self, rhs: &AnyMatrix) -> Result<AnyMatrix, MatrixError> {
        binary!(self, rhs, a, b => a.lorentz_mul(b))
    }

    pub fn standard_mul(&self, rhs: &AnyMatrix) -> Result<AnyMatrix, MatrixError> {
        binary!(self, rhs, a, b => a.standard_mul(b))
    }

    pub fn is_lower_hessenberg(&self) -> bool {
        dispatch!(self, m => m.is_lower_hessenberg())
    }

    pub fn is_tridiagonal(&self) -> bool {
        dispatch!(self, m => m.is_tridiagonal())
    }

    pub fn is_l_orthogonal(&self) -> bool {
        dispatch!(self, m => m.is_l_orthogonal())
    }

    /// Substitutes `t` into a polynomial matrix; other domains are unchanged.
    pub fn eval_at(&self, t: &BigInt) -> AnyMatrix {
        match self {
            AnyMatrix::Poly(m) => AnyMatrix::Int(m.map(|p| p.eval(t))),
            other => other.clone(),
        }
    }

    /// Pretty multi-line rendering with right-aligned columns.
    pub fn pretty(&self) -> String {
        dispatch!(self, m => m.to_string())
    }
}

impl From<SquareMatrix<BigInt>> for AnyMatrix {
    fn from(m: SquareMatrix<BigInt>) -> Self {
        AnyMatrix::Int(m)
    }
}

impl From<SquareMatrix<GaussianInt>> for AnyMatrix {
    fn from(m: SquareMatrix<GaussianInt>) -> Self {
        AnyMatrix::Gauss(m)
    }
}

impl From<SquareMatrix<Poly>> for AnyMatrix {
    fn from(m: SquareMatrix<Poly>) -> Self {
        AnyMatrix::Poly(m)
    }
}
