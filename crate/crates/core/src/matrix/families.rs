use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AnyMatrix, MatrixError, SquareMatrix};
use crate::algebra::{GaussianInt, Poly, Ring};

/// The seven `t`-parameterised Fibonacci–Hessenberg families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C,
    D,
    E,
    F,
    G,
    H,
    K,
}

/// How the strictly-lower triangle of a family is filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerRule {
    Ones,
    /// `(-1)^{i+j}` below the diagonal.
    Alternating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyShape {
    /// Entry (1,1); every other diagonal entry is 2 except (n,n) = t+1.
    pub first_diagonal: i64,
    pub superdiagonal: i64,
    pub lower: LowerRule,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
        Family::H,
        Family::K,
    ];

    pub fn shape(self) -> FamilyShape {
        use Family::*;
        let (first_diagonal, superdiagonal, lower) = match self {
            C => (2, 1, LowerRule::Ones),
            D => (2, -1, LowerRule::Ones),
            E => (1, -1, LowerRule::Ones),
            F => (2, -1, LowerRule::Alternating),
            G => (1, -1, LowerRule::Alternating),
            H => (1, 1, LowerRule::Alternating),
            K => (2, 1, LowerRule::Alternating),
        };
        FamilyShape {
            first_diagonal,
            superdiagonal,
            lower,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::H => "H",
            Family::K => "K",
        }
    }

    pub fn is_substitutable(self) -> bool {
        matches!(self, Family::C | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pairs whose Lorentz product is studied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProductPair {
    CD,
    EF,
    GH,
}

impl ProductPair {
    pub const ALL: [ProductPair; 3] = [ProductPair::CD, ProductPair::EF, ProductPair::GH];

    pub fn factors(self) -> (Family, Family) {
        match self {
            ProductPair::CD => (Family::C, Family::D),
            ProductPair::EF => (Family::E, Family::F),
            ProductPair::GH => (Family::G, Family::H),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductPair::CD => "CD",
            ProductPair::EF => "EF",
            ProductPair::GH => "GH",
        }
    }
}

/// What replaces column `i` in a substituted matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubstitutionMode {
    /// Every entry of the column becomes 1.
    AllOnes,
    /// The column becomes the basis vector `e_i`.
    BasisColumn,
}

impl SubstitutionMode {
    pub fn name(self) -> &'static str {
        match self {
            SubstitutionMode::AllOnes => "allones",
            SubstitutionMode::BasisColumn => "basis",
        }
    }
}

impl FromStr for SubstitutionMode {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "allones" | "all-ones" | "ones" => Ok(SubstitutionMode::AllOnes),
            "basis" | "basiscolumn" | "basis-column" => Ok(SubstitutionMode::BasisColumn),
            _ => Err(ParseFamilyError(s.to_string())),
        }
    }
}

/// Every matrix family the crate can construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    /// Tridiagonal over ℤ[i]: 1 on the diagonal, `i` beside it.
    A,
    /// Integer Hessenberg matrix with `b_nn = 1`.
    B,
    Family(Family),
    Substituted {
        family: Family,
        column: usize,
        mode: SubstitutionMode,
    },
    Product(ProductPair),
    LorentzIdentity,
}

impl FamilyId {
    pub fn build(self, n: usize) -> Result<AnyMatrix, MatrixError> {
        Ok(match self {
            FamilyId::A => AnyMatrix::Gauss(build_a(n)?),
            FamilyId::B => AnyMatrix::Int(build_b(n)?),
            FamilyId::Family(f) => AnyMatrix::Poly(build_family(f, n)?),
            FamilyId::Substituted {
                family,
                column,
                mode,
            } => AnyMatrix::Poly(build_substituted(family, n, column, mode)?),
            FamilyId::Product(pair) => AnyMatrix::Poly(build_product(pair, n)?),
            FamilyId::LorentzIdentity => AnyMatrix::Int(SquareMatrix::lorentz_identity(n)?),
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::A => f.write_str("A"),
            FamilyId::B => f.write_str("B"),
            FamilyId::Family(fam) => f.write_str(fam.name()),
            FamilyId::Substituted {
                family,
                column,
                mode,
            } => write!(f, "{family}^{column}[{}]", mode.name()),
            FamilyId::Product(pair) => f.write_str(pair.name()),
            FamilyId::LorentzIdentity => f.write_str("J"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family {0:?}")]
pub struct ParseFamilyError(pub String);

/// Parses plain family names (`A`, `C`, `CD`, `J`); substituted families
/// are built with an explicit column through [`FamilyId::Substituted`].
impl FromStr for FamilyId {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.trim().to_ascii_uppercase().as_str() {
            "A" => FamilyId::A,
            "B" => FamilyId::B,
            "C" => FamilyId::Family(Family::C),
            "D" => FamilyId::Family(Family::D),
            "E" => FamilyId::Family(Family::E),
            "F" => FamilyId::Family(Family::F),
            "G" => FamilyId::Family(Family::G),
            "H" => FamilyId::Family(Family::H),
            "K" => FamilyId::Family(Family::K),
            "CD" => FamilyId::Product(ProductPair::CD),
            "EF" => FamilyId::Product(ProductPair::EF),
            "GH" => FamilyId::Product(ProductPair::GH),
            "J" | "LORENTZ-IDENTITY" | "LORENTZIDENTITY" => FamilyId::LorentzIdentity,
            _ => return Err(ParseFamilyError(s.to_string())),
        };
        Ok(id)
    }
}

/// Builds `X_{n,t}` for one of the seven `t`-families.
///
/// Diagonal 2 with entry (1,1) from the family shape and entry (n,n) = t+1;
/// a constant superdiagonal; zeros above it; the lower triangle per
/// [`LowerRule`]. For `n = 1` the single entry is `t+1`, except for the
/// families whose (1,1) entry is 1, where that entry takes precedence and
/// keeps the closed-form determinants valid from `n = 1`.
pub fn build_family(family: Family, n: usize) -> Result<SquareMatrix<Poly>, MatrixError> {
    let shape = family.shape();
    SquareMatrix::from_fn(n, |i, j| {
        if i == 1 && j == 1 && shape.first_diagonal != 2 {
            Poly::constant(shape.first_diagonal)
        } else if i == j && i == n {
            Poly::linear(1, 1)
        } else if i == j {
            Poly::constant(2)
        } else if j == i + 1 {
            Poly::constant(shape.superdiagonal)
        } else if j > i {
            Poly::zero()
        } else {
            match shape.lower {
                LowerRule::Ones => Poly::constant(1),
                LowerRule::Alternating => Poly::constant(if (i + j) % 2 == 0 { 1 } else { -1 }),
            }
        }
    })
}

pub fn build_a(n: usize) -> Result<SquareMatrix<GaussianInt>, MatrixError> {
    SquareMatrix::from_fn(n, |i, j| {
        if i == j {
            GaussianInt::one()
        } else if i.abs_diff(j) == 1 {
            GaussianInt::i()
        } else {
            GaussianInt::zero()
        }
    })
}

pub fn build_b(n: usize) -> Result<SquareMatrix<BigInt>, MatrixError> {
    SquareMatrix::from_fn(n, |i, j| {
        let v = if i == j {
            if i == n {
                1
            } else {
                2
            }
        } else if j == i + 1 || i > j {
            1
        } else {
            0
        };
        BigInt::from(v)
    })
}

/// `X^i_{n,t}`: `build_family(family, n)` with column `column` replaced.
pub fn build_substituted(
    family: Family,
    n: usize,
    column: usize,
    mode: SubstitutionMode,
) -> Result<SquareMatrix<Poly>, MatrixError> {
    if !family.is_substitutable() {
        return Err(MatrixError::NotSubstitutable {
            family: family.to_string(),
        });
    }
    if column == 0 || column > n {
        return Err(MatrixError::ColumnOutOfRange { column, order: n });
    }
    let base = build_family(family, n)?;
    let replacement: Vec<Poly> = (1..=n)
        .map(|row| match mode {
            SubstitutionMode::AllOnes => Poly::one(),
            SubstitutionMode::BasisColumn if row == column => Poly::one(),
            SubstitutionMode::BasisColumn => Poly::zero(),
        })
        .collect();
    base.with_column(column, &replacement)
}

/// Lorentz product of the two factor families at order `n`.
pub fn build_product(pair: ProductPair, n: usize) -> Result<SquareMatrix<Poly>, MatrixError> {
    let (a, b) = pair.factors();
    build_family(a, n)?.lorentz_mul(&build_family(b, n)?)
}
