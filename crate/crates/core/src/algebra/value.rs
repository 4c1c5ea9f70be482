use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, GaussianInt, Poly};

/// Which scalar domain a value or matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarTag {
    Int,
    Gauss,
    Poly,
}

impl ScalarTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarTag::Int => "int",
            ScalarTag::Gauss => "gauss",
            ScalarTag::Poly => "poly",
        }
    }
}

impl fmt::Display for ScalarTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Commutative ring with identity, the only structure the determinant
/// engines rely on. Nothing here divides.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: ScalarTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_integer(v: BigInt) -> Self;
    fn into_value(self) -> RingValue;
    fn try_from_value(v: RingValue) -> Result<Self, AlgebraError>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_integer(BigInt::from(v))
    }
}

impl Ring for BigInt {
    const TAG: ScalarTag = ScalarTag::Int;

    fn zero() -> Self {
        <BigInt as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_integer(v: BigInt) -> Self {
        v
    }
    fn into_value(self) -> RingValue {
        RingValue::Int(self)
    }
    fn try_from_value(v: RingValue) -> Result<Self, AlgebraError> {
        match v {
            RingValue::Int(x) => Ok(x),
            other => Err(AlgebraError::TagMismatch {
                left: ScalarTag::Int,
                right: other.tag(),
            }),
        }
    }
}

impl Ring for GaussianInt {
    const TAG: ScalarTag = ScalarTag::Gauss;

    fn zero() -> Self {
        GaussianInt::default()
    }
    fn one() -> Self {
        GaussianInt::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.re) && num_traits::Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_integer(v: BigInt) -> Self {
        GaussianInt::from(v)
    }
    fn into_value(self) -> RingValue {
        RingValue::Gauss(self)
    }
    fn try_from_value(v: RingValue) -> Result<Self, AlgebraError> {
        match v {
            RingValue::Gauss(x) => Ok(x),
            other => Err(AlgebraError::TagMismatch {
                left: ScalarTag::Gauss,
                right: other.tag(),
            }),
        }
    }
}

impl Ring for Poly {
    const TAG: ScalarTag = ScalarTag::Poly;

    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(1)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_integer(v: BigInt) -> Self {
        Poly::constant(v)
    }
    fn into_value(self) -> RingValue {
        RingValue::Poly(self)
    }
    fn try_from_value(v: RingValue) -> Result<Self, AlgebraError> {
        match v {
            RingValue::Poly(x) => Ok(x),
            other => Err(AlgebraError::TagMismatch {
                left: ScalarTag::Poly,
                right: other.tag(),
            }),
        }
    }
}

/// A scalar whose domain is decided at run time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingValue {
    Int(BigInt),
    Gauss(GaussianInt),
    Poly(Poly),
}

impl RingValue {
    pub fn tag(&self) -> ScalarTag {
        match self {
            RingValue::Int(_) => ScalarTag::Int,
            RingValue::Gauss(_) => ScalarTag::Gauss,
            RingValue::Poly(_) => ScalarTag::Poly,
        }
    }

    pub fn zero(tag: ScalarTag) -> Self {
        match tag {
            ScalarTag::Int => RingValue::Int(Ring::zero()),
            ScalarTag::Gauss => RingValue::Gauss(Ring::zero()),
            ScalarTag::Poly => RingValue::Poly(Ring::zero()),
        }
    }

    pub fn one(tag: ScalarTag) -> Self {
        match tag {
            ScalarTag::Int => RingValue::Int(Ring::one()),
            ScalarTag::Gauss => RingValue::Gauss(Ring::one()),
            ScalarTag::Poly => RingValue::Poly(Ring::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(x) => Ring::is_zero(x),
            RingValue::Gauss(x) => Ring::is_zero(x),
            RingValue::Poly(x) => Ring::is_zero(x),
        }
    }

    pub fn try_add(&self, rhs: &RingValue) -> Result<RingValue, AlgebraError> {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(Ring::add(a, b))),
            (RingValue::Gauss(a), RingValue::Gauss(b)) => Ok(RingValue::Gauss(Ring::add(a, b))),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(Ring::add(a, b))),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn try_mul(&self, rhs: &RingValue) -> Result<RingValue, AlgebraError> {
        match (self, rhs) {
            (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(Ring::mul(a, b))),
            (RingValue::Gauss(a), RingValue::Gauss(b)) => Ok(RingValue::Gauss(Ring::mul(a, b))),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(Ring::mul(a, b))),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn neg(&self) -> RingValue {
        match self {
            RingValue::Int(a) => RingValue::Int(Ring::neg(a)),
            RingValue::Gauss(a) => RingValue::Gauss(Ring::neg(a)),
            RingValue::Poly(a) => RingValue::Poly(Ring::neg(a)),
        }
    }

    /// Substitutes `t` in a polynomial; integers and Gaussian integers are
    /// returned unchanged.
    pub fn eval_at(&self, t: &BigInt) -> RingValue {
        match self {
            RingValue::Poly(p) => RingValue::Int(p.eval(t)),
            other => other.clone(),
        }
    }

    fn mismatch(&self, rhs: &RingValue) -> AlgebraError {
        AlgebraError::TagMismatch {
            left: self.tag(),
            right: rhs.tag(),
        }
    }
}

impl From<BigInt> for RingValue {
    fn from(v: BigInt) -> Self {
        RingValue::Int(v)
    }
}

impl From<GaussianInt> for RingValue {
    fn from(v: GaussianInt) -> Self {
        RingValue::Gauss(v)
    }
}

impl From<Poly> for RingValue {
    fn from(v: Poly) -> Self {
        RingValue::Poly(v)
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(x) => fmt::Display::fmt(x, f),
            RingValue::Gauss(x) => fmt::Display::fmt(x, f),
            RingValue::Poly(x) => fmt::Display::fmt(x, f),
        }
    }
}
