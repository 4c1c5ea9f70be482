use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial in one indeterminate `t`.
///
/// `coeffs[k]` is the coefficient of `t^k`. The representation is kept
/// canonical: the last coefficient is nonzero and the zero polynomial is
/// the empty list, so derived equality is coefficient-wise equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `slope·t + intercept`.
    pub fn linear(slope: impl Into<BigInt>, intercept: impl Into<BigInt>) -> Self {
        Self::new(vec![intercept.into(), slope.into()])
    }

    /// `a·t² + b·t + c`.
    pub fn quadratic(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into(), b.into(), a.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl From<BigInt> for Poly {
    fn from(c: BigInt) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Renders in descending powers with explicit signs, e.g. `-15t^2-34t-16`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial {input:?}: {reason}")]
pub struct ParsePolyError {
    input: String,
    reason: &'static str,
}

/// Accepts the rendering produced by `Display`, plus optional whitespace,
/// `*` between coefficient and `t`, and the `t²` superscript.
impl FromStr for Poly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParsePolyError {
            input: s.to_string(),
            reason,
        };
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .map(|c| if c == '−' { '-' } else { c })
            .collect::<String>()
            .replace('²', "^2");
        if cleaned.is_empty() {
            return Err(err("empty input"));
        }

        let mut terms = Vec::new();
        let mut current = String::new();
        for (idx, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 && !cleaned[..idx].ends_with('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term.as_str()),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff, power) = match body.find('t') {
                None => (
                    body.parse::<BigInt>().map_err(|_| err("bad constant"))?,
                    0usize,
                ),
                Some(pos) => {
                    let head = &body[..pos];
                    let tail = &body[pos + 1..];
                    let coeff = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| err("bad coefficient"))?
                    };
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(|| err("expected '^' after t"))?
                            .parse::<usize>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (coeff, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            if negative {
                coeffs[power] -= coeff;
            } else {
                coeffs[power] += coeff;
            }
        }
        Ok(Poly::new(coeffs))
    }
}
