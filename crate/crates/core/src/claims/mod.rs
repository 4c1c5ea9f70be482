//! Audit engine for closed-form determinant statements.
//!
//! A [`Claim`] pairs a matrix constructor with a predicted value as a
//! function of the order `n`. [`verify_claim`] sweeps `n`, always taking the
//! cofactor expansion as ground truth (and cross-checking the Hessenberg
//! recurrence wherever it applies), and summarises the outcome as a
//! [`ClaimResult`]: fully verified, verified only from some index `m`
//! onwards, or refuted with counterexamples.

mod registry;
mod report;
mod tables;

pub use registry::registered_claims;
pub use report::{Counterexample, Report, ReportFormat};
pub use tables::{reproduce_table, TableBlock, TableCell, TableDoc, TableError, TableRow};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Poly, RingValue};
use crate::determinant::{DetEngine, DetError};
use crate::matrix::{
    AnyMatrix, Family, FamilyId, MatrixError, ProductPair, SquareMatrix, SubstitutionMode,
};

/// Default sample points for `t`.
pub const DEFAULT_T_SAMPLES: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

/// At most this many counterexamples are kept per claim.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimKind {
    GeneralTerm,
    TableCell,
    ProductLaw,
    SummationRecurrence,
    TextValue,
    MatrixDisplay,
}

/// Where in the source document a claim is made; used to group reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section {
    Families,
    Table1,
    Substituted,
    Table2,
    Lorentz,
    Products,
    Table3,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::Families,
        Section::Table1,
        Section::Substituted,
        Section::Table2,
        Section::Lorentz,
        Section::Products,
        Section::Table3,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Section::Families => "Fibonacci-Hessenberg families",
            Section::Table1 => "Table 1: determinant sequences",
            Section::Substituted => "Column-substituted families",
            Section::Table2 => "Table 2: substituted-column determinants",
            Section::Lorentz => "Lorentz product",
            Section::Products => "Lorentz-product families",
            Section::Table3 => "Table 3: Lorentz-product determinants",
        }
    }
}

/// Predicted value as a function of the order `n`.
#[derive(Clone)]
pub struct Formula(Arc<dyn Fn(i64) -> RingValue + Send + Sync>);

impl Formula {
    pub fn new(f: impl Fn(i64) -> RingValue + Send + Sync + 'static) -> Self {
        Formula(Arc::new(f))
    }

    pub fn poly(f: impl Fn(i64) -> Poly + Send + Sync + 'static) -> Self {
        Formula::new(move |n| RingValue::Poly(f(n)))
    }

    pub fn int(f: impl Fn(i64) -> BigInt + Send + Sync + 'static) -> Self {
        Formula::new(move |n| RingValue::Int(f(n)))
    }

    pub fn constant(v: impl Into<RingValue>) -> Self {
        let v = v.into();
        Formula::new(move |_| v.clone())
    }

    pub fn eval(&self, n: i64) -> RingValue {
        (self.0)(n)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Formula(..)")
    }
}

/// Predicted determinant of a substituted matrix as a function of `(n, i)`.
#[derive(Clone)]
pub struct ColumnFormula(Arc<dyn Fn(i64, i64) -> Poly + Send + Sync>);

impl ColumnFormula {
    pub fn new(f: impl Fn(i64, i64) -> Poly + Send + Sync + 'static) -> Self {
        ColumnFormula(Arc::new(f))
    }

    pub fn eval(&self, n: i64, i: i64) -> Poly {
        (self.0)(n, i)
    }
}

impl fmt::Debug for ColumnFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ColumnFormula(..)")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Columns {
    /// Every column `i` with `from <= i <= n`.
    From(usize),
    Fixed(usize),
}

/// What a claim asserts at a given order `n`.
#[derive(Debug, Clone)]
pub enum Check {
    /// `det(subject_n)`, optionally evaluated at a fixed `t`, equals the prediction.
    Determinant {
        subject: FamilyId,
        at_t: Option<i64>,
        predicted: Formula,
    },
    /// `det(X^i_n) = predicted(n, i)` for the selected columns.
    SubstitutedFormula {
        family: Family,
        mode: SubstitutionMode,
        columns: Columns,
        predicted: ColumnFormula,
    },
    /// `multiplier·|X_n| = constant + Σ_{i=1}^{n} |X^i_n|`.
    Summation {
        family: Family,
        mode: SubstitutionMode,
        multiplier: i64,
        constant: Poly,
    },
    /// `det(A ·_L B) = -det A · det B` for the pair's factors.
    ProductLaw { pair: ProductPair },
    /// `I ·_L I = diag(-1, 1, …, 1)`.
    LorentzUnit,
    /// The constructed matrix equals a printed one (order = number of rows).
    Display {
        subject: FamilyId,
        rows: Vec<Vec<Poly>>,
    },
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub section: Section,
    /// Location plus the verbatim formula being audited.
    pub anchor: String,
    pub kind: ClaimKind,
    pub n_start: i64,
    /// `None` means open-ended, capped by the sweep's `n_max`.
    pub n_end: Option<i64>,
    pub check: Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "VERIFIED_FROM_M")]
    VerifiedFromM,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::VerifiedFromM => "VERIFIED_FROM_M",
            Status::Mismatch => "MISMATCH",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Least swept `n` from which the claim holds for every larger swept
    /// index; absent when it fails at the end of the range.
    pub minimal_m: Option<i64>,
    pub counterexamples: Vec<Counterexample>,
}

/// Something went wrong computing a value, as opposed to a claim being false.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Fault {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Det(#[from] DetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("engines disagree on {family} at n={n}: hessenberg {hessenberg}, cofactor {cofactor}")]
    EngineDisagreement {
        family: String,
        n: usize,
        hessenberg: String,
        cofactor: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("claim {id}: {fault}")]
    Claim { id: String, fault: Fault },
    #[error("t_samples must not be empty")]
    EmptySamples,
    #[error("claim {id}: n_max {n_max} is below the range start {start}")]
    RangeBelowStart { id: String, start: i64, n_max: i64 },
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

impl VerifyError {
    /// True for the one failure that indicates a bug rather than bad input.
    pub fn is_engine_disagreement(&self) -> bool {
        matches!(
            self,
            VerifyError::Claim {
                fault: Fault::EngineDisagreement { .. },
                ..
            }
        )
    }
}

/// Memoised oracle determinants keyed by `(family, n)`.
///
/// Every value is the cofactor expansion; when the matrix is lower
/// Hessenberg the recurrence is evaluated too and must agree.
#[derive(Default)]
pub struct DetCache {
    values: Mutex<HashMap<(FamilyId, usize), RingValue>>,
}

impl DetCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn det(&self, family: FamilyId, n: usize) -> Result<RingValue, Fault> {
        if let Some(v) = self
            .values
            .lock()
            .expect("cache poisoned")
            .get(&(family, n))
        {
            return Ok(v.clone());
        }
        let m = family.build(n)?;
        let value = checked_det(&m, &family.to_string(), n)?;
        self.values
            .lock()
            .expect("cache poisoned")
            .insert((family, n), value.clone());
        Ok(value)
    }
}

/// Cofactor determinant, cross-checked against the Hessenberg recurrence
/// when the matrix shape allows it.
pub fn checked_det(m: &AnyMatrix, label: &str, n: usize) -> Result<RingValue, Fault> {
    let oracle = m.det(DetEngine::Cofactor)?;
    if m.is_lower_hessenberg() {
        let recurrence = m.det(DetEngine::Hessenberg)?;
        if recurrence != oracle {
            return Err(Fault::EngineDisagreement {
                family: label.to_string(),
                n,
                hessenberg: recurrence.to_string(),
                cofactor: oracle.to_string(),
            });
        }
    }
    Ok(oracle)
}

struct Observation {
    holds: bool,
    computed: String,
    predicted: String,
}

impl Observation {
    fn values(computed: &RingValue, predicted: &RingValue, holds: bool) -> Self {
        Observation {
            holds,
            computed: computed.to_string(),
            predicted: predicted.to_string(),
        }
    }
}

/// Equality of a computed and a predicted value.
///
/// Polynomials are compared coefficient-wise. An integer compared with a
/// polynomial must equal the polynomial's value at every sample of `t`.
/// A Gaussian integer equals an integer only when its imaginary part is 0.
pub fn values_agree(
    computed: &RingValue,
    predicted: &RingValue,
    t_samples: &[i64],
) -> Result<bool, AlgebraError> {
    use RingValue::*;
    Ok(match (computed, predicted) {
        (Int(_), Int(_)) | (Gauss(_), Gauss(_)) | (Poly(_), Poly(_)) => computed == predicted,
        (Poly(p), Int(k)) | (Int(k), Poly(p)) => {
            t_samples.iter().all(|&t| &p.eval(&BigInt::from(t)) == k)
        }
        (Gauss(g), Int(k)) | (Int(k), Gauss(g)) => g.is_real() && &g.re == k,
        _ => {
            return Err(AlgebraError::TagMismatch {
                left: computed.tag(),
                right: predicted.tag(),
            })
        }
    })
}

fn render_rows(rows: &[Vec<String>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
    format!("[{}]", inner.join(","))
}

impl Claim {
    /// Last index swept for a given `n_max`.
    pub fn n_last(&self, n_max: i64) -> i64 {
        self.n_end.map_or(n_max, |end| end.min(n_max))
    }

    fn observe(&self, n: i64, t_samples: &[i64], cache: &DetCache) -> Result<Observation, Fault> {
        let order = usize::try_from(n).map_err(|_| MatrixError::EmptyOrder)?;
        match &self.check {
            Check::Determinant {
                subject,
                at_t,
                predicted,
            } => {
                let mut computed = cache.det(*subject, order)?;
                if let Some(t) = at_t {
                    computed = computed.eval_at(&BigInt::from(*t));
                }
                let predicted = predicted.eval(n);
                let holds = values_agree(&computed, &predicted, t_samples)?;
                Ok(Observation::values(&computed, &predicted, holds))
            }
            Check::SubstitutedFormula {
                family,
                mode,
                columns,
                predicted,
            } => {
                let range = match *columns {
                    Columns::From(from) => from..=order,
                    Columns::Fixed(i) => i..=i,
                };
                for column in range {
                    let id = FamilyId::Substituted {
                        family: *family,
                        column,
                        mode: *mode,
                    };
                    let computed = cache.det(id, order)?;
                    let expected = RingValue::Poly(predicted.eval(n, column as i64));
                    if computed != expected {
                        return Ok(Observation {
                            holds: false,
                            computed: format!("i={column}: {computed}"),
                            predicted: format!("i={column}: {expected}"),
                        });
                    }
                }
                Ok(Observation {
                    holds: true,
                    computed: String::new(),
                    predicted: String::new(),
                })
            }
            Check::Summation {
                family,
                mode,
                multiplier,
                constant,
            } => {
                let lhs = cache
                    .det(FamilyId::Family(*family), order)?
                    .try_mul(&RingValue::Poly(Poly::constant(*multiplier)))?;
                let mut rhs = RingValue::Poly(constant.clone());
                for column in 1..=order {
                    let id = FamilyId::Substituted {
                        family: *family,
                        column,
                        mode: *mode,
                    };
                    rhs = rhs.try_add(&cache.det(id, order)?)?;
                }
                Ok(Observation::values(&lhs, &rhs, lhs == rhs))
            }
            Check::ProductLaw { pair } => {
                let computed = cache.det(FamilyId::Product(*pair), order)?;
                let (a, b) = pair.factors();
                let predicted = cache
                    .det(FamilyId::Family(a), order)?
                    .try_mul(&cache.det(FamilyId::Family(b), order)?)?
                    .neg();
                Ok(Observation::values(
                    &computed,
                    &predicted,
                    computed == predicted,
                ))
            }
            Check::LorentzUnit => {
                let identity = SquareMatrix::<BigInt>::identity(order)?;
                let product = identity.lorentz_mul(&identity)?;
                let j = SquareMatrix::<BigInt>::lorentz_identity(order)?;
                Ok(Observation {
                    holds: product == j,
                    computed: render_rows(&AnyMatrix::Int(product).rendered_rows()),
                    predicted: render_rows(&AnyMatrix::Int(j).rendered_rows()),
                })
            }
            Check::Display { subject, rows } => {
                let built = subject.build(order)?;
                let printed = SquareMatrix::from_rows(rows.clone())?;
                let holds = built == AnyMatrix::Poly(printed.clone());
                Ok(Observation {
                    holds,
                    computed: render_rows(&built.rendered_rows()),
                    predicted: render_rows(&AnyMatrix::Poly(printed).rendered_rows()),
                })
            }
        }
    }
}

/// Checks one claim for every `n` from its range start to `min(end, n_max)`.
pub fn verify_claim(
    claim: &Claim,
    n_max: i64,
    t_samples: &[i64],
) -> Result<ClaimResult, VerifyError> {
    verify_with_cache(claim, n_max, t_samples, &DetCache::new())
}

pub fn verify_with_cache(
    claim: &Claim,
    n_max: i64,
    t_samples: &[i64],
    cache: &DetCache,
) -> Result<ClaimResult, VerifyError> {
    if t_samples.is_empty() {
        return Err(VerifyError::EmptySamples);
    }
    if n_max < claim.n_start {
        return Err(VerifyError::RangeBelowStart {
            id: claim.id.clone(),
            start: claim.n_start,
            n_max,
        });
    }
    let last = claim.n_last(n_max);
    let mut holds_from: Option<i64> = None;
    let mut counterexamples = Vec::new();
    for n in claim.n_start..=last {
        let obs = claim
            .observe(n, t_samples, cache)
            .map_err(|fault| VerifyError::Claim {
                id: claim.id.clone(),
                fault,
            })?;
        if obs.holds {
            holds_from.get_or_insert(n);
        } else {
            holds_from = None;
            if counterexamples.len() < MAX_COUNTEREXAMPLES {
                counterexamples.push(Counterexample {
                    n,
                    computed: obs.computed,
                    predicted: obs.predicted,
                });
            }
        }
    }
    let status = match holds_from {
        Some(m) if m == claim.n_start => Status::Verified,
        Some(_) => Status::VerifiedFromM,
        None => Status::Mismatch,
    };
    Ok(ClaimResult {
        id: claim.id.clone(),
        anchor: claim.anchor.clone(),
        status,
        minimal_m: holds_from,
        counterexamples,
    })
}

/// Runs `claims` in parallel and returns their results sorted by id.
pub fn verify_claims(
    claims: &[Claim],
    n_max: i64,
    t_samples: &[i64],
) -> Result<Report, VerifyError> {
    let cache = DetCache::new();
    let mut results = claims
        .par_iter()
        .filter(|c| c.n_start <= n_max)
        .map(|c| verify_with_cache(c, n_max, t_samples, &cache))
        .collect::<Result<Vec<_>, _>>()?;
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report {
        n_max,
        t_samples: t_samples.to_vec(),
        claims: results,
    })
}

/// Runs every registered claim whose range starts at or below `n_max`.
pub fn verify_all(n_max: i64, t_samples: &[i64]) -> Result<Report, VerifyError> {
    verify_claims(&registered_claims(), n_max, t_samples)
}

/// Looks up registered claims by id, preserving the requested order.
pub fn select_claims(ids: &[&str]) -> Result<Vec<Claim>, VerifyError> {
    let all = registered_claims();
    ids.iter()
        .map(|id| {
            all.iter()
                .find(|c| c.id == *id)
                .cloned()
                .ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))
        })
        .collect()
}
