use std::fs;
use std::io::Write;

use fibhess::claims::{
    registered_claims, reproduce_table, select_claims, verify_claims, ReportFormat, Status,
};
use fibhess::oeis::OeisIndex;
use fibhess::{AnyMatrix, DetEngine, FamilyId, RingValue, SubstitutionMode};
use num_bigint::BigInt;

use crate::args::{Command, DocFormat, EngineChoice, MatrixFormat, Mode};
use crate::error::{CliError, EXIT_MISMATCH};

/// Orders above this are refused even for the linear-time recurrence.
const MAX_ORDER: usize = 500;

pub fn run(command: Command, out: &mut impl Write) -> Result<i32, CliError> {
    match command {
        Command::Matrix {
            family,
            n,
            column,
            mode,
            format,
        } => matrix(out, &family, n, column, mode, format),
        Command::Det {
            family,
            n,
            column,
            mode,
            t,
            engine,
        } => det(out, &family, n, column, mode, t, engine),
        Command::LorentzMul { left, right, n, t } => lorentz_mul(out, &left, &right, n, t),
        Command::Table {
            which,
            n_max,
            format,
        } => table(out, which, n_max, format),
        Command::Verify {
            claims,
            n_max,
            t_samples,
            strict,
            out: path,
            format,
        } => verify(out, claims, n_max, &t_samples, strict, path, format),
        Command::Seq {
            family,
            t,
            n_max,
            identify,
            oeis_file,
            min_match,
        } => seq(
            out,
            &family,
            t,
            n_max,
            identify.then_some(oeis_file),
            min_match,
        ),
    }
    .inspect(|_| {
        let _ = out.flush();
    })
}

fn parse_family(name: &str) -> Result<FamilyId, CliError> {
    name.parse()
        .map_err(|_| CliError::UnknownFamily(name.to_string()))
}

fn resolve(name: &str, column: Option<usize>, mode: Mode) -> Result<FamilyId, CliError> {
    let id = parse_family(name)?;
    let Some(column) = column else {
        return Ok(id);
    };
    match id {
        FamilyId::Family(family) if family.is_substitutable() => Ok(FamilyId::Substituted {
            family,
            column,
            mode: match mode {
                Mode::Allones => SubstitutionMode::AllOnes,
                Mode::Basis => SubstitutionMode::BasisColumn,
            },
        }),
        _ => Err(CliError::UnknownFamily(format!(
            "{name}^i (only C, D and E take --i)"
        ))),
    }
}

fn check_order(n: usize) -> Result<(), CliError> {
    if n == 0 || n > MAX_ORDER {
        return Err(CliError::OutOfRange(format!(
            "n must be between 1 and {MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

fn at(v: RingValue, t: Option<i64>) -> RingValue {
    match t {
        Some(t) => v.eval_at(&BigInt::from(t)),
        None => v,
    }
}

fn matrix(
    out: &mut impl Write,
    family: &str,
    n: usize,
    column: Option<usize>,
    mode: Mode,
    format: MatrixFormat,
) -> Result<i32, CliError> {
    let id = resolve(family, column, mode)?;
    check_order(n)?;
    let m = id.build(n)?;
    match format {
        MatrixFormat::Pretty => writeln!(out, "{}", m.pretty().trim_end())?,
        MatrixFormat::Json => {
            let json =
                serde_json::to_string(&m.to_json()).map_err(|e| CliError::Other(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
        MatrixFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            for row in m.rendered_rows() {
                w.write_record(&row)
                    .map_err(|e| CliError::Other(e.to_string()))?;
            }
            out.write_all(&w.into_inner().map_err(|e| CliError::Other(e.to_string()))?)?;
        }
    }
    Ok(0)
}

/// The cofactor value plus an independent second opinion, if one exists.
fn second_opinion(
    id: FamilyId,
    m: &AnyMatrix,
    n: usize,
) -> Result<Option<(&'static str, RingValue)>, CliError> {
    if m.is_lower_hessenberg() {
        return Ok(Some(("hessenberg", m.det(DetEngine::Hessenberg)?)));
    }
    if let FamilyId::Product(pair) = id {
        let (a, b) = pair.factors();
        let a = FamilyId::Family(a).build(n)?;
        let b = FamilyId::Family(b).build(n)?;
        return Ok(Some(("lorentz-law", a.det_of_lorentz_product(&b)?)));
    }
    Ok(None)
}

fn det(
    out: &mut impl Write,
    family: &str,
    n: usize,
    column: Option<usize>,
    mode: Mode,
    t: Option<i64>,
    engine: EngineChoice,
) -> Result<i32, CliError> {
    let id = resolve(family, column, mode)?;
    check_order(n)?;
    let m = id.build(n)?;
    match engine {
        EngineChoice::Hessenberg => {
            if !m.is_lower_hessenberg() {
                return Err(CliError::Other(format!(
                    "{id}_{n} is not lower Hessenberg; use --engine cofactor"
                )));
            }
            writeln!(out, "{}", at(m.det(DetEngine::Hessenberg)?, t))?;
        }
        EngineChoice::Cofactor => writeln!(out, "{}", at(m.det(DetEngine::Cofactor)?, t))?,
        EngineChoice::Both => {
            let cofactor = at(m.det(DetEngine::Cofactor)?, t);
            writeln!(out, "cofactor: {cofactor}")?;
            match second_opinion(id, &m, n)? {
                Some((name, value)) => {
                    let value = at(value, t);
                    writeln!(out, "{name}: {value}")?;
                    if value != cofactor {
                        writeln!(out, "DIFFER")?;
                        return Err(CliError::EngineDisagreement(format!(
                            "{id}_{n}: cofactor {cofactor}, {name} {value}"
                        )));
                    }
                    writeln!(out, "MATCH")?;
                }
                None => {
                    writeln!(
                        out,
                        "hessenberg: not applicable (matrix is not lower Hessenberg)"
                    )?;
                    writeln!(out, "SKIPPED")?;
                }
            }
        }
    }
    Ok(0)
}

fn lorentz_mul(
    out: &mut impl Write,
    left: &str,
    right: &str,
    n: usize,
    t: Option<i64>,
) -> Result<i32, CliError> {
    let (l, r) = (parse_family(left)?, parse_family(right)?);
    check_order(n)?;
    let (a, b) = (l.build(n)?, r.build(n)?);
    let product = a.lorentz_mul(&b)?;
    let det = at(product.det(DetEngine::Cofactor)?, t);
    let law = at(a.det_of_lorentz_product(&b)?, t);
    let shown = match t {
        Some(t) => product.eval_at(&BigInt::from(t)),
        None => product,
    };
    writeln!(out, "{l} ._L {r}, n={n}")?;
    writeln!(out, "{}", shown.pretty().trim_end())?;
    writeln!(out, "det: {det}")?;
    writeln!(out, "-det({l})*det({r}): {law}")?;
    if det != law {
        writeln!(out, "DIFFER")?;
        return Err(CliError::EngineDisagreement(format!(
            "det {det} but -det*det {law}"
        )));
    }
    writeln!(out, "MATCH")?;
    Ok(0)
}

fn table(out: &mut impl Write, which: u8, n_max: i64, format: DocFormat) -> Result<i32, CliError> {
    let doc = reproduce_table(which, n_max)?;
    let text = match format {
        DocFormat::Text => doc.to_text(),
        DocFormat::Json => doc.to_json(),
        DocFormat::Csv => doc.to_csv(),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

fn verify(
    out: &mut impl Write,
    ids: Option<Vec<String>>,
    n_max: i64,
    t_samples: &[i64],
    strict: bool,
    path: Option<std::path::PathBuf>,
    format: DocFormat,
) -> Result<i32, CliError> {
    if n_max < 1 {
        return Err(CliError::OutOfRange(format!(
            "--n-max must be at least 1, got {n_max}"
        )));
    }
    let claims = match ids {
        Some(ids) => {
            let ids: Vec<&str> = ids
                .iter()
                .map(String::as_str)
                .filter(|s| !s.is_empty())
                .collect();
            select_claims(&ids)?
        }
        None => registered_claims(),
    };
    let report = verify_claims(&claims, n_max, t_samples)?;
    let doc = report.emit(match format {
        DocFormat::Text => ReportFormat::Text,
        DocFormat::Json => ReportFormat::Json,
        DocFormat::Csv => ReportFormat::Csv,
    });
    let mismatches = report.count(Status::Mismatch);
    match path {
        Some(path) => {
            fs::write(&path, doc)?;
            writeln!(
                out,
                "{} claims, {} mismatch; report written to {}",
                report.claims.len(),
                mismatches,
                path.display()
            )?;
        }
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(if strict && mismatches > 0 {
        EXIT_MISMATCH
    } else {
        0
    })
}

fn seq(
    out: &mut impl Write,
    family: &str,
    t: i64,
    n_max: usize,
    identify: Option<Option<std::path::PathBuf>>,
    min_match: usize,
) -> Result<i32, CliError> {
    let id = parse_family(family)?;
    check_order(n_max)?;
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let m = id.build(n)?;
        let engine = if m.is_lower_hessenberg() {
            DetEngine::Hessenberg
        } else {
            DetEngine::Cofactor
        };
        values.push(at(m.det(engine)?, Some(t)));
    }
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    writeln!(out, "{}", shown.join(", "))?;

    let Some(path) = identify else {
        return Ok(0);
    };
    let path = path.ok_or_else(|| {
        CliError::Oeis("no file given; pass --oeis-file or set OEIS_STRIPPED_PATH".into())
    })?;
    let index = OeisIndex::from_path(&path)
        .map_err(|e| CliError::Oeis(format!("{}: {e}", path.display())))?;
    let terms = values
        .into_iter()
        .map(|v| match v {
            RingValue::Int(k) => Ok(k),
            RingValue::Gauss(g) if g.is_real() => Ok(g.re),
            other => Err(CliError::Other(format!(
                "cannot identify non-integer term {other}"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let hits = index
        .lookup(&terms, min_match)
        .map_err(|e| CliError::OutOfRange(e.to_string()))?;
    if hits.is_empty() {
        writeln!(out, "no match")?;
    }
    for h in hits {
        let sign = if h.negated { " (negated)" } else { "" };
        writeln!(out, "{} offset {}{sign}", h.id, h.offset)?;
    }
    Ok(0)
}
