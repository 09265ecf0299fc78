//! Report types, command implementations and emitters behind the `torusinv`
//! binary. Every report serializes to JSON and to CSV; big integers are
//! emitted as exact JSON integers and rationals as numerator/denominator pairs.

use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Context};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Number;
use torusinv::stdecomp::{theorem_th5_report, Th5Case};
use torusinv::tori::build_canonical_torus;
use torusinv::truncpoly::{LambdaWeight, RestrictionViolation};
use torusinv::verify::{self, Cell, Check, Grid};
use torusinv::weyl::{centralizer_order, enumerate_classes, epsilon_sign, Family, GroupSpec};
use torusinv::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => bail!("unknown format {s:?} (expected json or csv)"),
        }
    }
}

fn big_number(text: String) -> Number {
    Number::from_str(&text).expect("decimal integer is a valid JSON number")
}

fn from_biguint(v: &BigUint) -> Number {
    big_number(v.to_string())
}

fn from_bigint(v: &BigInt) -> Number {
    big_number(v.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub label: String,
    pub centralizer_order: Number,
    pub torus_order: Number,
    pub epsilon: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub rows: Vec<ClassRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub grid: Grid,
    pub cells: Vec<Cell>,
    pub total: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusValue {
    pub label: String,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalCoeff {
    pub label: String,
    pub num: Number,
    pub den: Number,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub weight: Vec<i64>,
    pub case: Th5Case,
    pub d0: u64,
    pub per_torus_values: Vec<TorusValue>,
    pub rt1_coeffs: Vec<RationalCoeff>,
}

/// Emitted instead of a decomposition when the weight is not strongly
/// q-restricted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub refused: bool,
    pub reason: String,
    pub violation: RestrictionViolation,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Classes(ClassesReport),
    Verify(VerifyReport),
    Decompose(DecomposeReport),
    Refusal(Refusal),
}

impl Report {
    /// Process exit status: 0 on success, 1 on any failing cell, 3 on refusal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::Verify(r) if !r.all_pass() => 1,
            Report::Refusal(_) => 3,
            _ => 0,
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Json => {
                match self {
                    Report::Classes(r) => serde_json::to_writer_pretty(&mut *out, r)?,
                    Report::Verify(r) => serde_json::to_writer_pretty(&mut *out, r)?,
                    Report::Decompose(r) => serde_json::to_writer_pretty(&mut *out, r)?,
                    Report::Refusal(r) => serde_json::to_writer_pretty(&mut *out, r)?,
                }
                writeln!(out)?;
            }
            Format::Csv => self.write_csv(out)?,
        }
        out.flush()?;
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> anyhow::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        match self {
            Report::Classes(r) => {
                w.write_record(["label", "centralizer_order", "torus_order", "epsilon"])?;
                for row in &r.rows {
                    w.write_record([
                        row.label.clone(),
                        row.centralizer_order.to_string(),
                        row.torus_order.to_string(),
                        row.epsilon.to_string(),
                    ])?;
                }
            }
            Report::Verify(r) => {
                w.write_record(["key", "lhs", "rhs", "result"])?;
                for c in &r.cells {
                    let result = if c.pass { "PASS" } else { "FAIL" };
                    w.write_record([c.key.as_str(), &c.lhs, &c.rhs, result])?;
                }
            }
            Report::Decompose(r) => {
                let (case, i) = match r.case {
                    Th5Case::Generic => ("generic", String::new()),
                    Th5Case::Special { i } => ("special", i.to_string()),
                };
                w.write_record(["case", "i", "d0", "label", "value", "num", "den"])?;
                for (tv, c) in r.per_torus_values.iter().zip(&r.rt1_coeffs) {
                    w.write_record([
                        case.to_string(),
                        i.clone(),
                        r.d0.to_string(),
                        tv.label.clone(),
                        tv.value.to_string(),
                        c.num.to_string(),
                        c.den.to_string(),
                    ])?;
                }
            }
            Report::Refusal(r) => {
                w.write_record(["refused", "reason"])?;
                w.write_record(["true", r.reason.as_str()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

pub fn classes(family: Family, n: usize, q: u64) -> anyhow::Result<ClassesReport> {
    let spec = GroupSpec::with_q(family, n, q)?;
    let rows = enumerate_classes(&spec)
        .into_iter()
        .map(|label| {
            Ok(ClassRow {
                centralizer_order: from_biguint(&centralizer_order(&spec, &label)?),
                torus_order: from_biguint(&build_canonical_torus(&spec, &label)?.order()),
                epsilon: epsilon_sign(&spec, &label)?,
                label: label.to_string(),
            })
        })
        .collect::<torusinv::Result<Vec<_>>>()?;
    Ok(ClassesReport { family, n, q, rows })
}

pub fn verify(theorem: &str, grid: Grid) -> anyhow::Result<VerifyReport> {
    let check: Check = theorem.parse()?;
    let cells = verify::run(check, &grid)?;
    let failed = cells.iter().filter(|c| !c.pass).count();
    Ok(VerifyReport {
        theorem: check.id().to_string(),
        grid,
        total: cells.len(),
        failed,
        cells,
    })
}

/// Parses `a_1,…,a_{n−1}`.
pub fn parse_weight(text: &str, n: usize) -> anyhow::Result<LambdaWeight> {
    let coords = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("malformed weight {text:?}"))?
    };
    if coords.len() + 1 != n {
        bail!("malformed weight {text:?}: expected {} coordinates for n = {n}", n.saturating_sub(1));
    }
    Ok(LambdaWeight { coords })
}

pub fn decompose(family: Family, n: usize, q: u64, weight: &str, d0: Option<u64>) -> anyhow::Result<Report> {
    if family != Family::Sl {
        bail!("decompose supports only the sl family");
    }
    let spec = GroupSpec::with_q(family, n, q)?;
    let nu = parse_weight(weight, n)?;
    let th5 = match theorem_th5_report(&spec, &nu, d0) {
        Ok(r) => r,
        Err(Error::NotStronglyRestricted(violation)) => {
            return Ok(Report::Refusal(Refusal {
                refused: true,
                reason: format!("weight is not strongly {q}-restricted: {violation}"),
                violation,
            }))
        }
        Err(e) => return Err(e.into()),
    };
    let per_torus_values = th5
        .per_torus_values
        .values
        .iter()
        .map(|(label, &value)| TorusValue {
            label: label.to_string(),
            value,
        })
        .collect();
    let rt1_coeffs = th5
        .per_torus_values
        .values
        .keys()
        .map(|label| {
            let c = th5.vector.coeff(label);
            RationalCoeff {
                label: label.to_string(),
                num: from_bigint(c.numer()),
                den: from_bigint(c.denom()),
            }
        })
        .collect();
    Ok(Report::Decompose(DecomposeReport {
        family,
        n,
        q,
        weight: nu.coords,
        case: th5.case,
        d0: th5.d0,
        per_torus_values,
        rt1_coeffs,
    }))
}
