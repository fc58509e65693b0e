//! Tables for external use: corepresentation matrices, Gram matrices and the
//! reduced pairing matrix, as JSON or CSV. Output is deterministic.

use std::collections::HashMap;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::duality::reduced_pairing_matrix;
use crate::error::{AlgebraError, Result};
use crate::hopf_a::AMonomial;
use crate::hopf_u::UMonomial;
use crate::invariants::{gram_matrix, GramSpace};
use crate::linear::Monomial;
use crate::repr::{universal_t_rep, DMatrix};
use crate::scalars::{embed_numeric, CycField, CycScalar, Param, ParamScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(AlgebraError::OutOfRange(format!("unknown format '{s}', expected json or csv"))),
        }
    }
}

/// A real rational parameter value.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| AlgebraError::OutOfRange(format!("'{s}' is not a rational number")))
}

/// One coefficient of one entry of a numerically evaluated D-matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericTerm {
    pub m: usize,
    pub n: usize,
    pub eta_plus: u32,
    pub eta_minus: u32,
    pub delta: u32,
    pub z_plus: u32,
    pub z_minus: u32,
    /// Coefficients of `z+` and `z-` in the exponential.
    pub exp_plus: Complex64,
    pub exp_minus: Complex64,
    pub coeff: Complex64,
}

fn numeric_terms(d: &DMatrix, assignment: &HashMap<Param, f64>) -> Result<Vec<NumericTerm>> {
    let mut out = Vec::new();
    for m in 0..d.size() {
        for n in 0..d.size() {
            for (mono, c) in d.get(m, n).terms() {
                out.push(NumericTerm {
                    m,
                    n,
                    eta_plus: mono.a.n,
                    eta_minus: mono.a.m,
                    delta: mono.a.k,
                    z_plus: mono.z.a,
                    z_minus: mono.z.b,
                    exp_plus: embed_numeric(&mono.z.u, assignment)?,
                    exp_minus: embed_numeric(&mono.z.v, assignment)?,
                    coeff: embed_numeric(c, assignment)?,
                });
            }
        }
    }
    Ok(out)
}

/// D-matrix at rational `lambda`, substituted before the matrix product.
pub fn numeric_dmatrix(field: &'static CycField, lambda_plus: &BigRational, lambda_minus: &BigRational) -> Result<Vec<NumericTerm>> {
    let lp = ParamScalar::constant(CycScalar::from_rational(field, lambda_plus));
    let lm = ParamScalar::constant(CycScalar::from_rational(field, lambda_minus));
    numeric_terms(&universal_t_rep(&lp, &lm)?, &HashMap::new())
}

/// Symbolic D-matrix, embedded at the given real `lambda` afterwards.
pub fn embedded_dmatrix(field: &'static CycField, lambda_plus: f64, lambda_minus: f64) -> Result<Vec<NumericTerm>> {
    let d = universal_t_rep(
        &ParamScalar::param(field, Param::LambdaPlus),
        &ParamScalar::param(field, Param::LambdaMinus),
    )?;
    let assignment = HashMap::from([(Param::LambdaPlus, lambda_plus), (Param::LambdaMinus, lambda_minus)]);
    numeric_terms(&d, &assignment)
}

#[derive(Debug, Clone)]
pub enum ExportKind {
    Dmatrix {
        /// Rational `(lambda+, lambda-)` for numeric output; symbolic when absent.
        numeric: Option<(BigRational, BigRational)>,
    },
    Gram(GramSpace),
    Pairing,
}

pub fn export(kind: &ExportKind, p: u32, format: Format) -> Result<String> {
    let field = CycField::new(p)?;
    match kind {
        ExportKind::Dmatrix { numeric: None } => {
            let d = universal_t_rep(
                &ParamScalar::param(field, Param::LambdaPlus),
                &ParamScalar::param(field, Param::LambdaMinus),
            )?;
            let rows: Vec<Vec<String>> = d.rows().iter().map(|r| r.iter().map(|e| e.render()).collect()).collect();
            let header: Vec<String> = (0..d.size()).map(|n| format!("n={n}")).collect();
            render_table(&rows, &header, format)
        }
        ExportKind::Dmatrix { numeric: Some((lp, lm)) } => {
            let terms = numeric_dmatrix(field, lp, lm)?;
            match format {
                Format::Json => Ok(serde_json::to_string_pretty(&terms).expect("serializable") + "\n"),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record([
                        "m", "n", "eta_plus", "eta_minus", "delta", "z_plus", "z_minus", "exp_plus_re", "exp_plus_im",
                        "exp_minus_re", "exp_minus_im", "coeff_re", "coeff_im",
                    ])
                    .map_err(io_error)?;
                    for t in &terms {
                        let fields = [
                            t.m.to_string(),
                            t.n.to_string(),
                            t.eta_plus.to_string(),
                            t.eta_minus.to_string(),
                            t.delta.to_string(),
                            t.z_plus.to_string(),
                            t.z_minus.to_string(),
                            float(t.exp_plus.re),
                            float(t.exp_plus.im),
                            float(t.exp_minus.re),
                            float(t.exp_minus.im),
                            float(t.coeff.re),
                            float(t.coeff.im),
                        ];
                        w.write_record(&fields).map_err(io_error)?;
                    }
                    finish_csv(w)
                }
            }
        }
        ExportKind::Gram(space) => {
            let g = gram_matrix(field, *space);
            let labels: Vec<String> = match space {
                GramSpace::So => (0..p).map(|k| format!("delta^{k}")).collect(),
                GramSpace::M => (0..p)
                    .flat_map(|n| (0..p).map(move |m| (n, m)))
                    .map(|(n, m)| {
                        let s = AMonomial::new(n, m, 0).render();
                        if s.is_empty() {
                            "1".to_string()
                        } else {
                            s
                        }
                    })
                    .collect(),
            };
            let rows: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(|c| c.render()).collect()).collect();
            render_table(&rows, &labels, format)
        }
        ExportKind::Pairing => {
            let matrix = reduced_pairing_matrix(field);
            let labels: Vec<String> = AMonomial::all(p)
                .map(|a| format!("eta+^{} eta-^{} zeta({})", a.n, a.m, a.k))
                .collect();
            let rows: Vec<Vec<String>> = matrix.iter().map(|r| r.iter().map(|c| c.render()).collect()).collect();
            match format {
                Format::Json => render_table(&rows, &labels, format),
                Format::Csv => {
                    let row_labels: Vec<String> = UMonomial::reduced(p)
                        .map(|u| {
                            let s = u.render();
                            if s.is_empty() {
                                "1".to_string()
                            } else {
                                s
                            }
                        })
                        .collect();
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let mut header = vec![String::new()];
                    header.extend(labels.iter().cloned());
                    w.write_record(&header).map_err(io_error)?;
                    for (label, row) in row_labels.iter().zip(&rows) {
                        let mut record = vec![label.clone()];
                        record.extend(row.iter().cloned());
                        w.write_record(&record).map_err(io_error)?;
                    }
                    finish_csv(w)
                }
            }
        }
    }
}

fn float(x: f64) -> String {
    format!("{x:.17e}")
}

fn io_error(e: impl std::fmt::Display) -> AlgebraError {
    AlgebraError::Io(e.to_string())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(io_error)?;
    String::from_utf8(bytes).map_err(io_error)
}

fn render_table(rows: &[Vec<String>], header: &[String], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows).expect("serializable") + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).map_err(io_error)?;
            for r in rows {
                w.write_record(r).map_err(io_error)?;
            }
            finish_csv(w)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_csv_shape() {
        let out = export(&ExportKind::Gram(GramSpace::M), 3, Format::Csv).unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 10);
        assert!(lines.iter().all(|l| csv_fields(l) == 9));
        assert_eq!(out, export(&ExportKind::Gram(GramSpace::M), 3, Format::Csv).unwrap());
    }

    fn csv_fields(line: &str) -> usize {
        csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(line.as_bytes())
            .records()
            .next()
            .unwrap()
            .unwrap()
            .len()
    }

    #[test]
    fn dmatrix_json_shape() {
        let out = export(&ExportKind::Dmatrix { numeric: None }, 3, Format::Json).unwrap();
        let v: Vec<Vec<String>> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|r| r.len() == 3));
        assert!(v[0][0].contains("exp("));
    }

    #[test]
    fn numeric_paths_agree() {
        let field = CycField::new(3).unwrap();
        let half = parse_rational("1/2").unwrap();
        let two = parse_rational("2").unwrap();
        let direct = numeric_dmatrix(field, &half, &two).unwrap();
        let embedded = embedded_dmatrix(field, 0.5, 2.0).unwrap();
        assert_eq!(direct.len(), embedded.len());
        for (a, b) in direct.iter().zip(&embedded) {
            assert_eq!((a.m, a.n, a.eta_plus, a.eta_minus, a.delta), (b.m, b.n, b.eta_plus, b.eta_minus, b.delta));
            assert!((a.coeff - b.coeff).norm() < 1e-10);
            assert!((a.exp_plus - b.exp_plus).norm() < 1e-10);
        }
        assert!(parse_rational("x").is_err());
    }
}
