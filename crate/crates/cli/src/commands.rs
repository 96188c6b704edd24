use std::fmt::Write as _;
use std::io::Write;

use qhankel_core::hankel::{family_sequence, hankel_det, hankel_report, HankelFamily};
use qhankel_core::jfraction::{
    closed_jfraction, jfraction_from_moments, orthopoly, orthopoly_explicit, ClosedFamily, ExplicitFamily,
    JFraction, MomentFunctional, ZPoly,
};
use qhankel_core::sequences::{
    cstar_seq, gould, narayana_triangle, nstar_triangle, qcatalan_seq, qmotzkin_seq, qnarayana_seq,
    rogers_szego_seq,
};
use qhankel_core::verify::{list_checks, CheckReport, Defect, Verifier};
use qhankel_core::{HankelError, JFractionError, Poly, Substitution, Var, VerifyError};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{Cli, Command, HankelArg, JfFamily, SeqFamily, TriangleFamily};
use crate::expr::{parse_poly, ParseError};
use crate::render::{csv_string, Format, PolyDoc};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Arithmetic(String),
    #[error("{0}")]
    Failed(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 verification failure, 2 usage or parse error, 3 arithmetic or other internal error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Arithmetic(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<JFractionError> for CliError {
    fn from(e: JFractionError) -> Self {
        CliError::Arithmetic(e.to_string())
    }
}

impl From<HankelError> for CliError {
    fn from(e: HankelError) -> Self {
        match e {
            HankelError::UnsupportedCombination { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Arithmetic(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn doc(p: &Poly) -> Value {
    serde_json::to_value(PolyDoc::from(p)).expect("PolyDoc serializes")
}

fn docs(ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(doc).collect())
}

fn no_csv(format: Format, what: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(format!("csv output is not available for {what}")));
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{v}")?;
    Ok(())
}

pub fn hankel_family(f: HankelArg) -> HankelFamily {
    match f {
        HankelArg::Qcatalan => HankelFamily::QCatalan,
        HankelArg::Narayana => HankelFamily::Narayana,
        HankelArg::Cstar => HankelFamily::CStar,
        HankelArg::Motzkin => HankelFamily::Motzkin,
    }
}

/// The registry check that covers `det(mu_{i+j+shift})` for the family.
pub fn hankel_check_name(family: HankelFamily, shift: usize) -> &'static str {
    match (family, shift) {
        (HankelFamily::QCatalan | HankelFamily::Narayana, _) => "thm_eq18_eq19_hankel",
        (HankelFamily::CStar, 0) => "cstar_shift0_hankel",
        (HankelFamily::CStar, _) => "eq30_31_hankel_cstar",
        (HankelFamily::Motzkin, _) => "motzkin_hankel",
    }
}

pub fn sequence(family: SeqFamily, upto: usize) -> Vec<Poly> {
    match family {
        SeqFamily::Qcatalan => qcatalan_seq(upto),
        SeqFamily::Narayana => qnarayana_seq(upto),
        SeqFamily::Cstar => cstar_seq(upto),
        SeqFamily::Motzkin => qmotzkin_seq(upto),
        SeqFamily::RogersSzego => rogers_szego_seq(upto),
    }
}

fn seq_name(f: SeqFamily) -> &'static str {
    match f {
        SeqFamily::Qcatalan => "qcatalan",
        SeqFamily::Narayana => "narayana",
        SeqFamily::Cstar => "cstar",
        SeqFamily::Motzkin => "motzkin",
        SeqFamily::RogersSzego => "rogers-szego",
    }
}

fn jf_name(f: JfFamily) -> &'static str {
    match f {
        JfFamily::Narayana => "narayana",
        JfFamily::Qcatalan => "qcatalan",
        JfFamily::CstarShift1 => "cstar-shift1",
        JfFamily::CstarShift0 => "cstar-shift0",
        JfFamily::Motzkin => "motzkin",
    }
}

fn closed(family: JfFamily, depth: usize) -> JFraction {
    let (a, b) = (Poly::a(), Poly::b());
    match family {
        JfFamily::Narayana => closed_jfraction(ClosedFamily::Narayana, depth, &a, &b),
        JfFamily::Qcatalan => closed_jfraction(ClosedFamily::Narayana, depth, &Poly::zero(), &Poly::one()),
        JfFamily::CstarShift1 => closed_jfraction(ClosedFamily::CStarShift1, depth, &a, &b),
        JfFamily::CstarShift0 => closed_jfraction(ClosedFamily::CStarShift0, depth, &a, &b),
        JfFamily::Motzkin => closed_jfraction(ClosedFamily::Motzkin, depth, &a, &b),
    }
}

/// `mu_0 .. mu_upto` of the J-fraction family.
pub fn moments(family: JfFamily, upto: usize) -> Result<Vec<Poly>, CliError> {
    Ok(match family {
        JfFamily::Narayana => qnarayana_seq(upto),
        JfFamily::Qcatalan => qcatalan_seq(upto),
        JfFamily::CstarShift0 => cstar_seq(upto),
        JfFamily::Motzkin => qmotzkin_seq(upto),
        JfFamily::CstarShift1 => {
            let a = Poly::a();
            let raw = cstar_seq(upto + 1);
            let mut out = Vec::with_capacity(upto + 1);
            for c in &raw[1..] {
                out.push(c.exact_div(&a).map_err(|e| CliError::Arithmetic(e.to_string()))?);
            }
            out
        }
    })
}

pub fn parse_defect(spec: &str) -> Result<Defect, CliError> {
    let bad = || CliError::Usage(format!("defect must look like FAMILY:INDEX, got `{spec}`"));
    let (fam, idx) = spec.split_once(':').ok_or_else(bad)?;
    let family = HankelFamily::from_name(fam).ok_or_else(bad)?;
    let index = idx.parse().map_err(|_| bad())?;
    Ok(Defect { family, index })
}

fn report_json(r: &CheckReport) -> Value {
    let failure = r.failure.as_ref().map(|f| {
        json!({
            "at": f.at.iter().map(|(k, v)| json!({ "name": k, "value": v })).collect::<Vec<_>>(),
            "lhs": f.lhs,
            "rhs": f.rhs,
            "error": f.error,
        })
    });
    json!({ "name": r.name, "depth": r.depth, "passed": r.passed, "failure": failure })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Seq {
            family,
            n,
            a,
            b,
            format,
        } => {
            let mut sub = Substitution::new();
            if let Some(a) = a {
                sub = sub.with(Var::A, parse_poly(a)?);
            }
            if let Some(b) = b {
                sub = sub.with(Var::B, parse_poly(b)?);
            }
            let values: Vec<Poly> = sequence(*family, *n).iter().map(|p| p.substitute(&sub)).collect();
            match format {
                Format::Plain => {
                    for v in &values {
                        writeln!(out, "{v}")?;
                    }
                }
                Format::Json => emit_json(
                    out,
                    &json!({ "family": seq_name(*family), "values": docs(&values) }),
                )?,
                Format::Csv => {
                    let rows = values
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vec![i.to_string(), v.to_string()]);
                    write!(out, "{}", csv_string(&["n", "value"], rows))?;
                }
            }
        }
        Command::Triangle { family, rows, format } => {
            let (name, first_k, table) = match family {
                TriangleFamily::Narayana => ("narayana", 0, narayana_triangle(rows + 1)),
                TriangleFamily::Nstar => ("nstar", 1, nstar_triangle(rows + 1)),
            };
            let listed: Vec<(usize, &[Poly])> = table
                .rows()
                .iter()
                .enumerate()
                .skip(first_k)
                .map(|(n, row)| (n, &row[first_k..]))
                .collect();
            match format {
                Format::Plain => {
                    for (n, row) in &listed {
                        let mut line = format!("{n}:");
                        for (i, v) in row.iter().enumerate() {
                            let sep = if i == 0 { " " } else { "\t" };
                            write!(line, "{sep}{v}").expect("string write");
                        }
                        writeln!(out, "{line}")?;
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = listed
                        .iter()
                        .map(|(n, row)| {
                            json!({ "n": n, "entries": row.iter().map(|v| v.to_string()).collect::<Vec<_>>() })
                        })
                        .collect();
                    emit_json(out, &json!({ "family": name, "first_k": first_k, "rows": rows }))?
                }
                Format::Csv => {
                    let recs = listed.iter().flat_map(|(n, row)| {
                        row.iter()
                            .enumerate()
                            .map(move |(i, v)| vec![n.to_string(), (i + first_k).to_string(), v.to_string()])
                    });
                    write!(out, "{}", csv_string(&["n", "k", "value"], recs))?;
                }
            }
        }
        Command::Gould { k, n, r, format } => {
            no_csv(*format, "gould")?;
            let g = gould(*k, *n, *r);
            match format {
                Format::Json => emit_json(out, &doc(&g))?,
                _ => writeln!(out, "{g}")?,
            }
        }
        Command::Hankel {
            family,
            shift,
            n,
            verify,
            format,
        } => {
            no_csv(*format, "hankel")?;
            let family = hankel_family(*family);
            if *verify {
                let r = hankel_report(family, *shift, *n)?;
                match format {
                    Format::Json => emit_json(
                        out,
                        &json!({
                            "family": family.name(), "shift": shift, "n": n,
                            "computed": doc(&r.computed), "expected": doc(&r.expected), "matched": r.matched,
                        }),
                    )?,
                    _ => {
                        writeln!(out, "computed: {}", r.computed)?;
                        writeln!(out, "expected: {}", r.expected)?;
                        writeln!(out, "match: {}", r.matched)?;
                    }
                }
                if !r.matched {
                    return Err(CliError::Failed(format!(
                        "{} determinant at shift {shift}, n={n} differs from its closed form",
                        family.name()
                    )));
                }
            } else {
                let seq = family_sequence(family, 2 * n + shift + 1);
                let det = hankel_det(&seq, *shift, *n)?;
                match format {
                    Format::Json => emit_json(out, &doc(&det))?,
                    _ => writeln!(out, "{det}")?,
                }
            }
        }
        Command::Jfraction {
            family,
            depth,
            from_moments,
            format,
        } => {
            no_csv(*format, "jfraction")?;
            let jf = if *from_moments {
                let mu = moments(*family, 2 * depth)?;
                jfraction_from_moments(&MomentFunctional::new(mu), *depth)?
            } else {
                closed(*family, *depth)
            };
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({ "family": jf_name(*family), "depth": depth, "s": docs(&jf.s), "t": docs(&jf.t) }),
                )?,
                _ => {
                    for (k, s) in jf.s.iter().enumerate() {
                        writeln!(out, "s_{k} = {s}")?;
                    }
                    for (k, t) in jf.t.iter().enumerate() {
                        writeln!(out, "t_{k} = {t}")?;
                    }
                }
            }
        }
        Command::Orthopoly {
            family,
            n,
            explicit,
            format,
        } => {
            no_csv(*format, "orthopoly")?;
            let p: ZPoly = if *explicit {
                let fam = ExplicitFamily::from_name(jf_name(*family)).ok_or_else(|| {
                    CliError::Usage(format!("no explicit formula for {}", jf_name(*family)))
                })?;
                orthopoly_explicit(fam, *n)
            } else {
                orthopoly(&closed(*family, *n), *n)?
            };
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({ "family": jf_name(*family), "n": n, "coeffs": docs(p.coeffs()) }),
                )?,
                _ => writeln!(out, "{p}")?,
            }
        }
        Command::Verify {
            all: _,
            check,
            depth,
            list,
            format,
            inject_defect,
        } => {
            no_csv(*format, "verify")?;
            if *list {
                for c in list_checks() {
                    writeln!(out, "{}\t{}", c.name, c.anchor)?;
                }
                return Ok(());
            }
            let verifier = match inject_defect {
                Some(spec) => Verifier::with_defect(parse_defect(spec)?),
                None => Verifier::new(),
            };
            let names: Vec<&str> = match check {
                Some(name) => vec![name.as_str()],
                None => list_checks().iter().map(|c| c.name).collect(),
            };
            let reports = names
                .par_iter()
                .map(|name| verifier.run(name, *depth))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json => emit_json(out, &Value::Array(reports.iter().map(report_json).collect()))?,
                _ => {
                    for r in &reports {
                        writeln!(out, "{r}")?;
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                let first = reports.iter().find(|r| !r.passed).expect("counted a failure");
                return Err(CliError::Failed(format!(
                    "{failed} of {} checks failed; first: {} at {}",
                    reports.len(),
                    first.name,
                    first.failure.as_ref().map(|f| f.location()).unwrap_or_default()
                )));
            }
        }
    }
    Ok(())
}
