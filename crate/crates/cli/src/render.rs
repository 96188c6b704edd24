//! Output formats: canonical plain strings, the JSON term-list schema and CSV.

use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use qhankel_core::{Monomial, Poly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const VARS: [&str; 3] = ["q", "a", "b"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// `{"vars":["q","a","b"],"terms":[{"c":"1","e":[0,0,0]},...]}`, terms in
/// canonical (ascending) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub c: String,
    pub e: [u32; 3],
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("vars must be [\"q\",\"a\",\"b\"]")]
    Vars,
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<&Poly> for PolyDoc {
    fn from(p: &Poly) -> Self {
        PolyDoc {
            vars: VARS.iter().map(|v| v.to_string()).collect(),
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    c: c.to_string(),
                    e: m.exponents(),
                })
                .collect(),
        }
    }
}

impl PolyDoc {
    pub fn to_poly(&self) -> Result<Poly, DocError> {
        if self.vars != VARS {
            return Err(DocError::Vars);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = BigInt::from_str(&t.c).map_err(|_| DocError::Coefficient(t.c.clone()))?;
            terms.push((Monomial::new(t.e[0], t.e[1], t.e[2]), c));
        }
        Ok(Poly::from_terms(terms))
    }
}

pub fn poly_to_json(p: &Poly) -> String {
    serde_json::to_string(&PolyDoc::from(p)).expect("PolyDoc serializes")
}

pub fn poly_from_json(s: &str) -> Result<Poly, DocError> {
    serde_json::from_str::<PolyDoc>(s)?.to_poly()
}

pub fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
