//! Wire format:
//! `{"field": {...}, "n": 2, "terms": [{"exps": [1, 0], "coeff": [0, 1]}]}`.
//! Emitted terms are sorted by exponent rank; parsed terms may be unreduced
//! and repeated.

use serde::{Deserialize, Serialize};

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::gf::{field_from_desc, FieldDesc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u64>,
    pub coeff: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: FieldDesc,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<MultiPoly> {
        let field = field_from_desc(&self.field)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exps.clone(), field.from_coeffs(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::build(&field, self.n, &terms)
    }
}

impl MultiPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            field: self.field.describe(),
            n: self.n,
            terms: self
                .terms()
                .map(|(exps, c)| TermJson {
                    exps: exps.into_iter().map(u64::from).collect(),
                    coeff: self.field.coeffs(c).into_iter().map(u64::from).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<MultiPoly> {
        let pj: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        pj.to_poly()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial JSON is always serializable")
    }
}
