//! JSON map documents.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "domain_dim": 2,
//!   "target_dim": 3,
//!   "numerator": [[{"exponents": [2, 0], "re": 1.0, "im": 0.0}], ...],
//!   "denominator": [{"exponents": [0, 0], "re": 1.0, "im": 0.0}]
//! }
//! ```

use std::path::Path;

use holomap_core::{Complex64, MultiIndex, Polynomial, RationalBallMap, TAU};
use serde::{Deserialize, Serialize};

use crate::error::InputError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub exponents: Vec<u32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub schema_version: String,
    pub domain_dim: usize,
    pub target_dim: usize,
    pub numerator: Vec<Vec<Term>>,
    pub denominator: Vec<Term>,
}

fn terms_of(p: &Polynomial) -> Vec<Term> {
    p.stored_terms()
        .map(|(k, c)| Term { exponents: k.exponents().to_vec(), re: c.re, im: c.im })
        .collect()
}

fn polynomial(path: &str, n: usize, terms: &[Term]) -> Result<Polynomial, InputError> {
    for (i, t) in terms.iter().enumerate() {
        if t.exponents.len() != n {
            return Err(InputError::field(
                format!("{path}[{i}].exponents"),
                format!("expected {n} entries, found {}", t.exponents.len()),
            ));
        }
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(InputError::field(format!("{path}[{i}]"), "coefficient is not finite"));
        }
    }
    Polynomial::from_terms(
        n,
        terms.iter().map(|t| (MultiIndex::new(t.exponents.clone()), Complex64::new(t.re, t.im))),
    )
    .map_err(|e| InputError::field(path, e.to_string()))
}

impl MapDocument {
    pub fn from_map(map: &RationalBallMap) -> Self {
        MapDocument {
            schema_version: SCHEMA_VERSION.into(),
            domain_dim: map.domain_dim(),
            target_dim: map.target_dim(),
            numerator: map.numerator().iter().map(terms_of).collect(),
            denominator: terms_of(map.denominator()),
        }
    }

    /// Validates the document and builds the map.
    pub fn to_map(&self) -> Result<RationalBallMap, InputError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(InputError::field(
                "schema_version",
                format!("unsupported version {:?}, expected {SCHEMA_VERSION:?}", self.schema_version),
            ));
        }
        let n = self.domain_dim;
        if n == 0 {
            return Err(InputError::field("domain_dim", "must be positive"));
        }
        if self.numerator.len() != self.target_dim {
            return Err(InputError::field(
                "numerator",
                format!("target_dim is {} but {} components given", self.target_dim, self.numerator.len()),
            ));
        }
        let numerator = self
            .numerator
            .iter()
            .enumerate()
            .map(|(k, terms)| polynomial(&format!("numerator[{k}]"), n, terms))
            .collect::<Result<Vec<_>, _>>()?;
        let denominator = polynomial("denominator", n, &self.denominator)?;
        let q0 = denominator.constant_term();
        if (q0 - Complex64::new(1.0, 0.0)).norm() > TAU {
            return Err(InputError::field(
                "denominator",
                format!("constant term must be re=1, im=0 (found re={}, im={})", q0.re, q0.im),
            ));
        }
        RationalBallMap::new(numerator, denominator).map_err(|e| InputError::field("denominator", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Parses JSON, reporting the field path and line of the first problem.
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        parse_json(text)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_json(&text).map_err(|e| e.in_file(path))
    }
}

pub fn read_map(path: &Path) -> Result<RationalBallMap, InputError> {
    MapDocument::read(path)?.to_map().map_err(|e| e.in_file(path))
}

/// Deserializes `T`, keeping the JSON path of any error.
pub(crate) fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        InputError::Parse { path, line: inner.line(), column: inner.column(), message: inner.to_string() }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use holomap_core::corpus;

    #[test]
    fn faran_h_round_trips() {
        let h = corpus::faran_h();
        let doc = MapDocument::from_map(&h);
        let back = MapDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_map().unwrap(), h);
    }

    #[test]
    fn wrong_exponent_length_names_the_field() {
        let mut doc = MapDocument::from_map(&corpus::ex2_1_h());
        doc.numerator[1][0].exponents.push(0);
        let err = doc.to_map().unwrap_err().to_string();
        assert!(err.contains("numerator[1][0].exponents"), "{err}");
    }

    #[test]
    fn missing_constant_term_rejected() {
        let mut doc = MapDocument::from_map(&corpus::ex2_1_h());
        doc.denominator.clear();
        assert!(doc.to_map().unwrap_err().to_string().contains("denominator"));
    }

    #[test]
    fn parse_error_reports_path_and_line() {
        let text = "{\n \"schema_version\": \"1\",\n \"domain_dim\": \"two\"\n}";
        let err = MapDocument::from_json(text).unwrap_err().to_string();
        assert!(err.contains("domain_dim") && err.contains("line 3"), "{err}");
    }
}
