//! JSON scripts for `whitney build` and `homotopy`.
//!
//! Complex numbers are written either as plain numbers or as
//! `{"re": .., "im": ..}`. Matrices are lists of rows.
//!
//! Whitney script:
//!
//! ```json
//! {
//!   "domain_dim": 2,
//!   "start": {"a": [0.1, 0], "unitary": [[1, 0], [0, 1]]},
//!   "steps": [
//!     {"subspace": [[0, 1]], "automorphism": {}, "injection": null}
//!   ]
//! }
//! ```
//!
//! or `{"domain_dim": 2, "random": {"seed": 7, "length": 3}}`.
//!
//! Homotopy scripts are tagged by `kind`: `juxtapose` (`left`, `right`),
//! `blaschke` (`theta`, `zeros`), `contraction` (`domain_dim`,
//! `automorphism`), `monomial` and `linear` (`whitney`), `collapse`
//! (`map`). A map is an inline map document or `{"corpus": "<id>"}`.

use std::path::Path;

use holomap_core::homotopy::{
    automorphism_contraction, blaschke_homotopy, collapse_to_linear, homotopy_to_monomial, juxtaposition_family,
    whitney_to_linear, HomotopyFamily,
};
use holomap_core::linalg::{CMatrix, CVector};
use holomap_core::whitney::{random_term, WhitneyStep};
use holomap_core::{corpus, BallAutomorphism, BlaschkeProduct, Complex64, RationalBallMap, Settings, WhitneyTerm};
use serde::{Deserialize, Serialize};

use crate::document::{parse_json, MapDocument};
use crate::error::{CliError, InputError};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl From<ComplexValue> for Complex64 {
    fn from(v: ComplexValue) -> Self {
        match v {
            ComplexValue::Real(re) => Complex64::new(re, 0.0),
            ComplexValue::Complex { re, im } => Complex64::new(re, im),
        }
    }
}

fn vector(v: &[ComplexValue]) -> CVector {
    CVector::from_iterator(v.len(), v.iter().map(|&c| c.into()))
}

fn matrix(field: &str, rows: &[Vec<ComplexValue>]) -> Result<CMatrix, InputError> {
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
        return Err(InputError::field(format!("{field}[{i}]"), format!("expected {ncols} entries")));
    }
    Ok(CMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j].into()))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismSpec {
    /// Point sent to the origin; zero when omitted.
    #[serde(default)]
    pub a: Option<Vec<ComplexValue>>,
    /// Unitary factor; identity when omitted.
    #[serde(default)]
    pub unitary: Option<Vec<Vec<ComplexValue>>>,
}

impl AutomorphismSpec {
    pub fn build(&self, field: &str, n: usize) -> Result<BallAutomorphism, CliError> {
        let a: Vec<Complex64> = match &self.a {
            Some(a) if a.len() != n => {
                return Err(InputError::field(format!("{field}.a"), format!("expected {n} entries")).into())
            }
            Some(a) => a.iter().map(|&c| c.into()).collect(),
            None => vec![Complex64::new(0.0, 0.0); n],
        };
        let u = match &self.unitary {
            Some(rows) => matrix(&format!("{field}.unitary"), rows)?,
            None => CMatrix::identity(n, n),
        };
        if u.nrows() != n || u.ncols() != n {
            return Err(InputError::field(format!("{field}.unitary"), format!("expected a {n}x{n} matrix")).into());
        }
        BallAutomorphism::new(a, u)
            .map_err(|e| InputError::field(field.to_string(), e.to_string()).into())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepSpec {
    /// Orthonormal basis of the subspace, one vector per entry.
    pub subspace: Vec<Vec<ComplexValue>>,
    #[serde(default)]
    pub automorphism: AutomorphismSpec,
    /// Matrix with orthonormal columns applied after the tensor step.
    #[serde(default)]
    pub injection: Option<Vec<Vec<ComplexValue>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    pub seed: u64,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhitneyScript {
    pub domain_dim: usize,
    #[serde(default)]
    pub start: AutomorphismSpec,
    #[serde(default)]
    pub steps: Vec<StepSpec>,
    #[serde(default)]
    pub random: Option<RandomSpec>,
}

impl WhitneyScript {
    pub fn build(&self, settings: &Settings) -> Result<WhitneyTerm, CliError> {
        let n = self.domain_dim;
        if n == 0 {
            return Err(InputError::field("domain_dim", "must be positive").into());
        }
        if let Some(r) = &self.random {
            if !self.steps.is_empty() {
                return Err(InputError::field("random", "cannot be combined with explicit steps").into());
            }
            return Ok(random_term(r.seed, n, r.length, settings)?);
        }
        let mut term = WhitneyTerm::new(self.start.build("start", n)?);
        for (i, s) in self.steps.iter().enumerate() {
            let field = format!("steps[{i}]");
            let dim = term.map().target_dim();
            if let Some(j) = s.subspace.iter().position(|v| v.len() != dim) {
                return Err(InputError::field(
                    format!("{field}.subspace[{j}]"),
                    format!("expected {dim} entries (current target dimension)"),
                )
                .into());
            }
            let basis = s.subspace.iter().map(|v| vector(v)).collect();
            let mut step = WhitneyStep::new(basis, s.automorphism.build(&format!("{field}.automorphism"), n)?);
            if let Some(rows) = &s.injection {
                step = step.with_injection(matrix(&format!("{field}.injection"), rows)?);
            }
            term = term.extend(step, settings).map_err(|e| match CliError::from(e) {
                CliError::Input(inner) => CliError::Input(InputError::field(field.clone(), inner.to_string())),
                math => math,
            })?;
        }
        Ok(term)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        read_json(path)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapRef {
    Corpus { corpus: String },
    Inline(MapDocument),
}

impl MapRef {
    pub fn resolve(&self, field: &str) -> Result<RationalBallMap, InputError> {
        match self {
            MapRef::Corpus { corpus: id } => corpus::map(id)
                .ok_or_else(|| InputError::field(format!("{field}.corpus"), format!("no corpus map named {id:?}"))),
            MapRef::Inline(doc) => doc.to_map().map_err(|e| InputError::field(field, e.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum HomotopyScript {
    Juxtapose {
        left: MapRef,
        right: MapRef,
    },
    Blaschke {
        #[serde(default)]
        theta: f64,
        zeros: Vec<ComplexValue>,
    },
    Contraction {
        domain_dim: usize,
        automorphism: AutomorphismSpec,
    },
    Monomial {
        whitney: WhitneyScript,
    },
    Linear {
        whitney: WhitneyScript,
    },
    Collapse {
        map: MapRef,
    },
}

impl HomotopyScript {
    pub fn build(&self, settings: &Settings) -> Result<HomotopyFamily, CliError> {
        Ok(match self {
            HomotopyScript::Juxtapose { left, right } => {
                juxtaposition_family(&left.resolve("left")?, &right.resolve("right")?)?
            }
            HomotopyScript::Blaschke { theta, zeros } => {
                let b = BlaschkeProduct::new(*theta, zeros.iter().map(|&z| z.into()).collect())
                    .map_err(|e| InputError::field("zeros", e.to_string()))?;
                blaschke_homotopy(&b)?
            }
            HomotopyScript::Contraction { domain_dim, automorphism } => {
                automorphism_contraction(&automorphism.build("automorphism", *domain_dim)?)?
            }
            HomotopyScript::Monomial { whitney } => homotopy_to_monomial(&whitney.build(settings)?)?,
            HomotopyScript::Linear { whitney } => whitney_to_linear(&whitney.build(settings)?, settings)?,
            HomotopyScript::Collapse { map } => collapse_to_linear(&map.resolve("map")?, settings)?,
        })
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        read_json(path)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_json(&text).map_err(|e| e.in_file(path))
}
