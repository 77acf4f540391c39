//! Serializable command reports.

use std::fmt::Write as _;

use holomap_core::homotopy::FamilyReport;
use holomap_core::linalg::{CMatrix, CVector};
use holomap_core::xvariety::FiberReport;
use holomap_core::{Complex64, MultiIndex};
use serde::Serialize;

use crate::document::MapDocument;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(c: Complex64) -> Self {
        JsonComplex { re: c.re, im: c.im }
    }
}

pub fn complex_vec(v: &[Complex64]) -> Vec<JsonComplex> {
    v.iter().map(|&c| c.into()).collect()
}

pub fn column(v: &CVector) -> Vec<JsonComplex> {
    v.iter().map(|&c| c.into()).collect()
}

pub fn rows(m: &CMatrix) -> Vec<Vec<JsonComplex>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)].into()).collect()).collect()
}

pub fn fmt_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

pub fn fmt_point(v: &[Complex64]) -> String {
    let parts: Vec<String> = v.iter().map(|&c| fmt_complex(c)).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub map: String,
    pub verdict: String,
    pub residual_norm: f64,
    pub degree: u32,
    pub embedding_dimension: usize,
    pub witness: Option<Vec<JsonComplex>>,
}

#[derive(Debug, Serialize)]
pub struct EntryReport {
    pub row: Vec<u32>,
    pub col: Vec<u32>,
    pub left: JsonComplex,
    pub right: JsonComplex,
}

#[derive(Debug, Serialize)]
pub struct EquivReport {
    pub equivalent: bool,
    pub residual: Option<f64>,
    pub unitary: Option<Vec<Vec<JsonComplex>>>,
    pub difference: Option<EntryReport>,
}

#[derive(Debug, Serialize)]
pub struct XMatrixReport {
    pub degree: u32,
    pub rows: Vec<Vec<u32>>,
    /// Entry polynomials in `w̄`, printed with variables `w1, w2, …`.
    pub entries: Vec<Vec<String>>,
    pub numerator_only: bool,
}

#[derive(Debug, Serialize)]
pub struct FiberJson {
    pub w: Vec<JsonComplex>,
    pub base: Vec<JsonComplex>,
    pub dimension: usize,
    pub nullspace: Vec<Vec<JsonComplex>>,
    pub at_origin: bool,
}

impl From<&FiberReport> for FiberJson {
    fn from(f: &FiberReport) -> Self {
        FiberJson {
            w: complex_vec(&f.w),
            base: complex_vec(&f.base),
            dimension: f.dimension,
            nullspace: f.nullspace.iter().map(column).collect(),
            at_origin: f.at_origin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GraphTestReport {
    pub graph_equals_x: bool,
    pub checked: Option<usize>,
    pub exceptional: Vec<FiberJson>,
}

#[derive(Debug, Serialize)]
pub struct WhitneyReport {
    pub length: usize,
    pub degree: u32,
    pub target_dims: Vec<usize>,
    pub residual_norm: f64,
    pub map: MapDocument,
}

#[derive(Debug, Serialize)]
pub struct SampleJson {
    pub t: f64,
    pub residual: f64,
    pub degree: u32,
    pub embedding_dimension: usize,
}

#[derive(Debug, Serialize)]
pub struct FamilyJson {
    pub name: String,
    pub target_dim: usize,
    pub grid: usize,
    pub max_residual: f64,
    pub max_increment: f64,
    pub left_residual: f64,
    pub right_residual: f64,
    pub samples: Vec<SampleJson>,
}

impl From<&FamilyReport> for FamilyJson {
    fn from(r: &FamilyReport) -> Self {
        FamilyJson {
            name: r.name.clone(),
            target_dim: r.target_dim,
            grid: r.samples.len(),
            max_residual: r.max_residual(),
            max_increment: r.max_increment,
            left_residual: r.left_residual,
            right_residual: r.right_residual,
            samples: r
                .samples
                .iter()
                .map(|s| SampleJson {
                    t: s.t,
                    residual: s.residual,
                    degree: s.degree,
                    embedding_dimension: s.embedding_dimension,
                })
                .collect(),
        }
    }
}

/// Run-length summary such as `4 x100, 3 x1` of a profile along the grid.
pub fn profile<T: PartialEq + std::fmt::Display>(values: &[T]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j < values.len() && values[j] == values[i] {
            j += 1;
        }
        if !out.is_empty() {
            out.push_str(", ");
        }
        let _ = write!(out, "{} x{}", values[i], j - i);
        i = j;
    }
    out
}

impl FamilyJson {
    pub fn text(&self) -> String {
        let degrees: Vec<u32> = self.samples.iter().map(|s| s.degree).collect();
        let dims: Vec<usize> = self.samples.iter().map(|s| s.embedding_dimension).collect();
        format!(
            "family {}: verified at {} grid points in target dimension {}\n  max residual {:e}\n  max coefficient increment {:e}\n  endpoint residuals {:e} / {:e}\n  degree profile: {}\n  embedding dimension profile: {}",
            self.name,
            self.grid,
            self.target_dim,
            self.max_residual,
            self.max_increment,
            self.left_residual,
            self.right_residual,
            profile(&degrees),
            profile(&dims),
        )
    }
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub kind: &'static str,
    pub arguments: [u64; 2],
    pub value: f64,
    /// Exact rational value for degree bounds.
    pub exact: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct BlaschkeReport {
    pub factors: usize,
    pub winding_degree: i64,
    pub quadrature_residual: f64,
    pub homotopy: Option<FamilyJson>,
}

#[derive(Debug, Serialize)]
pub struct CorpusEntryJson {
    pub id: &'static str,
    pub kind: &'static str,
    pub description: &'static str,
}

#[derive(Debug, Serialize)]
pub struct CorpusResult {
    pub id: &'static str,
    pub kind: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct CorpusRunReport {
    pub passed: bool,
    pub seed: u64,
    pub grid: usize,
    pub results: Vec<CorpusResult>,
}

pub fn exponents(m: &MultiIndex) -> Vec<u32> {
    m.exponents().to_vec()
}
