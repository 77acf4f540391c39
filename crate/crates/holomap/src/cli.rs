//! Command-line interface.
//!
//! Exit codes: 0 when the check passes, 1 on a mathematical failure (for
//! example a map that is not proper), 2 on malformed input.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use holomap_core::blaschke::winding_degree;
use holomap_core::bounds::{coefficient_bound, degree_bound};
use holomap_core::corpus::{self, CorpusItem};
use holomap_core::homotopy::{blaschke_homotopy, verify_family, HomotopyFamily, DEFAULT_GRID};
use holomap_core::invariants::{embedding_dimension, norm_equivalent, NormEquivalence};
use holomap_core::xvariety::{fiber_at, graph_test, GraphTest};
use holomap_core::{
    certify_proper, BlaschkeProduct, Complex64, RationalBallMap, Settings, Verdict, XMatrix, DEFAULT_SEED, TAU,
};
use serde::Serialize;

use crate::document::{read_map, MapDocument};
use crate::error::{CliError, InputError};
use crate::report::*;
use crate::script::{HomotopyScript, WhitneyScript};

#[derive(Debug, Parser)]
#[command(name = "holomap", version, about = "Rational proper holomorphic maps between unit balls")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Comparison tolerance for verdicts.
    #[arg(long, global = true, default_value_t = TAU)]
    pub tol: f64,
    /// Seed for every sampling step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Number of equispaced parameter values checked along a family.
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    /// Number of random points for sampling tests.
    #[arg(long, global = true, default_value_t = 50)]
    pub samples: usize,
}

impl Options {
    pub fn settings(&self) -> Settings {
        Settings { tol: self.tol, seed: self.seed }
    }
}

/// A map argument is a map document path or the id of a corpus map.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify that a map sends the sphere to the sphere.
    Verify { map: String },
    /// Degree of the numerator.
    Degree { map: String },
    /// Number of linearly independent components.
    Embdim { map: String },
    /// Decide whether two maps have the same squared norm.
    Equiv { left: String, right: String },
    /// Homogenization matrix C(w̄) and fibers of the X-variety.
    Xvariety {
        map: String,
        /// Fiber over this point, given as comma-separated complex numbers.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_complex, conflicts_with = "graph_test")]
        at: Option<Vec<Complex64>>,
        /// Look for positive-dimensional fibers at random and structured points.
        #[arg(long)]
        graph_test: bool,
    },
    /// Whitney sequences.
    #[command(subcommand)]
    Whitney(WhitneyCommand),
    /// Verify a corpus family (by id) or a homotopy script.
    Homotopy { target: String },
    /// Degree and coefficient bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Winding degree of a finite Blaschke product.
    Blaschke {
        /// Zeros inside the unit disc, comma-separated or repeated, e.g. `0.3,-0.5i,0.1+0.2i`.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_complex)]
        zeros: Vec<Complex64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        /// Also verify the homotopy to z^m.
        #[arg(long)]
        homotopy: bool,
    },
    /// Built-in example maps and families.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
pub enum WhitneyCommand {
    /// Build the last term of a Whitney sequence from a script.
    Build {
        script: PathBuf,
        /// Write the resulting map document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// N(N-1)/(2(2n-3)) for maps B_n -> B_N.
    Degree { n: u64, target: u64 },
    /// Coefficient bound for normalized maps of degree d on B_n.
    Coeff { n: u32, d: u32 },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    List,
    /// Certify every map and verify every family.
    Run,
    /// Print the map document of a corpus map.
    Show { id: String },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    s.trim().parse::<Complex64>().map_err(|_| format!("invalid complex number {s:?}"))
}

/// Result of a command: pass/fail with a JSON and a text rendering.
pub struct Outcome {
    pub passed: bool,
    pub json: serde_json::Value,
    pub text: String,
}

impl Outcome {
    fn new(passed: bool, report: &impl Serialize, text: String) -> Self {
        Outcome { passed, json: serde_json::to_value(report).expect("reports serialize"), text }
    }
}

fn load_map(arg: &str) -> Result<RationalBallMap, CliError> {
    let path = Path::new(arg);
    if !path.exists() {
        return corpus::map(arg).ok_or_else(|| {
            InputError::Argument(format!("{arg}: no such file and no corpus map with this id")).into()
        });
    }
    Ok(read_map(path)?)
}

fn verify(arg: &str, o: &Options) -> Result<Outcome, CliError> {
    let map = load_map(arg)?;
    let cert = certify_proper(&map, &o.settings())?;
    let report = VerifyReport {
        map: arg.to_string(),
        verdict: format!("{:?}", cert.verdict),
        residual_norm: cert.residual_norm,
        degree: map.degree(),
        embedding_dimension: embedding_dimension(&map),
        witness: cert.witness.as_deref().map(complex_vec),
    };
    let mut text = format!("{arg}: {:?}, residual {:e}", cert.verdict, cert.residual_norm);
    if let Some(w) = &cert.witness {
        text.push_str(&format!("\n  worst sampled sphere point {}", fmt_point(w)));
    }
    Ok(Outcome::new(cert.verdict == Verdict::Proper, &report, text))
}

fn equiv(left: &str, right: &str, o: &Options) -> Result<Outcome, CliError> {
    let (f, g) = (load_map(left)?, load_map(right)?);
    Ok(match norm_equivalent(&f, &g, &o.settings())? {
        NormEquivalence::Equivalent { unitary, residual } => {
            let report = EquivReport {
                equivalent: true,
                residual: Some(residual),
                unitary: Some(rows(&unitary)),
                difference: None,
            };
            Outcome::new(true, &report, format!("equivalent: U f = g with residual {residual:e}"))
        }
        NormEquivalence::Inequivalent { difference: d } => {
            let text = format!(
                "inequivalent: entry ({}, {}) is {} vs {}",
                d.row,
                d.col,
                fmt_complex(d.left),
                fmt_complex(d.right)
            );
            let report = EquivReport {
                equivalent: false,
                residual: None,
                unitary: None,
                difference: Some(EntryReport {
                    row: exponents(&d.row),
                    col: exponents(&d.col),
                    left: d.left.into(),
                    right: d.right.into(),
                }),
            };
            Outcome::new(false, &report, text)
        }
    })
}

fn xvariety(arg: &str, at: Option<&[Complex64]>, graph: bool, o: &Options) -> Result<Outcome, CliError> {
    let map = load_map(arg)?;
    let x = XMatrix::build(&map);
    if let Some(w) = at {
        let fiber = fiber_at(&map, &x, w)?;
        let text = format!(
            "fiber over {}: f(w) = {}, dimension {}",
            fmt_point(w),
            fmt_point(&fiber.base),
            fiber.dimension
        );
        return Ok(Outcome::new(true, &FiberJson::from(&fiber), text));
    }
    if graph {
        let result = graph_test(&map, &x, o.samples, o.seed)?;
        let (report, text) = match &result {
            GraphTest::GraphEqualsX { checked } => (
                GraphTestReport { graph_equals_x: true, checked: Some(*checked), exceptional: Vec::new() },
                format!("X equals the graph of f at all {checked} sampled points"),
            ),
            GraphTest::ExceptionalFibersFound(fibers) => {
                let mut text = format!("{} exceptional fibers found:", fibers.len());
                for f in fibers {
                    text.push_str(&format!("\n  w = {}: dimension {}", fmt_point(&f.w), f.dimension));
                }
                (
                    GraphTestReport {
                        graph_equals_x: false,
                        checked: None,
                        exceptional: fibers.iter().map(FiberJson::from).collect(),
                    },
                    text,
                )
            }
        };
        return Ok(Outcome::new(true, &report, text));
    }
    let entries: Vec<Vec<String>> =
        (0..x.nrows()).map(|i| (0..x.ncols()).map(|k| x.entry(i, k).to_string()).collect()).collect();
    let mut text = format!(
        "C(w̄): {} x {} at degree {} (variables z_j stand for w̄_j)",
        x.nrows(),
        x.ncols(),
        x.degree()
    );
    for (alpha, row) in x.rows().iter().zip(&entries) {
        text.push_str(&format!("\n  {alpha}: [{}]", row.join(", ")));
    }
    let report = XMatrixReport {
        degree: x.degree(),
        rows: x.rows().iter().map(exponents).collect(),
        entries,
        numerator_only: x.numerator_only(),
    };
    Ok(Outcome::new(true, &report, text))
}

fn whitney_build(script: &Path, out: Option<&Path>, o: &Options) -> Result<Outcome, CliError> {
    let settings = o.settings();
    let term = WhitneyScript::read(script)?.build(&settings)?;
    let cert = certify_proper(term.map(), &settings)?;
    let doc = MapDocument::from_map(term.map());
    if let Some(path) = out {
        std::fs::write(path, doc.to_json())
            .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
    }
    let text = format!(
        "Whitney term of length {}: degree {}, target dimensions {:?}, residual {:e}\n  {}",
        term.len(),
        term.map().degree(),
        term.target_dims(),
        cert.residual_norm,
        term.map()
    );
    let report = WhitneyReport {
        length: term.len(),
        degree: term.map().degree(),
        target_dims: term.target_dims(),
        residual_norm: cert.residual_norm,
        map: doc,
    };
    Ok(Outcome::new(cert.is_proper(), &report, text))
}

fn load_family(target: &str, settings: &Settings) -> Result<HomotopyFamily, CliError> {
    let path = Path::new(target);
    if !path.exists() {
        match corpus::get(target) {
            Some(CorpusItem::Family(f)) => return Ok(f),
            Some(CorpusItem::Map(_)) => {
                return Err(InputError::Argument(format!("{target} is a map, not a family")).into())
            }
            None => {}
        }
    }
    HomotopyScript::read(path)?.build(settings)
}

fn homotopy(target: &str, o: &Options) -> Result<Outcome, CliError> {
    let settings = o.settings();
    let family = load_family(target, &settings)?;
    let report = FamilyJson::from(&verify_family(&family, o.grid, &settings)?);
    let text = report.text();
    Ok(Outcome::new(true, &report, text))
}

fn bound(cmd: &BoundCommand) -> Result<Outcome, CliError> {
    Ok(match *cmd {
        BoundCommand::Degree { n, target } => {
            let r = degree_bound(n, target)?;
            let value = *r.numer() as f64 / *r.denom() as f64;
            let report = BoundReport { kind: "degree", arguments: [n, target], value, exact: Some(r.to_string()) };
            Outcome::new(true, &report, r.to_string())
        }
        BoundCommand::Coeff { n, d } => {
            let b = coefficient_bound(n, d)?;
            let report =
                BoundReport { kind: "coefficient", arguments: [n as u64, d as u64], value: b.coefficient, exact: None };
            Outcome::new(true, &report, format!("{}", b.coefficient))
        }
    })
}

fn blaschke(zeros: &[Complex64], theta: f64, with_homotopy: bool, o: &Options) -> Result<Outcome, CliError> {
    let b = BlaschkeProduct::new(theta, zeros.to_vec()).map_err(|e| InputError::field("zeros", e.to_string()))?;
    let w = winding_degree(&b.to_map())?;
    let mut passed = w.degree == b.degree() as i64;
    let mut text = format!(
        "{} factors, winding degree {} (quadrature residual {:e})",
        b.degree(),
        w.degree,
        w.residual
    );
    let family = if with_homotopy {
        let settings = o.settings();
        let report = FamilyJson::from(&verify_family(&blaschke_homotopy(&b)?, o.grid, &settings)?);
        passed &= report.samples.iter().all(|s| s.degree as usize == b.degree());
        text.push('\n');
        text.push_str(&report.text());
        Some(report)
    } else {
        None
    };
    let report = BlaschkeReport {
        factors: b.degree(),
        winding_degree: w.degree,
        quadrature_residual: w.residual,
        homotopy: family,
    };
    Ok(Outcome::new(passed, &report, text))
}

fn corpus_command(cmd: &CorpusCommand, o: &Options) -> Result<Outcome, CliError> {
    let kind = |e: &corpus::CorpusEntry| if e.is_family() { "family" } else { "map" };
    match cmd {
        CorpusCommand::List => {
            let entries: Vec<CorpusEntryJson> = corpus::entries()
                .iter()
                .map(|e| CorpusEntryJson { id: e.id, kind: kind(e), description: e.description })
                .collect();
            let text = entries
                .iter()
                .map(|e| format!("{:<18} {:<7} {}", e.id, e.kind, e.description))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(true, &entries, text))
        }
        CorpusCommand::Show { id } => {
            let map = corpus::map(id)
                .ok_or_else(|| InputError::Argument(format!("no corpus map named {id:?}")))?;
            let doc = MapDocument::from_map(&map);
            let text = doc.to_json();
            Ok(Outcome::new(true, &doc, text))
        }
        CorpusCommand::Run => {
            let settings = o.settings();
            let results: Vec<CorpusResult> = corpus::entries()
                .iter()
                .map(|e| {
                    let (passed, detail) = match e.build() {
                        CorpusItem::Map(m) => match certify_proper(&m, &settings) {
                            Ok(c) => (c.is_proper(), format!("{:?}, residual {:e}", c.verdict, c.residual_norm)),
                            Err(err) => (false, err.to_string()),
                        },
                        CorpusItem::Family(f) => match verify_family(&f, o.grid, &settings) {
                            Ok(r) => (
                                true,
                                format!(
                                    "{} points, max residual {:e}, degrees {}",
                                    r.samples.len(),
                                    r.max_residual(),
                                    profile(&r.degrees())
                                ),
                            ),
                            Err(err) => (false, err.to_string()),
                        },
                    };
                    CorpusResult { id: e.id, kind: kind(e), passed, detail }
                })
                .collect();
            let passed = results.iter().all(|r| r.passed);
            let text = results
                .iter()
                .map(|r| format!("{} {:<18} {}", if r.passed { "ok  " } else { "FAIL" }, r.id, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let report = CorpusRunReport { passed, seed: o.seed, grid: o.grid, results };
            Ok(Outcome::new(passed, &report, text))
        }
    }
}

fn single<T: Serialize>(passed: bool, key: &str, value: T, text: String) -> Outcome {
    let mut obj = serde_json::Map::new();
    obj.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    Outcome { passed, json: serde_json::Value::Object(obj), text }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let o = &cli.options;
    if o.tol.is_nan() || o.tol <= 0.0 {
        return Err(InputError::Argument("--tol must be positive".into()).into());
    }
    match &cli.command {
        Command::Verify { map } => verify(map, o),
        Command::Degree { map } => {
            let d = load_map(map)?.degree();
            Ok(single(true, "degree", d, d.to_string()))
        }
        Command::Embdim { map } => {
            let e = embedding_dimension(&load_map(map)?);
            Ok(single(true, "embedding_dimension", e, e.to_string()))
        }
        Command::Equiv { left, right } => equiv(left, right, o),
        Command::Xvariety { map, at, graph_test } => xvariety(map, at.as_deref(), *graph_test, o),
        Command::Whitney(WhitneyCommand::Build { script, out }) => whitney_build(script, out.as_deref(), o),
        Command::Homotopy { target } => homotopy(target, o),
        Command::Bound(cmd) => bound(cmd),
        Command::Blaschke { zeros, theta, homotopy } => blaschke(zeros, *theta, *homotopy, o),
        Command::Corpus(cmd) => corpus_command(cmd, o),
    }
}

/// Parses arguments, runs the command, prints the report and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let body = if cli.options.json {
                serde_json::to_string_pretty(&outcome.json).expect("json values print")
            } else {
                outcome.text
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.options.json {
                let kind = if e.exit_code() == 2 { "input" } else { "math" };
                let doc = serde_json::json!({ "error": e.to_string(), "kind": kind });
                let _ = writeln!(std::io::stdout().lock(), "{doc}");
            } else {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    }
}
