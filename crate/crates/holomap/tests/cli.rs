use std::path::Path;
use std::process::{Command, Output};

use holomap::MapDocument;
use holomap_core::corpus;

fn holomap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holomap")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn bound_degree_for_faran_dimensions() {
    let o = holomap(&["bound", "degree", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    let o = holomap(&["bound", "degree", "3", "5", "--json"]);
    assert_eq!(json(&o)["exact"], "10/3");
}

#[test]
fn bound_degree_rejects_small_domain() {
    assert_eq!(holomap(&["bound", "degree", "1", "3"]).status.code(), Some(2));
}

#[test]
fn verify_map_document() {
    let dir = tempfile::tempdir().unwrap();
    let doc = MapDocument::from_map(&corpus::faran_h()).to_json();
    let path = write(dir.path(), "h.json", &doc);
    let o = holomap(&["verify", &path, "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["verdict"], "Proper");
    assert_eq!(v["degree"], 2);
    assert_eq!(v["embedding_dimension"], 3);
}

#[test]
fn non_proper_map_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let doc = MapDocument::from_map(&corpus::faran_phi().scaled(0.9)).to_json();
    let path = write(dir.path(), "shrunk.json", &doc);
    let o = holomap(&["verify", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NotProper"));
}

#[test]
fn malformed_documents_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "bad.json",
        "{\n  \"schema_version\": \"1\",\n  \"domain_dim\": 2,\n  \"target_dim\": \"three\"\n}\n",
    );
    let o = holomap(&["verify", &path]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 4") && err.contains("target_dim"), "{err}");

    let mut doc = MapDocument::from_map(&corpus::ex2_1_h());
    doc.numerator[2][0].exponents = vec![2];
    let path = write(dir.path(), "short.json", &doc.to_json());
    let o = holomap(&["degree", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("numerator[2][0].exponents"), "{}", stderr(&o));

    let o = holomap(&["verify", "no-such-map", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["kind"], "input");
}

#[test]
fn degree_and_embedding_dimension() {
    assert_eq!(stdout(&holomap(&["degree", "ex2.1.f"])).trim(), "4");
    assert_eq!(stdout(&holomap(&["degree", "ex2.1.g"])).trim(), "3");
    assert_eq!(stdout(&holomap(&["embdim", "ex2.1.g"])).trim(), "5");
    assert_eq!(stdout(&holomap(&["embdim", "faran.f"])).trim(), "2");
}

#[test]
fn equivalence_decisions() {
    let o = holomap(&["equiv", "ex2.1.f", "ex2.1.g", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["equivalent"], false);
    let o = holomap(&["equiv", "faran.h", "faran.h", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["equivalent"], true);
}

#[test]
fn xvariety_matrix_and_fibers() {
    let v = json(&holomap(&["xvariety", "ex4.1.map", "--json"]));
    assert_eq!(v["rows"][0], serde_json::json!([5, 0]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 6);
    let o = holomap(&["xvariety", "ex4.1.map", "--at", "0.3,-0.2i", "--json"]);
    assert_eq!(json(&o)["dimension"], 0);
    let o = holomap(&["xvariety", "ex2.1.g", "--graph-test", "--samples", "20", "--json"]);
    let v = json(&o);
    assert_eq!(v["graph_equals_x"], false);
    assert!(v["exceptional"].as_array().unwrap().iter().all(|f| f["dimension"].as_u64().unwrap() > 0));
}

#[test]
fn whitney_build_writes_a_proper_map() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "w.json", r#"{"domain_dim": 2, "random": {"seed": 3, "length": 2}}"#);
    let out = dir.path().join("out.json");
    let o = holomap(&["whitney", "build", &script, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = holomap(&["verify", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn homotopy_by_id_and_script() {
    let o = holomap(&["homotopy", "faran.hphi.family", "--grid", "11", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["target_dim"], 5);
    assert_eq!(v["samples"].as_array().unwrap().len(), 11);

    let dir = tempfile::tempdir().unwrap();
    let script = write(dir.path(), "c.json", r#"{"kind": "collapse", "map": {"corpus": "ex2.1.h"}}"#);
    let o = holomap(&["homotopy", &script, "--grid", "21"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let script = write(dir.path(), "phi.json", r#"{"kind": "collapse", "map": {"corpus": "faran.phi"}}"#);
    assert_eq!(holomap(&["homotopy", &script]).status.code(), Some(1));
    let script = write(dir.path(), "typo.json", r#"{"kind": "collapse", "mapp": {"corpus": "faran.phi"}}"#);
    assert_eq!(holomap(&["homotopy", &script]).status.code(), Some(2));
}

#[test]
fn blaschke_winding_degree() {
    let o = holomap(&["blaschke", "--zeros", "0.3,-0.5i,0.1+0.2i", "--homotopy", "--grid", "11", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["winding_degree"], 3);
    assert_eq!(v["homotopy"]["samples"].as_array().unwrap().len(), 11);
    assert_eq!(holomap(&["blaschke", "--zeros", "1.5"]).status.code(), Some(2));
}

#[test]
fn corpus_run_is_deterministic() {
    let a = holomap(&["corpus", "run", "--json"]);
    let b = holomap(&["corpus", "run", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), corpus::entries().len());
}

#[test]
fn corpus_show_round_trips() {
    let o = holomap(&["corpus", "show", "whitney.W"]);
    let doc = MapDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.to_map().unwrap(), corpus::whitney_w());
    assert_eq!(stdout(&o).trim_end(), doc.to_json());
    let listed = stdout(&holomap(&["corpus", "list"]));
    assert_eq!(listed.lines().count(), corpus::entries().len());
}

#[test]
fn usage_errors() {
    assert_eq!(holomap(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(holomap(&["--help"]).status.code(), Some(0));
    assert_eq!(holomap(&["verify", "faran.h", "--tol", "-1"]).status.code(), Some(2));
}
