use std::path::{Path, PathBuf};

use functor_hh::cli::{run, Outcome};
use functor_hh::fixtures;
use functor_hh::hochschild::Hochschild;
use functor_hh::monoid::BimoduleRep;
use functor_hh::scalar::Field;
use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("functor-hh").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let out = cli(&v);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// Writes representatives of `HHⁿ(dual numbers)` to a temporary directory.
fn dual_cocycles(dir: &Path, n: usize) -> Vec<PathBuf> {
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = Hochschild::new(&a, &BimoduleRep::regular(&a)).unwrap();
    let reps = h.cohomology(n, 0).unwrap().representatives;
    reps.iter()
        .enumerate()
        .map(|(k, z)| {
            let file = h.at(0).cochain_to_file(&h.at(0).cochain(n, z));
            let path = dir.join(format!("h{n}_{k}.json"));
            std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
            path
        })
        .collect()
}

#[test]
fn hh_table_for_dual_numbers() {
    let m = fixture("dual.json");
    let out = cli(&["hh", "--monoid", &m, "--bimodule", "self", "--max-degree", "3", "--at", "all"]);
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.lines().skip(2).take(4).collect();
    let dims: Vec<&str> = rows.iter().map(|r| r.split_whitespace().last().unwrap()).collect();
    assert_eq!(dims, ["2", "1", "1", "1"]);
    let v = json(&["hh", "--monoid", &m, "--max-degree", "3"]);
    assert_eq!(v["dims"]["3"]["1"], 1);
    assert_eq!(v["cochain_dims"]["3"]["1"], 16);
    assert_eq!(v["beta_squared_verified"], true);
}

#[test]
fn representatives_are_cocycles_on_reload() {
    let dir = tempfile::tempdir().unwrap();
    let m = fixture("graded_c2_super.json");
    let v = json(&["hh", "--monoid", &m, "--max-degree", "1", "--representatives"]);
    let rep = &v["representatives"]["0"]["e"][0];
    let path = dir.path().join("rep.json");
    std::fs::write(&path, rep.to_string()).unwrap();
    let out = cli(&["validate", path.to_str().unwrap(), "--monoid", &m]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.starts_with("cocycle: valid"));
}

#[test]
fn separability_verdicts() {
    let v = json(&["separability", "--monoid", &fixture("m2.json")]);
    assert_eq!(v["separable"], true);
    assert_eq!(v["xi"].as_array().unwrap().len(), 16);
    assert_eq!(v["t"]["1"].as_array().unwrap().len(), 16);
    let v = json(&["separability", "--monoid", &fixture("dual.json")]);
    assert_eq!(v["separable"], false);
}

#[test]
fn broken_category_is_rejected() {
    let out = cli(&["validate", &fixture("broken_category.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("symmetry involution failed at (g,g)"), "{}", out.stdout);
}

#[test]
fn every_fixture_validates() {
    for (name, _) in fixtures::FILES {
        if *name == "broken_category.json" {
            continue;
        }
        let out = cli(&["validate", &fixture(name)]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
    }
    let out = cli(&["validate", &fixture("dual_algebra.json")]);
    assert_eq!(out.code, 0);
    let v = json(&["validate", &fixture("m2.json")]);
    assert_eq!(v["details"]["commutative"], false);
}

#[test]
fn parse_and_io_failures_exit_with_two() {
    assert_eq!(cli(&["hh", "--monoid", "/nonexistent/monoid.json"]).code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(cli(&["validate", bad.to_str().unwrap()]).code, 2);
    assert_eq!(cli(&["no-such-command"]).code, 2);
    assert_eq!(cli(&["hh", "--monoid", &fixture("dual.json"), "--at", "nowhere"]).code, 2);
}

#[test]
fn commutant_and_derivations() {
    let v = json(&["commutant", "--monoid", &fixture("graded_c2_super.json")]);
    assert_eq!(v["e"]["dim"], 1);
    assert_eq!(v["g"]["dim"], 0);
    let v = json(&["derivations", "--monoid", &fixture("dual.json")]);
    assert_eq!(v["1"]["derivations"], 1);
    assert_eq!(v["1"]["inner"], 0);
    assert_eq!(v["1"]["hh1"], 1);
}

#[test]
fn products_of_cocycle_files() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = dual_cocycles(dir.path(), 1);
    let m = fixture("dual.json");
    let f = h1[0].to_str().unwrap();
    let v = json(&["cup", "--monoid", &m, "--cocycle", f, "--cocycle", f]);
    assert_eq!(v["cocycle"], true);
    assert_eq!(v["cochain"]["degree"], 2);
    let v = json(&["bracket", "--monoid", &m, "--cocycle", f, "--cocycle", f]);
    assert_eq!(v["cocycle"], true);
    assert_eq!(v["cochain"]["degree"], 1);
}

#[test]
fn extensions_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let h2 = dual_cocycles(dir.path(), 2);
    let m = fixture("dual.json");
    let f = h2[0].to_str().unwrap();
    let v = json(&["extension", "--monoid", &m, "--cocycle", f]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["monoid"]["values"]["1"], 4);
    assert_eq!(v["monoid"]["category"], "x1.json");
    let v = json(&["baer-sum", "--monoid", &m, "--cocycle", f, "--cocycle", f]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["equivalent_to_sum_cocycle"], true);
    let v = json(&["semidirect", "--monoid", &m]);
    assert_eq!(v["monoid"]["values"]["1"], 4);
    // the extension file is a monoid file the tool reads back
    let e = json(&["extension", "--monoid", &m, "--cocycle", f]);
    let ext = Path::new(&m).parent().unwrap().join("x1.json");
    std::fs::copy(ext, dir.path().join("x1.json")).unwrap();
    let path = dir.path().join("ext.json");
    std::fs::write(&path, e["monoid"].to_string()).unwrap();
    assert_eq!(cli(&["validate", path.to_str().unwrap()]).code, 0);
}

#[test]
fn non_cocycle_is_a_validation_failure() {
    let dir = tempfile::tempdir().unwrap();
    let a = fixtures::dual_numbers(Field::Rationals);
    let h = Hochschild::new(&a, &BimoduleRep::regular(&a)).unwrap();
    let c = h.at(0);
    let d2 = c.differential(2).unwrap();
    let k = (0..c.dim(2)).find(|&k| d2.column(k).iter().any(|s| !s.is_zero())).unwrap();
    let file = c.cochain_to_file(&c.space(2).basis_family(k));
    let path = dir.path().join("f.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let out = cli(&["extension", "--monoid", &fixture("dual.json"), "--cocycle", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not a cocycle"));
}

#[test]
fn les_of_split_sequence() {
    let v = json(&["les", "--monoid", &fixture("dual.json"), "--max-degree", "3"]);
    assert_eq!(v["1"]["exact"], true);
    assert_eq!(v["1"]["additive"], true);
    assert_eq!(v["1"]["dims_m"], serde_json::json!([4, 2, 2, 2]));
}

#[test]
fn oracle_and_crosscheck() {
    let v = json(&["oracle", "--algebra", &fixture("dual_algebra.json")]);
    assert_eq!(v["dims"], serde_json::json!({"0": 2, "1": 1, "2": 1, "3": 1}));
    let v = json(&["crosscheck", "--algebra", &fixture("dual_algebra.json"), "--random", "0", "1"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 3);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let m = fixture("graded_c2_super.json");
    let args = ["hh", "--monoid", m.as_str(), "--max-degree", "3", "--representatives", "--format", "json"];
    let first = cli(&args);
    assert_eq!(first, cli(&args));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    assert_eq!(first, pool.install(|| cli(&args)));
}
