//! Command-line behaviour: outputs, JSON fields and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fgsp6(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fgsp6")).args(args).env_remove("FGSP6_SEED").output().unwrap()
}

fn fgsp6_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fgsp6"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn tmp(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("fgsp6-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn from_form_golden_and_arity() {
    let o = fgsp6(&["order", "from-form", "1", "1", "1", "1", "1", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), include_str!("golden/from_form_hurwitz.txt"));
    assert_eq!(code(&fgsp6(&["order", "from-form", "1", "1", "1", "1", "1"])), 2);
    assert_eq!(code(&fgsp6(&["order", "from-form", "1", "1", "1", "1", "1", "x"])), 2);
    let j: Value = serde_json::from_slice(&fgsp6(&["--json", "order", "from-form", "1", "1", "1", "0", "0", "0"]).stdout).unwrap();
    assert_eq!(j["form"], "1 1 1 0 0 0");
    assert_eq!(j["discriminant"], 4);
    assert_eq!(j["maximal"], false);
}

#[test]
fn suborders_count_and_json() {
    let o = fgsp6(&["order", "suborders", "--form", "1", "1", "1", "0", "0", "0", "--index", "2", "--count-only"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3\n");
    let j: Value = serde_json::from_slice(&fgsp6(&["--json", "order", "suborders", "--form", "1", "1", "1", "0", "0", "0", "--index", "2"]).stdout).unwrap();
    let list = j.as_array().unwrap();
    assert_eq!(list.len(), 3);
    for s in list {
        assert_eq!(s["index"], 2);
        assert_eq!(s["hnf"].as_array().unwrap().len(), 3);
        assert!(s["form"].is_string());
    }
}

#[test]
fn maximal_and_good_basis() {
    assert_eq!(stdout(&fgsp6(&["order", "maximal", "--form", "1", "1", "2", "0", "0", "0"])), "reduced discriminant: 8, maximal: false\n");
    // Hamilton ring with w_i = v_i + i: w_i w_j expressed in 1, w1, w2, w3.
    let table = "# rows i = 1, 2, 3: w_i w_1, w_i w_2, w_i w_3\n\
                 -2 2 0 0   1 2 1 -1   -5 3 1 1\n\
                 -5 2 1 1   -5 0 4 0   -5 -1 3 2\n\
                 -1 3 -1 1  -7 1 3 2   -10 0 0 6\n";
    let o = fgsp6(&["order", "good-basis", &tmp("gb", table)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "1 2 3\n");
    assert_eq!(code(&fgsp6_stdin(&["order", "good-basis"], "1 2 3")), 2);
}

#[test]
fn w_verbs() {
    let mut f = vec!["0"; 32];
    f[31] = "1";
    let mut ef = f.clone();
    ef[0] = "1";
    let args = |verb: &str, v: &[&str]| {
        let mut a = vec!["w", verb];
        a.extend_from_slice(v);
        fgsp6(&a)
    };
    assert_eq!(stdout(&args("rank", &f)), "1\n");
    assert_eq!(stdout(&args("rank", &ef)), "4\n");
    assert_eq!(stdout(&fgsp6_stdin(&["w", "rank"], &ef.join(" "))), "4\n");
    let pair: Vec<&str> = ef.iter().chain(f.iter()).copied().collect();
    let p = stdout(&args("pair", &pair));
    assert!(p.trim() == "1" || p.trim() == "-1", "{p}");
    assert_eq!(code(&args("rank", &f[..31])), 2);
}

#[test]
fn gsp6_embed_identity() {
    let id: Vec<String> = (0..36).map(|k| if k % 7 == 0 { "1".into() } else { "0".into() }).collect();
    let mut args = vec!["gsp6", "embed"];
    args.extend(id.iter().map(String::as_str));
    let o = fgsp6(&args);
    assert_eq!(code(&o), 0);
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    let m = j["value"].as_array().unwrap();
    assert_eq!(m.len(), 32);
    for (i, row) in m.iter().enumerate() {
        for (k, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x, if i == k { "1" } else { "0" });
        }
    }
    let mut bad = args.clone();
    bad[3] = "2";
    assert_eq!(code(&fgsp6(&bad)), 2);
}

#[test]
fn ctable_outputs() {
    let o = stdout(&fgsp6(&["ctable"]));
    assert_eq!(o.lines().count(), 8);
    assert!(o.starts_with("c1 = 1\nc2 = ζ(2s-1) / ζ(2s)\n"));
    let j: Value = serde_json::from_slice(&fgsp6(&["--json", "ctable", "--place", "ramified"]).stdout).unwrap();
    assert_eq!(j[7]["value"], "ζ(2s-9) ζ(2s-7) ζ(2s-5) / ζ(2s-8) ζ(2s-4) ζ(2s)");
    assert_eq!(code(&fgsp6(&["ctable", "--place", "nowhere"])), 2);
    assert_eq!(code(&fgsp6(&["ctable", "check-fe", "--db", "2", "--samples", "20", "--tol", "1e-9"])), 0);
    assert_eq!(code(&fgsp6(&["ctable", "check-fe", "--db", "6"])), 2);
}

#[test]
fn dirichlet_paths() {
    let table = tmp("coeffs", "# Hurwitz\n1 1 1 1 1 1 1\n");
    let o = fgsp6(&["dirichlet", "--form", "1", "1", "1", "1", "1", "1", "--weight", "4", "--coeffs", &table, "--max-n", "1"]);
    assert_eq!((code(&o), stdout(&o)), (0, "1 1\n".to_string()));
    let o = fgsp6(&["dirichlet", "--form", "1", "1", "1", "1", "1", "1", "--weight", "4", "--coeffs", &table, "--max-n", "2"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("2 2 2 -2 -2 0"), "{}", String::from_utf8_lossy(&o.stderr));
    let bad = tmp("bad", "1 1 1 1 1 x\n");
    assert_eq!(code(&fgsp6(&["dirichlet", "--weight", "4", "--coeffs", &bad, "--max-n", "1"])), 2);
}

#[test]
fn verify_exit_codes_and_seed() {
    let o = fgsp6(&["verify", "diffop", "--trials", "500", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("diffop: pass\n"));
    assert_eq!(code(&fgsp6(&["verify", "ctable", "--tol", "1e-9"])), 0);
    assert_eq!(code(&fgsp6(&["verify", "all", "--trials", "0"])), 0);
    assert_eq!(code(&fgsp6(&["verify", "nonsense"])), 2);
    assert_eq!(code(&fgsp6(&["verify"])), 2);
    // An impossible tolerance makes the numeric checks fail with a counterexample.
    let o = fgsp6(&["verify", "ctable", "--tol", "0"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
    let j: Value = serde_json::from_slice(&fgsp6(&["--json", "verify", "diffop", "--trials", "2"]).stdout).unwrap();
    assert_eq!(j[0]["suite"], "diffop");
    assert!(j[0]["counterexample"].is_null());
    let env = Command::new(env!("CARGO_BIN_EXE_fgsp6")).args(["verify", "diffop", "--trials", "3"]).env("FGSP6_SEED", "7").output().unwrap();
    assert_eq!(env.stdout, fgsp6(&["verify", "diffop", "--trials", "3", "--seed", "7"]).stdout);
}
