//! Acceptance criteria, run end to end through the `fgsp6` binary. Prints
//! one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

struct Run {
    stdout: String,
    code: i32,
    elapsed: Duration,
}

fn fgsp6(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fgsp6")).args(args).env_remove("FGSP6_SEED").output().expect("run fgsp6");
    Run { stdout: String::from_utf8(out.stdout).expect("utf-8"), code: out.status.code().unwrap_or(-1), elapsed: start.elapsed() }
}

/// Runs one suite and checks that it passes, that each `(name, min)` check
/// ran at least `min` trials, and the time limit.
fn suite(name: &str, required: &[(&str, usize)], limit: u64) -> Result<String, String> {
    let r = fgsp6(&["--json", "verify", name]);
    let v: Value = serde_json::from_str(&r.stdout).map_err(|e| format!("bad JSON ({e}), exit {}", r.code))?;
    let rep = &v[0];
    if r.code != 0 || rep["passed"] != Value::Bool(true) {
        return Err(format!("exit {}: {}", r.code, rep["counterexample"]));
    }
    let checks = rep["checks"].as_array().ok_or("no checks")?;
    for (want, min) in required {
        let c = checks.iter().find(|c| c["name"].as_str() == Some(want)).ok_or_else(|| format!("missing check {want:?}"))?;
        let n = c["count"].as_u64().unwrap_or(0) as usize;
        if n < *min {
            return Err(format!("{want:?} ran {n} < {min} trials"));
        }
    }
    timed(r.elapsed, limit, format!("{} checks", checks.len()))
}

fn timed(elapsed: Duration, limit: u64, what: String) -> Result<String, String> {
    if elapsed > Duration::from_secs(limit) {
        Err(format!("{what} took {:.1?}, limit {limit} s", elapsed))
    } else {
        Ok(format!("{what} in {:.1?} (limit {limit} s)", elapsed))
    }
}

fn determinism_and_golden() -> Result<String, String> {
    let start = Instant::now();
    let args = ["verify", "all", "--trials", "3", "--seed", "42"];
    let (a, b) = (fgsp6(&args), fgsp6(&args));
    if a.code != 0 {
        return Err(format!("verify all exited {}", a.code));
    }
    if a.stdout != b.stdout {
        return Err("verify all output differs between two runs".into());
    }
    let g = fgsp6(&["order", "from-form", "1", "1", "1", "1", "1", "1"]);
    let golden = include_str!("golden/from_form_hurwitz.txt");
    if g.code != 0 || g.stdout != golden {
        return Err(format!("order from-form 1 1 1 1 1 1 differs from golden output:\n{}", g.stdout));
    }
    if !g.stdout.contains("reduced discriminant: 2, maximal: true") {
        return Err("missing discriminant line".into());
    }
    timed(start.elapsed(), 30, format!("{} bytes stable, golden matched", a.stdout.len()))
}

type Criterion = (&'static str, Box<dyn Fn() -> Result<String, String>>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "1 jordan",
            Box::new(|| {
                suite(
                    "jordan",
                    &[
                        ("h h# = h# h = N(h) 1", 500),
                        ("(h#)# = N(h) h", 500),
                        ("tr(x×y, z) = (x,y,z) = tr(x, y×z)", 500),
                        ("N(x+y) = N(x) + tr(x#,y) + tr(x,y#) + N(y)", 500),
                    ],
                    10,
                )
            }),
        ),
        (
            "2 freudenthal",
            Box::new(|| {
                suite(
                    "freudenthal",
                    &[
                        ("(v,v,v,v) = Q(v)", 1),
                        ("rank(v g) = rank(v)", 200),
                        ("sharp pair ⇔ rank ≤ 1", 300),
                        ("n(X1) n(X2) = n(X1 + X2)", 100),
                    ],
                    60,
                )
            }),
        ),
        (
            "3 embedding",
            Box::new(|| {
                suite(
                    "embedding",
                    &[
                        ("ι([[1, X], [0, 1]]) = n(X)", 50),
                        ("ι(J6) on v", 50),
                        ("ι(diag(m, n)) = Levi formula", 50),
                        ("ι(g) ι(h) = ι(g h)", 100),
                        ("f_O u M = (0, 0, m⁻¹A(T)c(m), tr(Tu)/λ)", 100),
                    ],
                    60,
                )
            }),
        ),
        (
            "4 clifford",
            Box::new(|| {
                suite(
                    "clifford",
                    &[
                        ("form ↔ good-based ring roundtrip", 500),
                        ("Λ_T(m) closed ⇔ m⁻¹Tc(m) half-integral ⇔ A' ∈ J_T ⇔ Λ' closed", 1),
                        ("Hurwitz: reduced discriminant 2, maximal", 1),
                        ("identity form: 4, not maximal, index-2 superorder", 1),
                    ],
                    120,
                )
            }),
        ),
        ("5 diffop", Box::new(|| suite("diffop", &[("Σ α D1 = N(b), Σ α D2 = -3 tr(b,c), Σ α D3 = 15 d", 500)], 30))),
        (
            "6 hermspace",
            Box::new(|| {
                suite(
                    "hermspace",
                    &[
                        ("|⟨r(i), v⟩|² = ||v||² for rank-one v", 200),
                        ("N(Im Z) = ⟨σ r(Z), r(Z)⟩ / 8i", 200),
                        ("j(gh, Z) = j(h, Z) j(g, hZ) and (gh)Z = g(hZ)", 50),
                        ("ν⁻¹ j(g,i)⁻¹ ⟨r(i), f_O g⟩ = tr(T (g·i))", 100),
                        ("8iJ f g h: rank one, a = |J|², d = 8iJ², N(b) - 3tr(b,c) + 15d", 50),
                    ],
                    120,
                )
            }),
        ),
        (
            "7 ctable",
            Box::new(|| {
                suite(
                    "ctable",
                    &[
                        ("c_1, …, c_8 match the listed products", 1),
                        ("split and ramified c_8", 1),
                        ("functional equation constant = 1, D_B = 2", 20),
                        ("functional equation constant = 1, D_B = 3", 20),
                        ("functional equation constant = 1, D_B = 5", 20),
                    ],
                    10,
                )
            }),
        ),
        ("8 cli determinism and golden output", Box::new(determinism_and_golden)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
