//! `fgsp6` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure or missing data, 2 usage
//! or malformed input.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fgsp6::clifford::{self, CoefficientTable, StructureConstants};
use fgsp6::ctable::{self, Place};
use fgsp6::freudenthal::{Freudenthal, WElement, W_DIM};
use fgsp6::gsp6::{self, GSp6Element};
use fgsp6::matrix::Matrix;
use fgsp6::quat::{Quat, QuaternionRing, TernaryForm};
use fgsp6::verify::{self, Config};
use fgsp6::{Error, Rational, Scalar};
use num_complex::Complex64;
use rand::Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fgsp6", version, about = "Quaternion orders, the Freudenthal triple system over them, and the GSp6 embedding")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks [default: $FGSP6_SEED or 0].
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override every randomized trial count.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Tolerance of floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quaternion rings presented by ternary forms.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Elements of W = Q ⊕ J ⊕ J ⊕ Q.
    #[command(subcommand)]
    W(WCmd),
    /// GSp6 and its action on W.
    #[command(subcommand)]
    Gsp6(Gsp6Cmd),
    /// The constant-term table c_1, ..., c_8.
    Ctable(CtableArgs),
    /// Coefficients of the Dirichlet series over suborders.
    Dirichlet(DirichletArgs),
    /// Run property suites: all, or any of jordan freudenthal embedding clifford hermspace diffop ctable.
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
    },
}

#[derive(Args, Clone)]
struct FormArg {
    /// Ternary form a b c d e f for ax² + by² + cz² + dyz + ezx + fxy.
    #[arg(long, num_args = 6, allow_negative_numbers = true, value_name = "N", default_values = ["1", "1", "1", "1", "1", "1"])]
    form: Vec<String>,
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Multiplication table, reduced discriminant and maximality.
    FromForm {
        #[arg(allow_negative_numbers = true, value_name = "N")]
        coeffs: Vec<String>,
    },
    /// Suborders Λ_T(m) of a given index.
    Suborders {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        index: i64,
        #[arg(long)]
        count_only: bool,
    },
    /// Maximality via the reduced discriminant.
    Maximal {
        #[command(flatten)]
        form: FormArg,
    },
    /// Shift taking 1, w1, w2, w3 to a good basis. Reads 36 rationals (w_i w_j
    /// for i, j = 1..3, each in the basis 1, w1, w2, w3) from FILE or stdin.
    GoodBasis { file: Option<String> },
}

#[derive(Subcommand)]
enum WCmd {
    /// Rank of v (0..=4).
    Rank {
        #[command(flatten)]
        form: FormArg,
        /// 32 rationals; read from stdin when absent.
        #[arg(allow_negative_numbers = true)]
        coords: Vec<String>,
    },
    /// Quartic form Q(v).
    Quartic {
        #[command(flatten)]
        form: FormArg,
        #[arg(allow_negative_numbers = true)]
        coords: Vec<String>,
    },
    /// Symplectic pairing ⟨v, w⟩ of two elements (64 rationals).
    Pair {
        #[command(flatten)]
        form: FormArg,
        #[arg(allow_negative_numbers = true)]
        coords: Vec<String>,
    },
}

#[derive(Subcommand)]
enum Gsp6Cmd {
    /// The 32×32 matrix of ι(g) as JSON; g is 36 rationals row-major.
    Embed {
        #[command(flatten)]
        form: FormArg,
        #[arg(allow_negative_numbers = true)]
        coords: Vec<String>,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct CtableArgs {
    /// Expand at a place: split, ramified or arch.
    #[arg(long)]
    place: Option<String>,
    #[command(subcommand)]
    sub: Option<CtableSub>,
}

#[derive(Subcommand)]
enum CtableSub {
    /// Check that the functional-equation constant is 1 at random s.
    CheckFe {
        /// Discriminant of B (squarefree, odd number of prime factors).
        #[arg(long, default_value_t = 2)]
        db: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Args)]
struct DirichletArgs {
    #[command(flatten)]
    form: FormArg,
    #[arg(long)]
    weight: i64,
    /// Coefficient table: lines "a b c d e f value".
    #[arg(long)]
    coeffs: String,
    #[arg(long)]
    max_n: i64,
}

/// A failure with its exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MissingCoefficient(_) | Error::Internal(_) | Error::NotInGroup(_) => 1,
            _ => 2,
        };
        Exit(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

type Out = Result<(String, u8), Exit>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Out {
    let g = cli.global;
    match cli.cmd {
        Cmd::Order(c) => cmd_order(c, &g),
        Cmd::W(c) => cmd_w(c, &g),
        Cmd::Gsp6(Gsp6Cmd::Embed { form, coords }) => {
            let w = space(&form)?;
            let v = rationals(&coords, 36)?;
            let g6 = GSp6Element::new(Matrix::from_fn(6, 6, |i, j| v[6 * i + j].clone()))?;
            let m = gsp6::iota_matrix(&w, &g6)?;
            let rows: Vec<Vec<String>> = (0..W_DIM).map(|i| (0..W_DIM).map(|j| m.get(i, j).to_string()).collect()).collect();
            Ok((json_line(&json!({ "form": w.ring().form().to_string(), "nu": g6.nu().to_string(), "value": rows })), 0))
        }
        Cmd::Ctable(a) => cmd_ctable(a, &g),
        Cmd::Dirichlet(a) => cmd_dirichlet(a, &g),
        Cmd::Verify { suites } => cmd_verify(&suites, &g),
    }
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialize"))
}

fn parse_form(parts: &[String]) -> Result<TernaryForm, Exit> {
    Ok(parts.join(" ").parse::<TernaryForm>()?)
}

fn space(f: &FormArg) -> Result<Freudenthal, Exit> {
    Ok(Freudenthal::new(QuaternionRing::shared(parse_form(&f.form)?)))
}

fn rationals(args: &[String], n: usize) -> Result<Vec<Rational>, Exit> {
    let text = if args.is_empty() {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("reading stdin: {e}")))?;
        s
    } else {
        args.join(" ")
    };
    let v = text.split_whitespace().map(str::parse).collect::<Result<Vec<Rational>, Error>>()?;
    if v.len() != n {
        return Err(usage(format!("expected {n} rationals, got {}", v.len())));
    }
    Ok(v)
}

fn welement(v: &[Rational]) -> WElement<Rational> {
    WElement::from_coords(v)
}

/// `t + x1 v1 + x2 v2 + x3 v3` with zero terms dropped.
fn fmt_quat(q: &Quat<Rational>) -> String {
    let names = ["", "v1", "v2", "v3"];
    let mut s = String::new();
    for (c, name) in q.0.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        let term = match (name, mag == Rational::from(1)) {
            ("", _) => mag.to_string(),
            (n, true) => n.to_string(),
            (n, false) => format!("{mag} {n}"),
        };
        if s.is_empty() {
            s = if c.is_negative() { format!("-{term}") } else { term };
        } else {
            s.push_str(&format!(" {sign} {term}"));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn hnf_json(m: &Matrix<Rational>) -> Value {
    let rows: Vec<Vec<String>> = (0..3).map(|i| (0..3).map(|j| m.get(i, j).to_string()).collect()).collect();
    json!(rows)
}

fn hnf_text(m: &Matrix<Rational>) -> String {
    (0..3).map(|i| (0..3).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("; ")
}

fn cmd_order(c: OrderCmd, g: &Global) -> Out {
    match c {
        OrderCmd::FromForm { coeffs } => {
            if coeffs.len() != 6 {
                return Err(usage(format!("order from-form needs 6 integers a b c d e f, got {}", coeffs.len())));
            }
            let t = parse_form(&coeffs)?;
            let ring = QuaternionRing::from_form(t);
            let disc = clifford::reduced_discriminant(t);
            let maximal = clifford::is_maximal(t)?;
            let prod = |i: usize, j: usize| Quat(ring.table()[i][j].map(Rational::from));
            if g.json {
                let table: Vec<Vec<Vec<i64>>> = (0..4).map(|i| (0..4).map(|j| ring.table()[i][j].to_vec()).collect()).collect();
                let v = json!({ "form": t.to_string(), "table": table, "discriminant": disc, "maximal": maximal });
                return Ok((json_line(&v), 0));
            }
            let mut out = format!("form: {t}\n");
            for i in 1..4 {
                for j in 1..4 {
                    out.push_str(&format!("v{i} v{j} = {}\n", fmt_quat(&prod(i, j))));
                }
            }
            out.push_str(&format!("reduced discriminant: {disc}, maximal: {maximal}\n"));
            Ok((out, 0))
        }
        OrderCmd::Suborders { form, index, count_only } => {
            if index < 1 {
                return Err(usage("--index must be positive"));
            }
            let t = parse_form(&form.form)?;
            let subs: Vec<_> = clifford::enumerate_suborders(t, index).into_iter().filter(|o| o.index == index).collect();
            let out = match (g.json, count_only) {
                (true, true) => json_line(&json!({ "form": t.to_string(), "index": index, "value": subs.len() })),
                (false, true) => format!("{}\n", subs.len()),
                (true, false) => {
                    let v: Vec<Value> = subs
                        .iter()
                        .map(|o| json!({ "index": o.index, "hnf": hnf_json(&o.hnf), "form": o.form.to_string() }))
                        .collect();
                    json_line(&json!(v))
                }
                (false, false) => subs.iter().map(|o| format!("{} [{}] {}\n", o.index, hnf_text(&o.hnf), o.form)).collect(),
            };
            Ok((out, 0))
        }
        OrderCmd::Maximal { form } => {
            let t = parse_form(&form.form)?;
            let disc = clifford::reduced_discriminant(t);
            let maximal = clifford::is_maximal(t)?;
            let out = if g.json {
                json_line(&json!({ "form": t.to_string(), "discriminant": disc, "value": maximal }))
            } else {
                format!("reduced discriminant: {disc}, maximal: {maximal}\n")
            };
            Ok((out, 0))
        }
        OrderCmd::GoodBasis { file } => {
            let text = match file {
                Some(f) => std::fs::read_to_string(&f).map_err(|e| usage(format!("{f}: {e}")))?,
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("reading stdin: {e}")))?;
                    s
                }
            };
            let text: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(" ");
            let parts: Vec<String> = text.split_whitespace().map(String::from).collect();
            let v = rationals(&parts, 36)?;
            let s = std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| v[12 * i + 4 * j + k].clone())));
            let x = clifford::good_basis_shift(&StructureConstants { s })?;
            let out = if g.json {
                json_line(&json!({ "value": x.iter().map(Rational::to_string).collect::<Vec<_>>() }))
            } else {
                format!("{} {} {}\n", x[0], x[1], x[2])
            };
            Ok((out, 0))
        }
    }
}

fn cmd_w(c: WCmd, g: &Global) -> Out {
    let value = match c {
        WCmd::Rank { form, coords } => {
            let w = space(&form)?;
            w.rank(&welement(&rationals(&coords, W_DIM)?)).to_string()
        }
        WCmd::Quartic { form, coords } => {
            let w = space(&form)?;
            w.quartic(&welement(&rationals(&coords, W_DIM)?)).to_string()
        }
        WCmd::Pair { form, coords } => {
            let w = space(&form)?;
            let v = rationals(&coords, 2 * W_DIM)?;
            w.symplectic(&welement(&v[..W_DIM]), &welement(&v[W_DIM..])).to_string()
        }
    };
    let out = if g.json { json_line(&json!({ "value": value })) } else { format!("{value}\n") };
    Ok((out, 0))
}

fn cmd_ctable(a: CtableArgs, g: &Global) -> Out {
    if let Some(CtableSub::CheckFe { db, samples }) = a.sub {
        return check_fe(db, samples, g);
    }
    let place = a.place.as_deref().map(str::parse::<Place>).transpose()?;
    let entries: Vec<_> = ctable::c_table().into_iter().map(|c| match place {
        Some(p) => ctable::expand_place(&c, p),
        None => c,
    }).collect();
    let out = if g.json {
        let v: Vec<Value> = entries.iter().enumerate().map(|(i, c)| json!({ "index": i + 1, "value": c.to_string() })).collect();
        json_line(&json!(v))
    } else {
        entries.iter().enumerate().map(|(i, c)| format!("c{} = {c}\n", i + 1)).collect()
    };
    Ok((out, 0))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn check_fe(db: u64, samples: usize, g: &Global) -> Out {
    if db < 2 {
        return Err(usage("--db must be at least 2"));
    }
    let primes = prime_factors(db);
    let mut rng = fgsp6::random::trial_rng(seed(g), "ctable/check-fe", 0);
    let mut worst = 0.0f64;
    let mut bad = None;
    for k in 0..samples {
        let s = Complex64::new(rng.gen_range(0.6..4.4), rng.gen_range(-2.0..2.0));
        let v = ctable::functional_equation_constant(&primes, s)?;
        let dev = (v.closed_form - 1.0).norm().max((v.chain - 1.0).norm());
        worst = worst.max(dev);
        if dev > g.tol && bad.is_none() {
            bad = Some(format!("sample {k}: s = {s}: closed form {}, chain {}", v.closed_form, v.chain));
        }
    }
    let out = if g.json {
        json_line(&json!({ "value": worst, "samples": samples, "counterexample": bad }))
    } else {
        match &bad {
            None => format!("functional equation constant = 1 at {samples} points (max deviation {worst:.3e})\n"),
            Some(b) => format!("FAIL {b}\n"),
        }
    };
    Ok((out, if bad.is_some() { 1 } else { 0 }))
}

fn cmd_dirichlet(a: DirichletArgs, g: &Global) -> Out {
    let t = parse_form(&a.form.form)?;
    if a.max_n < 1 {
        return Err(usage("--max-n must be positive"));
    }
    let text = std::fs::read_to_string(&a.coeffs).map_err(|e| usage(format!("{}: {e}", a.coeffs)))?;
    let table: CoefficientTable = text.parse()?;
    let coeffs = clifford::dirichlet_coefficients(t, a.weight, &table, a.max_n)?;
    let out = if g.json {
        let v: Vec<Value> = coeffs.iter().map(|(n, c)| json!({ "index": n, "value": c.to_string() })).collect();
        json_line(&json!({ "form": t.to_string(), "value": v }))
    } else {
        coeffs.iter().map(|(n, c)| format!("{n} {c}\n")).collect()
    };
    Ok((out, 0))
}

fn seed(g: &Global) -> u64 {
    g.seed.or_else(|| std::env::var("FGSP6_SEED").ok().and_then(|s| s.parse().ok())).unwrap_or(0)
}

fn cmd_verify(suites: &[String], g: &Global) -> Out {
    let cfg = Config { seed: seed(g), trials: g.trials, tol: g.tol, ..Config::default() };
    let reports = verify::run(suites, &cfg)?;
    let passed = reports.iter().all(|r| r.passed());
    let out = if g.json {
        let v: Vec<Value> = reports
            .iter()
            .map(|r| {
                let first = r.first_failure().map(|c| format!("{}: {}", c.name, c.counterexample.as_deref().unwrap_or("")));
                json!({ "suite": r.suite, "passed": r.passed(), "counterexample": first, "checks": r.checks })
            })
            .collect();
        json_line(&json!(v))
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    Ok((out, if passed { 0 } else { 1 }))
}
