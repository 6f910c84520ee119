//! Property suites over seeded random corpora.
//!
//! Each check runs its trials with independent per-trial generators (see
//! [`crate::random::trial_rng`]) and reports the lowest-index failure, so a
//! report depends only on the seed, the trial counts and the code.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{self, CoefficientTable};
use crate::ctable::{self, Affine, Factor, LocalPlace, Place, RootC3, Symbol, ZetaFactorProduct};
use crate::diffop;
use crate::error::{Error, Result};
use crate::freudenthal::{apply_j, linear_map, Freudenthal, WElement, W_DIM};
use crate::gsp6::{self, GSp6Element};
use crate::hermspace::{self, PointH};
use crate::jordan::{JElement, JordanAlgebra, QuatMatrix};
use crate::matrix::Matrix;
use crate::par::{self, Execution};
use crate::quat::{Quat, QuaternionRing, TernaryForm};
use crate::random::{self as rnd, trial_rng, GroupPool};
use crate::scalar::{Gaussian, Rational, Scalar};

pub const SUITES: [&str; 7] = ["jordan", "freudenthal", "embedding", "clifford", "hermspace", "diffop", "ctable"];

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    /// Overrides every randomized trial count.
    pub trials: Option<usize>,
    /// Tolerance of the floating-point checks in `ctable`.
    pub tol: f64,
    pub exec: Execution,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, trials: None, tol: 1e-9, exec: Execution::default() }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub count: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.counterexample.is_none())
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.counterexample.is_some())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "{}: ok   {} [{}]", self.suite, c.name, c.count)?,
                Some(x) => writeln!(f, "{}: FAIL {} [{}]: {x}", self.suite, c.name, c.count)?,
            }
        }
        write!(f, "{}: {}", self.suite, if self.passed() { "pass" } else { "FAIL" })
    }
}

pub fn run_suite(name: &str, cfg: &Config) -> Result<SuiteReport> {
    let mut r = Runner { cfg, suite: name, checks: Vec::new() };
    match name {
        "jordan" => jordan_suite(&mut r),
        "freudenthal" => freudenthal_suite(&mut r)?,
        "embedding" => embedding_suite(&mut r)?,
        "clifford" => clifford_suite(&mut r),
        "hermspace" => hermspace_suite(&mut r)?,
        "diffop" => diffop_suite(&mut r),
        "ctable" => ctable_suite(&mut r),
        _ => return Err(Error::Usage(format!("unknown suite {name:?}; expected all or one of {}", SUITES.join(", ")))),
    }
    Ok(SuiteReport { suite: name.to_string(), checks: r.checks })
}

/// A failed check with its description.
#[derive(Debug)]
pub struct Fail(pub String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

type Check = std::result::Result<(), Fail>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

struct Runner<'a> {
    cfg: &'a Config,
    suite: &'a str,
    checks: Vec<CheckReport>,
}

impl Runner<'_> {
    fn random<F>(&mut self, name: &str, default: usize, f: F)
    where
        F: Fn(&mut ChaCha8Rng, usize) -> Check + Sync + Send,
    {
        let n = self.cfg.trials.unwrap_or(default);
        let label = format!("{}/{}", self.suite, name);
        let seed = self.cfg.seed;
        let res = par::try_for_each_index(self.cfg.exec, n, |i| {
            f(&mut trial_rng(seed, &label, i), i).map_err(|Fail(m)| format!("trial {i}: {m}"))
        });
        self.checks.push(CheckReport { name: name.to_string(), count: n, counterexample: res.err() });
    }

    fn cases<T, F>(&mut self, name: &str, items: &[T], f: F)
    where
        T: Sync,
        F: Fn(&T) -> Check + Sync + Send,
    {
        let res = par::try_for_each_index(self.cfg.exec, items.len(), |i| f(&items[i]).map_err(|Fail(m)| m));
        self.checks.push(CheckReport { name: name.to_string(), count: items.len(), counterexample: res.err() });
    }

    fn fixed(&mut self, name: &str, f: impl FnOnce() -> Check) {
        let res = f().err().map(|Fail(m)| m);
        self.checks.push(CheckReport { name: name.to_string(), count: 1, counterexample: res });
    }
}

fn rings(seed: u64, label: &str, n: usize, r: i64) -> Vec<std::sync::Arc<QuaternionRing>> {
    let mut rng = trial_rng(seed, label, 0);
    (0..n).map(|_| QuaternionRing::shared(rnd::form(&mut rng, r))).collect()
}

fn hamilton() -> Freudenthal {
    Freudenthal::new(QuaternionRing::shared(TernaryForm::hamilton()))
}

fn hurwitz() -> Freudenthal {
    Freudenthal::new(QuaternionRing::shared(TernaryForm::hurwitz()))
}

fn jordan_suite(r: &mut Runner) {
    let seed = r.cfg.seed;
    let algebras: Vec<JordanAlgebra> = rings(seed, "jordan/rings", 5, 3).into_iter().map(JordanAlgebra::new).collect();
    let pick = |i: usize| &algebras[i % algebras.len()];
    r.random("h h# = h# h = N(h) 1", 500, |rng, i| {
        let j = pick(i);
        let h = rnd::j_element(rng);
        let (hm, sm) = (j.to_matrix(&h), j.to_matrix(&j.sharp(&h)));
        let want = QuatMatrix::scalar(j.norm(&h));
        ensure(j.mat_mul(&hm, &sm) == want && j.mat_mul(&sm, &hm) == want, || format!("h = {h} over {}", j.ring().form()))
    });
    r.random("(h#)# = N(h) h", 500, |rng, i| {
        let j = pick(i);
        let h = rnd::j_element(rng);
        ensure(j.sharp(&j.sharp(&h)) == h.scale(&j.norm(&h)), || format!("h = {h} over {}", j.ring().form()))
    });
    r.random("tr(x×y, z) = (x,y,z) = tr(x, y×z)", 500, |rng, i| {
        let j = pick(i);
        let (x, y, z) = (rnd::j_element(rng), rnd::j_element(rng), rnd::j_element(rng));
        let t = j.trilinear(&x, &y, &z);
        let (l, m) = (j.trace_pair(&j.cross(&x, &y), &z), j.trace_pair(&x, &j.cross(&y, &z)));
        ensure(l == t && m == t, || format!("x = {x}, y = {y}, z = {z}: {l}, {t}, {m}"))
    });
    r.random("N(x+y) = N(x) + tr(x#,y) + tr(x,y#) + N(y)", 500, |rng, i| {
        let j = pick(i);
        let (x, y) = (rnd::j_element(rng), rnd::j_element(rng));
        let rhs = j.norm(&x) + j.trace_pair(&j.sharp(&x), &y) + j.trace_pair(&x, &j.sharp(&y)) + j.norm(&y);
        ensure(j.norm(&x.add(&y)) == rhs, || format!("x = {x}, y = {y}"))
    });
    r.random("(x,x,x) = 6 N(x)", 200, |rng, i| {
        let j = pick(i);
        let x = rnd::j_element(rng);
        ensure(j.trilinear(&x, &x, &x) == j.norm(&x) * Rational::from(6), || format!("x = {x}"))
    });
    let quat_rings = rings(seed, "jordan/quat-rings", 20, 4);
    let qpick = |i: usize| &*quat_rings[i % quat_rings.len()];
    r.random("(xy)z = x(yz)", 500, |rng, i| {
        let b = qpick(i);
        let (x, y, z) = (rnd::quat(rng), rnd::quat(rng), rnd::quat(rng));
        ensure(b.mul(&b.mul(&x, &y), &z) == b.mul(&x, &b.mul(&y, &z)), || format!("{x}, {y}, {z} over {}", b.form()))
    });
    r.random("(xy)* = y* x*", 500, |rng, i| {
        let b = qpick(i);
        let (x, y) = (rnd::quat(rng), rnd::quat(rng));
        ensure(b.conj(&b.mul(&x, &y)) == b.mul(&b.conj(&y), &b.conj(&x)), || format!("{x}, {y} over {}", b.form()))
    });
    r.random("x² = tr(x) x - n(x)", 500, |rng, i| {
        let b = qpick(i);
        let x = rnd::quat(rng);
        let rhs = x.scale(&b.trace(&x)).sub(&Quat::scalar(b.norm(&x)));
        ensure(b.mul(&x, &x) == rhs, || format!("{x} over {}", b.form()))
    });
    r.random("trace of left multiplication = 2 tr(x)", 200, |rng, i| {
        let b = qpick(i);
        let x = rnd::quat(rng);
        let m = b.left_mul_matrix(&x);
        let t = (0..4).fold(Rational::zero(), |s, k| s + m.get(k, k));
        ensure(t == b.trace(&x) * Rational::from(2), || format!("{x} over {}", b.form()))
    });
    r.random("pair(x, x) = 2 n(x)", 50, |rng, i| {
        let b = qpick(i);
        let x = rnd::quat(rng);
        ensure(b.pair(&x, &x) == b.norm(&x) * Rational::from(2), || format!("{x} over {}", b.form()))
    });
    r.random("Im(Im(x)) = Im(x)", 50, |rng, i| {
        let b = qpick(i);
        let x = rnd::quat(rng);
        let im = b.imaginary_part(&x);
        ensure(b.imaginary_part(&im) == im && b.trace(&im).is_zero(), || format!("{x} over {}", b.form()))
    });
}

fn freudenthal_suite(r: &mut Runner) -> Result<()> {
    let spaces = [hamilton(), hurwitz()];
    let pools = [GroupPool::new(&spaces[0], r.cfg.seed)?, GroupPool::new(&spaces[1], r.cfg.seed)?];
    let pick = |i: usize| (&spaces[i % 2], &pools[i % 2]);
    r.random("(v,v,v,v) = Q(v)", 200, |rng, i| {
        let (w, _) = pick(i);
        let v = rnd::w_element(rng);
        ensure(w.fourlinear(&v, &v, &v, &v) == w.quartic(&v), || format!("v = {v}"))
    });
    r.random("rank(v g) = rank(v)", 200, |rng, i| {
        let (w, pool) = pick(i);
        let (_, v) = rnd::corpus_element(w, pool, rng);
        let g = pool.word(rng, 3);
        let (a, b) = (w.rank(&v), w.rank(&g.apply(&v)));
        ensure(a == b, || format!("rank {a} became {b} for v = {v}"))
    });
    r.random("Q(v g) = ν² Q(v)", 100, |rng, i| {
        let (w, pool) = pick(i);
        let v = rnd::w_element(rng);
        let g = pool.word(rng, 3);
        ensure(w.quartic(&g.apply(&v)) == w.quartic(&v) * g.nu() * g.nu(), || format!("v = {v}"))
    });
    r.random("sharp pair ⇔ rank ≤ 1", 300, |rng, i| {
        let (w, pool) = pick(i);
        let (kind, v) = rnd::corpus_element(w, pool, rng);
        let (sp, rank) = (w.rank1_is_sharp_pair(&v), w.rank(&v));
        ensure(sp == (rank <= 1), || format!("{kind:?} v = {v}: sharp pair {sp}, rank {rank}"))
    });
    r.random("(N(X), X#, X, 1) has rank 1", 100, |rng, i| {
        let (w, _) = pick(i);
        let v = rnd::rank_one_from(w, &rnd::j_element(rng));
        ensure(w.rank(&v) == 1, || format!("v = {v}"))
    });
    r.random("n(X1) n(X2) = n(X1 + X2)", 100, |rng, i| {
        let (w, _) = pick(i);
        let (x, y) = (rnd::j_element(rng), rnd::j_element(rng));
        let ok_n = w.n_matrix(&x).mul(&w.n_matrix(&y)) == w.n_matrix(&x.add(&y));
        let ok_nbar = w.nbar_matrix(&x).mul(&w.nbar_matrix(&y)) == w.nbar_matrix(&x.add(&y));
        ensure(ok_n && ok_nbar, || format!("X1 = {x}, X2 = {y}: n {ok_n}, n̄ {ok_nbar}"))
    });
    r.random("||v||² = a² + tr(b,b) + tr(c,c) + d² ≥ 0", 200, |rng, _| {
        let w = &spaces[0];
        let v = rnd::w_element(rng);
        let j = w.jordan();
        let want = &v.a * &v.a + j.trace_pair(&v.b, &v.b) + j.trace_pair(&v.c, &v.c) + &v.d * &v.d;
        let got = w.norm_sq(&v);
        ensure(got == want && (got.is_positive() || v.is_zero()), || format!("v = {v}: {got} vs {want}"))
    });
    r.random("normalize_d1 reaches d = 1", 10, |rng, i| {
        let (w, pool) = pick(i);
        let v = match i % 3 {
            0 => pool.word(rng, 2).apply(&rnd::rank_one_from(w, &rnd::j_element(rng))),
            1 => WElement::new(Rational::zero(), JElement::zero(), rnd::rank_one_j(w, rng), Rational::zero()),
            _ => WElement::new(rnd::nonzero_rational(rng, 3, 2), JElement::zero(), JElement::zero(), Rational::zero()),
        };
        let (g, u) = w.normalize_d1(&v)?;
        ensure(u.d == Rational::one() && g.apply(&v) == u, || format!("v = {v} gave {u}"))
    });
    r.random("certify(g h) with ν multiplicative", 3, |rng, i| {
        let (w, pool) = pick(i);
        let g = pool.word(rng, 2);
        let c = w.certify(g.matrix().clone())?;
        ensure(c.nu() == g.nu(), || format!("ν = {} but word has {}", c.nu(), g.nu()))
    });
    Ok(())
}

fn embedding_suite(r: &mut Runner) -> Result<()> {
    let spaces = [hurwitz(), hamilton()];
    let pick = |i: usize| &spaces[i % 2];
    r.random("project(embed(v)) = v", 200, |rng, i| {
        let w = pick(i);
        let v = rnd::w_element(rng);
        ensure(gsp6::project_w(w, &gsp6::embed_w(w, &v))? == v, || format!("v = {v}"))
    });
    r.random("ι([[1, X], [0, 1]]) = n(X)", 50, |rng, i| {
        let w = pick(i);
        let x = rnd::symmetric(rng);
        let got = gsp6::iota_matrix(w, &GSp6Element::unipotent(&x)?)?;
        ensure(got == w.n_matrix(&JElement::from_symmetric(&x)), || format!("X = {x:?}"))
    });
    r.fixed("ι(J6) = (a,b,c,d) ↦ (-d,c,-b,a)", || {
        for w in &spaces {
            let got = gsp6::iota_matrix(w, &GSp6Element::j6())?;
            ensure(got == linear_map(apply_j::<Rational>), || format!("over {}", w.ring().form()))?;
        }
        Ok(())
    });
    r.random("ι(J6) on v", 50, |rng, i| {
        let w = pick(i);
        let v = rnd::w_element(rng);
        let m = gsp6::iota_matrix(w, &GSp6Element::j6())?;
        ensure(WElement::from_coords(&m.vec_mul(&v.coords())) == apply_j(&v), || format!("v = {v}"))
    });
    r.random("ι(diag(m, n)) = Levi formula", 50, |rng, i| {
        let w = pick(i);
        let g = GSp6Element::levi(&rnd::nonzero_rational(rng, 3, 2), &rnd::invertible(rng))?;
        let v = rnd::w_element(rng);
        let got = WElement::from_coords(&gsp6::iota_matrix(w, &g)?.vec_mul(&v.coords()));
        ensure(got == gsp6::levi_formula(w, &g, &v)?, || format!("g = {:?}, v = {v}", g.matrix()))
    });
    r.random("ν(levi(λ, m)) = λ det(m)", 100, |rng, _| {
        let (l, m) = (rnd::nonzero_rational(rng, 3, 2), rnd::invertible(rng));
        let g = GSp6Element::levi(&l, &m)?;
        ensure(g.nu() == &(&l * &m.determinant()), || format!("λ = {l}, m = {m:?}"))
    });
    r.random("ι(g) ι(h) = ι(g h)", 100, |rng, i| {
        let w = pick(i);
        let (g, h) = (rnd::gsp6_word(rng, 2), rnd::gsp6_word(rng, 2));
        let lhs = gsp6::iota_matrix(w, &g)?.mul(&gsp6::iota_matrix(w, &h)?);
        ensure(lhs == gsp6::iota_matrix(w, &g.mul(&h))?, || format!("g = {:?}, h = {:?}", g.matrix(), h.matrix()))
    });
    r.random("ι(g) preserves W", 200, |rng, i| {
        gsp6::iota_matrix(pick(i), &rnd::gsp6_word(rng, 3))?;
        Ok(())
    });
    r.random("ι(g) is certified in G with ν(ι(g)) = ν(g)", 4, |rng, i| {
        gsp6::iota(pick(i), &rnd::gsp6_word(rng, 2))?;
        Ok(())
    });
    r.random("f_O u M = (0, 0, m⁻¹A(T)c(m), tr(Tu)/λ)", 100, |rng, i| {
        let w = pick(i);
        gsp6::f_o_action(w, &rnd::symmetric(rng), &rnd::nonzero_rational(rng, 3, 2), &rnd::invertible(rng))?;
        Ok(())
    });
    r.random("ι(n(X)) = exp(L(X))", 30, |rng, i| {
        let w = pick(i);
        let x = rnd::symmetric(rng);
        let l = linear_map(|v: &WElement<Rational>| w.apply_log_n(&JElement::from_symmetric(&x), v));
        let l2 = l.mul(&l);
        let l3 = l2.mul(&l);
        let exp = Matrix::identity(W_DIM).add(&l).add(&l2.scale(&Rational::new(1, 2))).add(&l3.scale(&Rational::new(1, 6)));
        let got = gsp6::iota_matrix(w, &GSp6Element::unipotent(&x)?)?;
        ensure(l3.mul(&l).is_zero() && got == exp, || format!("X = {x:?}"))
    });
    r.random("stabilizes_line(u) ⇔ tr(Tu) = 0", 50, |rng, i| {
        let w = pick(i);
        let t = w.ring().form().half_matrix();
        let mut u = rnd::symmetric(rng);
        let tr = |u: &Matrix<Rational>| (0..3).fold(Rational::zero(), |s, k| s + t.mul(u).get(k, k));
        if i % 2 == 0 {
            let e11 = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 0, 0, 0, 0, 0]);
            u = u.sub(&e11.scale(&(tr(&u) / t.get(0, 0))));
        }
        let got = gsp6::stabilizes_line(w, &GSp6Element::unipotent(&u)?)?;
        ensure(got == tr(&u).is_zero(), || format!("u = {u:?}: stabilizes {got}, tr(Tu) = {}", tr(&u)))
    });
    r.random("diag(λ1 1, λ2 1) stabilizes the line of f_O", 20, |rng, i| {
        let w = pick(i);
        let (a, b) = (rnd::nonzero_rational(rng, 3, 2), rnd::nonzero_rational(rng, 3, 2));
        let one = Matrix::<Rational>::identity(3);
        let g = GSp6Element::from_blocks(&one.scale(&a), &Matrix::zeros(3, 3), &Matrix::zeros(3, 3), &one.scale(&b))?;
        ensure(gsp6::stabilizes_line(w, &g)?, || format!("λ1 = {a}, λ2 = {b}"))
    });
    r.fixed("ι(J6) moves the line of f_O", || {
        ensure(!gsp6::stabilizes_line(&spaces[0], &GSp6Element::j6())?, || "J6 stabilizes f_O".into())
    });
    r.fixed("Ξ examples", || {
        let one = Matrix::<Rational>::identity(3);
        let t = TernaryForm::hurwitz();
        let d112 = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        let got = [
            gsp6::xi_indicator(t, &Rational::one(), &one),
            gsp6::xi_indicator(TernaryForm::hamilton(), &Rational::one(), &d112),
            gsp6::xi_indicator(t, &Rational::new(1, 2), &one),
        ];
        ensure(got == [1, 0, 0], || format!("got {got:?}, want [1, 0, 0]"))
    });
    Ok(())
}

fn lattice(b: [Quat<Rational>; 3]) -> [Quat<Rational>; 4] {
    let [x, y, z] = b;
    [Quat::one(), x, y, z]
}

/// The four statements of the suborder criterion for `(T, m)`, and, when
/// they hold, that `1, v_i'` is a good basis of `Λ_T(m)`.
fn ait_case(t: TernaryForm, m: &Matrix<Rational>) -> Check {
    let ring = QuaternionRing::shared(t);
    let j = JordanAlgebra::new(ring.clone());
    let w = clifford::sub_basis(m);
    let closed = clifford::lattice_closed(&ring, &lattice(w.clone()));
    let tp = clifford::suborder_form(t, m)?;
    let half = clifford::is_half_integral(&tp);
    let ap = clifford::transformed_a_matrix(&j, m)?;
    let in_jt = clifford::in_j_t(&ap);
    let vp = ap.a.clone();
    let closed_prime = clifford::lattice_closed(&ring, &lattice(vp.clone()));
    let all = [closed, half, in_jt, closed_prime];
    let desc = || format!("T = {t}, m = {m:?}: closed {closed}, half-integral {half}, in J_T {in_jt}, Λ' closed {closed_prime}");
    ensure(all.iter().all(|&x| x == closed), desc)?;
    if closed {
        let sc = clifford::StructureConstants::from_basis(&ring, &vp)?;
        let good = clifford::good_basis_shift(&sc)?.iter().all(Rational::is_zero);
        let same = clifford::same_lattice(&lattice(w), &lattice(vp.clone()));
        let form = clifford::form_of_basis(&ring, &vp)?;
        let tf = TernaryForm::from_half_matrix(&tp).expect("half-integral").to_array().map(Rational::from);
        ensure(good && same && form == tf, || format!("{}: good basis {good}, Λ' = Λ_T(m) {same}", desc()))?;
    }
    Ok(())
}

fn clifford_suite(r: &mut Runner) {
    r.random("form ↔ good-based ring roundtrip", 500, |rng, _| {
        let t = rnd::form(rng, 5);
        let ring = QuaternionRing::from_form(t);
        let back = clifford::extract_form(&ring);
        let j = JordanAlgebra::new(std::sync::Arc::new(ring.clone()));
        let rank_one = j.sharp(&clifford::a_matrix(&ring)).is_zero();
        ensure(back == t && &clifford::forced_table(t) == ring.table() && rank_one, || format!("T = {t} came back as {back}"))
    });
    let forms = [TernaryForm::hamilton(), TernaryForm::hurwitz(), TernaryForm::new(2, 3, 5, 1, 1, 1)];
    let cases: Vec<(TernaryForm, Matrix<Rational>)> =
        forms.iter().flat_map(|&t| (1..=8).flat_map(clifford::hnf_matrices).map(move |m| (t, m))).collect();
    r.cases("Λ_T(m) closed ⇔ m⁻¹Tc(m) half-integral ⇔ A' ∈ J_T ⇔ Λ' closed", &cases, |(t, m)| ait_case(*t, m));
    r.random("rank-one A with equal imaginary parts are equal", 100, |rng, _| {
        let t = rnd::form(rng, 4);
        let ring = QuaternionRing::shared(t);
        let j = JordanAlgebra::new(ring.clone());
        let m = rnd::invertible(rng);
        let a1 = clifford::transformed_a_matrix(&j, &m)?;
        let a2 = clifford::good_a_matrix(&ring, &clifford::sub_basis(&m))?;
        let im = |a: &JElement<Rational>| a.a.iter().map(|q| ring.imaginary_part(q)).collect::<Vec<_>>();
        ensure(j.sharp(&a1).is_zero() && j.sharp(&a2).is_zero() && im(&a1) == im(&a2), || format!("T = {t}, m = {m:?}: not a rank-one pair"))?;
        ensure(a1 == a2, || format!("T = {t}, m = {m:?}: {a1} ≠ {a2}"))
    });
    r.fixed("Hurwitz: reduced discriminant 2, maximal", || {
        let t = TernaryForm::hurwitz();
        let (d, max) = (clifford::reduced_discriminant(t), clifford::is_maximal(t)?);
        let witness = clifford::superorder_witness(&QuaternionRing::from_form(t), 2);
        ensure(d == 2 && max && witness.is_none(), || format!("discriminant {d}, maximal {max}, witness {witness:?}"))
    });
    r.fixed("identity form: 4, not maximal, index-2 superorder", || {
        let t = TernaryForm::hamilton();
        let ring = QuaternionRing::from_form(t);
        let (d, max) = (clifford::reduced_discriminant(t), clifford::is_maximal(t)?);
        ensure(d == 4 && !max, || format!("discriminant {d}, maximal {max}"))?;
        let y = clifford::superorder_witness(&ring, 2).ok_or_else(|| Fail("no superorder witness".into()))?;
        // Λ + Zy has index 2 over Λ: z is in it iff z or z - y is in Λ.
        let integral = |q: &Quat<Rational>| q.0.iter().all(Rational::is_integer);
        let inside = |q: &Quat<Rational>| integral(q) || integral(&q.sub(&y));
        let gens: Vec<Quat<Rational>> = (0..4).map(Quat::basis).chain([y.clone()]).collect();
        let closed = gens.iter().all(|a| gens.iter().all(|b| inside(&ring.mul(a, b))));
        ensure(!integral(&y) && integral(&y.scale(&Rational::from(2))) && closed, || format!("witness {y} does not give an order"))
    });
    r.fixed("(1,1,2,0,0,0): 8, not maximal", || {
        let t = TernaryForm::new(1, 1, 2, 0, 0, 0);
        let (d, max) = (clifford::reduced_discriminant(t), clifford::is_maximal(t)?);
        ensure(d == 8 && !max, || format!("discriminant {d}, maximal {max}"))
    });
    let subs: Vec<(TernaryForm, clifford::Suborder)> =
        forms.iter().flat_map(|&t| clifford::enumerate_suborders_with(t, 8, Execution::Sequential).into_iter().map(move |o| (t, o))).collect();
    r.cases("4det(T') = det(m) 4det(T)", &subs, |(t, o)| {
        let want = o.index * t.four_det();
        ensure(o.form.four_det() == want, || format!("T = {t}, m = {:?}: {} ≠ {want}", o.hnf, o.form.four_det()))
    });
    r.random("good-basis form of Z + λO is λ T_O", 100, |rng, _| {
        let t = rnd::definite_form(rng, 3);
        let ring = QuaternionRing::shared(t);
        let j = JordanAlgebra::new(ring.clone());
        let subs = clifford::enumerate_suborders_with(t, 4, Execution::Sequential);
        let o = &subs[rng.gen_range(0..subs.len())];
        let lambda = rnd::int(rng, 1, 5);
        let vp = clifford::transformed_a_matrix(&j, &o.hnf)?.a;
        let scaled = vp.map(|q| q.scale(&Rational::from(lambda)));
        let got = clifford::form_of_basis(&ring, &scaled)?;
        let want = o.form.scale(lambda).to_array().map(Rational::from);
        ensure(got == want, || format!("T = {t}, m = {:?}, λ = {lambda}: {got:?}", o.hnf))
    });
    r.random("good_basis_shift recovers integer shifts", 100, |rng, _| {
        let ring = QuaternionRing::from_form(rnd::form(rng, 5));
        let x: [Rational; 3] = std::array::from_fn(|_| Rational::from(rnd::int(rng, -5, 5)));
        let w: [Quat<Rational>; 3] = std::array::from_fn(|i| Quat::basis(i + 1).add(&Quat::scalar(x[i].clone())));
        let got = clifford::good_basis_shift(&clifford::StructureConstants::from_basis(&ring, &w)?)?;
        ensure(got == x, || format!("T = {}: shift {x:?} recovered as {got:?}", ring.form()))
    });
    r.random("T ~ det(k) k⁻¹ T c(k) for k ∈ SL3(Z)", 30, |rng, _| {
        let t = rnd::definite_form(rng, 2);
        let k = loop {
            let k = Matrix::from_fn(3, 3, |_, _| Rational::from(rnd::int(rng, -2, 2)));
            if k.determinant() == Rational::one() {
                break k;
            }
        };
        let moved = |t: &Matrix<Rational>, k: &Matrix<Rational>| -> Result<Matrix<Rational>> {
            Ok(k.inverse().expect("unimodular").mul(t).mul(&clifford::cofactor(k)?).scale(&k.determinant()))
        };
        let t2 = TernaryForm::from_half_matrix(&moved(&t.half_matrix(), &k)?).ok_or_else(|| Fail(format!("k = {k:?} broke integrality")))?;
        let wit = clifford::forms_equivalent(t, t2)?.ok_or_else(|| Fail(format!("no witness for {t} ~ {t2}")))?;
        let ok = moved(&t.half_matrix(), &wit)? == t2.half_matrix();
        let same = clifford::canonical_form(t)? == clifford::canonical_form(t2)?;
        ensure(ok && same, || format!("{t} ~ {t2}: witness valid {ok}, canonical forms agree {same}"))
    });
    r.fixed("Dirichlet coefficient at n = 1 is a(T)", || {
        let t = TernaryForm::hurwitz();
        let mut table = CoefficientTable::new();
        table.insert(t, Rational::from(7))?;
        let got = clifford::dirichlet_coefficients(t, 2, &table, 1)?;
        ensure(got == vec![(1, Rational::from(7))], || format!("got {got:?}"))
    });
}

/// `m` orthogonal over Q: the Cayley transform of a skew matrix, times a
/// signed permutation.
fn rational_orthogonal<R: Rng>(rng: &mut R) -> Matrix<Rational> {
    let (a, b, c) = (rnd::rational(rng, 3, 3), rnd::rational(rng, 3, 3), rnd::rational(rng, 3, 3));
    let z = Rational::zero();
    let s = Matrix::from_rows(vec![vec![z.clone(), a.clone(), b.clone()], vec![-&a, z.clone(), c.clone()], vec![-&b, -&c, z]]);
    let one = Matrix::identity(3);
    let q = one.sub(&s).mul(&one.add(&s).inverse().expect("1 + S is invertible for skew S"));
    let perm = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]][rng.gen_range(0..6)];
    let p = Matrix::from_fn(3, 3, |i, j| if perm[i] == j { Rational::from(if rng.gen_bool(0.5) { 1 } else { -1 }) } else { Rational::zero() });
    p.mul(&q)
}

fn positive_siegel<R: Rng>(rng: &mut R) -> GSp6Element {
    loop {
        let g = rnd::siegel_parabolic(rng);
        if g.nu().is_positive() {
            return g;
        }
    }
}

fn hermspace_suite(r: &mut Runner) -> Result<()> {
    let w = hamilton();
    let pool = GroupPool::new(&w, r.cfg.seed)?;
    let w = &w;
    let pool = &pool;
    r.random("r(Z) has rank 1", 100, |rng, _| {
        let z = rnd::complex_j(rng);
        ensure(w.rank(&hermspace::r_of(w, &z)) == 1, || format!("Z = {z}"))
    });
    r.random("|⟨r(i), v⟩|² = ||v||² for rank-one v", 200, |rng, i| {
        let x = rnd::j_element(rng);
        let mut v = rnd::rank_one_from(w, &x);
        if i % 2 == 1 {
            v = pool.word(rng, 2).apply(&v);
        }
        hermspace::check_rk1_norm(w, &v)?;
        Ok(())
    });
    r.random("N(Im Z) = ⟨σ r(Z), r(Z)⟩ / 8i", 200, |rng, _| {
        hermspace::im_norm_identity(w, &rnd::complex_j(rng))?;
        Ok(())
    });
    r.random("j(gh, Z) = j(h, Z) j(g, hZ) and (gh)Z = g(hZ)", 50, |rng, _| {
        let gens = &pool.generators;
        let positive: Vec<_> = gens.iter().filter(|(_, g)| g.nu().is_positive()).collect();
        let (gn, g) = positive[rng.gen_range(0..positive.len())];
        let (hn, h) = positive[rng.gen_range(0..positive.len())];
        let (_, z) = hermspace::act_on_h(w, &pool.positive_word(rng, 2), &PointH::i())?;
        let (jh, hz) = hermspace::act_on_h(w, h, &z)?;
        let (jg, ghz) = hermspace::act_on_h(w, g, &hz)?;
        let (jgh, ghz2) = hermspace::act_on_h(w, &g.then(h), &z)?;
        ensure(jgh == jh.mul(&jg) && ghz == ghz2, || format!("g = {gn}, h = {hn}, Z = {}", z.z()))
    });
    r.random("ν⁻¹ j(g,i)⁻¹ ⟨r(i), f_O g⟩ = tr(T (g·i))", 100, |rng, _| {
        hermspace::f_o_eqn_check(w, &positive_siegel(rng))?;
        Ok(())
    });
    r.random("j(ι(g), i) = ν⁻² det(Ci + D)", 50, |rng, _| {
        let g = positive_siegel(rng);
        let j = hermspace::j_factor(w, &gsp6::iota_trusted(w, &g)?, &PointH::i())?;
        let (js, _) = g.siegel_act(&hermspace::to_siegel(&hermspace::i_one()).expect("scalar"))?;
        ensure(j == js, || format!("g = {:?}: {j} vs {js}", g.matrix()))
    });
    r.random("⟨r(i), v ι(k)⟩ = j(k, i) ⟨r(i), v⟩ for k fixing i", 50, |rng, _| {
        let m = rational_orthogonal(rng);
        let k = GSp6Element::levi(&m.determinant(), &m)?;
        let ik = gsp6::iota_trusted(w, &k)?;
        let (j, z) = hermspace::act_on_h(w, &ik, &PointH::i())?;
        ensure(z == PointH::i(), || format!("m = {m:?} moves i to {}", z.z()))?;
        let v = hermspace::lift_w(&rnd::w_element(rng));
        let ri = hermspace::r_of(w, &hermspace::i_one());
        let (lhs, rhs) = (w.symplectic(&ri, &ik.apply(&v)), j.mul(&w.symplectic(&ri, &v)));
        ensure(lhs == rhs, || format!("m = {m:?}, v = {v}: {lhs} vs {rhs}"))
    });
    r.random("8iJ f g h: rank one, a = |J|², d = 8iJ², N(b) - 3tr(b,c) + 15d", 50, |rng, _| {
        hermspace::dphi_core_check(w, &pool.positive_word(rng, 3))?;
        Ok(())
    });
    r.random("n(X) translates Z by X", 20, |rng, _| {
        let x = rnd::j_element(rng);
        let (j, z) = hermspace::act_on_h(w, &w.op_n(&x)?, &PointH::i())?;
        let want = hermspace::i_one().add(&hermspace::lift_j(&x));
        ensure(j == Gaussian::one() && z.z() == &want, || format!("X = {x}: j = {j}, Z = {}", z.z()))
    });
    Ok(())
}

fn diffop_suite(r: &mut Runner) {
    let w = diffop::hamilton_space();
    let d0 = diffop::build_d0();
    let (w, d0) = (&w, &d0);
    r.fixed("D0 has 29 terms", || ensure(d0.len() == 29, || format!("{} terms", d0.len())));
    r.random("Σ α D1 = N(b), Σ α D2 = -3 tr(b,c), Σ α D3 = 15 d", 500, |rng, _| {
        diffop::check_point(w, d0, &rnd::w_element(rng))
            .map_err(|c| Fail(format!("{}: got {}, want {} at w = {}", c.which, c.got, c.want, c.w)))
    });
    r.fixed("Σ α tr(x,b) tr(y,b) tr(z,b) = N(b) as polynomials", || {
        diffop::d1_matches_norm_polynomial(w, d0).map_err(|c| Fail(format!("{}: got {}, want {} at w = {}", c.which, c.got, c.want, c.w)))
    });
    r.random("D1, D2, D3 are symmetric in x, y, z", 20, |rng, _| {
        let p = rnd::w_element(rng);
        let rotated: diffop::D0Expression = d0
            .iter()
            .map(|t| diffop::CubicTensorTerm { alpha: t.alpha.clone(), x: t.z.clone(), y: t.x.clone(), z: t.y.clone() })
            .collect();
        let swapped: diffop::D0Expression = d0
            .iter()
            .map(|t| diffop::CubicTensorTerm { alpha: t.alpha.clone(), x: t.y.clone(), y: t.x.clone(), z: t.z.clone() })
            .collect();
        for e in [&rotated, &swapped] {
            let same = diffop::eval_d1(w, e, &p) == diffop::eval_d1(w, d0, &p)
                && diffop::eval_d2(w, e, &p) == diffop::eval_d2(w, d0, &p)
                && diffop::eval_d3(w, e, &p) == diffop::eval_d3(w, d0, &p);
            ensure(same, || format!("w = {p}"))?;
        }
        Ok(())
    });
}

fn zeta(k: i64, c: i64) -> Factor {
    Factor::new(Symbol::Zeta, Affine::int(k, c))
}

fn zeta_b(k: i64, c: i64) -> Factor {
    Factor::new(Symbol::ZetaB, Affine::int(k, c))
}

/// `c_1, …, c_8` as listed: each entry is its parent times one ratio.
fn listed_c_table() -> Vec<ZetaFactorProduct> {
    let steps: [(usize, Option<(Factor, Factor)>); 8] = [
        (0, None),
        (1, Some((zeta(2, -1), zeta(2, 0)))),
        (2, Some((zeta_b(2, -3), zeta_b(2, -1)))),
        (3, Some((zeta(2, -5), zeta(2, -4)))),
        (3, Some((zeta_b(2, -5), zeta_b(2, -3)))),
        (5, Some((zeta(2, -5), zeta(2, -4)))),
        (6, Some((zeta_b(2, -7), zeta_b(2, -5)))),
        (7, Some((zeta(2, -9), zeta(2, -8)))),
    ];
    let mut out: Vec<ZetaFactorProduct> = Vec::new();
    for (parent, step) in steps {
        let base = if parent == 0 { ZetaFactorProduct::one() } else { out[parent - 1].clone() };
        out.push(match step {
            None => base,
            Some((n, d)) => base.mul(&ZetaFactorProduct::ratio(n, d)),
        });
    }
    out
}

fn random_s<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(0.6..4.4), rng.gen_range(-2.0..2.0))
}

fn close(z: Complex64, want: Complex64, tol: f64) -> bool {
    (z - want).norm() <= tol * want.norm().max(1.0)
}

fn ctable_suite(r: &mut Runner) {
    let tol = r.cfg.tol;
    r.fixed("c_1, …, c_8 match the listed products", || {
        let (got, want) = (ctable::c_table(), listed_c_table());
        for (i, (g, w)) in got.iter().zip(&want).enumerate() {
            ensure(g == w, || format!("c_{}: computed {g}, listed {w}", i + 1))?;
        }
        ensure(got.len() == 8, || format!("{} entries", got.len()))
    });
    r.fixed("split and ramified c_8", || {
        let c8 = &ctable::c_table()[7];
        let num = vec![zeta(2, -5), zeta(2, -7), zeta(2, -9)];
        let split = ZetaFactorProduct::new(num.clone(), vec![zeta(2, 0), zeta(2, -2), zeta(2, -4)]);
        let ram = ZetaFactorProduct::new(num, vec![zeta(2, 0), zeta(2, -4), zeta(2, -8)]);
        let (gs, gr) = (ctable::expand_place(c8, Place::Split), ctable::expand_place(c8, Place::Ramified));
        ensure(gs == split, || format!("split: {gs} vs {split}"))?;
        ensure(gr == ram, || format!("ramified: {gr} vs {ram}"))
    });
    r.fixed("two reduced words of w_8 give the same c_8", || {
        let words = ctable::reduced_words(&ctable::w8(), 2);
        ensure(words.len() == 2, || "fewer than two reduced words".into())?;
        let c8 = &ctable::c_table()[7];
        for word in &words {
            let s: Vec<RootC3> = ctable::word_inversions(word);
            let c = ctable::c_factor(&s)?;
            ensure(&c == c8, || format!("word {word:?} gives {c}"))?;
        }
        Ok(())
    });
    r.fixed("λ_s = χ_s δ^(-1/2)", || {
        let l = ctable::lambda_from_chi_delta();
        let want = [Affine::new(3, -15), ctable::lambda_s()[0], ctable::lambda_s()[1], ctable::lambda_s()[2]];
        ensure(l == want, || format!("{l:?} vs {want:?}"))
    });
    r.fixed("Γ_R arguments of the normalizations", || {
        let n0 = ctable::normalization_factors(0)?;
        let n1 = ctable::normalization_factors(1)?;
        let want0 = vec![Affine::int(2, 0), Affine::int(2, -4), Affine::int(2, -8)];
        let want1 = vec![Affine::int(2, 2), Affine::int(2, -2), Affine::int(2, -6)];
        ensure(n0.section_gamma_r == want0 && n1.section_gamma_r == want1, || format!("{:?}, {:?}", n0.section_gamma_r, n1.section_gamma_r))
    });
    for d in [2u64, 3, 5] {
        r.random(&format!("functional equation constant = 1, D_B = {d}"), 20, move |rng, _| {
            let s = random_s(rng);
            let v = ctable::functional_equation_constant(&[d], s)?;
            let one = Complex64::new(1.0, 0.0);
            ensure(close(v.closed_form, one, tol) && close(v.chain, one, tol), || format!("s = {s}: {} and {}", v.closed_form, v.chain))
        });
        r.random(&format!("functional equation on Re(s) = 5/2, D_B = {d}"), 20, move |rng, _| {
            let s = Complex64::new(2.5, rng.gen_range(-3.0..3.0));
            let v = ctable::functional_equation_constant(&[d], s)?;
            let one = Complex64::new(1.0, 0.0);
            ensure(close(v.closed_form, one, tol) && close(v.chain, one, tol), || format!("s = {s}: {} and {}", v.closed_form, v.chain))
        });
    }
    r.random("c_∞ displayed = archimedean expansion of c_8", 20, move |rng, i| {
        let d = [2u64, 3, 5][i % 3];
        let s = random_s(rng);
        let c8 = &ctable::c_table()[7];
        let (a, b) = (ctable::numeric_local(c8, LocalPlace::Arch(d), s)?, ctable::c_infinity_displayed(d, s)?);
        ensure(close(a, b, tol), || format!("s = {s}, D_B = {d}: {a} vs {b}"))
    });
    r.random("split and ramified c_8 numerically", 20, move |rng, i| {
        let p = [2u64, 3, 5, 7][i % 4];
        let s = random_s(rng) + 5.0;
        let c8 = &ctable::c_table()[7];
        let z = |x: f64| ctable::zeta_p(p, 2.0 * s - x);
        let split = z(5.0)? * z(7.0)? * z(9.0)? / (z(0.0)? * z(2.0)? * z(4.0)?);
        let ram = z(5.0)? * z(7.0)? * z(9.0)? / (z(0.0)? * z(4.0)? * z(8.0)?);
        let (gs, gr) = (ctable::numeric_local(c8, LocalPlace::Split(p), s)?, ctable::numeric_local(c8, LocalPlace::Ramified(p), s)?);
        ensure(close(gs, split, tol) && close(gr, ram, tol), || format!("p = {p}, s = {s}"))
    });
}

/// Runs the named suites in order; `all` expands to every suite.
pub fn run(names: &[String], cfg: &Config) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            for s in SUITES {
                out.push(run_suite(s, cfg)?);
            }
        } else {
            out.push(run_suite(n, cfg)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_table_shape() {
        let t = listed_c_table();
        assert!(t[0].is_one());
        assert_eq!(t[7].num.len() + t[7].den.len(), 8);
    }

    #[test]
    fn unknown_suite_is_usage() {
        assert!(matches!(run_suite("nope", &Config::default()), Err(Error::Usage(_))));
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let cfg = Config { trials: Some(0), ..Config::default() };
        let rep = run_suite("diffop", &cfg).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checks[1].count, 0);
    }
}
