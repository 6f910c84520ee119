//! The cubic operator `D0 ∈ Sym³(J)` as a formal sum `Σ α x y z`, and its
//! three contractions `D1`, `D2`, `D3` against a point `w ∈ W`.
//!
//! Everything lives over the Hamilton-type ring `(1, 1, 1, 0, 0, 0)`, where
//! `1, i, j, k` are `1, v1, v2, -v3`.

use std::sync::Arc;

use crate::freudenthal::{Freudenthal, WElement};
use crate::jordan::JElement;
use crate::quat::{Quat, QuaternionRing, TernaryForm};
use crate::scalar::{Rational, Scalar};

/// `1, i, j, k` in the ring's basis.
pub fn hamilton_units() -> [Quat<Rational>; 4] {
    [Quat::from_i64([1, 0, 0, 0]), Quat::from_i64([0, 1, 0, 0]), Quat::from_i64([0, 0, 1, 0]), Quat::from_i64([0, 0, 0, -1])]
}

pub fn hamilton_space() -> Freudenthal {
    Freudenthal::new(hamilton_ring())
}

pub fn hamilton_ring() -> Arc<QuaternionRing> {
    QuaternionRing::shared(TernaryForm::hamilton())
}

/// `e_ii`, `i` in `0..3`.
pub fn e_diag(i: usize) -> JElement<Rational> {
    let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
    c[i] = Rational::one();
    JElement::diagonal(c)
}

/// `v_i(u)`: `u` in slot `a_i`, `u*` in the transposed position.
pub fn v(i: usize, u: &Quat<Rational>) -> JElement<Rational> {
    let mut x = JElement::zero();
    x.a[i] = u.clone();
    x
}

#[derive(Clone, PartialEq, Debug)]
pub struct CubicTensorTerm {
    pub alpha: Rational,
    pub x: JElement<Rational>,
    pub y: JElement<Rational>,
    pub z: JElement<Rational>,
}

pub type D0Expression = Vec<CubicTensorTerm>;

/// ```text
/// D0 = e11 e22 e33 - ¼ Σ_{i, u ∈ {1,i,j,k}} e_ii v_i(u)² + ¼ v1(1) v2(1) v3(1)
///      - ¼ Σ_{i, u ∈ {i,j,k}} v_i(1) v_{i+1}(u) v_{i+2}(u) - ¼ det(v_j(u))
/// ```
pub fn build_d0() -> D0Expression {
    let units = hamilton_units();
    let quarter = Rational::new(1, 4);
    let mq = -&quarter;
    let term = |alpha: &Rational, x, y, z| CubicTensorTerm { alpha: alpha.clone(), x, y, z };
    let mut out = vec![term(&Rational::one(), e_diag(0), e_diag(1), e_diag(2))];
    for i in 0..3 {
        for u in &units {
            out.push(term(&mq, e_diag(i), v(i, u), v(i, u)));
        }
    }
    out.push(term(&quarter, v(0, &units[0]), v(1, &units[0]), v(2, &units[0])));
    for i in 0..3 {
        for u in &units[1..] {
            out.push(term(&mq, v(i, &units[0]), v((i + 1) % 3, u), v((i + 2) % 3, u)));
        }
    }
    // det over rows u ∈ {i, j, k} and columns j = 1, 2, 3
    for (perm, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
        let alpha = if sign > 0 { mq.clone() } else { quarter.clone() };
        out.push(term(&alpha, v(0, &units[1 + perm[0]]), v(1, &units[1 + perm[1]]), v(2, &units[1 + perm[2]])));
    }
    out
}

/// `⟨(0, 0, x, 0), w⟩ = tr(x, b)`.
fn pair_c(w: &Freudenthal, x: &JElement<Rational>, p: &WElement<Rational>) -> Rational {
    w.symplectic(&WElement::new(Rational::zero(), JElement::zero(), x.clone(), Rational::zero()), p)
}

/// `⟨(0, y, 0, 0), w⟩ = -tr(y, c)`.
fn pair_b(w: &Freudenthal, y: &JElement<Rational>, p: &WElement<Rational>) -> Rational {
    w.symplectic(&WElement::new(Rational::zero(), y.clone(), JElement::zero(), Rational::zero()), p)
}

fn d1(w: &Freudenthal, t: &CubicTensorTerm, p: &WElement<Rational>) -> Rational {
    pair_c(w, &t.x, p) * pair_c(w, &t.y, p) * pair_c(w, &t.z, p)
}

fn d2(w: &Freudenthal, t: &CubicTensorTerm, p: &WElement<Rational>) -> Rational {
    let j = w.jordan();
    let (x, y, z) = (&t.x, &t.y, &t.z);
    pair_c(w, x, p) * pair_b(w, &j.cross(y, z), p)
        + pair_c(w, y, p) * pair_b(w, &j.cross(z, x), p)
        + pair_c(w, z, p) * pair_b(w, &j.cross(x, y), p)
}

fn d3(w: &Freudenthal, t: &CubicTensorTerm, p: &WElement<Rational>) -> Rational {
    let j = w.jordan();
    let a = j.trace_pair(&t.z, &j.cross(&t.x, &t.y));
    w.symplectic(&WElement::new(a, JElement::zero(), JElement::zero(), Rational::zero()), p)
}

fn eval(expr: &D0Expression, f: impl Fn(&CubicTensorTerm) -> Rational) -> Rational {
    expr.iter().fold(Rational::zero(), |s, t| s + &t.alpha * &f(t))
}

pub fn eval_d1(w: &Freudenthal, expr: &D0Expression, p: &WElement<Rational>) -> Rational {
    eval(expr, |t| d1(w, t, p))
}

pub fn eval_d2(w: &Freudenthal, expr: &D0Expression, p: &WElement<Rational>) -> Rational {
    eval(expr, |t| d2(w, t, p))
}

pub fn eval_d3(w: &Freudenthal, expr: &D0Expression, p: &WElement<Rational>) -> Rational {
    eval(expr, |t| d3(w, t, p))
}

/// Which of the three identities failed, with both sides.
#[derive(Clone, PartialEq, Debug)]
pub struct Counterexample {
    pub which: &'static str,
    pub w: WElement<Rational>,
    pub got: Rational,
    pub want: Rational,
}

/// `Σ α D1 = N(b)`, `Σ α D2 = -3 tr(b, c)`, `Σ α D3 = 15 d` at one point.
pub fn check_point(w: &Freudenthal, expr: &D0Expression, p: &WElement<Rational>) -> Result<(), Counterexample> {
    let j = w.jordan();
    let checks = [
        ("D1 = N(b)", eval_d1(w, expr, p), j.norm(&p.b)),
        ("D2 = -3 tr(b,c)", eval_d2(w, expr, p), j.trace_pair(&p.b, &p.c) * Rational::from(-3)),
        ("D3 = 15 d", eval_d3(w, expr, p), &p.d * &Rational::from(15)),
    ];
    for (which, got, want) in checks {
        if got != want {
            return Err(Counterexample { which, w: p.clone(), got, want });
        }
    }
    Ok(())
}

/// `Σ α tr(x,b) tr(y,b) tr(z,b)` and `N(b)` agree as cubic polynomials in
/// the 15 coordinates of `b`: checked on every `e_p + e_q + e_r`, which
/// determines a cubic form.
pub fn d1_matches_norm_polynomial(w: &Freudenthal, expr: &D0Expression) -> Result<(), Counterexample> {
    for m in crate::freudenthal::multisets(crate::jordan::J_DIM, 3) {
        let mut b = JElement::<Rational>::zero();
        for &k in &m {
            b.add_assign(&JElement::basis(k as usize));
        }
        let p = WElement::new(Rational::zero(), b.clone(), JElement::zero(), Rational::zero());
        let got = eval_d1(w, expr, &p);
        let want = w.jordan().norm(&b);
        if got != want {
            return Err(Counterexample { which: "D1 polynomial = N", w: p, got, want });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let d0 = build_d0();
        assert_eq!(d0.len(), 29);
        assert_eq!(d0[0].alpha, Rational::one());
        assert!(d0[1..].iter().all(|t| t.x.c.iter().chain(t.y.c.iter()).chain(t.z.c.iter()).filter(|c| !c.is_zero()).count() <= 1));
    }

    #[test]
    fn proposition_examples() {
        let w = hamilton_space();
        let d0 = build_d0();
        let one = JElement::<Rational>::identity();
        assert_eq!(eval_d3(&w, &d0, &WElement::f()), Rational::from(15));
        let b1 = WElement::new(Rational::zero(), one.clone(), JElement::zero(), Rational::zero());
        assert_eq!(eval_d1(&w, &d0, &b1), Rational::one());
        let bc = WElement::new(Rational::zero(), one.clone(), one, Rational::zero());
        assert_eq!(eval_d2(&w, &d0, &bc), Rational::from(-9));
        check_point(&w, &d0, &WElement::zero()).unwrap();
        d1_matches_norm_polynomial(&w, &d0).unwrap();
    }
}
