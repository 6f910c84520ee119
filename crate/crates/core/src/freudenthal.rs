//! Freudenthal's space `W = F ⊕ J ⊕ J ⊕ F` with its symplectic and quartic
//! forms, the rank stratification, and certified elements of the similitude
//! group `G`.
//!
//! Group elements act on row vectors from the right. Membership in `G` is
//! certified once at construction: the symplectic condition on all basis
//! pairs, and the quartic condition through the equivalent statement
//! `t(vg) = ν t(v) g` for the cubic map `t` defined by `⟨t(v), w⟩ =
//! (v, v, v, w)`. That statement is a cubic polynomial identity, so it is
//! checked exactly on the points `e_i + e_j + e_k`, which determine a cubic.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::jordan::{JElement, JordanAlgebra, QuatMatrix, J_DIM};
use crate::matrix::Matrix;
use crate::par::{self, Execution};
use crate::quat::QuaternionRing;
use crate::scalar::{Rational, Scalar};

pub const W_DIM: usize = 32;

/// `(a, b, c, d)` with `a, d` scalars and `b, c` in `H3(B)`.
#[derive(Clone, PartialEq, Debug)]
pub struct WElement<F> {
    pub a: F,
    pub b: JElement<F>,
    pub c: JElement<F>,
    pub d: F,
}

impl<F: Scalar> WElement<F> {
    pub fn new(a: F, b: JElement<F>, c: JElement<F>, d: F) -> Self {
        WElement { a, b, c, d }
    }

    pub fn zero() -> Self {
        WElement { a: F::zero(), b: JElement::zero(), c: JElement::zero(), d: F::zero() }
    }

    /// `e = (1, 0, 0, 0)`.
    pub fn e() -> Self {
        WElement { a: F::one(), ..Self::zero() }
    }

    /// `f = (0, 0, 0, 1)`.
    pub fn f() -> Self {
        WElement { d: F::one(), ..Self::zero() }
    }

    pub fn basis(k: usize) -> Self {
        let mut v = vec![F::zero(); W_DIM];
        v[k] = F::one();
        Self::from_coords(&v)
    }

    /// Coordinates in the order `a; b; c; d`.
    pub fn coords(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(W_DIM);
        v.push(self.a.clone());
        v.extend(self.b.coords());
        v.extend(self.c.coords());
        v.push(self.d.clone());
        v
    }

    pub fn from_coords(v: &[F]) -> Self {
        assert_eq!(v.len(), W_DIM);
        WElement {
            a: v[0].clone(),
            b: JElement::from_coords(&v[1..1 + J_DIM]),
            c: JElement::from_coords(&v[1 + J_DIM..1 + 2 * J_DIM]),
            d: v[W_DIM - 1].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.d.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        WElement { a: self.a.add(&o.a), b: self.b.add(&o.b), c: self.c.add(&o.c), d: self.d.add(&o.d) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        WElement { a: self.a.sub(&o.a), b: self.b.sub(&o.b), c: self.c.sub(&o.c), d: self.d.sub(&o.d) }
    }

    pub fn neg(&self) -> Self {
        WElement { a: self.a.neg(), b: self.b.neg(), c: self.c.neg(), d: self.d.neg() }
    }

    pub fn scale(&self, k: &F) -> Self {
        WElement { a: self.a.mul(k), b: self.b.scale(k), c: self.c.scale(k), d: self.d.mul(k) }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> WElement<G> {
        WElement { a: f(&self.a), b: self.b.map(&f), c: self.c.map(&f), d: f(&self.d) }
    }

    /// Componentwise complex conjugation.
    pub fn conj(&self) -> Self {
        self.map(F::conj)
    }

    /// `v ∈ F·w` for nonzero `w`.
    pub fn is_multiple_of(&self, w: &Self) -> bool {
        let (x, y) = (self.coords(), w.coords());
        let Some(p) = y.iter().position(|t| !t.is_zero()) else {
            return self.is_zero();
        };
        let k = x[p].div(&y[p]).expect("nonzero pivot");
        x.iter().zip(&y).all(|(s, t)| *s == t.mul(&k))
    }
}

impl<F: Scalar> fmt::Display for WElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl<F: Scalar + FromStr<Err = Error>> FromStr for WElement<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s.split_whitespace().map(str::parse).collect::<Result<Vec<F>>>()?;
        if v.len() != W_DIM {
            return Err(Error::Parse(format!("a W element needs {W_DIM} coordinates, got {}", v.len())));
        }
        Ok(Self::from_coords(&v))
    }
}

/// How the quartic condition is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticCheck {
    /// `t(vg) = ν t(v) g` on the 5984 points `e_i + e_j + e_k`.
    Cubic,
    /// `Q(vg) = ν² Q(v)` on the 52360 points `e_i + e_j + e_k + e_l`.
    Quartic,
}

/// A linear automorphism of `W` certified to lie in `G`, with similitude.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement {
    matrix: Matrix<Rational>,
    nu: Rational,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { matrix: Matrix::identity(W_DIM), nu: Rational::one() }
    }

    /// Skips certification; for matrices already known to lie in `G`.
    pub(crate) fn trusted(matrix: Matrix<Rational>, nu: Rational) -> Self {
        GroupElement { matrix, nu }
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    pub fn apply<F: Scalar>(&self, v: &WElement<F>) -> WElement<F> {
        let x = v.coords();
        let mut out = vec![F::zero(); W_DIM];
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.matrix.get(k, j);
                if !m.is_zero() {
                    o.add_assign(&xk.mul_rational(m));
                }
            }
        }
        WElement::from_coords(&out)
    }

    /// `self` followed by `o`: `v (self o) = (v self) o`. `G` is a group, so
    /// the product needs no new certificate.
    pub fn then(&self, o: &GroupElement) -> GroupElement {
        GroupElement { matrix: self.matrix.mul(&o.matrix), nu: &self.nu * &o.nu }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            matrix: self.matrix.inverse().expect("group elements are invertible"),
            nu: self.nu.inv().expect("nonzero similitude"),
        }
    }
}

/// `W` over a fixed quaternion ring.
#[derive(Clone, Debug)]
pub struct Freudenthal {
    jordan: JordanAlgebra,
}

impl Freudenthal {
    pub fn new(ring: Arc<QuaternionRing>) -> Self {
        Freudenthal { jordan: JordanAlgebra::new(ring) }
    }

    pub fn jordan(&self) -> &JordanAlgebra {
        &self.jordan
    }

    pub fn ring(&self) -> &Arc<QuaternionRing> {
        self.jordan.ring()
    }

    /// `⟨(a,b,c,d), (a',b',c',d')⟩ = ad' - tr(b,c') + tr(c,b') - da'`.
    pub fn symplectic<F: Scalar>(&self, u: &WElement<F>, v: &WElement<F>) -> F {
        let j = &self.jordan;
        u.a.mul(&v.d)
            .sub(&j.trace_pair(&u.b, &v.c))
            .add(&j.trace_pair(&u.c, &v.b))
            .sub(&u.d.mul(&v.a))
    }

    /// `Q = (ad - tr(b,c))² + 4aN(c) + 4dN(b) - 4tr(b#, c#)`.
    pub fn quartic<F: Scalar>(&self, v: &WElement<F>) -> F {
        let j = &self.jordan;
        let q = v.a.mul(&v.d).sub(&j.trace_pair(&v.b, &v.c));
        let mut out = q.mul(&q);
        out.add_assign(&v.a.mul(&j.norm(&v.c)).mul_i64(4));
        out.add_assign(&v.d.mul(&j.norm(&v.b)).mul_i64(4));
        out.sub_assign(&j.trace_pair(&j.sharp(&v.b), &j.sharp(&v.c)).mul_i64(4));
        out
    }

    /// `2 t(v)`, where `⟨t(v), w⟩ = (v, v, v, w)`. With `q = ad - tr(b,c)`:
    ///
    /// ```text
    /// t(v) = ( qa/2 + N(b),  qb/2 - a c# + c × b#,
    ///         -qc/2 + d b# - b × c#,  -(qd/2 + N(c)) )
    /// ```
    pub fn cubic_doubled<F: Scalar>(&self, v: &WElement<F>) -> WElement<F> {
        let j = &self.jordan;
        let q = v.a.mul(&v.d).sub(&j.trace_pair(&v.b, &v.c));
        let bs = j.sharp(&v.b);
        let cs = j.sharp(&v.c);
        let two = F::from_i64(2);
        let mut tb = v.b.scale(&q);
        tb.add_assign(&j.cross(&v.c, &bs).scale(&two));
        if !v.a.is_zero() {
            tb.add_assign(&cs.scale(&v.a.mul_i64(-2)));
        }
        let mut tc = v.c.scale(&q.neg());
        tc.add_assign(&j.cross(&v.b, &cs).scale(&F::from_i64(-2)));
        if !v.d.is_zero() {
            tc.add_assign(&bs.scale(&v.d.mul_i64(2)));
        }
        WElement {
            a: q.mul(&v.a).add(&j.norm(&v.b).mul_i64(2)),
            b: tb,
            c: tc,
            d: q.mul(&v.d).add(&j.norm(&v.c).mul_i64(2)).neg(),
        }
    }

    /// The cubic map `t`.
    pub fn cubic<F: Scalar>(&self, v: &WElement<F>) -> WElement<F> {
        self.cubic_doubled(v).scale(&F::from_rational(&Rational::new(1, 2)))
    }

    /// `t(v, v, w) = (t(v + w) - t(v - w) - 2 t(w)) / 6`.
    pub fn cubic_polar<F: Scalar>(&self, v: &WElement<F>, w: &WElement<F>) -> WElement<F> {
        let p = self.cubic_doubled(&v.add(w));
        let m = self.cubic_doubled(&v.sub(w));
        let t = self.cubic_doubled(w);
        p.sub(&m).sub(&t.scale(&F::from_i64(2))).scale(&F::from_rational(&Rational::new(1, 12)))
    }

    /// The symmetric four-linear form with `(v, v, v, v) = Q(v)`, by
    /// inclusion–exclusion over the 15 nonempty partial sums.
    pub fn fourlinear<F: Scalar>(&self, w: &WElement<F>, x: &WElement<F>, y: &WElement<F>, z: &WElement<F>) -> F {
        let vs = [w, x, y, z];
        let mut total = F::zero();
        for mask in 1u32..16 {
            let mut s = WElement::zero();
            for (k, v) in vs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s = s.add(v);
                }
            }
            let q = self.quartic(&s);
            if (4 - mask.count_ones()) % 2 == 0 {
                total.add_assign(&q);
            } else {
                total.sub_assign(&q);
            }
        }
        total.mul_rational(&Rational::new(1, 24))
    }

    /// Rank 0 to 4 by successive vanishing of `Q`, `(v,v,v,·)` and
    /// `(v,v,·,·)` on `W × v^⊥`.
    pub fn rank<F: Scalar>(&self, v: &WElement<F>) -> u8 {
        if v.is_zero() {
            return 0;
        }
        if !self.quartic(v).is_zero() {
            return 4;
        }
        if !self.cubic_doubled(v).is_zero() {
            return 3;
        }
        let omega = self.gram().map(F::from_rational);
        let phi = omega.mul_vec(&v.coords());
        let perp = Matrix::from_rows(vec![phi]).kernel();
        for k in 0..W_DIM {
            let t = self.cubic_polar(v, &WElement::basis(k));
            let psi = omega.vec_mul(&t.coords());
            for w in &perp {
                let mut s = F::zero();
                for (x, y) in psi.iter().zip(w) {
                    s.add_mul(x, y);
                }
                if !s.is_zero() {
                    return 2;
                }
            }
        }
        1
    }

    /// `b# = ac`, `c# = db`, `bc = cb` and `bc = ad·1` in `M3(B)`.
    pub fn rank1_is_sharp_pair<F: Scalar>(&self, v: &WElement<F>) -> bool {
        let j = &self.jordan;
        if j.sharp(&v.b) != v.c.scale(&v.a) || j.sharp(&v.c) != v.b.scale(&v.d) {
            return false;
        }
        let (b, c) = (j.to_matrix(&v.b), j.to_matrix(&v.c));
        let bc = j.mat_mul(&b, &c);
        bc == j.mat_mul(&c, &b) && bc == QuatMatrix::scalar(v.a.mul(&v.d))
    }

    /// `||v||² = ⟨v, vJ⟩ = a² + tr(b,b) + tr(c,c) + d²`.
    pub fn norm_sq<F: Scalar>(&self, v: &WElement<F>) -> F {
        self.symplectic(v, &apply_j(v))
    }

    /// Gram matrix `Ω` of the symplectic form on the coordinate basis.
    pub fn gram(&self) -> Matrix<Rational> {
        let g = self.jordan.trace_gram();
        let mut m = Matrix::zeros(W_DIM, W_DIM);
        m.set(0, W_DIM - 1, Rational::one());
        m.set(W_DIM - 1, 0, -Rational::one());
        for i in 0..J_DIM {
            for k in 0..J_DIM {
                let x = g.get(i, k);
                if !x.is_zero() {
                    m.set(1 + i, 1 + J_DIM + k, -x);
                    m.set(1 + J_DIM + i, 1 + k, x.clone());
                }
            }
        }
        m
    }

    /// `(a, b, c, d) n(X) = (a, b + aX, c + b×X + aX#, d + tr(c,X) + tr(b,X#) + aN(X))`.
    pub fn apply_n<F: Scalar>(&self, x: &JElement<F>, v: &WElement<F>) -> WElement<F> {
        let j = &self.jordan;
        let xs = j.sharp(x);
        let mut c = v.c.add(&j.cross(&v.b, x));
        c.add_assign(&xs.scale(&v.a));
        let d = v
            .d
            .add(&j.trace_pair(&v.c, x))
            .add(&j.trace_pair(&v.b, &xs))
            .add(&v.a.mul(&j.norm(x)));
        WElement { a: v.a.clone(), b: v.b.add(&x.scale(&v.a)), c, d }
    }

    /// `(a, b, c, d) n̄(Y) = (a + tr(b,Y) + tr(c,Y#) + dN(Y), b + c×Y + dY#, c + dY, d)`.
    pub fn apply_nbar<F: Scalar>(&self, y: &JElement<F>, v: &WElement<F>) -> WElement<F> {
        let j = &self.jordan;
        let ys = j.sharp(y);
        let a = v
            .a
            .add(&j.trace_pair(&v.b, y))
            .add(&j.trace_pair(&v.c, &ys))
            .add(&v.d.mul(&j.norm(y)));
        let mut b = v.b.add(&j.cross(&v.c, y));
        b.add_assign(&ys.scale(&v.d));
        WElement { a, b, c: v.c.add(&y.scale(&v.d)), d: v.d.clone() }
    }

    /// `(a, b, c, d) L(X) = (0, aX, b×X, tr(c,X))`; `n(X) = exp L(X)`.
    pub fn apply_log_n<F: Scalar>(&self, x: &JElement<F>, v: &WElement<F>) -> WElement<F> {
        let j = &self.jordan;
        WElement { a: F::zero(), b: x.scale(&v.a), c: j.cross(&v.b, x), d: j.trace_pair(&v.c, x) }
    }

    /// `(a, b, c, d) L̄(Y) = (tr(b,Y), c×Y, dY, 0)`.
    pub fn apply_log_nbar<F: Scalar>(&self, y: &JElement<F>, v: &WElement<F>) -> WElement<F> {
        let j = &self.jordan;
        WElement { a: j.trace_pair(&v.b, y), b: j.cross(&v.c, y), c: y.scale(&v.d), d: F::zero() }
    }

    pub fn n_matrix<F: Scalar>(&self, x: &JElement<F>) -> Matrix<F> {
        linear_map(|v| self.apply_n(x, v))
    }

    pub fn nbar_matrix<F: Scalar>(&self, y: &JElement<F>) -> Matrix<F> {
        linear_map(|v| self.apply_nbar(y, v))
    }

    /// Certifies `m` as an element of `G` and computes its similitude.
    pub fn certify(&self, m: Matrix<Rational>) -> Result<GroupElement> {
        self.certify_with(m, QuarticCheck::Cubic, Execution::default())
    }

    pub fn certify_with(&self, m: Matrix<Rational>, check: QuarticCheck, exec: Execution) -> Result<GroupElement> {
        if m.rows() != W_DIM || m.cols() != W_DIM {
            return Err(Error::NotInGroup(format!("expected a {W_DIM}x{W_DIM} matrix")));
        }
        let omega = self.gram();
        let p = m.mul(&omega).mul(&m.transpose());
        let nu = p.get(0, W_DIM - 1).clone();
        if nu.is_zero() {
            return Err(Error::NotInGroup("similitude is zero".into()));
        }
        if p != omega.scale(&nu) {
            return Err(Error::NotInGroup("symplectic form not preserved up to a scalar".into()));
        }
        // Work with the integral matrix D·m; both sides scale by powers of D.
        let den = m.entries().iter().fold(Rational::one(), |acc, x| acc.lcm(&x.denominator()));
        let mi = m.scale(&den);
        let (nu_num, nu_den) = (Rational::from_bigint(nu.numer()), nu.denominator());
        let bad = match check {
            QuarticCheck::Cubic => {
                let pts = multisets(W_DIM, 3);
                let lhs_k = nu_den;
                let rhs_k = &(&den * &den) * &nu_num;
                par::find_first(exec, &pts, |pt| {
                    let x = point(pt);
                    let xg = WElement::from_coords(&mi.vec_mul(&x.coords()));
                    let lhs = self.cubic_doubled(&xg).scale(&lhs_k);
                    let tx = self.cubic_doubled(&x);
                    let rhs = WElement::from_coords(&mi.vec_mul(&tx.coords())).scale(&rhs_k);
                    lhs != rhs
                })
                .map(|i| pts[i].clone())
            }
            QuarticCheck::Quartic => {
                let pts = multisets(W_DIM, 4);
                let lhs_k = &nu_den * &nu_den;
                let d2 = &den * &den;
                let rhs_k = &(&d2 * &d2) * &(&nu_num * &nu_num);
                par::find_first(exec, &pts, |pt| {
                    let x = point(pt);
                    let xg = WElement::from_coords(&mi.vec_mul(&x.coords()));
                    &self.quartic(&xg) * &lhs_k != &self.quartic(&x) * &rhs_k
                })
                .map(|i| pts[i].clone())
            }
        };
        if let Some(pt) = bad {
            return Err(Error::NotInGroup(format!("quartic form not preserved at basis multiset {pt:?}")));
        }
        Ok(GroupElement { matrix: m, nu })
    }

    fn certify_generator(&self, m: Matrix<Rational>, what: &str) -> Result<GroupElement> {
        self.certify(m).map_err(|e| Error::Internal(format!("{what} failed certification: {e}")))
    }

    pub fn op_n(&self, x: &JElement<Rational>) -> Result<GroupElement> {
        self.certify_generator(self.n_matrix(x), "n(X)")
    }

    pub fn op_nbar(&self, y: &JElement<Rational>) -> Result<GroupElement> {
        self.certify_generator(self.nbar_matrix(y), "n̄(Y)")
    }

    /// `(a, b, c, d) ↦ (-d, c, -b, a)`.
    pub fn op_j(&self) -> Result<GroupElement> {
        self.certify_generator(linear_map(apply_j), "J")
    }

    /// Multiplication by `λ`, similitude `λ²`.
    pub fn op_scalar(&self, lambda: &Rational) -> Result<GroupElement> {
        if lambda.is_zero() {
            return Err(Error::Domain("scalar must be nonzero".into()));
        }
        self.certify_generator(Matrix::identity(W_DIM).scale(lambda), "scalar")
    }

    /// `(a, b, c, d) ↦ (λ²a, λb, c, λ⁻¹d)`, similitude `λ`.
    pub fn op_weight(&self, lambda: &Rational) -> Result<GroupElement> {
        let inv = lambda.inv().ok_or_else(|| Error::Domain("weight must be nonzero".into()))?;
        let sq = lambda * lambda;
        let m = linear_map(|v: &WElement<Rational>| WElement {
            a: &v.a * &sq,
            b: v.b.scale(lambda),
            c: v.c.clone(),
            d: &v.d * &inv,
        });
        self.certify_generator(m, "weight")
    }

    /// `m(t)` for `t(b) = r⁻¹ m* b m`: `(λa, t(b), t̃(c), λ⁻¹d)` with
    /// `λ = r⁻³ N(m*m)` and `t̃` the adjoint inverse of `t` for the trace
    /// pairing.
    pub fn op_m(&self, m: &QuatMatrix<Rational>, r: &Rational) -> Result<GroupElement> {
        let j = &self.jordan;
        let rinv = r.inv().ok_or_else(|| Error::Domain("r must be nonzero".into()))?;
        let ms = j.mat_star(m);
        let lambda = j.norm(&j.from_matrix(&j.mat_mul(&ms, m)).expect("m*m is Hermitian")) * rinv.pow(3);
        let lambda_inv = lambda.inv().ok_or_else(|| Error::Domain("t is singular: λ(t) = 0".into()))?;
        let t_rows = (0..J_DIM)
            .map(|k| {
                let b = j.to_matrix(&JElement::<Rational>::basis(k));
                let img = j.mat_mul(&j.mat_mul(&ms, &b), m).scale(&rinv);
                j.from_matrix(&img).expect("m* b m is Hermitian").coords()
            })
            .collect();
        let t = Matrix::from_rows(t_rows);
        let t_inv = t.inverse().ok_or_else(|| Error::Domain("t is singular".into()))?;
        let g = j.trace_gram();
        let t_tilde = g.mul(&t_inv.transpose()).mul(&g.inverse().expect("trace pairing is nondegenerate"));
        let mut out = Matrix::zeros(W_DIM, W_DIM);
        out.set(0, 0, lambda);
        out.set(W_DIM - 1, W_DIM - 1, lambda_inv);
        for i in 0..J_DIM {
            for k in 0..J_DIM {
                out.set(1 + i, 1 + k, t.get(i, k).clone());
                out.set(1 + J_DIM + i, 1 + J_DIM + k, t_tilde.get(i, k).clone());
            }
        }
        self.certify_generator(out, "m(t)")
    }

    /// A translate of the rank-one `v` with `d = 1`, by generators from the
    /// image of `GSp6(Q)`: `J` if `d = 0 ≠ a`, otherwise `n(X)` for a
    /// symmetric scalar `X` found by search, then a weight rescaling.
    pub fn normalize_d1(&self, v: &WElement<Rational>) -> Result<(GroupElement, WElement<Rational>)> {
        let r = self.rank(v);
        if r != 1 {
            return Err(Error::Precondition(format!("v has rank {r}, not 1")));
        }
        let mut g = GroupElement::identity();
        let mut u = v.clone();
        if u.d.is_zero() && !u.a.is_zero() {
            g = self.op_j()?;
            u = g.apply(v);
        } else if u.d.is_zero() {
            let x = symmetric_search()
                .find(|x| !self.apply_n(x, &u).d.is_zero())
                .ok_or_else(|| Error::Internal(format!("no n(X) translate of {v} has d ≠ 0")))?;
            g = self.op_n(&x)?;
            u = g.apply(v);
        }
        let lambda = u.d.clone();
        if lambda != Rational::one() {
            g = g.then(&self.op_weight(&lambda)?);
            u = g.apply(v);
        }
        debug_assert!(u.d == Rational::one());
        Ok((g, u))
    }
}

/// Symmetric scalar `X`: the six basis elements, then every combination
/// with coefficients in `[-3, 3]`.
fn symmetric_search() -> impl Iterator<Item = JElement<Rational>> {
    let basis: Vec<JElement<Rational>> = [0, 1, 2, 3, 7, 11].iter().map(|&k| JElement::basis(k)).collect();
    let combos = (0..7i64.pow(6)).map(|mut n| {
        let mut x = JElement::zero();
        for k in [0, 1, 2, 3, 7, 11] {
            let c = n % 7 - 3;
            n /= 7;
            x.add_assign(&JElement::basis(k).scale(&Rational::from(c)));
        }
        x
    });
    basis.into_iter().chain(combos)
}

/// `(a, b, c, d) ↦ (-d, c, -b, a)`.
pub fn apply_j<F: Scalar>(v: &WElement<F>) -> WElement<F> {
    WElement { a: v.d.neg(), b: v.c.clone(), c: v.b.neg(), d: v.a.clone() }
}

/// The matrix whose `k`-th row is the image of the `k`-th basis vector.
pub fn linear_map<F: Scalar>(f: impl Fn(&WElement<F>) -> WElement<F>) -> Matrix<F> {
    Matrix::from_rows((0..W_DIM).map(|k| f(&WElement::basis(k)).coords()).collect())
}

/// All multisets of size `k` from `0..n`, as sorted index lists.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn point(pt: &[u8]) -> WElement<Rational> {
    let mut v = vec![Rational::zero(); W_DIM];
    for &i in pt {
        v[i as usize] = &v[i as usize] + &Rational::one();
    }
    WElement::from_coords(&v)
}
