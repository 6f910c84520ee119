//! Good bases, the rank-one matrix `A(T)`, discriminants and maximality,
//! suborders through `m⁻¹ T c(m)`, and the bookkeeping for the Dirichlet
//! series `Σ a(Z + λO) / (λ^s [B0 : O]^{s-2r+3})`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gsp6;
use crate::jordan::{JElement, JordanAlgebra};
use crate::matrix::Matrix;
use crate::par::{self, Execution};
use crate::quat::{Quat, QuaternionRing, TernaryForm};
use crate::scalar::{Rational, Scalar};

/// The multiplication table forced by the good-basis laws
/// `v2v3 = a v1*`, `v3v1 = b v2*`, `v1v2 = c v3*`, `tr(v_i) = (d, e, f)_i`,
/// `n(v1) = bc`, `n(v2) = ca`, `n(v3) = ab`. Entry `[i][j]` holds the
/// coordinates of `b_i b_j` for the basis `1, v1, v2, v3`.
pub fn forced_table(t: TernaryForm) -> [[[i64; 4]; 4]; 4] {
    let q = [t.a, t.b, t.c];
    let tr = [t.d, t.e, t.f];
    let mut out = [[[0i64; 4]; 4]; 4];
    for k in 0..4 {
        out[0][k][k] = 1;
        out[k][0][k] = 1;
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        // v_i² = tr(v_i) v_i - n(v_i)
        out[i + 1][i + 1][0] = -q[j] * q[k];
        out[i + 1][i + 1][i + 1] = tr[i];
        // v_j v_k = q_i v_i* = q_i tr(v_i) - q_i v_i
        out[j + 1][k + 1][0] = q[i] * tr[i];
        out[j + 1][k + 1][i + 1] = -q[i];
        // v_k v_j = -tr_j tr_k + tr_k v_j + tr_j v_k + q_i v_i
        out[k + 1][j + 1][0] = -tr[j] * tr[k];
        out[k + 1][j + 1][j + 1] = tr[k];
        out[k + 1][j + 1][k + 1] = tr[j];
        out[k + 1][j + 1][i + 1] = q[i];
    }
    out
}

/// `A(T)`: diagonal `(a, b, c)`, off-diagonal `(v1, v2, v3)`.
pub fn a_matrix(ring: &QuaternionRing) -> JElement<Rational> {
    let t = ring.form();
    JElement {
        c: [t.a, t.b, t.c].map(Rational::from),
        a: [1, 2, 3].map(Quat::basis),
    }
}

/// `m⁻¹ A(T) c(m)`. Its off-diagonal entries `v_i'` have the imaginary
/// parts of `w_i = Σ_j m_ji v_j`.
pub fn transformed_a_matrix(j: &JordanAlgebra, m: &Matrix<Rational>) -> Result<JElement<Rational>> {
    let c = cofactor(m)?;
    let inv = m.inverse().expect("checked by cofactor");
    let a = j.to_matrix(&a_matrix(j.ring()));
    let x = gsp6::scalar_right(&gsp6::scalar_left(&inv, &a), &c);
    j.from_matrix(&x).ok_or_else(|| Error::Internal("m⁻¹ A(T) c(m) is not Hermitian".into()))
}

/// `A` of the good basis `w_i - x_i` reached from `1, w1, w2, w3`: diagonal
/// `(a, b, c)` of its form, off-diagonal the shifted `w_i`.
pub fn good_a_matrix(ring: &QuaternionRing, w: &[Quat<Rational>; 3]) -> Result<JElement<Rational>> {
    let x = good_basis_shift(&StructureConstants::from_basis(ring, w)?)?;
    let f = form_of_basis(ring, w)?;
    Ok(JElement {
        c: [f[0].clone(), f[1].clone(), f[2].clone()],
        a: std::array::from_fn(|i| w[i].sub(&Quat::scalar(x[i].clone()))),
    })
}

/// Membership in `J_T`: integral diagonal, off-diagonal entries in `Λ_T`.
pub fn in_j_t(a: &JElement<Rational>) -> bool {
    a.coords().iter().all(Rational::is_integer)
}

/// The lattices spanned by `x` and `y` coincide.
pub fn same_lattice(x: &[Quat<Rational>; 4], y: &[Quat<Rational>; 4]) -> bool {
    let inv = |b: &[Quat<Rational>; 4]| Matrix::from_rows(b.iter().map(|q| q.0.to_vec()).collect()).inverse();
    let (Some(xi), Some(yi)) = (inv(x), inv(y)) else { return false };
    x.iter().all(|q| in_lattice(q, &yi)) && y.iter().all(|q| in_lattice(q, &xi))
}

/// Structure constants `w_i w_j = s⁰_ij + Σ_k s^k_ij w_k` of a basis
/// `1, w1, w2, w3`.
#[derive(Clone, PartialEq, Debug)]
pub struct StructureConstants {
    /// `s[i][j][k]` for `i, j` in `0..3` and `k` in `0..4`.
    pub s: [[[Rational; 4]; 3]; 3],
}

impl StructureConstants {
    pub fn from_basis(ring: &QuaternionRing, w: &[Quat<Rational>; 3]) -> Result<Self> {
        let basis = basis_matrix(w);
        let inv = basis.inverse().ok_or_else(|| Error::InvalidInput("1, w1, w2, w3 is not a basis".into()))?;
        let s = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let p = ring.mul(&w[i], &w[j]);
                let c = inv.vec_mul(&p.0);
                std::array::from_fn(|k| c[k].clone())
            })
        });
        Ok(StructureConstants { s })
    }

    /// `S` with rows `s_23^·, s_31^·, s_12^·` and columns `1, 2, 3`.
    pub fn s_matrix(&self) -> Matrix<Rational> {
        let pairs = [(1, 2), (2, 0), (0, 1)];
        Matrix::from_fn(3, 3, |r, k| self.s[pairs[r].0][pairs[r].1][k + 1].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        let s = self.s_matrix();
        s == s.transpose()
    }
}

/// The unique `x` with `w_i - x_i` a good basis:
/// `x1 = s_31³ = s_12²`, `x2 = s_12¹ = s_23³`, `x3 = s_23² = s_31¹`.
pub fn good_basis_shift(sc: &StructureConstants) -> Result<[Rational; 3]> {
    if !sc.is_symmetric() {
        return Err(Error::InvalidInput("structure-constant matrix S is not symmetric".into()));
    }
    let s = &sc.s;
    let x1 = s[2][0][3].clone();
    let x2 = s[0][1][1].clone();
    let x3 = s[1][2][2].clone();
    if x1 != s[0][1][2] || x2 != s[1][2][3] || x3 != s[2][0][1] {
        return Err(Error::InvalidInput("structure constants violate the ring axioms".into()));
    }
    Ok([x1, x2, x3])
}

/// Rational sextuple `(a, b, c, d, e, f)` read off the good basis obtained
/// from `1, w1, w2, w3`: `a, b, c` from `v2v3 = a v1*` and its cyclic
/// shifts, `d, e, f` from traces.
pub fn form_of_basis(ring: &QuaternionRing, w: &[Quat<Rational>; 3]) -> Result<[Rational; 6]> {
    let sc = StructureConstants::from_basis(ring, w)?;
    let x = good_basis_shift(&sc)?;
    let v: [Quat<Rational>; 3] = std::array::from_fn(|i| w[i].sub(&Quat::scalar(x[i].clone())));
    let good = StructureConstants::from_basis(ring, &v)?;
    let g = &good.s;
    Ok([
        -&g[1][2][1],
        -&g[2][0][2],
        -&g[0][1][3],
        ring.trace(&v[0]),
        ring.trace(&v[1]),
        ring.trace(&v[2]),
    ])
}

/// The good-basis form of the ring itself.
pub fn extract_form(ring: &QuaternionRing) -> TernaryForm {
    let w = [1, 2, 3].map(Quat::basis);
    let f = form_of_basis(ring, &w).expect("the defining basis is a basis");
    TernaryForm::from_array(f.map(|x| x.to_i64().expect("integral form")))
}

fn basis_matrix(w: &[Quat<Rational>; 3]) -> Matrix<Rational> {
    let mut rows = vec![Quat::<Rational>::one().0.to_vec()];
    rows.extend(w.iter().map(|q| q.0.to_vec()));
    Matrix::from_rows(rows)
}

/// `4 det(T)`.
pub fn reduced_discriminant(t: TernaryForm) -> i64 {
    t.four_det()
}

fn odd_part(mut n: i64) -> (u32, i64) {
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    (v, n)
}

fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    let mut r = 1i64;
    let (mut base, mut e) = (a as i128, (p - 1) / 2);
    let m = p as i128;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as i128 * base) % m) as i64;
        }
        base = base * base % m;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_p` for nonzero integers.
pub fn hilbert_symbol(a: i64, b: i64, p: i64) -> i64 {
    assert!(a != 0 && b != 0);
    if p == 2 {
        let (alpha, u) = odd_part(a);
        let (beta, v) = odd_part(b);
        let eps = |x: i64| ((x.rem_euclid(4) - 1) / 2) as u32;
        let omega = |x: i64| {
            let r = x.rem_euclid(8);
            ((r * r - 1) / 8 % 2) as u32
        };
        let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let val = |mut x: i64| {
        let mut k = 0u32;
        while x % p == 0 {
            x /= p;
            k += 1;
        }
        (k, x)
    };
    let (alpha, u) = val(a);
    let (beta, v) = val(b);
    let mut s = if (alpha * beta) % 2 == 1 && p % 4 == 3 { -1 } else { 1 };
    if beta % 2 == 1 {
        s *= legendre(u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(v, p);
    }
    s
}

fn prime_factors(mut n: i64) -> Vec<i64> {
    n = n.abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Squarefree integer in the square class of a nonzero rational.
fn square_class(q: &Rational) -> i64 {
    let n = q.numer() * q.denom();
    let n: i64 = i64::try_from(n).expect("small square class");
    let sign = n.signum();
    let mut m = n.abs();
    let mut out = 1;
    for p in prime_factors(m) {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k % 2 == 1 {
            out *= p;
        }
    }
    sign * out
}

/// Finite primes where the even Clifford algebra of a nondegenerate `T`
/// ramifies. Diagonalizing `q ≅ ⟨q1, q2, q3⟩` gives `B ≅ (-q1q2, -q2q3)`.
pub fn ramified_primes(t: TernaryForm) -> Result<Vec<i64>> {
    if t.four_det() == 0 {
        return Err(Error::Domain("degenerate form".into()));
    }
    let mut m = t.half_matrix();
    let mut diag = Vec::new();
    for k in 0..3 {
        let p = (k..3).find(|&i| !m.get(i, i).is_zero());
        let p = match p {
            Some(p) => p,
            None => {
                // all remaining diagonal entries vanish: replace e_k by e_k + e_l
                let l = (k + 1..3).find(|&l| !m.get(k, l).is_zero()).expect("nondegenerate");
                let mut s = Matrix::identity(3);
                s.set(k, l, Rational::one());
                m = s.mul(&m).mul(&s.transpose());
                k
            }
        };
        if p != k {
            let mut s: Matrix<Rational> = Matrix::identity(3);
            s.set(k, k, Rational::zero());
            s.set(p, p, Rational::zero());
            s.set(k, p, Rational::one());
            s.set(p, k, Rational::one());
            m = s.mul(&m).mul(&s.transpose());
        }
        let piv = m.get(k, k).clone();
        let mut s: Matrix<Rational> = Matrix::identity(3);
        for i in k + 1..3 {
            s.set(i, k, -(m.get(i, k) / &piv));
        }
        m = s.mul(&m).mul(&s.transpose());
        diag.push(piv);
    }
    let (q1, q2, q3) = (square_class(&diag[0]), square_class(&diag[1]), square_class(&diag[2]));
    let (x, y) = (-q1 * q2, -q2 * q3);
    let mut primes: Vec<i64> = prime_factors(2 * x * y);
    primes.sort_unstable();
    Ok(primes.into_iter().filter(|&p| hilbert_symbol(x, y, p) == -1).collect())
}

/// `D_B`, the product of finite ramified primes.
pub fn algebra_discriminant(t: TernaryForm) -> Result<i64> {
    Ok(ramified_primes(t)?.iter().product())
}

/// Maximal iff `|4 det T| = D_B`: the reduced discriminant of an order is
/// `D_B` times its level, and equals `D_B` exactly for maximal orders.
pub fn is_maximal(t: TernaryForm) -> Result<bool> {
    if !t.is_positive_definite() {
        return Err(Error::Domain(format!("form {t} is not positive definite")));
    }
    Ok(t.four_det().abs() == algebra_discriminant(t)?)
}

/// Integral coordinates of `z` in the lattice with basis rows `basis_inv⁻¹`.
fn in_lattice(z: &Quat<Rational>, basis_inv: &Matrix<Rational>) -> bool {
    basis_inv.vec_mul(&z.0).iter().all(Rational::is_integer)
}

/// Brute-force check that the lattice spanned by `gens` (which must contain
/// a basis) is closed under the ring product.
pub fn lattice_closed(ring: &QuaternionRing, basis: &[Quat<Rational>; 4]) -> bool {
    let m = Matrix::from_rows(basis.iter().map(|q| q.0.to_vec()).collect());
    let Some(inv) = m.inverse() else { return false };
    basis.iter().all(|x| basis.iter().all(|y| in_lattice(&ring.mul(x, y), &inv)))
}

/// `y ∈ (1/p)Λ_T` with `Λ_T + Z y` a ring strictly containing `Λ_T`.
pub fn superorder_witness(ring: &QuaternionRing, p: i64) -> Option<Quat<Rational>> {
    let std = [0, 1, 2, 3].map(Quat::<Rational>::basis);
    for mask in 1..(p as usize).pow(4) {
        let mut c = [0i64; 4];
        let mut m = mask;
        for x in c.iter_mut() {
            *x = (m % p as usize) as i64;
            m /= p as usize;
        }
        let y = Quat(c.map(|x| Rational::new(x, p)));
        // Λ + Zy has a basis obtained by replacing one standard vector.
        let Some(k) = (0..4).rev().find(|&k| c[k] % p != 0) else { continue };
        let mut basis = std.clone();
        basis[k] = y.clone();
        if lattice_closed(ring, &basis) {
            return Some(y);
        }
    }
    None
}

/// `c(m) = det(m) ᵗm⁻¹`.
pub fn cofactor(m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let inv = m.inverse().ok_or_else(|| Error::Domain("m is singular".into()))?;
    Ok(inv.transpose().scale(&m.determinant()))
}

/// `T' = m⁻¹ T c(m)`.
pub fn suborder_form(t: TernaryForm, m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let c = cofactor(m)?;
    Ok(m.inverse().expect("checked").mul(&t.half_matrix()).mul(&c))
}

pub fn is_half_integral(t: &Matrix<Rational>) -> bool {
    TernaryForm::from_half_matrix(t).is_some()
}

/// `m` integral and `m⁻¹ T c(m)` half-integral.
pub fn suborder_test(t: TernaryForm, m: &Matrix<Rational>) -> Result<bool> {
    let tp = suborder_form(t, m)?;
    Ok(m.is_integral() && is_half_integral(&tp))
}

/// `w_i = Σ_j m_ji v_j`.
pub fn sub_basis(m: &Matrix<Rational>) -> [Quat<Rational>; 3] {
    std::array::from_fn(|i| Quat([Rational::zero(), m.get(0, i).clone(), m.get(1, i).clone(), m.get(2, i).clone()]))
}

/// Upper-triangular Hermite normal forms of determinant `det`: positive
/// diagonal, `0 ≤ m_ij < m_ii` for `j > i`.
pub fn hnf_matrices(det: i64) -> Vec<Matrix<Rational>> {
    let mut out = Vec::new();
    for d1 in 1..=det {
        if det % d1 != 0 {
            continue;
        }
        for d2 in 1..=det / d1 {
            if (det / d1) % d2 != 0 {
                continue;
            }
            let d3 = det / d1 / d2;
            for m12 in 0..d1 {
                for m13 in 0..d1 {
                    for m23 in 0..d2 {
                        out.push(Matrix::from_i64(3, 3, &[d1, m12, m13, 0, d2, m23, 0, 0, d3]));
                    }
                }
            }
        }
    }
    out
}

/// A suborder `Λ_T(m)` with its index and good-basis form.
#[derive(Clone, PartialEq, Debug)]
pub struct Suborder {
    pub hnf: Matrix<Rational>,
    pub index: i64,
    pub form: TernaryForm,
}

/// All `Λ_T(m) ⊆ Λ_T` with `m` in HNF and `det(m) ≤ bound`, ordered by
/// index and then HNF entries.
pub fn enumerate_suborders(t: TernaryForm, bound: i64) -> Vec<Suborder> {
    enumerate_suborders_with(t, bound, Execution::default())
}

pub fn enumerate_suborders_with(t: TernaryForm, bound: i64, exec: Execution) -> Vec<Suborder> {
    let cands: Vec<(i64, Matrix<Rational>)> =
        (1..=bound).flat_map(|d| hnf_matrices(d).into_iter().map(move |m| (d, m))).collect();
    par::map(exec, &cands, |(d, m)| {
        let tp = suborder_form(t, m).expect("HNF matrices are invertible");
        TernaryForm::from_half_matrix(&tp).map(|form| Suborder { hnf: m.clone(), index: *d, form })
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Integer vectors with `q(x) ≤ bound`, excluding 0.
pub fn short_vectors(t: TernaryForm, bound: i64) -> Vec<[i64; 3]> {
    let h = t.half_matrix();
    let inv = h.inverse().expect("definite");
    let lim: Vec<i64> = (0..3).map(|i| ((bound as f64) * inv.get(i, i).to_f64()).sqrt().floor() as i64 + 1).collect();
    let mut out = Vec::new();
    for x in -lim[0]..=lim[0] {
        for y in -lim[1]..=lim[1] {
            for z in -lim[2]..=lim[2] {
                if (x, y, z) != (0, 0, 0) && t.eval(x, y, z) <= bound {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

fn bil(t: TernaryForm, x: [i64; 3], y: [i64; 3]) -> i64 {
    t.eval(x[0] + y[0], x[1] + y[1], x[2] + y[2]) - t.eval(x[0], x[1], x[2]) - t.eval(y[0], y[1], y[2])
}

fn det3(r: [[i64; 3]; 3]) -> i64 {
    r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
}

/// The form with Gram rows `R T Rᵗ`.
fn transform(t: TernaryForm, r: [[i64; 3]; 3]) -> TernaryForm {
    TernaryForm::new(
        t.eval(r[0][0], r[0][1], r[0][2]),
        t.eval(r[1][0], r[1][1], r[1][2]),
        t.eval(r[2][0], r[2][1], r[2][2]),
        bil(t, r[1], r[2]),
        bil(t, r[2], r[0]),
        bil(t, r[0], r[1]),
    )
}

/// `k ∈ GL3(Z)` with `det(k) k⁻¹ T1 c(k) = T2`, if any.
pub fn forms_equivalent(t1: TernaryForm, t2: TernaryForm) -> Result<Option<Matrix<Rational>>> {
    for t in [t1, t2] {
        if !t.is_positive_definite() {
            return Err(Error::Domain(format!("form {t} is not positive definite")));
        }
    }
    if t1.four_det() != t2.four_det() {
        return Ok(None);
    }
    let bound = t2.diagonal().into_iter().max().unwrap();
    let sv = short_vectors(t1, bound);
    let with_norm = |n: i64| sv.iter().copied().filter(move |x| t1.eval(x[0], x[1], x[2]) == n);
    for r1 in with_norm(t2.a) {
        for r2 in with_norm(t2.b) {
            if bil(t1, r1, r2) != t2.f {
                continue;
            }
            for r3 in with_norm(t2.c) {
                let r = [r1, r2, r3];
                if bil(t1, r2, r3) == t2.d && bil(t1, r3, r1) == t2.e && det3(r).abs() == 1 {
                    let rm = Matrix::from_i64(3, 3, &r.concat());
                    return Ok(Some(rm.inverse().expect("unimodular")));
                }
            }
        }
    }
    Ok(None)
}

/// Lexicographically least form in the `GL3(Z)` class of a definite `T`.
pub fn canonical_form(t: TernaryForm) -> Result<TernaryForm> {
    if !t.is_positive_definite() {
        return Err(Error::Domain(format!("form {t} is not positive definite")));
    }
    let bound = t.diagonal().into_iter().max().unwrap();
    let mut sv = short_vectors(t, bound);
    sv.sort_by_key(|x| t.eval(x[0], x[1], x[2]));
    let norm = |x: &[i64; 3]| t.eval(x[0], x[1], x[2]);
    let mut best: Option<TernaryForm> = None;
    let better = |cand: &[i64], best: &Option<TernaryForm>| best.is_none_or(|b| cand < &b.to_array()[..cand.len()]);
    let lambda1 = norm(&sv[0]);
    for r1 in sv.iter().take_while(|x| norm(x) == lambda1) {
        for r2 in &sv {
            let pre2 = [lambda1, norm(r2)];
            if !better(&pre2, &best) && best.is_some_and(|b| pre2 != b.to_array()[..2]) {
                break;
            }
            for r3 in &sv {
                let pre3 = [lambda1, norm(r2), norm(r3)];
                if best.is_some_and(|b| pre3[..] > b.to_array()[..3]) {
                    break;
                }
                let r = [*r1, *r2, *r3];
                if det3(r).abs() != 1 {
                    continue;
                }
                let f = transform(t, r);
                if best.is_none_or(|b| f.to_array() < b.to_array()) {
                    best = Some(f);
                }
            }
        }
    }
    Ok(best.expect("the identity basis is among the candidates"))
}

/// Coefficients `a(T)` keyed by canonical class representative.
#[derive(Clone, Default, Debug, PartialEq)]
pub struct CoefficientTable {
    map: BTreeMap<TernaryForm, Rational>,
}

impl CoefficientTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: TernaryForm, value: Rational) -> Result<()> {
        self.map.insert(canonical_form(t)?, value);
        Ok(())
    }

    pub fn get(&self, t: TernaryForm) -> Result<Rational> {
        let c = canonical_form(t)?;
        self.map.get(&c).cloned().ok_or_else(|| Error::MissingCoefficient(c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TernaryForm, &Rational)> {
        self.map.iter()
    }
}

impl FromStr for CoefficientTable {
    type Err = Error;

    /// Lines `a b c d e f value`; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut table = CoefficientTable::new();
        for (no, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 7 {
                return Err(Error::Parse(format!("line {}: expected 7 fields, got {}", no + 1, parts.len())));
            }
            let form: TernaryForm = parts[..6].join(" ").parse()?;
            let value: Rational = parts[6].parse()?;
            table.insert(form, value).map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
        }
        Ok(table)
    }
}

impl fmt::Display for CoefficientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in &self.map {
            writeln!(f, "{t} {v}")?;
        }
        Ok(())
    }
}

/// Coefficient of `n^{-s}` in `Σ_{λ, O} a(Z + λO) / (λ^s [B0:O]^{s-2r+3})`
/// for `n = 1..=max_n`, where `Z + λO` has good-basis form `λ T_O`.
pub fn dirichlet_coefficients(t: TernaryForm, weight: i64, table: &CoefficientTable, max_n: i64) -> Result<Vec<(i64, Rational)>> {
    if !t.is_positive_definite() {
        return Err(Error::Domain(format!("form {t} is not positive definite")));
    }
    let subs = enumerate_suborders(t, max_n.max(1));
    let mut out: Vec<(i64, Rational)> = (1..=max_n).map(|n| (n, Rational::zero())).collect();
    for o in &subs {
        let kpow = Rational::from(o.index).pow((weight - 3) as i32);
        for lambda in 1..=max_n / o.index {
            let n = lambda * o.index;
            let a = table.get(o.form.scale(lambda))?;
            let slot = &mut out[(n - 1) as usize].1;
            *slot = &*slot + &(&a * &kpow);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn forced_table_matches_reduction() {
        for t in [TernaryForm::hamilton(), TernaryForm::hurwitz(), TernaryForm::new(2, 3, 5, 1, -1, 4), TernaryForm::new(0, 1, 0, 1, 1, 0)] {
            assert_eq!(&forced_table(t), QuaternionRing::from_form(t).table(), "{t}");
        }
    }

    #[test]
    fn discriminants_and_maximality() {
        assert_eq!(reduced_discriminant(TernaryForm::hurwitz()), 2);
        assert!(is_maximal(TernaryForm::hurwitz()).unwrap());
        assert_eq!(reduced_discriminant(TernaryForm::hamilton()), 4);
        assert!(!is_maximal(TernaryForm::hamilton()).unwrap());
        assert!(!is_maximal(TernaryForm::new(1, 1, 2, 0, 0, 0)).unwrap());
        assert_eq!(ramified_primes(TernaryForm::hamilton()).unwrap(), vec![2]);
        let ring = QuaternionRing::from_form(TernaryForm::hamilton());
        assert!(superorder_witness(&ring, 2).is_some());
        assert!(superorder_witness(&QuaternionRing::from_form(TernaryForm::hurwitz()), 2).is_none());
    }

    #[test]
    fn suborder_examples() {
        let t = TernaryForm::hamilton();
        let m = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2]);
        assert!(suborder_test(t, &m).unwrap());
        assert_eq!(TernaryForm::from_half_matrix(&suborder_form(t, &m).unwrap()), Some(TernaryForm::new(4, 1, 1, 0, 0, 0)));
        let m = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        assert!(!suborder_test(t, &m).unwrap());
        assert_eq!(hnf_matrices(2).len(), 7);
        assert_eq!(enumerate_suborders(t, 1).len(), 1);
    }

    #[test]
    fn transformed_a_is_the_good_a() {
        let ring = QuaternionRing::shared(TernaryForm::hamilton());
        let j = JordanAlgebra::new(ring.clone());
        let m = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2]);
        let a = transformed_a_matrix(&j, &m).unwrap();
        assert_eq!(a, good_a_matrix(&ring, &sub_basis(&m)).unwrap());
        assert!(in_j_t(&a));
        assert_eq!(a.c, [4, 1, 1].map(Rational::from));
        let m = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        assert!(!in_j_t(&transformed_a_matrix(&j, &m).unwrap()));
    }

    #[test]
    fn good_basis_shift_recovers() {
        let ring = QuaternionRing::from_form(TernaryForm::hurwitz());
        let w = [1, 2, 3].map(|i| Quat::<Rational>::basis(i).add(&Quat::scalar(r(i as i64))));
        let sc = StructureConstants::from_basis(&ring, &w).unwrap();
        assert_eq!(good_basis_shift(&sc).unwrap(), [r(1), r(2), r(3)]);
        assert_eq!(extract_form(&ring), TernaryForm::hurwitz());
    }

    #[test]
    fn equivalence_and_canonical() {
        let t = TernaryForm::hurwitz();
        assert!(forms_equivalent(t, t).unwrap().is_some());
        assert!(forms_equivalent(TernaryForm::hamilton(), t).unwrap().is_none());
        let c = canonical_form(t).unwrap();
        assert!(forms_equivalent(t, c).unwrap().is_some());
        assert_eq!(canonical_form(c).unwrap(), c);
    }

    #[test]
    fn hilbert_symbols() {
        assert_eq!(hilbert_symbol(-1, -1, 2), -1);
        assert_eq!(hilbert_symbol(-1, -1, 3), 1);
        assert_eq!(hilbert_symbol(2, 3, 3), -1);
        assert_eq!(hilbert_symbol(-1, -3, 3), -1);
    }
}
