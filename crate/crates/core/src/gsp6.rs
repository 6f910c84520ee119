//! `GSp6` as 6×6 matrices and its embedding into `G` through
//! `(∧³W6 ⊗ ν⁻¹) ⊗ B`.
//!
//! `W6` has the symplectic basis `e1, e2, e3, f1, f2, f3` with
//! `⟨e_i, f_j⟩ = δ_ij`; matrices act on row vectors, so `g J6 gᵗ = ν J6`.
//! `W` sits in `∧³W6 ⊗ B` as
//!
//! ```text
//! a e1∧e2∧e3 + Σ b_ij e_i*∧f_j + Σ c_ij f_i*∧e_j + d f1∧f2∧f3
//! ```
//!
//! with `e_i* = e_{i+1}∧e_{i+2}`, `f_i* = f_{i+1}∧f_{i+2}` (indices mod 3).

use crate::clifford;
use crate::error::{Error, Result};
use crate::freudenthal::{Freudenthal, GroupElement, WElement, W_DIM};
use crate::jordan::{JElement, QuatMatrix};
use crate::matrix::Matrix;
use crate::quat::{Quat, TernaryForm};
use crate::scalar::{Gaussian, Rational, Scalar};

/// Lexicographic 3-subsets of `0..6`, the basis of `∧³W6`.
pub const WEDGE_DIM: usize = 20;

pub fn wedge_basis() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(WEDGE_DIM);
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Index and sign of `x_i ∧ x_j ∧ x_k` in the wedge basis.
fn wedge_index(i: usize, j: usize, k: usize) -> Option<(usize, i64)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut sign = 1;
    for p in 0..3 {
        for q in 0..2 - p {
            if v[q] > v[q + 1] {
                v.swap(q, q + 1);
                sign = -sign;
            }
        }
    }
    let idx = wedge_basis().iter().position(|s| *s == v).expect("sorted subset");
    Some((idx, sign))
}

#[derive(Clone, Copy)]
enum Slot {
    A,
    B(usize, usize),
    C(usize, usize),
    D,
}

/// Where each `W` slot lands: `(slot, wedge index, sign)`, 20 entries.
fn slot_table() -> Vec<(Slot, usize, i64)> {
    let e = |i: usize| i % 3;
    let f = |i: usize| 3 + i % 3;
    let mut t = Vec::with_capacity(WEDGE_DIM);
    let (ia, sa) = wedge_index(0, 1, 2).unwrap();
    t.push((Slot::A, ia, sa));
    for i in 0..3 {
        for j in 0..3 {
            let (k, s) = wedge_index(e(i + 1), e(i + 2), f(j)).unwrap();
            t.push((Slot::B(i, j), k, s));
            let (k, s) = wedge_index(f(i + 1), f(i + 2), e(j)).unwrap();
            t.push((Slot::C(i, j), k, s));
        }
    }
    let (id, sd) = wedge_index(3, 4, 5).unwrap();
    t.push((Slot::D, id, sd));
    t
}

/// Element of `∧³W6 ⊗ B`: one quaternion per wedge basis vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Wedge3<F>(pub Vec<Quat<F>>);

impl<F: Scalar> Wedge3<F> {
    pub fn zero() -> Self {
        Wedge3(vec![Quat::zero(); WEDGE_DIM])
    }
}

pub fn embed_w<F: Scalar>(w: &Freudenthal, v: &WElement<F>) -> Wedge3<F> {
    let j = w.jordan();
    let (b, c) = (j.to_matrix(&v.b), j.to_matrix(&v.c));
    let mut out = Wedge3::zero();
    for (slot, k, s) in slot_table() {
        let q = match slot {
            Slot::A => Quat::scalar(v.a.clone()),
            Slot::B(i, jj) => b.0[i][jj].clone(),
            Slot::C(i, jj) => c.0[i][jj].clone(),
            Slot::D => Quat::scalar(v.d.clone()),
        };
        out.0[k] = q.scale(&F::from_i64(s));
    }
    out
}

pub fn project_w<F: Scalar>(w: &Freudenthal, x: &Wedge3<F>) -> Result<WElement<F>> {
    let mut a = Quat::zero();
    let mut d = Quat::zero();
    let mut b = QuatMatrix::zero();
    let mut c = QuatMatrix::zero();
    for (slot, k, s) in slot_table() {
        let q = x.0[k].scale(&F::from_i64(s));
        match slot {
            Slot::A => a = q,
            Slot::B(i, j) => b.0[i][j] = q,
            Slot::C(i, j) => c.0[i][j] = q,
            Slot::D => d = q,
        }
    }
    if !a.is_scalar() || !d.is_scalar() {
        return Err(Error::NotInImage("e1∧e2∧e3 or f1∧f2∧f3 coefficient is not a scalar".into()));
    }
    let j = w.jordan();
    let b = j.from_matrix(&b).ok_or_else(|| Error::NotInImage("b-block is not Hermitian".into()))?;
    let c = j.from_matrix(&c).ok_or_else(|| Error::NotInImage("c-block is not Hermitian".into()))?;
    Ok(WElement { a: a.0[0].clone(), b, c, d: d.0[0].clone() })
}

/// An element of `GSp6(Q)` with its similitude.
#[derive(Clone, PartialEq, Debug)]
pub struct GSp6Element {
    g: Matrix<Rational>,
    nu: Rational,
}

/// `J6 = [[0, 1], [-1, 0]]` in 3×3 blocks.
pub fn j6_form() -> Matrix<Rational> {
    Matrix::from_fn(6, 6, |i, j| {
        if j == i + 3 {
            Rational::one()
        } else if i == j + 3 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

impl GSp6Element {
    /// Checks `g J6 gᵗ = ν J6` with `ν ≠ 0`.
    pub fn new(g: Matrix<Rational>) -> Result<Self> {
        if g.rows() != 6 || g.cols() != 6 {
            return Err(Error::Domain("GSp6 elements are 6x6".into()));
        }
        let j = j6_form();
        let p = g.mul(&j).mul(&g.transpose());
        let nu = p.get(0, 3).clone();
        if nu.is_zero() || p != j.scale(&nu) {
            return Err(Error::Domain("matrix is not a symplectic similitude".into()));
        }
        Ok(GSp6Element { g, nu })
    }

    pub fn from_blocks(a: &Matrix<Rational>, b: &Matrix<Rational>, c: &Matrix<Rational>, d: &Matrix<Rational>) -> Result<Self> {
        let g = Matrix::from_fn(6, 6, |i, j| {
            let m = match (i < 3, j < 3) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            m.get(i % 3, j % 3).clone()
        });
        Self::new(g)
    }

    pub fn identity() -> Self {
        GSp6Element { g: Matrix::identity(6), nu: Rational::one() }
    }

    /// `[[0, 1], [-1, 0]]`.
    pub fn j6() -> Self {
        GSp6Element { g: j6_form(), nu: Rational::one() }
    }

    /// `[[1, u], [0, 1]]` for symmetric `u`.
    pub fn unipotent(u: &Matrix<Rational>) -> Result<Self> {
        let (z, one) = (Matrix::zeros(3, 3), Matrix::identity(3));
        Self::from_blocks(&one, u, &z, &one)
    }

    /// `[[1, 0], [u, 1]]` for symmetric `u`.
    pub fn lower_unipotent(u: &Matrix<Rational>) -> Result<Self> {
        let (z, one) = (Matrix::zeros(3, 3), Matrix::identity(3));
        Self::from_blocks(&one, &z, u, &one)
    }

    /// `(λ, m) = [[λ det(m) ᵗm⁻¹, 0], [0, m]]`, similitude `λ det(m)`.
    pub fn levi(lambda: &Rational, m: &Matrix<Rational>) -> Result<Self> {
        let det = m.determinant();
        if lambda.is_zero() || det.is_zero() {
            return Err(Error::Domain("levi needs λ ≠ 0 and det(m) ≠ 0".into()));
        }
        let top = m.inverse().expect("det ≠ 0").transpose().scale(&(lambda * &det));
        let z = Matrix::zeros(3, 3);
        Self::from_blocks(&top, &z, &z, m)
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.g
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    pub fn block(&self, r: usize, c: usize) -> Matrix<Rational> {
        Matrix::from_fn(3, 3, |i, j| self.g.get(3 * r + i, 3 * c + j).clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        GSp6Element { g: self.g.mul(&o.g), nu: &self.nu * &o.nu }
    }

    pub fn inverse(&self) -> Self {
        GSp6Element { g: self.g.inverse().expect("invertible"), nu: self.nu.inv().expect("ν ≠ 0") }
    }

    /// Block upper-triangular.
    pub fn is_siegel_parabolic(&self) -> bool {
        self.block(1, 0).is_zero()
    }

    /// `∧³g`: entry `(I, J)` is the minor of `g` on rows `I`, columns `J`.
    pub fn wedge3(&self) -> Matrix<Rational> {
        let basis = wedge_basis();
        Matrix::from_fn(WEDGE_DIM, WEDGE_DIM, |p, q| {
            let (r, c) = (basis[p], basis[q]);
            Matrix::from_fn(3, 3, |i, j| self.g.get(r[i], c[j]).clone()).determinant()
        })
    }

    /// `gZ = (AZ + B)(CZ + D)⁻¹` and `j = ν⁻² det(CZ + D)` for `Z` in the
    /// scalar Siegel space.
    pub fn siegel_act(&self, z: &Matrix<Gaussian>) -> Result<(Gaussian, Matrix<Gaussian>)> {
        let lift = |m: Matrix<Rational>| m.map(|x| Gaussian::real(x.clone()));
        let (a, b, c, d) = (lift(self.block(0, 0)), lift(self.block(0, 1)), lift(self.block(1, 0)), lift(self.block(1, 1)));
        let den = c.mul(z).add(&d);
        let inv = den.inverse().ok_or_else(|| Error::DegeneratePoint("CZ + D is singular".into()))?;
        let nu = Gaussian::real(self.nu.clone());
        let j = den.determinant().div(&nu.mul(&nu)).expect("ν ≠ 0");
        Ok((j, a.mul(z).add(&b).mul(&inv)))
    }
}

/// The 32×32 matrix of `g` on `W ⊂ (∧³W6 ⊗ ν⁻¹) ⊗ B`. Fails if the image of
/// `W` is not preserved.
pub fn iota_matrix(w: &Freudenthal, g: &GSp6Element) -> Result<Matrix<Rational>> {
    let wedge = g.wedge3();
    let nu_inv = g.nu.inv().expect("ν ≠ 0");
    let mut rows = Vec::with_capacity(W_DIM);
    for k in 0..W_DIM {
        let x = embed_w(w, &WElement::<Rational>::basis(k));
        let mut y = Wedge3::zero();
        for (p, xp) in x.0.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for q in 0..WEDGE_DIM {
                let m = wedge.get(p, q);
                if !m.is_zero() {
                    y.0[q].add_assign(&xp.scale(&(m * &nu_inv)));
                }
            }
        }
        let v = project_w(w, &y).map_err(|e| Error::Internal(format!("ι(g) leaves W: {e}")))?;
        rows.push(v.coords());
    }
    Ok(Matrix::from_rows(rows))
}

/// `ι(g)` certified as an element of `G`, with `ν(ι(g)) = ν(g)`.
pub fn iota(w: &Freudenthal, g: &GSp6Element) -> Result<GroupElement> {
    let e = w.certify(iota_matrix(w, g)?).map_err(|e| Error::Internal(format!("ι(g) is not in G: {e}")))?;
    if e.nu() != g.nu() {
        return Err(Error::Internal(format!("ν(ι(g)) = {} but ν(g) = {}", e.nu(), g.nu())));
    }
    Ok(e)
}

/// `ι(g)` with `ν(g)` attached, image-checked but not certified. The
/// embedding suite certifies `ι` separately.
pub fn iota_trusted(w: &Freudenthal, g: &GSp6Element) -> Result<GroupElement> {
    Ok(GroupElement::trusted(iota_matrix(w, g)?, g.nu.clone()))
}

/// `m X` and `X m` for a scalar matrix `m` and a quaternion matrix `X`.
pub fn scalar_left<F: Scalar>(m: &Matrix<F>, x: &QuatMatrix<F>) -> QuatMatrix<F> {
    QuatMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = Quat::zero();
            for k in 0..3 {
                s.add_assign(&x.0[k][j].scale(m.get(i, k)));
            }
            s
        })
    }))
}

pub fn scalar_right<F: Scalar>(x: &QuatMatrix<F>, m: &Matrix<F>) -> QuatMatrix<F> {
    QuatMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut s = Quat::zero();
            for k in 0..3 {
                s.add_assign(&x.0[i][k].scale(m.get(k, j)));
            }
            s
        })
    }))
}

/// `(a, b, c, d) diag(m, n) = ν⁻¹(det(m) a, det(m) m⁻¹ b n, det(n) n⁻¹ c m, det(n) d)`.
pub fn levi_formula(w: &Freudenthal, g: &GSp6Element, v: &WElement<Rational>) -> Result<WElement<Rational>> {
    if !g.block(0, 1).is_zero() || !g.block(1, 0).is_zero() {
        return Err(Error::Precondition("not block diagonal".into()));
    }
    let (m, n) = (g.block(0, 0), g.block(1, 1));
    let (dm, dn) = (m.determinant(), n.determinant());
    let nu_inv = g.nu.inv().expect("ν ≠ 0");
    let j = w.jordan();
    let b = scalar_right(&scalar_left(&m.inverse().unwrap(), &j.to_matrix(&v.b)), &n);
    let c = scalar_right(&scalar_left(&n.inverse().unwrap(), &j.to_matrix(&v.c)), &m);
    let b = j.from_matrix(&b).ok_or_else(|| Error::Internal("b-image not Hermitian".into()))?;
    let c = j.from_matrix(&c).ok_or_else(|| Error::Internal("c-image not Hermitian".into()))?;
    Ok(WElement {
        a: &(&dm * &v.a) * &nu_inv,
        b: b.scale(&(&dm * &nu_inv)),
        c: c.scale(&(&dn * &nu_inv)),
        d: &(&dn * &v.d) * &nu_inv,
    })
}

/// `c(m) = det(m) ᵗm⁻¹`.
pub fn cofactor(m: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    Some(m.inverse()?.transpose().scale(&m.determinant()))
}

/// `f_O = (0, 0, A(T), 0)`.
pub fn f_o(w: &Freudenthal) -> WElement<Rational> {
    WElement { a: Rational::zero(), b: JElement::zero(), c: clifford::a_matrix(w.ring()), d: Rational::zero() }
}

/// `f_O u M` for `u = [[1, u], [0, 1]]` and `M = (λ, m)`, checked against
/// the closed form `(0, 0, m⁻¹ A(T) c(m), tr(Tu)/λ)`.
pub fn f_o_action(w: &Freudenthal, u: &Matrix<Rational>, lambda: &Rational, m: &Matrix<Rational>) -> Result<WElement<Rational>> {
    let un = iota_matrix(w, &GSp6Element::unipotent(u)?)?;
    let lv = iota_matrix(w, &GSp6Element::levi(lambda, m)?)?;
    let fo = f_o(w);
    let got = WElement::from_coords(&lv.vec_mul(&un.vec_mul(&fo.coords())));
    let c = clifford::transformed_a_matrix(w.jordan(), m)?;
    let t = w.ring().form().half_matrix();
    let d = &t.mul(u).entries().iter().step_by(4).fold(Rational::zero(), |s, x| &s + x) / lambda;
    let want = WElement { a: Rational::zero(), b: JElement::zero(), c, d };
    if got != want {
        return Err(Error::Internal(format!("f_O action mismatch: got {got}, closed form {want}")));
    }
    Ok(got)
}

/// 1 iff `λ ∈ Z`, `m` is integral and `m⁻¹ T c(m)` is half-integral.
pub fn xi_indicator(t: TernaryForm, lambda: &Rational, m: &Matrix<Rational>) -> u8 {
    let ok = lambda.is_integer() && m.is_integral() && clifford::suborder_test(t, m).unwrap_or(false);
    ok as u8
}

/// `f_O ι(g) ∈ Q f_O`.
pub fn stabilizes_line(w: &Freudenthal, g: &GSp6Element) -> Result<bool> {
    let fo = f_o(w);
    let img = WElement::from_coords(&iota_matrix(w, g)?.vec_mul(&fo.coords()));
    Ok(img.is_multiple_of(&fo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::QuaternionRing;

    fn space() -> Freudenthal {
        Freudenthal::new(QuaternionRing::shared(TernaryForm::hurwitz()))
    }

    #[test]
    fn embed_roundtrip_and_e() {
        let w = space();
        let e = embed_w(&w, &WElement::<Rational>::e());
        assert_eq!(e.0[0], Quat::one());
        assert!(e.0[1..].iter().all(Quat::is_zero));
        let v = WElement::from_coords(&(0..32).map(|k| Rational::new(k as i64 - 7, 3)).collect::<Vec<_>>());
        assert_eq!(project_w(&w, &embed_w(&w, &v)).unwrap(), v);
    }

    #[test]
    fn iota_of_generators() {
        let w = space();
        let jm = iota_matrix(&w, &GSp6Element::j6()).unwrap();
        assert_eq!(&jm, w.op_j().unwrap().matrix());
        let u = Matrix::from_i64(3, 3, &[1, 2, 0, 2, -1, 3, 0, 3, 5]);
        let n = iota_matrix(&w, &GSp6Element::unipotent(&u).unwrap()).unwrap();
        assert_eq!(n, w.n_matrix(&JElement::from_symmetric(&u)));
        let g = GSp6Element::levi(&Rational::one(), &Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2])).unwrap();
        assert_eq!(g.nu(), &Rational::from(4));
        let v = WElement::from_coords(&(0..32).map(|k| Rational::from(k as i64 % 7 - 3)).collect::<Vec<_>>());
        let lm = iota_matrix(&w, &g).unwrap();
        assert_eq!(WElement::from_coords(&lm.vec_mul(&v.coords())), levi_formula(&w, &g, &v).unwrap());
        assert_eq!(iota(&w, &g).unwrap().nu(), &Rational::from(4));
    }

    #[test]
    fn f_o_examples() {
        let w = space();
        let one = Matrix::identity(3);
        let r = f_o_action(&w, &one, &Rational::one(), &one).unwrap();
        assert_eq!(r.d, Rational::from(3));
        assert_eq!(xi_indicator(TernaryForm::hamilton(), &Rational::one(), &Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2])), 0);
        assert!(!stabilizes_line(&w, &GSp6Element::j6()).unwrap());
    }
}
