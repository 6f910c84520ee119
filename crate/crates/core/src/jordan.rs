//! The cubic Jordan algebra `H3(B)` of Hermitian 3×3 matrices over a
//! quaternion ring.
//!
//! An element stores `c1, c2, c3` on the diagonal and `a1, a2, a3` above it:
//!
//! ```text
//! [ c1   a3   a2* ]
//! [ a3*  c2   a1  ]
//! [ a2   a1*  c3  ]
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quat::{Quat, QuaternionRing};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct JElement<F> {
    pub c: [F; 3],
    pub a: [Quat<F>; 3],
}

/// Number of rational coordinates of a [`JElement`].
pub const J_DIM: usize = 15;

impl<F: Scalar> JElement<F> {
    pub fn zero() -> Self {
        JElement { c: std::array::from_fn(|_| F::zero()), a: std::array::from_fn(|_| Quat::zero()) }
    }

    pub fn scalar(t: F) -> Self {
        Self::diagonal([t.clone(), t.clone(), t])
    }

    pub fn identity() -> Self {
        Self::scalar(F::one())
    }

    pub fn diagonal(c: [F; 3]) -> Self {
        JElement { c, a: std::array::from_fn(|_| Quat::zero()) }
    }

    /// The `k`-th coordinate vector in the order `c1, c2, c3, a1, a2, a3`.
    pub fn basis(k: usize) -> Self {
        let mut v = vec![F::zero(); J_DIM];
        v[k] = F::one();
        Self::from_coords(&v)
    }

    pub fn coords(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(J_DIM);
        v.extend(self.c.iter().cloned());
        for q in &self.a {
            v.extend(q.0.iter().cloned());
        }
        v
    }

    pub fn from_coords(v: &[F]) -> Self {
        assert_eq!(v.len(), J_DIM);
        JElement {
            c: std::array::from_fn(|i| v[i].clone()),
            a: std::array::from_fn(|i| Quat(std::array::from_fn(|k| v[3 + 4 * i + k].clone()))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(F::is_zero) && self.a.iter().all(Quat::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        JElement {
            c: std::array::from_fn(|i| self.c[i].add(&o.c[i])),
            a: std::array::from_fn(|i| self.a[i].add(&o.a[i])),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        JElement {
            c: std::array::from_fn(|i| self.c[i].sub(&o.c[i])),
            a: std::array::from_fn(|i| self.a[i].sub(&o.a[i])),
        }
    }

    pub fn neg(&self) -> Self {
        JElement { c: std::array::from_fn(|i| self.c[i].neg()), a: std::array::from_fn(|i| self.a[i].neg()) }
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_one() {
            return self.clone();
        }
        JElement {
            c: std::array::from_fn(|i| self.c[i].mul(k)),
            a: std::array::from_fn(|i| self.a[i].scale(k)),
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            if !y.is_zero() {
                x.add_assign(y);
            }
        }
        for (x, y) in self.a.iter_mut().zip(&o.a) {
            x.add_assign(y);
        }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> JElement<G> {
        JElement { c: std::array::from_fn(|i| f(&self.c[i])), a: std::array::from_fn(|i| self.a[i].map(&f)) }
    }

    /// `tr(h) = c1 + c2 + c3`.
    pub fn trace(&self) -> F {
        self.c[0].add(&self.c[1]).add(&self.c[2])
    }

    /// All off-diagonal entries lie in `F·1`, i.e. `h` is a symmetric
    /// matrix over the scalars.
    pub fn is_scalar_matrix(&self) -> bool {
        self.a.iter().all(Quat::is_scalar)
    }

    /// The symmetric 3×3 scalar matrix of an element with scalar
    /// off-diagonal entries.
    pub fn to_symmetric(&self) -> Option<Matrix<F>> {
        if !self.is_scalar_matrix() {
            return None;
        }
        let [c1, c2, c3] = self.c.clone();
        let [a1, a2, a3] = [0, 1, 2].map(|i| self.a[i].0[0].clone());
        Some(Matrix::from_rows(vec![
            vec![c1, a3.clone(), a2.clone()],
            vec![a3, c2, a1.clone()],
            vec![a2, a1, c3],
        ]))
    }

    /// Embeds a symmetric scalar matrix. Panics if `m` is not symmetric.
    pub fn from_symmetric(m: &Matrix<F>) -> Self {
        assert!(m.rows() == 3 && *m == m.transpose(), "not a symmetric 3x3 matrix");
        JElement {
            c: std::array::from_fn(|i| m.get(i, i).clone()),
            a: [
                Quat::scalar(m.get(1, 2).clone()),
                Quat::scalar(m.get(2, 0).clone()),
                Quat::scalar(m.get(0, 1).clone()),
            ],
        }
    }
}

impl<F: Scalar> fmt::Display for JElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl<F: Scalar + FromStr<Err = Error>> FromStr for JElement<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s.split_whitespace().map(str::parse).collect::<Result<Vec<F>>>()?;
        if v.len() != J_DIM {
            return Err(Error::Parse(format!("a Jordan element needs {J_DIM} coordinates, got {}", v.len())));
        }
        Ok(Self::from_coords(&v))
    }
}

/// Full 3×3 matrix over the quaternion ring, used for `M3(B)` identities.
#[derive(Clone, PartialEq, Debug)]
pub struct QuatMatrix<F>(pub [[Quat<F>; 3]; 3]);

impl<F: Scalar> QuatMatrix<F> {
    pub fn zero() -> Self {
        QuatMatrix(std::array::from_fn(|_| std::array::from_fn(|_| Quat::zero())))
    }

    pub fn scalar(t: F) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][i] = Quat::scalar(t.clone());
        }
        m
    }

    pub fn identity() -> Self {
        Self::scalar(F::one())
    }

    /// A matrix with scalar entries.
    pub fn from_scalars(m: &Matrix<F>) -> Self {
        QuatMatrix(std::array::from_fn(|i| std::array::from_fn(|j| Quat::scalar(m.get(i, j).clone()))))
    }

    pub fn diagonal(d: [Quat<F>; 3]) -> Self {
        let mut m = Self::zero();
        for (i, q) in d.into_iter().enumerate() {
            m.0[i][i] = q;
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        QuatMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].add(&o.0[i][j]))))
    }

    pub fn scale(&self, k: &F) -> Self {
        QuatMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].scale(k))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Quat::is_zero)
    }
}

/// `H3(B)` over a fixed quaternion ring.
#[derive(Clone, Debug)]
pub struct JordanAlgebra {
    ring: Arc<QuaternionRing>,
}

impl JordanAlgebra {
    pub fn new(ring: Arc<QuaternionRing>) -> Self {
        JordanAlgebra { ring }
    }

    pub fn ring(&self) -> &Arc<QuaternionRing> {
        &self.ring
    }

    /// `N(h) = c1c2c3 - c1 n(a1) - c2 n(a2) - c3 n(a3) + tr(a1 a2 a3)`.
    pub fn norm<F: Scalar>(&self, h: &JElement<F>) -> F {
        let r = &*self.ring;
        let [c1, c2, c3] = &h.c;
        let [a1, a2, a3] = &h.a;
        let mut n = c1.mul(c2).mul(c3);
        for (c, a) in [(c1, a1), (c2, a2), (c3, a3)] {
            if !c.is_zero() && !a.is_zero() {
                n.sub_assign(&c.mul(&r.norm(a)));
            }
        }
        if !a1.is_zero() && !a2.is_zero() && !a3.is_zero() {
            n.add_assign(&r.trace(&r.mul(&r.mul(a1, a2), a3)));
        }
        n
    }

    /// The adjugate-like quadratic map with `h h# = N(h) 1`.
    pub fn sharp<F: Scalar>(&self, h: &JElement<F>) -> JElement<F> {
        let r = &*self.ring;
        let [c1, c2, c3] = &h.c;
        let [a1, a2, a3] = &h.a;
        // x* y* = (y x)*
        let prod_conj = |x: &Quat<F>, y: &Quat<F>| {
            if x.is_zero() || y.is_zero() {
                Quat::zero()
            } else {
                r.conj(&r.mul(y, x))
            }
        };
        JElement {
            c: [
                c2.mul(c3).sub(&r.norm(a1)),
                c1.mul(c3).sub(&r.norm(a2)),
                c1.mul(c2).sub(&r.norm(a3)),
            ],
            a: [
                prod_conj(a3, a2).sub(&a1.scale(c1)),
                prod_conj(a1, a3).sub(&a2.scale(c2)),
                prod_conj(a2, a1).sub(&a3.scale(c3)),
            ],
        }
    }

    /// `x × y = (x + y)# - x# - y#`, evaluated as a bilinear form.
    pub fn cross<F: Scalar>(&self, x: &JElement<F>, y: &JElement<F>) -> JElement<F> {
        let r = &*self.ring;
        let (xc, yc, xa, ya) = (&x.c, &y.c, &x.a, &y.a);
        let sym = |i: usize, j: usize| {
            let mut s = F::zero();
            s.add_mul(&xc[i], &yc[j]);
            s.add_mul(&xc[j], &yc[i]);
            s
        };
        let prod_conj = |p: &Quat<F>, q: &Quat<F>| {
            if p.is_zero() || q.is_zero() {
                Quat::zero()
            } else {
                r.conj(&r.mul(q, p))
            }
        };
        // polarization of a_k' = a_i* a_j* - c_k a_k
        let off = |k: usize, i: usize, j: usize| {
            let mut q = prod_conj(&xa[i], &ya[j]);
            q.add_assign(&prod_conj(&ya[i], &xa[j]));
            if !xc[k].is_zero() {
                q.sub_assign(&ya[k].scale(&xc[k]));
            }
            if !yc[k].is_zero() {
                q.sub_assign(&xa[k].scale(&yc[k]));
            }
            q
        };
        JElement {
            c: [
                sym(1, 2).sub(&r.pair(&xa[0], &ya[0])),
                sym(0, 2).sub(&r.pair(&xa[1], &ya[1])),
                sym(0, 1).sub(&r.pair(&xa[2], &ya[2])),
            ],
            a: [off(0, 2, 1), off(1, 0, 2), off(2, 1, 0)],
        }
    }

    /// `tr(x, y) = Σ x_ii y_ii + Σ_{i<j} (x_ij, y_ij)`.
    pub fn trace_pair<F: Scalar>(&self, x: &JElement<F>, y: &JElement<F>) -> F {
        let mut s = F::zero();
        for i in 0..3 {
            s.add_mul(&x.c[i], &y.c[i]);
            if !x.a[i].is_zero() && !y.a[i].is_zero() {
                s.add_assign(&self.ring.pair(&x.a[i], &y.a[i]));
            }
        }
        s
    }

    /// The symmetric trilinear form with `(x, x, x) = 6 N(x)`, by
    /// inclusion–exclusion over partial sums.
    pub fn trilinear<F: Scalar>(&self, x: &JElement<F>, y: &JElement<F>, z: &JElement<F>) -> F {
        let n = |h: &JElement<F>| self.norm(h);
        let xy = x.add(y);
        let xz = x.add(z);
        let yz = y.add(z);
        let xyz = xy.add(z);
        n(&xyz).sub(&n(&xy)).sub(&n(&xz)).sub(&n(&yz)).add(&n(x)).add(&n(y)).add(&n(z))
    }

    /// 3 if `N(h) ≠ 0`, 2 if `h# ≠ 0`, 1 if `h ≠ 0`, else 0.
    pub fn rank<F: Scalar>(&self, h: &JElement<F>) -> u8 {
        if !self.norm(h).is_zero() {
            3
        } else if !self.sharp(h).is_zero() {
            2
        } else if !h.is_zero() {
            1
        } else {
            0
        }
    }

    /// Gram matrix of the trace pairing on the 15 coordinate vectors.
    pub fn trace_gram(&self) -> Matrix<Rational> {
        let basis: Vec<JElement<Rational>> = (0..J_DIM).map(JElement::basis).collect();
        Matrix::from_fn(J_DIM, J_DIM, |i, j| self.trace_pair(&basis[i], &basis[j]))
    }

    pub fn to_matrix<F: Scalar>(&self, h: &JElement<F>) -> QuatMatrix<F> {
        let r = &*self.ring;
        let [c1, c2, c3] = h.c.clone();
        let [a1, a2, a3] = h.a.clone();
        QuatMatrix([
            [Quat::scalar(c1), a3.clone(), r.conj(&a2)],
            [r.conj(&a3), Quat::scalar(c2), a1.clone()],
            [a2, r.conj(&a1), Quat::scalar(c3)],
        ])
    }

    /// Reads a Hermitian matrix back; `None` if `m` is not Hermitian.
    pub fn from_matrix<F: Scalar>(&self, m: &QuatMatrix<F>) -> Option<JElement<F>> {
        let r = &*self.ring;
        let e = &m.0;
        if !(0..3).all(|i| e[i][i].is_scalar()) {
            return None;
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if r.conj(&e[i][j]) != e[j][i] {
                return None;
            }
        }
        Some(JElement {
            c: std::array::from_fn(|i| e[i][i].0[0].clone()),
            a: [e[1][2].clone(), e[2][0].clone(), e[0][1].clone()],
        })
    }

    pub fn mat_mul<F: Scalar>(&self, x: &QuatMatrix<F>, y: &QuatMatrix<F>) -> QuatMatrix<F> {
        let r = &*self.ring;
        QuatMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut s = Quat::zero();
                for k in 0..3 {
                    if !x.0[i][k].is_zero() && !y.0[k][j].is_zero() {
                        s.add_assign(&r.mul(&x.0[i][k], &y.0[k][j]));
                    }
                }
                s
            })
        }))
    }

    /// Conjugate transpose `m*`.
    pub fn mat_star<F: Scalar>(&self, m: &QuatMatrix<F>) -> QuatMatrix<F> {
        QuatMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.ring.conj(&m.0[j][i]))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::TernaryForm;

    fn alg() -> JordanAlgebra {
        JordanAlgebra::new(QuaternionRing::shared(TernaryForm::hamilton()))
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn diagonal_values() {
        let j = alg();
        let h = JElement::diagonal([q(2), q(3), q(5)]);
        assert_eq!(j.norm(&h), q(30));
        assert_eq!(j.sharp(&h), JElement::diagonal([q(15), q(10), q(6)]));
        let one = JElement::<Rational>::identity();
        assert_eq!(j.trilinear(&one, &one, &one), q(6));
        assert_eq!(j.trace_pair(&one, &one), q(3));
        assert_eq!(j.rank(&JElement::diagonal([q(1), q(1), q(0)])), 2);
        assert_eq!(j.rank(&one), 3);
    }

    #[test]
    fn cross_is_polarized_sharp() {
        let j = alg();
        let x = JElement::from_coords(&(0..15).map(|k| q(k as i64 % 4 - 1)).collect::<Vec<_>>());
        let y = JElement::from_coords(&(0..15).map(|k| q((k as i64 * 7) % 5 - 2)).collect::<Vec<_>>());
        let lhs = j.cross(&x, &y);
        let rhs = j.sharp(&x.add(&y)).sub(&j.sharp(&x)).sub(&j.sharp(&y));
        assert_eq!(lhs, rhs);
        assert!(j.cross(&x, &JElement::zero()).is_zero());
    }

    #[test]
    fn matrix_roundtrip() {
        let j = alg();
        let x = JElement::from_coords(&(0..15).map(|k| q(k as i64 - 7)).collect::<Vec<_>>());
        assert_eq!(j.from_matrix(&j.to_matrix(&x)), Some(x));
    }
}
