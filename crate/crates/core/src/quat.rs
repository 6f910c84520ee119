//! Quaternion rings presented by integral ternary quadratic forms.
//!
//! The ring attached to `q = ax² + by² + cz² + dyz + ezx + fxy` is the even
//! Clifford algebra of `q`, with basis `1, v1 = e2e3, v2 = e3e1, v3 = e1e2`.
//! Elements are coordinate vectors `(t, x1, x2, x3)`; the ring acts as the
//! context that knows how to multiply them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// Integral ternary quadratic form `ax² + by² + cz² + dyz + ezx + fxy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl TernaryForm {
    pub const fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Self {
        TernaryForm { a, b, c, d, e, f }
    }

    /// `x² + y² + z²`, giving the Lipschitz order `Z + Zi + Zj + Zk`.
    pub const fn hamilton() -> Self {
        Self::new(1, 1, 1, 0, 0, 0)
    }

    /// The form of the Hurwitz maximal order.
    pub const fn hurwitz() -> Self {
        Self::new(1, 1, 1, 1, 1, 1)
    }

    pub fn from_array(x: [i64; 6]) -> Self {
        Self::new(x[0], x[1], x[2], x[3], x[4], x[5])
    }

    pub fn to_array(self) -> [i64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn scale(self, k: i64) -> Self {
        Self::from_array(self.to_array().map(|x| x * k))
    }

    pub fn eval(&self, x: i64, y: i64, z: i64) -> i64 {
        self.a * x * x + self.b * y * y + self.c * z * z + self.d * y * z + self.e * z * x + self.f * x * y
    }

    /// Diagonal values `q(e_i)`.
    pub fn diagonal(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// `B(e_i, e_j) = q(e_i + e_j) - q(e_i) - q(e_j)`; `B(e_i, e_i) = 2 q(e_i)`.
    pub fn bilinear(&self, i: usize, j: usize) -> i64 {
        let m = [
            [2 * self.a, self.f, self.e],
            [self.f, 2 * self.b, self.d],
            [self.e, self.d, 2 * self.c],
        ];
        m[i][j]
    }

    /// The half-integral symmetric matrix `T` with `q(x) = x T xᵗ`.
    pub fn half_matrix(&self) -> Matrix<Rational> {
        Matrix::from_fn(3, 3, |i, j| Rational::new(self.bilinear(i, j), 2))
    }

    /// Reads a form back from a half-integral matrix; `None` if `T` is not
    /// half-integral and symmetric.
    pub fn from_half_matrix(t: &Matrix<Rational>) -> Option<Self> {
        let two = Rational::from(2);
        let mut v = [0i64; 6];
        let idx = [(0, 0, 1), (1, 1, 1), (2, 2, 1), (1, 2, 2), (0, 2, 2), (0, 1, 2)];
        for (k, &(i, j, s)) in idx.iter().enumerate() {
            if t.get(i, j) != t.get(j, i) {
                return None;
            }
            let x = if s == 2 { t.get(i, j) * &two } else { t.get(i, j).clone() };
            v[k] = x.to_i64()?;
        }
        Some(Self::from_array(v))
    }

    /// `4 det(T) = 4abc + def - ad² - be² - cf²`.
    pub fn four_det(&self) -> i64 {
        let (a, b, c, d, e, f) = (self.a, self.b, self.c, self.d, self.e, self.f);
        4 * a * b * c + d * e * f - a * d * d - b * e * e - c * f * f
    }

    /// Leading principal minors of `2T` are positive.
    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && 4 * self.a * self.b - self.f * self.f > 0 && self.four_det() > 0
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.to_array();
        write!(f, "{a} {b} {c} {d} {e} {g}")
    }
}

impl FromStr for TernaryForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!("a ternary form needs 6 integers, got {}", parts.len())));
        }
        let mut v = [0i64; 6];
        for (x, p) in v.iter_mut().zip(&parts) {
            *x = p.parse().map_err(|_| Error::Parse(format!("not an integer: {p:?}")))?;
        }
        Ok(Self::from_array(v))
    }
}

/// Coordinates `(t, x1, x2, x3)` in the basis `1, v1, v2, v3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quat<F>(pub [F; 4]);

impl<F: Scalar> Quat<F> {
    pub fn zero() -> Self {
        Quat(std::array::from_fn(|_| F::zero()))
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(t: F) -> Self {
        Quat([t, F::zero(), F::zero(), F::zero()])
    }

    pub fn basis(i: usize) -> Self {
        let mut q = Self::zero();
        q.0[i] = F::one();
        q
    }

    pub fn from_i64(x: [i64; 4]) -> Self {
        Quat(x.map(F::from_i64))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    /// Lies in the scalar line `F·1`.
    pub fn is_scalar(&self) -> bool {
        self.0[1..].iter().all(F::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Quat(std::array::from_fn(|i| self.0[i].add(&o.0[i])))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quat(std::array::from_fn(|i| self.0[i].sub(&o.0[i])))
    }

    pub fn neg(&self) -> Self {
        Quat(std::array::from_fn(|i| self.0[i].neg()))
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_one() {
            return self.clone();
        }
        Quat(std::array::from_fn(|i| self.0[i].mul(k)))
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (x, y) in self.0.iter_mut().zip(&o.0) {
            if !y.is_zero() {
                x.add_assign(y);
            }
        }
    }

    pub fn sub_assign(&mut self, o: &Self) {
        for (x, y) in self.0.iter_mut().zip(&o.0) {
            if !y.is_zero() {
                x.sub_assign(y);
            }
        }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Quat<G> {
        Quat(std::array::from_fn(|i| f(&self.0[i])))
    }
}

impl<F: Scalar> fmt::Display for Quat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl<F: Scalar + FromStr<Err = Error>> FromStr for Quat<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("a quaternion needs 4 coordinates, got {}", parts.len())));
        }
        let mut out = Self::zero();
        for (x, p) in out.0.iter_mut().zip(parts) {
            *x = p.parse()?;
        }
        Ok(out)
    }
}

/// Element of the rank-3 Clifford algebra, indexed by bitmask of generators.
type Cliff = [i64; 8];

struct CliffordReducer {
    q: [i64; 3],
    bil: [[i64; 3]; 3],
}

impl CliffordReducer {
    fn new(form: &TernaryForm) -> Self {
        CliffordReducer {
            q: form.diagonal(),
            bil: std::array::from_fn(|i| std::array::from_fn(|j| form.bilinear(i, j))),
        }
    }

    /// Rewrites a word in the generators into increasing monomials using
    /// `e_i e_i = q(e_i)` and `e_j e_i = -e_i e_j + B(e_i, e_j)`.
    fn reduce(&self, word: &[usize], coef: i64, out: &mut Cliff) {
        if coef == 0 {
            return;
        }
        let Some(p) = (0..word.len().saturating_sub(1)).find(|&p| word[p] >= word[p + 1]) else {
            let mask = word.iter().fold(0usize, |m, &g| m | (1 << g));
            out[mask] += coef;
            return;
        };
        let (i, j) = (word[p], word[p + 1]);
        let mut rest: Vec<usize> = word[..p].to_vec();
        rest.extend_from_slice(&word[p + 2..]);
        if i == j {
            self.reduce(&rest, coef * self.q[i], out);
        } else {
            let mut swapped = word.to_vec();
            swapped.swap(p, p + 1);
            self.reduce(&swapped, -coef, out);
            self.reduce(&rest, coef * self.bil[i][j], out);
        }
    }

    fn monomial(mask: usize) -> Vec<usize> {
        (0..3).filter(|g| mask & (1 << g) != 0).collect()
    }

    fn mul(&self, x: &Cliff, y: &Cliff) -> Cliff {
        let mut out = [0; 8];
        for (mx, &cx) in x.iter().enumerate() {
            for (my, &cy) in y.iter().enumerate() {
                if cx != 0 && cy != 0 {
                    let mut w = Self::monomial(mx);
                    w.extend(Self::monomial(my));
                    self.reduce(&w, cx * cy, &mut out);
                }
            }
        }
        out
    }

    fn reverse(&self, x: &Cliff) -> Cliff {
        let mut out = [0; 8];
        for (m, &c) in x.iter().enumerate() {
            let mut w = Self::monomial(m);
            w.reverse();
            self.reduce(&w, c, &mut out);
        }
        out
    }

    fn word(&self, w: &[usize]) -> Cliff {
        let mut out = [0; 8];
        self.reduce(w, 1, &mut out);
        out
    }

    /// `1, e2e3, e3e1, e1e2`.
    fn even_basis(&self) -> [Cliff; 4] {
        [self.word(&[]), self.word(&[1, 2]), self.word(&[2, 0]), self.word(&[0, 1])]
    }

    /// Coordinates of an even element in the basis `1, v1, v2, v3`.
    fn to_coords(&self, x: &Cliff) -> [i64; 4] {
        debug_assert!([1, 2, 4, 7].iter().all(|&m| x[m] == 0), "odd part in even product");
        let x1 = x[0b110];
        let x2 = -x[0b101];
        let x3 = x[0b011];
        [x[0] - x2 * self.bil[0][2], x1, x2, x3]
    }
}

/// The quaternion ring of a ternary form, with its structure constants.
#[derive(Clone, Debug)]
pub struct QuaternionRing {
    form: TernaryForm,
    table: [[[i64; 4]; 4]; 4],
    terms: Vec<(usize, usize, Vec<(usize, i64)>)>,
    traces: [i64; 4],
    gram: [[i64; 4]; 4],
}

impl PartialEq for QuaternionRing {
    fn eq(&self, o: &Self) -> bool {
        self.form == o.form
    }
}

impl QuaternionRing {
    /// Builds the even Clifford algebra of `form` by reducing words.
    pub fn from_form(form: TernaryForm) -> Self {
        let red = CliffordReducer::new(&form);
        let basis = red.even_basis();
        let table: [[[i64; 4]; 4]; 4] =
            std::array::from_fn(|i| std::array::from_fn(|j| red.to_coords(&red.mul(&basis[i], &basis[j]))));
        let traces: [i64; 4] = std::array::from_fn(|i| {
            let s = red.to_coords(&red.reverse(&basis[i]));
            let b = red.to_coords(&basis[i]);
            let sum: Vec<i64> = s.iter().zip(&b).map(|(x, y)| x + y).collect();
            debug_assert!(sum[1..].iter().all(|&x| x == 0), "x + x* is not scalar");
            sum[0]
        });
        let terms = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| {
                let outs: Vec<(usize, i64)> =
                    (0..4).filter(|&k| table[i][j][k] != 0).map(|k| (k, table[i][j][k])).collect();
                (i, j, outs)
            })
            .filter(|(_, _, outs)| !outs.is_empty())
            .collect();
        let mut ring = QuaternionRing { form, table, terms, traces, gram: [[0; 4]; 4] };
        ring.gram = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let p = ring.mul(&Quat::<Rational>::basis(i), &ring.conj(&Quat::basis(j)));
                ring.trace(&p).to_i64().expect("integral trace")
            })
        });
        ring
    }

    pub fn shared(form: TernaryForm) -> Arc<Self> {
        Arc::new(Self::from_form(form))
    }

    pub fn form(&self) -> TernaryForm {
        self.form
    }

    /// Coordinates of `b_i b_j` with `b_0 = 1, b_k = v_k`.
    pub fn table(&self) -> &[[[i64; 4]; 4]; 4] {
        &self.table
    }

    /// `tr(b_i)` for the basis; `(2, d, e, f)`.
    pub fn basis_traces(&self) -> [i64; 4] {
        self.traces
    }

    /// Gram matrix of the pairing `(u, v) = tr(u v*)` on the basis.
    pub fn pair_gram(&self) -> [[i64; 4]; 4] {
        self.gram
    }

    pub fn mul<F: Scalar>(&self, x: &Quat<F>, y: &Quat<F>) -> Quat<F> {
        let mut out = Quat::<F>::zero();
        for (i, j, outs) in &self.terms {
            let (a, b) = (&x.0[*i], &y.0[*j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let p = a.mul(b);
            for &(k, c) in outs {
                match c {
                    1 => out.0[k].add_assign(&p),
                    -1 => out.0[k].sub_assign(&p),
                    _ => out.0[k].add_assign(&p.mul_i64(c)),
                }
            }
        }
        out
    }

    pub fn trace<F: Scalar>(&self, x: &Quat<F>) -> F {
        let mut t = x.0[0].mul_i64(2);
        for k in 1..4 {
            if self.traces[k] != 0 && !x.0[k].is_zero() {
                t.add_assign(&x.0[k].mul_i64(self.traces[k]));
            }
        }
        t
    }

    /// `x* = tr(x) - x`.
    pub fn conj<F: Scalar>(&self, x: &Quat<F>) -> Quat<F> {
        let mut t = x.0[0].clone();
        for k in 1..4 {
            if self.traces[k] != 0 && !x.0[k].is_zero() {
                t.add_assign(&x.0[k].mul_i64(self.traces[k]));
            }
        }
        Quat([t, x.0[1].neg(), x.0[2].neg(), x.0[3].neg()])
    }

    /// `n(x) = x x*`, evaluated as the quadratic form `(x, x) / 2`.
    pub fn norm<F: Scalar>(&self, x: &Quat<F>) -> F {
        let mut n = F::zero();
        for i in 0..4 {
            if x.0[i].is_zero() {
                continue;
            }
            let sq = x.0[i].mul(&x.0[i]);
            n.add_assign(&sq.mul_i64(self.gram[i][i] / 2));
            for j in i + 1..4 {
                if self.gram[i][j] != 0 && !x.0[j].is_zero() {
                    n.add_assign(&x.0[i].mul(&x.0[j]).mul_i64(self.gram[i][j]));
                }
            }
        }
        n
    }

    /// `(u, v) = tr(u v*)`.
    pub fn pair<F: Scalar>(&self, u: &Quat<F>, v: &Quat<F>) -> F {
        let mut s = F::zero();
        for i in 0..4 {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if self.gram[i][j] != 0 && !v.0[j].is_zero() {
                    s.add_assign(&u.0[i].mul(&v.0[j]).mul_i64(self.gram[i][j]));
                }
            }
        }
        s
    }

    /// `x - tr(x)/2`.
    pub fn imaginary_part<F: Scalar>(&self, x: &Quat<F>) -> Quat<F> {
        let half = F::from_rational(&Rational::new(1, 2));
        x.sub(&Quat::scalar(self.trace(x).mul(&half)))
    }

    /// `x* / n(x)`, or `None` when `n(x) = 0`.
    pub fn inverse<F: Scalar>(&self, x: &Quat<F>) -> Option<Quat<F>> {
        let n = self.norm(x).inv()?;
        Some(self.conj(x).scale(&n))
    }

    /// Matrix of `y ↦ x y` acting on coordinate rows.
    pub fn left_mul_matrix<F: Scalar>(&self, x: &Quat<F>) -> Matrix<F> {
        let rows = (0..4).map(|j| self.mul(x, &Quat::basis(j)).0.to_vec()).collect();
        Matrix::from_rows(rows)
    }
}

/// A quaternion bundled with the ring it lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionElement<F> {
    ring: Arc<QuaternionRing>,
    coords: Quat<F>,
}

impl<F: Scalar> QuaternionElement<F> {
    pub fn new(ring: Arc<QuaternionRing>, coords: Quat<F>) -> Self {
        QuaternionElement { ring, coords }
    }

    pub fn ring(&self) -> &Arc<QuaternionRing> {
        &self.ring
    }

    pub fn coords(&self) -> &Quat<F> {
        &self.coords
    }

    fn same_ring(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &o.ring) || *self.ring == *o.ring {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "quaternions from different rings ({} vs {})",
                self.ring.form(),
                o.ring.form()
            )))
        }
    }

    fn wrap(&self, coords: Quat<F>) -> Self {
        QuaternionElement { ring: self.ring.clone(), coords }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.wrap(self.ring.mul(&self.coords, &o.coords)))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.wrap(self.coords.add(&o.coords)))
    }

    pub fn pair(&self, o: &Self) -> Result<F> {
        self.same_ring(o)?;
        Ok(self.ring.pair(&self.coords, &o.coords))
    }

    pub fn conj(&self) -> Self {
        self.wrap(self.ring.conj(&self.coords))
    }

    pub fn trace(&self) -> F {
        self.ring.trace(&self.coords)
    }

    pub fn norm(&self) -> F {
        self.ring.norm(&self.coords)
    }

    pub fn imaginary_part(&self) -> Self {
        self.wrap(self.ring.imaginary_part(&self.coords))
    }

    pub fn inverse(&self) -> Option<Self> {
        self.ring.inverse(&self.coords).map(|c| self.wrap(c))
    }
}

impl<F: Scalar> fmt::Display for QuaternionElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}
