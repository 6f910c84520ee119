//! Seeded generators for the verification suites.
//!
//! Every trial gets its own `ChaCha8Rng`, keyed by the run seed, a label
//! and the trial index, so a counterexample is reproducible on its own and
//! results do not depend on execution order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::freudenthal::{Freudenthal, GroupElement, WElement};
use crate::gsp6::GSp6Element;
use crate::jordan::{JElement, QuatMatrix, J_DIM};
use crate::matrix::Matrix;
use crate::quat::{Quat, TernaryForm};
use crate::scalar::{Gaussian, Rational, Scalar};

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The generator for trial `index` of the check named `label`.
pub fn trial_rng(seed: u64, label: &str, index: usize) -> ChaCha8Rng {
    let mut h = splitmix(seed);
    for b in label.bytes() {
        h = splitmix(h ^ b as u64);
    }
    ChaCha8Rng::seed_from_u64(splitmix(h ^ index as u64))
}

pub fn int<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

/// Numerator in `[-n, n]`, denominator in `[1, d]`.
pub fn rational<R: Rng>(rng: &mut R, n: i64, d: i64) -> Rational {
    Rational::new(int(rng, -n, n), int(rng, 1, d))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, n: i64, d: i64) -> Rational {
    loop {
        let q = rational(rng, n, d);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn gaussian<R: Rng>(rng: &mut R) -> Gaussian {
    Gaussian::new(rational(rng, 4, 3), rational(rng, 4, 3))
}

pub fn quat<R: Rng>(rng: &mut R) -> Quat<Rational> {
    Quat(std::array::from_fn(|_| rational(rng, 5, 3)))
}

pub fn int_quat<R: Rng>(rng: &mut R, bound: i64) -> Quat<Rational> {
    Quat(std::array::from_fn(|_| Rational::from(int(rng, -bound, bound))))
}

/// Entries in `[-r, r]`.
pub fn form<R: Rng>(rng: &mut R, r: i64) -> TernaryForm {
    TernaryForm::from_array(std::array::from_fn(|_| int(rng, -r, r)))
}

/// A positive definite form with diagonal in `[1, r]` and cross terms in
/// `[-r, r]`, by rejection.
pub fn definite_form<R: Rng>(rng: &mut R, r: i64) -> TernaryForm {
    loop {
        let t = TernaryForm::new(int(rng, 1, r), int(rng, 1, r), int(rng, 1, r), int(rng, -r, r), int(rng, -r, r), int(rng, -r, r));
        if t.is_positive_definite() {
            return t;
        }
    }
}

pub fn j_element<R: Rng>(rng: &mut R) -> JElement<Rational> {
    JElement::from_coords(&(0..J_DIM).map(|_| rational(rng, 4, 3)).collect::<Vec<_>>())
}

pub fn w_element<R: Rng>(rng: &mut R) -> WElement<Rational> {
    WElement::new(rational(rng, 4, 3), j_element(rng), j_element(rng), rational(rng, 4, 3))
}

pub fn complex_j<R: Rng>(rng: &mut R) -> JElement<Gaussian> {
    JElement::from_coords(&(0..J_DIM).map(|_| gaussian(rng)).collect::<Vec<_>>())
}

pub fn symmetric<R: Rng>(rng: &mut R) -> Matrix<Rational> {
    let mut m = Matrix::zeros(3, 3);
    for i in 0..3 {
        for j in i..3 {
            let x = rational(rng, 4, 3);
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

pub fn invertible<R: Rng>(rng: &mut R) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(3, 3, |_, _| rational(rng, 3, 2));
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// Symmetric with positive leading minors.
pub fn positive_symmetric<R: Rng>(rng: &mut R) -> Matrix<Rational> {
    loop {
        let m = symmetric(rng);
        let m2 = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(0, 1);
        if m.get(0, 0).is_positive() && m2.is_positive() && m.determinant().is_positive() {
            return m;
        }
    }
}

/// `(N(X), X#, X, 1)`.
pub fn rank_one_from<F: Scalar>(w: &Freudenthal, x: &JElement<F>) -> WElement<F> {
    let j = w.jordan();
    WElement::new(j.norm(x), j.sharp(x), x.clone(), F::one())
}

/// `u u*` for a random column `u ∈ B³`: a rank-one element of `J`.
pub fn rank_one_j<R: Rng>(w: &Freudenthal, rng: &mut R) -> JElement<Rational> {
    let ring = w.ring();
    let u: [Quat<Rational>; 3] = std::array::from_fn(|_| int_quat(rng, 2));
    let m = QuatMatrix(std::array::from_fn(|i| std::array::from_fn(|k| ring.mul(&u[i], &ring.conj(&u[k])))));
    w.jordan().from_matrix(&m).expect("u u* is Hermitian")
}

/// Which kind of element [`corpus_element`] produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorpusKind {
    /// `(N(X), X#, X, 1)`, rank 1.
    RankOne,
    /// A translate of a rank-one element by a group word, rank 1.
    RankOneTranslate,
    /// `(0, b, 0, 0)` with `b` a sum of two rank-one matrices, rank ≤ 2.
    LowB,
    /// Uniformly random coordinates, generically rank 4.
    Random,
}

pub fn corpus_element<R: Rng>(w: &Freudenthal, pool: &GroupPool, rng: &mut R) -> (CorpusKind, WElement<Rational>) {
    match rng.gen_range(0..4) {
        0 => (CorpusKind::RankOne, rank_one_from(w, &j_element(rng))),
        1 => {
            let g = pool.word(rng, 3);
            (CorpusKind::RankOneTranslate, g.apply(&rank_one_from(w, &j_element(rng))))
        }
        2 => {
            let mut b = rank_one_j(w, rng);
            if rng.gen_bool(0.5) {
                b = b.add(&rank_one_j(w, rng).scale(&nonzero_rational(rng, 3, 2)));
            }
            (CorpusKind::LowB, WElement::new(Rational::zero(), b, JElement::zero(), Rational::zero()))
        }
        _ => (CorpusKind::Random, w_element(rng)),
    }
}

/// Certified generators `n(X)`, `n̄(Y)`, `J`, `m(t)`, scalars and weights,
/// built once and multiplied into words with [`GroupElement::then`].
pub struct GroupPool {
    pub generators: Vec<(String, GroupElement)>,
}

impl GroupPool {
    pub fn new(w: &Freudenthal, seed: u64) -> Result<Self> {
        let mut rng = trial_rng(seed, "group-pool", 0);
        let mut generators = Vec::new();
        for k in 0..3 {
            let x = j_element(&mut rng);
            generators.push((format!("n{k}"), w.op_n(&x)?));
            let y = j_element(&mut rng);
            generators.push((format!("nbar{k}"), w.op_nbar(&y)?));
        }
        generators.push(("J".into(), w.op_j()?));
        for k in 0..2 {
            let mut m = QuatMatrix::<Rational>::identity();
            m.0[0][1] = int_quat(&mut rng, 1);
            m.0[2][1] = int_quat(&mut rng, 1);
            m.0[k][k] = Quat::scalar(Rational::from(2));
            generators.push((format!("m{k}"), w.op_m(&m, &Rational::from(1 + k as i64))?));
        }
        generators.push(("scalar".into(), w.op_scalar(&Rational::new(-3, 2))?));
        generators.push(("weight".into(), w.op_weight(&Rational::new(2, 3))?));
        Ok(GroupPool { generators })
    }

    /// A product of `len` generators, each possibly inverted.
    pub fn word<R: Rng>(&self, rng: &mut R, len: usize) -> GroupElement {
        let mut g = GroupElement::identity();
        for _ in 0..len {
            let (_, h) = &self.generators[rng.gen_range(0..self.generators.len())];
            g = if rng.gen_bool(0.25) { g.then(&h.inverse()) } else { g.then(h) };
        }
        g
    }

    /// A word with positive similitude.
    pub fn positive_word<R: Rng>(&self, rng: &mut R, len: usize) -> GroupElement {
        loop {
            let g = self.word(rng, len);
            if g.nu().is_positive() {
                return g;
            }
        }
    }
}

/// A random product of unipotents, lower unipotents, Levi elements and `J6`.
pub fn gsp6_word<R: Rng>(rng: &mut R, len: usize) -> GSp6Element {
    let mut g = GSp6Element::identity();
    for _ in 0..len {
        g = g.mul(&gsp6_generator(rng));
    }
    g
}

pub fn gsp6_generator<R: Rng>(rng: &mut R) -> GSp6Element {
    match rng.gen_range(0..4) {
        0 => GSp6Element::unipotent(&symmetric(rng)).expect("symmetric"),
        1 => GSp6Element::lower_unipotent(&symmetric(rng)).expect("symmetric"),
        2 => GSp6Element::levi(&nonzero_rational(rng, 3, 2), &invertible(rng)).expect("invertible"),
        _ => GSp6Element::j6(),
    }
}

/// `u M` with `u` unipotent and `M` Levi.
pub fn siegel_parabolic<R: Rng>(rng: &mut R) -> GSp6Element {
    let u = GSp6Element::unipotent(&symmetric(rng)).expect("symmetric");
    let m = GSp6Element::levi(&nonzero_rational(rng, 3, 2), &invertible(rng)).expect("invertible");
    u.mul(&m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_label_sensitive() {
        let a: Vec<i64> = (0..5).map(|_| int(&mut trial_rng(7, "x", 3), 0, 1 << 40)).collect();
        assert!(a.windows(2).all(|p| p[0] == p[1]));
        let b = int(&mut trial_rng(7, "y", 3), 0, 1 << 40);
        let c = int(&mut trial_rng(7, "x", 4), 0, 1 << 40);
        assert!(a[0] != b && a[0] != c);
    }
}
