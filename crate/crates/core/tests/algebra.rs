//! Property tests for scalars, quaternion rings, J and W.

use std::sync::Arc;

use fgsp6::freudenthal::{apply_j, Freudenthal, WElement, W_DIM};
use fgsp6::jordan::{JElement, JordanAlgebra, J_DIM};
use fgsp6::matrix::Matrix;
use fgsp6::quat::{Quat, QuaternionRing, TernaryForm};
use fgsp6::{Gaussian, Rational, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn form() -> impl Strategy<Value = TernaryForm> {
    prop::array::uniform6(-3i64..=3).prop_map(TernaryForm::from_array)
}

fn quat() -> impl Strategy<Value = Quat<Rational>> {
    prop::array::uniform4(rat()).prop_map(Quat)
}

fn jel() -> impl Strategy<Value = JElement<Rational>> {
    prop::collection::vec(rat(), J_DIM).prop_map(|v| JElement::from_coords(&v))
}

fn wel() -> impl Strategy<Value = WElement<Rational>> {
    prop::collection::vec(rat(), W_DIM).prop_map(|v| WElement::from_coords(&v))
}

fn big(q: &Rational) -> BigRational {
    BigRational::new(q.numer(), q.denom())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_matches_bigrational(a in any::<i64>(), b in 1i64..i64::MAX, c in any::<i64>(), d in 1i64..i64::MAX) {
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let (bx, by) = (BigRational::new(BigInt::from(a), BigInt::from(b)), BigRational::new(BigInt::from(c), BigInt::from(d)));
        prop_assert_eq!(big(&(&x + &y)), &bx + &by);
        prop_assert_eq!(big(&(&x * &y)), &bx * &by);
        prop_assert_eq!(big(&(&x - &y)), &bx - &by);
        if !y.is_zero() {
            prop_assert_eq!(big(&x.div(&y).unwrap()), &bx / &by);
        }
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn gaussian_field(a in rat(), b in rat(), c in rat(), d in rat()) {
        let (x, y) = (Gaussian::new(a, b), Gaussian::new(c, d));
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.mul(&x.conj()), Gaussian::real(x.norm()));
        if let Some(inv) = y.inv() {
            prop_assert_eq!(y.mul(&inv), Gaussian::one());
        }
    }

    #[test]
    fn quaternion_ring_laws(t in form(), x in quat(), y in quat(), z in quat()) {
        let b = QuaternionRing::from_form(t);
        prop_assert_eq!(b.mul(&b.mul(&x, &y), &z), b.mul(&x, &b.mul(&y, &z)));
        prop_assert_eq!(b.norm(&b.mul(&x, &y)), b.norm(&x) * b.norm(&y));
        prop_assert_eq!(b.mul(&x, &b.conj(&x)), Quat::scalar(b.norm(&x)));
        prop_assert_eq!(b.trace(&b.mul(&x, &y)), b.trace(&b.mul(&y, &x)));
        prop_assert_eq!(b.conj(&b.conj(&x)), x);
    }

    #[test]
    fn jordan_identities(t in form(), x in jel(), y in jel(), z in jel()) {
        let j = JordanAlgebra::new(QuaternionRing::shared(t));
        prop_assert_eq!(j.sharp(&j.sharp(&x)), x.scale(&j.norm(&x)));
        prop_assert_eq!(j.trace_pair(&j.cross(&x, &y), &z), j.trilinear(&x, &y, &z));
        prop_assert_eq!(j.trilinear(&x, &y, &z), j.trilinear(&z, &x, &y));
        let n = j.norm(&x.add(&y));
        prop_assert_eq!(n, j.norm(&x) + j.trace_pair(&j.sharp(&x), &y) + j.trace_pair(&x, &j.sharp(&y)) + j.norm(&y));
    }

    #[test]
    fn real_symmetric_norm_is_determinant(t in form(), v in prop::collection::vec(rat(), 6)) {
        let j = JordanAlgebra::new(QuaternionRing::shared(t));
        let m = Matrix::from_rows(vec![
            vec![v[0].clone(), v[3].clone(), v[4].clone()],
            vec![v[3].clone(), v[1].clone(), v[5].clone()],
            vec![v[4].clone(), v[5].clone(), v[2].clone()],
        ]);
        prop_assert_eq!(j.norm(&JElement::from_symmetric(&m)), m.determinant());
    }

    #[test]
    fn w_forms_under_generators(v in wel(), u in wel(), x in jel()) {
        let w = Freudenthal::new(QuaternionRing::shared(TernaryForm::hurwitz()));
        prop_assert_eq!(w.symplectic(&v, &u), -w.symplectic(&u, &v));
        prop_assert_eq!(w.quartic(&w.apply_n(&x, &v)), w.quartic(&v));
        prop_assert_eq!(w.quartic(&w.apply_nbar(&x, &v)), w.quartic(&v));
        prop_assert_eq!(w.quartic(&apply_j(&v)), w.quartic(&v));
        prop_assert_eq!(w.symplectic(&w.apply_n(&x, &v), &w.apply_n(&x, &u)), w.symplectic(&v, &u));
        prop_assert_eq!(w.rank(&w.apply_n(&x, &v)), w.rank(&v));
        prop_assert_eq!(apply_j(&apply_j(&v)), v.neg());
    }

    #[test]
    fn w_text_roundtrip(v in wel()) {
        prop_assert_eq!(v.to_string().parse::<WElement<Rational>>().unwrap(), v);
    }
}

#[test]
fn hybrid_rational_overflows_into_bigints() {
    let x = Rational::new(i64::MAX, 3);
    let y = x.pow(6);
    let want = BigRational::new(BigInt::from(i64::MAX).pow(6), BigInt::from(729));
    assert_eq!(big(&y), want);
    assert_eq!(&(&y / &y) * &Rational::from(1), Rational::one());
}

#[test]
fn rank_of_standard_elements() {
    let w = Freudenthal::new(Arc::new(QuaternionRing::from_form(TernaryForm::hamilton())));
    let e = WElement::<Rational>::e();
    let f = WElement::<Rational>::f();
    assert_eq!(w.rank(&WElement::<Rational>::zero()), 0);
    assert_eq!(w.rank(&e), 1);
    assert_eq!(w.rank(&f), 1);
    assert_eq!(w.rank(&e.add(&f)), 4);
    let one = JElement::<Rational>::identity();
    assert_eq!(w.rank(&WElement::new(Rational::zero(), one.clone(), JElement::zero(), Rational::zero())), 3);
}
