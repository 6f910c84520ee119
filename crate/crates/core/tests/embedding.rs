//! GSp6 → G and the action on the Hermitian upper half-space.

use fgsp6::freudenthal::{Freudenthal, WElement};
use fgsp6::gsp6::{self, GSp6Element};
use fgsp6::hermspace::{self, PointH};
use fgsp6::matrix::Matrix;
use fgsp6::quat::{QuaternionRing, TernaryForm};
use fgsp6::random::{self as rnd, trial_rng};
use fgsp6::{Gaussian, Rational, Scalar};
use proptest::prelude::*;

fn space(t: TernaryForm) -> Freudenthal {
    Freudenthal::new(QuaternionRing::shared(t))
}

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn symmetric() -> impl Strategy<Value = Matrix<Rational>> {
    prop::array::uniform6(rat()).prop_map(|v| {
        Matrix::from_rows(vec![
            vec![v[0].clone(), v[3].clone(), v[4].clone()],
            vec![v[3].clone(), v[1].clone(), v[5].clone()],
            vec![v[4].clone(), v[5].clone(), v[2].clone()],
        ])
    })
}

fn wel() -> impl Strategy<Value = WElement<Rational>> {
    prop::collection::vec(rat(), 32).prop_map(|v| WElement::from_coords(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn iota_multiplicative_on_unipotents(x in symmetric(), y in symmetric()) {
        let w = space(TernaryForm::hurwitz());
        let (gx, gy) = (GSp6Element::unipotent(&x).unwrap(), GSp6Element::lower_unipotent(&y).unwrap());
        let lhs = gsp6::iota_matrix(&w, &gx).unwrap().mul(&gsp6::iota_matrix(&w, &gy).unwrap());
        prop_assert_eq!(lhs, gsp6::iota_matrix(&w, &gx.mul(&gy)).unwrap());
    }

    #[test]
    fn iota_preserves_symplectic_and_quartic(x in symmetric(), v in wel(), u in wel()) {
        let w = space(TernaryForm::new(2, 3, 5, 1, 1, 1));
        let g = GSp6Element::unipotent(&x).unwrap().mul(&GSp6Element::j6());
        let m = gsp6::iota_matrix(&w, &g).unwrap();
        let act = |v: &WElement<Rational>| WElement::from_coords(&m.vec_mul(&v.coords()));
        let nu = g.nu().clone();
        prop_assert_eq!(w.symplectic(&act(&v), &act(&u)), &nu * &w.symplectic(&v, &u));
        prop_assert_eq!(w.quartic(&act(&v)), &(&nu * &nu) * &w.quartic(&v));
    }
}

#[test]
fn embedded_action_matches_siegel_action() {
    let w = space(TernaryForm::hamilton());
    let i = hermspace::to_siegel(&hermspace::i_one()).unwrap();
    for k in 0..12 {
        let mut rng = trial_rng(3, "siegel", k);
        let g = loop {
            let g = rnd::gsp6_word(&mut rng, 3);
            if g.nu().is_positive() {
                break g;
            }
        };
        let (j, z) = hermspace::act_on_h(&w, &gsp6::iota_trusted(&w, &g).unwrap(), &PointH::i()).unwrap();
        let (js, zs) = g.siegel_act(&i).unwrap();
        assert_eq!(j, js, "g = {:?}", g.matrix());
        assert_eq!(hermspace::to_siegel(z.z()).unwrap(), zs, "g = {:?}", g.matrix());
    }
}

#[test]
fn iota_of_scalar_is_multiplication() {
    let w = space(TernaryForm::hurwitz());
    let z = Rational::new(-5, 3);
    let g = GSp6Element::levi(&z.inv().unwrap(), &Matrix::identity(3).scale(&z)).unwrap();
    assert_eq!(g.matrix(), &Matrix::identity(6).scale(&z));
    assert_eq!(gsp6::iota_matrix(&w, &g).unwrap(), Matrix::identity(32).scale(&z));
}

#[test]
fn f_o_line_stabilizer_examples() {
    let w = space(TernaryForm::hurwitz());
    let f = gsp6::f_o(&w);
    assert_eq!(w.rank(&f), 1);
    let g = GSp6Element::levi(&Rational::from(2), &Matrix::identity(3)).unwrap();
    assert!(gsp6::stabilizes_line(&w, &g).unwrap());
    assert!(!gsp6::stabilizes_line(&w, &GSp6Element::j6()).unwrap());
}

#[test]
fn not_symplectic_is_rejected() {
    let mut m = Matrix::<Rational>::identity(6);
    m.set(0, 1, Rational::one());
    assert!(GSp6Element::new(m).is_err());
}

#[test]
fn cocycle_on_i() {
    let w = space(TernaryForm::hamilton());
    let mut rng = trial_rng(5, "cocycle", 0);
    let gens: Vec<GSp6Element> = (0..6)
        .map(|_| loop {
            let g = rnd::siegel_parabolic(&mut rng);
            if g.nu().is_positive() {
                break g;
            }
        })
        .chain([GSp6Element::j6()])
        .collect();
    for g in &gens {
        for h in &gens {
            let (ig, ih) = (gsp6::iota_trusted(&w, g).unwrap(), gsp6::iota_trusted(&w, h).unwrap());
            let (jh, hz) = hermspace::act_on_h(&w, &ih, &PointH::i()).unwrap();
            let (jg, ghz) = hermspace::act_on_h(&w, &ig, &hz).unwrap();
            let (jgh, ghz2) = hermspace::act_on_h(&w, &ig.then(&ih), &PointH::i()).unwrap();
            assert_eq!(jgh, jh.mul(&jg));
            assert_eq!(ghz.z(), ghz2.z());
            assert_ne!(jgh, Gaussian::zero());
        }
    }
}
