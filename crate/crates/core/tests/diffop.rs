//! The 29-term cubic operator against direct evaluations.

use fgsp6::diffop;
use fgsp6::freudenthal::WElement;
use fgsp6::jordan::JElement;
use fgsp6::matrix::Matrix;
use fgsp6::Rational;
use fgsp6::Scalar;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn d1_on_real_symmetric_is_determinant(v in prop::array::uniform6(rat())) {
        let w = diffop::hamilton_space();
        let d0 = diffop::build_d0();
        let m = Matrix::from_rows(vec![
            vec![v[0].clone(), v[3].clone(), v[4].clone()],
            vec![v[3].clone(), v[1].clone(), v[5].clone()],
            vec![v[4].clone(), v[5].clone(), v[2].clone()],
        ]);
        let p = WElement::new(Rational::zero(), JElement::from_symmetric(&m), JElement::zero(), Rational::zero());
        prop_assert_eq!(diffop::eval_d1(&w, &d0, &p), m.determinant());
        prop_assert_eq!(diffop::eval_d2(&w, &d0, &p), Rational::zero());
    }

    #[test]
    fn identities_at_random_points(v in prop::collection::vec(rat(), 32)) {
        let w = diffop::hamilton_space();
        let d0 = diffop::build_d0();
        let p = WElement::from_coords(&v);
        prop_assert!(diffop::check_point(&w, &d0, &p).is_ok());
        prop_assert_eq!(diffop::eval_d3(&w, &d0, &p), &p.d * &Rational::from(15));
    }
}

#[test]
fn twenty_nine_terms() {
    assert_eq!(diffop::build_d0().len(), 29);
}
