//! Quaternion orders against brute-force oracles.

use fgsp6::clifford::{self, CoefficientTable};
use fgsp6::matrix::Matrix;
use fgsp6::quat::{Quat, QuaternionRing, TernaryForm};
use fgsp6::{Rational, Scalar};

fn integral(q: &Quat<Rational>) -> bool {
    q.0.iter().all(Rational::is_integer)
}

/// Columns of `m` give `w_j = Σ_i m_ij v_i`.
fn columns(m: &Matrix<Rational>) -> [Quat<Rational>; 3] {
    std::array::from_fn(|j| Quat([Rational::zero(), m.get(0, j).clone(), m.get(1, j).clone(), m.get(2, j).clone()]))
}

/// `Z + Σ Z w_j` is closed under multiplication: every product has integral
/// coordinates in the basis `1, w1, w2, w3`, solved by hand.
fn closed_oracle(ring: &QuaternionRing, m: &Matrix<Rational>) -> bool {
    let w = columns(m);
    let inv = m.inverse().unwrap();
    let gens: Vec<Quat<Rational>> = std::iter::once(Quat::one()).chain(w.iter().cloned()).collect();
    gens.iter().all(|a| {
        gens.iter().all(|b| {
            let p = ring.mul(a, b);
            let im = [p.0[1].clone(), p.0[2].clone(), p.0[3].clone()];
            let coeffs: Vec<Rational> = (0..3).map(|j| (0..3).fold(Rational::zero(), |s, i| s + inv.get(j, i) * &im[i])).collect();
            p.0[0].is_integer() && coeffs.iter().all(Rational::is_integer)
        })
    })
}

/// Elements of an order have integral trace and norm.
fn is_integral_element(ring: &QuaternionRing, y: &Quat<Rational>) -> bool {
    ring.trace(y).is_integer() && ring.norm(y).is_integer()
}

/// Every Λ + Zy of prime index `p` is tested for closure. A squarefree
/// discriminant does not rule this out: Eichler orders have one.
fn has_prime_superorder(ring: &QuaternionRing, p: i64) -> bool {
    let std: Vec<Quat<Rational>> = (0..4).map(Quat::basis).collect();
    let inside = |q: &Quat<Rational>, y: &Quat<Rational>| (0..p).any(|t| integral(&q.sub(&y.scale(&Rational::from(t)))));
    for mask in 1..p.pow(4) {
        let c: [i64; 4] = std::array::from_fn(|i| (mask / p.pow(i as u32)) % p);
        let y = Quat(c.map(|x| Rational::new(x, p)));
        if !is_integral_element(ring, &y) {
            continue;
        }
        let gens: Vec<Quat<Rational>> = std.iter().cloned().chain([y.clone()]).collect();
        if gens.iter().all(|a| gens.iter().all(|b| inside(&ring.mul(a, b), &y))) {
            return true;
        }
    }
    false
}

/// Overorders `Λ + Zy1 + Zy2` of index `p²`: either `L/Λ` is cyclic (`y2 =
/// 0`, `y1` of order `p²`) or `y1, y2` both have order `p`. Some orders
/// (index 4 in the Hurwitz order, say) have no overorder of prime index.
fn has_square_superorder(ring: &QuaternionRing, p: i64) -> bool {
    let q = p * p;
    let std: Vec<Quat<Rational>> = (0..4).map(Quat::basis).collect();
    let point = |mask: i64, m: i64| Quat(std::array::from_fn::<i64, 4, _>(|i| (mask / m.pow(i as u32)) % m).map(|x| Rational::new(x, m)));
    let closed = |y1: &Quat<Rational>, o1: i64, y2: &Quat<Rational>, o2: i64| {
        let inside = |z: &Quat<Rational>| {
            (0..o1).any(|t1| (0..o2).any(|t2| integral(&z.sub(&y1.scale(&Rational::from(t1))).sub(&y2.scale(&Rational::from(t2))))))
        };
        let gens: Vec<Quat<Rational>> = std.iter().cloned().chain([y1.clone(), y2.clone()]).collect();
        gens.iter().all(|a| gens.iter().all(|b| inside(&ring.mul(a, b))))
    };
    let zero = Quat::zero();
    let small: Vec<Quat<Rational>> = (1..p.pow(4)).map(|m| point(m, p)).filter(|y| is_integral_element(ring, y)).collect();
    (1..q.pow(4)).map(|m| point(m, q)).any(|y| is_integral_element(ring, &y) && closed(&y, q, &zero, 1))
        || small.iter().enumerate().any(|(i, y1)| small[i + 1..].iter().any(|y2| closed(y1, p, y2, p)))
}

fn primes_dividing(n: i64) -> Vec<i64> {
    (2..=n.abs()).filter(|&p| (2..p).all(|d| p % d != 0) && n % p == 0).collect()
}

#[test]
fn suborder_count_matches_closure_oracle() {
    for t in [TernaryForm::hamilton(), TernaryForm::hurwitz(), TernaryForm::new(2, 3, 5, 1, 1, 1)] {
        let ring = QuaternionRing::from_form(t);
        for index in 1..=6 {
            let want = clifford::hnf_matrices(index).iter().filter(|m| closed_oracle(&ring, m)).count();
            let got = clifford::enumerate_suborders(t, index).iter().filter(|o| o.index == index).count();
            assert_eq!(got, want, "T = {t}, index {index}");
        }
    }
    let got = clifford::enumerate_suborders(TernaryForm::hamilton(), 2).iter().filter(|o| o.index == 2).count();
    assert_eq!(got, 3);
}

#[test]
fn maximality_matches_superorder_search() {
    let mut checked = 0;
    for a in 1..=2 {
        for b in 1..=3 {
            for c in 1..=3 {
                for d in -1..=1 {
                    for e in -1..=1 {
                        for f in -1..=1 {
                            let t = TernaryForm::new(a, b, c, d, e, f);
                            if !t.is_positive_definite() || t.four_det() > 40 {
                                continue;
                            }
                            let ring = QuaternionRing::from_form(t);
                            let n = t.four_det();
                            let witness = primes_dividing(n)
                                .into_iter()
                                .any(|p| has_prime_superorder(&ring, p) || (n % (p * p) == 0 && has_square_superorder(&ring, p)));
                            assert_eq!(clifford::is_maximal(t).unwrap(), !witness, "T = {t}, 4det = {}", t.four_det());
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn hurwitz_and_lipschitz() {
    let h = TernaryForm::hurwitz();
    assert_eq!(clifford::reduced_discriminant(h), 2);
    assert!(clifford::is_maximal(h).unwrap());
    assert!(!has_prime_superorder(&QuaternionRing::from_form(h), 2));
    let l = TernaryForm::hamilton();
    assert_eq!(clifford::reduced_discriminant(l), 4);
    assert!(!clifford::is_maximal(l).unwrap());
    assert!(has_prime_superorder(&QuaternionRing::from_form(l), 2));
}

/// A class invariant: `4det` and the number of vectors with `q(x) = 1, 2`.
fn invariant(t: TernaryForm) -> Rational {
    let mut count = [0i64; 3];
    for x in -4i64..=4 {
        for y in -4i64..=4 {
            for z in -4i64..=4 {
                let q = t.eval(x, y, z);
                if (1..=2).contains(&q) {
                    count[q as usize] += 1;
                }
            }
        }
    }
    Rational::from(t.four_det() + 100 * count[1] + 10_000 * count[2])
}

/// `Σ_{λ k = n} Σ_{m : det m = k, Λ(m) closed} a(λ T_m) k^{w-3}`, with `T_m`
/// read off the good basis of the sublattice and `a` evaluated directly.
fn dirichlet_oracle(t: TernaryForm, weight: i64, max_n: i64) -> Vec<(i64, Rational)> {
    let ring = QuaternionRing::from_form(t);
    (1..=max_n)
        .map(|n| {
            let mut total = Rational::zero();
            for k in (1..=n).filter(|k| n % k == 0) {
                let lambda = n / k;
                for m in clifford::hnf_matrices(k) {
                    if !closed_oracle(&ring, &m) {
                        continue;
                    }
                    let w = columns(&m).map(|q| q.scale(&Rational::from(lambda)));
                    let tf = clifford::form_of_basis(&ring, &w).unwrap();
                    let form = TernaryForm::from_array(tf.map(|x| x.to_i64().expect("integral form")));
                    total = total + invariant(form) * Rational::from(k).pow((weight - 3) as i32);
                }
            }
            (n, total)
        })
        .collect()
}

#[test]
fn dirichlet_matches_double_loop() {
    for (t, weight, max_n) in [(TernaryForm::hurwitz(), 4, 4), (TernaryForm::hurwitz(), 6, 6), (TernaryForm::hamilton(), 5, 4)] {
        let want = dirichlet_oracle(t, weight, max_n);
        let mut table = CoefficientTable::new();
        for k in 1..=max_n {
            for o in clifford::enumerate_suborders(t, k) {
                for lambda in 1..=max_n / o.index {
                    let f = o.form.scale(lambda);
                    table.insert(f, invariant(f)).unwrap();
                }
            }
        }
        let got = clifford::dirichlet_coefficients(t, weight, &table, max_n).unwrap();
        assert_eq!(got, want, "T = {t}, weight {weight}");
    }
}

#[test]
fn dirichlet_missing_class_names_the_form() {
    let mut table = CoefficientTable::new();
    table.insert(TernaryForm::hurwitz(), Rational::one()).unwrap();
    assert_eq!(clifford::dirichlet_coefficients(TernaryForm::hurwitz(), 4, &table, 1).unwrap(), vec![(1, Rational::one())]);
    let err = clifford::dirichlet_coefficients(TernaryForm::hurwitz(), 4, &table, 2).unwrap_err();
    assert!(matches!(err, fgsp6::Error::MissingCoefficient(_)), "{err}");
}

#[test]
fn coefficient_table_parses_and_canonicalizes() {
    let t: CoefficientTable = "# comment\n1 1 1 1 1 1 3/2\n\n2 3 5 1 1 1 -4 # trailing\n".parse().unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(t.get(TernaryForm::new(1, 1, 1, 1, 1, 1)).unwrap(), Rational::new(3, 2));
    assert!("1 1 1 1 1 1".parse::<CoefficientTable>().is_err());
    assert!("1 1 1 1 1 1 x".parse::<CoefficientTable>().is_err());
}

#[test]
fn suborder_discriminant_scales_by_index() {
    for t in [TernaryForm::hamilton(), TernaryForm::hurwitz(), TernaryForm::new(2, 3, 5, 1, 1, 1)] {
        for o in clifford::enumerate_suborders(t, 6) {
            assert_eq!(o.form.four_det(), o.index * t.four_det(), "T = {t}, m = {:?}", o.hnf);
        }
    }
}

