//! The constant-term table against the listed values and numeric oracles.

use fgsp6::ctable::{self, LocalPlace, Place};
use num_complex::Complex64;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

#[test]
fn listed_c_entries() {
    let want = [
        "1",
        "ζ(2s-1) / ζ(2s)",
        "ζ(2s-1) ζ_B(2s-3) / ζ(2s) ζ_B(2s-1)",
        "ζ(2s-5) ζ(2s-1) ζ_B(2s-3) / ζ(2s-4) ζ(2s) ζ_B(2s-1)",
        "ζ(2s-1) ζ_B(2s-5) / ζ(2s) ζ_B(2s-1)",
        "ζ(2s-5) ζ(2s-1) ζ_B(2s-5) / ζ(2s-4) ζ(2s) ζ_B(2s-1)",
        "ζ(2s-5) ζ(2s-1) ζ_B(2s-7) / ζ(2s-4) ζ(2s) ζ_B(2s-1)",
        "ζ(2s-9) ζ(2s-5) ζ(2s-1) ζ_B(2s-7) / ζ(2s-8) ζ(2s-4) ζ(2s) ζ_B(2s-1)",
    ];
    let got: Vec<String> = ctable::c_table().iter().map(ToString::to_string).collect();
    assert_eq!(got, want);
    assert_eq!(ctable::expand_place(&ctable::c_table()[7], Place::Split).to_string(), "ζ(2s-9) ζ(2s-7) ζ(2s-5) / ζ(2s-4) ζ(2s-2) ζ(2s)");
    assert_eq!(ctable::expand_place(&ctable::c_table()[7], Place::Ramified).to_string(), "ζ(2s-9) ζ(2s-7) ζ(2s-5) / ζ(2s-8) ζ(2s-4) ζ(2s)");
}

#[test]
fn gamma_known_values() {
    let pi = std::f64::consts::PI;
    assert!(close(ctable::gamma(Complex64::new(5.0, 0.0)).unwrap(), Complex64::new(24.0, 0.0), 1e-13));
    assert!(close(ctable::gamma(Complex64::new(0.5, 0.0)).unwrap(), Complex64::new(pi.sqrt(), 0.0), 1e-13));
    assert!(close(ctable::gamma(Complex64::new(-1.5, 0.0)).unwrap(), Complex64::new(4.0 * pi.sqrt() / 3.0, 0.0), 1e-13));
    let g = ctable::gamma(Complex64::new(1.0, 1.0)).unwrap();
    assert!(close(g * g.conj(), Complex64::new(pi / pi.sinh(), 0.0), 1e-13));
    assert!(ctable::gamma(Complex64::new(-2.0, 0.0)).is_err());
}

#[test]
fn local_factors_match_euler_products() {
    for p in [2u64, 3, 7] {
        for k in 0..6 {
            let s = Complex64::new(5.3 + 0.2 * k as f64, 0.7 - 0.3 * k as f64);
            let z = |x: f64| 1.0 / (1.0 - Complex64::from(p as f64).powc(-(2.0 * s - x)));
            let split = z(5.0) * z(7.0) * z(9.0) / (z(0.0) * z(2.0) * z(4.0));
            let ram = z(5.0) * z(7.0) * z(9.0) / (z(0.0) * z(4.0) * z(8.0));
            let c8 = &ctable::c_table()[7];
            assert!(close(ctable::numeric_local(c8, LocalPlace::Split(p), s).unwrap(), split, 1e-12));
            assert!(close(ctable::numeric_local(c8, LocalPlace::Ramified(p), s).unwrap(), ram, 1e-12));
        }
    }
}

#[test]
fn archimedean_factor_matches_display() {
    let c8 = &ctable::c_table()[7];
    for d in [2u64, 3, 5, 30] {
        for k in 0..8 {
            let s = Complex64::new(0.7 + 0.45 * k as f64, 1.3 - 0.35 * k as f64);
            let a = ctable::numeric_local(c8, LocalPlace::Arch(d), s).unwrap();
            let b = ctable::c_infinity_displayed(d, s).unwrap();
            assert!(close(a, b, 1e-9), "D = {d}, s = {s}: {a} vs {b}");
        }
    }
}

#[test]
fn functional_equation_two_routes() {
    for primes in [vec![2u64], vec![3], vec![5], vec![2, 3, 5]] {
        for k in 0..10 {
            let s = Complex64::new(0.55 + 0.37 * k as f64, -1.9 + 0.41 * k as f64);
            let v = ctable::functional_equation_constant(&primes, s).unwrap();
            assert!(close(v.closed_form, Complex64::new(1.0, 0.0), 1e-9), "{primes:?} s = {s}: {}", v.closed_form);
            assert!(close(v.chain, Complex64::new(1.0, 0.0), 1e-9), "{primes:?} s = {s}: {}", v.chain);
        }
    }
    assert!(ctable::functional_equation_constant(&[2, 3], Complex64::new(1.3, 0.2)).is_err());
    assert!(ctable::functional_equation_constant(&[4], Complex64::new(1.3, 0.2)).is_err());
}

#[test]
fn every_positive_root_pairs_affinely() {
    let table = ctable::pairing_table();
    assert_eq!(table.len(), 9);
    assert!(table.iter().all(|(r, _)| r.is_positive()));
}
