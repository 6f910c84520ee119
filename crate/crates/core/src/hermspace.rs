//! `H3(B ⊗ C)` and `W ⊗ C` over `Q(i)`: the rank-one embedding `r(Z)`, the
//! factor of automorphy, and the action on the Hermitian symmetric space.
//!
//! `|z|²` is always `z σ(z)`; nothing here takes a square root.

use crate::error::{Error, Result};
use crate::freudenthal::{Freudenthal, GroupElement, WElement};
use crate::gsp6::{self, GSp6Element};
use crate::jordan::JElement;
use crate::matrix::Matrix;
use crate::scalar::{Gaussian, Rational, Scalar};

pub type CJElement = JElement<Gaussian>;
pub type CWElement = WElement<Gaussian>;

pub fn lift_j(x: &JElement<Rational>) -> CJElement {
    x.map(Gaussian::from_rational)
}

pub fn lift_w(v: &WElement<Rational>) -> CWElement {
    v.map(Gaussian::from_rational)
}

pub fn sigma_j(z: &CJElement) -> CJElement {
    z.map(Gaussian::conj)
}

pub fn sigma_w(v: &CWElement) -> CWElement {
    v.map(Gaussian::conj)
}

pub fn real_part(z: &CJElement) -> JElement<Rational> {
    z.map(|x| x.re.clone())
}

/// `ℑ(Z) = (Z - σZ) / 2i`.
pub fn imag_part(z: &CJElement) -> JElement<Rational> {
    z.map(|x| x.im.clone())
}

/// `i · 1₃`.
pub fn i_one() -> CJElement {
    JElement::scalar(Gaussian::i())
}

/// `r(Z) = e n(-Z) = (1, -Z, Z#, -N(Z))`.
pub fn r_of(w: &Freudenthal, z: &CJElement) -> CWElement {
    w.apply_n(&z.neg(), &WElement::e())
}

/// Leading principal minors `c1`, `c1 c2 - n(a3)` and `N(Y)` all positive.
pub fn is_positive(w: &Freudenthal, y: &JElement<Rational>) -> bool {
    let ring = w.ring();
    let m2 = &(&y.c[0] * &y.c[1]) - &ring.norm(&y.a[2]);
    y.c[0].is_positive() && m2.is_positive() && w.jordan().norm(y).is_positive()
}

/// A point `Z = X + iY` with `Y` positive.
#[derive(Clone, PartialEq, Debug)]
pub struct PointH {
    z: CJElement,
}

impl PointH {
    pub fn new(w: &Freudenthal, z: CJElement) -> Result<Self> {
        if !is_positive(w, &imag_part(&z)) {
            return Err(Error::Domain(format!("imaginary part of {z} is not positive")));
        }
        Ok(PointH { z })
    }

    pub fn i() -> Self {
        PointH { z: i_one() }
    }

    pub fn z(&self) -> &CJElement {
        &self.z
    }
}

fn positive_similitude(g: &GroupElement) -> Result<()> {
    if !g.nu().is_positive() {
        return Err(Error::Precondition(format!("similitude {} is not positive", g.nu())));
    }
    Ok(())
}

/// `j(g, Z) = ⟨r(Z) g⁻¹, f⟩`, the `a`-slot of `r(Z) g⁻¹`.
pub fn j_factor(w: &Freudenthal, g: &GroupElement, z: &PointH) -> Result<Gaussian> {
    positive_similitude(g)?;
    let u = g.inverse().apply(&r_of(w, &z.z));
    if u.a.is_zero() {
        return Err(Error::DegeneratePoint(format!("j(g, Z) = 0 at Z = {}", z.z)));
    }
    Ok(u.a)
}

/// Solves `r(Z) g⁻¹ = j(g, Z) r(gZ)`, checking every slot.
pub fn act_on_h(w: &Freudenthal, g: &GroupElement, z: &PointH) -> Result<(Gaussian, PointH)> {
    positive_similitude(g)?;
    let u = g.inverse().apply(&r_of(w, &z.z));
    let j = u.a.clone();
    let jinv = j.inv().ok_or_else(|| Error::DegeneratePoint(format!("j(g, Z) = 0 at Z = {}", z.z)))?;
    let gz = u.b.scale(&jinv.neg());
    if r_of(w, &gz).scale(&j) != u {
        return Err(Error::Internal(format!("r(Z)g⁻¹ = {u} is not j·r(gZ)")));
    }
    if !is_positive(w, &imag_part(&gz)) {
        return Err(Error::Domain(format!("gZ = {gz} has non-positive imaginary part")));
    }
    Ok((j, PointH { z: gz }))
}

/// `||v||² = ⟨v, vJ⟩`.
pub fn norm_sq(w: &Freudenthal, v: &CWElement) -> Gaussian {
    w.norm_sq(v)
}

/// `⟨r(i), v⟩ σ⟨r(i), v⟩ = ||v||²` for real rank-one `v`.
pub fn check_rk1_norm(w: &Freudenthal, v: &WElement<Rational>) -> Result<()> {
    let r = w.rank(v);
    if r != 1 {
        return Err(Error::Precondition(format!("v has rank {r}, not 1")));
    }
    let v = lift_w(v);
    let p = w.symplectic(&r_of(w, &i_one()), &v);
    let lhs = p.mul(&p.conj());
    let rhs = norm_sq(w, &v);
    if lhs != rhs {
        return Err(Error::Internal(format!("|⟨r(i), v⟩|² = {lhs} but ||v||² = {rhs} for v = {v}")));
    }
    Ok(())
}

/// `N(ℑZ) = ⟨σ r(Z), r(Z)⟩ / 8i`.
pub fn im_norm_identity(w: &Freudenthal, z: &CJElement) -> Result<()> {
    let lhs = Gaussian::real(w.jordan().norm(&imag_part(z)));
    let r = r_of(w, z);
    let rhs = w.symplectic(&sigma_w(&r), &r).div(&Gaussian::imag(Rational::from(8))).expect("8i ≠ 0");
    if lhs != rhs {
        return Err(Error::Internal(format!("N(ℑZ) = {lhs} but ⟨σr(Z), r(Z)⟩/8i = {rhs} at Z = {z}")));
    }
    Ok(())
}

/// `Z` as a scalar symmetric matrix, if its off-diagonal entries are scalars.
pub fn to_siegel(z: &CJElement) -> Option<Matrix<Gaussian>> {
    z.to_symmetric()
}

/// `tr(T Z)` for the half-integral matrix of the ring's form.
fn trace_tz(t: &Matrix<Rational>, z: &Matrix<Gaussian>) -> Gaussian {
    let mut s = Gaussian::zero();
    for i in 0..3 {
        for k in 0..3 {
            s.add_mul(&Gaussian::from_rational(t.get(i, k)), z.get(k, i));
        }
    }
    s
}

/// `ν(g)⁻¹ j(g, i)⁻¹ ⟨r(i), f_O ι(g)⟩ = tr(T (g·i))` for Siegel-parabolic
/// `g` with `ν > 0`. Returns the common value.
pub fn f_o_eqn_check(w: &Freudenthal, g: &GSp6Element) -> Result<Gaussian> {
    if !g.is_siegel_parabolic() {
        return Err(Error::Precondition("g is not in the Siegel parabolic".into()));
    }
    let ig = gsp6::iota_trusted(w, g)?;
    let j = j_factor(w, &ig, &PointH::i())?;
    let fog = ig.apply(&lift_w(&gsp6::f_o(w)));
    let pair = w.symplectic(&r_of(w, &i_one()), &fog);
    let nu = Gaussian::from_rational(g.nu());
    let lhs = pair.div(&nu.mul(&j)).expect("ν j ≠ 0");
    let (_, gi) = g.siegel_act(&to_siegel(&i_one()).expect("scalar"))?;
    let rhs = trace_tz(&w.ring().form().half_matrix(), &gi);
    if lhs != rhs {
        return Err(Error::Internal(format!("f_O identity fails: {lhs} ≠ tr(T g·i) = {rhs}")));
    }
    Ok(lhs)
}

/// `h = n(i 1₃) n̄((i/2) 1₃)` applied on the right.
pub fn apply_h(w: &Freudenthal, v: &CWElement) -> CWElement {
    let x = i_one();
    let y = JElement::scalar(Gaussian::imag(Rational::new(1, 2)));
    w.apply_nbar(&y, &w.apply_n(&x, v))
}

/// Slots of `v = 8i J f g h` with `J = ⟨r(i), f g⟩`.
#[derive(Clone, PartialEq, Debug)]
pub struct DPhiReport {
    pub j: Gaussian,
    pub v: CWElement,
}

/// `v` has rank one, `a = |J|²`, `d = 8iJ²` and
/// `N(b) - 3tr(b,c) + 15d = 8i(|J|⁴ - 9|J|² + 15)J²`.
pub fn dphi_core_check(w: &Freudenthal, g: &GroupElement) -> Result<DPhiReport> {
    positive_similitude(g)?;
    let jor = w.jordan();
    let fg = g.apply(&WElement::<Gaussian>::f());
    let j = w.symplectic(&r_of(w, &i_one()), &fg);
    let eight_i = Gaussian::imag(Rational::from(8));
    let v = apply_h(w, &fg).scale(&eight_i.mul(&j));
    let abs2 = j.mul(&j.conj());
    let j2 = j.mul(&j);
    let fail = |what: &str| Err(Error::Internal(format!("{what} fails for J = {j}, v = {v}")));
    if w.rank(&v) != 1 {
        return fail("rank one");
    }
    if v.a != abs2 {
        return fail("a = |J|²");
    }
    if v.d != eight_i.mul(&j2) {
        return fail("d = 8iJ²");
    }
    let lhs = jor.norm(&v.b).sub(&jor.trace_pair(&v.b, &v.c).mul_i64(3)).add(&v.d.mul_i64(15));
    let poly = abs2.mul(&abs2).sub(&abs2.mul_i64(9)).add(&Gaussian::from_i64(15));
    if lhs != eight_i.mul(&poly).mul(&j2) {
        return fail("N(b) - 3tr(b,c) + 15d");
    }
    Ok(DPhiReport { j, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{QuaternionRing, TernaryForm};

    fn space() -> Freudenthal {
        Freudenthal::new(QuaternionRing::shared(TernaryForm::hamilton()))
    }

    #[test]
    fn r_of_i() {
        let w = space();
        let r = r_of(&w, &i_one());
        let one = JElement::<Gaussian>::identity();
        assert_eq!(r, WElement::new(Gaussian::one(), one.scale(&Gaussian::i()).neg(), one.neg(), Gaussian::i()));
        assert_eq!(r_of(&w, &JElement::zero()), WElement::e());
        assert_eq!(w.rank(&r), 1);
    }

    #[test]
    fn j_of_j6_and_translation() {
        let w = space();
        let jm = w.op_j().unwrap();
        assert_eq!(j_factor(&w, &jm, &PointH::i()).unwrap(), Gaussian::i());
        assert_eq!(j_factor(&w, &GroupElement::identity(), &PointH::i()).unwrap(), Gaussian::one());
        let x = JElement::<Rational>::basis(4);
        let (j, z) = act_on_h(&w, &w.op_n(&x).unwrap(), &PointH::i()).unwrap();
        assert_eq!(j, Gaussian::one());
        assert_eq!(z.z(), &i_one().add(&lift_j(&x)));
    }

    #[test]
    fn identities_at_i() {
        let w = space();
        im_norm_identity(&w, &i_one()).unwrap();
        check_rk1_norm(&w, &WElement::f()).unwrap();
        assert_eq!(f_o_eqn_check(&w, &GSp6Element::identity()).unwrap(), Gaussian::imag(Rational::from(3)));
        let rep = dphi_core_check(&w, &GroupElement::identity()).unwrap();
        assert_eq!(rep.j, Gaussian::one());
    }
}
