//! The `C3` root system of the Siegel-type parabolic, the character `λ_s`,
//! Gindikin–Karpelevich products over the eight Weyl cosets, and numeric
//! evaluation of local factors.
//!
//! Factor arguments are exact affine forms `k s + c`; floats only appear in
//! the `numeric_*` functions.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// `k s + c2 / 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Affine {
    pub k: i64,
    pub c2: i64,
}

impl Affine {
    pub const fn new(k: i64, c2: i64) -> Self {
        Affine { k, c2 }
    }

    /// `k s + c` with integer `c`.
    pub const fn int(k: i64, c: i64) -> Self {
        Affine { k, c2: 2 * c }
    }

    pub fn add(self, o: Affine) -> Affine {
        Affine::new(self.k + o.k, self.c2 + o.c2)
    }

    pub fn neg(self) -> Affine {
        Affine::new(-self.k, -self.c2)
    }

    pub fn scale(self, n: i64) -> Affine {
        Affine::new(self.k * n, self.c2 * n)
    }

    pub fn shift(self, c: i64) -> Affine {
        Affine::new(self.k, self.c2 + 2 * c)
    }

    pub fn eval(self, s: Complex64) -> Complex64 {
        s * self.k as f64 + self.c2 as f64 / 2.0
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.c2 % 2 == 0 { format!("{}", (self.c2 / 2).abs()) } else { format!("{}/2", self.c2.abs()) };
        match self.k {
            0 => return write!(f, "{}{c}", if self.c2 < 0 { "-" } else { "" }),
            1 => write!(f, "s")?,
            -1 => write!(f, "-s")?,
            k => write!(f, "{k}s")?,
        }
        match self.c2.cmp(&0) {
            Ordering::Less => write!(f, "-{c}"),
            Ordering::Greater => write!(f, "+{c}"),
            Ordering::Equal => Ok(()),
        }
    }
}

/// `λ_s = (s - 9/2) u1 + (s - 5/2) u2 + (s - 1/2) u3`.
pub fn lambda_s() -> [Affine; 3] {
    [Affine::new(1, -9), Affine::new(1, -5), Affine::new(1, -1)]
}

/// Exponents of `|ν|, |m1|, |m2|, |m3|` in `χ_s`.
pub fn chi_exponents() -> [Affine; 4] {
    [Affine::int(3, 0), Affine::int(1, 0), Affine::int(1, 0), Affine::int(1, 0)]
}

/// Exponents of `|ν|, |m1|, |m2|, |m3|` in `δ_{P0}`.
pub fn delta_exponents() -> [i64; 4] {
    [15, 9, 5, 1]
}

/// `χ_s δ^{-1/2}`, exponent by exponent.
pub fn lambda_from_chi_delta() -> [Affine; 4] {
    let (chi, delta) = (chi_exponents(), delta_exponents());
    std::array::from_fn(|i| chi[i].add(Affine::new(0, -delta[i])))
}

/// A root `Σ n_i u_i` of `C3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct RootC3(pub [i8; 3]);

impl RootC3 {
    pub fn long(i: usize, sign: i8) -> Self {
        let mut v = [0; 3];
        v[i] = 2 * sign;
        RootC3(v)
    }

    pub fn short(i: usize, si: i8, j: usize, sj: i8) -> Self {
        let mut v = [0; 3];
        v[i] = si;
        v[j] = sj;
        RootC3(v)
    }

    pub fn is_long(&self) -> bool {
        self.0.iter().any(|&x| x.abs() == 2)
    }

    /// Positive for the ordering with simple roots `u1 - u2`, `u2 - u3`, `2u3`.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
    }

    pub fn neg(&self) -> Self {
        RootC3(self.0.map(|x| -x))
    }

    /// `⟨β^∨, Σ s_i u_i⟩`: `s_i` for `2u_i`, `±s_i ± s_j` for short roots.
    pub fn coroot_pairing(&self, lambda: &[Affine; 3]) -> Affine {
        let div = if self.is_long() { 2 } else { 1 };
        (0..3).fold(Affine::new(0, 0), |acc, i| acc.add(lambda[i].scale((self.0[i] / div) as i64)))
    }
}

impl fmt::Display for RootC3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &n) in self.0.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let sign = if n < 0 { "-" } else if first { "" } else { "+" };
            let coef = if n.abs() == 2 { "2" } else { "" };
            write!(f, "{sign}{coef}u{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// All 18 roots.
pub fn roots() -> Vec<RootC3> {
    let mut out = Vec::new();
    for i in 0..3 {
        for s in [1, -1] {
            out.push(RootC3::long(i, s));
        }
        for j in i + 1..3 {
            for si in [1, -1] {
                for sj in [1, -1] {
                    out.push(RootC3::short(i, si, j, sj));
                }
            }
        }
    }
    out
}

pub fn positive_roots() -> Vec<RootC3> {
    roots().into_iter().filter(RootC3::is_positive).collect()
}

/// A signed permutation: `u_i ↦ sign[i] u_{perm[i]}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    pub perm: [usize; 3],
    pub sign: [i8; 3],
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { perm: [0, 1, 2], sign: [1, 1, 1] }
    }

    /// `s1, s2` swap `u1 ↔ u2`, `u2 ↔ u3`; `s3` negates `u3`.
    pub fn simple(k: usize) -> Self {
        match k {
            0 => WeylElement { perm: [1, 0, 2], sign: [1, 1, 1] },
            1 => WeylElement { perm: [0, 2, 1], sign: [1, 1, 1] },
            2 => WeylElement { perm: [0, 1, 2], sign: [1, 1, -1] },
            _ => panic!("C3 has three simple reflections"),
        }
    }

    pub fn apply(&self, r: &RootC3) -> RootC3 {
        let mut out = [0i8; 3];
        for i in 0..3 {
            out[self.perm[i]] += self.sign[i] * r.0[i];
        }
        RootC3(out)
    }

    /// `(self ∘ o)(x) = self(o(x))`.
    pub fn compose(&self, o: &WeylElement) -> WeylElement {
        let mut perm = [0; 3];
        let mut sign = [0; 3];
        for i in 0..3 {
            perm[i] = self.perm[o.perm[i]];
            sign[i] = o.sign[i] * self.sign[o.perm[i]];
        }
        WeylElement { perm, sign }
    }

    /// `s_{w[0]} s_{w[1]} ⋯`.
    pub fn from_word(word: &[usize]) -> Self {
        word.iter().fold(Self::identity(), |acc, &k| acc.compose(&Self::simple(k)))
    }

    /// Negative roots `β` with `w(β) > 0`, sorted.
    pub fn inversion_set(&self) -> Vec<RootC3> {
        let mut s: Vec<RootC3> = roots().into_iter().filter(|r| !r.is_positive() && self.apply(r).is_positive()).collect();
        s.sort();
        s
    }

    /// All 48 elements.
    pub fn all() -> Vec<WeylElement> {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = Vec::new();
        for perm in perms {
            for m in 0..8 {
                let sign = [0, 1, 2].map(|i| if m >> i & 1 == 1 { -1 } else { 1 });
                out.push(WeylElement { perm, sign });
            }
        }
        out
    }
}

/// `-β_k` for `w = s_{i1} ⋯ s_{ir}`, `β_k = s_{ir} ⋯ s_{i(k+1)}(α_{ik})`, in
/// the order of the word.
pub fn word_inversions(word: &[usize]) -> Vec<RootC3> {
    let simple = [RootC3([1, -1, 0]), RootC3([0, 1, -1]), RootC3([0, 0, 2])];
    (0..word.len())
        .map(|k| {
            let tail: Vec<usize> = word[k + 1..].iter().rev().copied().collect();
            WeylElement::from_word(&tail).apply(&simple[word[k]]).neg()
        })
        .collect()
}

/// Reduced words for `w`, shortest first, by breadth-first search.
pub fn reduced_words(w: &WeylElement, limit: usize) -> Vec<Vec<usize>> {
    let len = w.inversion_set().len();
    let mut out = Vec::new();
    let mut frontier = vec![(vec![], WeylElement::identity())];
    for _ in 0..len {
        let mut next = Vec::new();
        for (word, e) in frontier {
            for k in 0..3 {
                let f = e.compose(&WeylElement::simple(k));
                if f.inversion_set().len() == word.len() + 1 {
                    let mut nw = word.clone();
                    nw.push(k);
                    next.push((nw, f));
                }
            }
        }
        frontier = next;
    }
    for (word, e) in frontier {
        if &e == w && out.len() < limit {
            out.push(word);
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Symbol {
    /// `ζ_v`.
    Zeta,
    /// `ζ_{B_v}`.
    ZetaB,
    GammaR,
    GammaC,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Zeta => "ζ",
            Symbol::ZetaB => "ζ_B",
            Symbol::GammaR => "Γ_R",
            Symbol::GammaC => "Γ_C",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Factor {
    pub symbol: Symbol,
    pub arg: Affine,
}

impl Factor {
    pub fn new(symbol: Symbol, arg: Affine) -> Self {
        Factor { symbol, arg }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.symbol, self.arg)
    }
}

/// `D_B^{k s + c} · Π num / Π den`, kept canonical: both sides sorted and
/// common factors cancelled.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ZetaFactorProduct {
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
    /// Exponent of `D_B` as `(k, c)` with `k s + c`.
    #[serde(serialize_with = "ser_pair")]
    pub d_exponent: (Rational, Rational),
}

fn ser_pair<S: serde::Serializer>(p: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&p.0.to_string())?;
    t.serialize_element(&p.1.to_string())?;
    t.end()
}

impl Default for ZetaFactorProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl ZetaFactorProduct {
    pub fn one() -> Self {
        ZetaFactorProduct { num: vec![], den: vec![], d_exponent: (Rational::zero(), Rational::zero()) }
    }

    pub fn ratio(num: Factor, den: Factor) -> Self {
        Self::new(vec![num], vec![den])
    }

    pub fn new(num: Vec<Factor>, den: Vec<Factor>) -> Self {
        let mut p = ZetaFactorProduct { num, den, d_exponent: (Rational::zero(), Rational::zero()) };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        self.num.sort();
        self.den.sort();
        let (mut num, mut den) = (Vec::new(), Vec::new());
        let (mut i, mut j) = (0, 0);
        while i < self.num.len() && j < self.den.len() {
            match self.num[i].cmp(&self.den[j]) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Less => {
                    num.push(self.num[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    den.push(self.den[j]);
                    j += 1;
                }
            }
        }
        num.extend_from_slice(&self.num[i..]);
        den.extend_from_slice(&self.den[j..]);
        self.num = num;
        self.den = den;
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = ZetaFactorProduct {
            num: [self.num.clone(), o.num.clone()].concat(),
            den: [self.den.clone(), o.den.clone()].concat(),
            d_exponent: (&self.d_exponent.0 + &o.d_exponent.0, &self.d_exponent.1 + &o.d_exponent.1),
        };
        p.canonicalize();
        p
    }

    pub fn is_one(&self) -> bool {
        self.num.is_empty() && self.den.is_empty() && self.d_exponent.0.is_zero() && self.d_exponent.1.is_zero()
    }
}

impl fmt::Display for ZetaFactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Factor]| v.iter().map(Factor::to_string).collect::<Vec<_>>().join(" ");
        let (k, c) = &self.d_exponent;
        let mut parts = Vec::new();
        if !k.is_zero() || !c.is_zero() {
            let e = match (k.is_zero(), c.is_zero()) {
                (true, _) => c.to_string(),
                (false, true) => format!("{k}s"),
                (false, false) if c.is_negative() => format!("{k}s-{}", c.abs()),
                _ => format!("{k}s+{c}"),
            };
            parts.push(format!("D^({e})"));
        }
        if !self.num.is_empty() {
            parts.push(join(&self.num));
        }
        let num = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
        if self.den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num} / {}", join(&self.den))
        }
    }
}

/// Product over `β ∈ S` of `ζ(2x)/ζ(2x+1)` (long `-β`) or
/// `ζ_B(x)/ζ_B(x+2)` (short `-β`), `x = ⟨(-β)^∨, λ_s⟩`.
pub fn c_factor(s: &[RootC3]) -> Result<ZetaFactorProduct> {
    let mut key: Vec<RootC3> = s.to_vec();
    key.sort();
    key.dedup();
    if key.len() != s.len() || !WeylElement::all().iter().any(|w| w.inversion_set() == key) {
        return Err(Error::Domain(format!("not an inversion set: {}", fmt_roots(s))));
    }
    let lambda = lambda_s();
    let mut out = ZetaFactorProduct::one();
    for beta in s {
        let x = beta.neg().coroot_pairing(&lambda);
        let f = if beta.is_long() {
            ZetaFactorProduct::ratio(Factor::new(Symbol::Zeta, x.scale(2)), Factor::new(Symbol::Zeta, x.scale(2).shift(1)))
        } else {
            ZetaFactorProduct::ratio(Factor::new(Symbol::ZetaB, x), Factor::new(Symbol::ZetaB, x.shift(2)))
        };
        out = out.mul(&f);
    }
    Ok(out)
}

pub fn fmt_roots(s: &[RootC3]) -> String {
    format!("{{{}}}", s.iter().map(RootC3::to_string).collect::<Vec<_>>().join(", "))
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct WeylCosetEntry {
    pub index: usize,
    pub roots: Vec<RootC3>,
}

/// `S_1 ⊂ ⋯ ⊂ S_8` as the chain of added roots: `S_4` and `S_5` both
/// extend `S_3`.
pub fn weyl_chain() -> Vec<WeylCosetEntry> {
    let neg = |r: RootC3| r.neg();
    let add: [(usize, Option<RootC3>); 8] = [
        (0, None),
        (1, Some(neg(RootC3::long(2, 1)))),
        (2, Some(neg(RootC3::short(1, 1, 2, 1)))),
        (3, Some(neg(RootC3::long(1, 1)))),
        (3, Some(neg(RootC3::short(0, 1, 2, 1)))),
        (5, Some(neg(RootC3::long(1, 1)))),
        (6, Some(neg(RootC3::short(0, 1, 1, 1)))),
        (7, Some(neg(RootC3::long(0, 1)))),
    ];
    let mut out: Vec<WeylCosetEntry> = Vec::new();
    for (i, (parent, r)) in add.into_iter().enumerate() {
        let mut roots = if parent == 0 { vec![] } else { out[parent - 1].roots.clone() };
        roots.extend(r);
        out.push(WeylCosetEntry { index: i + 1, roots });
    }
    out
}

/// `c_1, …, c_8`.
pub fn c_table() -> Vec<ZetaFactorProduct> {
    weyl_chain().iter().map(|e| c_factor(&e.roots).expect("chain sets are inversion sets")).collect()
}

/// `w_8: u1 ↦ -u3, u2 ↦ -u2, u3 ↦ -u1`.
pub fn w8() -> WeylElement {
    WeylElement { perm: [2, 1, 0], sign: [-1, -1, -1] }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Place {
    Split,
    Ramified,
    Arch,
}

impl std::str::FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(Place::Split),
            "ramified" => Ok(Place::Ramified),
            "arch" => Ok(Place::Arch),
            _ => Err(Error::Parse(format!("unknown place {s:?}; expected split, ramified or arch"))),
        }
    }
}

/// Split: `ζ_B(x) = ζ(x)ζ(x-1)`. Ramified: `ζ_B(x) = ζ(x)`. Arch:
/// `ζ_B(x) = D^{x/2} Γ_C(x)` and `ζ = Γ_R`.
pub fn expand_place(p: &ZetaFactorProduct, place: Place) -> ZetaFactorProduct {
    let mut dk = Rational::zero();
    let mut dc = Rational::zero();
    let mut expand = |fs: &[Factor], sign: i64| -> Vec<Factor> {
        let mut out = Vec::new();
        for f in fs {
            match (f.symbol, place) {
                (Symbol::ZetaB, Place::Split) => {
                    out.push(Factor::new(Symbol::Zeta, f.arg));
                    out.push(Factor::new(Symbol::Zeta, f.arg.shift(-1)));
                }
                (Symbol::ZetaB, Place::Ramified) => out.push(Factor::new(Symbol::Zeta, f.arg)),
                (Symbol::ZetaB, Place::Arch) => {
                    dk = &dk + &Rational::new(sign * f.arg.k, 2);
                    dc = &dc + &Rational::new(sign * f.arg.c2, 4);
                    out.push(Factor::new(Symbol::GammaC, f.arg));
                }
                (Symbol::Zeta, Place::Arch) => out.push(Factor::new(Symbol::GammaR, f.arg)),
                _ => out.push(*f),
            }
        }
        out
    };
    let num = expand(&p.num, 1);
    let den = expand(&p.den, -1);
    let mut out = ZetaFactorProduct::new(num, den);
    out.d_exponent = (&p.d_exponent.0 + &dk, &p.d_exponent.1 + &dc);
    out
}

const POLE_TOL: f64 = 1e-8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex `Γ` by the Lanczos approximation with reflection.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    let n = z.re.round();
    if n <= 0.0 && (z - n).norm() < POLE_TOL {
        return Err(Error::Pole(format!("Γ has a pole at {n}")));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if z.re < 0.5 {
        return Complex64::from(pi) / ((z * pi).sin() * gamma_unchecked(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::from(LANCZOS[0]);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * pi).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `Γ_R(s) = π^{-s/2} Γ(s/2)`.
pub fn gamma_r(s: Complex64) -> Result<Complex64> {
    Ok(Complex64::from(std::f64::consts::PI).powc(-s / 2.0) * gamma(s / 2.0)?)
}

/// `Γ_C(s) = 2 (2π)^{-s} Γ(s)`.
pub fn gamma_c(s: Complex64) -> Result<Complex64> {
    Ok(2.0 * Complex64::from(2.0 * std::f64::consts::PI).powc(-s) * gamma(s)?)
}

/// `ζ_p(s) = (1 - p^{-s})⁻¹`.
pub fn zeta_p(p: u64, s: Complex64) -> Result<Complex64> {
    let d = 1.0 - Complex64::from(p as f64).powc(-s);
    if d.norm() < POLE_TOL {
        return Err(Error::Pole(format!("ζ_{p} has a pole at {s}")));
    }
    Ok(1.0 / d)
}

/// Where to evaluate a product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocalPlace {
    Split(u64),
    Ramified(u64),
    /// The real place, with the discriminant `D_B`.
    Arch(u64),
}

/// Expands `p` at the place and evaluates it at `s`.
pub fn numeric_local(p: &ZetaFactorProduct, at: LocalPlace, s: Complex64) -> Result<Complex64> {
    let (place, prime, d) = match at {
        LocalPlace::Split(p) => (Place::Split, p, 1),
        LocalPlace::Ramified(p) => (Place::Ramified, p, 1),
        LocalPlace::Arch(d) => (Place::Arch, 0, d),
    };
    let e = expand_place(p, place);
    let one = |f: &Factor| -> Result<Complex64> {
        let x = f.arg.eval(s);
        match f.symbol {
            Symbol::Zeta => zeta_p(prime, x),
            Symbol::GammaR => gamma_r(x),
            Symbol::GammaC => gamma_c(x),
            Symbol::ZetaB => unreachable!("expanded"),
        }
    };
    let mut out = Complex64::from(1.0);
    for f in &e.num {
        out *= one(f)?;
    }
    for f in &e.den {
        out /= one(f)?;
    }
    let exp = s * e.d_exponent.0.to_f64() + e.d_exponent.1.to_f64();
    Ok(out * Complex64::from(d as f64).powc(exp))
}

/// Both evaluations of `E0*(g, 5-s) / E0*(g, s)`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct FunctionalEquationValue {
    /// `D^{8-2s} Π(-p^{2s-8}) sin(π(s-3)) / sin(πs)`.
    pub closed_form: Complex64,
    /// `D^{8-2s} Π ζ_p(2s-8)/ζ_p(8-2s) · Γ_R(2-2s)Γ_R(2s) / (Γ_R(2s-6)Γ_R(8-2s))`.
    pub chain: Complex64,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn functional_equation_constant(primes: &[u64], s: Complex64) -> Result<FunctionalEquationValue> {
    if primes.iter().any(|&p| !is_prime(p)) {
        return Err(Error::Domain(format!("{primes:?} contains a non-prime")));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(Error::Domain("ramified primes must be distinct".into()));
    }
    if primes.len().is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "B must ramify at an even number of places; with ∞ that needs an odd number of finite primes, got {}",
            primes.len()
        )));
    }
    let pi = std::f64::consts::PI;
    let sin_s = (s * pi).sin();
    if sin_s.norm() < POLE_TOL {
        return Err(Error::Pole(format!("sin(πs) vanishes at s = {s}")));
    }
    let d = Complex64::from(primes.iter().product::<u64>() as f64);
    let dpow = d.powc(8.0 - 2.0 * s);
    let mut closed = dpow * ((s - 3.0) * pi).sin() / sin_s;
    let mut chain = dpow;
    for &p in primes {
        closed *= -Complex64::from(p as f64).powc(2.0 * s - 8.0);
        chain *= zeta_p(p, 2.0 * s - 8.0)? / zeta_p(p, 8.0 - 2.0 * s)?;
    }
    chain *= gamma_r(2.0 - 2.0 * s)? * gamma_r(2.0 * s)? / (gamma_r(2.0 * s - 6.0)? * gamma_r(8.0 - 2.0 * s)?);
    Ok(FunctionalEquationValue { closed_form: closed, chain })
}

/// The displayed archimedean factor
/// `D^{-3} Γ_C(2s-5)Γ_C(2s-7)Γ_C(2s-9) / (Γ_R(2s)Γ_R(2s-4)Γ_R(2s-8))²`.
pub fn c_infinity_displayed(d: u64, s: Complex64) -> Result<Complex64> {
    let num = gamma_c(2.0 * s - 5.0)? * gamma_c(2.0 * s - 7.0)? * gamma_c(2.0 * s - 9.0)?;
    let den = gamma_r(2.0 * s)? * gamma_r(2.0 * s - 4.0)? * gamma_r(2.0 * s - 8.0)?;
    Ok(Complex64::from(d as f64).powi(-3) * num / (den * den))
}

/// Normalizing factors of `E*_{2r}`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct NormalizationFactors {
    pub r: i64,
    /// `Γ_R` arguments of the archimedean section.
    pub section_gamma_r: Vec<Affine>,
    /// `π^{-(s+r)} D^s Γ_R(2s+2r-4) Γ_R(2s+2r-8)`.
    pub pi_exponent: Affine,
    pub d_exponent: Affine,
    pub eisenstein_gamma_r: Vec<Affine>,
}

pub fn normalization_factors(r: i64) -> Result<NormalizationFactors> {
    if r < 0 {
        return Err(Error::Domain("r must be non-negative".into()));
    }
    let base = Affine::int(2, 2 * r);
    Ok(NormalizationFactors {
        r,
        section_gamma_r: vec![base, base.shift(-4), base.shift(-8)],
        pi_exponent: Affine::int(-1, -r),
        d_exponent: Affine::int(1, 0),
        eisenstein_gamma_r: vec![base.shift(-4), base.shift(-8)],
    })
}

/// `⟨β^∨, λ_s⟩` for the nine positive roots.
pub fn pairing_table() -> Vec<(RootC3, Affine)> {
    let lambda = lambda_s();
    positive_roots().into_iter().map(|r| (r, r.coroot_pairing(&lambda))).collect()
}
