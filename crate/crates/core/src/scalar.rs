//! Exact scalars.
//!
//! [`Rational`] keeps numerator and denominator inline as `i128` while they
//! fit and falls back to a boxed `BigRational` otherwise, so integer-heavy
//! workloads stay allocation free. [`Gaussian`] is `Q(i)` built on top.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Field operations shared by [`Rational`] and [`Gaussian`].
///
/// Methods take references so generic code never moves big values.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation; the identity on rationals.
    fn conj(&self) -> Self;
    /// Smallest positive integer `d` with `d * self` integral.
    fn denominator(&self) -> Rational;
    fn mul_rational(&self, q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn mul_i64(&self, k: i64) -> Self {
        match k {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => self.neg(),
            _ => self.mul(&Self::from_i64(k)),
        }
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Scalar::add(self, o);
    }

    fn sub_assign(&mut self, o: &Self) {
        *self = Scalar::sub(self, o);
    }

    /// `self += a * b`, skipping the product when either factor is zero.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            let p = Scalar::mul(a, b);
            self.add_assign(&p);
        }
    }
}

#[derive(Clone)]
enum Repr {
    /// Reduced, denominator positive.
    Small(i128, i128),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

/// Exact rational number in canonical form.
#[derive(Clone)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
        return gcd_u64(a as u64, b as u64) as u128;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    gcd_u128(a.unsigned_abs(), b.unsigned_abs()) as i128
}

fn small_add(a: i128, b: i128, c: i128, d: i128) -> Option<(i128, i128)> {
    if b == 1 && d == 1 {
        return Some((a.checked_add(c)?, 1));
    }
    if b == d {
        let n = a.checked_add(c)?;
        if n == 0 {
            return Some((0, 1));
        }
        let g = gcd_i128(n, b);
        return Some((n / g, b / g));
    }
    let g = gcd_i128(b, d);
    if g == 1 {
        let n = a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?;
        if n == 0 {
            return Some((0, 1));
        }
        return Some((n, b.checked_mul(d)?));
    }
    let (b1, d1) = (b / g, d / g);
    let t = a.checked_mul(d1)?.checked_add(c.checked_mul(b1)?)?;
    if t == 0 {
        return Some((0, 1));
    }
    let g2 = gcd_i128(t, g);
    Some((t / g2, b1.checked_mul(d / g2)?))
}

fn small_mul(a: i128, b: i128, c: i128, d: i128) -> Option<(i128, i128)> {
    if a == 0 || c == 0 {
        return Some((0, 1));
    }
    if b == 1 && d == 1 {
        return Some((a.checked_mul(c)?, 1));
    }
    let g1 = gcd_i128(a, d);
    let g2 = gcd_i128(c, b);
    Some(((a / g1).checked_mul(c / g2)?, (b / g2).checked_mul(d / g1)?))
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128_pair(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n as i128, 1))
    }

    fn from_i128_pair(num: i128, den: i128) -> Self {
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            match (n.checked_neg(), d.checked_neg()) {
                (Some(a), Some(b)) => {
                    n = a;
                    d = b;
                }
                _ => {
                    return Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)))
                }
            }
        }
        Rational(Repr::Small(n, d))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    /// Wraps a big rational, demoting it to the inline form when it fits.
    pub fn from_big(q: BigRational) -> Self {
        if let (Some(n), Some(d)) = (q.numer().to_i128(), q.denom().to_i128()) {
            return Rational(Repr::Small(n, d));
        }
        Rational(Repr::Big(Box::new(q)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => i64::try_from(*n).ok(),
            Repr::Small(..) => None,
            Repr::Big(b) if b.is_integer() => b.numer().to_i64(),
            Repr::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Rational {
        if self.is_negative() {
            Scalar::neg(self)
        } else {
            self.clone()
        }
    }

    pub fn floor(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(n.div_euclid(*d), 1)),
            Repr::Big(b) => Self::from_big(b.floor()),
        }
    }

    pub fn pow(&self, e: i32) -> Rational {
        let base = if e < 0 { self.inv().expect("zero to a negative power") } else { self.clone() };
        let mut acc = Rational::one();
        for _ in 0..e.unsigned_abs() {
            acc = Scalar::mul(&acc, &base);
        }
        acc
    }

    /// Least common multiple of two positive integers.
    pub fn lcm(&self, o: &Rational) -> Rational {
        debug_assert!(self.is_integer() && o.is_integer());
        match (&self.0, &o.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => {
                let g = gcd_i128(*a, *b);
                if let Some(v) = (a / g).checked_mul(*b) {
                    return Rational(Repr::Small(v.abs(), 1));
                }
                Self::from_bigint(self.numer().lcm(&o.numer()))
            }
            _ => Self::from_bigint(self.numer().lcm(&o.numer())),
        }
    }

    fn big_op(&self, o: &Rational, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        Self::from_big(f(&self.to_big(), &o.to_big()))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    fn add(&self, o: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if let Some((n, d)) = small_add(*a, *b, *c, *d) {
                return Rational(Repr::Small(n, d));
            }
        }
        self.big_op(o, |x, y| x + y)
    }

    fn sub(&self, o: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if let Some(nc) = c.checked_neg() {
                if let Some((n, d)) = small_add(*a, *b, nc, *d) {
                    return Rational(Repr::Small(n, d));
                }
            }
        }
        self.big_op(o, |x, y| x - y)
    }

    fn mul(&self, o: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if let Some((n, d)) = small_mul(*a, *b, *c, *d) {
                return Rational(Repr::Small(n, d));
            }
        }
        self.big_op(o, |x, y| x * y)
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Self::from_big(-self.to_big()),
            },
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128_pair(*d, *n),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn denominator(&self) -> Rational {
        match &self.0 {
            Repr::Small(_, d) => Rational(Repr::Small(*d, 1)),
            Repr::Big(b) => Self::from_bigint(b.denom().clone()),
        }
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        Scalar::mul(self, q)
    }

    fn mul_i64(&self, k: i64) -> Self {
        match k {
            0 => Rational::zero(),
            1 => self.clone(),
            -1 => Scalar::neg(self),
            _ => Scalar::mul(self, &Rational(Repr::Small(k as i128, 1))),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, o: &Self) -> bool {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => b.hash(state),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if let (Some(x), Some(y)) = (a.checked_mul(*d), c.checked_mul(*b)) {
                return x.cmp(&y);
            }
        }
        self.to_big().cmp(&o.to_big())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational::from_big(q)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                $f(self, o)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                $f(&self, &o)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                $f(&self, o)
            }
        }
    };
}

fn rational_div(a: &Rational, b: &Rational) -> Rational {
    Scalar::div(a, b).expect("division by zero")
}

forward_binop!(Add, add, <Rational as Scalar>::add);
forward_binop!(Sub, sub, <Rational as Scalar>::sub);
forward_binop!(Mul, mul, <Rational as Scalar>::mul);
forward_binop!(Div, div, rational_div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Scalar::neg(&self)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Scalar::neg(self)
    }
}

/// Element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian { re: Rational::zero(), im: Rational::one() }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn imag(im: Rational) -> Self {
        Gaussian { re: Rational::zero(), im }
    }

    /// `z * conj(z)`, which is rational.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Scalar for Gaussian {
    fn zero() -> Self {
        Gaussian::default()
    }

    fn one() -> Self {
        Gaussian::real(Rational::one())
    }

    fn from_i64(n: i64) -> Self {
        Gaussian::real(Rational::from_integer(n))
    }

    fn from_rational(q: &Rational) -> Self {
        Gaussian::real(q.clone())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Gaussian { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Self) -> Self {
        Gaussian { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() {
            return o.mul_rational(&self.re);
        }
        if o.im.is_zero() {
            return self.mul_rational(&o.re);
        }
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(Gaussian { re: &self.re * &n, im: -(&self.im * &n) })
    }

    fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    fn denominator(&self) -> Rational {
        self.re.denominator().lcm(&self.im.denominator())
    }

    fn mul_rational(&self, q: &Rational) -> Self {
        Gaussian { re: &self.re * q, im: &self.im * q }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}*I", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*I", self.re, self.im)
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    /// Accepts `re`, `re+im*I`, `re-im*I`, `im*I`, `I` and `-I`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a Gaussian rational: {s:?}"));
        let Some(body) = s.strip_suffix('I') else {
            return Ok(Gaussian::real(s.parse()?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = im.strip_suffix('*').unwrap_or(im);
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => t.strip_prefix('+').unwrap_or(t).parse().map_err(|_| bad())?,
        };
        Ok(Gaussian { re: re.parse().map_err(|_| bad())?, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = Rational::new(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Rational::new(0, -7), Rational::zero());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX);
        let mut acc = Rational::one();
        for _ in 0..4 {
            acc = &acc * &big;
        }
        assert!(matches!(acc.0, Repr::Big(_)));
        for _ in 0..4 {
            acc = &acc / &big;
        }
        assert_eq!(acc, Rational::one());
        assert!(matches!(acc.0, Repr::Small(1, 1)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        for s in ["1/2+3*I", "0-1*I", "5+0*I", "-2/3-7/5*I"] {
            let z: Gaussian = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        assert_eq!("I".parse::<Gaussian>().unwrap(), Gaussian::i());
        assert_eq!("-I".parse::<Gaussian>().unwrap(), Gaussian::i().neg());
        assert_eq!("2*I".parse::<Gaussian>().unwrap(), Gaussian::imag(Rational::from(2)));
    }

    #[test]
    fn gaussian_inverse() {
        let z = Gaussian::new(Rational::new(3, 2), Rational::from(-2));
        assert_eq!(z.mul(&z.inv().unwrap()), Gaussian::one());
        assert_eq!(Gaussian::i().mul(&Gaussian::i()), Gaussian::from_i64(-1));
    }
}
