//! Scalar fields: exact rationals, Gaussian rationals and arbitrary-precision complex floats.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Mantissa precision used when none is configured.
pub const DEFAULT_PRECISION: u32 = 256;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Common interface of every coefficient field.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// True when arithmetic is exact, so rank and kernel decisions are sound.
    const EXACT: bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;
    fn inv(&self) -> Result<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
    fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Absolute value for approximate fields; `None` for exact ones.
    fn magnitude(&self) -> Option<BigFloat> {
        None
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Parse "p" or "p/q".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Parse a decimal such as "1e-20", "0.125" or "3/4" exactly.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.contains('/') {
        return parse_rational(s);
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac}");
    let n: BigInt = digits.parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let r = if shift >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, shift as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-shift) as usize))
    };
    Some(if neg { -r } else { r })
}

/// a + b·i with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }
    pub fn i() -> Self {
        GaussianRational::new(Zero::zero(), One::one())
    }
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }
    /// |z|² = z·conj(z).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
    /// Parse "p/q", "r/s*i" or "p/q+r/s*i".
    pub fn parse(s: &str) -> Option<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !s.ends_with('i') {
            return parse_rational(&s).map(|r| GaussianRational::new(r, Zero::zero()));
        }
        let body = &s[..s.len() - 1];
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (Zero::zero(), body),
        };
        let im = match im {
            "" | "+" => One::one(),
            "-" => -<Rational as One>::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
        };
        Some(GaussianRational::new(re, im))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        if Zero::is_zero(&self.re) {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational::new(self.re + o.re, self.im + o.im)
    }
}
impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational::new(self.re - o.re, self.im - o.im)
    }
}
impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}
impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;
    fn zero() -> Self {
        GaussianRational::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        GaussianRational::new(One::one(), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::new(q.clone(), Zero::zero())
    }
    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
}

/// Binary float mant·2^exp, rounded to nearest at `prec` mantissa bits.
///
/// Trailing zero bits are stripped so equality compares values.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl PartialEq for BigFloat {
    fn eq(&self, o: &Self) -> bool {
        self.mant == o.mant && (self.mant.is_zero() || self.exp == o.exp)
    }
}

fn round_mag(mag: BigUint, exp: i64, prec: u32) -> (BigUint, i64) {
    let bits = mag.bits();
    if bits <= prec as u64 {
        return (mag, exp);
    }
    let shift = bits - prec as u64;
    let half = BigUint::one() << (shift - 1);
    let mut r = (mag + half) >> shift;
    let mut e = exp + shift as i64;
    if r.bits() > prec as u64 {
        r >>= 1u32;
        e += 1;
    }
    (r, e)
}

impl BigFloat {
    fn make(mant: BigInt, exp: i64, prec: u32) -> BigFloat {
        if mant.is_zero() {
            return BigFloat { mant, exp: 0, prec };
        }
        let sign = mant.sign();
        let (mut mag, mut e) = round_mag(mant.magnitude().clone(), exp, prec);
        let tz = mag.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            mag >>= tz;
            e += tz as i64;
        }
        BigFloat {
            mant: BigInt::from_biguint(sign, mag),
            exp: e,
            prec,
        }
    }

    pub fn zero_prec(prec: u32) -> BigFloat {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_int(n: BigInt, prec: u32) -> BigFloat {
        BigFloat::make(n, 0, prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> BigFloat {
        let n = BigFloat::from_int(q.numer().clone(), prec + 8);
        let d = BigFloat::from_int(q.denom().clone(), prec + 8);
        let r = n.div_raw(&d, prec);
        BigFloat::make(r.mant, r.exp, prec)
    }

    /// 2^e exactly.
    pub fn pow2(e: i64, prec: u32) -> BigFloat {
        BigFloat::make(BigInt::one(), e, prec)
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> BigFloat {
        BigFloat::make(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Position just above the top bit: |x| < 2^top_exp.
    pub fn top_exp(&self) -> i64 {
        if self.mant.is_zero() {
            i64::MIN / 4
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    fn add_raw(&self, o: &BigFloat) -> BigFloat {
        let prec = self.prec.max(o.prec);
        if self.is_zero() {
            return o.with_precision(prec);
        }
        if o.is_zero() {
            return self.with_precision(prec);
        }
        let gap = prec as i64 + 4;
        if self.top_exp() - o.top_exp() > gap {
            return self.with_precision(prec);
        }
        if o.top_exp() - self.top_exp() > gap {
            return o.with_precision(prec);
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << ((self.exp - e) as usize);
        let b = &o.mant << ((o.exp - e) as usize);
        BigFloat::make(a + b, e, prec)
    }

    fn div_raw(&self, o: &BigFloat, prec: u32) -> BigFloat {
        let want = prec as i64 + 4;
        let shift = (want + o.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << (shift as usize);
        let (q, r) = num.div_rem(&o.mant);
        let (q, shift) = if r.is_zero() {
            (q, shift)
        } else {
            // sticky bit keeps round-to-nearest honest
            let s = if self.mant.is_negative() ^ o.mant.is_negative() {
                -1
            } else {
                1
            };
            ((q << 1usize) + BigInt::from(s), shift + 1)
        };
        BigFloat::make(q, self.exp - o.exp - shift, prec)
    }

    pub fn div(&self, o: &BigFloat) -> Result<BigFloat> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_raw(o, self.prec.max(o.prec)))
    }

    /// Principal n-th root of a nonnegative value.
    pub fn nth_root(&self, n: u32) -> Result<BigFloat> {
        if self.is_negative() {
            return Err(Error::Precondition(format!(
                "root of negative value {self}"
            )));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let prec = self.prec;
        let need = (prec as i64 + 8) * n as i64;
        let mut k = (need - self.mant.bits() as i64).max(0);
        while (self.exp - k).rem_euclid(n as i64) != 0 {
            k += 1;
        }
        let m = (self.mant.magnitude() << (k as usize)).nth_root(n);
        Ok(BigFloat::make(
            BigInt::from_biguint(Sign::Plus, m),
            (self.exp - k) / n as i64,
            prec,
        ))
    }

    pub fn sqrt(&self) -> Result<BigFloat> {
        self.nth_root(2)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let m = (&self.mant >> (drop as usize)).to_f64().unwrap_or(0.0);
        let mut e = self.exp + drop;
        let mut v = m;
        while e > 0 {
            let s = e.min(60);
            v *= (1u64 << s) as f64;
            e -= s;
        }
        while e < 0 {
            let s = (-e).min(60);
            v /= (1u64 << s) as f64;
            e += s;
        }
        v
    }

    /// Decimal scientific text with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let neg = self.is_negative();
        let mag = self.abs();
        // find k with 10^(digits-1) <= mag·10^k < 10^digits
        let approx = mag.top_exp() as f64 * core::f64::consts::LN_2 / core::f64::consts::LN_10;
        let mut k = digits as i64 - approx as i64;
        let ten = BigInt::from(10u32);
        let lo = num_traits::pow(ten.clone(), digits - 1);
        let hi = &lo * &ten;
        let mut scaled;
        loop {
            scaled = mag.scaled_int(k);
            if scaled < lo {
                k += 1;
            } else if scaled >= hi {
                k -= 1;
            } else {
                break;
            }
        }
        let s = scaled.to_string();
        let exp10 = s.len() as i64 - 1 - k;
        let (head, tail) = s.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{exp10}")
        } else {
            format!("{sign}{head}.{tail}e{exp10}")
        }
    }

    /// round(|self|·10^k) as an integer.
    fn scaled_int(&self, k: i64) -> BigInt {
        let ten = BigInt::from(10u32);
        let mut num = self.mant.abs();
        let mut den = BigInt::one();
        if k >= 0 {
            num *= num_traits::pow(ten, k as usize);
        } else {
            den *= num_traits::pow(ten, (-k) as usize);
        }
        if self.exp >= 0 {
            num <<= self.exp as usize;
        } else {
            den <<= (-self.exp) as usize;
        }
        (num * 2 + &den) / (den * 2)
    }

    pub fn cmp_value(&self, o: &BigFloat) -> Ordering {
        let d = self.clone() - o.clone();
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// π to the given precision (Machin's arctangent formula).
    pub fn pi(prec: u32) -> BigFloat {
        let w = prec as usize + 32;
        let atan_inv = |k: u32| -> BigInt {
            let k = BigInt::from(k);
            let k2 = &k * &k;
            let mut term = (BigInt::one() << w) / &k;
            let mut sum = BigInt::zero();
            let mut j = 0u32;
            while !term.is_zero() {
                let t = &term / BigInt::from(2 * j + 1);
                if j.is_multiple_of(2) {
                    sum += t;
                } else {
                    sum -= t;
                }
                term /= &k2;
                j += 1;
            }
            sum
        };
        let v = atan_inv(5) * 16 - atan_inv(239) * 4;
        BigFloat::make(v, -(w as i64), prec)
    }

    /// (cos θ, sin θ) by Taylor series.
    pub fn cos_sin(theta: &BigFloat) -> (BigFloat, BigFloat) {
        let prec = theta.prec;
        let wp = prec + 32;
        let x = theta.with_precision(wp);
        let x2 = x.clone() * x.clone();
        let mut c = BigFloat::from_int(BigInt::one(), wp);
        let mut s = x.clone();
        let mut tc = c.clone();
        let mut ts = x.clone();
        let mut k = 1i64;
        let floor = -(wp as i64) - 8;
        loop {
            tc = -(tc * x2.clone()).div_raw(
                &BigFloat::from_int(BigInt::from((2 * k - 1) * (2 * k)), wp),
                wp,
            );
            ts = -(ts * x2.clone()).div_raw(
                &BigFloat::from_int(BigInt::from((2 * k) * (2 * k + 1)), wp),
                wp,
            );
            c = c + tc.clone();
            s = s + ts.clone();
            if tc.top_exp() < floor && ts.top_exp() < floor {
                break;
            }
            k += 1;
        }
        (c.with_precision(prec), s.with_precision(prec))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(25))
    }
}

impl Add for BigFloat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_raw(&o)
    }
}
impl Sub for BigFloat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_raw(&-o)
    }
}
impl Mul for BigFloat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let prec = self.prec.max(o.prec);
        BigFloat::make(self.mant * o.mant, self.exp + o.exp, prec)
    }
}
impl Neg for BigFloat {
    type Output = Self;
    fn neg(self) -> Self {
        BigFloat {
            mant: -self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

/// Complex number with BigFloat parts.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }
    pub fn from_rational_prec(q: &Rational, prec: u32) -> Self {
        BigComplex::new(BigFloat::from_rational(q, prec), BigFloat::zero_prec(prec))
    }
    pub fn from_gaussian(z: &GaussianRational, prec: u32) -> Self {
        BigComplex::new(
            BigFloat::from_rational(&z.re, prec),
            BigFloat::from_rational(&z.im, prec),
        )
    }
    pub fn real(x: BigFloat) -> Self {
        let p = x.prec;
        BigComplex::new(x, BigFloat::zero_prec(p))
    }
    pub fn i(prec: u32) -> Self {
        BigComplex::new(
            BigFloat::zero_prec(prec),
            BigFloat::from_int(BigInt::one(), prec),
        )
    }
    pub fn precision(&self) -> u32 {
        self.re.prec.max(self.im.prec)
    }
    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -self.im.clone())
    }
    pub fn norm_sqr(&self) -> BigFloat {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt().expect("norm is nonnegative")
    }
    /// e^{iθ}.
    pub fn cis(theta: &BigFloat) -> Self {
        let (c, s) = BigFloat::cos_sin(theta);
        BigComplex::new(c, s)
    }
    /// e^{2πi/3}.
    pub fn omega(prec: u32) -> Self {
        let two_pi = BigFloat::pi(prec + 16) * BigFloat::from_int(BigInt::from(2), prec + 16);
        let theta = two_pi.div_raw(&BigFloat::from_int(BigInt::from(3), prec + 16), prec + 16);
        let w = BigComplex::cis(&theta);
        BigComplex::new(w.re.with_precision(prec), w.im.with_precision(prec))
    }
    /// |self − other| ≤ tol.
    pub fn approx_eq(&self, other: &Self, tol: &BigFloat) -> bool {
        let d = self.clone() - other.clone();
        d.norm_sqr().cmp_value(&(tol.clone() * tol.clone())) != Ordering::Greater
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for BigComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        BigComplex::new(self.re + o.re, self.im + o.im)
    }
}
impl Sub for BigComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        BigComplex::new(self.re - o.re, self.im - o.im)
    }
}
impl Mul for BigComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        BigComplex::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re * o.im + self.im * o.re,
        )
    }
}
impl Neg for BigComplex {
    type Output = Self;
    fn neg(self) -> Self {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Scalar for BigComplex {
    const EXACT: bool = false;
    fn zero() -> Self {
        BigComplex::new(
            BigFloat::zero_prec(DEFAULT_PRECISION),
            BigFloat::zero_prec(DEFAULT_PRECISION),
        )
    }
    fn one() -> Self {
        BigComplex::from_rational_prec(&One::one(), DEFAULT_PRECISION)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        BigComplex::from_rational_prec(q, DEFAULT_PRECISION)
    }
    fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigComplex::new(
            self.re.div(&n)?,
            (-self.im.clone()).div(&n)?,
        ))
    }
    fn magnitude(&self) -> Option<BigFloat> {
        Some(self.abs())
    }
}

/// Field embeddings of the rationals.
pub trait Embed: Scalar {
    fn embed(q: &Rational) -> Self {
        Self::from_rational(q)
    }
}
impl Embed for Rational {}
impl Embed for GaussianRational {}
impl Embed for BigComplex {}

/// Gaussian rationals embed into BigComplex.
pub trait FromGaussian: Scalar {
    fn from_gaussian(z: &GaussianRational) -> Self;
}
impl FromGaussian for GaussianRational {
    fn from_gaussian(z: &GaussianRational) -> Self {
        z.clone()
    }
}
impl FromGaussian for BigComplex {
    fn from_gaussian(z: &GaussianRational) -> Self {
        BigComplex::from_gaussian(z, DEFAULT_PRECISION)
    }
}

/// Binomial coefficient with C(a, b) = 0 when b > a or a < 0.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for k in 0..b {
        r = r * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    r
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(2, -4), rat(-1, 2));
    }

    #[test]
    fn i_squared() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i, GaussianRational::from_i64(-1));
    }

    #[test]
    fn gaussian_parse_print() {
        for s in ["1/2+3/4*i", "-2*i", "5", "-1/3-1*i"] {
            let z = GaussianRational::parse(s).unwrap();
            assert_eq!(GaussianRational::parse(&z.to_string()).unwrap(), z);
        }
        assert_eq!(GaussianRational::parse("i").unwrap(), GaussianRational::i());
        assert_eq!(GaussianRational::parse("2-i").unwrap().im, int(-1));
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(Scalar::inv(&rat(0, 1)), Err(Error::DivisionByZero));
        assert!(GaussianRational::zero().inv().is_err());
        assert!(BigComplex::zero().inv().is_err());
    }

    #[test]
    fn omega_cubed() {
        let w = BigComplex::omega(256);
        let w3 = w.clone() * w.clone() * w;
        let tol = BigFloat::from_rational(
            &Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 70)),
            256,
        );
        assert!(w3.approx_eq(&BigComplex::one(), &tol));
    }

    #[test]
    fn dyadic_embeds_exactly() {
        let z = BigComplex::from_rational_prec(&rat(3, 4), 64);
        assert_eq!(
            z.re,
            BigFloat::pow2(-2, 64) * BigFloat::from_int(BigInt::from(3), 64)
        );
        assert!(z.im.is_zero());
    }

    #[test]
    fn third_relative_error() {
        let exact = rat(1, 3);
        let x = BigFloat::from_rational(&exact, 128);
        // (x - 1/3)·3 = 3x - 1, compare at a much higher precision
        let hi = BigFloat::from_int(BigInt::from(3), 1024) * x.with_precision(1024)
            - BigFloat::from_int(BigInt::one(), 1024);
        assert!(hi.top_exp() <= -127);
    }

    #[test]
    fn roots_and_pi() {
        let two = BigFloat::from_int(BigInt::from(2), 200);
        let c = two.nth_root(3).unwrap();
        let back = c.clone() * c.clone() * c;
        assert!((back - two).top_exp() < -190);
        let pi = BigFloat::pi(128);
        assert!(pi
            .to_decimal(30)
            .starts_with("3.14159265358979323846264338"));
    }
}
