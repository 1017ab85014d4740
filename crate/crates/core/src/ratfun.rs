//! Rational functions in one variable t over the rationals.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::unipoly::UniPoly;

pub type RatPoly = UniPoly<Rational>;

/// num/den with den monic and gcd(num, den) = 1. Poles at t = 0 are allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFun {
    num: RatPoly,
    den: RatPoly,
}

impl RatFun {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::from_poly(num));
        }
        let g = num.gcd(&den)?;
        let (n, _) = num.divrem(&g)?;
        let (d, _) = den.divrem(&g)?;
        let l = d.leading().cloned().ok_or(Error::DivisionByZero)?;
        let li = l.inv()?;
        Ok(RatFun {
            num: n.scale(&li),
            den: d.scale(&li),
        })
    }
    pub fn from_poly(p: RatPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::constant(<Rational as Scalar>::one()),
        }
    }
    pub fn t() -> Self {
        RatFun::from_poly(UniPoly::t())
    }
    pub fn num(&self) -> &RatPoly {
        &self.num
    }
    pub fn den(&self) -> &RatPoly {
        &self.den
    }
    /// t-adic valuation: val(num) − val(den); `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        Some(vn - self.den.valuation().unwrap_or(0) as i64)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for RatFun {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return RatFun::new(self.num + o.num, self.den).expect("nonzero denominator");
        }
        RatFun::new(
            self.num * o.den.clone() + o.num * self.den.clone(),
            self.den * o.den,
        )
        .expect("nonzero denominator")
    }
}
impl Sub for RatFun {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
impl Mul for RatFun {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFun::from_poly(UniPoly::zero());
        }
        let one_den = self.den.degree() == Some(0) && o.den.degree() == Some(0);
        if one_den {
            return RatFun::from_poly(self.num * o.num);
        }
        RatFun::new(self.num * o.num, self.den * o.den).expect("nonzero denominator")
    }
}
impl Neg for RatFun {
    type Output = Self;
    fn neg(self) -> Self {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Scalar for RatFun {
    const EXACT: bool = true;
    fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        RatFun::from_poly(UniPoly::constant(<Rational as Scalar>::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        RatFun::from_poly(UniPoly::constant(q.clone()))
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn reduces_and_tracks_poles() {
        let t = RatFun::t();
        let x = (t.clone() * t.clone())
            .checked_div(&(t.clone() * t.clone() * t.clone()))
            .unwrap();
        assert_eq!(x.valuation(), Some(-1));
        assert_eq!(x.clone() * t, RatFun::one());
        assert_eq!(
            RatFun::from_rational(&int(2)).inv().unwrap(),
            RatFun::from_rational(&crate::scalar::rat(1, 2))
        );
    }
}
