//! Dense univariate polynomials over a scalar field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients in ascending order, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Scalar> {
    c: Vec<F>,
}

impl<F: Scalar> UniPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }
    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }
    pub fn constant(a: F) -> Self {
        UniPoly::new(vec![a])
    }
    /// a·t^k.
    pub fn term(a: F, k: usize) -> Self {
        let mut c = vec![F::zero(); k + 1];
        c[k] = a;
        UniPoly::new(c)
    }
    pub fn t() -> Self {
        UniPoly::term(F::one(), 1)
    }
    pub fn coeffs(&self) -> &[F] {
        &self.c
    }
    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(F::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    /// Lowest power of t with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }
    pub fn leading(&self) -> Option<&F> {
        self.c.last()
    }
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }
    pub fn scale(&self, a: &F) -> Self {
        UniPoly::new(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }
    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![F::zero(); k];
        c.extend(self.c.iter().cloned());
        UniPoly { c }
    }
    /// Divide by t^k; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.c.iter().take(k).all(|x| x.is_zero()));
        UniPoly::new(self.c.iter().skip(k).cloned().collect())
    }
    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * F::from_i64(k as i64))
                .collect(),
        )
    }
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Err(Error::DivisionByZero),
            Some(l) => {
                let li = l.inv()?;
                Ok(self.scale(&li))
            }
        }
    }
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let li = d.c[dd].inv()?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let a = r[k + dd].clone() * li.clone();
            if !a.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - a.clone() * b.clone();
                }
            }
            q[k] = a;
        }
        r.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }
    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }
}

impl<F: Scalar> Add for UniPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}
impl<F: Scalar> Sub for UniPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}
impl<F: Scalar> Mul for UniPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(c)
    }
}
impl<F: Scalar> Neg for UniPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly {
            c: self.c.into_iter().map(|x| -x).collect(),
        }
    }
}

impl<F: Scalar> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})*t")?,
                _ => write!(f, "({a})*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]) * p(&[-2, 1]);
        let b = p(&[1, 1]) * p(&[3, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn divrem_identity() {
        let a = p(&[5, 0, 3, 1]);
        let d = p(&[1, 2]);
        let (q, r) = a.divrem(&d).unwrap();
        assert_eq!(q * d + r, a);
    }
}
