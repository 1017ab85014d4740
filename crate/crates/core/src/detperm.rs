//! det_n and per_n as polynomials in the n² entries x_{i,j} (flat index i·n + j).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::DetPerm;
use crate::error::{Error, Result};
use crate::poly::{LinearForm, Monomial, Poly};
use crate::scalar::{rat, Rational, Scalar};

pub const MAX_BUILD_N: u32 = 7;
pub const MAX_RYSER_N: u32 = 5;

/// All permutations of 0..n with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(used, cur, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// det_n or per_n with integer coefficients.
pub fn build<F: Scalar>(n: u32, kind: DetPerm) -> Result<Poly<F>> {
    if n == 0 || n > MAX_BUILD_N {
        return Err(Error::LimitExceeded(format!(
            "matrix size {n} outside 1..={MAX_BUILD_N}"
        )));
    }
    let k = n as usize;
    let terms = permutations(k).into_iter().map(|(p, sign)| {
        let mut e = vec![0u32; k * k];
        for (i, &j) in p.iter().enumerate() {
            e[i * k + j] = 1;
        }
        let c = match kind {
            DetPerm::Det => F::from_i64(sign),
            DetPerm::Perm => F::one(),
        };
        (Monomial(e), c)
    });
    Poly::from_terms(k * k, n, terms)
}

/// c · ∏ factors.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductTerm {
    pub coeff: Rational,
    pub factors: Vec<LinearForm<Rational>>,
}

impl ProductTerm {
    pub fn expand(&self) -> Result<Poly<Rational>> {
        let n = self.factors.first().map_or(0, |l| l.nvars());
        let mut acc = Poly::constant(n, self.coeff.clone());
        for l in &self.factors {
            acc = acc.mul(&l.to_poly())?;
        }
        Ok(acc)
    }
}

/// per_n = 2^{−n+1} Σ_{ε₁=1} ∏ᵢ Σⱼ εᵢεⱼ x_{i,j}; ε₂…εₙ run in binary counting order.
pub fn ryser_decomposition(n: u32) -> Result<Vec<ProductTerm>> {
    if !(2..=MAX_RYSER_N).contains(&n) {
        return Err(Error::LimitExceeded(format!(
            "Ryser identity supported for 2 ≤ n ≤ {MAX_RYSER_N}"
        )));
    }
    let k = n as usize;
    let coeff = rat(1, 1i64 << (k - 1));
    let mut out = Vec::with_capacity(1 << (k - 1));
    for bits in 0u32..(1 << (k - 1)) {
        let eps: Vec<i64> = (0..k)
            .map(|i| {
                if i > 0 && bits >> (k - 1 - i) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        let factors = (0..k)
            .map(|i| {
                let mut c = vec![<Rational as Scalar>::zero(); k * k];
                for j in 0..k {
                    c[i * k + j] = Rational::from_integer((eps[i] * eps[j]).into());
                }
                LinearForm::new(c)
            })
            .collect();
        out.push(ProductTerm {
            coeff: coeff.clone(),
            factors,
        });
    }
    Ok(out)
}

/// Sum of the expanded product terms.
pub fn expand_sum(terms: &[ProductTerm]) -> Result<Poly<Rational>> {
    let mut it = terms.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Precondition(alloc::string::String::from("empty sum")))?
        .expand()?;
    it.try_fold(first, |acc, t| acc.add(&t.expand()?))
}

/// If f is a nonzero multiple of det_n or per_n, return n and the kind.
pub fn recognize<F: Scalar>(f: &Poly<F>) -> Option<(u32, DetPerm)> {
    let n = f.degree();
    if !(2..=MAX_BUILD_N).contains(&n)
        || (n * n) as usize != f.nvars()
        || f.num_terms() != permutation_count(n)
    {
        return None;
    }
    for kind in [DetPerm::Det, DetPerm::Perm] {
        let g: Poly<F> = build(n, kind).ok()?;
        if f.proportional(&g).is_some() {
            return Some((n, kind));
        }
    }
    None
}

fn permutation_count(n: u32) -> usize {
    (1..=n as usize).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::scalar::int;

    #[test]
    fn small_cases() {
        let d2: Poly<Rational> = build(2, DetPerm::Det).unwrap();
        assert_eq!(format!("{d2}"), "x0*x3 - x1*x2");
        let p2: Poly<Rational> = build(2, DetPerm::Perm).unwrap();
        assert_eq!(format!("{p2}"), "x0*x3 + x1*x2");
        let d3: Poly<Rational> = build(3, DetPerm::Det).unwrap();
        let id: Vec<Rational> = (0..9)
            .map(|k| if k % 4 == 0 { int(1) } else { int(0) })
            .collect();
        assert_eq!(d3.eval(&id), int(1));
        assert_eq!(recognize(&d3), Some((3, DetPerm::Det)));
        assert_eq!(recognize(&p2.scale(&int(3))), Some((2, DetPerm::Perm)));
        assert!(build::<Rational>(8, DetPerm::Det).is_err());
    }

    #[test]
    fn ryser_small() {
        for n in 2..=4 {
            let t = ryser_decomposition(n).unwrap();
            assert_eq!(t.len(), 1 << (n - 1));
            assert_eq!(expand_sum(&t).unwrap(), build(n, DetPerm::Perm).unwrap());
        }
        for term in ryser_decomposition(4).unwrap() {
            let m =
                Matrix::from_rows(term.factors.iter().map(|l| l.coeffs.clone()).collect()).unwrap();
            assert_eq!(m.rank().unwrap(), 4);
        }
    }
}
