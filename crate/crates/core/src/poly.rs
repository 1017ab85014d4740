//! Sparse homogeneous polynomials, apolarity contraction and substitution.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational, Scalar};
use crate::unipoly::UniPoly;

/// Exponent vector. Ordered graded-lexicographically (degree first, then x0 > x1 > …).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn nvars(&self) -> usize {
        self.0.len()
    }
    /// self ≥ other componentwise.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
    /// ∏ aᵢ!/(aᵢ−eᵢ)! for the derivative ∂^e x^a.
    pub fn falling(&self, e: &Monomial) -> BigInt {
        let mut r = BigInt::one();
        for (&a, &b) in self.0.iter().zip(&e.0) {
            for k in 0..b {
                r *= BigInt::from(a - k);
            }
        }
        r
    }
    pub fn sub(&self, e: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&e.0).map(|(a, b)| a - b).collect())
    }
    pub fn add(&self, e: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&e.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// All monomials of degree `d` in `n` variables, in descending graded-lex order.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Multinomial coefficient d!/∏eᵢ!.
pub fn multinomial(e: &Monomial) -> BigInt {
    let mut r = factorial(e.degree());
    for &k in &e.0 {
        r /= factorial(k);
    }
    r
}

/// Linear form Σ cᵢxᵢ.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm<F: Scalar> {
    pub coeffs: Vec<F>,
}

impl<F: Scalar> LinearForm<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        LinearForm { coeffs }
    }
    pub fn var(i: usize, n: usize) -> Self {
        let mut c = vec![F::zero(); n];
        c[i] = F::one();
        LinearForm { coeffs: c }
    }
    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    pub fn to_poly(&self) -> Poly<F> {
        let n = self.nvars();
        Poly::from_terms(
            n,
            1,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (Monomial(e), c.clone())
            }),
        )
        .expect("degree-one terms")
    }
    pub fn eval(&self, p: &[F]) -> F {
        self.coeffs
            .iter()
            .zip(p)
            .fold(F::zero(), |a, (c, x)| a + c.clone() * x.clone())
    }
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LinearForm<G> {
        LinearForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Homogeneous polynomial with sparse coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Scalar> {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> Poly<F> {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Poly {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Sums duplicate monomials and drops zeros; rejects inhomogeneous input.
    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Result<Self> {
        let mut p = Poly::zero(nvars, degree);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::Mismatch(format!(
                    "monomial with {} variables, expected {nvars}",
                    m.nvars()
                )));
            }
            if m.degree() != degree {
                return Err(Error::Mismatch(format!(
                    "monomial of degree {}, expected {degree}",
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn monomial(exps: &[u32], c: F) -> Self {
        let m = Monomial(exps.to_vec());
        Poly::from_terms(exps.len(), m.degree(), [(m, c)]).expect("single term")
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(&e, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Poly::from_terms(nvars, 0, [(Monomial(vec![0; nvars]), c)]).expect("constant")
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }
    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    fn check_same(&self, o: &Self, need_degree: bool) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::Mismatch(format!(
                "{} vs {} variables",
                self.nvars, o.nvars
            )));
        }
        if need_degree && self.degree != o.degree {
            return Err(Error::Mismatch(format!(
                "degree {} vs {}",
                self.degree, o.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o, true)?;
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, a: &F) -> Self {
        let mut p = Poly::zero(self.nvars, self.degree);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone() * a.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o, false)?;
        let mut p = Poly::zero(self.nvars, self.degree + o.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(m1.add(m2), c1.clone() * c2.clone());
            }
        }
        Ok(p)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Poly::constant(self.nvars, F::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// ∂f/∂x_var.
    pub fn diff(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Mismatch(format!("variable {var} out of range")));
        }
        if self.degree == 0 {
            return Ok(Poly::zero(self.nvars, 0));
        }
        let mut p = Poly::zero(self.nvars, self.degree - 1);
        for (m, c) in &self.terms {
            let a = m.0[var];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            p.add_term(Monomial(e), c.clone() * F::from_i64(a as i64));
        }
        Ok(p)
    }

    /// Apolarity contraction q ⌟ f: q is read in the dual variables and acts by differentiation.
    pub fn contract(q: &Poly<F>, f: &Poly<F>) -> Result<Self> {
        q.check_same(f, false)?;
        if q.degree > f.degree {
            return Err(Error::Precondition(format!(
                "contraction of degree {} into degree {}",
                q.degree, f.degree
            )));
        }
        let mut p = Poly::zero(f.nvars, f.degree - q.degree);
        for (e, qc) in &q.terms {
            for (a, fc) in &f.terms {
                if !a.divisible_by(e) {
                    continue;
                }
                let w = F::from_rational(&Rational::from_integer(a.falling(e)));
                p.add_term(a.sub(e), qc.clone() * fc.clone() * w);
            }
        }
        Ok(p)
    }

    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t = t * x.pow(e);
            }
            acc = acc + t;
        }
        acc
    }

    /// Replace xᵢ by images[i]; all images share one variable count m.
    pub fn substitute(&self, images: &[LinearForm<F>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Mismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let m = images.first().map_or(0, |l| l.nvars());
        if images.iter().any(|l| l.nvars() != m) {
            return Err(Error::Mismatch(String::from(
                "images in different variable counts",
            )));
        }
        let polys: Vec<Poly<F>> = images.iter().map(|l| l.to_poly()).collect();
        let mut powers: Vec<Vec<Poly<F>>> = polys
            .iter()
            .map(|p| vec![Poly::constant(m, F::one()), p.clone()])
            .collect();
        let mut out = Poly::zero(m, self.degree);
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul(&polys[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Coefficient vector in the given monomial basis.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<F> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_terms(
            self.nvars,
            self.degree,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
        .expect("same shape")
    }

    /// Drop the listed variables, which must not occur.
    pub fn restrict_vars(&self, keep: &[usize]) -> Result<Self> {
        let n = keep.len();
        let mut p = Poly::zero(n, self.degree);
        for (m, c) in &self.terms {
            let e: Vec<u32> = keep.iter().map(|&i| m.0[i]).collect();
            if e.iter().sum::<u32>() != m.degree() {
                return Err(Error::Precondition(String::from("dropped variable occurs")));
            }
            p.add_term(Monomial(e), c.clone());
        }
        Ok(p)
    }

    /// Reindex into a larger variable set: variable i goes to position map[i].
    pub fn embed_vars(&self, n: usize, map: &[usize]) -> Self {
        let mut p = Poly::zero(n, self.degree);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Some c with self = c·other, if one exists.
    pub fn proportional(&self, other: &Self) -> Option<F> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return None;
        }
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() && other.is_zero() {
                Some(F::one())
            } else {
                None
            };
        }
        let (m, c) = other.leading()?;
        let ratio = self.coeff(m).checked_div(c).ok()?;
        if ratio.is_zero() {
            return None;
        }
        if *self == other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            return String::from("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let cs = format!("{c}");
            let simple = !cs[1..].contains(['+', '-']);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if simple => (true, String::from(rest)),
                _ => (
                    false,
                    if simple {
                        cs.clone()
                    } else {
                        format!("({cs})")
                    },
                ),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if body != "1" || m.degree() == 0 {
                parts.push(body);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(names[i].clone()),
                    _ => parts.push(format!("{}^{e}", names[i])),
                }
            }
            s.push_str(&parts.join("*"));
        }
        s
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

/// l^d expanded by the multinomial theorem.
pub fn power_of_linear<F: Scalar>(l: &LinearForm<F>, d: u32) -> Poly<F> {
    let n = l.nvars();
    let support: Vec<usize> = (0..n).filter(|&i| !l.coeffs[i].is_zero()).collect();
    let mut p = Poly::zero(n, d);
    if support.is_empty() {
        return p;
    }
    for e in monomials(support.len(), d) {
        let mut c = F::from_rational(&Rational::from_integer(multinomial(&e)));
        let mut full = vec![0; n];
        for (k, &i) in support.iter().enumerate() {
            full[i] = e.0[k];
            c = c * l.coeffs[i].pow(e.0[k]);
        }
        p.add_term(Monomial(full), c);
    }
    p
}

/// f(x, 1) as a univariate polynomial in x, plus the power of y dividing f.
fn dehomogenize<F: Scalar>(f: &Poly<F>) -> (UniPoly<F>, u32) {
    let d = f.degree() as usize;
    let mut c = vec![F::zero(); d + 1];
    let mut ord_y = f.degree();
    for (m, a) in f.terms() {
        c[m.0[0] as usize] = a.clone();
        ord_y = ord_y.min(m.0[1]);
    }
    (UniPoly::new(c), ord_y)
}

fn homogenize<F: Scalar>(u: &UniPoly<F>, deg: u32) -> Poly<F> {
    Poly::from_terms(
        2,
        deg,
        u.coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| (Monomial(vec![k as u32, deg - k as u32]), a.clone())),
    )
    .expect("homogeneous")
}

fn require_binary<F: Scalar>(f: &Poly<F>) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::Precondition(format!(
            "binary form expected, got {} variables",
            f.nvars()
        )));
    }
    if f.is_zero() {
        return Err(Error::Precondition(String::from("zero polynomial")));
    }
    Ok(())
}

/// Greatest common divisor of two binary forms, normalized so the leading term is monic.
pub fn gcd_univariate<F: Scalar>(f: &Poly<F>, g: &Poly<F>) -> Result<Poly<F>> {
    require_binary(f)?;
    require_binary(g)?;
    let (uf, yf) = dehomogenize(f);
    let (ug, yg) = dehomogenize(g);
    let u = uf.gcd(&ug)?;
    let du = u.degree().unwrap_or(0) as u32;
    let h = homogenize(&u, du);
    let y = yf.min(yg);
    let ypow = Poly::monomial(&[0, y], F::one());
    let r = h.mul(&ypow)?;
    let (_, lc) = r.leading().ok_or(Error::DivisionByZero)?;
    let li = lc.inv()?;
    Ok(r.scale(&li))
}

/// True iff the binary form has no repeated linear factor.
pub fn square_free<F: Scalar>(f: &Poly<F>) -> Result<bool> {
    require_binary(f)?;
    if f.degree() <= 1 {
        return Ok(true);
    }
    let fx = f.diff(0)?;
    let fy = f.diff(1)?;
    // by Euler's relation the common factors of both partials are the repeated factors of f
    let g = match (fx.is_zero(), fy.is_zero()) {
        (true, _) => fy,
        (_, true) => fx,
        _ => gcd_univariate(&fx, &fy)?,
    };
    Ok(g.degree() == 0)
}
