//! Catalecticant matrices, the span of a polynomial and the flattening bound.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{monomials, LinearForm, Monomial, Poly};
use crate::scalar::{Rational, Scalar};

/// The matrix of φ_{s,d−s}: rows indexed by degree-s monomials, columns by
/// degree-(d−s) dual monomials, entry = coefficient of the row monomial in
/// the contraction of φ by the column monomial.
#[derive(Clone, Debug)]
pub struct Catalecticant<F: Scalar> {
    pub s: u32,
    pub d_minus_s: u32,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<Monomial>,
    pub matrix: Matrix<F>,
}

impl<F: Scalar> Catalecticant<F> {
    pub fn rank(&self) -> Result<usize> {
        self.matrix.rank()
    }
    /// Right kernel, as dual polynomials of degree d−s annihilating φ.
    pub fn kernel_polys(&self) -> Result<Vec<Poly<F>>> {
        let n = self
            .row_basis
            .first()
            .or(self.col_basis.first())
            .map_or(0, |m| m.nvars());
        self.matrix
            .kernel()?
            .into_iter()
            .map(|v| Poly::from_terms(n, self.d_minus_s, self.col_basis.iter().cloned().zip(v)))
            .collect()
    }
}

/// Build φ_{s,d−s}; 0 ≤ s ≤ d is accepted, the bound only uses 1 ≤ s ≤ d−1.
pub fn catalecticant<F: Scalar>(f: &Poly<F>, s: u32) -> Result<Catalecticant<F>> {
    let d = f.degree();
    if s > d {
        return Err(Error::Precondition(format!("s = {s} exceeds degree {d}")));
    }
    if !F::EXACT {
        return Err(Error::ExactFieldRequired);
    }
    let n = f.nvars();
    let rows = monomials(n, s);
    let cols = monomials(n, d - s);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, e) in cols.iter().enumerate() {
            let full = r.add(e);
            let c = f.coeff(&full);
            if c.is_zero() {
                continue;
            }
            let w = F::from_rational(&Rational::from_integer(full.falling(e)));
            m.set(i, j, c * w);
        }
    }
    Ok(Catalecticant {
        s,
        d_minus_s: d - s,
        row_basis: rows,
        col_basis: cols,
        matrix: m,
    })
}

/// Exact rank of φ_{s,d−s}.
pub fn flattening_rank<F: Scalar>(f: &Poly<F>, s: u32) -> Result<usize> {
    catalecticant(f, s)?.rank()
}

/// dim⟨φ⟩ = rank φ_{1,d−1}.
pub fn span_dim<F: Scalar>(f: &Poly<F>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::Precondition(String::from("zero polynomial")));
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    flattening_rank(f, 1)
}

/// Maximum of rank φ_{s,d−s} over 1 ≤ s ≤ ⌊d/2⌋, with the smallest maximizing s.
pub fn flattening_lower_bound<F: Scalar>(f: &Poly<F>) -> Result<(usize, u32)> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Precondition(String::from(
            "degree at least 2 required",
        )));
    }
    let mut best = (0, 1);
    for s in 1..=d / 2 {
        let r = flattening_rank(f, s)?;
        if r > best.0 {
            best = (r, s);
        }
    }
    Ok(best)
}

/// f rewritten in dim⟨f⟩ variables, with the substitution back to the original ones.
#[derive(Clone, Debug)]
pub struct SpanReduction<F: Scalar> {
    pub reduced: Poly<F>,
    /// Original variable xᵢ ↦ images[i] in the reduced variables.
    pub images: Vec<LinearForm<F>>,
    /// Reduced variable yⱼ as a linear form in the original variables.
    pub basis: Vec<LinearForm<F>>,
}

/// Express f in the minimal number of variables. Absent variables are dropped
/// first; if that is not enough, a basis of ⟨f⟩ is completed to a change of
/// coordinates.
pub fn reduce_span<F: Scalar>(f: &Poly<F>) -> Result<SpanReduction<F>> {
    let n = f.nvars();
    let k = span_dim(f)?;
    let present = f.support_vars();
    if present.len() == k || f.degree() == 0 {
        let reduced = f.restrict_vars(&present)?;
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            match present.iter().position(|&p| p == i) {
                Some(j) => images.push(LinearForm::var(j, present.len())),
                None => images.push(LinearForm::new(alloc::vec![F::zero(); present.len()])),
            }
        }
        let basis = present.iter().map(|&i| LinearForm::var(i, n)).collect();
        return Ok(SpanReduction {
            reduced,
            images,
            basis,
        });
    }
    // columns of φ_{1,d−1} are the partials of order d−1, which span ⟨f⟩
    let cat = catalecticant(f, 1)?;
    let r = cat.matrix.transpose().rref()?;
    let mut basis: Vec<Vec<F>> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut e = alloc::vec![F::zero(); n];
        e[i] = F::one();
        let mut trial = basis.clone();
        trial.push(e.clone());
        if Matrix::from_rows(trial)?.rank()? > basis.len() {
            basis.push(e);
        }
    }
    // rows of B are the new variables yⱼ; x = B⁻¹ y
    let b = Matrix::from_rows(basis.clone())?;
    let binv = invert(&b)?;
    let images: Vec<LinearForm<F>> = (0..n)
        .map(|i| LinearForm::new((0..n).map(|j| binv.get(i, j).clone()).collect()))
        .collect();
    let full = f.substitute(&images)?;
    let keep: Vec<usize> = (0..k).collect();
    let reduced = full.restrict_vars(&keep)?;
    let images = images
        .into_iter()
        .map(|l| LinearForm::new(l.coeffs[..k].to_vec()))
        .collect();
    let basis = basis.into_iter().take(k).map(LinearForm::new).collect();
    Ok(SpanReduction {
        reduced,
        images,
        basis,
    })
}

/// Inverse of a square matrix over an exact field.
pub fn invert<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::Mismatch(String::from(
            "inverse of a non-square matrix",
        )));
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, F::one());
    }
    let r = aug.rref()?;
    if r.pivots.iter().take(n).copied().ne(0..n) {
        return Err(Error::Precondition(String::from("singular matrix")));
    }
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, r.matrix.get(i, n + j).clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::power_of_linear;
    use crate::scalar::int;

    fn mono(e: &[u32]) -> Poly<Rational> {
        Poly::monomial(e, int(1))
    }

    #[test]
    fn power_has_rank_one() {
        let l = LinearForm::new(alloc::vec![int(1), int(2), int(-1)]);
        let f = power_of_linear(&l, 5);
        for s in 1..5 {
            assert_eq!(flattening_rank(&f, s).unwrap(), 1);
        }
    }

    #[test]
    fn flattening_examples() {
        assert_eq!(
            flattening_lower_bound(&mono(&[1, 1, 1, 1])).unwrap(),
            (6, 2)
        );
        assert_eq!(flattening_lower_bound(&mono(&[2, 1, 1])).unwrap(), (4, 2));
        assert_eq!(flattening_lower_bound(&mono(&[1, 1])).unwrap(), (2, 1));
        assert_eq!(flattening_rank(&mono(&[2, 2]), 2).unwrap(), 3);
        assert_eq!(
            catalecticant(&mono(&[3, 1]), 3)
                .unwrap()
                .matrix
                .kernel()
                .unwrap()
                .len(),
            0
        );
        assert!(catalecticant(&mono(&[1, 1]), 3).is_err());
    }

    #[test]
    fn span_examples() {
        let f = mono(&[3, 0, 0]).add(&mono(&[0, 3, 0])).unwrap();
        assert_eq!(span_dim(&f).unwrap(), 2);
        let g = power_of_linear(&LinearForm::new(alloc::vec![int(1), int(1)]), 3);
        assert_eq!(span_dim(&g).unwrap(), 1);
        let r = reduce_span(&g).unwrap();
        assert_eq!(r.reduced.nvars(), 1);
        assert_eq!(r.reduced.num_terms(), 1);
        assert_eq!(r.reduced.substitute(&r.basis).unwrap(), g);
    }

    #[test]
    fn reduction_round_trips() {
        let l1 = LinearForm::new(alloc::vec![int(1), int(1), int(0)]);
        let l2 = LinearForm::new(alloc::vec![int(0), int(1), int(-1)]);
        let f = power_of_linear(&l1, 3)
            .add(&power_of_linear(&l2, 3))
            .unwrap();
        let r = reduce_span(&f).unwrap();
        assert_eq!(r.reduced.nvars(), 2);
        assert_eq!(r.reduced.substitute(&r.basis).unwrap(), f);
    }
}
