//! Dense exact linear algebra and limits of column spaces over Q(t).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::any::Any;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
pub use crate::ratfun::{RatFun, RatPoly};
use crate::scalar::{BigComplex, BigFloat, Rational, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Scalar> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Mismatch(String::from("ragged rows")));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_cols(cols: &[Vec<F>]) -> Result<Self> {
        Ok(Matrix::from_rows(cols.to_vec())?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != o.rows {
            return Err(Error::Mismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m.get(i, j).clone() + a.clone() * o.get(k, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Mismatch(String::from("vector length")));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Gauss-Jordan elimination, first nonzero pivot in column order.
    pub fn rref(&self) -> Result<Rref<F>> {
        if !F::EXACT {
            return Err(Error::ExactFieldRequired);
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv()?;
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(Rref {
            matrix: m,
            rank: r,
            pivots,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact rank; rational matrices go through fraction-free elimination.
    pub fn rank(&self) -> Result<usize> {
        if let Some(q) = (self as &dyn Any).downcast_ref::<Matrix<Rational>>() {
            return Ok(bareiss_rank(q));
        }
        Ok(self.rref()?.rank)
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Result<Vec<Vec<F>>> {
        let r = self.rref()?;
        let mut out = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix.get(i, f).clone();
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Basis of the left null space {y : yᵀ M = 0}.
    pub fn left_kernel(&self) -> Result<Vec<Vec<F>>> {
        self.transpose().kernel()
    }

    /// Solve M x = b, returning one solution if consistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::Mismatch(String::from("vector length")));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let r = aug.rref()?;
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in r.pivots.iter().enumerate() {
            x[p] = r.matrix.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<F> {
        if self.rows != self.cols {
            return Err(Error::Mismatch(String::from(
                "determinant of a non-square matrix",
            )));
        }
        if !F::EXACT {
            return Err(Error::ExactFieldRequired);
        }
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * piv.clone();
            let inv = piv.inv()?;
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * inv.clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) rank of a rational matrix.
pub fn bareiss_rank(m: &Matrix<Rational>) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let pr = &top[r];
        let piv = pr[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..m.cols {
                let v = &piv * &row[j] - &f * &pr[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Rank of a floating matrix with magnitude pivoting; entries below `tol` count as zero.
pub fn numeric_rank(m: &Matrix<BigComplex>, tol: &BigFloat) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let mut best = None;
        let mut best_mag = tol.clone();
        for i in r..a.rows {
            let mag = a.get(i, c).abs();
            if mag.cmp_value(&best_mag) == core::cmp::Ordering::Greater {
                best_mag = mag;
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        a.swap_rows(p, r);
        let inv = a.get(r, c).inv().expect("pivot above tolerance");
        for i in r + 1..a.rows {
            let f = a.get(i, c).clone() * inv.clone();
            for j in c..a.cols {
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                a.set(i, j, v);
            }
        }
        r += 1;
    }
    r
}

/// Limit as t → 0 of the column span of a matrix over Q(t).
#[derive(Clone, Debug, PartialEq)]
pub struct LimitSpan {
    /// Column vectors spanning the limit, one per input column.
    pub basis: Vec<Vec<Rational>>,
    /// t-adic valuation of the wedge of the input columns.
    pub vanishing_order: i64,
}

fn poly_lcm(a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
    let g = a.gcd(b)?;
    let (q, _) = (a.clone() * b.clone()).divrem(&g)?;
    q.monic()
}

/// Clears denominators and t-adic valuations column by column, then
/// replaces a column by (Σ cᵢ vᵢ)/t^v whenever the columns at t = 0 satisfy
/// a relation Σ cᵢ vᵢ(0) = 0. Each replacement lowers the valuation of the
/// wedge of the columns, so the loop ends with independent columns at t = 0.
pub fn limit_column_space(m: &Matrix<RatFun>) -> Result<LimitSpan> {
    let rows = m.rows();
    let k = m.cols();
    let mut order: i64 = 0;
    let mut cols: Vec<Vec<RatPoly>> = Vec::with_capacity(k);
    for j in 0..k {
        let col = m.col(j);
        let mut l = RatPoly::constant(<Rational as Scalar>::one());
        for e in &col {
            if !e.is_zero() {
                l = poly_lcm(&l, e.den())?;
            }
        }
        order -= l.valuation().unwrap_or(0) as i64;
        let mut pc: Vec<RatPoly> = col
            .iter()
            .map(|e| {
                let (q, _) = l.divrem(e.den()).expect("denominator divides lcm");
                e.num().clone() * q
            })
            .collect();
        let v = pc
            .iter()
            .filter_map(|p| p.valuation())
            .min()
            .ok_or_else(|| Error::Dependent(format!("column {j} is identically zero")))?;
        order += v as i64;
        pc = pc.iter().map(|p| p.shift_down(v)).collect();
        cols.push(pc);
    }
    let bound: usize = cols
        .iter()
        .map(|c| c.iter().filter_map(|p| p.degree()).max().unwrap_or(0))
        .sum();
    let mut spent = 0usize;
    loop {
        let a0 = Matrix::from_cols(
            &cols
                .iter()
                .map(|c| c.iter().map(|p| p.coeff(0)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        );
        let a0 = if k == 0 { Matrix::zeros(rows, 0) } else { a0? };
        let ker = a0.kernel()?;
        let Some(c) = ker.into_iter().next() else {
            return Ok(LimitSpan {
                basis: (0..k).map(|j| a0.col(j)).collect(),
                vanishing_order: order,
            });
        };
        let j = (0..k)
            .rev()
            .find(|&i| !Scalar::is_zero(&c[i]))
            .expect("kernel vector is nonzero");
        let mut new: Vec<RatPoly> = vec![RatPoly::zero(); rows];
        for (i, ci) in c.iter().enumerate() {
            if Scalar::is_zero(ci) {
                continue;
            }
            for r in 0..rows {
                new[r] = new[r].clone() + cols[i][r].scale(ci);
            }
        }
        let Some(v) = new.iter().filter_map(|p| p.valuation()).min() else {
            return Err(dependency_witness(m));
        };
        spent += v;
        if spent > bound {
            return Err(dependency_witness(m));
        }
        order += v as i64;
        cols[j] = new.iter().map(|p| p.shift_down(v)).collect();
    }
}

fn dependency_witness(m: &Matrix<RatFun>) -> Error {
    match m.kernel() {
        Ok(ker) if !ker.is_empty() => {
            let w: Vec<String> = ker[0].iter().map(|x| format!("{x}")).collect();
            Error::Dependent(format!("relation [{}]", w.join(", ")))
        }
        _ => Error::Dependent(String::from("columns are dependent")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::unipoly::UniPoly;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(Matrix::<Rational>::identity(5).rank().unwrap(), 5);
    }

    #[test]
    fn zero_kernel() {
        assert_eq!(Matrix::<Rational>::zeros(3, 4).kernel().unwrap().len(), 4);
    }

    #[test]
    fn bareiss_matches_rref() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        assert_eq!(bareiss_rank(&m), 2);
        assert_eq!(m.rref().unwrap().rank, 2);
        let m = q(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(bareiss_rank(&m), 3);
    }

    #[test]
    fn float_rref_refused() {
        let m: Matrix<BigComplex> = Matrix::identity(2);
        assert_eq!(m.rref().unwrap_err(), Error::ExactFieldRequired);
    }

    #[test]
    fn determinant_and_solve() {
        let m = q(&[&[2, 1], &[1, 3]]);
        assert_eq!(m.determinant().unwrap(), int(5));
        let x = m.solve(&[int(3), int(4)]).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
    }

    fn rf(c: &[i64]) -> RatFun {
        RatFun::from_poly(UniPoly::new(c.iter().map(|&x| int(x)).collect()))
    }

    #[test]
    fn limit_of_simple_columns() {
        // [(1,0),(1,t)] -> full
        let m = Matrix::from_cols(&[vec![rf(&[1]), rf(&[])], vec![rf(&[1]), rf(&[0, 1])]]).unwrap();
        let l = limit_column_space(&m).unwrap();
        assert_eq!(Matrix::from_cols(&l.basis).unwrap().rank().unwrap(), 2);
        assert_eq!(l.vanishing_order, 1);
        // [(1,t),(1,t^2)]
        let m = Matrix::from_cols(&[vec![rf(&[1]), rf(&[0, 1])], vec![rf(&[1]), rf(&[0, 0, 1])]])
            .unwrap();
        let l = limit_column_space(&m).unwrap();
        assert_eq!(Matrix::from_cols(&l.basis).unwrap().rank().unwrap(), 2);
        // poles: column (1/t, 1/t) and (1, 2)
        let inv_t = RatFun::t().inv().unwrap();
        let m = Matrix::from_cols(&[vec![inv_t.clone(), inv_t], vec![rf(&[1]), rf(&[2])]]).unwrap();
        let l = limit_column_space(&m).unwrap();
        assert_eq!(l.vanishing_order, -1);
        assert_eq!(l.basis[0], vec![int(1), int(1)]);
    }

    #[test]
    fn dependent_columns_rejected() {
        let m =
            Matrix::from_cols(&[vec![rf(&[1]), rf(&[0, 1])], vec![rf(&[2]), rf(&[0, 2])]]).unwrap();
        assert!(matches!(limit_column_space(&m), Err(Error::Dependent(_))));
    }
}
