//! Waring rank of binary forms: Sylvester's algorithm with an exact
//! square-free certificate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flatten::catalecticant;
use crate::poly::{square_free, LinearForm, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DichotomyCase {
    /// Some kernel element at order r has distinct roots, so R = r.
    SquareFreeKernel,
    /// Every kernel element at order r has a repeated root, so R = d − r + 2.
    MultipleRootForced,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryRankCertificate<F: Scalar> {
    pub degree: u32,
    pub border_rank: usize,
    pub rank: usize,
    /// Dual form of degree r annihilating f, with distinct roots.
    pub kernel_witness: Option<Poly<F>>,
    pub case: DichotomyCase,
}

/// Rank and border rank of a nonzero binary form.
pub fn sylvester_rank<F: Scalar>(f: &Poly<F>) -> Result<BinaryRankCertificate<F>> {
    if f.nvars() != 2 {
        return Err(Error::Precondition(format!(
            "binary form expected, got {} variables; reduce the span first",
            f.nvars()
        )));
    }
    if f.is_zero() {
        return Err(Error::Precondition(String::from("zero polynomial")));
    }
    if !F::EXACT {
        return Err(Error::ExactFieldRequired);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::Precondition(String::from(
            "degree at least 1 required",
        )));
    }
    for r in 1..=d {
        let ker = catalecticant(f, d - r)?.kernel_polys()?;
        if ker.is_empty() {
            continue;
        }
        let border_rank = r as usize;
        return Ok(match square_free_combination(&ker, r)? {
            Some(w) => BinaryRankCertificate {
                degree: d,
                border_rank,
                rank: border_rank,
                kernel_witness: Some(w),
                case: DichotomyCase::SquareFreeKernel,
            },
            None => BinaryRankCertificate {
                degree: d,
                border_rank,
                rank: (d - r + 2) as usize,
                kernel_witness: None,
                case: DichotomyCase::MultipleRootForced,
            },
        });
    }
    Err(Error::Precondition(String::from("no nonzero kernel found")))
}

/// Searches the grid {0,…,2r−1}^k of combinations of the kernel basis. The
/// discriminant has degree ≤ 2(r−1) in the coefficients, so a grid with 2r
/// values per coordinate finds a nonzero value whenever one exists.
fn square_free_combination<F: Scalar>(basis: &[Poly<F>], r: u32) -> Result<Option<Poly<F>>> {
    if basis.len() == 1 {
        return Ok(if square_free(&basis[0])? {
            Some(basis[0].clone())
        } else {
            None
        });
    }
    let k = basis.len();
    let side = 2 * r as usize;
    let mut idx = vec![0usize; k];
    loop {
        // advance odometer; the all-zero tuple is skipped
        let mut pos = 0;
        while pos < k {
            idx[pos] += 1;
            if idx[pos] < side {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == k {
            return Ok(None);
        }
        let mut g = Poly::zero(basis[0].nvars(), basis[0].degree());
        for (c, q) in idx.iter().zip(basis) {
            if *c != 0 {
                g = g.add(&q.scale(&F::from_i64(*c as i64)))?;
            }
        }
        if !g.is_zero() && square_free(&g)? {
            return Ok(Some(g));
        }
    }
}

/// Binary rank of f restricted to the plane spanned by the points u and v.
/// Specialization never raises rank, so this is a lower bound for R(f).
pub fn rank_of_binary_restriction<F: Scalar>(f: &Poly<F>, u: &[F], v: &[F]) -> Result<usize> {
    let n = f.nvars();
    if u.len() != n || v.len() != n {
        return Err(Error::Mismatch(String::from(
            "plane points have the wrong length",
        )));
    }
    let independent = (0..n).any(|i| {
        (i + 1..n).any(|j| !(u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone()).is_zero())
    });
    if !independent {
        return Err(Error::Precondition(String::from("degenerate plane")));
    }
    let images: Vec<LinearForm<F>> = (0..n)
        .map(|i| LinearForm::new(vec![u[i].clone(), v[i].clone()]))
        .collect();
    let g = f.substitute(&images)?;
    if g.is_zero() {
        return Ok(0);
    }
    Ok(sylvester_rank(&g)?.rank)
}

/// Restriction to the coordinate plane of variables i and j.
pub fn coordinate_restriction_rank<F: Scalar>(f: &Poly<F>, i: usize, j: usize) -> Result<usize> {
    let n = f.nvars();
    let mut u = vec![F::zero(); n];
    let mut v = vec![F::zero(); n];
    u[i] = F::one();
    v[j] = F::one();
    rank_of_binary_restriction(f, &u, &v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn mono(e: &[u32]) -> Poly<Rational> {
        Poly::monomial(e, int(1))
    }

    #[test]
    fn monomials() {
        for a in 1..=6u32 {
            for b in a..=6u32 {
                let c = sylvester_rank(&mono(&[a, b])).unwrap();
                assert_eq!(c.rank, (b + 1) as usize, "x^{a} y^{b}");
                assert_eq!(c.border_rank, (a + 1) as usize);
            }
        }
        assert_eq!(sylvester_rank(&mono(&[4, 1])).unwrap().rank, 5);
    }

    #[test]
    fn sum_of_powers() {
        for d in 3..7 {
            let f = mono(&[d, 0]).add(&mono(&[0, d])).unwrap();
            let c = sylvester_rank(&f).unwrap();
            assert_eq!((c.border_rank, c.rank), (2, 2));
            let w = c.kernel_witness.unwrap();
            assert!(Poly::contract(&w, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn restrictions() {
        let f = mono(&[3, 1, 0]).add(&mono(&[0, 0, 4])).unwrap();
        assert_eq!(coordinate_restriction_rank(&f, 0, 1).unwrap(), 4);
        let g = mono(&[2, 2, 0]).add(&mono(&[3, 0, 1])).unwrap();
        assert_eq!(coordinate_restriction_rank(&g, 0, 1).unwrap(), 3);
        assert!(rank_of_binary_restriction(
            &g,
            &[int(1), int(0), int(0)],
            &[int(2), int(0), int(0)]
        )
        .is_err());
        assert!(sylvester_rank(&g).is_err());
    }
}
