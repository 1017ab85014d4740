//! Dimensions of the singular strata Σ_s(φ) = {[p] : mult_p(φ) ≥ s+1} and
//! the singular-stratum lower bound R(φ) ≥ rank φ_{s,d−s} + dim Σ_s(φ) + 1.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::Bound;
use crate::error::{Error, Result};
use crate::flatten::{flattening_rank, span_dim};
use crate::poly::{monomials, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumMethod {
    MonomialCombinatorial,
    DetFormula,
    PermFormula,
    ReducibleFactor,
    BruteForceGrid,
    CoordinateSubspace,
}

/// Projective dimension of Σ_s, with −1 for the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDim {
    pub s: u32,
    pub dim: i64,
    pub method: StratumMethod,
    /// The true dimension may be larger.
    pub lower_only: bool,
}

/// Σ_s of x^b is the union of coordinate subspaces {xᵢ = 0, i ∈ S} with Σ_S bᵢ ≥ s+1.
/// Zero exponents count as variables of the ambient space.
pub fn sigma_dim_monomial(b: &[u32], s: u32) -> StratumDim {
    let n = b.len() as i64;
    let mut e: Vec<u32> = b.iter().copied().filter(|&x| x > 0).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0u32;
    let mut dim = -1;
    for (k, &x) in e.iter().enumerate() {
        acc += x;
        if acc > s {
            dim = n - 1 - (k as i64 + 1);
            break;
        }
    }
    StratumDim {
        s,
        dim: dim.max(-1),
        method: StratumMethod::MonomialCombinatorial,
        lower_only: false,
    }
}

fn check_a(n: u32, a: u32) -> Result<()> {
    if a < 1 || a + 1 > n {
        return Err(Error::Precondition(format!(
            "need 1 ≤ a ≤ n−1, got a = {a}, n = {n}"
        )));
    }
    Ok(())
}

/// Σ_a(det_n) is the locus of matrices of rank ≤ n−a−1.
pub fn sigma_dim_det(n: u32, a: u32) -> Result<StratumDim> {
    check_a(n, a)?;
    let (n, a1) = (n as i64, a as i64 + 1);
    Ok(StratumDim {
        s: a,
        dim: (n * n - 1 - a1 * a1).max(-1),
        method: StratumMethod::DetFormula,
        lower_only: false,
    })
}

/// Σ_a(per_n) contains the matrices with a+1 zero columns.
pub fn sigma_dim_perm_lb(n: u32, a: u32) -> Result<StratumDim> {
    check_a(n, a)?;
    let (n, a) = (n as i64, a as i64);
    Ok(StratumDim {
        s: a as u32,
        dim: n * (n - a - 1) - 1,
        method: StratumMethod::PermFormula,
        lower_only: true,
    })
}

/// Largest coordinate subspace {xᵢ = 0, i ∈ S} along which φ has multiplicity
/// ≥ s+1, read off the support: every monomial has degree ≥ s+1 in S.
pub fn sigma_dim_coordinate<F: Scalar>(f: &Poly<F>, s: u32) -> Result<StratumDim> {
    let n = f.nvars();
    if n > 20 {
        return Err(Error::LimitExceeded(format!(
            "coordinate strata limited to n ≤ 20 (got n = {n})"
        )));
    }
    let mk = |dim| StratumDim {
        s,
        dim,
        method: StratumMethod::CoordinateSubspace,
        lower_only: true,
    };
    let mut best = -1i64;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if n as i64 - 1 - size <= best {
            continue;
        }
        let deep = f.terms().all(|(m, _)| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| m.0[i])
                .sum::<u32>()
                > s
        });
        if deep {
            best = n as i64 - 1 - size;
        }
    }
    Ok(mk(best))
}

/// Largest coordinate subspace on which every partial of order s vanishes.
/// By Euler's relation the lower-order partials then vanish too.
pub fn sigma_dim_bruteforce<F: Scalar>(f: &Poly<F>, s: u32) -> Result<StratumDim> {
    let n = f.nvars();
    let d = f.degree();
    if n > 6 || d > 8 {
        return Err(Error::LimitExceeded(format!(
            "brute force limited to n ≤ 6, d ≤ 8 (got n = {n}, d = {d})"
        )));
    }
    let mk = |dim| StratumDim {
        s,
        dim,
        method: StratumMethod::BruteForceGrid,
        lower_only: true,
    };
    if s >= d {
        return Ok(mk(-1));
    }
    let partials: Vec<Poly<F>> = monomials(n, s)
        .into_iter()
        .map(|e| Poly::contract(&Poly::monomial(&e.0, F::one()), f))
        .collect::<Result<_>>()?;
    // subsets by increasing size: the first hit has the largest dimension
    for size in 1..n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let vanishes = partials.iter().all(|p| {
                p.terms()
                    .all(|(m, _)| (0..n).any(|i| mask >> i & 1 == 1 && m.0[i] > 0))
            });
            if vanishes {
                return Ok(mk((n - 1 - size) as i64));
            }
        }
    }
    Ok(mk(-1))
}

/// rank φ_{s,d−s} + dim Σ_s + 1 for each supplied stratum; requires ⟨φ⟩ = W.
pub fn sigma_lower_bound<F: Scalar>(f: &Poly<F>, strata: &[StratumDim]) -> Result<Vec<Bound>> {
    if span_dim(f)? != f.nvars() {
        return Err(Error::Precondition(String::from(
            "span is deficient; reduce variables first",
        )));
    }
    let mut out = Vec::new();
    for st in strata {
        if st.s == 0 || st.s >= f.degree() {
            continue;
        }
        let r = flattening_rank(f, st.s)? as i64;
        let v = r + st.dim + 1;
        let tag = if st.lower_only {
            ", stratum dimension is a lower bound"
        } else {
            ""
        };
        out.push(Bound::new(
            v.max(0) as u64,
            format!("singular-stratum bound @ s={} ({:?}{tag})", st.s, st.method),
        ));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization {
    Irreducible,
    Reducible,
    RepeatedFactor,
}

/// R ≥ 2n−2 for reducible φ and R ≥ 2n−1 with a repeated factor (n = dim⟨φ⟩).
pub fn reducibility_bounds(n: usize, kind: Factorization) -> Option<Bound> {
    let n = n as u64;
    match kind {
        Factorization::Irreducible => None,
        Factorization::Reducible => Some(Bound::new(
            (2 * n).saturating_sub(2),
            String::from("reducible form bound 2n−2"),
        )),
        Factorization::RepeatedFactor => Some(Bound::new(
            (2 * n).saturating_sub(1),
            String::from("repeated factor bound 2n−1"),
        )),
    }
}
