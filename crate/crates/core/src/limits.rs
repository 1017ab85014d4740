//! Curves x₁(t),…,x_r(t) in W and the limit as t → 0 of the span of their
//! d-th powers, computed exactly over Q(t).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{limit_column_space, Matrix};
use crate::poly::{monomials, power_of_linear, LinearForm, Monomial, Poly};
use crate::ratfun::{RatFun, RatPoly};
use crate::scalar::{int, Rational, Scalar};
use crate::unipoly::UniPoly;

/// Each curve is a vector of polynomials in t, one per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFamily {
    pub d: u32,
    pub nvars: usize,
    pub curves: Vec<Vec<RatPoly>>,
    pub labels: Vec<String>,
}

/// A basis of lim_{t→0} ⟨x₁(t)^d, …, x_r(t)^d⟩.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitPlane {
    pub dimension: usize,
    pub basis: Vec<Poly<Rational>>,
    /// Power of t cleared from the wedge of the columns.
    pub vanishing_order: i64,
}

/// Builds a curve from (variable, coefficient, power of t) triples.
pub fn curve(nvars: usize, terms: &[(usize, i64, usize)]) -> Vec<RatPoly> {
    let mut c = vec![RatPoly::zero(); nvars];
    for &(v, a, k) in terms {
        c[v] = c[v].clone() + UniPoly::term(int(a), k);
    }
    c
}

fn label_of(c: &[RatPoly]) -> String {
    let parts: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| format!("({p})*x{i}"))
        .collect();
    parts.join(" + ")
}

impl CurveFamily {
    pub fn new(d: u32, nvars: usize, curves: Vec<Vec<RatPoly>>) -> Result<Self> {
        if curves.iter().any(|c| c.len() != nvars) {
            return Err(Error::Mismatch(String::from(
                "curve with the wrong number of coordinates",
            )));
        }
        let labels = curves.iter().map(|c| label_of(c)).collect();
        Ok(CurveFamily {
            d,
            nvars,
            curves,
            labels,
        })
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// The family with the constant curve x_var appended.
    pub fn with_constant(&self, var: usize) -> Self {
        let mut f = self.clone();
        let c = curve(self.nvars, &[(var, 1, 0)]);
        f.labels.push(label_of(&c));
        f.curves.push(c);
        f
    }

    /// Columns of d-th powers over Q(t), rows in descending graded-lex order.
    pub fn power_matrix(&self) -> Result<(Vec<Monomial>, Matrix<RatFun>)> {
        let basis = monomials(self.nvars, self.d);
        let cols: Vec<Vec<RatFun>> = self
            .curves
            .iter()
            .map(|c| {
                let l = LinearForm::new(c.iter().map(|p| RatFun::from_poly(p.clone())).collect());
                power_of_linear(&l, self.d).coeff_vector(&basis)
            })
            .collect();
        let m = if cols.is_empty() {
            Matrix::zeros(basis.len(), 0)
        } else {
            Matrix::from_cols(&cols)?
        };
        Ok((basis, m))
    }
}

/// Curves x₀ + Σᵢ tⁱ λ_{i,sᵢ} xᵢ for every tuple 0 ≤ sᵢ ≤ bᵢ, in lexicographic order.
/// `lambdas[i-1][s]` is λ_{i,s}; the default table is λ_{i,s} = s.
pub fn monomial_family(
    b: &[u32],
    d: u32,
    lambdas: Option<&[Vec<Rational>]>,
) -> Result<CurveFamily> {
    let tail: u32 = b.iter().sum();
    if d <= tail {
        return Err(Error::Precondition(format!(
            "degree {d} must exceed the tail sum {tail}"
        )));
    }
    let n = b.len();
    let table: Vec<Vec<Rational>> = match lambdas {
        Some(t) => t.to_vec(),
        None => b
            .iter()
            .map(|&bi| (0..=bi as i64).map(int).collect())
            .collect(),
    };
    if table.len() != n {
        return Err(Error::Mismatch(String::from(
            "one λ row per exponent required",
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() <= b[i] as usize {
            return Err(Error::Mismatch(format!("λ row {} too short", i + 1)));
        }
        if !Scalar::is_zero(&row[0]) {
            return Err(Error::Precondition(format!("λ_{{{},0}} must be 0", i + 1)));
        }
        for s in 0..=b[i] as usize {
            for r in 0..s {
                if row[r] == row[s] {
                    return Err(Error::Precondition(format!(
                        "repeated λ in row {} (Vandermonde degeneracy)",
                        i + 1
                    )));
                }
            }
        }
    }
    let mut curves = Vec::new();
    let mut idx = vec![0u32; n];
    loop {
        let mut c = vec![RatPoly::zero(); n + 1];
        c[0] = RatPoly::constant(int(1));
        for i in 0..n {
            c[i + 1] = UniPoly::term(table[i][idx[i] as usize].clone(), i + 1);
        }
        curves.push(c);
        // lexicographic increment, last coordinate fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return CurveFamily::new(d, n + 1, curves);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] <= b[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// span{ x₀^{d−Σaᵢ} x₁^{a₁}⋯xₙ^{aₙ} : 0 ≤ aᵢ ≤ bᵢ }.
pub fn expected_monomial_span(b: &[u32], d: u32) -> Vec<Poly<Rational>> {
    let n = b.len();
    let mut out = Vec::new();
    let mut idx = vec![0u32; n];
    loop {
        let s: u32 = idx.iter().sum();
        let mut e = vec![d - s];
        e.extend_from_slice(&idx);
        out.push(Poly::monomial(&e, int(1)));
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] <= b[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn limit_plane(fam: &CurveFamily) -> Result<LimitPlane> {
    let (basis, m) = fam.power_matrix()?;
    let lim = limit_column_space(&m)?;
    let polys = lim
        .basis
        .iter()
        .map(|v| {
            Poly::from_terms(
                fam.nvars,
                fam.d,
                basis.iter().cloned().zip(v.iter().cloned()),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LimitPlane {
        dimension: polys.len(),
        basis: polys,
        vanishing_order: lim.vanishing_order,
    })
}

fn coeff_matrix(polys: &[Poly<Rational>], basis: &[Monomial]) -> Result<Matrix<Rational>> {
    let cols: Vec<Vec<Rational>> = polys.iter().map(|p| p.coeff_vector(basis)).collect();
    if cols.is_empty() {
        return Ok(Matrix::zeros(basis.len(), 0));
    }
    Matrix::from_cols(&cols)
}

fn check_shape(plane: &LimitPlane, f: &Poly<Rational>) -> Result<()> {
    if let Some(p) = plane.basis.first() {
        if p.nvars() != f.nvars() || p.degree() != f.degree() {
            return Err(Error::Mismatch(String::from(
                "polynomial and plane live in different spaces",
            )));
        }
    }
    Ok(())
}

/// Exact membership by rank comparison.
pub fn contains(plane: &LimitPlane, f: &Poly<Rational>) -> Result<bool> {
    check_shape(plane, f)?;
    let basis = monomials(f.nvars(), f.degree());
    let m = coeff_matrix(&plane.basis, &basis)?;
    let mut all = plane.basis.clone();
    all.push(f.clone());
    Ok(coeff_matrix(&all, &basis)?.rank()? == m.rank()?)
}

/// Whether two spans coincide.
pub fn same_span(a: &[Poly<Rational>], b: &[Poly<Rational>]) -> Result<bool> {
    let Some(first) = a.first().or(b.first()) else {
        return Ok(true);
    };
    let basis = monomials(first.nvars(), first.degree());
    let ra = coeff_matrix(a, &basis)?.rank()?;
    let rb = coeff_matrix(b, &basis)?.rank()?;
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    Ok(ra == rb && coeff_matrix(&both, &basis)?.rank()? == ra)
}

/// Membership up to rescaling the coordinates: a plane element with exactly
/// the target's support. When the target's exponent vectors are linearly
/// independent some diagonal change of coordinates maps that element to the
/// target, and such changes preserve border rank.
pub fn contains_up_to_scaling(
    plane: &LimitPlane,
    target: &Poly<Rational>,
) -> Result<Option<Poly<Rational>>> {
    check_shape(plane, target)?;
    let support: Vec<Monomial> = target.terms().map(|(m, _)| m.clone()).collect();
    let exps = Matrix::from_rows(
        support
            .iter()
            .map(|m| m.0.iter().map(|&e| int(e as i64)).collect())
            .collect(),
    )?;
    if exps.rank()? != support.len() {
        return Err(Error::Precondition(String::from(
            "target exponent vectors are dependent; scaling cannot be solved",
        )));
    }
    let basis = monomials(target.nvars(), target.degree());
    let outside: Vec<usize> = (0..basis.len())
        .filter(|&k| !support.contains(&basis[k]))
        .collect();
    let m = coeff_matrix(&plane.basis, &basis)?;
    let rows: Vec<Vec<Rational>> = outside.iter().map(|&k| m.row(k).to_vec()).collect();
    let ker = if rows.is_empty() {
        (0..plane.dimension)
            .map(|j| {
                (0..plane.dimension)
                    .map(|i| if i == j { int(1) } else { int(0) })
                    .collect()
            })
            .collect()
    } else {
        Matrix::from_rows(rows)?.kernel()?
    };
    if ker.is_empty() {
        return Ok(None);
    }
    let combine = |c: &[Rational]| -> Result<Poly<Rational>> {
        let mut g = Poly::zero(target.nvars(), target.degree());
        for (v, ci) in ker.iter().zip(c) {
            for (p, vi) in plane.basis.iter().zip(v) {
                g = g.add(&p.scale(&(ci.clone() * vi.clone())))?;
            }
        }
        Ok(g)
    };
    // each support coefficient of Σ τ^k v_k is a polynomial in τ of degree < dim,
    // so trying |support|·dim + 1 values of τ finds a point where none vanish
    let tries = support.len() * ker.len() + 1;
    for tau in 1..=tries as i64 {
        let c: Vec<Rational> = (0..ker.len())
            .map(|k| Scalar::pow(&int(tau), k as u32))
            .collect();
        let g = combine(&c)?;
        if support.iter().all(|m| !Scalar::is_zero(&g.coeff(m))) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// A row of the border rank 3, 4 and 5 normal-form tables.
#[derive(Clone, Debug)]
pub struct NormalFormRow {
    pub id: String,
    pub border_rank: usize,
    pub family: CurveFamily,
    pub target: Poly<Rational>,
    /// Rank bracket as printed, in terms of d.
    pub rank_text: &'static str,
    /// Membership holds only after rescaling coordinates.
    pub needs_scaling: bool,
    pub correction: Option<&'static str>,
}

/// Row identifiers for border rank 3, 4 and 5.
pub fn normal_form_ids(r: usize) -> Vec<String> {
    let base3 = ["fermat", "tangent", "osculating"];
    let base4 = [
        "fermat",
        "tangent",
        "two_tangents",
        "xyz",
        "osculating_plus_power",
        "third_order",
    ];
    match r {
        3 => base3.iter().map(|s| format!("r3.{s}")).collect(),
        4 => base4.iter().map(|s| format!("r4.{s}")).collect(),
        5 => base4.iter().map(|s| format!("r5.{s}")).collect(),
        _ => Vec::new(),
    }
}

fn target_from(nvars: usize, d: u32, terms: &[&[u32]]) -> Result<Poly<Rational>> {
    let mut p = Poly::zero(nvars, d);
    for e in terms {
        p = p.add(&Poly::monomial(e, int(1)))?;
    }
    Ok(p)
}

/// The family and target for one row at degree d ≥ 3.
pub fn normal_form_row(id: &str, d: u32) -> Result<NormalFormRow> {
    if d < 3 {
        return Err(Error::Precondition(format!(
            "degree {d} too small; d ≥ 3 required"
        )));
    }
    if let Some(rest) = id.strip_prefix("r5.") {
        let base = normal_form_row(&format!("r4.{rest}"), d)?;
        let n = base.family.nvars + 1;
        let mut curves: Vec<Vec<RatPoly>> = base
            .family
            .curves
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.push(RatPoly::zero());
                c
            })
            .collect();
        curves.push(curve(n, &[(n - 1, 1, 0)]));
        let mut u = vec![0; n];
        u[n - 1] = d;
        let target = base
            .target
            .embed_vars(n, &(0..n - 1).collect::<Vec<_>>())
            .add(&Poly::monomial(&u, int(1)))?;
        return Ok(NormalFormRow {
            id: id.to_string(),
            border_rank: 5,
            family: CurveFamily::new(d, n, curves)?,
            target,
            rank_text: "border rank 4 row plus u^d",
            needs_scaling: base.needs_scaling,
            correction: base.correction,
        });
    }
    let (x, y, z, w) = (0, 1, 2, 3);
    let row = |border_rank,
               n,
               curves: Vec<Vec<RatPoly>>,
               target,
               rank_text,
               needs_scaling,
               correction|
     -> Result<NormalFormRow> {
        Ok(NormalFormRow {
            id: id.to_string(),
            border_rank,
            family: CurveFamily::new(d, n, curves)?,
            target,
            rank_text,
            needs_scaling,
            correction,
        })
    };
    match id {
        "r3.fermat" => row(
            3,
            3,
            vec![curve(3, &[(x, 1, 0)]), curve(3, &[(y, 1, 0)]), curve(3, &[(z, 1, 0)])],
            target_from(3, d, &[&[d, 0, 0], &[0, d, 0], &[0, 0, d]])?,
            "3",
            false,
            None,
        ),
        "r3.tangent" => row(
            3,
            3,
            vec![curve(3, &[(x, 1, 0)]), curve(3, &[(x, 1, 0), (y, 1, 1)]), curve(3, &[(z, 1, 0)])],
            target_from(3, d, &[&[d - 1, 1, 0], &[0, 0, d]])?,
            "d ≤ R ≤ d+1",
            false,
            None,
        ),
        "r3.osculating" => row(
            3,
            3,
            vec![
                curve(3, &[(x, 1, 0)]),
                curve(3, &[(x, 1, 0), (y, 1, 1)]),
                curve(3, &[(x, 1, 0), (y, 2, 1), (z, 1, 2)]),
            ],
            target_from(3, d, &[&[d - 2, 2, 0], &[d - 1, 0, 1]])?,
            "d ≤ R ≤ 2d−1",
            true,
            None,
        ),
        "r4.fermat" => row(
            4,
            4,
            (0..4).map(|v| curve(4, &[(v, 1, 0)])).collect(),
            target_from(4, d, &[&[d, 0, 0, 0], &[0, d, 0, 0], &[0, 0, d, 0], &[0, 0, 0, d]])?,
            "4",
            false,
            None,
        ),
        "r4.tangent" => row(
            4,
            4,
            vec![
                curve(4, &[(x, 1, 0)]),
                curve(4, &[(x, 1, 0), (y, 1, 1)]),
                curve(4, &[(z, 1, 0)]),
                curve(4, &[(w, 1, 0)]),
            ],
            target_from(4, d, &[&[d - 1, 1, 0, 0], &[0, 0, d, 0], &[0, 0, 0, d]])?,
            "d ≤ R ≤ d+2",
            false,
            None,
        ),
        "r4.two_tangents" => row(
            4,
            4,
            vec![
                curve(4, &[(x, 1, 0)]),
                curve(4, &[(x, 1, 0), (y, 1, 1)]),
                curve(4, &[(z, 1, 0)]),
                curve(4, &[(z, 1, 0), (w, 1, 1)]),
            ],
            target_from(4, d, &[&[d - 1, 1, 0, 0], &[0, 0, d - 1, 1]])?,
            "d ≤ R ≤ 2d",
            false,
            None,
        ),
        "r4.xyz" => row(
            4,
            3,
            vec![
                curve(3, &[(x, 1, 0)]),
                curve(3, &[(x, 1, 0), (y, 1, 1)]),
                curve(3, &[(x, 1, 0), (y, 1, 1), (z, 1, 2)]),
                curve(3, &[(x, 1, 0), (z, 1, 2)]),
            ],
            target_from(3, d, &[&[d - 2, 1, 1]])?,
            "d ≤ R ≤ 2d−2",
            false,
            None,
        ),
        "r4.osculating_plus_power" => row(
            4,
            4,
            vec![
                curve(4, &[(x, 1, 0)]),
                curve(4, &[(x, 1, 0), (y, 1, 1)]),
                curve(4, &[(x, 1, 0), (y, 2, 1), (z, 1, 2)]),
                curve(4, &[(w, 1, 0)]),
            ],
            target_from(4, d, &[&[d - 2, 2, 0, 0], &[d - 1, 0, 1, 0], &[0, 0, 0, d]])?,
            "d ≤ R ≤ 2d",
            true,
            Some("third curve x + 2ty + t²z; with x + ty + t²z the limit misses the target"),
        ),
        "r4.third_order" => row(
            4,
            4,
            (0..4i64)
                .map(|k| curve(4, &[(x, 1, 0), (y, k, 1), (z, k * k, 2), (w, k * k * k, 3)]))
                .collect(),
            target_from(4, d, &[&[d - 3, 3, 0, 0], &[d - 2, 1, 1, 0], &[d - 1, 0, 0, 1]])?,
            "d ≤ R ≤ 3d−3",
            true,
            Some(
                "target x^{d−3}y³ + x^{d−2}yz + x^{d−1}w from the curves x + kty + k²t²z + k³t³w, k = 0..3; \
                 the printed x^{d−3}y³ + x^{d−2}z² + x^{d−1}w has flattening rank 5",
            ),
        ),
        other => Err(Error::UnknownEntry(other.to_string())),
    }
}

/// Outcome of certifying one normal-form row.
#[derive(Clone, Debug)]
pub struct RowCertificate {
    pub id: String,
    pub d: u32,
    pub plane: LimitPlane,
    pub exact_member: bool,
    /// Plane element with the target's support, when scaling was needed.
    pub scaled_member: Option<Poly<Rational>>,
}

impl RowCertificate {
    pub fn certified(&self) -> bool {
        self.exact_member || self.scaled_member.is_some()
    }
}

pub fn certify_row(row: &NormalFormRow) -> Result<RowCertificate> {
    let plane = limit_plane(&row.family)?;
    let exact = contains(&plane, &row.target)?;
    let scaled = if exact {
        None
    } else {
        contains_up_to_scaling(&plane, &row.target)?
    };
    Ok(RowCertificate {
        id: row.id.clone(),
        d: row.family.d,
        plane,
        exact_member: exact,
        scaled_member: scaled,
    })
}

/// Variables (x, y, z, u, v) for the five-curve family.
pub const FIVE_CURVE_NAMES: [&str; 5] = ["x", "y", "z", "u", "v"];

/// a = x + t(u − z), b = y + t(v − z), c = x + y + tz, d = x + 2y, e = x + 3y.
pub fn five_curve_family() -> Result<CurveFamily> {
    let (x, y, z, u, v) = (0, 1, 2, 3, 4);
    CurveFamily::new(
        3,
        5,
        vec![
            curve(5, &[(x, 1, 0), (u, 1, 1), (z, -1, 1)]),
            curve(5, &[(y, 1, 0), (v, 1, 1), (z, -1, 1)]),
            curve(5, &[(x, 1, 0), (y, 1, 0), (z, 1, 1)]),
            curve(5, &[(x, 1, 0), (y, 2, 0)]),
            curve(5, &[(x, 1, 0), (y, 3, 0)]),
        ],
    )
}

/// φ = x²u + y²v + xyz composed with u ↦ αu + βz, v ↦ γv + δz, z ↦ εz lies in
/// the five-curve limit plane.
#[derive(Clone, Debug)]
pub struct FiveCurveCertificate {
    pub plane: LimitPlane,
    /// Images of (x, y, z, u, v) in the same variables.
    pub substitution: Vec<LinearForm<Rational>>,
    /// φ ∘ A, which the plane contains.
    pub member: Poly<Rational>,
    pub verified: bool,
}

pub fn certify_five_curve() -> Result<FiveCurveCertificate> {
    let plane = limit_plane(&five_curve_family()?)?;
    let mono = |e: [u32; 5]| Monomial(e.to_vec());
    // exponents over (x, y, z, u, v)
    let allowed = [
        mono([2, 0, 0, 1, 0]),
        mono([2, 0, 1, 0, 0]),
        mono([0, 2, 0, 0, 1]),
        mono([0, 2, 1, 0, 0]),
        mono([1, 1, 1, 0, 0]),
    ];
    let basis = monomials(5, 3);
    let m = coeff_matrix(&plane.basis, &basis)?;
    let rows: Vec<Vec<Rational>> = (0..basis.len())
        .filter(|&k| !allowed.contains(&basis[k]))
        .map(|k| m.row(k).to_vec())
        .collect();
    let ker = Matrix::from_rows(rows)?.kernel()?;
    let c = ker.first().ok_or_else(|| {
        Error::Precondition(String::from("plane meets the target span trivially"))
    })?;
    let mut g = Poly::zero(5, 3);
    for (p, ci) in plane.basis.iter().zip(c) {
        g = g.add(&p.scale(ci))?;
    }
    let [alpha, beta, gamma, delta, eps] = allowed.map(|mm| g.coeff(&mm));
    if [&alpha, &gamma, &eps].iter().any(|v| Scalar::is_zero(*v)) {
        return Err(Error::Precondition(String::from(
            "no invertible substitution of the required shape",
        )));
    }
    let form = |e: [(usize, Rational); 2]| {
        let mut c = vec![int(0); 5];
        for (i, v) in e {
            c[i] = c[i].clone() + v;
        }
        LinearForm::new(c)
    };
    let zero = int(0);
    let substitution = vec![
        form([(0, int(1)), (0, zero.clone())]),
        form([(1, int(1)), (1, zero.clone())]),
        form([(2, eps), (2, zero)]),
        form([(3, alpha), (2, beta)]),
        form([(4, gamma), (2, delta)]),
    ];
    let phi = target_from(
        5,
        3,
        &[&[2, 0, 0, 1, 0], &[0, 2, 0, 0, 1], &[1, 1, 1, 0, 0]],
    )?;
    let member = phi.substitute(&substitution)?;
    let verified = member == g && contains(&plane, &member)?;
    Ok(FiveCurveCertificate {
        plane,
        substitution,
        member,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_examples() {
        let f = monomial_family(&[1], 3, None).unwrap();
        assert_eq!(f.len(), 2);
        let p = limit_plane(&f).unwrap();
        assert!(same_span(&p.basis, &expected_monomial_span(&[1], 3)).unwrap());
        let f11 = monomial_family(&[1, 1], 3, None).unwrap();
        let p11 = limit_plane(&f11).unwrap();
        assert!(same_span(&p11.basis, &expected_monomial_span(&[1, 1], 3)).unwrap());
        assert_eq!(p11.vanishing_order, 6);
        assert!(!contains(&p, &Poly::monomial(&[0, 3], int(1))).unwrap());
    }

    #[test]
    fn repeated_lambda_rejected() {
        let t = vec![vec![int(0), int(1), int(1)]];
        assert!(monomial_family(&[2], 4, Some(&t)).is_err());
    }

    #[test]
    fn xyz_row() {
        let row = normal_form_row("r4.xyz", 4).unwrap();
        let c = certify_row(&row).unwrap();
        assert!(c.exact_member);
    }

    #[test]
    fn five_curves() {
        let c = certify_five_curve().unwrap();
        assert!(c.verified);
        assert_eq!(c.plane.dimension, 5);
    }
}
