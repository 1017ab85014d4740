//! Ternary cubics: Hessian, the Aronhold invariant S, and the classification
//! of plane cubics by rank and border rank.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::binary::sylvester_rank;
use crate::error::{Error, Result};
use crate::flatten::{reduce_span, span_dim};
use crate::linalg::Matrix;
use crate::poly::{monomials, multinomial, LinearForm, Monomial, Poly};
use crate::scalar::{BigComplex, BigFloat, Rational, Scalar};

/// The rows of the plane cubic table, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicRow {
    TripleLine,
    ConcurrentLines,
    DoubleLinePlusLine,
    FermatType,
    SmoothHarmonic,
    Cusp,
    Triangle,
    ConicTransversal,
    SmoothAFamily,
    SingularAFamily,
    ConicTangent,
}

impl CubicRow {
    pub const ALL: [CubicRow; 11] = [
        CubicRow::TripleLine,
        CubicRow::ConcurrentLines,
        CubicRow::DoubleLinePlusLine,
        CubicRow::FermatType,
        CubicRow::SmoothHarmonic,
        CubicRow::Cusp,
        CubicRow::Triangle,
        CubicRow::ConicTransversal,
        CubicRow::SmoothAFamily,
        CubicRow::SingularAFamily,
        CubicRow::ConicTangent,
    ];

    pub fn description(self) -> &'static str {
        match self {
            CubicRow::TripleLine => "triple line",
            CubicRow::ConcurrentLines => "three concurrent lines",
            CubicRow::DoubleLinePlusLine => "double line + line",
            CubicRow::FermatType => "irreducible",
            CubicRow::SmoothHarmonic => "irreducible",
            CubicRow::Cusp => "cusp",
            CubicRow::Triangle => "triangle",
            CubicRow::ConicTransversal => "conic + transversal line",
            CubicRow::SmoothAFamily => "irreducible, smooth (a^3 != -27/4)",
            CubicRow::SingularAFamily => "irreducible, singular (a^3 = -27/4)",
            CubicRow::ConicTangent => "conic + tangent line",
        }
    }

    /// Normal form in x, y, z; the a-family rows keep the symbol a.
    pub fn normal_form(self) -> &'static str {
        match self {
            CubicRow::TripleLine => "x^3",
            CubicRow::ConcurrentLines => "x*y*(x+y)",
            CubicRow::DoubleLinePlusLine => "x^2*y",
            CubicRow::FermatType => "y^2*z - x^3 - z^3",
            CubicRow::SmoothHarmonic => "y^2*z - x^3 - x*z^2",
            CubicRow::Cusp => "y^2*z - x^3",
            CubicRow::Triangle => "x*y*z",
            CubicRow::ConicTransversal => "x*(x^2+y*z)",
            CubicRow::SmoothAFamily | CubicRow::SingularAFamily => "y^2*z - x^3 - a*x*z^2 - z^3",
            CubicRow::ConicTangent => "y*(x^2+y*z)",
        }
    }

    /// (R, border rank).
    pub fn ranks(self) -> (usize, usize) {
        match self {
            CubicRow::TripleLine => (1, 1),
            CubicRow::ConcurrentLines => (2, 2),
            CubicRow::DoubleLinePlusLine => (3, 2),
            CubicRow::FermatType => (3, 3),
            CubicRow::Cusp => (4, 3),
            CubicRow::ConicTangent => (5, 3),
            _ => (4, 4),
        }
    }

    /// A rational instance: a = 1 for the smooth family; `None` for the
    /// singular family, which needs an irrational a.
    pub fn instance(self) -> Option<Poly<Rational>> {
        let p = |terms: &[([u32; 3], i64)]| {
            Poly::from_terms(
                3,
                3,
                terms
                    .iter()
                    .map(|(e, c)| (Monomial(e.to_vec()), crate::scalar::int(*c))),
            )
            .ok()
        };
        match self {
            CubicRow::TripleLine => p(&[([3, 0, 0], 1)]),
            CubicRow::ConcurrentLines => p(&[([2, 1, 0], 1), ([1, 2, 0], 1)]),
            CubicRow::DoubleLinePlusLine => p(&[([2, 1, 0], 1)]),
            CubicRow::FermatType => p(&[([0, 2, 1], 1), ([3, 0, 0], -1), ([0, 0, 3], -1)]),
            CubicRow::SmoothHarmonic => p(&[([0, 2, 1], 1), ([3, 0, 0], -1), ([1, 0, 2], -1)]),
            CubicRow::Cusp => p(&[([0, 2, 1], 1), ([3, 0, 0], -1)]),
            CubicRow::Triangle => p(&[([1, 1, 1], 1)]),
            CubicRow::ConicTransversal => p(&[([3, 0, 0], 1), ([1, 1, 1], 1)]),
            CubicRow::SmoothAFamily => p(&[
                ([0, 2, 1], 1),
                ([3, 0, 0], -1),
                ([1, 0, 2], -1),
                ([0, 0, 3], -1),
            ]),
            CubicRow::SingularAFamily => None,
            CubicRow::ConicTangent => p(&[([2, 1, 0], 1), ([0, 2, 1], 1)]),
        }
    }
}

/// y²z − x³ − axz² − z³ with a = −3/∛4, so a³ = −27/4, at the given precision.
pub fn singular_a_family(prec: u32) -> Result<Poly<BigComplex>> {
    let c = |q: i64| BigComplex::from_rational_prec(&crate::scalar::int(q), prec);
    let four = BigFloat::from_rational(&crate::scalar::int(4), prec);
    let a = BigComplex::real(
        BigFloat::from_rational(&crate::scalar::int(-3), prec).div(&four.nth_root(3)?)?,
    );
    let terms = vec![
        (Monomial(vec![0, 2, 1]), c(1)),
        (Monomial(vec![3, 0, 0]), c(-1)),
        (Monomial(vec![1, 0, 2]), -a),
        (Monomial(vec![0, 0, 3]), c(-1)),
    ];
    Poly::from_terms(3, 3, terms)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicClass {
    pub row: CubicRow,
    pub rank: usize,
    pub border_rank: usize,
    /// Span dimension of the Hessian; 0 when the Hessian vanishes.
    pub hessian_span: usize,
    pub aronhold_zero: bool,
    /// False when the row label is a descriptive refinement inside the
    /// (4, 4) stratum; rank and border rank are exact either way.
    pub row_certified: bool,
}

fn check_ternary_cubic<F: Scalar>(f: &Poly<F>) -> Result<()> {
    if f.nvars() != 3 || f.degree() != 3 {
        return Err(Error::Precondition(format!(
            "ternary cubic required, got {} variables in degree {}",
            f.nvars(),
            f.degree()
        )));
    }
    Ok(())
}

/// Determinant of the matrix of second partials.
pub fn hessian<F: Scalar>(f: &Poly<F>) -> Result<Poly<F>> {
    check_ternary_cubic(f)?;
    let mut h: Vec<Vec<Poly<F>>> = Vec::with_capacity(3);
    for i in 0..3 {
        let fi = f.diff(i)?;
        h.push((0..3).map(|j| fi.diff(j)).collect::<Result<Vec<_>>>()?);
    }
    let minor = |a: usize, b: usize, c: usize, d: usize| -> Result<Poly<F>> {
        h[1][a].mul(&h[2][b])?.sub(&h[1][c].mul(&h[2][d])?)
    };
    let t0 = h[0][0].mul(&minor(1, 2, 2, 1)?)?;
    let t1 = h[0][1].mul(&minor(0, 2, 2, 0)?)?;
    let t2 = h[0][2].mul(&minor(0, 1, 1, 0)?)?;
    t0.sub(&t1)?.add(&t2)
}

/// Symmetric tensor entries T_{ijk} with f = Σ T_{ijk} x_i x_j x_k.
fn tensor<F: Scalar>(f: &Poly<F>) -> Result<[[[F; 3]; 3]; 3]> {
    let mut t: [[[F; 3]; 3]; 3] =
        core::array::from_fn(|_| core::array::from_fn(|_| core::array::from_fn(|_| F::zero())));
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut e = vec![0u32; 3];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                let m = Monomial(e);
                let mult = i64::try_from(multinomial(&m)).unwrap_or(1);
                t[i][j][k] = f.coeff(&m).checked_div(&F::from_i64(mult))?;
            }
        }
    }
    Ok(t)
}

const PERMS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
    ([1, 0, 2], -1),
];

/// The degree-4 Aronhold invariant, as the contraction (abc)(abd)(acd)(bcd)
/// of four copies of the coefficient tensor.
pub fn aronhold<F: Scalar>(f: &Poly<F>) -> Result<F> {
    check_ternary_cubic(f)?;
    let t = tensor(f)?;
    let mut acc = F::zero();
    for (p1, s1) in PERMS {
        for (p2, s2) in PERMS {
            for (p3, s3) in PERMS {
                for (p4, s4) in PERMS {
                    let a = &t[p1[0]][p2[0]][p3[0]];
                    let b = &t[p1[1]][p2[1]][p4[0]];
                    let c = &t[p1[2]][p3[1]][p4[1]];
                    let d = &t[p2[2]][p3[2]][p4[2]];
                    let term = a.clone() * b.clone() * c.clone() * d.clone();
                    if (s1 * s2 * s3 * s4) > 0 {
                        acc = acc + term;
                    } else {
                        acc = acc - term;
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// A degree-6 invariant: the derivative at λ = 0 of S(f + λ·Hess f).
/// It vanishes on smooth cubics of j-invariant 1728.
pub fn sextic_invariant<F: Scalar>(f: &Poly<F>) -> Result<F> {
    let h = hessian(f)?;
    let s = |l: i64| -> Result<F> { aronhold(&f.add(&h.scale(&F::from_i64(l)))?) };
    // five-point stencil, exact on quartics in λ
    let d1 = s(1)? - s(-1)?;
    let d2 = s(2)? - s(-2)?;
    (F::from_i64(8) * d1 - d2).checked_div(&F::from_i64(12))
}

/// A nonzero multiple of the discriminant: the 6×6 determinant of the
/// quadrics f_x, f_y, f_z, H_x, H_y, H_z.
pub fn discriminant_multiple<F: Scalar>(f: &Poly<F>) -> Result<F> {
    let h = hessian(f)?;
    let basis = monomials(3, 2);
    let mut rows = Vec::with_capacity(6);
    for p in [f, &h] {
        for i in 0..3 {
            let q = p.diff(i)?;
            rows.push(if q.is_zero() {
                vec![F::zero(); 6]
            } else {
                q.coeff_vector(&basis)
            });
        }
    }
    Matrix::from_rows(rows)?.determinant()
}

fn univariate_in_z(f: &Poly<Rational>, y: &Rational) -> Vec<Rational> {
    let mut c = vec![<Rational as Scalar>::zero(); 4];
    for (m, a) in f.terms() {
        c[m.0[2] as usize] += a.clone() * Scalar::pow(y, m.0[1]);
    }
    c
}

fn resultant_cubics(p: &[Rational], q: &[Rational]) -> Result<Rational> {
    let mut rows = Vec::with_capacity(6);
    for (poly, shifts) in [(p, 3), (q, 3)] {
        for s in 0..shifts {
            let mut r = vec![<Rational as Scalar>::zero(); 6];
            for k in 0..4 {
                r[s + 3 - k] = poly[k].clone();
            }
            rows.push(r);
        }
    }
    Matrix::from_rows(rows)?.determinant()
}

/// Whether two ternary cubics share a factor.
pub fn share_factor(f: &Poly<Rational>, g: &Poly<Rational>) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Ok(true);
    }
    let r = |n: i64| crate::scalar::int(n);
    // move to coordinates where both have a nonzero z³ coefficient
    for a in 0..4i64 {
        for b in 0..4i64 {
            let pt = [r(a), r(b), r(1)];
            if Scalar::is_zero(&f.eval(&pt)) || Scalar::is_zero(&g.eval(&pt)) {
                continue;
            }
            let sub = vec![
                LinearForm::new(vec![r(1), r(0), r(a)]),
                LinearForm::new(vec![r(0), r(1), r(b)]),
                LinearForm::new(vec![r(0), r(0), r(1)]),
            ];
            let (fs, gs) = (f.substitute(&sub)?, g.substitute(&sub)?);
            // Res_z is a binary form of degree 9 in x, y; test it at x = 1 and ten values of y
            for k in 0..10 {
                let res =
                    resultant_cubics(&univariate_in_z(&fs, &r(k)), &univariate_in_z(&gs, &r(k)))?;
                if !Scalar::is_zero(&res) {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
    }
    Err(Error::Precondition(String::from(
        "no admissible coordinate change found",
    )))
}

/// Exact (R, border rank) of a plane cubic over Q.
pub fn classify(f: &Poly<Rational>) -> Result<CubicClass> {
    check_ternary_cubic(f)?;
    if f.is_zero() {
        return Err(Error::Precondition(String::from(
            "the zero cubic has no class",
        )));
    }
    let h = hessian(f)?;
    let hessian_span = if h.is_zero() { 0 } else { span_dim(&h)? };
    let s = aronhold(f)?;
    let aronhold_zero = Scalar::is_zero(&s);
    let class = |row: CubicRow, certified: bool| {
        let (rank, border_rank) = row.ranks();
        CubicClass {
            row,
            rank,
            border_rank,
            hessian_span,
            aronhold_zero,
            row_certified: certified,
        }
    };
    match span_dim(f)? {
        1 => return Ok(class(CubicRow::TripleLine, true)),
        2 => {
            let b = sylvester_rank(&reduce_span(f)?.reduced)?;
            return Ok(class(
                if b.rank == 2 {
                    CubicRow::ConcurrentLines
                } else {
                    CubicRow::DoubleLinePlusLine
                },
                true,
            ));
        }
        _ => {}
    }
    if aronhold_zero {
        return match hessian_span {
            3 => Ok(class(CubicRow::FermatType, true)),
            2 => Ok(class(CubicRow::Cusp, true)),
            1 => Ok(class(CubicRow::ConicTangent, true)),
            k => Err(Error::Precondition(format!(
                "unexpected Hessian span {k} on the border rank 3 stratum"
            ))),
        };
    }
    // (4, 4) stratum: the row label below is descriptive only
    if f.proportional(&h).is_some() {
        return Ok(class(CubicRow::Triangle, false));
    }
    if !Scalar::is_zero(&discriminant_multiple(f)?) {
        let row = if Scalar::is_zero(&sextic_invariant(f)?) {
            CubicRow::SmoothHarmonic
        } else {
            CubicRow::SmoothAFamily
        };
        return Ok(class(row, false));
    }
    if share_factor(f, &h)? {
        return Ok(class(CubicRow::ConicTransversal, false));
    }
    Ok(class(CubicRow::SingularAFamily, false))
}

/// Numeric classification, limited to the Aronhold-nonzero stratum where
/// (R, border rank) = (4, 4) regardless of the row.
pub fn classify_numeric(f: &Poly<BigComplex>, tol: &BigFloat) -> Result<(usize, usize, BigFloat)> {
    let s = aronhold(f)?;
    let m = s.abs();
    if m.cmp_value(tol) != core::cmp::Ordering::Greater {
        return Err(Error::ExactFieldRequired);
    }
    Ok((4, 4, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{names_from_list, parse_rational_poly};
    use crate::scalar::int;

    fn p(s: &str) -> Poly<Rational> {
        parse_rational_poly(s, Some(&names_from_list("x,y,z")), None).unwrap()
    }

    #[test]
    fn hessians() {
        let h = hessian(&p("x^3+y^3+z^3")).unwrap();
        assert!(h.proportional(&p("x*y*z")).is_some());
        let h = hessian(&p("y^2*z - x^3")).unwrap();
        assert_eq!(h, p("24*x*y^2"));
        assert!(hessian(&p("x^2*y+y^2*z"))
            .unwrap()
            .proportional(&p("y^3"))
            .is_some());
    }

    #[test]
    fn aronhold_values() {
        assert_eq!(aronhold(&p("x^3+y^3+z^3")).unwrap(), int(0));
        assert_eq!(aronhold(&p("y*x^2+y^2*z")).unwrap(), int(0));
        assert_eq!(aronhold(&p("x*y*z")).unwrap(), crate::scalar::rat(1, 54));
    }

    #[test]
    fn table_rows() {
        for row in CubicRow::ALL {
            if let Some(f) = row.instance() {
                let c = classify(&f).unwrap();
                assert_eq!((c.rank, c.border_rank), row.ranks(), "{row:?}");
                assert_eq!(c.row, row, "{row:?}");
            }
        }
    }

    #[test]
    fn singular_family_numeric() {
        let f = singular_a_family(256).unwrap();
        let tol = BigFloat::from_rational(&crate::scalar::rat(1, 1_000_000), 256);
        let (r, b, _) = classify_numeric(&f, &tol).unwrap();
        assert_eq!((r, b), (4, 4));
        // the node sits at (x0, 0, 1) with x0 = −3/(2a), the double root of x³ + ax + 1
        let a = -f.coeff(&Monomial(vec![1, 0, 2]));
        let x0 = BigComplex::from_rational_prec(&int(-3), 256)
            .checked_div(&(a * BigComplex::from_rational_prec(&int(2), 256)))
            .unwrap();
        let pt = [
            x0,
            BigComplex::from_rational_prec(&int(0), 256),
            BigComplex::from_rational_prec(&int(1), 256),
        ];
        for i in 0..3 {
            let g = f.diff(i).unwrap().eval(&pt);
            assert!(g.abs().cmp_value(&tol) == core::cmp::Ordering::Less);
        }
    }
}
