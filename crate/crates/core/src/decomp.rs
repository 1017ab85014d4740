//! Waring decompositions φ = Σ cᵢ ηᵢ^d: verification, the product identity
//! and a catalog of explicit identities.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::parse::{names_from_list, parse_poly, to_rational};
use crate::poly::{monomials, power_of_linear, LinearForm, Monomial, Poly};
use crate::scalar::{factorial, rat, BigComplex, BigFloat, GaussianRational, Rational, Scalar};

/// Σ cᵢ ηᵢ^d with explicit coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F: Scalar> {
    pub degree: u32,
    pub terms: Vec<(F, LinearForm<F>)>,
}

impl<F: Scalar> Decomposition<F> {
    pub fn new(degree: u32, terms: Vec<(F, LinearForm<F>)>) -> Result<Self> {
        if terms.iter().any(|(_, l)| l.is_zero()) {
            return Err(Error::Precondition(String::from(
                "zero linear form in a decomposition",
            )));
        }
        let n = terms.first().map_or(0, |(_, l)| l.nvars());
        if terms.iter().any(|(_, l)| l.nvars() != n) {
            return Err(Error::Mismatch(String::from(
                "linear forms in different variable counts",
            )));
        }
        Ok(Decomposition { degree, terms })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.terms.first().map_or(0, |(_, l)| l.nvars())
    }

    pub fn expand(&self) -> Result<Poly<F>> {
        let mut acc = Poly::zero(self.nvars(), self.degree);
        for (c, l) in &self.terms {
            acc = acc.add(&power_of_linear(l, self.degree).scale(c))?;
        }
        Ok(acc)
    }

    pub fn extend(&mut self, other: Decomposition<F>) {
        self.terms.extend(other.terms);
    }

    pub fn scale(&self, a: &F) -> Self {
        Decomposition {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(c, l)| (c.clone() * a.clone(), l.clone()))
                .collect(),
        }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Decomposition<G> {
        Decomposition {
            degree: self.degree,
            terms: self.terms.iter().map(|(c, l)| (f(c), l.map(&f))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    ExactMatch,
    ApproxMatch { max_residual: BigFloat },
    Mismatch { witness: Monomial, residual: String },
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        !matches!(self, Verdict::Mismatch { .. })
    }
}

/// Compare Σ cᵢηᵢ^d with the target: exactly over exact fields, coefficientwise
/// within `tol` otherwise.
pub fn verify<F: Scalar>(
    target: &Poly<F>,
    dec: &Decomposition<F>,
    tol: Option<&BigFloat>,
) -> Result<Verdict> {
    if target.degree() != dec.degree {
        return Err(Error::Mismatch(format!(
            "target degree {} vs decomposition degree {}",
            target.degree(),
            dec.degree
        )));
    }
    if !dec.is_empty() && target.nvars() != dec.nvars() {
        return Err(Error::Mismatch(format!(
            "target has {} variables, forms have {}",
            target.nvars(),
            dec.nvars()
        )));
    }
    let sum = if dec.is_empty() {
        Poly::zero(target.nvars(), target.degree())
    } else {
        dec.expand()?
    };
    let diff = sum.sub(target)?;
    if F::EXACT {
        return Ok(match diff.leading() {
            None => Verdict::ExactMatch,
            Some((m, c)) => Verdict::Mismatch {
                witness: m.clone(),
                residual: c.to_string(),
            },
        });
    }
    let tol = tol.ok_or_else(|| {
        Error::Precondition(String::from("tolerance required for approximate fields"))
    })?;
    let mut worst: Option<(Monomial, BigFloat)> = None;
    for (m, c) in diff.terms() {
        let r = c.magnitude().ok_or(Error::ExactFieldRequired)?;
        if worst
            .as_ref()
            .is_none_or(|(_, w)| r.cmp_value(w) == Ordering::Greater)
        {
            worst = Some((m.clone(), r));
        }
    }
    Ok(match worst {
        None => Verdict::ApproxMatch {
            max_residual: BigFloat::zero_prec(64),
        },
        Some((m, r)) if r.cmp_value(tol) == Ordering::Greater => Verdict::Mismatch {
            witness: m,
            residual: r.to_decimal(6),
        },
        Some((_, r)) => Verdict::ApproxMatch { max_residual: r },
    })
}

/// Coefficients cᵢ with Σ cᵢ lᵢ^d = target, if any exist.
pub fn solve_power_coefficients<F: Scalar>(
    target: &Poly<F>,
    forms: &[LinearForm<F>],
) -> Result<Option<Vec<F>>> {
    let basis = monomials(target.nvars(), target.degree());
    let cols: Vec<Vec<F>> = forms
        .iter()
        .map(|l| power_of_linear(l, target.degree()).coeff_vector(&basis))
        .collect();
    let m = Matrix::from_cols(&cols)?;
    m.solve(&target.coeff_vector(&basis))
}

/// x₁⋯xₙ = 1/(2^{n−1} n!) Σ_{ε ∈ {±1}^{n−1}} ε₁⋯ε_{n−1} (x₁ + ε₁x₂ + ⋯ + ε_{n−1}xₙ)ⁿ.
pub fn product_decomposition(n: u32) -> Result<Decomposition<Rational>> {
    if !(1..=8).contains(&n) {
        return Err(Error::LimitExceeded(format!(
            "product identity supported for 1 ≤ n ≤ 8, got {n}"
        )));
    }
    let k = n as usize;
    let scale = Rational::new(
        1.into(),
        factorial(n) * (num_bigint::BigInt::from(1u64 << (k - 1))),
    );
    let mut terms = Vec::with_capacity(1 << (k - 1));
    for bits in 0u32..(1 << (k - 1)) {
        let eps: Vec<i64> = (0..k - 1)
            .map(|i| if bits >> (k - 2 - i) & 1 == 1 { -1 } else { 1 })
            .collect();
        let sign: i64 = eps.iter().product();
        let mut c = vec![rat(1, 1)];
        c.extend(eps.iter().map(|&e| rat(e, 1)));
        terms.push((scale.clone() * rat(sign, 1), LinearForm::new(c)));
    }
    Decomposition::new(n, terms)
}

/// c·a²b = c/6 [(a+b)³ − (a−b)³ − 2b³].
pub fn a2b_terms<F: Scalar>(
    c: &F,
    a: &LinearForm<F>,
    b: &LinearForm<F>,
) -> Vec<(F, LinearForm<F>)> {
    let sixth = c.clone() * F::from_rational(&rat(1, 6));
    let plus = LinearForm::new(
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.clone() + y.clone())
            .collect(),
    );
    let minus = LinearForm::new(
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.clone() - y.clone())
            .collect(),
    );
    vec![
        (sixth.clone(), plus),
        (-sixth.clone(), minus),
        (-(sixth * F::from_i64(2)), b.clone()),
    ]
}

/// c·uv(u+v) = c/(3√3 i) [(ωu − v)³ − (ω²u − v)³].
pub fn uv_sum_terms(
    c: &BigComplex,
    u: &LinearForm<BigComplex>,
    v: &LinearForm<BigComplex>,
    prec: u32,
) -> Result<Vec<(BigComplex, LinearForm<BigComplex>)>> {
    let k = Consts::new(prec);
    let w = k.omega();
    let w2 = w.clone() * w.clone();
    let denom = k.q(3, 1) * k.sqrt(3)? * k.i();
    let coeff = c.clone() * denom.inv()?;
    let comb = |s: &BigComplex| {
        LinearForm::new(
            u.coeffs
                .iter()
                .zip(&v.coeffs)
                .map(|(x, y)| s.clone() * x.clone() - y.clone())
                .collect(),
        )
    };
    Ok(vec![(coeff.clone(), comb(&w)), (-coeff, comb(&w2))])
}

/// Algebraic constants at a fixed precision.
pub struct Consts {
    pub prec: u32,
}

impl Consts {
    pub fn new(prec: u32) -> Self {
        Consts { prec }
    }
    pub fn q(&self, n: i64, d: i64) -> BigComplex {
        BigComplex::from_rational_prec(&rat(n, d), self.prec)
    }
    pub fn i(&self) -> BigComplex {
        BigComplex::i(self.prec)
    }
    pub fn omega(&self) -> BigComplex {
        BigComplex::omega(self.prec)
    }
    /// Real positive n-th root of a positive rational.
    pub fn root(&self, q: Rational, n: u32) -> Result<BigComplex> {
        Ok(BigComplex::real(
            BigFloat::from_rational(&q, self.prec).nth_root(n)?,
        ))
    }
    pub fn sqrt(&self, k: i64) -> Result<BigComplex> {
        self.root(rat(k, 1), 2)
    }
    pub fn form(&self, c: Vec<BigComplex>) -> LinearForm<BigComplex> {
        LinearForm::new(c)
    }
}

/// A decomposition over one of the supported fields.
#[derive(Clone, Debug)]
pub enum FieldDecomposition {
    Rational {
        target: Poly<Rational>,
        dec: Decomposition<Rational>,
    },
    Gaussian {
        target: Poly<GaussianRational>,
        dec: Decomposition<GaussianRational>,
    },
    Complex {
        target: Poly<BigComplex>,
        dec: Decomposition<BigComplex>,
    },
}

impl FieldDecomposition {
    pub fn len(&self) -> usize {
        match self {
            FieldDecomposition::Rational { dec, .. } => dec.len(),
            FieldDecomposition::Gaussian { dec, .. } => dec.len(),
            FieldDecomposition::Complex { dec, .. } => dec.len(),
        }
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    pub fn field_name(&self) -> &'static str {
        match self {
            FieldDecomposition::Rational { .. } => "rational",
            FieldDecomposition::Gaussian { .. } => "gaussian-rational",
            FieldDecomposition::Complex { .. } => "complex",
        }
    }
    pub fn verify(&self, tol: &BigFloat) -> Result<Verdict> {
        match self {
            FieldDecomposition::Rational { target, dec } => verify(target, dec, None),
            FieldDecomposition::Gaussian { target, dec } => verify(target, dec, None),
            FieldDecomposition::Complex { target, dec } => verify(target, dec, Some(tol)),
        }
    }
}

/// One identity with the rank data it supports.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub names: Vec<String>,
    /// Target as text; absent when a coefficient is irrational.
    pub target_text: Option<String>,
    pub data: FieldDecomposition,
    /// Known rank range (lower, upper).
    pub rank: (u64, u64),
    pub border_rank: Option<(u64, u64)>,
    /// Set when the stored identity differs from the printed source.
    pub correction: Option<&'static str>,
    /// Constants obtained by solving a linear system rather than copied.
    pub solved: bool,
}

pub const CATALOG_IDS: &[&str] = &[
    "cubic.triple_line",
    "cubic.three_lines",
    "cubic.double_line",
    "cubic.fermat_type",
    "cubic.smooth_elliptic",
    "cubic.cusp",
    "cubic.triangle",
    "cubic.conic_transversal",
    "cubic.a_family",
    "cubic.a_family_singular",
    "cubic.conic_tangent",
    "xyz_sum.m1",
    "xyz_sum.m2",
    "xyz_sum.m3",
    "lq.m2",
    "lq.m3",
    "x2u_y2v_xyz",
    "product.n4",
];

fn xyz_names() -> Vec<String> {
    names_from_list("x,y,z")
}

fn rational_target(text: &str, names: &[String]) -> Result<Poly<Rational>> {
    let p = parse_poly(text, Some(names), None)?;
    to_rational(&p.poly).ok_or_else(|| Error::Parse(String::from("target is not rational")))
}

fn q_form(c: &[i64]) -> LinearForm<Rational> {
    LinearForm::new(c.iter().map(|&x| rat(x, 1)).collect())
}

fn to_complex(p: &Poly<Rational>, prec: u32) -> Poly<BigComplex> {
    p.map_coeffs(|q| BigComplex::from_rational_prec(q, prec))
}

fn c_form(k: &Consts, c: &[i64]) -> LinearForm<BigComplex> {
    k.form(c.iter().map(|&x| k.q(x, 1)).collect())
}

struct EntryMeta {
    id: &'static str,
    description: &'static str,
    names: Vec<String>,
    target_text: Option<String>,
    rank: (u64, u64),
    border: Option<(u64, u64)>,
    correction: Option<&'static str>,
    solved: bool,
}

fn entry(s: EntryMeta, data: FieldDecomposition) -> CatalogEntry {
    CatalogEntry {
        id: s.id,
        description: s.description,
        names: s.names,
        target_text: s.target_text,
        data,
        rank: s.rank,
        border_rank: s.border,
        correction: s.correction,
        solved: s.solved,
    }
}

fn rational_entry(
    s: EntryMeta,
    terms: Vec<(Rational, LinearForm<Rational>)>,
) -> Result<CatalogEntry> {
    let text = s.target_text.clone().expect("rational entries carry text");
    let target = rational_target(&text, &s.names)?;
    let dec = Decomposition::new(target.degree(), terms)?;
    Ok(entry(s, FieldDecomposition::Rational { target, dec }))
}

fn complex_entry(
    s: EntryMeta,
    prec: u32,
    terms: Vec<(BigComplex, LinearForm<BigComplex>)>,
) -> Result<CatalogEntry> {
    let text = s.target_text.clone().expect("text target");
    let target = to_complex(&rational_target(&text, &s.names)?, prec);
    let dec = Decomposition::new(target.degree(), terms)?;
    Ok(entry(s, FieldDecomposition::Complex { target, dec }))
}

fn entry_meta(
    id: &'static str,
    description: &'static str,
    names: Vec<String>,
    text: &str,
    rank: (u64, u64),
    border: Option<(u64, u64)>,
) -> EntryMeta {
    EntryMeta {
        id,
        description,
        names,
        target_text: Some(text.to_string()),
        rank,
        border,
        correction: None,
        solved: false,
    }
}

/// Look up a catalog entry; complex entries are built at `prec` bits.
pub fn catalog(id: &str, prec: u32) -> Result<CatalogEntry> {
    let k = Consts::new(prec);
    match id {
        "cubic.triple_line" => rational_entry(
            entry_meta(
                "cubic.triple_line",
                "triple line",
                xyz_names(),
                "x^3",
                (1, 1),
                Some((1, 1)),
            ),
            vec![(rat(1, 1), q_form(&[1, 0, 0]))],
        ),
        "cubic.three_lines" => {
            let s = entry_meta(
                "cubic.three_lines",
                "three concurrent lines",
                xyz_names(),
                "x^2*y + x*y^2",
                (2, 2),
                Some((2, 2)),
            );
            let terms = uv_sum_terms(
                &k.q(1, 1),
                &c_form(&k, &[1, 0, 0]),
                &c_form(&k, &[0, 1, 0]),
                prec,
            )?;
            complex_entry(s, prec, terms)
        }
        "cubic.double_line" => {
            let s = entry_meta(
                "cubic.double_line",
                "double line + line",
                xyz_names(),
                "x^2*y",
                (3, 3),
                Some((2, 2)),
            );
            rational_entry(
                s,
                a2b_terms(&rat(1, 1), &q_form(&[1, 0, 0]), &q_form(&[0, 1, 0])),
            )
        }
        "cubic.fermat_type" => {
            // 2ω + 1 = i√3, so the two cubes are (±i√3 z − y)³
            let s = entry_meta(
                "cubic.fermat_type",
                "irreducible, rank 3",
                xyz_names(),
                "y^2*z - x^3 - z^3",
                (3, 3),
                Some((3, 3)),
            );
            let w = k.omega();
            let w2 = w.clone() * w.clone();
            let c = (k.q(6, 1) * k.sqrt(3)? * k.i()).inv()?;
            let f1 = k.form(vec![k.q(0, 1), k.q(-1, 1), k.q(2, 1) * w + k.q(1, 1)]);
            let f2 = k.form(vec![k.q(0, 1), k.q(-1, 1), k.q(2, 1) * w2 + k.q(1, 1)]);
            let terms = vec![
                (c.clone(), f1),
                (-c, f2),
                (k.q(-1, 1), c_form(&k, &[1, 0, 0])),
            ];
            complex_entry(s, prec, terms)
        }
        "cubic.smooth_elliptic" => {
            let s = entry_meta(
                "cubic.smooth_elliptic",
                "irreducible, smooth",
                xyz_names(),
                "y^2*z - x^3 - x*z^2",
                (4, 4),
                Some((4, 4)),
            );
            let r3 = k.sqrt(3)?;
            let r34 = k.root(rat(3, 1), 4)?;
            let i = k.i();
            let c = -(k.q(12, 1) * r3.clone()).inv()?;
            let one = k.q(1, 1);
            let f = |b: BigComplex, z: BigComplex| k.form(vec![r3.clone(), b, z]);
            let terms = vec![
                (c.clone(), f(r34.clone() * i.clone(), one.clone())),
                (c.clone(), f(-(r34.clone() * i), one.clone())),
                (c.clone(), f(r34.clone(), -one.clone())),
                (c, f(-r34, -one)),
            ];
            complex_entry(s, prec, terms)
        }
        "cubic.cusp" => {
            let mut s = entry_meta(
                "cubic.cusp",
                "cusp",
                xyz_names(),
                "y^2*z - x^3",
                (4, 4),
                Some((3, 3)),
            );
            s.correction = Some("the (y−z)³ summand enters with a minus sign");
            let mut terms = a2b_terms(&rat(1, 1), &q_form(&[0, 1, 0]), &q_form(&[0, 0, 1]));
            terms.push((rat(-1, 1), q_form(&[1, 0, 0])));
            rational_entry(s, terms)
        }
        "cubic.triangle" => {
            let s = entry_meta(
                "cubic.triangle",
                "triangle",
                xyz_names(),
                "x*y*z",
                (4, 4),
                Some((4, 4)),
            );
            let c = rat(1, 24);
            rational_entry(
                s,
                vec![
                    (c.clone(), q_form(&[1, 1, 1])),
                    (-c.clone(), q_form(&[-1, 1, 1])),
                    (-c.clone(), q_form(&[1, -1, 1])),
                    (-c, q_form(&[1, 1, -1])),
                ],
            )
        }
        "cubic.conic_transversal" => {
            let mut s = entry_meta(
                "cubic.conic_transversal",
                "conic + transversal line",
                xyz_names(),
                "x^3 + x*y*z",
                (4, 4),
                Some((4, 4)),
            );
            s.correction = Some("all four summands are cubes; the coefficients are solved from the four stated forms");
            s.solved = true;
            let forms = vec![
                q_form(&[4, 1, 1]),
                q_form(&[4, -1, -1]),
                q_form(&[2, 1, -1]),
                q_form(&[2, -1, 1]),
            ];
            let target = rational_target("x^3 + x*y*z", &s.names)?;
            let coeffs = solve_power_coefficients(&target, &forms)?.ok_or_else(|| {
                Error::Precondition(String::from("no cube combination of the stated forms"))
            })?;
            rational_entry(s, coeffs.into_iter().zip(forms).collect())
        }
        "cubic.a_family" | "cubic.a_family_singular" => a_family(id, &k),
        "cubic.conic_tangent" => {
            let s = entry_meta(
                "cubic.conic_tangent",
                "conic + tangent line",
                xyz_names(),
                "x^2*y + y^2*z",
                (5, 5),
                Some((3, 3)),
            );
            // (x−y)(x+y)y = ½·uv(u+v) with u = 2y, v = x − y
            let mut terms = uv_sum_terms(
                &k.q(1, 2),
                &c_form(&k, &[0, 2, 0]),
                &c_form(&k, &[1, -1, 0]),
                prec,
            )?;
            let sixth = k.q(1, 6);
            terms.push((sixth.clone(), c_form(&k, &[0, 2, 1])));
            terms.push((sixth.clone(), c_form(&k, &[0, 0, 1])));
            terms.push((-(sixth * k.q(2, 1)), c_form(&k, &[0, 1, 1])));
            complex_entry(s, prec, terms)
        }
        "xyz_sum.m1" => xyz_sum(1),
        "xyz_sum.m2" => xyz_sum(2),
        "xyz_sum.m3" => xyz_sum(3),
        "lq.m2" => lq(2),
        "lq.m3" => lq(3),
        "x2u_y2v_xyz" => rank_nine(&k),
        "product.n4" => {
            let names = names_from_list("x1,x2,x3,x4");
            let s = entry_meta(
                "product.n4",
                "product of four variables",
                names,
                "x1*x2*x3*x4",
                (8, 8),
                Some((6, 8)),
            );
            let dec = product_decomposition(4)?;
            rational_entry(s, dec.terms)
        }
        other => Err(Error::UnknownEntry(other.to_string())),
    }
}

/// y²z − x³ − axz² − z³ = z(y−z)(y+z) − x(x − √a i z)(x + √a i z); each product
/// is ½·uv(u+v) for u + v = 2z or 2x.
fn a_family(id: &str, k: &Consts) -> Result<CatalogEntry> {
    let singular = id == "cubic.a_family_singular";
    let a = if singular {
        // real root of a³ = −27/4
        -k.root(rat(27, 4), 3)?
    } else {
        k.q(1, 1)
    };
    let sqrt_a = if singular {
        k.root(rat(27, 4), 6)? * k.i()
    } else {
        k.q(1, 1)
    };
    let names = xyz_names();
    let z = |c: i64| k.q(c, 1);
    let mut terms = uv_sum_terms(
        &k.q(1, 2),
        &k.form(vec![z(0), z(0), z(2)]),
        &k.form(vec![z(0), z(1), z(-1)]),
        k.prec,
    )?;
    let ai = sqrt_a * k.i();
    let u = k.form(vec![z(1), z(0), -ai.clone()]);
    let v = k.form(vec![z(1), z(0), ai]);
    terms.extend(uv_sum_terms(&k.q(-1, 2), &u, &v, k.prec)?);
    let base = rational_target("y^2*z - x^3 - z^3", &names)?;
    let target = to_complex(&base, k.prec).sub(&Poly::monomial(&[1, 0, 2], a))?;
    let (description, text) = if singular {
        ("irreducible, singular (a³ = −27/4)", None)
    } else {
        (
            "irreducible, smooth (a = 1)",
            Some(String::from("y^2*z - x^3 - x*z^2 - z^3")),
        )
    };
    let s = EntryMeta {
        id: if singular {
            "cubic.a_family_singular"
        } else {
            "cubic.a_family"
        },
        description,
        names,
        target_text: text,
        rank: (4, 4),
        border: Some((4, 4)),
        correction: None,
        solved: false,
    };
    let dec = Decomposition::new(3, terms)?;
    Ok(entry(s, FieldDecomposition::Complex { target, dec }))
}

fn xyz_sum(m: usize) -> Result<CatalogEntry> {
    let names: Vec<String> = (1..=m)
        .flat_map(|j| [format!("x{j}"), format!("y{j}"), format!("z{j}")])
        .collect();
    let text: Vec<String> = (1..=m).map(|j| format!("x{j}*y{j}*z{j}")).collect();
    let id = ["xyz_sum.m1", "xyz_sum.m2", "xyz_sum.m3"][m - 1];
    let mm = m as u64;
    let s = entry_meta(
        id,
        "sum of m products x_j y_j z_j",
        names,
        &text.join(" + "),
        (4 * mm, 4 * mm),
        Some((if m == 1 { 4 } else { 3 * mm }, 4 * mm)),
    );
    let mut terms = Vec::new();
    let c = rat(1, 24);
    for j in 0..m {
        for (sign, signs) in [
            (1, [1, 1, 1]),
            (-1, [-1, 1, 1]),
            (-1, [1, -1, 1]),
            (-1, [1, 1, -1]),
        ] {
            let mut f = vec![0i64; 3 * m];
            f[3 * j..3 * j + 3].copy_from_slice(&signs);
            terms.push((c.clone() * rat(sign, 1), q_form(&f)));
        }
    }
    rational_entry(s, terms)
}

/// x Σ yⱼ² = Σ x(yⱼ² − aⱼx²) with aⱼ = −qⱼ²/3, Σ qⱼ² = 0, and
/// x(y² − a x²) = [(qx + y)³ − (−qx + y)³]/(6q).
fn lq(m: usize) -> Result<CatalogEntry> {
    let g = |re: i64, im: i64| GaussianRational::new(rat(re, 1), rat(im, 1));
    let qs: Vec<GaussianRational> = match m {
        2 => vec![g(0, 1), g(1, 0)],
        3 => vec![g(0, 3), g(0, 4), g(5, 0)],
        _ => return Err(Error::UnknownEntry(format!("lq.m{m}"))),
    };
    let mut names = vec![String::from("x")];
    names.extend((1..=m).map(|j| format!("y{j}")));
    let text: Vec<String> = (1..=m).map(|j| format!("x*y{j}^2")).collect();
    let target = parse_poly(&text.join(" + "), Some(&names), None)?.poly;
    let mut terms = Vec::new();
    for (j, q) in qs.iter().enumerate() {
        let c = (q.clone() * GaussianRational::from_i64(6)).inv()?;
        for sign in [1i64, -1] {
            let mut f = vec![GaussianRational::zero(); m + 1];
            f[0] = q.clone() * GaussianRational::from_i64(sign);
            f[j + 1] = GaussianRational::one();
            terms.push((
                c.clone() * GaussianRational::from_i64(sign),
                LinearForm::new(f),
            ));
        }
    }
    let dec = Decomposition::new(3, terms)?;
    let mm = m as u64;
    let s = EntryMeta {
        id: if m == 2 { "lq.m2" } else { "lq.m3" },
        description: "x (y_1^2 + ... + y_m^2)",
        names,
        target_text: Some(text.join(" + ")),
        rank: (2 * mm, 2 * mm),
        border: None,
        correction: Some(
            "a_j = −q_j²/3 with Σ q_j² = 0 so that every constant is Gaussian-rational",
        ),
        solved: false,
    };
    Ok(entry(s, FieldDecomposition::Gaussian { target, dec }))
}

/// Nine cubes for x²u + y²v + xyz; the printed expression equals
/// x²u + y²v + 6·2^{1/3} xyz, so z is rescaled by 1/(6·2^{1/3}).
fn rank_nine(k: &Consts) -> Result<CatalogEntry> {
    let names = names_from_list("x,y,z,u,v");
    let c2 = k.root(rat(2, 1), 3)?;
    let c4 = c2.clone() * c2.clone();
    let zs = (k.q(6, 1) * c2.clone()).inv()?;
    let z = |c: i64| k.q(c, 1);
    // z' = zs·z, so 2^{1/3} z' = z/6 and 3·2^{1/3} z' = z/2
    let f1 = k.form(vec![z(1), z(1), k.q(1, 6), z(0), z(0)]);
    let f2 = k.form(vec![c4.clone(), z(0), zs.clone(), z(0), z(0)]);
    let f3 = k.form(vec![z(0), c4, zs, z(0), z(0)]);
    let mut terms = vec![(z(1), f1), (z(-1), f2), (z(-1), f3)];
    // −x²(−u − 3x + 3y − z/2) = x²·(u + 3x − 3y + z/2)
    let xa = c_form(k, &[1, 0, 0, 0, 0]);
    let b1 = k.form(vec![z(3), z(-3), k.q(1, 2), z(1), z(0)]);
    terms.extend(a2b_terms(&z(1), &xa, &b1));
    let ya = c_form(k, &[0, 1, 0, 0, 0]);
    let b2 = k.form(vec![z(-3), z(3), k.q(1, 2), z(0), z(1)]);
    terms.extend(a2b_terms(&z(1), &ya, &b2));
    let s = EntryMeta {
        id: "x2u_y2v_xyz",
        description: "x^2 u + y^2 v + x y z",
        names,
        target_text: Some(String::from("x^2*u + y^2*v + x*y*z")),
        rank: (8, 9),
        border: Some((5, 5)),
        correction: Some(
            "z rescaled by 1/(6·2^{1/3}); a²b summands expanded into three cubes each",
        ),
        solved: false,
    };
    complex_entry(s, k.prec, terms)
}
