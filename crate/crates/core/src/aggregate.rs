//! Every applicable bound source, merged into one rank report.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::any::Any;

use crate::binary::{coordinate_restriction_rank, sylvester_rank};
use crate::bounds::{
    detperm_bounds, monomial_border_bounds, product_bounds, Bound, BoundKind, DetPerm, RankReport,
    BORDER_THREE_OPEN_QUESTION, PRODUCT_FOUR_RANK,
};
use crate::cubic::classify;
use crate::detperm::recognize;
use crate::error::{Error, Result};
use crate::flatten::{flattening_rank, reduce_span};
use crate::parse::to_rational;
use crate::poly::Poly;
use crate::scalar::{binomial, int, GaussianRational, Rational, Scalar};
use crate::strata::{
    reducibility_bounds, sigma_dim_bruteforce, sigma_dim_coordinate, sigma_lower_bound,
    Factorization,
};

/// Largest span dimension for which all coordinate pairs are restricted.
pub const MAX_PAIR_RESTRICTION_N: usize = 10;

fn as_rational<F: Scalar>(f: &Poly<F>) -> Option<Poly<Rational>> {
    let any: &dyn Any = f;
    if let Some(p) = any.downcast_ref::<Poly<Rational>>() {
        return Some(p.clone());
    }
    any.downcast_ref::<Poly<GaussianRational>>()
        .and_then(to_rational)
}

/// Variables of f grouped into classes that share a monomial.
pub fn variable_components<F: Scalar>(f: &Poly<F>) -> Vec<Vec<usize>> {
    let n = f.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for (m, _) in f.terms() {
        let vars: Vec<usize> = (0..n).filter(|&i| m.0[i] > 0).collect();
        for w in vars.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let present = f.support_vars();
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in present {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(i),
            None => groups.push((r, vec![i])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Linear factor visible in coordinates: some variable divides every term.
fn coordinate_factor<F: Scalar>(f: &Poly<F>) -> Factorization {
    let n = f.nvars();
    let min_exp = |i: usize| f.terms().map(|(m, _)| m.0[i]).min().unwrap_or(0);
    let best = (0..n).map(min_exp).max().unwrap_or(0);
    if f.num_terms() == 1 && f.degree() >= 2 {
        // monomials are handled by their own formulas
        return Factorization::Irreducible;
    }
    match best {
        0 => Factorization::Irreducible,
        1 => Factorization::Reducible,
        _ => Factorization::RepeatedFactor,
    }
}

/// m when f ∝ x·(y₁² + ⋯ + y_m²) in its own coordinates, m ≥ 2.
fn linear_times_quadric(f: &Poly<Rational>) -> Option<usize> {
    let n = f.nvars();
    if f.degree() != 3 || n < 3 || f.num_terms() != n - 1 {
        return None;
    }
    for x in 0..n {
        let mut target = Poly::zero(n, 3);
        for y in (0..n).filter(|&y| y != x) {
            let mut e = vec![0u32; n];
            e[x] = 1;
            e[y] = 2;
            target = target.add(&Poly::monomial(&e, int(1))).ok()?;
        }
        if f.proportional(&target).is_some() {
            return Some(n - 1);
        }
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    crate::detperm::permutations(n)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// x²u + y²v + xyz in variables (x, y, z, u, v).
pub fn five_variable_cubic() -> Poly<Rational> {
    let mut f = Poly::zero(5, 3);
    for e in [[2, 0, 0, 1, 0], [0, 2, 0, 0, 1], [1, 1, 1, 0, 0]] {
        f = f.add(&Poly::monomial(&e, int(1))).expect("same space");
    }
    f
}

fn matches_up_to_relabeling(f: &Poly<Rational>, target: &Poly<Rational>) -> bool {
    let n = f.nvars();
    if n != target.nvars() || f.degree() != target.degree() || f.num_terms() != target.num_terms() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| target.embed_vars(n, p).proportional(f).is_some())
}

/// All bounds for f over an exact field.
pub fn aggregate<F: Scalar>(f: &Poly<F>) -> Result<RankReport> {
    if !F::EXACT {
        return Err(Error::ExactFieldRequired);
    }
    let mut report = RankReport::new(format!("{f}"));
    if f.is_zero() {
        report.pin_rank(0, "zero form");
        report.pin_border(0, "zero form");
        return Ok(report);
    }
    let comps = variable_components(f);
    if comps.len() > 1 {
        let (mut ru, mut bu) = (0u64, 0u64);
        for c in &comps {
            let part = Poly::from_terms(
                f.nvars(),
                f.degree(),
                f.terms()
                    .filter(|(m, _)| c.iter().any(|&i| m.0[i] > 0))
                    .map(|(m, a)| (m.clone(), a.clone())),
            )?;
            let sub = aggregate(&part.restrict_vars(c)?)?;
            ru = ru.saturating_add(sub.rank_upper.value);
            bu = bu.saturating_add(sub.border_upper.value);
        }
        report.add(
            BoundKind::RankUpper,
            Bound::new(ru, "sum over disjoint-variable components"),
        );
        report.add(
            BoundKind::BorderUpper,
            Bound::new(bu, "sum over disjoint-variable components"),
        );
    }
    let red = reduce_span(f)?;
    let g = &red.reduced;
    let n = g.nvars();
    let d = g.degree();
    let universal = binomial((n + d as usize - 1) as i64, d as i64);
    let universal = u64::try_from(universal)
        .unwrap_or(u64::MAX)
        .saturating_sub(n as u64)
        + 1;
    report.add(
        BoundKind::RankUpper,
        Bound::new(universal, "universal upper C(n+d−1,d)−n+1"),
    );
    if n == 1 || d == 1 {
        report.pin_rank(1, "power of a linear form");
        report.pin_border(1, "power of a linear form");
        return Ok(report);
    }
    if d == 2 {
        report.pin_rank(n as u64, "quadric rank equals span dimension");
        report.pin_border(n as u64, "quadric rank equals span dimension");
        return Ok(report);
    }
    for s in 1..d {
        let r = flattening_rank(g, s)? as u64;
        report.add(
            BoundKind::BorderLower,
            Bound::new(r, format!("flattening bound @ s={s}")),
        );
    }
    if n == 2 {
        let cert = sylvester_rank(g)?;
        report.pin_rank(cert.rank as u64, "binary rank algorithm");
        report.pin_border(cert.border_rank as u64, "binary rank algorithm");
        note_border_three(&mut report);
        return Ok(report);
    }
    // strata along coordinate subspaces of the reduced form
    let mut strata = Vec::new();
    for s in 1..d {
        if n <= 20 {
            strata.push(sigma_dim_coordinate(g, s)?);
        }
        if n <= 6 && d <= 6 {
            strata.push(sigma_dim_bruteforce(g, s)?);
        }
    }
    report.add_all(BoundKind::RankLower, sigma_lower_bound(g, &strata)?);
    if let Some(b) = reducibility_bounds(n, coordinate_factor(g)) {
        report.add(BoundKind::RankLower, b);
    }
    if n <= MAX_PAIR_RESTRICTION_N {
        for i in 0..n {
            for j in i + 1..n {
                let r = coordinate_restriction_rank(g, i, j)?;
                report.add(
                    BoundKind::RankLower,
                    Bound::new(r as u64, format!("binary restriction to (y{i}, y{j})")),
                );
            }
        }
    }
    if g.num_terms() == 1 {
        monomial_sources(&mut report, g);
    }
    if let Some((k, kind)) = recognize(f) {
        let b = detperm_bounds(k, kind);
        let name = match kind {
            DetPerm::Det => "det",
            DetPerm::Perm => "perm",
        };
        report.add(
            BoundKind::RankLower,
            Bound::new(
                b.rank_lower,
                format!("singular-stratum bound for {name}_{k}"),
            ),
        );
        report.add(
            BoundKind::BorderLower,
            Bound::new(b.border_lower, format!("flattening bound for {name}_{k}")),
        );
        report.add(
            BoundKind::RankUpper,
            Bound::new(
                b.rank_upper,
                format!("product identity upper for {name}_{k}"),
            ),
        );
    }
    if let Some(q) = as_rational(g) {
        if n == 3 && d == 3 {
            let c = classify(&q)?;
            let tag = format!("plane cubic classification ({})", c.row.description());
            report.pin_rank(c.rank as u64, &tag);
            report.pin_border(c.border_rank as u64, &tag);
        }
        if let Some(m) = linear_times_quadric(&q) {
            report.add(
                BoundKind::RankUpper,
                Bound::new(2 * m as u64, "sum of m binary cubics of rank 2"),
            );
        }
        if matches_up_to_relabeling(&q, &five_variable_cubic()) {
            report.add(
                BoundKind::BorderUpper,
                Bound::new(5, "five-curve limit upper"),
            );
            report.add(
                BoundKind::RankUpper,
                Bound::new(9, "explicit nine-cube expression"),
            );
        }
    }
    note_border_three(&mut report);
    Ok(report)
}

/// Formula bounds for x₀^{b₀}⋯xₙ^{bₙ}; zero exponents are ignored.
pub fn monomial_report(b: &[u32]) -> RankReport {
    let e: Vec<u32> = b.iter().copied().filter(|&x| x > 0).collect();
    let m: Poly<Rational> = Poly::monomial(&e, int(1));
    let mut report = RankReport::new(format!("{m}"));
    if e.len() <= 1 {
        report.pin_rank(1, "power of a linear form");
        report.pin_border(1, "power of a linear form");
    } else {
        monomial_sources(&mut report, &m);
    }
    report
}

fn monomial_sources<F: Scalar>(report: &mut RankReport, g: &Poly<F>) {
    let (m, _) = g.terms().next().expect("one term");
    let b = monomial_border_bounds(&m.0);
    report.add(
        BoundKind::BorderLower,
        Bound::new(b.border_lower, "monomial count S at ⌊d/2⌋"),
    );
    report.add(
        BoundKind::BorderUpper,
        Bound::new(b.border_upper, "monomial limit upper T"),
    );
    if let Some(e) = b.exact_border {
        report.add(
            BoundKind::BorderLower,
            Bound::new(e, "monomial border rank, dominant exponent"),
        );
    }
    report.add(
        BoundKind::RankLower,
        Bound::new(b.rank_lower, "singular-stratum bound for monomials"),
    );
    report.add(
        BoundKind::RankUpper,
        Bound::new(b.rank_upper, "monomial rank upper (b₀+1)⋯(b_{n−1}+1)bₙ"),
    );
    if b.exponents.iter().all(|&e| e == 1) {
        let p = product_bounds(b.exponents.len() as u32);
        report.add(
            BoundKind::RankLower,
            Bound::new(p.rank_lower, "product lower C(n,⌊n/2⌋)+⌈n/2⌉−1"),
        );
        report.add(
            BoundKind::RankUpper,
            Bound::new(p.rank_upper, "product identity upper"),
        );
        if b.exponents.len() == 4 {
            report.pin_rank(PRODUCT_FOUR_RANK, "pinned value R(x₁x₂x₃x₄) = 8");
        }
    }
    if b.exponents == [2, 1, 1] {
        report.pin_rank(6, "pinned value R(x²yz) = 6");
    }
}

fn note_border_three(report: &mut RankReport) {
    if report.exact_border == Some(3)
        && !report.notes.iter().any(|n| n == BORDER_THREE_OPEN_QUESTION)
    {
        report.notes.push(String::from(BORDER_THREE_OPEN_QUESTION));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{names_from_list, parse_rational_poly};

    fn p(s: &str, vars: &str) -> Poly<Rational> {
        parse_rational_poly(s, Some(&names_from_list(vars)), None).unwrap()
    }

    #[test]
    fn xyz_sums() {
        let r = aggregate(&p("x1*y1*z1 + x2*y2*z2", "x1,y1,z1,x2,y2,z2")).unwrap();
        assert_eq!(r.exact_rank, Some(8));
        assert_eq!((r.border_lower.value, r.border_upper.value), (6, 8));
        assert!(r.is_consistent());
        let r1 = aggregate(&p("x*y*z", "x,y,z")).unwrap();
        assert_eq!((r1.exact_rank, r1.exact_border), (Some(4), Some(4)));
    }

    #[test]
    fn linear_times_quadrics() {
        let r = aggregate(&p("x*y1^2 + x*y2^2 + x*y3^2", "x,y1,y2,y3")).unwrap();
        assert_eq!(r.exact_rank, Some(6));
        let r = aggregate(&p("x*y1^2 + x*y2^2", "x,y1,y2")).unwrap();
        assert_eq!(r.exact_rank, Some(4));
    }

    #[test]
    fn five_variables() {
        let r = aggregate(&p("x^2*u + y^2*v + x*y*z", "x,y,z,u,v")).unwrap();
        assert_eq!(r.exact_border, Some(5));
        assert_eq!((r.rank_lower.value, r.rank_upper.value), (8, 9));
    }

    #[test]
    fn pins_and_small_cases() {
        assert_eq!(
            aggregate(&p("x1*x2*x3*x4", "x1,x2,x3,x4"))
                .unwrap()
                .exact_rank,
            Some(8)
        );
        assert_eq!(
            aggregate(&p("x^2*y*z", "x,y,z")).unwrap().exact_rank,
            Some(6)
        );
        let r = aggregate(&p("x^2*y + y^2*z", "x,y,z")).unwrap();
        assert_eq!((r.exact_rank, r.exact_border), (Some(5), Some(3)));
        assert!(!r.notes.is_empty());
        assert_eq!(
            aggregate(&p("x^2 + y^2 + z^2", "x,y,z"))
                .unwrap()
                .exact_rank,
            Some(3)
        );
        assert_eq!(aggregate(&p("x^3*y^2", "x,y")).unwrap().exact_rank, Some(4));
    }
}
