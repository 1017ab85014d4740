use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symrank_core::aggregate::{aggregate, monomial_report};
use symrank_core::binary::sylvester_rank;
use symrank_core::bounds::{
    count_s, count_s_all, count_s_bruteforce, count_s_histogram_bruteforce, count_t,
    detperm_bounds, monomial_border_bounds, DetPerm, RankReport,
};
use symrank_core::decomp::{
    catalog, product_decomposition, verify, FieldDecomposition, Verdict, CATALOG_IDS,
};
use symrank_core::detperm::build;
use symrank_core::flatten::{flattening_lower_bound, flattening_rank};
use symrank_core::limits::{contains, limit_plane, monomial_family, CurveFamily};
use symrank_core::linalg::{limit_column_space, Matrix};
use symrank_core::parse::parse_poly;
use symrank_core::poly::{default_names, monomials, square_free, LinearForm, Monomial, Poly};
use symrank_core::ratfun::{RatFun, RatPoly};
use symrank_core::scalar::{
    binomial, int, rat, BigComplex, BigFloat, GaussianRational, Rational, Scalar, DEFAULT_PRECISION,
};
use symrank_core::strata::{sigma_dim_bruteforce, sigma_dim_monomial};

fn rand_rat(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-50..=50), rng.gen_range(1..=30))
}

fn rand_poly(rng: &mut ChaCha8Rng, n: usize, d: u32, density: f64) -> Poly<Rational> {
    let mut terms = Vec::new();
    for m in monomials(n, d) {
        if rng.gen_bool(density) {
            terms.push((m, int(rng.gen_range(-4..=4))));
        }
    }
    Poly::from_terms(n, d, terms).unwrap()
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| int(rng.gen_range(-3..=3))).collect())
            .collect(),
    )
    .unwrap()
}

fn rand_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let m = rand_matrix(rng, n, n);
        if m.rank().unwrap() == n {
            return m;
        }
    }
}

fn forms(m: &Matrix<Rational>) -> Vec<LinearForm<Rational>> {
    (0..m.rows())
        .map(|i| LinearForm::new(m.row(i).to_vec()))
        .collect()
}

fn is_homogeneous<F: Scalar>(p: &Poly<F>) -> bool {
    p.terms().all(|(m, _)| m.degree() == p.degree())
}

#[test]
fn field_axioms_on_random_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let (a, b, c) = (rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng));
        assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b + a * c);
    }
}

#[test]
fn gaussian_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..1000 {
        let z = if k == 0 {
            GaussianRational::zero()
        } else {
            GaussianRational::new(rand_rat(&mut rng), rand_rat(&mut rng))
        };
        let w = z.clone() * z.conj();
        assert!(w.im == int(0));
        assert_eq!(w.re, z.norm());
        assert!(w.re >= int(0));
        assert_eq!(w.re == int(0), Scalar::is_zero(&z));
    }
}

#[test]
fn doubling_precision_never_hurts() {
    let third = rat(1, 3);
    let err = |p: u32| {
        let x = BigComplex::from_rational_prec(&third, p)
            .re
            .with_precision(4096);
        (x * BigFloat::from_int(3.into(), 4096) - BigFloat::from_int(1.into(), 4096)).abs()
    };
    for p in [64, 96, 128, 200, 256, 512] {
        assert!(err(2 * p).cmp_value(&err(p)).is_le(), "precision {p}");
    }
}

#[test]
fn operations_preserve_homogeneity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let f = rand_poly(&mut rng, 3, 4, 0.5);
        let g = rand_poly(&mut rng, 3, 2, 0.5);
        let q = rand_poly(&mut rng, 3, 1, 0.7);
        let a = forms(&rand_matrix(&mut rng, 3, 3));
        let prod = f.mul(&g).unwrap();
        let contracted = Poly::contract(&q, &f).unwrap();
        let sub = f.substitute(&a).unwrap();
        let diff = f.diff(rng.gen_range(0..3)).unwrap();
        let pw = g.pow(2).unwrap();
        assert_eq!((prod.degree(), contracted.degree()), (6, 3));
        assert_eq!((sub.degree(), diff.degree(), pw.degree()), (4, 3, 4));
        for p in [&f, &g, &prod, &contracted, &sub, &diff, &pw] {
            assert!(is_homogeneous(p));
        }
    }
}

#[test]
fn contraction_composes_on_small_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let (d1, d2) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let df = rng.gen_range(d1 + d2..=5);
        let f = rand_poly(&mut rng, 3, df, 0.5);
        let q1 = rand_poly(&mut rng, 3, d1, 0.6);
        let q2 = rand_poly(&mut rng, 3, d2, 0.6);
        let lhs = Poly::contract(&q1.mul(&q2).unwrap(), &f).unwrap();
        let rhs = Poly::contract(&q1, &Poly::contract(&q2, &f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn substitution_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let f = rand_poly(&mut rng, 3, 3, 0.5);
        let a = forms(&rand_matrix(&mut rng, 3, 3));
        let b = forms(&rand_matrix(&mut rng, 3, 3));
        // x_i ↦ a_i(b(x))
        let ab: Vec<LinearForm<Rational>> = a
            .iter()
            .map(|l| {
                let p = l.to_poly().substitute(&b).unwrap();
                LinearForm::new((0..3).map(|j| p.coeff(&Monomial(unit(j)))).collect())
            })
            .collect();
        let lhs = f.substitute(&a).unwrap().substitute(&b).unwrap();
        assert_eq!(lhs, f.substitute(&ab).unwrap());
    }
}

fn unit(j: usize) -> Vec<u32> {
    let mut e = vec![0; 3];
    e[j] = 1;
    e
}

#[test]
fn parse_print_parse() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let mut terms = Vec::new();
        for m in monomials(n, d) {
            if rng.gen_bool(0.4) {
                let im = if rng.gen_bool(0.3) {
                    rand_rat(&mut rng)
                } else {
                    int(0)
                };
                terms.push((m, GaussianRational::new(rand_rat(&mut rng), im)));
            }
        }
        let f = Poly::from_terms(n, d, terms).unwrap();
        if f.is_zero() {
            continue;
        }
        let names = default_names(n);
        let text = f.display_with(&names);
        let g = parse_poly(&text, Some(&names), None).unwrap();
        assert_eq!(g.poly, f, "{text}");
        assert_eq!(g.poly.display_with(&names), text);
    }
}

#[test]
fn matrix_rank_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let k = rng.gen_range(1..=10);
        let m = rand_matrix(&mut rng, 10, k)
            .mul(&rand_matrix(&mut rng, k, 12))
            .unwrap();
        let r = m.rank().unwrap();
        assert_eq!(r, m.transpose().rank().unwrap());
        let p = rand_invertible(&mut rng, 10);
        let q = rand_invertible(&mut rng, 12);
        assert_eq!(p.mul(&m).unwrap().mul(&q).unwrap().rank().unwrap(), r);
        let ker = m.kernel().unwrap();
        assert_eq!(ker.len(), 12 - r);
        for v in ker {
            assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn limit_span_has_generic_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut tested = 0;
    while tested < 50 {
        let (rows, cols) = (rng.gen_range(3..=6), rng.gen_range(1..=3));
        let entries: Vec<Vec<RatPoly>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| RatPoly::new((0..=3).map(|_| int(rng.gen_range(-2..=2))).collect()))
                    .collect()
            })
            .collect();
        let at = |t: i64| {
            Matrix::from_rows(
                entries
                    .iter()
                    .map(|r| r.iter().map(|p| p.eval(&int(t))).collect())
                    .collect(),
            )
            .unwrap()
        };
        // rank at a sample point bounds the generic rank from below
        if at(7).rank().unwrap() < cols {
            continue;
        }
        let m = Matrix::from_rows(
            entries
                .iter()
                .map(|r| r.iter().map(|p| RatFun::from_poly(p.clone())).collect())
                .collect(),
        )
        .unwrap();
        let span = limit_column_space(&m).unwrap();
        assert_eq!(span.basis.len(), cols);
        assert_eq!(
            Matrix::from_cols(&span.basis).unwrap().rank().unwrap(),
            cols
        );
        tested += 1;
    }
}

#[test]
fn flattening_subadditive_and_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let f = rand_poly(&mut rng, 3, 4, 0.3);
        let g = rand_poly(&mut rng, 3, 4, 0.3);
        let h = f.add(&g).unwrap();
        for s in 0..=4 {
            let rh = flattening_rank(&h, s).unwrap();
            assert!(rh <= flattening_rank(&f, s).unwrap() + flattening_rank(&g, s).unwrap());
        }
    }
    for _ in 0..5 {
        let f = rand_poly(&mut rng, 3, 4, 0.3);
        let ranks: Vec<usize> = (0..=4).map(|s| flattening_rank(&f, s).unwrap()).collect();
        for _ in 0..20 {
            let g = f.substitute(&forms(&rand_invertible(&mut rng, 3))).unwrap();
            let moved: Vec<usize> = (0..=4).map(|s| flattening_rank(&g, s).unwrap()).collect();
            assert_eq!(ranks, moved);
        }
    }
}

#[test]
fn monomial_catalecticants_match_counts() {
    for n in 1..=5usize {
        for d in 1..=8u32 {
            for m in monomials(n, d) {
                let f: Poly<Rational> = Poly::monomial(&m.0, int(1));
                for s in 0..=d {
                    assert_eq!(
                        flattening_rank(&f, s).unwrap() as u64,
                        count_s(&m.0, s),
                        "{m:?} at {s}"
                    );
                }
            }
        }
    }
}

#[test]
fn binary_forms() {
    for a in 1..=6u32 {
        for b in a..=6u32 {
            let f: Poly<Rational> = Poly::monomial(&[a, b], int(1));
            let c = sylvester_rank(&f).unwrap();
            assert_eq!(
                (c.rank, c.border_rank),
                ((b + 1) as usize, (a + 1) as usize),
                "x^{a} y^{b}"
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let d = rng.gen_range(3..=8);
        let f = rand_poly(&mut rng, 2, d, 0.5);
        if f.is_zero() {
            continue;
        }
        let c = sylvester_rank(&f).unwrap();
        assert!(c.rank <= d as usize && c.rank >= c.border_rank, "{f}");
        assert_eq!(c.border_rank, flattening_lower_bound(&f).unwrap().0, "{f}");
        if let Some(w) = &c.kernel_witness {
            assert!(Poly::contract(w, &f).unwrap().is_zero());
            assert!(square_free(w).unwrap());
        }
        for _ in 0..10 {
            let g = f.substitute(&forms(&rand_invertible(&mut rng, 2))).unwrap();
            let cg = sylvester_rank(&g).unwrap();
            assert_eq!(
                (cg.rank, cg.border_rank),
                (c.rank, c.border_rank),
                "{f} vs {g}"
            );
        }
    }
}

#[test]
fn monomial_strata_agree_with_brute_force() {
    for n in 1..=4usize {
        for d in 1..=7u32 {
            for m in monomials(n, d) {
                let f: Poly<Rational> = Poly::monomial(&m.0, int(1));
                let mut prev = i64::MAX;
                for s in 0..d {
                    let exact = sigma_dim_monomial(&m.0, s).dim;
                    let brute = sigma_dim_bruteforce(&f, s).unwrap().dim;
                    assert_eq!(exact, brute, "{m:?} at s = {s}");
                    assert!(exact <= prev);
                    prev = exact;
                }
            }
        }
    }
}

fn assert_report(r: &RankReport, what: &str) {
    let top = r.rank_upper.value.min(r.border_upper.value);
    assert!(r.border_lower.value <= top, "{what}: {r:?}");
    assert!(r.rank_lower.value <= r.rank_upper.value, "{what}: {r:?}");
    assert!(r.is_consistent(), "{what}");
}

#[test]
fn lower_bounds_respect_known_decompositions() {
    for id in CATALOG_IDS {
        let e = catalog(id, DEFAULT_PRECISION).unwrap();
        let report = match &e.data {
            FieldDecomposition::Rational { target, .. } => aggregate(target).unwrap(),
            FieldDecomposition::Gaussian { target, .. } => aggregate(target).unwrap(),
            FieldDecomposition::Complex { .. } => match &e.target_text {
                Some(t) => aggregate(&parse_poly(t, Some(&e.names), None).unwrap().poly).unwrap(),
                None => continue,
            },
        };
        assert_report(&report, id);
        assert!(
            report.rank_lower.value <= e.data.len() as u64,
            "{id}: {report:?}"
        );
        assert!(e.rank.1 <= e.data.len() as u64, "{id}");
    }
    for n in 1..=6 {
        let d = product_decomposition(n).unwrap();
        assert_eq!(d.len() as u64, 1 << (n - 1));
        let report = monomial_report(&vec![1; n as usize]);
        assert_report(&report, "product");
        assert!(report.rank_lower.value <= d.len() as u64);
    }
    for n in 2..=8 {
        for kind in [DetPerm::Det, DetPerm::Perm] {
            let b = detperm_bounds(n, kind);
            assert!(
                b.border_lower <= b.rank_lower && b.rank_lower <= b.rank_upper,
                "{b:?}"
            );
        }
    }
}

#[test]
fn reports_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let d = rng.gen_range(2..=4);
        let f = rand_poly(&mut rng, n, d, 0.3);
        assert_report(&aggregate(&f).unwrap(), &f.to_string());
    }
    for n in 1..=5usize {
        for d in 1..=8u32 {
            for m in monomials(n, d) {
                assert_report(&monomial_report(&m.0), &format!("{m:?}"));
                let b = monomial_border_bounds(&m.0);
                assert!(
                    b.border_lower <= b.border_upper && b.rank_lower <= b.rank_upper,
                    "{m:?}"
                );
            }
        }
    }
}

/// Nonincreasing positive tuples accepted by `keep`, which must be monotone in each entry.
fn tuples(keep: &dyn Fn(&[u32]) -> bool) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, keep: &dyn Fn(&[u32]) -> bool, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        let top = cur.last().copied().unwrap_or(u32::MAX);
        let mut b = 1;
        while b <= top {
            cur.push(b);
            let ok = keep(cur);
            if ok {
                rec(cur, keep, out);
            }
            cur.pop();
            if !ok {
                break;
            }
            b += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), keep, &mut out);
    out
}

#[test]
fn count_s_matches_enumeration_everywhere() {
    for b in tuples(&|b| count_t(b) <= 10_000) {
        let formula = count_s_all(&b);
        assert_eq!(formula, count_s_histogram_bruteforce(&b), "{b:?}");
        assert_eq!(formula.iter().sum::<u64>(), count_t(&b), "{b:?}");
        if count_t(&b) <= 200 {
            for (delta, &v) in formula.iter().enumerate() {
                assert_eq!(count_s(&b, delta as u32), v, "{b:?} at {delta}");
                assert_eq!(count_s_bruteforce(&b, delta as u32), v, "{b:?} at {delta}");
            }
        }
    }
}

#[test]
fn count_s_is_flat_under_a_dominant_exponent() {
    let mut checked = 0;
    for b in tuples(&|b| b.iter().sum::<u32>() <= 14) {
        let tail: u32 = b[1..].iter().sum();
        if b[0] < tail {
            continue;
        }
        for delta in tail..=b[0] {
            assert_eq!(count_s(&b, delta), count_t(&b[1..]), "{b:?} at {delta}");
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("{checked} (b, δ) pairs");
}

#[test]
fn laplace_expansion() {
    for n in 2..=5u32 {
        let k = n as usize;
        let det: Poly<Rational> = build(n, DetPerm::Det).unwrap();
        let minor: Poly<Rational> = build(n - 1, DetPerm::Det).unwrap();
        let mut sum = Poly::zero(k * k, n);
        for j in 0..k {
            let cols: Vec<usize> = (0..k).filter(|&c| c != j).collect();
            let map: Vec<usize> = (0..(k - 1) * (k - 1))
                .map(|v| (v / (k - 1) + 1) * k + cols[v % (k - 1)])
                .collect();
            let cof = minor.embed_vars(k * k, &map);
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            let term = Poly::variable(j, k * k).mul(&cof).unwrap().scale(&sign);
            sum = sum.add(&term).unwrap();
        }
        assert_eq!(sum, det, "n = {n}");
    }
}

#[test]
fn det_catalecticant_is_spanned_by_minors() {
    for n in 2..=4u32 {
        let det: Poly<Rational> = build(n, DetPerm::Det).unwrap();
        for a in 0..=n {
            let c = binomial(n as i64, a as i64);
            let want = usize::try_from(c.clone() * c).unwrap();
            assert_eq!(flattening_rank(&det, a).unwrap(), want, "n = {n}, a = {a}");
        }
    }
}

#[test]
fn corrupted_decompositions_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let bump = |rng: &mut ChaCha8Rng| loop {
        let q = rand_rat(rng);
        if q != int(0) {
            return q;
        }
    };
    for id in CATALOG_IDS {
        match catalog(id, DEFAULT_PRECISION).unwrap().data {
            FieldDecomposition::Rational { target, dec } => {
                for k in 0..100 {
                    let mut bad = dec.clone();
                    let t = rng.gen_range(0..bad.len());
                    if k % 2 == 0 {
                        bad.terms[t].0 = bad.terms[t].0.clone() + bump(&mut rng);
                    } else {
                        let j = rng.gen_range(0..bad.nvars());
                        let c = &mut bad.terms[t].1.coeffs[j];
                        *c = c.clone() + bump(&mut rng);
                    }
                    let v = verify(&target, &bad, None).unwrap();
                    assert!(matches!(v, Verdict::Mismatch { .. }), "{id}: {v:?}");
                }
            }
            FieldDecomposition::Gaussian { target, dec } => {
                for _ in 0..100 {
                    let mut bad = dec.clone();
                    let t = rng.gen_range(0..bad.len());
                    let delta = GaussianRational::new(bump(&mut rng), int(0));
                    bad.terms[t].0 = bad.terms[t].0.clone() + delta;
                    let v = verify(&target, &bad, None).unwrap();
                    assert!(matches!(v, Verdict::Mismatch { .. }), "{id}: {v:?}");
                }
            }
            FieldDecomposition::Complex { .. } => {}
        }
    }
}

#[test]
fn default_lambdas_are_generic() {
    for tail in tuples(&|b| b.len() <= 3 && b.iter().all(|&x| x <= 4) && count_t(b) <= 64) {
        let d = tail.iter().sum::<u32>() + 1;
        let fam = monomial_family(&tail, d, None).unwrap();
        let plane = limit_plane(&fam).unwrap();
        assert_eq!(plane.dimension as u64, count_t(&tail), "{tail:?}");
    }
}

#[test]
fn membership_ignores_curve_order() {
    for b in [
        vec![2u32, 1, 1],
        vec![3, 2],
        vec![3, 1, 1, 1],
        vec![4, 2, 1],
    ] {
        let d: u32 = b.iter().sum();
        let fam = monomial_family(&b[1..], d, None).unwrap();
        let mut curves = fam.curves.clone();
        curves.reverse();
        let rev = CurveFamily::new(d, b.len(), curves).unwrap();
        let (p, q) = (limit_plane(&fam).unwrap(), limit_plane(&rev).unwrap());
        let target: Poly<Rational> = Poly::monomial(&b, int(1));
        let mut other = vec![0; b.len()];
        other[b.len() - 1] = d;
        let outside: Poly<Rational> = Poly::monomial(&other, int(1));
        for f in [&target, &outside] {
            assert_eq!(contains(&p, f).unwrap(), contains(&q, f).unwrap(), "{b:?}");
        }
        assert!(contains(&q, &target).unwrap());
    }
}
