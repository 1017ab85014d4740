use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symrank_core::cubic::{aronhold, classify, hessian, CubicRow};
use symrank_core::linalg::Matrix;
use symrank_core::poly::{power_of_linear, LinearForm, Poly};
use symrank_core::scalar::{int, Rational, Scalar};

fn random_invertible(rng: &mut ChaCha8Rng) -> Vec<LinearForm<Rational>> {
    loop {
        let rows: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..3).map(|_| int(rng.gen_range(-3..=3))).collect())
            .collect();
        if Matrix::from_rows(rows.clone()).unwrap().rank().unwrap() == 3 {
            return rows.into_iter().map(LinearForm::new).collect();
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng) -> LinearForm<Rational> {
    LinearForm::new((0..3).map(|_| int(rng.gen_range(-5..=5))).collect())
}

#[test]
fn classification_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for row in CubicRow::ALL {
        let Some(f) = row.instance() else { continue };
        for _ in 0..20 {
            let a = random_invertible(&mut rng);
            let g = f.substitute(&a).unwrap();
            let c = classify(&g).unwrap();
            assert_eq!((c.rank, c.border_rank), row.ranks(), "{row:?} under {a:?}");
        }
    }
}

#[test]
fn hessian_is_covariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for row in CubicRow::ALL {
        let Some(f) = row.instance() else { continue };
        let h = hessian(&f).unwrap();
        for _ in 0..5 {
            let a = random_invertible(&mut rng);
            let lhs = hessian(&f.substitute(&a).unwrap()).unwrap();
            let rhs = h.substitute(&a).unwrap();
            if h.is_zero() {
                assert!(lhs.is_zero());
            } else {
                assert!(lhs.proportional(&rhs).is_some(), "{row:?}");
            }
        }
    }
}

#[test]
fn aronhold_separates_border_rank_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let mut f = Poly::zero(3, 3);
        for _ in 0..3 {
            f = f.add(&power_of_linear(&random_form(&mut rng), 3)).unwrap();
        }
        assert!(Scalar::is_zero(&aronhold(&f).unwrap()));
    }
    let basis = symrank_core::poly::monomials(3, 3);
    for _ in 0..100 {
        let f = Poly::from_terms(
            3,
            3,
            basis
                .iter()
                .map(|m| (m.clone(), int(rng.gen_range(-9..=9)))),
        )
        .unwrap();
        assert!(!Scalar::is_zero(&aronhold(&f).unwrap()));
    }
}
