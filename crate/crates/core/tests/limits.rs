use symrank_core::limits::{
    certify_row, expected_monomial_span, limit_plane, monomial_family, normal_form_ids,
    normal_form_row, same_span,
};

fn exponent_tuples(max_len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(b) = stack.pop() {
        if !b.is_empty() {
            out.push(b.clone());
        }
        if b.len() < max_len {
            let s: u32 = b.iter().sum();
            for e in 1..=max_sum.saturating_sub(s) {
                let mut c = b.clone();
                c.push(e);
                stack.push(c);
            }
        }
    }
    out
}

#[test]
fn monomial_families_match_expected_span() {
    let mut checked = 0;
    for b in exponent_tuples(4, 5) {
        let t: u32 = b.iter().map(|e| e + 1).product();
        if t > 24 {
            continue;
        }
        let tail: u32 = b.iter().sum();
        for d in (tail + 1).max(2)..=6 {
            let fam = monomial_family(&b, d, None).unwrap();
            let plane = limit_plane(&fam).unwrap();
            assert_eq!(plane.dimension as u32, t, "b = {b:?}, d = {d}");
            assert!(
                same_span(&plane.basis, &expected_monomial_span(&b, d)).unwrap(),
                "b = {b:?}, d = {d}"
            );
            checked += 1;
        }
    }
    assert!(checked > 30);
}

#[test]
fn normal_form_rows_certify() {
    for r in [3, 4, 5] {
        for id in normal_form_ids(r) {
            let dmax = if r == 5 { 5 } else { 6 };
            for d in 3..=dmax {
                let row = normal_form_row(&id, d).unwrap();
                let c = certify_row(&row).unwrap();
                assert!(c.certified(), "{id} at d = {d}");
                assert_eq!(c.plane.dimension, r);
                if !row.needs_scaling {
                    assert!(c.exact_member, "{id} at d = {d}");
                }
            }
        }
    }
}

#[test]
fn small_degree_rejected() {
    assert!(normal_form_row("r3.fermat", 2).is_err());
    assert!(normal_form_row("r9.none", 4).is_err());
}
