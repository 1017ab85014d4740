use serde_json::{json, Value};
use symrank_core::aggregate::{aggregate, monomial_report};
use symrank_core::binary::sylvester_rank;
use symrank_core::bounds::{
    describe, detperm_bounds, fmt_value, product_bounds, BoundValue, DetPerm, RankReport,
};
use symrank_core::cubic::{
    aronhold, classify, classify_numeric, hessian, singular_a_family, CubicRow,
};
use symrank_core::decomp::{catalog, verify, Decomposition, Verdict, CATALOG_IDS};
use symrank_core::detperm::build;
use symrank_core::flatten::{flattening_lower_bound, flattening_rank, reduce_span, span_dim};
use symrank_core::limits::{
    certify_five_curve, certify_row, contains, expected_monomial_span, limit_plane,
    monomial_family, normal_form_row, same_span, FIVE_CURVE_NAMES,
};
use symrank_core::parse::{infer_names, names_from_list, parse_poly, to_rational};
use symrank_core::poly::{default_names, LinearForm, Poly};
use symrank_core::scalar::{
    binomial, int, parse_decimal, BigFloat, GaussianRational, Rational, Scalar,
};

use crate::error::{CliError, Context};

/// Largest n accepted for det/perm tables (keeps 2^{n−1}n! within u64).
pub const MAX_TABLE_N: u32 = 16;
/// Largest n for building the det/perm catalecticant.
pub const MAX_VERIFY_N: u32 = 4;

pub struct Numeric {
    pub precision_bits: u32,
    pub tolerance: BigFloat,
}

impl Numeric {
    pub fn new(precision_bits: u32, tolerance: &str) -> Result<Self, CliError> {
        if precision_bits < 64 {
            return Err(CliError::Precondition(format!(
                "precision must be at least 64 bits, got {precision_bits}"
            )));
        }
        let t = parse_decimal(tolerance)
            .ok_or_else(|| CliError::Parse(format!("bad tolerance '{tolerance}'")))?;
        Ok(Numeric {
            precision_bits,
            tolerance: BigFloat::from_rational(&t, precision_bits),
        })
    }
}

pub struct Input {
    pub poly: Poly<GaussianRational>,
    pub names: Vec<String>,
}

impl Input {
    pub fn parse(text: &str, vars: Option<&str>) -> Result<Self, CliError> {
        let declared = match vars {
            Some(v) => Some(names_from_list(v)),
            None => infer_names(text).ctx("parse")?,
        };
        let p = parse_poly(text, declared.as_deref(), None).ctx("parse")?;
        Ok(Input {
            poly: p.poly,
            names: p.names,
        })
    }

    fn show<F: Scalar>(&self, p: &Poly<F>) -> String {
        p.display_with(&self.names)
    }

    fn rational(&self) -> Result<Poly<Rational>, CliError> {
        to_rational(&self.poly)
            .ok_or_else(|| CliError::Precondition(String::from("rational coefficients required")))
    }
}

fn bound_json(b: &BoundValue) -> Value {
    json!({ "value": fmt_value(b.value), "provenance": b.provenance })
}

pub fn report_json(r: &RankReport, poly: &str) -> Value {
    let contributions: Vec<Value> = r
        .contributions
        .iter()
        .map(|(k, b)| json!({ "kind": describe(*k), "value": fmt_value(b.value), "provenance": b.provenance }))
        .collect();
    json!({
        "poly": poly,
        "rank_lower": bound_json(&r.rank_lower),
        "rank_upper": bound_json(&r.rank_upper),
        "border_lower": bound_json(&r.border_lower),
        "border_upper": bound_json(&r.border_upper),
        "exact_rank": r.exact_rank,
        "exact_border": r.exact_border,
        "consistent": r.is_consistent(),
        "contributions": contributions,
        "notes": r.notes,
    })
}

pub fn flatten_rank(input: &Input, s: Option<u32>) -> Result<Value, CliError> {
    let f = &input.poly;
    let d = f.degree();
    let steps: Vec<u32> = match s {
        Some(s) if s > d => {
            return Err(CliError::Precondition(format!(
                "s = {s} exceeds degree {d}"
            )))
        }
        Some(s) => vec![s],
        None => (1..d.max(1)).collect(),
    };
    let ranks = steps
        .iter()
        .map(|&s| Ok(json!({ "s": s, "rank": flattening_rank(f, s).ctx("flatten")? })))
        .collect::<Result<Vec<_>, CliError>>()?;
    let (best, at) = flattening_lower_bound(f).ctx("flatten")?;
    Ok(json!({
        "command": "flatten-rank",
        "poly": input.show(f),
        "nvars": f.nvars(),
        "degree": d,
        "span_dim": span_dim(f).ctx("flatten")?,
        "ranks": ranks,
        "border_lower": { "value": best, "s": at, "provenance": [format!("flattening bound @ s={at}")] },
    }))
}

pub fn binary_rank(input: &Input) -> Result<Value, CliError> {
    let f = &input.poly;
    let red = reduce_span(f).ctx("binary")?;
    let g = &red.reduced;
    if g.nvars() > 2 {
        return Err(CliError::Precondition(format!(
            "span has dimension {}; binary forms need at most 2",
            g.nvars()
        )));
    }
    let (rank, border, case, witness) = if g.nvars() < 2 || g.degree() < 2 {
        (
            u64::from(!f.is_zero()),
            u64::from(!f.is_zero()),
            String::from("power"),
            None,
        )
    } else {
        let c = sylvester_rank(g).ctx("binary")?;
        let dual = vec![String::from("d0"), String::from("d1")];
        (
            c.rank as u64,
            c.border_rank as u64,
            format!("{:?}", c.case),
            c.kernel_witness.map(|w| w.display_with(&dual)),
        )
    };
    let coords: Vec<String> = red
        .basis
        .iter()
        .map(|l| l.to_poly().display_with(&input.names))
        .collect();
    Ok(json!({
        "command": "binary-rank",
        "poly": input.show(f),
        "degree": f.degree(),
        "reduced_coordinates": coords,
        "rank": rank,
        "border_rank": border,
        "case": case,
        "witness": witness,
        "provenance": ["binary rank algorithm"],
    }))
}

pub fn monomial_bounds(exponents: &[u32]) -> Result<Value, CliError> {
    if exponents.iter().all(|&e| e == 0) {
        return Err(CliError::Precondition(String::from(
            "at least one positive exponent required",
        )));
    }
    let r = monomial_report(exponents);
    let mut sorted: Vec<u32> = exponents.iter().copied().filter(|&e| e > 0).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut v = report_json(&r, &r.poly_id);
    v["command"] = json!("monomial-bounds");
    v["exponents"] = json!(sorted);
    Ok(v)
}

fn table_rows(max_n: u32) -> Vec<Value> {
    let ns: Vec<u32> = (2..=max_n).collect();
    let mut rows = Vec::new();
    for (kind, name) in [(DetPerm::Det, "det"), (DetPerm::Perm, "perm")] {
        let b: Vec<_> = ns.iter().map(|&n| detperm_bounds(n, kind)).collect();
        rows.push(json!({
            "quantity": format!("rank_upper({name})"),
            "values": b.iter().map(|x| x.rank_upper).collect::<Vec<_>>(),
            "provenance": "product identity upper",
        }));
        rows.push(json!({
            "quantity": format!("rank_lower({name})"),
            "values": b.iter().map(|x| x.rank_lower).collect::<Vec<_>>(),
            "provenance": if kind == DetPerm::Det { "singular-stratum bound, maximized over a" } else { "singular-stratum bound with zero-column strata, maximized over a" },
        }));
        rows.push(json!({
            "quantity": format!("border_lower({name})"),
            "values": b.iter().map(|x| x.border_lower).collect::<Vec<_>>(),
            "provenance": "flattening bound @ s=⌊n/2⌋",
        }));
    }
    rows
}

pub fn detperm_table(
    max_n: u32,
    verify_flattenings: bool,
    max_verify_n: u32,
) -> Result<Value, CliError> {
    if !(2..=MAX_TABLE_N).contains(&max_n) {
        return Err(CliError::Limit(format!(
            "--max-n must lie in 2..={MAX_TABLE_N}"
        )));
    }
    let mut out = json!({
        "command": "detperm-table",
        "columns": (2..=max_n).collect::<Vec<_>>(),
        "rows": table_rows(max_n),
    });
    if verify_flattenings {
        if max_verify_n > MAX_VERIFY_N {
            return Err(CliError::Limit(format!(
                "flattening verification is capped at n = {MAX_VERIFY_N}"
            )));
        }
        let mut checks = Vec::new();
        for n in 2..=max_verify_n.min(max_n) {
            for (kind, name) in [(DetPerm::Det, "det"), (DetPerm::Perm, "perm")] {
                let f: Poly<Rational> = build(n, kind).ctx("detperm")?;
                let s = n / 2;
                let r = flattening_rank(&f, s).ctx("flatten")? as u64;
                let c = u64::try_from(binomial(n as i64, s as i64)).unwrap_or(0);
                checks.push(json!({ "kind": name, "n": n, "s": s, "flattening_rank": r, "expected": c * c, "matches": r == c * c }));
            }
        }
        out["flattening_checks"] = json!(checks);
    }
    Ok(out)
}

pub fn bounds(input: &Input) -> Result<Value, CliError> {
    let r = aggregate(&input.poly).ctx("bounds")?;
    let mut v = report_json(&r, &input.show(&input.poly));
    v["command"] = json!("bounds");
    Ok(v)
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::ExactMatch => json!({ "kind": "exact_match" }),
        Verdict::ApproxMatch { max_residual } => {
            json!({ "kind": "approx_match", "max_residual": max_residual.to_decimal(6) })
        }
        Verdict::Mismatch { witness, residual } => {
            json!({ "kind": "mismatch", "witness_exponents": witness.0, "residual": residual })
        }
    }
}

/// One term per line: "coeff | c1, c2, ..."; blank lines and '#' comments are skipped.
pub fn parse_decomposition(
    text: &str,
    nvars: usize,
    degree: u32,
) -> Result<Decomposition<GaussianRational>, CliError> {
    let mut terms = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| CliError::Parse(format!("line {}: {what}", k + 1));
        let (c, rest) = line
            .split_once('|')
            .ok_or_else(|| bad("expected 'coeff | c1, c2, ...'"))?;
        let coeff = GaussianRational::parse(c)
            .ok_or_else(|| bad(&format!("bad coefficient '{}'", c.trim())))?;
        let coeffs = rest
            .split(',')
            .map(|x| {
                GaussianRational::parse(x)
                    .ok_or_else(|| bad(&format!("bad form coefficient '{}'", x.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != nvars {
            return Err(bad(&format!(
                "form has {} coefficients, target has {nvars} variables",
                coeffs.len()
            )));
        }
        terms.push((coeff, LinearForm::new(coeffs)));
    }
    Decomposition::new(degree, terms).ctx("decomp")
}

pub fn verify_file(input: &Input, text: &str) -> Result<Value, CliError> {
    let dec = parse_decomposition(text, input.poly.nvars(), input.poly.degree())?;
    let v = verify(&input.poly, &dec, None).ctx("decomp")?;
    Ok(json!({
        "command": "verify-decomp",
        "target": input.show(&input.poly),
        "field": "gaussian-rational",
        "terms": dec.len(),
        "verdict": verdict_json(&v),
    }))
}

pub fn verify_catalog(ids: &[&str], num: &Numeric) -> Result<Value, CliError> {
    let mut entries = Vec::new();
    for id in ids {
        let e = catalog(id, num.precision_bits).ctx("decomp")?;
        let v = e.data.verify(&num.tolerance).ctx("decomp")?;
        entries.push(json!({
            "id": e.id,
            "description": e.description,
            "variables": e.names,
            "target": e.target_text,
            "field": e.data.field_name(),
            "terms": e.data.len(),
            "verdict": verdict_json(&v),
            "rank": [e.rank.0, e.rank.1],
            "border_rank": e.border_rank.map(|(a, b)| [a, b]),
            "correction": e.correction,
            "solved_constants": e.solved,
        }));
    }
    Ok(json!({
        "command": "verify-decomp",
        "precision_bits": num.precision_bits,
        "tolerance": num.tolerance.to_decimal(3),
        "entries": entries,
    }))
}

pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG_IDS.to_vec()
}

pub fn limit_monomial(b: &[u32]) -> Result<Value, CliError> {
    let (&b0, tail) = b
        .split_first()
        .ok_or_else(|| CliError::Parse(String::from("empty exponent list")))?;
    if b0 == 0 {
        return Err(CliError::Precondition(String::from(
            "b0 must be at least 1",
        )));
    }
    let d: u32 = b.iter().sum();
    let fam = monomial_family(tail, d, None).ctx("limits")?;
    let plane = limit_plane(&fam).ctx("limits")?;
    let names = default_names(b.len());
    let target: Poly<Rational> = Poly::monomial(b, int(1));
    let expected = expected_monomial_span(tail, d);
    Ok(json!({
        "command": "limit-plane",
        "family": fam.labels,
        "degree": d,
        "dimension": plane.dimension,
        "vanishing_order": plane.vanishing_order,
        "basis": plane.basis.iter().map(|p| p.display_with(&names)).collect::<Vec<_>>(),
        "expected_span_match": same_span(&plane.basis, &expected).ctx("limits")?,
        "target": target.display_with(&names),
        "contains_target": contains(&plane, &target).ctx("limits")?,
        "border_upper": { "value": plane.dimension, "provenance": ["monomial limit upper T"] },
    }))
}

pub fn limit_normal_form(id: &str, d: u32) -> Result<Value, CliError> {
    let row = normal_form_row(id, d).ctx("limits")?;
    let cert = certify_row(&row).ctx("limits")?;
    let names: Vec<String> = ["x", "y", "z", "w", "u"][..row.family.nvars]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(json!({
        "command": "limit-plane",
        "row": row.id,
        "border_rank": row.border_rank,
        "rank_range": row.rank_text,
        "family": row.family.labels,
        "degree": d,
        "dimension": cert.plane.dimension,
        "vanishing_order": cert.plane.vanishing_order,
        "basis": cert.plane.basis.iter().map(|p| p.display_with(&names)).collect::<Vec<_>>(),
        "target": row.target.display_with(&names),
        "contains_target": cert.exact_member,
        "scaled_member": cert.scaled_member.as_ref().map(|p| p.display_with(&names)),
        "certified": cert.certified(),
        "correction": row.correction,
    }))
}

pub fn limit_five_curve() -> Result<Value, CliError> {
    let c = certify_five_curve().ctx("limits")?;
    let names: Vec<String> = FIVE_CURVE_NAMES.iter().map(|s| s.to_string()).collect();
    let sub: Vec<Value> = names
        .iter()
        .zip(&c.substitution)
        .map(|(n, l)| json!({ "variable": n, "image": l.to_poly().display_with(&names) }))
        .collect();
    Ok(json!({
        "command": "limit-plane",
        "row": "five-curve",
        "target": "x^2*u + y^2*v + x*y*z",
        "dimension": c.plane.dimension,
        "vanishing_order": c.plane.vanishing_order,
        "basis": c.plane.basis.iter().map(|p| p.display_with(&names)).collect::<Vec<_>>(),
        "substitution": sub,
        "member": c.member.display_with(&names),
        "certified": c.verified,
        "border_upper": { "value": 5, "provenance": ["five-curve limit upper"] },
    }))
}

pub fn cubic_classify(input: &Input) -> Result<Value, CliError> {
    let f = input.rational()?;
    let c = classify(&f).ctx("cubic")?;
    let h = hessian(&f).ctx("cubic")?;
    let s = aronhold(&f).ctx("cubic")?;
    Ok(json!({
        "command": "cubic-classify",
        "poly": input.show(&input.poly),
        "row": format!("{:?}", c.row),
        "description": c.row.description(),
        "normal_form": c.row.normal_form(),
        "rank": c.rank,
        "border_rank": c.border_rank,
        "hessian": h.display_with(&input.names),
        "hessian_span": c.hessian_span,
        "aronhold": s.to_string(),
        "aronhold_zero": c.aronhold_zero,
        "certified": { "rank": true, "border_rank": true, "row": c.row_certified },
        "provenance": ["plane cubic classification"],
    }))
}

fn cubics_table(num: &Numeric) -> Result<Value, CliError> {
    let names = names_from_list("x,y,z");
    let mut rows = Vec::new();
    for row in CubicRow::ALL {
        let (er, eb) = row.ranks();
        let entry = match row.instance() {
            Some(f) => {
                let c = classify(&f).ctx("cubic")?;
                json!({
                    "description": row.description(),
                    "normal_form": row.normal_form(),
                    "instance": f.display_with(&names),
                    "rank": c.rank,
                    "border_rank": c.border_rank,
                    "table": [er, eb],
                    "matches": (c.rank, c.border_rank) == (er, eb),
                    "method": "exact classification",
                })
            }
            None => {
                let f = singular_a_family(num.precision_bits).ctx("cubic")?;
                let (r, b, s) = classify_numeric(&f, &num.tolerance).ctx("cubic")?;
                json!({
                    "description": row.description(),
                    "normal_form": row.normal_form(),
                    "instance": "a = -3/4^(1/3)",
                    "rank": r,
                    "border_rank": b,
                    "table": [er, eb],
                    "matches": (r, b) == (er, eb),
                    "method": "numeric Aronhold",
                    "aronhold_magnitude": s.to_decimal(10),
                })
            }
        };
        rows.push(entry);
    }
    Ok(json!({ "command": "paper-tables", "which": "cubics", "rows": rows }))
}

fn products_table(max_n: u32) -> Result<Value, CliError> {
    if !(1..=20).contains(&max_n) {
        return Err(CliError::Limit(String::from(
            "--max-n must lie in 1..=20 for the product table",
        )));
    }
    let rows: Vec<Value> = (1..=max_n)
        .map(|n| {
            let p = product_bounds(n);
            json!({
                "n": n,
                "rank_upper": p.rank_upper,
                "rank_lower": p.rank_lower,
                "border_lower": p.border_lower,
                "exact_rank": p.exact_rank,
            })
        })
        .collect();
    Ok(json!({
        "command": "paper-tables",
        "which": "products",
        "provenance": {
            "rank_upper": "product identity upper",
            "rank_lower": "product lower C(n,⌊n/2⌋)+⌈n/2⌉−1",
            "border_lower": "flattening bound @ s=⌊n/2⌋",
            "exact_rank": "pinned value R(x₁x₂x₃x₄) = 8 or matching bounds",
        },
        "rows": rows,
    }))
}

pub fn reference_tables(which: &str, max_n: Option<u32>, num: &Numeric) -> Result<Value, CliError> {
    match which {
        "det-perm" => {
            let mut v = detperm_table(max_n.unwrap_or(8), false, 0)?;
            v["command"] = json!("paper-tables");
            v["which"] = json!("det-perm");
            Ok(v)
        }
        "products" => products_table(max_n.unwrap_or(10)),
        "cubics" => cubics_table(num),
        other => Err(CliError::Parse(format!(
            "unknown table '{other}'; expected det-perm, products or cubics"
        ))),
    }
}
