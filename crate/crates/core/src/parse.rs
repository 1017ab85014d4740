//! Text form of polynomials: `3/2*x0^2*x1 - (1/2+1*i)*x2^3 + i*x0*x1*x2`.
//!
//! Terms are joined by `+`/`-`; a term is a product of factors joined by
//! `*`. A factor is a rational `p` or `p/q`, a parenthesized Gaussian
//! rational, the imaginary unit `i`, or a variable with an optional `^k`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{default_names, Monomial, Poly};
use crate::scalar::{parse_rational, GaussianRational, Rational, Scalar};

#[derive(Clone, Debug)]
pub struct ParsedPoly {
    pub poly: Poly<GaussianRational>,
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Num(String),
    Paren(String),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let c: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < c.len() {
        let ch = c[k];
        match ch {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                out.push(Tok::Plus);
                k += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                k += 1
            }
            '*' => {
                out.push(Tok::Star);
                k += 1
            }
            '^' => {
                out.push(Tok::Caret);
                k += 1
            }
            '(' => {
                let end = c[k..]
                    .iter()
                    .position(|&x| x == ')')
                    .ok_or_else(|| Error::Parse(String::from("unclosed '('")))?;
                out.push(Tok::Paren(c[k + 1..k + end].iter().collect()));
                k += end + 1;
            }
            '0'..='9' => {
                let start = k;
                while k < c.len() && (c[k].is_ascii_digit() || c[k] == '/') {
                    k += 1;
                }
                out.push(Tok::Num(c[start..k].iter().collect()));
            }
            x if x.is_alphabetic() || x == '_' => {
                let start = k;
                while k < c.len() && (c[k].is_alphanumeric() || c[k] == '_') {
                    k += 1;
                }
                out.push(Tok::Ident(c[start..k].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Term {
    coeff: GaussianRational,
    vars: Vec<(String, u32)>,
    text: String,
}

fn parse_terms(toks: &[Tok], declared: Option<&[String]>) -> Result<Vec<Term>> {
    let is_var = |name: &str| match declared {
        Some(names) => names.iter().any(|n| n == name),
        None => name != "i",
    };
    let mut terms = Vec::new();
    let mut k = 0;
    if toks.is_empty() {
        return Err(Error::Parse(String::from("empty polynomial")));
    }
    loop {
        let mut sign = GaussianRational::one();
        let mut text = String::new();
        while k < toks.len() && matches!(toks[k], Tok::Plus | Tok::Minus) {
            if toks[k] == Tok::Minus {
                sign = -sign;
                text.push('-');
            }
            k += 1;
        }
        let mut coeff = sign;
        let mut vars = Vec::new();
        let mut expect_factor = true;
        while k < toks.len() {
            match (&toks[k], expect_factor) {
                (Tok::Num(s), true) => {
                    let q = parse_rational(s)
                        .ok_or_else(|| Error::Parse(format!("bad number '{s}'")))?;
                    coeff = coeff * GaussianRational::from_rational(&q);
                    text.push_str(s);
                }
                (Tok::Paren(s), true) => {
                    let g = GaussianRational::parse(s)
                        .ok_or_else(|| Error::Parse(format!("bad coefficient '({s})'")))?;
                    coeff = coeff * g;
                    text.push_str(&format!("({s})"));
                }
                (Tok::Ident(name), true) if !is_var(name) && name == "i" => {
                    coeff = coeff * GaussianRational::i();
                    text.push('i');
                }
                (Tok::Ident(name), true) => {
                    let mut e = 1;
                    text.push_str(name);
                    if toks.get(k + 1) == Some(&Tok::Caret) {
                        match toks.get(k + 2) {
                            Some(Tok::Num(p)) => {
                                e = p
                                    .parse::<u32>()
                                    .map_err(|_| Error::Parse(format!("bad exponent '{p}'")))?;
                                text.push_str(&format!("^{p}"));
                                k += 2;
                            }
                            _ => {
                                return Err(Error::Parse(format!(
                                    "missing exponent after '{name}^'"
                                )))
                            }
                        }
                    }
                    vars.push((name.clone(), e));
                }
                (Tok::Star, false) => text.push('*'),
                (Tok::Plus | Tok::Minus, false) => break,
                (t, _) => return Err(Error::Parse(format!("unexpected token {t:?} in '{text}'"))),
            }
            expect_factor = !expect_factor;
            k += 1;
        }
        if expect_factor {
            return Err(Error::Parse(format!("incomplete term '{text}'")));
        }
        terms.push(Term { coeff, vars, text });
        if k >= toks.len() {
            return Ok(terms);
        }
    }
}

fn default_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('x')?;
    if rest.is_empty() || (rest.len() > 1 && rest.starts_with('0')) {
        return None;
    }
    rest.parse().ok()
}

/// Parse with declared variable names, or x0…x{n−1} when `names` is `None`.
/// `nvars` fixes the variable count for default names.
pub fn parse_poly(
    text: &str,
    names: Option<&[String]>,
    nvars: Option<usize>,
) -> Result<ParsedPoly> {
    let toks = tokenize(text)?;
    let terms = parse_terms(&toks, names)?;
    let names: Vec<String> = match names {
        Some(n) => n.to_vec(),
        None => {
            let mut top = 0;
            for t in &terms {
                for (v, _) in &t.vars {
                    let idx = default_index(v)
                        .ok_or_else(|| Error::Parse(format!("unknown variable '{v}'")))?;
                    top = top.max(idx + 1);
                }
            }
            let n = nvars.unwrap_or(top);
            if top > n {
                return Err(Error::Parse(format!(
                    "variable x{} exceeds the declared count {n}",
                    top - 1
                )));
            }
            default_names(n)
        }
    };
    let n = names.len();
    let mut mons = Vec::with_capacity(terms.len());
    for t in &terms {
        let mut e = vec![0u32; n];
        for (v, p) in &t.vars {
            let idx = names
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::Parse(format!("unknown variable '{v}'")))?;
            e[idx] += p;
        }
        mons.push(Monomial(e));
    }
    let degree = mons.first().map_or(0, |m| m.degree());
    if mons.iter().any(|m| m.degree() != degree) {
        let listing: Vec<String> = terms
            .iter()
            .zip(&mons)
            .map(|(t, m)| format!("'{}' (degree {})", t.text, m.degree()))
            .collect();
        return Err(Error::Parse(format!(
            "inhomogeneous polynomial: {}",
            listing.join(", ")
        )));
    }
    let poly = Poly::from_terms(
        n,
        degree,
        mons.into_iter().zip(terms.into_iter().map(|t| t.coeff)),
    )?;
    Ok(ParsedPoly { poly, names })
}

/// Parse and require rational coefficients.
pub fn parse_rational_poly(
    text: &str,
    names: Option<&[String]>,
    nvars: Option<usize>,
) -> Result<Poly<Rational>> {
    let p = parse_poly(text, names, nvars)?;
    to_rational(&p.poly).ok_or_else(|| Error::Parse(String::from("coefficients are not rational")))
}

/// Drop zero imaginary parts; `None` if some coefficient is not real.
pub fn to_rational(p: &Poly<GaussianRational>) -> Option<Poly<Rational>> {
    if p.terms().any(|(_, c)| !num_traits::Zero::is_zero(&c.im)) {
        return None;
    }
    Some(p.map_coeffs(|c| c.re.clone()))
}

/// Preferred order for inferred variable names.
const NAME_ORDER: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

/// Variable names occurring in `text`, or `None` when they are all of the form
/// x0, x1, …. Names in x, y, z, w, u, v come first in that order, the rest
/// sorted.
pub fn infer_names(text: &str) -> Result<Option<Vec<String>>> {
    let mut found: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Tok::Ident(name) = t {
            if name != "i" && !found.contains(&name) {
                found.push(name);
            }
        }
    }
    if found.iter().all(|n| default_index(n).is_some()) {
        return Ok(None);
    }
    let rank = |n: &String| {
        NAME_ORDER
            .iter()
            .position(|x| x == n)
            .unwrap_or(NAME_ORDER.len())
    };
    found.sort_by(|a, b| rank(a).cmp(&rank(b)).then_with(|| a.cmp(b)));
    Ok(Some(found))
}

/// Variable names from a comma-separated list.
pub fn names_from_list(list: &str) -> Vec<String> {
    list.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}
