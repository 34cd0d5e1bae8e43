//! Parser for scale expressions such as `1`, `-i*tau`, `i/tau`, `1/2-3i`.
//!
//! Grammar: a sum of terms; each term is a product/quotient of integers,
//! `i`, `tau` and `tau^k`. Every factor is invertible, so division by any
//! of them is allowed.

use hodge_core::{GaussianRational, LaurentPoly, Rational, Ring, TauPoly};

fn parse_factor(tok: &str) -> Result<(GaussianRational, i64), String> {
    let tok = tok.trim();
    if tok == "i" {
        return Ok((GaussianRational::i(), 0));
    }
    if tok == "tau" {
        return Ok((GaussianRational::one(), 1));
    }
    if let Some(exp) = tok.strip_prefix("tau^") {
        let k: i64 = exp.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| format!("bad exponent in '{tok}'"))?;
        return Ok((GaussianRational::one(), k));
    }
    // Allow juxtaposed forms like `3i`, `2tau`.
    if let Some(num) = tok.strip_suffix('i').filter(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit())) {
        let n: i64 = num.parse().map_err(|_| format!("bad number '{num}'"))?;
        return Ok((GaussianRational::imag(Rational::from_int(n)), 0));
    }
    if let Some(num) = tok.strip_suffix("tau").filter(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit())) {
        let n: i64 = num.parse().map_err(|_| format!("bad number '{num}'"))?;
        return Ok((GaussianRational::real(Rational::from_int(n)), 1));
    }
    let n: i64 = tok.parse().map_err(|_| format!("unrecognized factor '{tok}'"))?;
    Ok((GaussianRational::real(Rational::from_int(n)), 0))
}

fn parse_term(term: &str) -> Result<TauPoly, String> {
    let mut coeff = GaussianRational::one();
    let mut exp = 0i64;
    let mut divide = false;
    let mut start = 0;
    let bytes: Vec<char> = term.chars().collect();
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (k, c) in bytes.iter().enumerate() {
        if *c == '*' || *c == '/' {
            pieces.push((divide, bytes[start..k].iter().collect()));
            divide = *c == '/';
            start = k + 1;
        }
    }
    pieces.push((divide, bytes[start..].iter().collect()));
    for (div, tok) in pieces {
        if tok.trim().is_empty() {
            return Err(format!("empty factor in '{term}'"));
        }
        let (c, e) = parse_factor(&tok)?;
        if div {
            coeff = coeff * &c.try_inverse().ok_or_else(|| format!("division by zero in '{term}'"))?;
            exp -= e;
        } else {
            coeff = coeff * &c;
            exp += e;
        }
    }
    Ok(LaurentPoly::monomial(coeff, exp))
}

/// Parse a scale expression into a Laurent polynomial in `tau` over `Q(i)`.
pub fn parse_scale(expr: &str) -> Result<TauPoly, String> {
    let expr: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if expr.is_empty() {
        return Err("empty scale expression".into());
    }
    let mut total = TauPoly::zero();
    let mut sign = 1i64;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in expr.chars() {
        let binary = matches!(prev, Some(p) if p != '^' && p != '*' && p != '/');
        if (c == '+' || c == '-') && binary {
            let t = parse_term(&current)?;
            total += &t.scale(&Rational::from_int(sign));
            current.clear();
            sign = if c == '-' { -1 } else { 1 };
        } else if (c == '+' || c == '-') && prev.is_none() {
            sign = if c == '-' { -1 } else { 1 };
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    let t = parse_term(&current)?;
    Ok(total + &t.scale(&Rational::from_int(sign)))
}
