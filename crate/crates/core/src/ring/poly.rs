//! Dense polynomials over `Z/n`, used for `PolyQ` moduli and element names.

use super::cursor::Cursor;
use crate::error::{Error, Result};

/// Parses a sum of terms `c`, `cx`, `c*x^k`, `x^k` (with `+` or `-`
/// separators) into dense coefficients, lowest degree first, reduced mod `n`.
///
/// Parsing stops before any char in `stops`. Literal coefficients must
/// already be reduced (`< n`).
pub(crate) fn parse_poly(cur: &mut Cursor<'_>, n: u64, stops: &[char]) -> Result<Vec<u64>> {
    let mut coeffs: Vec<u64> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut negate = false;
        if cur.eat('-') {
            negate = true;
        } else if !first && !cur.eat('+') {
            break;
        }
        first = false;
        cur.skip_ws();
        let start = cur.pos();
        let mut coeff = 1u64;
        let mut have_coeff = false;
        if cur.peek_digit() {
            coeff = cur.number()?;
            if coeff >= n {
                return Err(Error::parse(
                    start,
                    format!("coefficient {coeff} out of range for Zmod({n})"),
                ));
            }
            have_coeff = true;
            cur.skip_ws();
            cur.eat('*');
        }
        cur.skip_ws();
        let mut power = 0usize;
        if cur.eat('x') {
            power = 1;
            if cur.eat('^') {
                let p = cur.number()?;
                power = usize::try_from(p)
                    .ok()
                    .filter(|&p| p <= 1 << 16)
                    .ok_or_else(|| cur.error("exponent too large"))?;
            }
        } else if !have_coeff {
            return Err(cur.error("expected a term"));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        let c = if negate { (n - coeff % n) % n } else { coeff };
        coeffs[power] = (coeffs[power] + c) % n;
        cur.skip_ws();
        if cur.at_end() || cur.peek().is_some_and(|c| stops.contains(&c)) {
            break;
        }
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        coeffs.push(0);
    }
    Ok(coeffs)
}

fn term(c: u64, power: usize) -> String {
    match (c, power) {
        (c, 0) => c.to_string(),
        (1, 1) => "x".to_string(),
        (c, 1) => format!("{c}x"),
        (1, k) => format!("x^{k}"),
        (c, k) => format!("{c}x^{k}"),
    }
}

/// Ascending-power rendering used for element names: `1+x`, `2x+x^2`.
pub(crate) fn format_ascending(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| term(c, k))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Descending-power rendering used for moduli in canonical ring specs.
pub(crate) fn format_descending(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| term(c, k))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
