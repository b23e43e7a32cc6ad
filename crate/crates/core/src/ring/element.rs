//! Element literals: decimal for `Zmod`, tuples for products, polynomials
//! for `PolyQ`, names or decimal ids for tables.

use super::cursor::Cursor;
use super::poly::parse_poly;
use super::{Arith, ArithKind};
use crate::error::{Error, Result};

pub(super) fn parse_element(arith: &Arith, literal: &str) -> Result<u32> {
    let mut cur = Cursor::new(literal);
    let id = parse_in(arith, &mut cur, &[])?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(cur.error("trailing input after element"));
    }
    Ok(id)
}

fn parse_in(arith: &Arith, cur: &mut Cursor<'_>, stops: &[char]) -> Result<u32> {
    cur.skip_ws();
    let start = cur.pos();
    match &arith.kind {
        ArithKind::Zmod(n) => {
            let v = cur.number()?;
            if v >= *n {
                return Err(Error::parse(
                    start,
                    format!("{v} out of range for Zmod({n})"),
                ));
            }
            Ok(v as u32)
        }
        ArithKind::Product(parts) => {
            cur.expect('(')?;
            let mut digits = Vec::with_capacity(parts.len());
            for (i, part) in parts.iter().enumerate() {
                if i > 0 {
                    cur.expect(',')?;
                }
                digits.push(parse_in(part, cur, &[',', ')'])?);
            }
            cur.expect(')')?;
            Ok(arith.encode(&digits))
        }
        ArithKind::Poly { n, modulus } => {
            let coeffs = parse_poly(cur, *n, stops)?;
            let degree = modulus.len() - 1;
            if coeffs.len() > degree {
                return Err(Error::parse(
                    start,
                    format!("polynomial degree must be below {degree}"),
                ));
            }
            let mut dense = coeffs;
            dense.resize(degree, 0);
            Ok(arith.poly_encode(&dense))
        }
        ArithKind::Table => {
            let mut stop_set = vec!['(', ','];
            stop_set.extend_from_slice(stops);
            let token = cur.take_until(&stop_set).trim();
            if let Some(i) = arith.names.iter().position(|s| s == token) {
                return Ok(i as u32);
            }
            match token.parse::<usize>() {
                Ok(i) if i < arith.size => Ok(i as u32),
                _ => Err(Error::parse(start, format!("unknown element '{token}'"))),
            }
        }
    }
}
