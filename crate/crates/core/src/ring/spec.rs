//! Ring-spec grammar:
//!
//! ```text
//! spec := "Zmod(" nat ")" | "Prod(" spec ("," spec)+ ")"
//!       | "PolyQ(" spec "," poly ")" | "Table(" path ")"
//! ```

use std::fmt;
use std::path::PathBuf;

use super::cursor::Cursor;
use super::poly::{format_descending, parse_poly};
use crate::error::{Error, Result};

/// Parsed ring spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(u64),
    Prod(Vec<RingSpec>),
    /// Base `Z/n` and a monic modulus (dense, lowest degree first).
    PolyQ {
        base: u64,
        modulus: Vec<u64>,
    },
    Table(PathBuf),
}

impl RingSpec {
    pub fn parse(src: &str) -> Result<RingSpec> {
        let mut cur = Cursor::new(src);
        let spec = parse_spec(&mut cur)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("trailing input after ring spec"));
        }
        Ok(spec)
    }

    /// Number of elements, or `None` for tables (known only after loading).
    pub fn declared_size(&self) -> Option<u128> {
        match self {
            RingSpec::Zmod(n) => Some(*n as u128),
            RingSpec::Prod(parts) => parts.iter().try_fold(1u128, |acc, p| {
                p.declared_size().map(|s| acc.saturating_mul(s))
            }),
            RingSpec::PolyQ { base, modulus } => {
                let degree = (modulus.len() - 1) as u32;
                Some((*base as u128).saturating_pow(degree))
            }
            RingSpec::Table(_) => None,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "Zmod({n})"),
            RingSpec::Prod(parts) => {
                f.write_str("Prod(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            RingSpec::PolyQ { base, modulus } => {
                write!(f, "PolyQ(Zmod({base}),{})", format_descending(modulus))
            }
            RingSpec::Table(path) => write!(f, "Table({})", path.display()),
        }
    }
}

fn parse_spec(cur: &mut Cursor<'_>) -> Result<RingSpec> {
    cur.skip_ws();
    let start = cur.pos();
    if cur.eat_keyword("Zmod(") {
        let n = cur.number()?;
        cur.expect(')')?;
        if n < 2 {
            return Err(Error::parse(
                start,
                format!("Zmod({n}) is degenerate: rings must satisfy 1 != 0"),
            ));
        }
        Ok(RingSpec::Zmod(n))
    } else if cur.eat_keyword("Prod(") {
        let mut parts = vec![parse_spec(cur)?];
        while cur.eat(',') {
            parts.push(parse_spec(cur)?);
        }
        cur.expect(')')?;
        if parts.len() < 2 {
            return Err(Error::parse(start, "Prod needs at least two factors"));
        }
        Ok(RingSpec::Prod(parts))
    } else if cur.eat_keyword("PolyQ(") {
        let base_pos = cur.pos();
        let base = match parse_spec(cur)? {
            RingSpec::Zmod(n) => n,
            other => {
                return Err(Error::parse(
                    base_pos,
                    format!("PolyQ base must be Zmod(n), got {other}"),
                ))
            }
        };
        cur.expect(',')?;
        cur.skip_ws();
        let poly_pos = cur.pos();
        let modulus = parse_poly(cur, base, &[')'])?;
        cur.expect(')')?;
        if modulus.len() < 2 {
            return Err(Error::parse(poly_pos, "modulus must have degree >= 1"));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::NonMonic(format_descending(&modulus)));
        }
        Ok(RingSpec::PolyQ { base, modulus })
    } else if cur.eat_keyword("Table(") {
        cur.skip_ws();
        let path = cur.take_until(&[')']).trim();
        if path.is_empty() {
            return Err(cur.error("empty table path"));
        }
        let path = PathBuf::from(path);
        cur.expect(')')?;
        Ok(RingSpec::Table(path))
    } else {
        Err(cur.error("expected Zmod(, Prod(, PolyQ( or Table("))
    }
}
